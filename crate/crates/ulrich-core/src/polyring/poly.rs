use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::monomial::{Monomial, MAX_VARS};
use super::order::MonomialOrder;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Variable names plus the active monomial order. Variables are listed from
/// largest to smallest.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Ring {
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> RingRef {
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        Arc::new(Ring { vars: vars.iter().map(|s| s.as_ref().to_string()).collect(), order })
    }

    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> RingRef {
        Ring::new(vars, MonomialOrder::Grevlex)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b, self.vars.len())
    }

    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { vars: self.vars.clone(), order })
    }

    /// Ring with one extra variable in front of the others, ordered so that
    /// it is eliminated first.
    pub fn with_elimination_var(&self, name: &str) -> RingRef {
        let mut vars = vec![name.to_string()];
        vars.extend(self.vars.iter().cloned());
        Ring::new(&vars, MonomialOrder::BlockElim(1))
    }
}

pub fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Sparse polynomial; terms strictly descending in the ring's order, no
/// zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Scalar)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &RingRef, c: Scalar) -> Self {
        Polynomial::term(ring, Monomial::one(), c)
    }

    pub fn one(ring: &RingRef) -> Self {
        Polynomial::constant(ring, Scalar::one())
    }

    pub fn term(ring: &RingRef, m: Monomial, c: Scalar) -> Self {
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &RingRef, m: Monomial) -> Self {
        Polynomial::term(ring, m, Scalar::one())
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        assert!(index < ring.nvars());
        Polynomial::monomial(ring, Monomial::var(index, 1))
    }

    /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &RingRef, mut raw: Vec<(Monomial, Scalar)>) -> Self {
        raw.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, Scalar)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = &*lc + &c,
                _ => terms.push((m, c)),
            }
            if let Some((_, lc)) = terms.last() {
                if lc.is_zero() {
                    terms.pop();
                }
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Smallest total degree among the terms.
    pub fn order_at_origin(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// Leading monomial in the ring's own order.
    pub fn lm(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn lc(&self) -> Option<&Scalar> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Order-maximal term under `ord`, which need not be the ring's order.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(Monomial, Scalar)> {
        let n = self.ring.nvars();
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0, n))
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.combine(other, &Scalar::one(), &Monomial::one()))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.combine(other, &-Scalar::one(), &Monomial::one()))
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.terms.len() < other.terms.len() {
            return other.mul_unchecked(self);
        }
        let mut acc = Polynomial::zero(&self.ring);
        for (m, c) in &other.terms {
            acc = acc.combine(self, c, m);
        }
        acc
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(a, b)| (a.mul(m), b * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `self + c * m * other`, merging two sorted term lists.
    pub(crate) fn combine(&self, other: &Polynomial, c: &Scalar, m: &Monomial) -> Polynomial {
        let ring = &self.ring;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() {
                out.extend_from_slice(&a[i..]);
                break;
            }
            let bm = b[j].0.mul(m);
            if i == a.len() {
                out.push((bm, &b[j].1 * c));
                j += 1;
                continue;
            }
            match ring.cmp(&a[i].0, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm, &b[j].1 * c));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 + &(&b[j].1 * c);
                    if !s.is_zero() {
                        out.push((bm, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.lc() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Same polynomial viewed in `ring`, which must have the same variables.
    pub fn to_ring(&self, ring: &RingRef) -> Polynomial {
        assert_eq!(self.ring.vars(), ring.vars(), "variable lists differ");
        if same_ring(&self.ring, ring) {
            return Polynomial { ring: ring.clone(), terms: self.terms.clone() };
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Embeds into `ring`, whose variables are `k` new ones followed by ours.
    pub(crate) fn lift(&self, ring: &RingRef, k: usize) -> Polynomial {
        Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (m.shifted(k), c.clone())).collect())
    }

    /// Inverse of `lift`; `None` if a dropped variable occurs.
    pub(crate) fn unlift(&self, ring: &RingRef, k: usize) -> Option<Polynomial> {
        if self.terms.iter().any(|(m, _)| m.exps()[..k].iter().any(|&e| e > 0)) {
            return None;
        }
        Some(Polynomial::from_terms(ring, self.terms.iter().map(|(m, c)| (m.unshifted(k), c.clone())).collect()))
    }

    /// Exact division by a nonzero polynomial; `None` if it does not divide.
    pub fn exact_div(&self, g: &Polynomial) -> Option<Polynomial> {
        let (q, r) = divide(self, std::slice::from_ref(g));
        if r.is_zero() {
            q.into_iter().next()
        } else {
            None
        }
    }
}

/// Multivariate division in the ring's own order. Returns quotients and
/// remainder with `p = sum q_i d_i + r`, no term of `r` divisible by any
/// divisor's leading monomial. Zero divisors get zero quotients.
pub fn divide(p: &Polynomial, divisors: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ring = p.ring.clone();
    let mut quotients: Vec<Vec<(Monomial, Scalar)>> = vec![Vec::new(); divisors.len()];
    let inv_lcs: Vec<Option<Scalar>> = divisors.iter().map(|d| d.lc().and_then(|c| c.inv())).collect();
    let mut rem = Vec::new();
    let mut work = p.clone();
    while let Some((m, c)) = work.terms.first().cloned() {
        let hit = divisors
            .iter()
            .enumerate()
            .find_map(|(i, d)| d.lm().and_then(|lm| lm.quotient_of(&m)).map(|u| (i, u)));
        match hit {
            Some((i, u)) => {
                let coef = &c * inv_lcs[i].as_ref().unwrap();
                work = work.combine(&divisors[i], &-&coef, &u);
                quotients[i].push((u, coef));
            }
            None => {
                rem.push((m, c));
                work.terms.remove(0);
            }
        }
    }
    let qs = quotients.into_iter().map(|t| Polynomial::from_terms(&ring, t)).collect();
    (qs, Polynomial { ring, terms: rem })
}

/// Remainder of `p` on division by `divisors` under `ord`. The result is
/// expressed in `p`'s ring.
pub fn reduce(p: &Polynomial, divisors: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    reduce_with_quotients(p, divisors, ord).1
}

/// As `reduce`, also returning the quotients (in `p`'s ring).
pub fn reduce_with_quotients(
    p: &Polynomial,
    divisors: &[Polynomial],
    ord: MonomialOrder,
) -> (Vec<Polynomial>, Polynomial) {
    let home = p.ring.clone();
    if home.order() == ord {
        let ds: Vec<Polynomial> = divisors.iter().map(|d| d.to_ring(&home)).collect();
        return divide(p, &ds);
    }
    let work_ring = home.with_order(ord);
    let ds: Vec<Polynomial> = divisors.iter().map(|d| d.to_ring(&work_ring)).collect();
    let (qs, r) = divide(&p.to_ring(&work_ring), &ds);
    (qs.iter().map(|q| q.to_ring(&home)).collect(), r.to_ring(&home))
}

impl fmt::Display for Polynomial {
    /// Terms joined by ` + ` / ` − `, factors by `*`, powers as `t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_display();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "−")?;
                }
            } else {
                write!(f, "{}", if neg { " − " } else { " + " })?;
            }
            let mono = render_monomial(&self.ring, m);
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn render_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, v) in ring.vars().iter().enumerate() {
        match m.exp(i) {
            0 => {}
            1 => parts.push(v.clone()),
            e => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}
