use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::One;

use super::gb::buchberger;
use crate::error::{Error, Result};
use crate::polyring::{divide, same_ring, Monomial, Polynomial, RingRef, Scalar};

/// Ideal given by generators, with its reduced Groebner basis computed at
/// most once on first use.
#[derive(Clone)]
pub struct IdealHandle {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

/// Vector-space dimension of `S/I`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl IdealHandle {
    pub fn new(ring: &RingRef, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(IdealHandle { ring: ring.clone(), gens, gb: OnceLock::new() })
    }

    pub fn zero(ring: &RingRef) -> Self {
        IdealHandle { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &RingRef) -> Self {
        IdealHandle { ring: ring.clone(), gens: vec![Polynomial::one(ring)], gb: OnceLock::new() }
    }

    /// The homogeneous maximal ideal generated by all variables.
    pub fn maximal(ring: &RingRef) -> Self {
        let gens = (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect();
        IdealHandle { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    /// `m^n`, generated by all monomials of degree `n`.
    pub fn maximal_power(ring: &RingRef, n: u32) -> Self {
        let gens = monomials_of_degree(ring.nvars(), n).into_iter().map(|m| Polynomial::monomial(ring, m)).collect();
        IdealHandle { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn gb(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| buchberger(&self.gens))
    }

    pub fn has_cached_gb(&self) -> bool {
        self.gb.get().is_some()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().first().map(|g| g.is_constant()).unwrap_or(false)
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gb().is_empty()
    }

    fn check(&self, other: &IdealHandle) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        Ok(divide(p, self.gb()).1)
    }

    pub fn member(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &IdealHandle) -> Result<bool> {
        self.check(other)?;
        for g in other.gens() {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of reduced Groebner bases.
    pub fn equal(&self, other: &IdealHandle) -> Result<bool> {
        self.check(other)?;
        Ok(self.gb() == other.gb())
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealHandle::new(&self.ring, gens)
    }

    pub fn product(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.mul_unchecked(g));
            }
        }
        IdealHandle::new(&self.ring, gens)
    }

    pub fn power(&self, n: u32) -> Result<IdealHandle> {
        if n == 0 {
            return Err(Error::Precondition("power needs n >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `self ∩ other` via `w*I + (1-w)*J` and elimination of `w`.
    pub fn intersect(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        let ext = self.ring.with_elimination_var("_w");
        let w = Polynomial::var(&ext, 0);
        let one_minus_w = Polynomial::one(&ext).sub(&w)?;
        let mut gens = Vec::new();
        for f in self.gb() {
            gens.push(w.mul_unchecked(&f.lift(&ext, 1)));
        }
        for g in other.gb() {
            gens.push(one_minus_w.mul_unchecked(&g.lift(&ext, 1)));
        }
        let basis = buchberger(&gens);
        let kept = basis.iter().filter_map(|p| p.unlift(&self.ring, 1)).collect();
        IdealHandle::new(&self.ring, kept)
    }

    /// `self : other = {p : p*other ⊆ self}`, intersecting `self : (g)` over
    /// the generators of `other`.
    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check(other)?;
        let mut acc: Option<IdealHandle> = None;
        for g in other.gens() {
            let part = self.colon_element(g)?;
            acc = Some(match acc {
                None => part,
                Some(a) => a.intersect(&part)?,
            });
        }
        Ok(acc.unwrap_or_else(|| IdealHandle::unit(&self.ring)))
    }

    fn colon_element(&self, g: &Polynomial) -> Result<IdealHandle> {
        let principal = IdealHandle::new(&self.ring, vec![g.clone()])?;
        let meet = self.intersect(&principal)?;
        let mut gens = Vec::new();
        for h in meet.gb() {
            gens.push(h.exact_div(g).ok_or_else(|| Error::Invariant("intersection with (g) not divisible by g".into()))?);
        }
        IdealHandle::new(&self.ring, gens)
    }

    /// Monomials outside the leading-term ideal, when there are finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let gb = self.gb();
        let n = self.ring.nvars();
        let mut has_pure = vec![false; n];
        for g in gb {
            let lm = g.lm().unwrap();
            if lm.is_one() {
                return Some(Vec::new());
            }
            if let Some(v) = lm.pure_power_var() {
                has_pure[v] = true;
            }
        }
        if !has_pure.iter().all(|&b| b) {
            return None;
        }
        let lms: Vec<Monomial> = gb.iter().map(|g| *g.lm().unwrap()).collect();
        let standard = |m: &Monomial| !lms.iter().any(|l| l.divides(m));
        let mut seen: HashSet<Monomial> = HashSet::new();
        let mut out = Vec::new();
        let mut queue = VecDeque::from([Monomial::one()]);
        seen.insert(Monomial::one());
        while let Some(m) = queue.pop_front() {
            out.push(m);
            for v in 0..n {
                let next = m.mul(&Monomial::var(v, 1));
                if standard(&next) && seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        let ring = self.ring.clone();
        out.sort_by(|a, b| ring.cmp(b, a));
        Some(out)
    }

    pub fn quotient_dim(&self) -> QuotientDim {
        match self.standard_monomials() {
            Some(v) => QuotientDim::Finite(v.len()),
            None => QuotientDim::Infinite,
        }
    }

    pub fn render_gens(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render_gens().join(", "))
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render_gens().join(", "))
    }
}

pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(nvars, 0, d, &mut vec![0; nvars], &mut out);
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<Polynomial>], ring: &RingRef) -> Polynomial {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Polynomial::zero(ring);
    for j in 0..n {
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = m[0][j].mul_unchecked(&determinant(&minor, ring));
        let sign = if j % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        acc = acc.combine(&term, &sign, &Monomial::one());
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ideal of all `k x k` minors of `matrix`, rows and columns taken in
/// lexicographic order of their index sets.
pub fn minors(ring: &RingRef, matrix: &[Vec<Polynomial>], k: usize) -> Result<IdealHandle> {
    let rows = matrix.len();
    let cols = matrix.first().map(|r| r.len()).unwrap_or(0);
    if matrix.iter().any(|r| r.len() != cols) {
        return Err(Error::Precondition("ragged matrix".into()));
    }
    if k == 0 || k > rows.min(cols) {
        return Err(Error::OutOfRange(format!("minor size {k} for a {rows}x{cols} matrix")));
    }
    let mut gens = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<Polynomial>> =
                rs.iter().map(|&r| cs.iter().map(|&c| matrix[r][c].clone()).collect()).collect();
            gens.push(determinant(&sub, ring));
        }
    }
    IdealHandle::new(ring, gens)
}

/// Coordinates of `p` (already reduced) in the standard-monomial basis.
pub(crate) fn coordinates(p: &Polynomial, index: &HashMap<Monomial, usize>) -> Vec<(usize, Scalar)> {
    p.terms().iter().map(|(m, c)| (index[m], c.clone())).collect()
}
