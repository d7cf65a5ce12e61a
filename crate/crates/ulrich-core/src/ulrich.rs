//! Ulrich certificates, reduction search and classification of the Ulrich
//! set for catalog rings. Dimension two is hardcoded: reductions have two
//! generators and the numeric criterion is `e0 = (mu - 1) * len`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::IdealHandle;
use crate::polyring::{parse_poly, Polynomial, Scalar};
use crate::presentations::{FamilyTag, RingPresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Ulrich,
    GoodNotUlrich,
    NotGood,
    NoReductionFound,
}

#[derive(Clone, Debug)]
pub struct UlrichCertificate {
    pub ideal: IdealHandle,
    pub reduction: Option<IdealHandle>,
    pub stable: bool,
    pub good: bool,
    /// `ℓ(A/Q)`, only when `Q` is a stable reduction.
    pub e0: Option<usize>,
    pub mu: usize,
    pub len: usize,
    pub free_test: bool,
    /// Whether `I` contains the canonical trace, when the trace is known.
    pub contains_trace: Option<bool>,
    pub verdict: Verdict,
}

/// JSON shape of a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateRecord {
    pub tag: String,
    pub ideal: Vec<String>,
    pub reduction: Option<Vec<String>>,
    pub verdict: Verdict,
    pub e0: Option<usize>,
    pub mu: usize,
    pub len: usize,
    pub stable: bool,
    pub good: bool,
    #[serde(rename = "freeTest")]
    pub free_test: bool,
    #[serde(rename = "containsTrace")]
    pub contains_trace: Option<bool>,
}

impl UlrichCertificate {
    pub fn is_ulrich(&self) -> bool {
        self.verdict == Verdict::Ulrich
    }

    pub fn record(&self, tag: &str) -> CertificateRecord {
        CertificateRecord {
            tag: tag.to_string(),
            ideal: self.ideal.render_gens(),
            reduction: self.reduction.as_ref().map(|q| q.render_gens()),
            verdict: self.verdict,
            e0: self.e0,
            mu: self.mu,
            len: self.len,
            stable: self.stable,
            good: self.good,
            free_test: self.free_test,
            contains_trace: self.contains_trace,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReductionSearchPolicy {
    pub pool: Vec<Scalar>,
    pub max_candidates: usize,
    pub seeds: Vec<Vec<String>>,
    pub use_seeds: bool,
}

impl Default for ReductionSearchPolicy {
    fn default() -> Self {
        ReductionSearchPolicy {
            pool: vec![
                Scalar::from_int(1),
                Scalar::from_int(-1),
                Scalar::from_int(2),
                Scalar::from_int(-2),
                Scalar::i(),
            ],
            max_candidates: 1500,
            seeds: Vec::new(),
            use_seeds: true,
        }
    }
}

impl ReductionSearchPolicy {
    pub fn with_seed<S: Into<String>>(mut self, gens: Vec<S>) -> Self {
        self.seeds.push(gens.into_iter().map(Into::into).collect());
        self
    }

    pub fn without_seeds(mut self) -> Self {
        self.use_seeds = false;
        self
    }

    /// Adds the known reduction `Q_i` of the family, if any.
    pub fn with_family_seed(self, tag: FamilyTag, i: u32) -> Self {
        match tag.seed_reduction(i) {
            Some(q) => self.with_seed(q.to_vec()),
            None => self,
        }
    }
}

/// `I^2 + a = QI + a`. Requires `Q ⊆ I + a` and two generators.
pub fn is_reduction_stable(r: &RingPresentation, i: &IdealHandle, q: &IdealHandle) -> Result<bool> {
    if q.gens().len() != 2 {
        return Err(Error::Precondition(format!("reduction must have 2 generators, got {}", q.gens().len())));
    }
    let ia = r.quotient.extend(i)?;
    if !ia.contains(q)? {
        return Err(Error::Precondition(format!("{q} is not inside {i}")));
    }
    let sq = r.quotient.extend(&i.power(2)?)?;
    stable_against(r, &sq, i, q)
}

fn stable_against(r: &RingPresentation, i2a: &IdealHandle, i: &IdealHandle, q: &IdealHandle) -> Result<bool> {
    let qi = r.quotient.extend(&q.product(i)?)?;
    Ok(qi.gb() == i2a.gb())
}

fn candidate_elements(i: &IdealHandle, pool: &[Scalar]) -> Vec<Polynomial> {
    let g = i.gens();
    let mut out: Vec<Polynomial> = g.to_vec();
    for a in 0..g.len() {
        for b in 0..g.len() {
            if a == b {
                continue;
            }
            for c in pool {
                out.push(g[a].add(&g[b].scale(c)).expect("same ring"));
            }
        }
    }
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            for c in b + 1..g.len() {
                out.push(g[a].add(&g[b]).and_then(|s| s.add(&g[c])).expect("same ring"));
            }
        }
    }
    out.retain(|p| !p.is_zero());
    let mut seen = Vec::new();
    out.retain(|p| {
        let key = p.monic();
        if seen.contains(&key) {
            false
        } else {
            seen.push(key);
            true
        }
    });
    out
}

/// Some two-generated `Q ⊆ I` with `I^2 = QI`: seeds first, then pairs of
/// generators, then pairs of pool combinations, in a fixed order.
pub fn find_reduction(r: &RingPresentation, i: &IdealHandle, policy: &ReductionSearchPolicy) -> Result<Option<IdealHandle>> {
    let ring = r.ring();
    let ia = r.quotient.extend(i)?;
    let i2a = r.quotient.extend(&i.power(2)?)?;
    let mut tried = 0usize;
    if policy.use_seeds {
        for seed in &policy.seeds {
            let gens = seed.iter().map(|s| parse_poly(ring, s)).collect::<Result<Vec<_>>>()?;
            let q = IdealHandle::new(ring, gens)?;
            if q.gens().len() != 2 || !ia.contains(&q)? {
                continue;
            }
            tried += 1;
            if stable_against(r, &i2a, i, &q)? {
                return Ok(Some(q));
            }
        }
    }
    let elems = candidate_elements(i, &policy.pool);
    for b in 1..elems.len() {
        for a in 0..b {
            if tried >= policy.max_candidates {
                return Ok(None);
            }
            tried += 1;
            let q = IdealHandle::new(ring, vec![elems[a].clone(), elems[b].clone()])?;
            if stable_against(r, &i2a, i, &q)? {
                return Ok(Some(q));
            }
        }
    }
    Ok(None)
}

/// `(Q + a) : (I + a) = I + a`.
pub fn good_check(r: &RingPresentation, i: &IdealHandle, q: &IdealHandle) -> Result<bool> {
    if !is_reduction_stable(r, i, q)? {
        return Err(Error::Precondition("good check needs a stable reduction".into()));
    }
    let qa = r.quotient.extend(q)?;
    let ia = r.quotient.extend(i)?;
    qa.colon(&ia)?.equal(&ia)
}

pub fn ulrich_check(r: &RingPresentation, i: &IdealHandle, policy: &ReductionSearchPolicy) -> Result<UlrichCertificate> {
    let contains_trace = match r.trace_ideal() {
        Ok(tr) => Some(r.quotient.extend(i)?.contains(&tr)?),
        Err(Error::Unsupported(_)) => None,
        Err(e) => return Err(e),
    };
    let len = r.quotient.local_length(i)?;
    let mu = r.quotient.min_gens(i)?;
    let len2 = r.quotient.local_length(&i.power(2)?)?;
    let free_test = len2 - len == mu * len;
    let Some(q) = find_reduction(r, i, policy)? else {
        return Ok(UlrichCertificate {
            ideal: i.clone(),
            reduction: None,
            stable: false,
            good: false,
            e0: None,
            mu,
            len,
            free_test,
            contains_trace,
            verdict: Verdict::NoReductionFound,
        });
    };
    let e0 = r.quotient.local_length(&q)?;
    let qa = r.quotient.extend(&q)?;
    let ia = r.quotient.extend(i)?;
    let good = qa.colon(&ia)?.equal(&ia)?;
    let numeric = mu >= 1 && e0 == (mu - 1) * len;
    if numeric != free_test {
        return Err(Error::Invariant(format!(
            "freeness test ({free_test}) disagrees with e0 = (mu-1)len ({numeric}) for {i}"
        )));
    }
    // Parameter ideals satisfy both conditions trivially and are not counted.
    let parameter = mu <= 2;
    if numeric && !parameter && !good {
        return Err(Error::Invariant(format!("{i} passes the numeric criterion but is not good")));
    }
    let verdict = if numeric && !parameter {
        Verdict::Ulrich
    } else if good {
        Verdict::GoodNotUlrich
    } else {
        Verdict::NotGood
    };
    Ok(UlrichCertificate {
        ideal: i.clone(),
        reduction: Some(q),
        stable: true,
        good,
        e0: Some(e0),
        mu,
        len,
        free_test,
        contains_trace,
        verdict,
    })
}

/// Shape `(v_1, .., v_{n-1}, v_n^a)` of a reduced basis: returns `(n, a)`
/// with `n` the index of the powered variable.
pub fn trace_shape(tr: &IdealHandle) -> Result<(usize, u32)> {
    let ring = tr.ring();
    let nv = ring.nvars();
    let gb = tr.gb();
    let mut linear = vec![false; nv];
    let mut power: Option<(usize, u32)> = None;
    for g in gb {
        let lm = g.lm().ok_or_else(|| Error::Shape("zero in basis".into()))?;
        if g.len() != 1 {
            return Err(Error::Shape(format!("trace basis element {g} is not a monomial")));
        }
        let v = lm.pure_power_var().ok_or_else(|| Error::Shape(format!("{g} is not a pure power")))?;
        let e = lm.exp(v);
        if e == 1 {
            linear[v] = true;
        } else if power.is_none() {
            power = Some((v, e));
        } else {
            return Err(Error::Shape("more than one non-linear trace generator".into()));
        }
    }
    match power {
        Some((v, e)) if (0..nv).all(|w| w == v || linear[w]) && !linear[v] => Ok((v, e)),
        None if linear.iter().all(|&b| b) => Ok((nv - 1, 1)),
        _ => Err(Error::Shape(format!("trace {tr} is not of the form (x_1, .., x_n^a)"))),
    }
}

/// `(v_1, .., v_{n-1}, v_n^i)` around the powered variable `v`.
pub fn pattern_candidate(r: &RingPresentation, v: usize, i: u32) -> Result<IdealHandle> {
    let ring = r.ring();
    let gens = (0..ring.nvars())
        .map(|w| if w == v { Polynomial::var(ring, w).pow(i) } else { Polynomial::var(ring, w) })
        .collect();
    IdealHandle::new(ring, gens)
}

/// Certificates for every candidate containing the trace. All must be
/// Ulrich; their number is `res(A)`.
pub fn classify_ulrich_set(r: &RingPresentation, policy: &ReductionSearchPolicy) -> Result<Vec<UlrichCertificate>> {
    let tr = r.trace_ideal()?;
    let (v, a) = trace_shape(&tr)?;
    (1..=a)
        .into_par_iter()
        .map(|i| {
            let pol = policy.clone().with_family_seed(r.tag, i);
            let ideal = pattern_candidate(r, v, i)?;
            ulrich_check(r, &ideal, &pol)
        })
        .collect()
}

/// The first pattern ideal past the trace, `(v_1, .., v_n^{a+1})`. Its
/// rejection rests on `containsTrace = false`, so the reduction search is
/// kept short.
pub fn reject_beyond_trace(r: &RingPresentation, policy: &ReductionSearchPolicy) -> Result<UlrichCertificate> {
    let tr = r.trace_ideal()?;
    let (v, a) = trace_shape(&tr)?;
    let mut pol = policy.clone().with_family_seed(r.tag, a + 1);
    pol.max_candidates = pol.max_candidates.min(60);
    ulrich_check(r, &pattern_candidate(r, v, a + 1)?, &pol)
}

/// The listed Ulrich ideals of a rational double point, followed by the
/// next pattern ideal which must fail (absent for `D_{2m}`, whose list
/// ends in the exceptional ideals).
pub fn rdp_expected_ideals(tag: FamilyTag) -> Result<(Vec<Vec<String>>, Vec<Vec<String>>)> {
    let xyz = |j: u32| vec!["x".to_string(), format!("y^{j}"), "z".to_string()];
    let run = |top: u32| (1..=top).map(xyz).collect::<Vec<_>>();
    let (listed, next) = match tag {
        FamilyTag::RdpA(n) => {
            let top = if n % 2 == 0 { n / 2 } else { n.div_ceil(2) };
            (run(top), vec![xyz(top + 1)])
        }
        FamilyTag::RdpD(n) => {
            let m = n / 2;
            let x2 = vec!["x^2".to_string(), "y".into(), "z".into()];
            if n % 2 == 0 {
                let mut l = run(m - 1);
                l.push(vec![format!("x + i*y^{}", m - 1), format!("y^{m}"), "z".into()]);
                l.push(vec![format!("x - i*y^{}", m - 1), format!("y^{m}"), "z".into()]);
                l.push(x2);
                (l, vec![xyz(m)])
            } else {
                let mut l = run(m);
                l.push(x2);
                (l, vec![xyz(m + 1)])
            }
        }
        FamilyTag::RdpE6 | FamilyTag::RdpE8 => (run(2), vec![xyz(3)]),
        FamilyTag::RdpE7 => (run(3), vec![xyz(4)]),
        _ => return Err(Error::Unsupported(format!("{tag} is not a rational double point"))),
    };
    Ok((listed, next))
}

/// Certificates for the listed ideals, then for the failing successors.
pub fn verify_rdp_list(
    r: &RingPresentation,
    policy: &ReductionSearchPolicy,
) -> Result<(Vec<UlrichCertificate>, Vec<UlrichCertificate>)> {
    let (listed, next) = rdp_expected_ideals(r.tag)?;
    if let FamilyTag::RdpA(n) | FamilyTag::RdpD(n) = r.tag {
        if n > 8 {
            return Err(Error::OutOfRange(format!("{} beyond the desk-scale bound 8", r.tag)));
        }
    }
    let certify = |gens: &Vec<String>| -> Result<UlrichCertificate> {
        let ideal = r.ideal_from_strings(gens)?;
        ulrich_check(r, &ideal, policy)
    };
    let a = listed.par_iter().map(certify).collect::<Result<Vec<_>>>()?;
    let b = next.par_iter().map(certify).collect::<Result<Vec<_>>>()?;
    Ok((a, b))
}

/// `e0(A) = ℓ(A/Q)` for a stable reduction `Q` of the maximal ideal.
pub fn ring_multiplicity(r: &RingPresentation, policy: &ReductionSearchPolicy) -> Result<usize> {
    let m = r.quotient.maximal();
    let pol = policy.clone().with_family_seed(r.tag, 1);
    let q = find_reduction(r, &m, &pol)?
        .ok_or_else(|| Error::SearchFailure(format!("no reduction of the maximal ideal found for {}", r.tag)))?;
    r.quotient.local_length(&q)
}

/// Whether `A/tr` has a one-dimensional socle, `ℓ((tr : m)/tr) = 1`.
pub fn gorenstein_quotient_experiment(r: &RingPresentation) -> Result<bool> {
    let tr = r.trace_ideal()?;
    let soc = tr.colon(&r.quotient.maximal())?;
    let a = r.quotient.local_length(&tr)?;
    let b = r.quotient.local_length(&soc)?;
    Ok(a - b == 1)
}
