//! Lengths of local rings at the origin.
//!
//! Everything is computed in the polynomial ring. For the ideals handled
//! here (m-primary in the local ring, possibly with extra components away
//! from the origin) the colength at the origin equals the stable value of
//! `dim S/(J + m^N)`; the first `N` where two consecutive values agree is
//! already stable by Nakayama. We read the whole sequence off one finite
//! algebra `B = S/J` (or `S/(J + m^N)` when `S/J` is infinite) as
//! `dim B - dim m^k B`, iterating `m^{k+1} B = sum_v v * m^k B`.

use std::collections::HashMap;

use super::handle::{coordinates, IdealHandle, QuotientDim};
use super::linalg::{Echelon, SparseMap};
use crate::error::{Error, Result};
use crate::polyring::{divide, Monomial, Polynomial, RingRef};

pub const DEFAULT_BUDGET: u32 = 64;

/// `A = S/a` with `a ⊆ m^2`, so the embedding dimension is the number of
/// variables.
#[derive(Clone, Debug)]
pub struct PresentedQuotient {
    ring: RingRef,
    defining: IdealHandle,
    budget: u32,
}

impl PresentedQuotient {
    pub fn new(defining: IdealHandle) -> Result<Self> {
        for g in defining.gens() {
            if g.order_at_origin().unwrap_or(u32::MAX) < 2 {
                return Err(Error::Precondition(format!("defining ideal not inside m^2: {g}")));
            }
        }
        Ok(PresentedQuotient { ring: defining.ring().clone(), defining, budget: DEFAULT_BUDGET })
    }

    pub fn with_budget(mut self, budget: u32) -> Self {
        self.budget = budget;
        self
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn defining(&self) -> &IdealHandle {
        &self.defining
    }

    pub fn maximal(&self) -> IdealHandle {
        IdealHandle::maximal(&self.ring)
    }

    /// `I + a`.
    pub fn extend(&self, i: &IdealHandle) -> Result<IdealHandle> {
        i.sum(&self.defining)
    }

    /// `ℓ(A/I)`.
    pub fn local_length(&self, i: &IdealHandle) -> Result<usize> {
        local_colength(&self.extend(i)?, self.budget)
    }

    /// `μ(I) = ℓ(A/mI) − ℓ(A/I)`.
    pub fn min_gens(&self, i: &IdealHandle) -> Result<usize> {
        let mi = self.maximal().product(i)?;
        let big = self.local_length(&mi)?;
        let small = self.local_length(i)?;
        Ok(big - small)
    }

    /// Ideal equality in the local ring at the origin: `I ⊆ J` globally and
    /// equal colengths. Both must be m-primary there.
    pub fn locally_equal_nested(&self, smaller: &IdealHandle, larger: &IdealHandle) -> Result<bool> {
        let s = self.extend(smaller)?;
        let l = self.extend(larger)?;
        if !l.contains(&s)? {
            return Ok(false);
        }
        Ok(local_colength(&s, self.budget)? == local_colength(&l, self.budget)?)
    }
}

/// Colength of `j` at the origin.
pub fn local_colength(j: &IdealHandle, budget: u32) -> Result<usize> {
    if let QuotientDim::Finite(_) = j.quotient_dim() {
        let dims = truncation_dims(j, budget as usize + 1);
        return first_repeat(&dims).filter(|&k| k < budget as usize).map(|k| dims[k]).ok_or(Error::BudgetExhausted(budget));
    }
    let mut n = 8u32.min(budget);
    loop {
        let jn = j.sum(&IdealHandle::maximal_power(j.ring(), n))?;
        let dims = truncation_dims(&jn, n as usize);
        if let Some(k) = first_repeat(&dims) {
            return Ok(dims[k]);
        }
        if n >= budget {
            return Err(Error::BudgetExhausted(budget));
        }
        n = (n * 2).min(budget);
    }
}

fn first_repeat(dims: &[usize]) -> Option<usize> {
    (0..dims.len().saturating_sub(1)).find(|&k| dims[k] == dims[k + 1])
}

/// `dim S/(J + m^k)` for `k = 0..=max_k`, for `J` with finite `S/J`.
/// Stops early once the sequence repeats.
fn truncation_dims(j: &IdealHandle, max_k: usize) -> Vec<usize> {
    let basis = j.standard_monomials().expect("finite quotient");
    let d = basis.len();
    let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let ring = j.ring().clone();
    let gb = j.gb();
    let maps: Vec<SparseMap> = (0..ring.nvars())
        .map(|v| {
            let cols = basis
                .iter()
                .map(|m| {
                    let p = Polynomial::monomial(&ring, m.mul(&Monomial::var(v, 1)));
                    coordinates(&divide(&p, gb).1, &index)
                })
                .collect();
            SparseMap { cols }
        })
        .collect();
    let mut dims = vec![0usize];
    let mut space = Echelon::full(d);
    for _ in 0..max_k {
        let mut next = Echelon::new(d);
        for w in space.basis() {
            for m in &maps {
                next.insert(m.apply(w));
            }
        }
        dims.push(d - next.rank());
        let done = next.rank() == space.rank();
        space = next;
        if done {
            break;
        }
    }
    dims
}

/// Literal form of the definition: `quotient_dim(J + m^N)` for
/// `N = 1, 2, ...` until two consecutive values agree. Slow; kept as an
/// oracle for tests.
pub fn local_colength_by_truncation(j: &IdealHandle, budget: u32) -> Result<usize> {
    let mut prev: Option<usize> = None;
    for n in 1..=budget {
        let jn = j.sum(&IdealHandle::maximal_power(j.ring(), n))?;
        let QuotientDim::Finite(d) = jn.quotient_dim() else {
            return Err(Error::Invariant("truncation is not zero-dimensional".into()));
        };
        if prev == Some(d) {
            return Ok(d);
        }
        prev = Some(d);
    }
    Err(Error::BudgetExhausted(budget))
}
