use std::cmp::Ordering;

/// Upper bound on ring size. Catalog rings use at most five variables plus
/// one auxiliary variable for eliminations.
pub const MAX_VARS: usize = 8;

/// Exponent vector. Slots past the ring's variable count stay zero, so
/// the fixed array behaves like a vector of the ring's length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    exps: [u32; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::default();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn var(index: usize, power: u32) -> Self {
        let mut m = Monomial::default();
        m.exps[index] = power;
        m
    }

    pub fn exps(&self) -> &[u32; MAX_VARS] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.exps.iter_mut().zip(o.exps.iter()) {
            *a += b;
        }
        r
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`, when `self` divides `o`.
    pub fn quotient_of(&self, o: &Monomial) -> Option<Monomial> {
        if !self.divides(o) {
            return None;
        }
        let mut r = *o;
        for (a, b) in r.exps.iter_mut().zip(self.exps.iter()) {
            *a -= b;
        }
        Some(r)
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for (a, b) in r.exps.iter_mut().zip(o.exps.iter()) {
            *a = (*a).max(*b);
        }
        r
    }

    pub fn coprime(&self, o: &Monomial) -> bool {
        self.exps.iter().zip(o.exps.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable with positive exponent, if there is one.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// Reverse-lexicographic tie-break on `range`: the monomial with the
    /// smaller exponent in the last differing slot is larger.
    pub(crate) fn revlex_cmp(&self, o: &Monomial, lo: usize, hi: usize) -> Ordering {
        for i in (lo..hi).rev() {
            match self.exps[i].cmp(&o.exps[i]) {
                Ordering::Equal => continue,
                other => return other.reverse(),
            }
        }
        Ordering::Equal
    }

    pub(crate) fn lex_cmp(&self, o: &Monomial, lo: usize, hi: usize) -> Ordering {
        for i in lo..hi {
            match self.exps[i].cmp(&o.exps[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub(crate) fn partial_degree(&self, lo: usize, hi: usize) -> u32 {
        self.exps[lo..hi].iter().sum()
    }

    /// Prepends `k` zero slots, shifting existing exponents right.
    pub(crate) fn shifted(&self, k: usize) -> Monomial {
        let mut r = Monomial::default();
        for i in 0..MAX_VARS - k {
            r.exps[i + k] = self.exps[i];
        }
        r
    }

    /// Drops the first `k` slots, which must be zero.
    pub(crate) fn unshifted(&self, k: usize) -> Monomial {
        debug_assert!(self.exps[..k].iter().all(|&e| e == 0));
        let mut r = Monomial::default();
        for i in k..MAX_VARS {
            r.exps[i - k] = self.exps[i];
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisibility_and_lcm() {
        let a = Monomial::from_exps(&[2, 1, 0]);
        let b = Monomial::from_exps(&[1, 3, 1]);
        assert!(!a.divides(&b));
        assert_eq!(a.lcm(&b), Monomial::from_exps(&[2, 3, 1]));
        assert_eq!(Monomial::from_exps(&[1, 1, 0]).quotient_of(&b), Some(Monomial::from_exps(&[0, 2, 1])));
    }

    #[test]
    fn pure_powers() {
        assert_eq!(Monomial::var(2, 5).pure_power_var(), Some(2));
        assert_eq!(Monomial::from_exps(&[1, 1]).pure_power_var(), None);
        assert_eq!(Monomial::one().pure_power_var(), None);
    }
}
