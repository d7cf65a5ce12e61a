use num_traits::{One, Zero};

use crate::polyring::Scalar;

/// Subspace of `Scalar^dim` kept as rows in reduced echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn full(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                let mut v = vec![Scalar::zero(); dim];
                v[i] = Scalar::one();
                (i, v)
            })
            .collect();
        Echelon { dim, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &Vec<Scalar>> {
        self.rows.iter().map(|(_, v)| v)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (a, b) in v.iter_mut().zip(row.iter()) {
                    if !b.is_zero() {
                        *a = &*a - &(&c * b);
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().unwrap();
        for a in v.iter_mut() {
            if !a.is_zero() {
                *a = &*a * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_zero() {
                let c = row[p].clone();
                for (a, b) in row.iter_mut().zip(v.iter()) {
                    if !b.is_zero() {
                        *a = &*a - &(&c * b);
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut probe = self.clone();
        !probe.insert(v.to_vec())
    }
}

/// Sparse column-stored linear map on `Scalar^dim`.
#[derive(Clone, Debug)]
pub struct SparseMap {
    pub cols: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMap {
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); v.len()];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, a) in &self.cols[j] {
                out[*i] = &out[*i] + &(c * a);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let s = |v: &[i64]| v.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>();
        let mut e = Echelon::new(3);
        assert!(e.insert(s(&[1, 2, 3])));
        assert!(e.insert(s(&[2, 4, 7])));
        assert!(!e.insert(s(&[3, 6, 10])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&s(&[0, 0, 1])));
        assert!(!e.contains(&s(&[0, 1, 0])));
    }
}
