use std::collections::{BTreeSet, HashSet};

use crate::polyring::{divide, Polynomial};

/// S-polynomial of two nonzero polynomials in their ring's order.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, gm) = (f.lm().expect("nonzero"), g.lm().expect("nonzero"));
    let l = fm.lcm(gm);
    let uf = fm.quotient_of(&l).unwrap();
    let ug = gm.quotient_of(&l).unwrap();
    let cf = f.lc().unwrap().inv().unwrap();
    let cg = g.lc().unwrap().inv().unwrap();
    f.mul_term(&uf, &cf).combine(g, &-cg, &ug)
}

/// Reduced Groebner basis of the ideal generated by `gens` in their ring's
/// order. Pairs are processed by smallest lcm degree, ties by generator
/// indices; coprime leading monomials and the chain criterion skip pairs.
/// Output is monic and sorted by descending leading monomial.
pub fn buchberger(gens: &[Polynomial]) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return vec![Polynomial::one(g.ring())];
        }
        basis.push(g.monic());
    }
    if basis.is_empty() {
        return basis;
    }
    let ring = basis[0].ring().clone();

    // (lcm degree, j, i) with i < j
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let push_pairs = |basis: &Vec<Polynomial>,
                      queue: &mut BTreeSet<(u32, usize, usize)>,
                      pending: &mut HashSet<(usize, usize)>,
                      j: usize| {
        for i in 0..j {
            let d = basis[i].lm().unwrap().lcm(basis[j].lm().unwrap()).degree();
            queue.insert((d, j, i));
            pending.insert((i, j));
        }
    };
    for j in 1..basis.len() {
        push_pairs(&basis, &mut queue, &mut pending, j);
    }

    while let Some(&key) = queue.iter().next() {
        queue.remove(&key);
        let (_, j, i) = key;
        pending.remove(&(i, j));
        let (mi, mj) = (*basis[i].lm().unwrap(), *basis[j].lm().unwrap());
        if mi.coprime(&mj) {
            continue;
        }
        let l = mi.lcm(&mj);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lm().unwrap().divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let (_, r) = divide(&s, &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_constant() {
            return vec![Polynomial::one(&ring)];
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        push_pairs(&basis, &mut queue, &mut pending, n);
    }
    reduce_basis(basis)
}

/// Minimalizes and inter-reduces a Groebner basis.
pub(crate) fn reduce_basis(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut keep: Vec<Polynomial> = Vec::new();
    for (idx, g) in basis.iter().enumerate() {
        let lm = g.lm().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let hm = h.lm().unwrap();
            k != idx && hm.divides(lm) && (hm != lm || k < idx)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    let mut out: Vec<Polynomial> = Vec::with_capacity(keep.len());
    for idx in 0..keep.len() {
        let others: Vec<Polynomial> =
            keep.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, p)| p.clone()).collect();
        let (_, r) = divide(&keep[idx], &others);
        out.push(r.monic());
    }
    if let Some(first) = out.first() {
        let ring = first.ring().clone();
        out.sort_by(|a, b| ring.cmp(b.lm().unwrap(), a.lm().unwrap()));
    }
    out
}

/// Independent check that `basis` is a Groebner basis: every S-polynomial
/// reduces to zero.
pub fn s_pair_audit(basis: &[Polynomial]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !divide(&s, basis).1.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Auto-reduced: leading coefficients are 1 and no term of any element is
/// divisible by the leading monomial of another.
pub fn is_auto_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.lc().map(|c| *c == num_traits::One::one()).unwrap_or(false)
            && g.terms().iter().all(|(m, _)| {
                basis.iter().enumerate().all(|(k, h)| k == i || !h.lm().unwrap().divides(m))
            })
    })
}
