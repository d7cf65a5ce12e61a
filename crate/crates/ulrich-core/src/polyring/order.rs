use std::cmp::Ordering;

use super::monomial::Monomial;

/// Monomial orders on `k[v_0, ..., v_{n-1}]` with `v_0 > v_1 > ...`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
    /// The first `split` variables are compared first (grevlex within the
    /// block); ties fall through to grevlex on the remaining variables.
    /// Any basis under this order eliminates the first block.
    BlockElim(usize),
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => grevlex(a, b, 0, nvars),
            MonomialOrder::Lex => a.lex_cmp(b, 0, nvars),
            MonomialOrder::BlockElim(k) => {
                let k = k.min(nvars);
                grevlex(a, b, 0, k).then_with(|| grevlex(a, b, k, nvars))
            }
        }
    }
}

fn grevlex(a: &Monomial, b: &Monomial, lo: usize, hi: usize) -> Ordering {
    a.partial_degree(lo, hi)
        .cmp(&b.partial_degree(lo, hi))
        .then_with(|| a.revlex_cmp(b, lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        // x t^3 vs t^4 with variables x, y, z, t
        let xt3 = Monomial::from_exps(&[1, 0, 0, 3]);
        let t4 = Monomial::from_exps(&[0, 0, 0, 4]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&xt3, &t4, 4), Ordering::Greater);
        // x^2 z vs x y^2: grevlex says x y^2 < x^2 z? last var z: 1 vs 0, so x^2 z smaller
        let x2z = Monomial::from_exps(&[2, 0, 1]);
        let xy2 = Monomial::from_exps(&[1, 2, 0]);
        assert_eq!(MonomialOrder::Grevlex.cmp(&x2z, &xy2, 3), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.cmp(&x2z, &xy2, 3), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let w = Monomial::from_exps(&[1, 0, 0]);
        let big = Monomial::from_exps(&[0, 9, 9]);
        assert_eq!(MonomialOrder::BlockElim(1).cmp(&w, &big, 3), Ordering::Greater);
        assert_eq!(MonomialOrder::Grevlex.cmp(&w, &big, 3), Ordering::Less);
    }
}
