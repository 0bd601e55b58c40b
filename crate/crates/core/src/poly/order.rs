use std::cmp::Ordering;

use super::Monomial;

/// A monomial order: a multiplicative total well-order on power products.
///
/// `Block` orders compare the exponents on a front variable set first, which
/// makes them elimination orders for that set: any monomial involving a front
/// variable exceeds any monomial free of them.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    DegRevLex,
    DegLex,
    Lex,
    Block {
        /// Sorted variable indices compared first.
        front: Vec<usize>,
        front_order: Box<MonomialOrder>,
        back_order: Box<MonomialOrder>,
    },
    Permuted {
        /// `perm[i]` is the variable read at position `i` before applying `base`.
        perm: Vec<usize>,
        base: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    /// Degrevlex/degrevlex block order eliminating `front`.
    pub fn elimination(mut front: Vec<usize>) -> Self {
        front.sort_unstable();
        front.dedup();
        MonomialOrder::Block {
            front,
            front_order: Box::new(MonomialOrder::DegRevLex),
            back_order: Box::new(MonomialOrder::DegRevLex),
        }
    }

    pub fn permuted(perm: Vec<usize>, base: MonomialOrder) -> Self {
        MonomialOrder::Permuted {
            perm,
            base: Box::new(base),
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        let idxs: Vec<usize> = (0..a.nvars()).collect();
        self.cmp_on(a.exps(), b.exps(), &idxs)
    }

    /// Compare the sub-vectors of `a`, `b` indexed by `idxs` under this order.
    fn cmp_on(&self, a: &[u32], b: &[u32], idxs: &[usize]) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => {
                match deg_on(a, idxs).cmp(&deg_on(b, idxs)) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for &i in idxs.iter().rev() {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegLex => match deg_on(a, idxs).cmp(&deg_on(b, idxs)) {
                Ordering::Equal => lex_on(a, b, idxs),
                ord => ord,
            },
            MonomialOrder::Lex => lex_on(a, b, idxs),
            MonomialOrder::Block {
                front,
                front_order,
                back_order,
            } => {
                let front_idx: Vec<usize> = idxs
                    .iter()
                    .copied()
                    .filter(|i| front.binary_search(i).is_ok())
                    .collect();
                let back_idx: Vec<usize> = idxs
                    .iter()
                    .copied()
                    .filter(|i| front.binary_search(i).is_err())
                    .collect();
                front_order
                    .cmp_on(a, b, &front_idx)
                    .then_with(|| back_order.cmp_on(a, b, &back_idx))
            }
            MonomialOrder::Permuted { perm, base } => {
                assert_eq!(perm.len(), idxs.len(), "permutation length mismatch");
                let permuted: Vec<usize> = perm.iter().map(|&p| idxs[p]).collect();
                let va: Vec<u32> = permuted.iter().map(|&i| a[i]).collect();
                let vb: Vec<u32> = permuted.iter().map(|&i| b[i]).collect();
                let ids: Vec<usize> = (0..va.len()).collect();
                base.cmp_on(&va, &vb, &ids)
            }
        }
    }

    /// Maximum of two monomials under this order.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn deg_on(exps: &[u32], idxs: &[usize]) -> u64 {
    idxs.iter().map(|&i| exps[i] as u64).sum()
}

fn lex_on(a: &[u32], b: &[u32], idxs: &[usize]) -> Ordering {
    for &i in idxs {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}
