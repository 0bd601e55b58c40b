use std::collections::BTreeSet;

use crate::hilbert::{HilbertSeries, IntPoly};

use super::arrangement::Arrangement;

/// A flat of the intersection lattice, identified by its closed index set.
#[derive(Clone, PartialEq, Eq)]
pub struct Flat {
    /// All hyperplane indices containing the flat (sorted, 0-based).
    pub closure: Vec<usize>,
    /// Codimension of the flat = rank of the subconfiguration.
    pub rank: usize,
    /// Moebius function value of the flat in the lattice.
    pub mobius: i64,
}

impl std::fmt::Debug for Flat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ones: Vec<usize> = self.closure.iter().map(|i| i + 1).collect();
        write!(f, "Flat(r={}, mu={}, {:?})", self.rank, self.mobius, ones)
    }
}

/// All hyperplane indices whose forms lie in the span of `subset`.
fn closure(a: &Arrangement, subset: &[usize]) -> Vec<usize> {
    let base_rank = a.subrank(subset);
    let mut closed = Vec::new();
    for j in 0..a.n() {
        if subset.contains(&j) {
            closed.push(j);
            continue;
        }
        let mut extended = subset.to_vec();
        extended.push(j);
        if a.subrank(&extended) == base_rank {
            closed.push(j);
        }
    }
    closed.sort_unstable();
    closed
}

/// The full intersection lattice with Moebius values, sorted by
/// (rank, closure). The bottom flat (empty closure) has Moebius value 1;
/// every other flat satisfies `mu(F) = -sum of mu(G)` over flats `G`
/// strictly below it.
pub fn intersection_lattice(a: &Arrangement) -> Vec<Flat> {
    let rank = a.rank();
    let mut by_rank: Vec<BTreeSet<Vec<usize>>> = vec![BTreeSet::new(); rank + 1];
    by_rank[0].insert(Vec::new());
    for r in 0..rank {
        let current: Vec<Vec<usize>> = by_rank[r].iter().cloned().collect();
        for flat in current {
            for j in 0..a.n() {
                if flat.contains(&j) {
                    continue;
                }
                let mut extended = flat.clone();
                extended.push(j);
                if a.subrank(&extended) != r + 1 {
                    continue;
                }
                by_rank[r + 1].insert(closure(a, &extended));
            }
        }
    }
    let mut flats: Vec<Flat> = Vec::new();
    for (r, sets) in by_rank.iter().enumerate() {
        for closed in sets {
            // strictly-below test: proper subset of closures (flats are
            // uniquely identified by their closure)
            let mobius = -flats
                .iter()
                .filter(|g| {
                    g.closure.len() < closed.len()
                        && g.closure.iter().all(|i| closed.contains(i))
                })
                .map(|g| g.mobius)
                .sum::<i64>();
            let mobius = if r == 0 { 1 } else { mobius };
            flats.push(Flat {
                closure: closed.clone(),
                rank: r,
                mobius,
            });
        }
    }
    flats
}

/// `pi(A, t) = sum over flats of mu(F) (-t)^rank(F)`.
pub fn poincare_polynomial(a: &Arrangement) -> IntPoly {
    let mut acc = IntPoly::zero();
    for f in intersection_lattice(a) {
        let sign = if f.rank % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&IntPoly::monomial(sign * f.mobius, f.rank));
    }
    acc
}

/// The combinatorial prediction `pi(A, s/(1-s))` written over `(1-s)^k` and
/// reduced.
pub fn ot_hilbert_prediction(a: &Arrangement) -> HilbertSeries {
    let k = a.rank();
    let mut numerator = IntPoly::zero();
    for f in intersection_lattice(a) {
        // mu(F) (-s)^r (1-s)^(k-r)
        let sign = if f.rank % 2 == 0 { 1 } else { -1 };
        let term = IntPoly::monomial(sign * f.mobius, f.rank)
            .mul(&IntPoly::one_minus_s_pow(k - f.rank));
        numerator = numerator.add(&term);
    }
    HilbertSeries::reduced(numerator, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Arrangement {
        Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn triangle_lattice() {
        let flats = intersection_lattice(&triangle());
        // bottom(mu=1), three rank-1 (mu=-1), one rank-2 center (mu=2)
        assert_eq!(flats.len(), 5);
        assert_eq!(flats[0].closure, Vec::<usize>::new());
        assert_eq!(flats[0].mobius, 1);
        let rank1: Vec<&Flat> = flats.iter().filter(|f| f.rank == 1).collect();
        assert_eq!(rank1.len(), 3);
        assert!(rank1.iter().all(|f| f.mobius == -1 && f.closure.len() == 1));
        let top: Vec<&Flat> = flats.iter().filter(|f| f.rank == 2).collect();
        assert_eq!(top.len(), 1);
        assert_eq!(top[0].mobius, 2);
        assert_eq!(top[0].closure, vec![0, 1, 2]);
    }

    #[test]
    fn boolean_lattice_moebius_alternates() {
        let flats = intersection_lattice(&Arrangement::boolean(3));
        assert_eq!(flats.len(), 8); // 1 + 3 + 3 + 1
        for f in &flats {
            let expected = if f.rank % 2 == 0 { 1 } else { -1 };
            assert_eq!(f.mobius, expected, "flat {:?}", f);
        }
        let point = intersection_lattice(&Arrangement::boolean(1));
        assert_eq!(point.len(), 2);
        assert_eq!(point[0].mobius, 1);
        assert_eq!(point[1].mobius, -1);
    }

    #[test]
    fn moebius_values_sum_to_zero() {
        for a in [
            triangle(),
            Arrangement::boolean(3),
            Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap(),
            Arrangement::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap(),
        ] {
            let total: i64 = intersection_lattice(&a).iter().map(|f| f.mobius).sum();
            assert_eq!(total, 0, "{:?}", a);
        }
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(
            poincare_polynomial(&triangle()),
            IntPoly::from_coeffs(vec![1, 3, 2])
        );
        // Boolean k: (1+t)^k
        assert_eq!(
            poincare_polynomial(&Arrangement::boolean(3)),
            IntPoly::from_coeffs(vec![1, 3, 3, 1])
        );
        assert_eq!(
            poincare_polynomial(&Arrangement::boolean(1)),
            IntPoly::from_coeffs(vec![1, 1])
        );
    }

    #[test]
    fn poincare_positive_with_degree_k() {
        let near_pencil =
            Arrangement::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
        for a in [triangle(), Arrangement::boolean(4), near_pencil] {
            let p = poincare_polynomial(&a);
            assert_eq!(p.degree(), a.rank());
            assert!(p.coeffs().iter().all(|&c| c > 0), "{:?}", p);
        }
    }

    #[test]
    fn prediction_examples() {
        // triangle: (1+s)/(1-s)^2
        let hs = ot_hilbert_prediction(&triangle());
        assert_eq!(hs.numerator, IntPoly::from_coeffs(vec![1, 1]));
        assert_eq!(hs.denominator_exponent, 2);
        // Boolean k: 1/(1-s)^k
        let hb = ot_hilbert_prediction(&Arrangement::boolean(3));
        assert_eq!(hb.numerator, IntPoly::one());
        assert_eq!(hb.denominator_exponent, 3);
        let h1 = ot_hilbert_prediction(&Arrangement::boolean(1));
        assert_eq!(h1.numerator, IntPoly::one());
        assert_eq!(h1.denominator_exponent, 1);
    }

    #[test]
    fn near_pencil_lattice_has_triple_point() {
        let a =
            Arrangement::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
        let flats = intersection_lattice(&a);
        let triple = flats
            .iter()
            .find(|f| f.rank == 2 && f.closure == vec![0, 1, 2])
            .expect("triple point flat");
        assert_eq!(triple.mobius, 2);
        let pairs: Vec<&Flat> = flats
            .iter()
            .filter(|f| f.rank == 2 && f.closure.len() == 2)
            .collect();
        assert_eq!(pairs.len(), 3);
        assert!(pairs.iter().all(|f| f.mobius == 1));
        assert_eq!(
            poincare_polynomial(&a),
            IntPoly::from_coeffs(vec![1, 4, 5, 2])
        );
    }
}
