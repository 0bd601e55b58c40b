use itertools::Itertools;

use crate::exactnum::{QMatrix, Rational};
use crate::exec::{map_collect, ExecMode};

use super::arrangement::Arrangement;

/// A minimal linearly dependent subset of forms with its dependency
/// coefficients, normalized so the first coefficient is 1.
#[derive(Clone, PartialEq, Eq)]
pub struct Circuit {
    /// Strictly increasing 0-based form indices.
    pub support: Vec<usize>,
    /// One nonzero coefficient per support index; the first is 1 and
    /// `sum c_j * l_{i_j} = 0` exactly.
    pub coeffs: Vec<Rational>,
}

impl std::fmt::Debug for Circuit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ones: Vec<usize> = self.support.iter().map(|i| i + 1).collect();
        write!(f, "Circuit({:?}, {:?})", ones, self.coeffs)
    }
}

/// Enumerate all circuits, sorted lexicographically by support.
///
/// Subsets are scanned by increasing size with supersets of found circuits
/// pruned, so every dependent set that survives the filter is minimal. The
/// per-size rank checks are independent and fan out across threads.
pub fn circuits(a: &Arrangement) -> Vec<Circuit> {
    circuits_with_mode(a, ExecMode::parallel())
}

pub fn circuits_with_mode(a: &Arrangement, mode: ExecMode) -> Vec<Circuit> {
    let n = a.n();
    let max_size = (a.rank() + 1).min(n);
    let mut found: Vec<Circuit> = Vec::new();
    for size in 2..=max_size {
        let candidates: Vec<Vec<usize>> = (0..n)
            .combinations(size)
            .filter(|subset| {
                !found
                    .iter()
                    .any(|c| c.support.iter().all(|i| subset.contains(i)))
            })
            .collect();
        let new_circuits = map_collect(mode, candidates, |subset| circuit_on(a, &subset));
        found.extend(new_circuits.into_iter().flatten());
    }
    found.sort_by(|a, b| a.support.cmp(&b.support));
    found
}

/// The circuit supported exactly on `subset`, if `subset` is one.
fn circuit_on(a: &Arrangement, subset: &[usize]) -> Option<Circuit> {
    let cols: Vec<Vec<Rational>> = subset.iter().map(|&i| a.form(i).to_vec()).collect();
    let matrix = QMatrix::from_columns(a.k(), &cols);
    let kernel = matrix.kernel_basis();
    // a circuit has a one-dimensional kernel with full support
    if kernel.len() != 1 {
        return None;
    }
    let coeffs = kernel.into_iter().next().unwrap();
    if coeffs.iter().any(Rational::is_zero) {
        return None;
    }
    Some(Circuit {
        support: subset.to_vec(),
        coeffs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    #[test]
    fn triangle_has_one_circuit() {
        let a = Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let cs = circuits(&a);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].support, vec![0, 1, 2]);
        assert_eq!(cs[0].coeffs, vec![q(1, 1), q(1, 1), q(-1, 1)]);
    }

    #[test]
    fn boolean_has_no_circuits() {
        assert!(circuits(&Arrangement::boolean(4)).is_empty());
    }

    #[test]
    fn four_generic_lines_have_four_circuits() {
        let a = Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap();
        let cs = circuits(&a);
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.support.len() == 3));
        // lexicographic support order
        let supports: Vec<Vec<usize>> = cs.iter().map(|c| c.support.clone()).collect();
        assert_eq!(
            supports,
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );
        // {1,3,4}: x1 - 1/2(x1+x2) - 1/2(x1-x2) = 0
        let c = cs.iter().find(|c| c.support == vec![0, 2, 3]).unwrap();
        assert_eq!(c.coeffs, vec![q(1, 1), q(-1, 2), q(-1, 2)]);
    }

    #[test]
    fn two_triple_points_and_one_big_circuit() {
        let a = Arrangement::from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1]],
        )
        .unwrap();
        let cs = circuits(&a);
        let supports: Vec<Vec<usize>> = cs.iter().map(|c| c.support.clone()).collect();
        assert_eq!(
            supports,
            vec![vec![0, 1, 3], vec![0, 2, 4], vec![1, 2, 3, 4]]
        );
    }

    #[test]
    fn circuit_coefficients_are_exact_dependencies() {
        let a = Arrangement::from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 2, 3], &[3, 2, 1]],
        )
        .unwrap();
        for c in circuits(&a) {
            // sum of c_j * l_{i_j} vanishes coordinatewise
            for coord in 0..a.k() {
                let total: Rational = c
                    .support
                    .iter()
                    .zip(&c.coeffs)
                    .map(|(&i, cf)| cf * &a.form(i)[coord])
                    .sum();
                assert!(total.is_zero());
            }
            assert!(c.coeffs[0].is_one());
            // minimality: every maximal proper subset is independent
            for drop in 0..c.support.len() {
                let mut sub = c.support.clone();
                sub.remove(drop);
                assert_eq!(a.subrank(&sub), sub.len());
            }
        }
    }

    #[test]
    fn circuit_count_weakly_drops_under_deletion() {
        let a = Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap();
        let total = circuits(&a).len();
        for i in 0..a.n() {
            let d = a.deletion(i).unwrap();
            assert!(circuits(&d.arrangement).len() <= total);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let a = Arrangement::from_ints(
            3,
            &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1], &[1, 2, 0], &[0, 1, 2]],
        )
        .unwrap();
        let seq = circuits_with_mode(&a, ExecMode::Sequential);
        let par = circuits_with_mode(&a, ExecMode::parallel());
        assert_eq!(seq, par);
    }
}
