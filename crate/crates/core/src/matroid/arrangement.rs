use thiserror::Error;

use crate::exactnum::{QMatrix, Rational};
use crate::poly::{PolyRing, Polynomial};

use super::stretched::StretchedArrangement;

/// A central arrangement of `n` hyperplanes in `k` coordinates, given by the
/// coefficient vectors of its linear forms.
///
/// Validated arrangements are simple (no two forms proportional) and
/// essential (the coefficient matrix has rank `k`). Deletions may drop the
/// rank below `k`; such sub-arrangements are still usable everywhere, with
/// `rank()` reporting the true rank.
#[derive(Clone, PartialEq, Eq)]
pub struct Arrangement {
    k: usize,
    forms: Vec<Vec<Rational>>,
    labels: Option<Vec<String>>,
    rank: usize,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("arrangement has no forms")]
    Empty,
    #[error("zero form at index {0}")]
    ZeroForm(usize),
    #[error("form at index {index} has {got} coefficients, expected {expected}")]
    WrongLength {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("forms {0} and {1} are proportional; use a stretched arrangement for repeated hyperplanes")]
    Proportional(usize, usize),
    #[error("arrangement is not essential: rank {rank} < {k} coordinates")]
    NotEssential { rank: usize, k: usize },
    #[error("size {n} is smaller than the rank {k}")]
    TooSmall { n: usize, k: usize },
    #[error("index {index} out of range for size {n}")]
    BadIndex { index: usize, n: usize },
    #[error("cannot delete below size 1")]
    DeleteBelowOne,
    #[error("{0} labels for {1} forms")]
    LabelCount(usize, usize),
    #[error("multiplicity at index {0} must be at least 1")]
    BadMultiplicity(usize),
    #[error("coefficient list at index {index} has {got} entries, expected multiplicity {expected}")]
    CoefficientCount {
        index: usize,
        got: usize,
        expected: usize,
    },
    #[error("first coefficient of form {0} must be 1")]
    FirstCoefficientNotOne(usize),
    #[error("zero coefficient tag at form {0}, copy {1}")]
    ZeroCoefficient(usize, usize),
}

/// Result of deleting one hyperplane.
pub struct Deletion {
    pub arrangement: Arrangement,
    /// True when the deletion dropped the rank, i.e. the removed form was a
    /// coloop.
    pub coloop: bool,
}

/// Result of restricting to one hyperplane: a stretched arrangement in `k-1`
/// coordinates plus the invertible change of coordinates that was applied
/// (its first row is the restricted-to form).
pub struct Contraction {
    pub stretched: StretchedArrangement,
    pub coordinate_change: QMatrix,
}

impl Arrangement {
    /// Validated constructor for essential simple arrangements.
    pub fn new(
        k: usize,
        forms: Vec<Vec<Rational>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, ArrangementError> {
        let a = Self::new_sub(k, forms, labels)?;
        if a.rank != k {
            return Err(ArrangementError::NotEssential { rank: a.rank, k });
        }
        if a.n() < k {
            return Err(ArrangementError::TooSmall { n: a.n(), k });
        }
        Ok(a)
    }

    /// Constructor that allows a non-essential configuration (used for
    /// deletions); still enforces nonzero, well-sized, pairwise
    /// non-proportional forms.
    pub fn new_sub(
        k: usize,
        forms: Vec<Vec<Rational>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, ArrangementError> {
        if forms.is_empty() {
            return Err(ArrangementError::Empty);
        }
        for (i, form) in forms.iter().enumerate() {
            if form.len() != k {
                return Err(ArrangementError::WrongLength {
                    index: i,
                    got: form.len(),
                    expected: k,
                });
            }
            if form.iter().all(Rational::is_zero) {
                return Err(ArrangementError::ZeroForm(i));
            }
        }
        for i in 0..forms.len() {
            for j in (i + 1)..forms.len() {
                if proportional(&forms[i], &forms[j]) {
                    return Err(ArrangementError::Proportional(i, j));
                }
            }
        }
        if let Some(ref l) = labels {
            if l.len() != forms.len() {
                return Err(ArrangementError::LabelCount(l.len(), forms.len()));
            }
        }
        let rank = QMatrix::from_columns(k, &forms).rank();
        Ok(Arrangement {
            k,
            forms,
            labels,
            rank,
        })
    }

    /// Convenience constructor from integer coefficient rows.
    pub fn from_ints(k: usize, forms: &[&[i64]]) -> Result<Self, ArrangementError> {
        let forms = forms
            .iter()
            .map(|row| row.iter().map(|&v| Rational::integer(v)).collect())
            .collect();
        Arrangement::new(k, forms, None)
    }

    /// The Boolean arrangement `{x1, ..., xk}`.
    pub fn boolean(k: usize) -> Self {
        let forms = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Arrangement::new(k, forms, None).expect("boolean arrangement is valid")
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.forms.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_essential(&self) -> bool {
        self.rank == self.k
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &[Rational] {
        &self.forms[i]
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// k x n matrix whose columns are the forms.
    pub fn coefficient_matrix(&self) -> QMatrix {
        QMatrix::from_columns(self.k, &self.forms)
    }

    /// Rank of the subconfiguration indexed by `idxs`.
    pub fn subrank(&self, idxs: &[usize]) -> usize {
        let cols: Vec<Vec<Rational>> = idxs.iter().map(|&i| self.forms[i].clone()).collect();
        QMatrix::from_columns(self.k, &cols).rank()
    }

    /// Every k-subset of forms is linearly independent.
    pub fn is_generic(&self) -> bool {
        use itertools::Itertools;
        if self.rank < self.k {
            return false;
        }
        (0..self.n())
            .combinations(self.k)
            .all(|subset| self.subrank(&subset) == self.k)
    }

    /// Coordinate forms up to scale and order.
    pub fn is_boolean(&self) -> bool {
        self.n() == self.k
            && self.forms.iter().all(|form| {
                form.iter().filter(|c| !c.is_zero()).count() == 1
            })
            && self.rank == self.k
    }

    /// The linear form `l_i` as a polynomial in a ring whose x-block has at
    /// least `k` variables.
    pub fn form_polynomial(&self, ring: PolyRing, i: usize) -> Polynomial {
        assert!(ring.num_x() >= self.k, "ring is missing x-variables");
        let mut coeffs = self.forms[i].clone();
        coeffs.resize(ring.num_x(), Rational::zero());
        Polynomial::linear_form(ring, &coeffs)
    }

    /// Remove hyperplane `i`, reporting whether it was a coloop.
    pub fn deletion(&self, i: usize) -> Result<Deletion, ArrangementError> {
        if i >= self.n() {
            return Err(ArrangementError::BadIndex {
                index: i,
                n: self.n(),
            });
        }
        if self.n() == 1 {
            return Err(ArrangementError::DeleteBelowOne);
        }
        let forms: Vec<Vec<Rational>> = self
            .forms
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, f)| f.clone())
            .collect();
        let labels = self.labels.as_ref().map(|l| {
            l.iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, s)| s.clone())
                .collect()
        });
        let arrangement = Arrangement::new_sub(self.k, forms, labels)?;
        let coloop = arrangement.rank < self.rank;
        Ok(Deletion { arrangement, coloop })
    }

    /// Restrict the other hyperplanes to `ker(l_i)` after an explicit change
    /// of coordinates that sends `l_i` to the first coordinate. Proportional
    /// restrictions merge into multiplicities with coefficient tags.
    pub fn contraction(&self, i: usize) -> Result<Contraction, ArrangementError> {
        if i >= self.n() {
            return Err(ArrangementError::BadIndex {
                index: i,
                n: self.n(),
            });
        }
        assert!(self.k >= 2, "contraction needs at least two coordinates");
        let change = coordinate_change_first_row(self.k, &self.forms[i]);
        let inv_t = change
            .transpose()
            .inverse()
            .expect("coordinate change is invertible");
        // restricted form of l_j: coefficients of l_j in the new coordinates,
        // with the first coordinate dropped
        let mut restricted: Vec<(usize, Vec<Rational>)> = Vec::new();
        for j in 0..self.n() {
            if j == i {
                continue;
            }
            let col = QMatrix::from_columns(self.k, &[self.forms[j].clone()]);
            let new_coeffs = inv_t.mat_mul(&col);
            let rest: Vec<Rational> = (1..self.k).map(|r| new_coeffs.at(r, 0).clone()).collect();
            assert!(
                rest.iter().any(|c| !c.is_zero()),
                "form {} restricts to zero on hyperplane {}",
                j,
                i
            );
            restricted.push((j, rest));
        }
        // group proportional restrictions in order of first occurrence
        let mut support: Vec<Vec<Rational>> = Vec::new();
        let mut coefficients: Vec<Vec<Rational>> = Vec::new();
        for (_, rest) in &restricted {
            match support.iter().position(|s| proportional(s, rest)) {
                Some(g) => {
                    let scale = proportionality_scale(&support[g], rest);
                    coefficients[g].push(scale);
                }
                None => {
                    support.push(rest.clone());
                    coefficients.push(vec![Rational::one()]);
                }
            }
        }
        let multiplicities: Vec<usize> = coefficients.iter().map(Vec::len).collect();
        let support = Arrangement::new(self.k - 1, support, None)
            .expect("contraction support is simple and essential");
        let stretched = StretchedArrangement::new(support, multiplicities, coefficients)?;
        Ok(Contraction {
            stretched,
            coordinate_change: change,
        })
    }
}

impl std::fmt::Debug for Arrangement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let ring = PolyRing::x_only(self.k);
        let names: Vec<String> = (0..self.n())
            .map(|i| self.form_polynomial(ring, i).to_string())
            .collect();
        write!(f, "Arrangement(k={}, {{{}}})", self.k, names.join(", "))
    }
}

/// Exact proportionality test via the scale at the first nonzero entry.
pub(crate) fn proportional(u: &[Rational], v: &[Rational]) -> bool {
    let Some(p) = u.iter().position(|c| !c.is_zero()) else {
        return v.iter().all(Rational::is_zero);
    };
    if v[p].is_zero() {
        return false;
    }
    let scale = v[p].div_exact(&u[p]);
    u.iter().zip(v).all(|(a, b)| &(a * &scale) == b)
}

/// The scale with `v = scale * u`; caller guarantees proportionality.
pub(crate) fn proportionality_scale(u: &[Rational], v: &[Rational]) -> Rational {
    let p = u
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero reference form");
    v[p].div_exact(&u[p])
}

/// An invertible k x k matrix whose first row is `first_row`, completed
/// greedily by standard basis vectors.
fn coordinate_change_first_row(k: usize, first_row: &[Rational]) -> QMatrix {
    let mut rows: Vec<Vec<Rational>> = vec![first_row.to_vec()];
    for unit in 0..k {
        if rows.len() == k {
            break;
        }
        let mut candidate = vec![Rational::zero(); k];
        candidate[unit] = Rational::one();
        let mut tentative = rows.clone();
        tentative.push(candidate.clone());
        if QMatrix::from_rows(&tentative).rank() == tentative.len() {
            rows.push(candidate);
        }
    }
    assert_eq!(rows.len(), k, "failed to complete coordinate change");
    QMatrix::from_rows(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Arrangement {
        Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn validation_names_each_violation() {
        assert!(matches!(
            Arrangement::from_ints(2, &[&[1, 0], &[0, 0]]),
            Err(ArrangementError::ZeroForm(1))
        ));
        assert!(matches!(
            Arrangement::from_ints(2, &[&[1, 1], &[2, 2]]),
            Err(ArrangementError::Proportional(0, 1))
        ));
        assert!(matches!(
            Arrangement::from_ints(2, &[&[1, 0]]),
            Err(ArrangementError::NotEssential { rank: 1, k: 2 })
        ));
        assert!(matches!(
            Arrangement::from_ints(2, &[&[1, 0], &[0, 2, 3]]),
            Err(ArrangementError::WrongLength { index: 1, .. })
        ));
    }

    #[test]
    fn deletion_simple_case() {
        let d = triangle().deletion(2).unwrap();
        assert_eq!(d.arrangement.n(), 2);
        assert!(!d.coloop);
        assert_eq!(d.arrangement, Arrangement::boolean(2));
    }

    #[test]
    fn deletion_detects_coloop() {
        let d = Arrangement::boolean(3).deletion(2).unwrap();
        assert_eq!(d.arrangement.rank(), 2);
        assert!(d.coloop);
        assert!(!d.arrangement.is_essential());
    }

    #[test]
    fn deletion_of_generic_form() {
        let a = Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1], &[1, -1]]).unwrap();
        let d = a.deletion(0).unwrap();
        assert_eq!(d.arrangement.n(), 3);
        assert_eq!(d.arrangement.rank(), 2);
        assert!(!d.coloop);
    }

    #[test]
    fn contraction_merges_proportional_restrictions() {
        // contract x1+x2 in {x1, x2, x1+x2}: support of size 1, multiplicity 2,
        // coefficients (1, -1)
        let c = triangle().contraction(2).unwrap();
        let s = &c.stretched;
        assert_eq!(s.support().n(), 1);
        assert_eq!(s.multiplicities(), &[2]);
        assert_eq!(
            s.coefficients()[0],
            vec![Rational::one(), -Rational::one()]
        );
        // recorded coordinate change really sends l_3 to the first coordinate
        assert_eq!(
            c.coordinate_change.at(0, 0),
            &Rational::one()
        );
        assert_eq!(c.coordinate_change.at(0, 1), &Rational::one());
        assert!(c.coordinate_change.inverse().is_some());
    }

    #[test]
    fn contraction_of_boolean_is_simple() {
        let c = Arrangement::boolean(3).contraction(2).unwrap();
        assert_eq!(c.stretched.support().n(), 2);
        assert_eq!(c.stretched.multiplicities(), &[1, 1]);
        assert_eq!(c.stretched.support(), &Arrangement::boolean(2));
    }

    #[test]
    fn contraction_of_full_circuit() {
        // contract x1 in {x1, x2, x3, x1+x2+x3}: support {x2, x3, x2+x3}
        let a =
            Arrangement::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let c = a.contraction(0).unwrap();
        assert_eq!(c.stretched.support().n(), 3);
        assert_eq!(c.stretched.multiplicities(), &[1, 1, 1]);
        assert_eq!(
            c.stretched.support(),
            &Arrangement::from_ints(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()
        );
    }

    #[test]
    fn genericity_detection() {
        assert!(triangle().is_generic());
        assert!(Arrangement::boolean(3).is_generic());
        let near_pencil =
            Arrangement::from_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[0, 0, 1]]).unwrap();
        assert!(!near_pencil.is_generic());
        assert!(Arrangement::boolean(4).is_boolean());
        assert!(!triangle().is_boolean());
    }
}
