use crate::exactnum::Rational;
use crate::poly::{PolyRing, Polynomial};

use super::arrangement::{Arrangement, ArrangementError};

/// A multiarrangement whose repeated forms carry nonzero scalar tags: the
/// member `(i, j)` is the form `b_{i,j} * l_i` of the simple support
/// arrangement, with `b_{i,1} = 1`.
///
/// Members are enumerated grouped by support index: all copies of form 1,
/// then all copies of form 2, and so on.
#[derive(Clone, PartialEq, Eq)]
pub struct StretchedArrangement {
    support: Arrangement,
    multiplicities: Vec<usize>,
    coefficients: Vec<Vec<Rational>>,
}

/// The `(m-1)`-fold products of a stretched arrangement split as a common
/// factor times tagged `(n-1)`-fold products of the support, with explicit
/// linear relations among repeated entries.
pub struct ProductsFactorization {
    /// Common gcd of the `(m-1)`-fold products.
    pub gcd: Polynomial,
    /// One entry per member `(r, s)`: scale `c` and support index `r`, standing
    /// for the tagged product `c * f_r`.
    pub tags: Vec<(usize, Rational)>,
    /// The tagged products themselves, in member order.
    pub tagged_products: Vec<Polynomial>,
    /// Relations `y_a - scale * y_b` (0-based member indices `a < b`) spanning
    /// the linear dependencies among the tagged products.
    pub relations: Vec<(usize, usize, Rational)>,
}

impl StretchedArrangement {
    pub fn new(
        support: Arrangement,
        multiplicities: Vec<usize>,
        coefficients: Vec<Vec<Rational>>,
    ) -> Result<Self, ArrangementError> {
        let n = support.n();
        if multiplicities.len() != n {
            return Err(ArrangementError::CoefficientCount {
                index: 0,
                got: multiplicities.len(),
                expected: n,
            });
        }
        if coefficients.len() != n {
            return Err(ArrangementError::CoefficientCount {
                index: 0,
                got: coefficients.len(),
                expected: n,
            });
        }
        for i in 0..n {
            if multiplicities[i] == 0 {
                return Err(ArrangementError::BadMultiplicity(i));
            }
            if coefficients[i].len() != multiplicities[i] {
                return Err(ArrangementError::CoefficientCount {
                    index: i,
                    got: coefficients[i].len(),
                    expected: multiplicities[i],
                });
            }
            if !coefficients[i][0].is_one() {
                return Err(ArrangementError::FirstCoefficientNotOne(i));
            }
            for (j, b) in coefficients[i].iter().enumerate() {
                if b.is_zero() {
                    return Err(ArrangementError::ZeroCoefficient(i, j));
                }
            }
        }
        Ok(StretchedArrangement {
            support,
            multiplicities,
            coefficients,
        })
    }

    /// A simple arrangement viewed as a trivial stretch.
    pub fn trivial(support: Arrangement) -> Self {
        let n = support.n();
        StretchedArrangement {
            support,
            multiplicities: vec![1; n],
            coefficients: vec![vec![Rational::one()]; n],
        }
    }

    pub fn support(&self) -> &Arrangement {
        &self.support
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn coefficients(&self) -> &[Vec<Rational>] {
        &self.coefficients
    }

    /// Total multiplicity m.
    pub fn total_multiplicity(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    /// Members in grouped order as `(support index, copy index, tag)`.
    pub fn members(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.coefficients
            .iter()
            .enumerate()
            .flat_map(|(r, tags)| tags.iter().enumerate().map(move |(s, b)| (r, s, b)))
    }

    /// Member index of the first copy of support form `r`.
    pub fn first_copy_index(&self, r: usize) -> usize {
        self.multiplicities[..r].iter().sum()
    }

    /// The actual linear form of each member, as a polynomial.
    pub fn member_form(&self, ring: PolyRing, r: usize, b: &Rational) -> Polynomial {
        self.support.form_polynomial(ring, r).scale(b)
    }

    /// The `(m-1)`-fold products, one per member, in member order.
    pub fn member_products(&self, ring: PolyRing) -> Vec<Polynomial> {
        let m = self.total_multiplicity();
        assert!(m >= 2, "need at least two members for (m-1)-fold products");
        let member_forms: Vec<Polynomial> = self
            .members()
            .map(|(r, _, b)| self.member_form(ring, r, b))
            .collect();
        (0..m)
            .map(|omit| {
                let mut acc = Polynomial::one(ring);
                for (t, form) in member_forms.iter().enumerate() {
                    if t != omit {
                        acc = &acc * form;
                    }
                }
                acc
            })
            .collect()
    }

    /// Split the `(m-1)`-fold products as `gcd * tagged products` and list
    /// the linear relations among the tagged entries.
    pub fn products_factorization(&self, ring: PolyRing) -> ProductsFactorization {
        let m = self.total_multiplicity();
        assert!(m >= 2, "need at least two members");
        let n = self.support.n();
        // gcd of the products is prod_r l_r^(m_r - 1)
        let mut gcd = Polynomial::one(ring);
        for r in 0..n {
            let lr = self.support.form_polynomial(ring, r);
            gcd = &gcd * &lr.pow((self.multiplicities[r] - 1) as u32);
        }
        // scalar product of all tags
        let all_tags: Rational = self
            .members()
            .fold(Rational::one(), |acc, (_, _, b)| &acc * b);
        // (n-1)-fold products of the support
        let support_products: Vec<Polynomial> = (0..n)
            .map(|omit| {
                let mut acc = Polynomial::one(ring);
                for r in 0..n {
                    if r != omit {
                        acc = &acc * &self.support.form_polynomial(ring, r);
                    }
                }
                acc
            })
            .collect();
        let mut tags = Vec::with_capacity(m);
        let mut tagged_products = Vec::with_capacity(m);
        for (r, _, b) in self.members() {
            let scale = all_tags.div_exact(b);
            tagged_products.push(support_products[r].scale(&scale));
            tags.push((r, scale));
        }
        // relations: within each group, copy s is proportional to copy 1
        let mut relations = Vec::new();
        for r in 0..n {
            let first = self.first_copy_index(r);
            for s in 1..self.multiplicities[r] {
                relations.push((first, first + s, self.coefficients[r][s].clone()));
            }
        }
        ProductsFactorization {
            gcd,
            tags,
            tagged_products,
            relations,
        }
    }
}

impl std::fmt::Debug for StretchedArrangement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Stretched({:?}, m={:?})",
            self.support, self.multiplicities
        )
    }
}
