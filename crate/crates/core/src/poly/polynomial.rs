use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::exactnum::Rational;

use super::{Monomial, MonomialOrder, PolyRing};

/// A multivariate polynomial over the rationals.
///
/// Terms are stored strictly decreasing under the canonical degrevlex order
/// with no zero coefficients, so equality and hashing are structural. The
/// zero polynomial has an empty term list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Rational)>,
}

impl Polynomial {
    pub fn zero(ring: PolyRing) -> Self {
        Polynomial { ring, terms: Vec::new() }
    }

    pub fn one(ring: PolyRing) -> Self {
        Polynomial::constant(ring, Rational::one())
    }

    pub fn constant(ring: PolyRing, c: Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring,
            terms: vec![(Monomial::one(ring.num_vars()), c)],
        }
    }

    pub fn variable(ring: PolyRing, idx: usize) -> Self {
        Polynomial {
            ring,
            terms: vec![(Monomial::variable(ring.num_vars(), idx), Rational::one())],
        }
    }

    pub fn term(ring: PolyRing, mono: Monomial, coeff: Rational) -> Self {
        assert_eq!(mono.nvars(), ring.num_vars(), "monomial/ring mismatch");
        Polynomial::from_terms(ring, [(mono, coeff)])
    }

    /// Build from arbitrary terms: merges duplicates, drops zeros, sorts.
    pub fn from_terms(
        ring: PolyRing,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.num_vars(), "monomial/ring mismatch");
            if c.is_zero() {
                continue;
            }
            match map.entry(m) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() += &c;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
            }
        }
        Polynomial {
            ring,
            terms: map.into_iter().rev().collect(),
        }
    }

    /// The linear form with the given x-coefficients.
    pub fn linear_form(ring: PolyRing, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), ring.num_x(), "coefficient count mismatch");
        Polynomial::from_terms(
            ring,
            coeffs.iter().enumerate().map(|(i, c)| {
                (
                    Monomial::variable(ring.num_vars(), ring.x_var(i)),
                    c.clone(),
                )
            }),
        )
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// `(deg_x, deg_y)` if the polynomial is bihomogeneous, else `None`.
    /// The zero polynomial counts as bihomogeneous of bidegree `(0, 0)`.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut it = self.terms.iter().map(|(m, _)| {
            let dx = m.degree_on(self.ring.x_vars());
            (dx, m.degree() - dx)
        });
        let Some(first) = it.next() else {
            return Some((0, 0));
        };
        it.all(|d| d == first).then_some(first)
    }

    pub fn involves_var(&self, idx: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.involves(idx))
    }

    /// Leading term under the given order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    /// Divide every coefficient so the leading coefficient under `order` is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, lc)) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Move this polynomial into another ring along an explicit variable map;
    /// `var_map[i] = None` asserts the variable does not occur.
    pub fn remap(&self, new_ring: PolyRing, var_map: &[Option<usize>]) -> Polynomial {
        assert_eq!(var_map.len(), self.ring.num_vars());
        Polynomial {
            ring: new_ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.remap(new_ring.num_vars(), var_map), c.clone()))
                .collect(),
        }
        // remap preserves degrevlex order only for monotone maps; re-sort to
        // be safe
        .resorted()
    }

    fn resorted(self) -> Polynomial {
        Polynomial::from_terms(self.ring, self.terms)
    }

    /// Substitute polynomials for the y-variables; x-variables pass through.
    ///
    /// All images must live in one ring whose x-block is at least as wide as
    /// this polynomial's.
    pub fn substitute_y(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.num_y(), "one image per y-variable");
        let out_ring = images
            .first()
            .map(|p| p.ring())
            .unwrap_or(PolyRing::x_only(self.ring.num_x()));
        assert!(
            images.iter().all(|p| p.ring() == out_ring),
            "images live in different rings"
        );
        assert!(
            out_ring.num_x() >= self.ring.num_x(),
            "image ring is missing x-variables"
        );
        let mut acc = Polynomial::zero(out_ring);
        for (m, c) in &self.terms {
            let mut xpart = vec![0u32; out_ring.num_vars()];
            for i in self.ring.x_vars() {
                xpart[i] = m.exp(i);
            }
            let mut piece = Polynomial::term(out_ring, Monomial::from_exps(xpart), c.clone());
            for j in 0..self.ring.num_y() {
                let e = m.exp(self.ring.y_var(j));
                if e > 0 {
                    piece = &piece * &images[j].pow(e);
                }
            }
            acc = &acc + &piece;
        }
        acc
    }

    /// Exact division by a single polynomial under degrevlex; `None` if `self`
    /// is not a multiple of `divisor`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        assert_eq!(self.ring, divisor.ring, "ring mismatch");
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let order = MonomialOrder::DegRevLex;
        let (dm, dc) = divisor.leading_term(&order).expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quo: Vec<(Monomial, Rational)> = Vec::new();
        while !rem.is_zero() {
            // canonical storage is degrevlex-descending, so the first term leads
            let (lm, lc) = (&rem.terms[0].0, &rem.terms[0].1);
            if !dm.divides(lm) {
                return None;
            }
            let qm = lm.div_exact(dm);
            let qc = lc.div_exact(dc);
            let sub = divisor.mul_monomial(&qm).scale(&qc);
            quo.push((qm, qc));
            rem = &rem - &sub;
        }
        Some(Polynomial::from_terms(self.ring, quo))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        // merge two descending term lists
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(rhs.terms[j..].iter().cloned());
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match map.entry(m) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += &c;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
        }
        Polynomial {
            ring: self.ring,
            terms: map.into_iter().rev().collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    /// Canonical string form: terms in canonical order, `-` and `+` between
    /// them, coefficients printed only when not `±1` (or for constants),
    /// factors joined by `*`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if pos == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for i in 0..m.nvars() {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(self.ring.var_name(i)),
                    e => factors.push(format!("{}^{}", self.ring.var_name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn q(n: i64) -> Rational {
        Rational::integer(n)
    }

    fn p(ring: PolyRing, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn product_of_linear_forms() {
        let r = PolyRing::x_only(2);
        let sum = p(r, "x1 + x2");
        let diff = p(r, "x1 - x2");
        assert_eq!(&sum * &diff, p(r, "x1^2 - x2^2"));
    }

    #[test]
    fn telescoping_addition() {
        let t = PolyRing::bigraded(3, 3);
        let a = p(t, "x1*y1 - x2*y2");
        let b = p(t, "x2*y2 - x3*y3");
        assert_eq!(&a + &b, p(t, "x1*y1 - x3*y3"));
    }

    #[test]
    fn product_of_two_fold_products() {
        // f1*f2 for {x1, x2, x1+x2}: (x2(x1+x2))*(x1(x1+x2)) = x1*x2*(x1+x2)^2
        let r = PolyRing::x_only(2);
        let f1 = &p(r, "x2") * &p(r, "x1 + x2");
        let f2 = &p(r, "x1") * &p(r, "x1 + x2");
        let expected = &(&p(r, "x1") * &p(r, "x2")) * &p(r, "x1 + x2").pow(2);
        assert_eq!(&f1 * &f2, expected);
    }

    #[test]
    fn substitution_kills_circuit_relation() {
        // dD = y2y3 + y1y3 - y1y2 vanishes at the 2-fold products of {x1, x2, x1+x2}
        let s = PolyRing::y_only(3);
        let r = PolyRing::x_only(2);
        let dd = p(s, "y2*y3 + y1*y3 - y1*y2");
        let f1 = &p(r, "x2") * &p(r, "x1 + x2");
        let f2 = &p(r, "x1") * &p(r, "x1 + x2");
        let f3 = &p(r, "x1") * &p(r, "x2");
        assert!(dd.substitute_y(&[f1, f2, f3]).is_zero());
    }

    #[test]
    fn substitution_identity_and_boolean() {
        let s = PolyRing::y_only(2);
        let r = PolyRing::x_only(2);
        let images = [p(r, "x2"), p(r, "x1")];
        assert_eq!(p(s, "y1").substitute_y(&images), p(r, "x2"));
        // x1y1 - x2y2 at Boolean k=2 products (x2, x1) -> 0
        let t = PolyRing::bigraded(2, 2);
        let g = p(t, "x1*y1 - x2*y2");
        let images_t = [p(t, "x2"), p(t, "x1")];
        assert!(g.substitute_y(&images_t).is_zero());
    }

    #[test]
    fn bidegree_classification() {
        let t = PolyRing::bigraded(1, 1);
        assert_eq!(p(t, "x1*y1").bidegree(), Some((1, 1)));
        assert_eq!(p(t, "x1 + y1").bidegree(), None);
        assert_eq!(Polynomial::zero(t).bidegree(), Some((0, 0)));
        let t2 = PolyRing::bigraded(2, 2);
        assert_eq!(p(t2, "x1*y1 - x2*y2").bidegree(), Some((1, 1)));
    }

    #[test]
    fn bidegree_additive_under_multiplication() {
        let t = PolyRing::bigraded(2, 2);
        let a = p(t, "x1*y1 - x2*y2");
        let b = p(t, "y1 + y2");
        let (ax, ay) = a.bidegree().unwrap();
        let (bx, by) = b.bidegree().unwrap();
        assert_eq!((&a * &b).bidegree(), Some((ax + bx, ay + by)));
    }

    #[test]
    fn exact_division() {
        let r = PolyRing::x_only(2);
        let prod = &p(r, "x1 + x2") * &p(r, "x1 - x2");
        assert_eq!(prod.div_exact(&p(r, "x1 + x2")), Some(p(r, "x1 - x2")));
        assert_eq!(p(r, "x1^2").div_exact(&p(r, "x1 + x2")), None);
    }

    #[test]
    fn display_canonical_form() {
        let t = PolyRing::bigraded(2, 2);
        assert_eq!(p(t, "x1*y1 - x2*y2").to_string(), "x1*y1 - x2*y2");
        assert_eq!(Polynomial::zero(t).to_string(), "0");
        assert_eq!(
            Polynomial::constant(t, Rational::new(-3, 2)).to_string(),
            "-3/2"
        );
        let three_halves_x = Polynomial::term(
            t,
            Monomial::variable(4, 0),
            Rational::new(3, 2),
        );
        assert_eq!(three_halves_x.to_string(), "3/2*x1");
        assert_eq!(p(t, "x1^2").scale(&q(-1)).to_string(), "-x1^2");
    }
}
