use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Integer polynomial in one variable, dense coefficient vector, constant
/// term first. The zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = IntPoly(coeffs);
        p.trim();
        p
    }

    pub fn monomial(coeff: i64, degree: usize) -> Self {
        if coeff == 0 {
            return IntPoly::zero();
        }
        let mut v = vec![0; degree + 1];
        v[degree] = coeff;
        IntPoly(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let len = self.0.len().max(other.0.len());
        IntPoly::from_coeffs((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        IntPoly(v)
    }

    /// `(1 - s)^e`.
    pub fn one_minus_s_pow(e: usize) -> IntPoly {
        let base = IntPoly(vec![1, -1]);
        let mut acc = IntPoly::one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Exact division by `(1 - s)`; `None` if 1 is not a root.
    pub fn div_one_minus_s(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.eval_at_one() != 0 {
            return None;
        }
        // synthetic division: p = (1 - s) q  =>  q_i = p_0 + p_1 + ... + p_i
        let mut out = Vec::with_capacity(self.0.len() - 1);
        let mut acc = 0i64;
        for i in 0..self.0.len() - 1 {
            acc += self.0[i];
            out.push(acc);
        }
        Some(IntPoly::from_coeffs(out))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if mag != 1 {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "s")?;
                    } else {
                        write!(f, "s^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// A graded Hilbert series `numerator / (1 - s)^d` in reduced form: the
/// numerator does not vanish at `s = 1` (except for the zero series).
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    #[serde(serialize_with = "serialize_numerator")]
    pub numerator: IntPoly,
    pub denominator_exponent: usize,
}

fn serialize_numerator<S: serde::Serializer>(p: &IntPoly, s: S) -> Result<S::Ok, S::Error> {
    p.coeffs().serialize(s)
}

impl HilbertSeries {
    /// Reduce `numerator / (1-s)^d` by cancelling `(1-s)` factors.
    pub fn reduced(mut numerator: IntPoly, mut denom_exponent: usize) -> Self {
        while denom_exponent > 0 {
            match numerator.div_one_minus_s() {
                Some(q) if !numerator.is_zero() => {
                    numerator = q;
                    denom_exponent -= 1;
                }
                _ => break,
            }
        }
        HilbertSeries {
            numerator,
            denominator_exponent: denom_exponent,
        }
    }

    /// Krull dimension of the graded quotient: the pole order at `s = 1`.
    pub fn dimension(&self) -> usize {
        self.denominator_exponent
    }

    /// Numerator coefficient list (the h-vector for a Cohen-Macaulay quotient).
    pub fn h_vector(&self) -> Vec<i64> {
        self.numerator.coeffs().to_vec()
    }

    /// Degree of the reduced numerator.
    pub fn numerator_degree(&self) -> usize {
        self.numerator.degree()
    }

    /// Coefficient of `s^d` in the series expansion.
    pub fn expansion_coeff(&self, d: usize) -> i64 {
        let e = self.denominator_exponent;
        if e == 0 {
            return self.numerator.coeff(d);
        }
        // 1/(1-s)^e has coefficient C(j+e-1, e-1) at s^j
        let mut total = 0i64;
        for (i, &c) in self.numerator.coeffs().iter().enumerate() {
            if i > d {
                break;
            }
            total += c * binomial(d - i + e - 1, e - 1);
        }
        total
    }
}

fn binomial(top: usize, bottom: usize) -> i64 {
    let mut acc = 1i64;
    for t in 0..bottom {
        // prefix products of C(top, t+1) stay integral
        acc = acc * (top - t) as i64 / (t + 1) as i64;
    }
    acc
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator_exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / (1 - s)^{}", self.numerator, self.denominator_exponent)
        }
    }
}

impl fmt::Debug for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Integer polynomial in two variables `u, v`, sparse representation.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly2(BTreeMap<(usize, usize), i64>);

impl IntPoly2 {
    pub fn zero() -> Self {
        IntPoly2(BTreeMap::new())
    }

    pub fn one() -> Self {
        IntPoly2::monomial(1, 0, 0)
    }

    pub fn monomial(coeff: i64, du: usize, dv: usize) -> Self {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert((du, dv), coeff);
        }
        IntPoly2(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&(usize, usize), &i64)> {
        self.0.iter()
    }

    pub fn add(&self, other: &IntPoly2) -> IntPoly2 {
        let mut out = self.0.clone();
        for (&k, &v) in &other.0 {
            let e = out.entry(k).or_insert(0);
            *e += v;
            if *e == 0 {
                out.remove(&k);
            }
        }
        IntPoly2(out)
    }

    pub fn mul(&self, other: &IntPoly2) -> IntPoly2 {
        let mut out: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for (&(a1, b1), &c1) in &self.0 {
            for (&(a2, b2), &c2) in &other.0 {
                let key = (a1 + a2, b1 + b2);
                let e = out.entry(key).or_insert(0);
                *e += c1 * c2;
                if *e == 0 {
                    out.remove(&key);
                }
            }
        }
        IntPoly2(out)
    }

    /// `(1 - u^a v^b)^e`.
    pub fn one_minus_mono_pow(du: usize, dv: usize, e: usize) -> IntPoly2 {
        let base = IntPoly2::one().add(&IntPoly2::monomial(-1, du, dv));
        let mut acc = IntPoly2::one();
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        acc
    }

    /// Dense coefficient matrix, rows indexed by the u-degree.
    pub fn to_matrix(&self) -> Vec<Vec<i64>> {
        let (mu, mv) = self
            .0
            .keys()
            .fold((0, 0), |(au, av), &(du, dv)| (au.max(du), av.max(dv)));
        let mut rows = vec![vec![0i64; mv + 1]; mu + 1];
        for (&(du, dv), &c) in &self.0 {
            rows[du][dv] = c;
        }
        rows
    }
}

impl fmt::Display for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(du, dv), &c) in &self.0 {
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let mut parts = Vec::new();
            if mag != 1 || (du == 0 && dv == 0) {
                parts.push(mag.to_string());
            }
            match du {
                0 => {}
                1 => parts.push("u".into()),
                _ => parts.push(format!("u^{}", du)),
            }
            match dv {
                0 => {}
                1 => parts.push("v".into()),
                _ => parts.push(format!("v^{}", dv)),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A bigraded Hilbert series `numerator / ((1-u)^{u_exp} (1-v)^{v_exp})`.
///
/// No reduction is attempted; equality of series is decided by
/// cross-multiplication.
#[derive(Clone)]
pub struct BigradedSeries {
    pub numerator: IntPoly2,
    pub u_exponent: usize,
    pub v_exponent: usize,
}

impl BigradedSeries {
    pub fn new(numerator: IntPoly2, u_exponent: usize, v_exponent: usize) -> Self {
        BigradedSeries {
            numerator,
            u_exponent,
            v_exponent,
        }
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn equals(&self, other: &BigradedSeries) -> bool {
        let ue = self.u_exponent.max(other.u_exponent);
        let ve = self.v_exponent.max(other.v_exponent);
        let lhs = self
            .numerator
            .mul(&IntPoly2::one_minus_mono_pow(1, 0, ue - self.u_exponent))
            .mul(&IntPoly2::one_minus_mono_pow(0, 1, ve - self.v_exponent));
        let rhs = other
            .numerator
            .mul(&IntPoly2::one_minus_mono_pow(1, 0, ue - other.u_exponent))
            .mul(&IntPoly2::one_minus_mono_pow(0, 1, ve - other.v_exponent));
        lhs == rhs
    }

    /// Specialize `u = v = s`, returning the single-graded series in reduced
    /// form.
    pub fn diagonal(&self) -> HilbertSeries {
        let mut num = IntPoly::zero();
        for (&(du, dv), &c) in self.numerator.coeffs() {
            num = num.add(&IntPoly::monomial(c, du + dv));
        }
        HilbertSeries::reduced(num, self.u_exponent + self.v_exponent)
    }
}

impl fmt::Display for BigradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / ((1 - u)^{} (1 - v)^{})",
            self.numerator, self.u_exponent, self.v_exponent
        )
    }
}

impl fmt::Debug for BigradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_poly_arithmetic() {
        let a = IntPoly::from_coeffs(vec![1, 3, 2]); // 1 + 3s + 2s^2
        let b = IntPoly::from_coeffs(vec![1, -1]); // 1 - s
        assert_eq!(a.mul(&b), IntPoly::from_coeffs(vec![1, 2, -1, -2]));
        assert_eq!(a.eval_at_one(), 6);
        assert_eq!(IntPoly::one_minus_s_pow(2), IntPoly::from_coeffs(vec![1, -2, 1]));
    }

    #[test]
    fn synthetic_division() {
        // 1 - s^3 = (1 - s)(1 + s + s^2)
        let p = IntPoly::from_coeffs(vec![1, 0, 0, -1]);
        assert_eq!(p.div_one_minus_s(), Some(IntPoly::from_coeffs(vec![1, 1, 1])));
        assert_eq!(IntPoly::from_coeffs(vec![1, 1]).div_one_minus_s(), None);
    }

    #[test]
    fn reduction_cancels_poles() {
        // (1 - s^2) / (1-s)^3 = (1 + s) / (1-s)^2
        let hs = HilbertSeries::reduced(IntPoly::from_coeffs(vec![1, 0, -1]), 3);
        assert_eq!(hs.numerator, IntPoly::from_coeffs(vec![1, 1]));
        assert_eq!(hs.dimension(), 2);
        assert_eq!(hs.h_vector(), vec![1, 1]);
        assert_eq!(hs.numerator_degree(), 1);
        assert_ne!(hs.numerator.eval_at_one(), 0);
    }

    #[test]
    fn series_expansion_counts() {
        // (1 + s)/(1-s)^2 expands to 1, 3, 5, 7, ...
        let hs = HilbertSeries::reduced(IntPoly::from_coeffs(vec![1, 1]), 2);
        let got: Vec<i64> = (0..5).map(|d| hs.expansion_coeff(d)).collect();
        assert_eq!(got, vec![1, 3, 5, 7, 9]);
        // constant series
        let c = HilbertSeries::reduced(IntPoly::from_coeffs(vec![1, 1]), 0);
        assert_eq!(c.expansion_coeff(0), 1);
        assert_eq!(c.expansion_coeff(1), 1);
        assert_eq!(c.expansion_coeff(2), 0);
    }

    #[test]
    fn bigraded_cross_multiplication() {
        // (1-uv)/((1-u)^2(1-v)^2) equals itself with an unreduced presentation
        let a = BigradedSeries::new(IntPoly2::one_minus_mono_pow(1, 1, 1), 2, 2);
        let unreduced = BigradedSeries::new(
            IntPoly2::one_minus_mono_pow(1, 1, 1).mul(&IntPoly2::one_minus_mono_pow(1, 0, 1)),
            3,
            2,
        );
        assert!(a.equals(&unreduced));
        let different = BigradedSeries::new(IntPoly2::one(), 2, 2);
        assert!(!a.equals(&different));
    }

    #[test]
    fn diagonal_specialization() {
        // 1/((1-u)(1-v)) at u=v=s gives 1/(1-s)^2
        let a = BigradedSeries::new(IntPoly2::one(), 1, 1);
        let d = a.diagonal();
        assert_eq!(d.numerator, IntPoly::one());
        assert_eq!(d.dimension(), 2);
    }
}
