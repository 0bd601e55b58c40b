use std::cmp::Ordering;

/// A power product, stored as a dense exponent vector with the total degree
/// cached.
///
/// `Ord` is degrevlex (the crate's canonical storage order); other orders are
/// applied through [`super::MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
            degree: 0,
        }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn variable(nvars: usize, idx: usize) -> Self {
        assert!(idx < nvars);
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exp(&self, idx: usize) -> u32 {
        self.exps[idx]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Total degree over a subset of variable indices.
    pub fn degree_on(&self, idxs: impl Iterator<Item = usize>) -> u32 {
        idxs.map(|i| self.exps[i]).sum()
    }

    pub fn involves(&self, idx: usize) -> bool {
        self.exps[idx] > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`; panics if not divisible.
    pub fn div_exact(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self), "inexact monomial division");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a - b)
            .collect();
        Monomial {
            exps,
            degree: self.degree - other.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial::from_exps(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Remap exponents into another ring: `var_map[i]` is the new index of
    /// old variable `i`, or `None` if the variable must not occur.
    pub fn remap(&self, new_nvars: usize, var_map: &[Option<usize>]) -> Monomial {
        assert_eq!(var_map.len(), self.nvars());
        let mut exps = vec![0u32; new_nvars];
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                let target = var_map[i].expect("remapped monomial uses a dropped variable");
                exps[target] += e;
            }
        }
        Monomial::from_exps(exps)
    }
}

/// Canonical (degrevlex) comparison; `Greater` means the larger monomial.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.nvars(), other.nvars());
        match self.degree.cmp(&other.degree) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.exps.len()).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing (rightmost) variable
                // means the larger monomial
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "m{:?}", self.exps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        // x1 > x2 in two variables
        assert!(m(&[1, 0]) > m(&[0, 1]));
        // degree dominates
        assert!(m(&[0, 2]) > m(&[1, 0]));
        // classic degrevlex tie-break: x1*x3 < x2^2 in three variables
        assert!(m(&[1, 0, 1]) < m(&[0, 2, 0]));
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[1, 0, 3]);
        assert!(!a.divides(&b));
        assert!(m(&[1, 0, 0]).divides(&a));
        assert_eq!(a.lcm(&b), m(&[2, 1, 3]));
        assert_eq!(a.div_exact(&m(&[1, 1, 0])), m(&[1, 0, 0]));
        assert!(m(&[0, 1, 0]).coprime(&m(&[1, 0, 1])));
        assert!(!a.coprime(&b));
    }
}
