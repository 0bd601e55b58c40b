use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::budget::{Budget, LimitError};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

use super::buchberger::{buchberger, GroebnerBasis};

/// A generator set with a cache of reduced Groebner bases, one per monomial
/// order.
///
/// Clones share the cache; computing a basis under a new order stores it for
/// every clone. Reduced bases are unique, so cache entries are canonical for
/// the ideal.
#[derive(Clone)]
pub struct IdealHandle {
    ring: PolyRing,
    gens: Vec<Polynomial>,
    cache: Arc<Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>>,
}

impl IdealHandle {
    pub fn new(ring: PolyRing, gens: Vec<Polynomial>) -> Self {
        let gens: Vec<Polynomial> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            assert_eq!(g.ring(), ring, "generator outside stated ring");
        }
        IdealHandle {
            ring,
            gens,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn zero(ring: PolyRing) -> Self {
        IdealHandle::new(ring, Vec::new())
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// No nonzero generators.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Sum of ideals (concatenated generators) in a common ring.
    pub fn plus(&self, other: &IdealHandle) -> IdealHandle {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealHandle::new(self.ring, gens)
    }

    /// The reduced Groebner basis under `order`, from cache or computed.
    pub fn groebner(
        &self,
        order: &MonomialOrder,
        budget: &Budget,
    ) -> Result<Arc<GroebnerBasis>, LimitError> {
        if let Some(hit) = self.cache.lock().unwrap().get(order) {
            return Ok(Arc::clone(hit));
        }
        let basis = Arc::new(buchberger(self.ring, &self.gens, order, budget)?);
        let mut cache = self.cache.lock().unwrap();
        let entry = cache.entry(order.clone()).or_insert_with(|| Arc::clone(&basis));
        Ok(Arc::clone(entry))
    }

    pub fn groebner_default(&self, budget: &Budget) -> Result<Arc<GroebnerBasis>, LimitError> {
        self.groebner(&MonomialOrder::DegRevLex, budget)
    }

    /// Ideal membership via normal form.
    pub fn contains(&self, f: &Polynomial, budget: &Budget) -> Result<bool, LimitError> {
        if f.is_zero() {
            return Ok(true);
        }
        Ok(self.groebner_default(budget)?.contains(f))
    }

    /// All generators of `other` lie in `self`.
    pub fn contains_ideal(&self, other: &IdealHandle, budget: &Budget) -> Result<bool, LimitError> {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let basis = self.groebner_default(budget)?;
        Ok(other.gens.iter().all(|g| basis.contains(g)))
    }

    /// Equality of ideals (not generator lists): identical reduced bases
    /// under one shared order.
    pub fn equal(&self, other: &IdealHandle, budget: &Budget) -> Result<bool, LimitError> {
        assert_eq!(self.ring, other.ring, "ring mismatch");
        let a = self.groebner_default(budget)?;
        let b = other.groebner_default(budget)?;
        Ok(*a == *b)
    }
}

impl std::fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal{:?}", self.gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(ring: PolyRing, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    #[test]
    fn equality_is_of_ideals_not_generators() {
        let r = PolyRing::x_only(2);
        let budget = Budget::default();
        let a = IdealHandle::new(r, vec![p(r, "x1"), p(r, "x2")]);
        let b = IdealHandle::new(r, vec![p(r, "x1 + x2"), p(r, "x2")]);
        assert!(a.equal(&b, &budget).unwrap());
        let c = IdealHandle::new(r, vec![p(r, "x1")]);
        let d = IdealHandle::new(r, vec![p(r, "x1^2")]);
        assert!(!c.equal(&d, &budget).unwrap());
    }

    #[test]
    fn cache_returns_same_basis() {
        let r = PolyRing::x_only(2);
        let budget = Budget::default();
        let a = IdealHandle::new(r, vec![p(r, "x1^2 - x2"), p(r, "x1*x2 - x1")]);
        let g1 = a.groebner_default(&budget).unwrap();
        let g2 = a.groebner_default(&budget).unwrap();
        assert!(Arc::ptr_eq(&g1, &g2));
        let clone = a.clone();
        let g3 = clone.groebner_default(&budget).unwrap();
        assert!(Arc::ptr_eq(&g1, &g3));
    }

    #[test]
    fn zero_ideal_membership() {
        let r = PolyRing::x_only(1);
        let budget = Budget::default();
        let z = IdealHandle::zero(r);
        assert!(z.contains(&Polynomial::zero(r), &budget).unwrap());
        assert!(!z.contains(&p(r, "x1"), &budget).unwrap());
    }
}
