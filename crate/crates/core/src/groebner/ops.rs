//! Ideal calculus on top of the Buchberger engine: elimination,
//! intersection, colon, saturation.

use crate::budget::{Budget, LimitError};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

use super::ideal::IdealHandle;

/// Generators of `I` intersected with the subring omitting `front`: the
/// reduced-basis elements free of the front variables, moved into the
/// smaller ring.
///
/// The front variables may come from either block; the remaining variables
/// keep their block and relative order.
pub fn eliminate(
    ideal: &IdealHandle,
    front: &[usize],
    budget: &Budget,
) -> Result<IdealHandle, LimitError> {
    let ring = ideal.ring();
    let order = MonomialOrder::elimination(front.to_vec());
    let basis = ideal.groebner(&order, budget)?;
    let mut front_sorted = front.to_vec();
    front_sorted.sort_unstable();
    front_sorted.dedup();
    let (new_ring, var_map) = drop_vars(ring, &front_sorted);
    let gens: Vec<Polynomial> = basis
        .elements()
        .iter()
        .filter(|g| front_sorted.iter().all(|&v| !g.involves_var(v)))
        .map(|g| g.remap(new_ring, &var_map))
        .collect();
    Ok(IdealHandle::new(new_ring, gens))
}

/// The ring without the given (sorted) variables, plus the old-to-new map.
fn drop_vars(ring: PolyRing, dropped: &[usize]) -> (PolyRing, Vec<Option<usize>>) {
    let mut var_map = vec![None; ring.num_vars()];
    let mut next = 0usize;
    let mut new_x = 0usize;
    let mut new_y = 0usize;
    for v in 0..ring.num_vars() {
        if dropped.binary_search(&v).is_ok() {
            continue;
        }
        var_map[v] = Some(next);
        next += 1;
        if ring.is_x_var(v) {
            new_x += 1;
        } else {
            new_y += 1;
        }
    }
    (PolyRing::new(new_x, new_y), var_map)
}

/// Extend the ring by one auxiliary variable at the end of the x-block.
/// Returns the extended ring, the embedding map and the aux variable index.
pub fn with_aux_var(ring: PolyRing) -> (PolyRing, Vec<Option<usize>>, usize) {
    let ext = PolyRing::new(ring.num_x() + 1, ring.num_y());
    let aux = ring.num_x();
    let var_map: Vec<Option<usize>> = (0..ring.num_vars())
        .map(|v| {
            if v < ring.num_x() {
                Some(v)
            } else {
                Some(v + 1)
            }
        })
        .collect();
    (ext, var_map, aux)
}

/// `I ∩ J` via a tag variable: eliminate `t` from `t*I + (1-t)*J`.
pub fn intersect(
    a: &IdealHandle,
    b: &IdealHandle,
    budget: &Budget,
) -> Result<IdealHandle, LimitError> {
    assert_eq!(a.ring(), b.ring(), "ring mismatch");
    let ring = a.ring();
    let (ext, map, aux) = with_aux_var(ring);
    let t = Polynomial::variable(ext, aux);
    let one_minus_t = &Polynomial::one(ext) - &t;
    let mut gens: Vec<Polynomial> = Vec::new();
    for g in a.generators() {
        gens.push(&t * &g.remap(ext, &map));
    }
    for g in b.generators() {
        gens.push(&one_minus_t * &g.remap(ext, &map));
    }
    let extended = IdealHandle::new(ext, gens);
    let result = eliminate(&extended, &[aux], budget)?;
    debug_assert_eq!(result.ring(), ring);
    Ok(result)
}

/// Intersection of several ideals, left fold.
pub fn intersect_many(
    ideals: &[IdealHandle],
    budget: &Budget,
) -> Result<IdealHandle, LimitError> {
    let mut it = ideals.iter();
    let first = it.next().expect("at least one ideal").clone();
    it.try_fold(first, |acc, next| intersect(&acc, next, budget))
}

/// `(I : f)`, computed as `intersect(I, <f>)` with every generator divided
/// exactly by `f`.
pub fn colon(
    ideal: &IdealHandle,
    f: &Polynomial,
    budget: &Budget,
) -> Result<IdealHandle, LimitError> {
    assert!(!f.is_zero(), "colon by zero");
    assert_eq!(ideal.ring(), f.ring(), "ring mismatch");
    let principal = IdealHandle::new(ideal.ring(), vec![f.clone()]);
    let meet = intersect(ideal, &principal, budget)?;
    let gens: Vec<Polynomial> = meet
        .generators()
        .iter()
        .map(|g| {
            g.div_exact(f)
                .expect("intersection with a principal ideal divides its generator")
        })
        .collect();
    Ok(IdealHandle::new(ideal.ring(), gens))
}

/// `(I : J)` for an ideal `J`: the intersection of the element colons.
pub fn colon_ideal(
    ideal: &IdealHandle,
    by: &IdealHandle,
    budget: &Budget,
) -> Result<IdealHandle, LimitError> {
    let parts: Result<Vec<IdealHandle>, LimitError> = by
        .generators()
        .iter()
        .map(|g| colon(ideal, g, budget))
        .collect();
    intersect_many(&parts?, budget)
}

/// `I : f^∞` via the single auxiliary-variable trick: eliminate `z` from
/// `I + <1 - z*f>`. Stabilizes, so saturating twice equals saturating once.
pub fn saturate(
    ideal: &IdealHandle,
    f: &Polynomial,
    budget: &Budget,
) -> Result<IdealHandle, LimitError> {
    assert!(!f.is_zero(), "saturation by zero");
    assert_eq!(ideal.ring(), f.ring(), "ring mismatch");
    if f.degree() == 0 {
        // a unit changes nothing
        return Ok(ideal.clone());
    }
    let ring = ideal.ring();
    let (ext, map, aux) = with_aux_var(ring);
    let z = Polynomial::variable(ext, aux);
    let mut gens: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .map(|g| g.remap(ext, &map))
        .collect();
    gens.push(&Polynomial::one(ext) - &(&z * &f.remap(ext, &map)));
    let extended = IdealHandle::new(ext, gens);
    eliminate(&extended, &[aux], budget)
}

/// `I : J^∞` for an ideal `J`: intersection of the element saturations over
/// a reduced generating set of `J`.
pub fn saturate_ideal(
    ideal: &IdealHandle,
    by: &IdealHandle,
    budget: &Budget,
) -> Result<IdealHandle, LimitError> {
    assert!(!by.is_zero(), "saturation by the zero ideal");
    let reduced = by.groebner_default(budget)?;
    let parts: Result<Vec<IdealHandle>, LimitError> = reduced
        .elements()
        .iter()
        .map(|g| saturate(ideal, g, budget))
        .collect();
    intersect_many(&parts?, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn p(ring: PolyRing, s: &str) -> Polynomial {
        parse_polynomial(ring, s).unwrap()
    }

    fn ideal(ring: PolyRing, gens: &[&str]) -> IdealHandle {
        IdealHandle::new(ring, gens.iter().map(|s| p(ring, s)).collect())
    }

    #[test]
    fn eliminate_rees_parameter_boolean2() {
        // eliminate t from <y1 - t*x2, y2 - t*x1>  ->  <x1*y1 - x2*y2>
        let budget = Budget::default();
        let ring = PolyRing::bigraded(3, 2); // x1, x2, t=x3, y1, y2
        let i = ideal(ring, &["y1 - x3*x2", "y2 - x3*x1"]);
        let out = eliminate(&i, &[2], &budget).unwrap();
        let t = PolyRing::bigraded(2, 2);
        assert_eq!(out.ring(), t);
        let expected = ideal(t, &["x1*y1 - x2*y2"]);
        assert!(out.equal(&expected, &budget).unwrap());
    }

    #[test]
    fn eliminate_everything_relevant_gives_zero() {
        let budget = Budget::default();
        let t = PolyRing::bigraded(2, 2);
        let i = ideal(t, &["x1*y1 - x2*y2"]);
        let out = eliminate(&i, &[0, 1], &budget).unwrap();
        assert_eq!(out.ring(), PolyRing::y_only(2));
        assert!(out.is_zero());
    }

    #[test]
    fn elimination_soundness() {
        // eliminate the parameter from a twisted-cubic style parametrization
        let budget = Budget::default();
        let ring = PolyRing::x_only(3);
        let i = ideal(ring, &["x1 - x3^2", "x2 - x3^3"]);
        let out = eliminate(&i, &[2], &budget).unwrap();
        assert_eq!(out.ring(), PolyRing::x_only(2));
        assert!(!out.is_zero());
        for g in out.generators() {
            // members of the original ideal once re-embedded
            let back = g.remap(ring, &[Some(0), Some(1)]);
            assert!(!back.involves_var(2));
            assert!(i.contains(&back, &budget).unwrap());
        }
        // x1^3 - x2^2 is the expected relation
        let expected = ideal(PolyRing::x_only(2), &["x1^3 - x2^2"]);
        assert!(out.equal(&expected, &budget).unwrap());
    }

    #[test]
    fn intersect_monomial_ideals() {
        let budget = Budget::default();
        let r = PolyRing::x_only(3);
        let a = ideal(r, &["x1"]);
        let b = ideal(r, &["x2"]);
        let meet = intersect(&a, &b, &budget).unwrap();
        assert!(meet.equal(&ideal(r, &["x1*x2"]), &budget).unwrap());
        // I ∩ I = I
        let again = intersect(&a, &a, &budget).unwrap();
        assert!(again.equal(&a, &budget).unwrap());
    }

    #[test]
    fn triple_intersection_of_coordinate_pairs() {
        let budget = Budget::default();
        let r = PolyRing::x_only(3);
        let parts = [
            ideal(r, &["x1", "x2"]),
            ideal(r, &["x1", "x3"]),
            ideal(r, &["x2", "x3"]),
        ];
        let meet = intersect_many(&parts, &budget).unwrap();
        let expected = ideal(r, &["x1*x2", "x1*x3", "x2*x3"]);
        assert!(meet.equal(&expected, &budget).unwrap());
    }

    #[test]
    fn colon_examples() {
        let budget = Budget::default();
        let r = PolyRing::x_only(2);
        let i = ideal(r, &["x1*x2"]);
        let q = colon(&i, &p(r, "x1"), &budget).unwrap();
        assert!(q.equal(&ideal(r, &["x2"]), &budget).unwrap());
        // (I : 1) = I
        let id = colon(&i, &Polynomial::one(r), &budget).unwrap();
        assert!(id.equal(&i, &budget).unwrap());
        // colon of the zero ideal stays zero
        let z = colon(&IdealHandle::zero(r), &p(r, "x1"), &budget).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn saturate_examples() {
        let budget = Budget::default();
        let t = PolyRing::bigraded(1, 1);
        let i = ideal(t, &["x1^2*y1"]);
        let s = saturate(&i, &p(t, "x1"), &budget).unwrap();
        assert!(s.equal(&ideal(t, &["y1"]), &budget).unwrap());
        // unit saturation is the identity
        let u = saturate(&i, &Polynomial::constant(t, crate::exactnum::Rational::new(2, 3)), &budget).unwrap();
        assert!(u.equal(&i, &budget).unwrap());
    }

    #[test]
    fn colon_saturate_consistency_chain() {
        let budget = Budget::default();
        let t = PolyRing::bigraded(1, 2);
        let i = ideal(t, &["x1^2*y1", "x1*y2"]);
        let f = p(t, "x1");
        let c = colon(&i, &f, &budget).unwrap();
        let s = saturate(&i, &f, &budget).unwrap();
        // I ⊆ (I : f) ⊆ (I : f^∞)
        assert!(c.contains_ideal(&i, &budget).unwrap());
        assert!(s.contains_ideal(&c, &budget).unwrap());
        // saturation is idempotent
        let ss = saturate(&s, &f, &budget).unwrap();
        assert!(ss.equal(&s, &budget).unwrap());
    }

    #[test]
    fn ideal_saturation_matches_iterated_element_work() {
        let budget = Budget::default();
        let r = PolyRing::x_only(2);
        let i = ideal(r, &["x1^2", "x1*x2"]);
        let j = ideal(r, &["x1", "x2"]);
        let s = saturate_ideal(&i, &j, &budget).unwrap();
        // x1 * m ⊆ I, so I : m^∞ = <x1>
        assert!(s.equal(&ideal(r, &["x1"]), &budget).unwrap());
    }
}
