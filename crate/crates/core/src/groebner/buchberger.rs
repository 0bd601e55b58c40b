use std::cmp::Ordering;

use crate::budget::{Budget, LimitError, Meter};
use crate::exactnum::Rational;
use crate::poly::{Monomial, MonomialOrder, PolyRing, Polynomial};

type Term = (Monomial, Rational);

/// Internal working form: term list sorted strictly descending under the
/// working order.
#[derive(Clone)]
pub(crate) struct OrdPoly {
    terms: Vec<Term>,
}

impl OrdPoly {
    fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> = p.terms().to_vec();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        OrdPoly { terms }
    }

    fn into_polynomial(self, ring: PolyRing) -> Polynomial {
        Polynomial::from_terms(ring, self.terms)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> &Term {
        &self.terms[0]
    }

    fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.first() {
            if !lc.is_one() {
                let inv = lc.recip();
                for (_, c) in self.terms.iter_mut() {
                    *c *= &inv;
                }
            }
        }
        self
    }
}

/// `a - coeff * mono * b`, both inputs sorted under `order`.
fn sub_scaled(a: &OrdPoly, b: &OrdPoly, mono: &Monomial, coeff: &Rational, order: &MonomialOrder) -> OrdPoly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let mut i = 0;
    let mut j = 0;
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let mb = b.terms[j].0.mul(mono);
        match order.cmp(ma, &mb) {
            Ordering::Greater => {
                out.push(a.terms[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = -&(&b.terms[j].1 * coeff);
                out.push((mb, c));
                j += 1;
            }
            Ordering::Equal => {
                let c = ca - &(&b.terms[j].1 * coeff);
                if !c.is_zero() {
                    out.push((mb, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    for (mb, cb) in &b.terms[j..] {
        out.push((mb.mul(mono), -&(cb * coeff)));
    }
    OrdPoly { terms: out }
}

/// Full normal form of `f` modulo `basis`: the unique remainder none of whose
/// terms is divisible by a basis leading monomial.
fn normal_form_ord(
    f: OrdPoly,
    basis: &[OrdPoly],
    order: &MonomialOrder,
    mut meter: Option<&mut Meter<'_>>,
) -> Result<OrdPoly, LimitError> {
    let mut tail = f;
    let mut out: Vec<Term> = Vec::new();
    'outer: while !tail.is_zero() {
        if let Some(m) = meter.as_deref_mut() {
            m.tick_reduction()?;
        }
        let (lm, lc) = tail.leading().clone();
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = g.leading();
            if gm.divides(&lm) {
                let qm = lm.div_exact(gm);
                let qc = lc.div_exact(gc);
                tail = sub_scaled(&tail, g, &qm, &qc, order);
                continue 'outer;
            }
        }
        out.push((lm, lc));
        tail.terms.remove(0);
    }
    Ok(OrdPoly { terms: out })
}

/// S-polynomial of `f` and `g`.
fn s_polynomial(f: &OrdPoly, g: &OrdPoly, order: &MonomialOrder) -> OrdPoly {
    let (fm, fc) = f.leading();
    let (gm, gc) = g.leading();
    let lcm = fm.lcm(gm);
    let left = sub_scaled(
        &OrdPoly { terms: Vec::new() },
        f,
        &lcm.div_exact(fm),
        &-&fc.recip(),
        order,
    );
    sub_scaled(&left, g, &lcm.div_exact(gm), &gc.recip(), order)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn make_pair(basis: &[OrdPoly], i: usize, j: usize) -> Pair {
    let lcm = basis[i].leading().0.lcm(&basis[j].leading().0);
    Pair { i, j, lcm }
}

/// Gebauer-Moeller pair update: install pairs of the new element `t` against
/// the existing basis and prune old pairs made redundant by it.
fn update_pairs(basis: &[OrdPoly], old_pairs: Vec<Pair>, t: usize) -> Vec<Pair> {
    let lt = &basis[t].leading().0;
    let fresh: Vec<Pair> = (0..t).map(|i| make_pair(basis, i, t)).collect();
    // criterion M/F: drop (i,t) when another new pair's lcm strictly divides
    // its lcm; coprime pairs survive this phase so they can kill others
    let mut kept: Vec<Pair> = Vec::new();
    for (idx, p) in fresh.iter().enumerate() {
        let coprime = basis[p.i].leading().0.coprime(lt);
        let dominated = |q: &Pair| q.lcm != p.lcm && q.lcm.divides(&p.lcm);
        let by_later = fresh[idx + 1..].iter().any(dominated);
        let by_kept = kept.iter().any(dominated);
        // among equal lcms keep only the first
        let duplicate = kept.iter().any(|q| q.lcm == p.lcm);
        if coprime || !(by_later || by_kept || duplicate) {
            kept.push(p.clone());
        }
    }
    // criterion B (product criterion): coprime leading terms reduce to zero
    let mut new_pairs: Vec<Pair> = kept
        .into_iter()
        .filter(|p| !basis[p.i].leading().0.coprime(lt))
        .collect();
    // prune old pairs whose lcm is strictly absorbed by the new element
    let survivors = old_pairs.into_iter().filter(|p| {
        !lt.divides(&p.lcm)
            || basis[p.i].leading().0.lcm(lt) == p.lcm
            || basis[p.j].leading().0.lcm(lt) == p.lcm
    });
    let mut out: Vec<Pair> = survivors.collect();
    out.append(&mut new_pairs);
    out
}

/// Normal selection strategy: smallest lcm degree, then smallest lcm in the
/// order, then smallest indices.
fn select_pair(pairs: &mut Vec<Pair>, order: &MonomialOrder) -> Pair {
    let mut best = 0;
    for idx in 1..pairs.len() {
        let a = &pairs[idx];
        let b = &pairs[best];
        let better = match a.lcm.degree().cmp(&b.lcm.degree()) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => match order.cmp(&a.lcm, &b.lcm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => (a.i, a.j) < (b.i, b.j),
            },
        };
        if better {
            best = idx;
        }
    }
    pairs.swap_remove(best)
}

/// A reduced Groebner basis: monic elements, no leading monomial divides
/// another, no term of any element is divisible by another's leading
/// monomial. Unique for the ideal and order, hence usable as a canonical
/// form.
pub struct GroebnerBasis {
    ring: PolyRing,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    ordered: Vec<OrdPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.order == other.order && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroebnerBasis{:?}", self.elements)
    }
}

impl GroebnerBasis {
    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.ordered.iter().map(|g| g.leading().0.clone()).collect()
    }

    /// Unique remainder of `f` modulo this basis.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.ring(), self.ring, "ring mismatch");
        let ord = OrdPoly::from_polynomial(f, &self.order);
        let nf = normal_form_ord(ord, &self.ordered, &self.order, None)
            .expect("unmetered normal form cannot hit a budget");
        nf.into_polynomial(self.ring)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Direct confluence post-check: every S-pair reduces to zero.
    pub fn is_confluent(&self) -> bool {
        s_pairs_reduce_to_zero(&self.ordered, &self.order)
    }
}

pub(crate) fn s_pairs_reduce_to_zero(basis: &[OrdPoly], order: &MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            let nf = normal_form_ord(s, basis, order, None).expect("unmetered");
            if !nf.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Check whether a generating set is already a Groebner basis under `order`
/// (every S-pair reduces to zero against the set itself).
pub fn generators_are_groebner(gens: &[Polynomial], order: &MonomialOrder) -> bool {
    let basis: Vec<OrdPoly> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| OrdPoly::from_polynomial(p, order))
        .collect();
    s_pairs_reduce_to_zero(&basis, order)
}

/// Buchberger's algorithm with Gebauer-Moeller pair elimination and normal
/// pair selection; returns the reduced basis, deterministic for a fixed
/// generator list.
pub fn buchberger(
    ring: PolyRing,
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis, LimitError> {
    let mut meter = budget.start();
    let mut basis: Vec<OrdPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    for g in gens {
        assert_eq!(g.ring(), ring, "generator outside the ring");
        if g.is_zero() {
            continue;
        }
        let reduced = normal_form_ord(
            OrdPoly::from_polynomial(g, order),
            &basis,
            order,
            Some(&mut meter),
        )?;
        if reduced.is_zero() {
            continue;
        }
        meter.check_degree(reduced.degree())?;
        basis.push(reduced.monic());
        meter.check_basis_size(basis.len())?;
        pairs = update_pairs(&basis, pairs, basis.len() - 1);
    }
    while !pairs.is_empty() {
        let pair = select_pair(&mut pairs, order);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order);
        let h = normal_form_ord(s, &basis, order, Some(&mut meter))?;
        if h.is_zero() {
            continue;
        }
        meter.check_degree(h.degree())?;
        basis.push(h.monic());
        meter.check_basis_size(basis.len())?;
        pairs = update_pairs(&basis, pairs, basis.len() - 1);
    }
    let reduced = reduce_basis(basis, order, &mut meter)?;
    let elements: Vec<Polynomial> = reduced
        .iter()
        .map(|g| OrdPoly::clone(g).into_polynomial(ring))
        .collect();
    Ok(GroebnerBasis {
        ring,
        order: order.clone(),
        elements,
        ordered: reduced,
    })
}

/// Minimalize and auto-reduce a Groebner basis; output sorted by leading
/// monomial, descending.
fn reduce_basis(
    basis: Vec<OrdPoly>,
    order: &MonomialOrder,
    meter: &mut Meter<'_>,
) -> Result<Vec<OrdPoly>, LimitError> {
    // minimal generators of the leading-term ideal
    let mut minimal: Vec<OrdPoly> = Vec::new();
    for g in &basis {
        let gm = &g.leading().0;
        if basis
            .iter()
            .any(|h| !std::ptr::eq(g, h) && h.leading().0.divides(gm) && h.leading().0 != *gm)
        {
            continue;
        }
        // among equal leading monomials keep the first occurrence
        if minimal.iter().any(|h| h.leading().0 == *gm) {
            continue;
        }
        minimal.push(g.clone());
    }
    // tail-reduce until stable
    loop {
        let mut changed = false;
        for idx in 0..minimal.len() {
            let current = minimal[idx].clone();
            let others: Vec<OrdPoly> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, h)| h.clone())
                .collect();
            let reduced = normal_form_ord(current, &others, order, Some(meter))?.monic();
            if reduced.terms != minimal[idx].terms {
                minimal[idx] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.sort_by(|a, b| order.cmp(&b.leading().0, &a.leading().0));
    Ok(minimal)
}
