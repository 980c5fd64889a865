//! Left linear filters and Gabriel filters of left ideals, and their
//! correspondence with prehereditary / left exact preradical tables.
//!
//! A left ideal is a submodule of the regular module. Filters are stored as
//! sorted canonical ideal lists; both axiom checks are exhaustive, which is
//! fine because the rings here have very few left ideals.

use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::preradical::PreradicalTable;
use crate::ring::FiniteRing;
use crate::submodule::{self, Submodule};
use crate::universe::Universe;
use serde::Serialize;
use std::sync::Arc;

pub type LeftIdeal = Submodule;

#[derive(Clone, Debug, Serialize)]
pub struct FilterWitness {
    pub reason: String,
    /// element lists of the ideals involved
    pub ideals: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FilterFlag {
    pub holds: bool,
    pub witness: Option<FilterWitness>,
}

#[derive(Clone, Debug)]
pub struct FilterTable {
    pub ring: Arc<FiniteRing>,
    pub ideals: Vec<LeftIdeal>,
    pub linear: FilterFlag,
    pub gabriel: FilterFlag,
}

impl PartialEq for FilterTable {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.ideals == other.ideals
    }
}
impl Eq for FilterTable {}

/// (I : a) = { r ∈ R : r·a ∈ I }.
pub fn ideal_quotient(reg: &FinModule, i: &LeftIdeal, a: &[u64]) -> LeftIdeal {
    let els: Vec<Vec<u64>> = reg
        .ring
        .elements()
        .into_iter()
        .filter(|r| i.contains(&reg.ring.mul(r, a)))
        .collect();
    Submodule::from_elements(reg, &els)
}

pub fn all_left_ideals(ring: &Arc<FiniteRing>) -> Vec<LeftIdeal> {
    submodule::submodules(&FinModule::regular(ring.clone()))
}

impl FilterTable {
    pub fn new(ring: Arc<FiniteRing>, ideals: Vec<LeftIdeal>) -> Result<Self> {
        let reg = FinModule::regular(ring.clone());
        let mut list = ideals;
        for i in &list {
            if i.factors != reg.factors {
                return Err(Error::NotSubmodule(
                    "ideal does not live in the regular module".into(),
                ));
            }
            let closed = Submodule::from_generators(&reg, &i.elements);
            if closed != *i {
                return Err(Error::NotSubmodule(
                    "set is not closed under left multiplication".into(),
                ));
            }
        }
        list.sort_by_key(|s| s.sort_key());
        list.dedup();
        let all = all_left_ideals(&ring);
        let linear = linear_check(&reg, &all, &list);
        let gabriel = gabriel_check(&reg, &all, &list, &linear);
        Ok(FilterTable { ring, ideals: list, linear, gabriel })
    }

    pub fn contains(&self, i: &LeftIdeal) -> bool {
        self.ideals.iter().any(|j| j == i)
    }

    pub fn is_linear(&self) -> bool {
        self.linear.holds
    }

    pub fn is_gabriel(&self) -> bool {
        self.gabriel.holds
    }
}

fn witness(reason: &str, ideals: &[&LeftIdeal]) -> FilterWitness {
    FilterWitness {
        reason: reason.to_string(),
        ideals: ideals.iter().map(|i| i.elements.clone()).collect(),
    }
}

fn linear_check(reg: &FinModule, all: &[LeftIdeal], f: &[LeftIdeal]) -> FilterFlag {
    if f.is_empty() {
        return FilterFlag {
            holds: false,
            witness: Some(witness("a filter cannot be empty", &[])),
        };
    }
    for i in f {
        for j in all {
            if i.leq(j) && !f.iter().any(|k| k == j) {
                return FilterFlag {
                    holds: false,
                    witness: Some(witness("not closed under over-ideals", &[i, j])),
                };
            }
        }
    }
    for i in f {
        for j in f {
            let meet = Submodule::intersect(reg, i, j);
            if !f.iter().any(|k| *k == meet) {
                return FilterFlag {
                    holds: false,
                    witness: Some(witness("not closed under intersections", &[i, j])),
                };
            }
        }
    }
    for i in f {
        for a in reg.elements() {
            let q = ideal_quotient(reg, i, &a);
            if !f.iter().any(|k| *k == q) {
                return FilterFlag {
                    holds: false,
                    witness: Some(witness("not closed under (I : a)", &[i, &q])),
                };
            }
        }
    }
    FilterFlag { holds: true, witness: None }
}

fn gabriel_check(
    reg: &FinModule,
    all: &[LeftIdeal],
    f: &[LeftIdeal],
    linear: &FilterFlag,
) -> FilterFlag {
    if !linear.holds {
        return FilterFlag {
            holds: false,
            witness: linear.witness.clone(),
        };
    }
    for j in all {
        if f.iter().any(|k| k == j) {
            continue;
        }
        for i in f {
            let glues = i
                .elements
                .iter()
                .all(|a| f.iter().any(|k| *k == ideal_quotient(reg, j, a)));
            if glues {
                return FilterFlag {
                    holds: false,
                    witness: Some(witness(
                        "gluing axiom fails: all (J : a) lie in the filter but J does not",
                        &[j, i],
                    )),
                };
            }
        }
    }
    FilterFlag { holds: true, witness: None }
}

/// 𝕀_σ = { I ≤ R : R/I is σ-torsion }.
pub fn filter_of(t: &PreradicalTable) -> Result<FilterTable> {
    let u = t.universe();
    let reg = u.regular_rep();
    let mut ideals = Vec::new();
    for e in u.sub_entries(reg) {
        let q = e
            .quot_rep
            .ok_or_else(|| Error::ClosureMissing("quotients".into()))?;
        if t.value(q).is_full() {
            ideals.push(e.sub.clone());
        }
    }
    FilterTable::new(u.ring.clone(), ideals)
}

/// σ_𝕀(M) = { x ∈ M : ann(x) ∈ 𝕀 }. Requires a linear filter.
pub fn preradical_of_filter(f: &FilterTable, u: &Arc<Universe>) -> Result<PreradicalTable> {
    if u.ring != f.ring {
        return Err(Error::RingMismatch);
    }
    if !f.linear.holds {
        let why = f
            .linear
            .witness
            .as_ref()
            .map(|w| w.reason.clone())
            .unwrap_or_default();
        return Err(Error::NotLinear(why));
    }
    let mut values = Vec::with_capacity(u.len());
    for i in 0..u.len() {
        let m = u.rep(i);
        let mut els = Vec::new();
        for x in m.elements() {
            let ann = submodule::annihilator(m, &x)?;
            if f.contains(&ann) {
                els.push(x);
            }
        }
        values.push(Submodule::from_elements(m, &els));
    }
    PreradicalTable::new(u.clone(), values)
}

/// Every linear filter over the ring, by brute force over ideal subsets.
/// The non-linear subsets are discarded.
pub fn enumerate_filters(ring: &Arc<FiniteRing>) -> Result<Vec<FilterTable>> {
    let all = all_left_ideals(ring);
    let n = all.len();
    if n > 20 {
        return Err(Error::Budget(format!(
            "{} left ideals is too many for subset enumeration",
            n
        )));
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let subset: Vec<LeftIdeal> = (0..n)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| all[b].clone())
            .collect();
        if subset.is_empty() {
            continue;
        }
        let f = FilterTable::new(ring.clone(), subset)?;
        if f.linear.holds {
            out.push(f);
        }
    }
    out.sort_by_key(|f| {
        (
            f.ideals.len(),
            f.ideals
                .iter()
                .flat_map(|i| i.sort_key().1)
                .collect::<Vec<_>>(),
        )
    });
    Ok(out)
}

/// Is the torsion class of the table closed under submodule classes?
pub fn torsion_class_hereditary(t: &PreradicalTable) -> Result<bool> {
    let u = t.universe();
    for i in 0..u.len() {
        if !t.is_torsion(i) {
            continue;
        }
        for e in u.sub_entries(i) {
            let r = e
                .rep
                .ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
            if !t.is_torsion(r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Is the torsion class closed under extensions: N and M/N torsion forces
/// M torsion, for every rep M and submodule N?
pub fn torsion_class_extension_closed(t: &PreradicalTable) -> Result<bool> {
    let u = t.universe();
    for i in 0..u.len() {
        for e in u.sub_entries(i) {
            let r = e
                .rep
                .ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
            let q = e
                .quot_rep
                .ok_or_else(|| Error::ClosureMissing("quotients".into()))?;
            if t.is_torsion(r) && t.is_torsion(q) && !t.is_torsion(i) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::ClosurePolicy;

    fn univ(name: &str, bound: usize) -> Arc<Universe> {
        let r = Arc::new(FiniteRing::builtin(name).unwrap().unwrap());
        Arc::new(Universe::build(r, &[], ClosurePolicy::with_bound(bound)).unwrap())
    }

    fn ideal_of(u: &Universe, els: &[Vec<u64>]) -> LeftIdeal {
        Submodule::from_elements(u.rep(u.regular_rep()), els)
    }

    #[test]
    fn z4_has_three_linear_and_two_gabriel_filters() {
        let u = univ("z4", 2);
        let filters = enumerate_filters(&u.ring).unwrap();
        assert_eq!(filters.len(), 3);
        let gabriel: Vec<&FilterTable> =
            filters.iter().filter(|f| f.gabriel.holds).collect();
        assert_eq!(gabriel.len(), 2);
        // {R} and all three ideals are the Gabriel ones
        assert_eq!(gabriel[0].ideals.len(), 1);
        assert_eq!(gabriel[1].ideals.len(), 3);
    }

    #[test]
    fn gabriel_witness_over_z4() {
        let u = univ("z4", 2);
        let f = FilterTable::new(
            u.ring.clone(),
            vec![
                ideal_of(&u, &[vec![0], vec![2]]),
                ideal_of(&u, &[vec![0], vec![1], vec![2], vec![3]]),
            ],
        )
        .unwrap();
        assert!(f.linear.holds);
        assert!(!f.gabriel.holds);
        let w = f.gabriel.witness.as_ref().unwrap();
        // J = 0 against I = 2Z4: both (0:0)=R and (0:2)=2Z4 lie in the filter
        assert_eq!(w.ideals[0], vec![vec![0]]);
        assert_eq!(w.ideals[1], vec![vec![0], vec![2]]);
    }

    #[test]
    fn filter_of_named_tables() {
        let u = univ("z4", 2);
        let jac = PreradicalTable::jacobson(&u).unwrap();
        let f = filter_of(&jac).unwrap();
        assert_eq!(f.ideals.len(), 1);
        assert!(f.ideals[0].is_full());
        let soc = PreradicalTable::socle(&u).unwrap();
        let f = filter_of(&soc).unwrap();
        assert_eq!(f.ideals.len(), 2);
        let one = PreradicalTable::one(&u);
        assert_eq!(filter_of(&one).unwrap().ideals.len(), 3);
    }

    #[test]
    fn preradical_of_filter_examples() {
        let u = univ("z4", 2);
        let z4 = u.regular_rep();
        let soc_filter = FilterTable::new(
            u.ring.clone(),
            vec![
                ideal_of(&u, &[vec![0], vec![2]]),
                ideal_of(&u, &[vec![0], vec![1], vec![2], vec![3]]),
            ],
        )
        .unwrap();
        let t = preradical_of_filter(&soc_filter, &u).unwrap();
        assert_eq!(*t.value(z4), Submodule::cyclic(u.rep(z4), &[2]));
        assert_eq!(t, PreradicalTable::socle(&u).unwrap());
        // {R} gives the zero table, the full set gives the identity
        let top = FilterTable::new(u.ring.clone(), vec![Submodule::full(u.rep(z4))]).unwrap();
        assert_eq!(
            preradical_of_filter(&top, &u).unwrap(),
            PreradicalTable::zero(&u)
        );
        let everything = FilterTable::new(u.ring.clone(), all_left_ideals(&u.ring)).unwrap();
        assert_eq!(
            preradical_of_filter(&everything, &u).unwrap(),
            PreradicalTable::one(&u)
        );
    }

    #[test]
    fn round_trips_on_left_exact_tables() {
        let u = univ("z4", 2);
        for f in enumerate_filters(&u.ring).unwrap() {
            let t = preradical_of_filter(&f, &u).unwrap();
            assert!(t.traits().unwrap().left_exact.holds);
            let back = filter_of(&t).unwrap();
            assert_eq!(back, f);
        }
        for t in [
            PreradicalTable::socle(&u).unwrap(),
            PreradicalTable::zero(&u),
            PreradicalTable::one(&u),
        ] {
            let f = filter_of(&t).unwrap();
            assert_eq!(preradical_of_filter(&f, &u).unwrap(), t);
        }
    }

    #[test]
    fn correspondence_on_enumerated_tables() {
        let u = univ("z4", 2);
        for t in crate::preradical::enumerate_preradicals(&u, 100_000).unwrap() {
            let f = filter_of(&t).unwrap();
            let pre = t.traits().unwrap().prehereditary.holds;
            assert_eq!(pre, f.linear.holds);
            let hereditary_torsion = torsion_class_hereditary(&t).unwrap()
                && torsion_class_extension_closed(&t).unwrap();
            assert_eq!(hereditary_torsion, f.gabriel.holds);
        }
    }

    #[test]
    fn rejects_non_ideals() {
        let u = univ("z4xz4", 1);
        let reg = u.rep(u.regular_rep());
        // {0, (1,0)} is not closed under multiplication by (1,1)
        let bogus = Submodule {
            factors: reg.factors.clone(),
            canon: vec![vec![1, 0], vec![0, 4]],
            elements: vec![vec![0, 0], vec![1, 0]],
        };
        assert!(FilterTable::new(u.ring.clone(), vec![bogus]).is_err());
    }

    #[test]
    fn nonlinear_filter_is_rejected_by_preradical_of_filter() {
        let u = univ("z4", 2);
        let f = FilterTable::new(
            u.ring.clone(),
            vec![ideal_of(&u, &[vec![0], vec![2]])],
        )
        .unwrap();
        assert!(!f.linear.holds);
        match preradical_of_filter(&f, &u) {
            Err(Error::NotLinear(_)) => {}
            other => panic!("expected NotLinear, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn t2f2_filter_counts_are_stable() {
        let r = Arc::new(FiniteRing::builtin("t2f2").unwrap().unwrap());
        let filters = enumerate_filters(&r).unwrap();
        let again = enumerate_filters(&r).unwrap();
        assert_eq!(filters.len(), again.len());
        assert!(filters.iter().zip(&again).all(|(a, b)| a == b));
        assert!(filters.iter().all(|f| f.linear.holds));
    }
}
