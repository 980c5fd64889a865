//! Submodules of a finite module, held both as a canonical integer lattice
//! (for identity and hashing) and as the sorted list of their elements.

use crate::arith::{self, Mat};
use crate::error::{Error, Result};
use crate::module::FinModule;
use crate::ring;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    /// Ambient box moduli, kept to guard against mixing ambients.
    pub factors: Vec<u64>,
    /// Canonical HNF rows of the preimage lattice in `Z^k`. Equal submodules
    /// have equal `canon`.
    pub canon: Vec<Vec<i128>>,
    /// Sorted coordinate vectors.
    pub elements: Vec<Vec<u64>>,
}

impl Submodule {
    /// Additive closure of `gens` together with all ring translates.
    pub fn from_generators(m: &FinModule, gens: &[Vec<u64>]) -> Submodule {
        let k = m.rank();
        let mut rows: Vec<Vec<i128>> = gens
            .iter()
            .map(|g| g.iter().map(|&x| x as i128).collect())
            .collect();
        for (i, &d) in m.factors.iter().enumerate() {
            let mut r = vec![0i128; k];
            r[i] = d as i128;
            rows.push(r);
        }
        let mut h = arith::hnf_rows(&rows, k);
        loop {
            let mut next = h.clone();
            for t in 0..m.ring.rank() {
                let a = crate::module::lift(&m.action[t]);
                for row in &h {
                    next.push(arith::mat_vec(&a, row));
                }
            }
            let h2 = arith::hnf_rows(&next, k);
            if h2 == h {
                break;
            }
            h = h2;
        }
        Submodule::from_lattice(m, h)
    }

    /// Wrap a set of elements already closed under the module operations.
    pub fn from_elements(m: &FinModule, els: &[Vec<u64>]) -> Submodule {
        let k = m.rank();
        let mut rows: Vec<Vec<i128>> = els
            .iter()
            .map(|g| g.iter().map(|&x| x as i128).collect())
            .collect();
        for (i, &d) in m.factors.iter().enumerate() {
            let mut r = vec![0i128; k];
            r[i] = d as i128;
            rows.push(r);
        }
        Submodule::from_lattice(m, arith::hnf_rows(&rows, k))
    }

    fn from_lattice(m: &FinModule, canon: Vec<Vec<i128>>) -> Submodule {
        let gens: Vec<Vec<u64>> = canon
            .iter()
            .map(|r| ring::box_reduce(&m.factors, r))
            .collect();
        let elements = arith::box_closure(&m.factors, &gens);
        Submodule { factors: m.factors.clone(), canon, elements }
    }

    pub fn zero_sub(m: &FinModule) -> Submodule {
        Submodule::from_elements(m, &[])
    }

    pub fn full(m: &FinModule) -> Submodule {
        let k = m.rank();
        let gens: Vec<Vec<u64>> = (0..k)
            .map(|i| (0..k).map(|j| if i == j { 1 } else { 0 }).collect())
            .collect();
        Submodule::from_elements(m, &gens)
    }

    pub fn cyclic(m: &FinModule, x: &[u64]) -> Submodule {
        Submodule::from_generators(m, &[x.to_vec()])
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.order() == self.factors.iter().product::<u64>()
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(x)).is_ok()
    }

    pub fn leq(&self, other: &Submodule) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    pub fn sum(m: &FinModule, a: &Submodule, b: &Submodule) -> Submodule {
        let mut rows = a.canon.clone();
        rows.extend(b.canon.iter().cloned());
        Submodule::from_lattice(m, arith::hnf_rows(&rows, m.rank()))
    }

    pub fn intersect(m: &FinModule, a: &Submodule, b: &Submodule) -> Submodule {
        let els: Vec<Vec<u64>> = a
            .elements
            .iter()
            .filter(|e| b.contains(e))
            .cloned()
            .collect();
        Submodule::from_elements(m, &els)
    }

    /// Deterministic ordering key: size first, then the canonical lattice.
    pub fn sort_key(&self) -> (u64, Vec<i128>) {
        (self.order(), self.canon.iter().flatten().cloned().collect())
    }

    /// Image generators under an integer matrix into a target box.
    pub fn map_by(&self, matrix: &Mat, target: &FinModule) -> Vec<Vec<u64>> {
        self.canon
            .iter()
            .map(|r| ring::box_reduce(&target.factors, &arith::mat_vec(matrix, r)))
            .collect()
    }
}

/// All submodules, sorted by size then lattice. BFS over sums of cyclic
/// submodules.
pub fn submodules(m: &FinModule) -> Vec<Submodule> {
    let mut cyclics: Vec<Submodule> = Vec::new();
    let mut seen = BTreeSet::new();
    for x in m.elements() {
        let c = Submodule::cyclic(m, &x);
        if seen.insert(c.canon.clone()) {
            cyclics.push(c);
        }
    }
    let zero = Submodule::zero_sub(m);
    let mut all: BTreeSet<Vec<Vec<i128>>> = BTreeSet::new();
    let mut out = vec![zero.clone()];
    all.insert(zero.canon.clone());
    let mut frontier = vec![zero];
    while let Some(s) = frontier.pop() {
        for c in &cyclics {
            let t = Submodule::sum(m, &s, c);
            if all.insert(t.canon.clone()) {
                out.push(t.clone());
                frontier.push(t);
            }
        }
    }
    out.sort_by_key(|s| s.sort_key());
    out
}

/// Minimal nonzero submodules. Every minimal submodule is cyclic, so it is
/// enough to scan cyclic ones.
pub fn minimal_nonzero(m: &FinModule) -> Vec<Submodule> {
    let mut cyclics: Vec<Submodule> = Vec::new();
    let mut seen = BTreeSet::new();
    for x in m.elements() {
        let c = Submodule::cyclic(m, &x);
        if !c.is_zero() && seen.insert(c.canon.clone()) {
            cyclics.push(c);
        }
    }
    let mut out: Vec<Submodule> = cyclics
        .iter()
        .filter(|c| {
            !cyclics
                .iter()
                .any(|d| d.order() < c.order() && d.leq(c))
        })
        .cloned()
        .collect();
    out.sort_by_key(|s| s.sort_key());
    out.dedup();
    out
}

/// Sum of all minimal submodules.
pub fn socle(m: &FinModule) -> Submodule {
    let mut acc = Submodule::zero_sub(m);
    for s in minimal_nonzero(m) {
        acc = Submodule::sum(m, &acc, &s);
    }
    acc
}

/// Intersection of all maximal submodules (the whole module if none exist,
/// which only happens for the zero module).
pub fn radical(m: &FinModule, all_subs: &[Submodule]) -> Submodule {
    let full = Submodule::full(m);
    let maximal: Vec<&Submodule> = all_subs
        .iter()
        .filter(|s| {
            s.order() < full.order()
                && !all_subs
                    .iter()
                    .any(|t| t.order() > s.order() && t.order() < full.order() && s.leq(t))
        })
        .collect();
    let mut acc = full;
    for s in maximal {
        acc = Submodule::intersect(m, &acc, s);
    }
    acc
}

/// Is `n` essential in `ambient`, i.e. does it meet every nonzero submodule
/// of `ambient`? It is enough to test cyclic submodules.
pub fn is_essential_within(m: &FinModule, n: &Submodule, ambient: &Submodule) -> bool {
    debug_assert!(n.leq(ambient));
    let zero = m.zero();
    for x in &ambient.elements {
        if *x == zero {
            continue;
        }
        let c = Submodule::cyclic(m, x);
        if !c.elements.iter().any(|e| *e != zero && n.contains(e)) {
            return false;
        }
    }
    true
}

pub fn is_essential(m: &FinModule, n: &Submodule) -> bool {
    is_essential_within(m, n, &Submodule::full(m))
}

/// Left annihilator of an element, as a submodule of the regular module.
pub fn annihilator(m: &FinModule, x: &[u64]) -> Result<Submodule> {
    let g = m.ring.rank();
    let k = m.rank();
    let mut rows: Mat = vec![vec![0i128; g]; k];
    for t in 0..g {
        let ax = m.act_gen(t, x);
        for i in 0..k {
            rows[i][t] = ax[i] as i128;
        }
    }
    let sols =
        arith::congruence_solutions(&rows, &ring::to_i128(&m.factors), g, &m.ring.factors);
    let reg = FinModule::regular(m.ring.clone());
    if sols.is_empty() {
        return Err(Error::ModuleAxiom("annihilator cannot be empty".into()));
    }
    Ok(Submodule::from_elements(&reg, &sols))
}

/// Elements with essential annihilator.
pub fn singular(m: &FinModule) -> Result<Submodule> {
    let reg = FinModule::regular(m.ring.clone());
    let mut els = Vec::new();
    for x in m.elements() {
        let ann = annihilator(m, &x)?;
        if is_essential(&reg, &ann) {
            els.push(x);
        }
    }
    Ok(Submodule::from_elements(m, &els))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn zmod(n: u64, fs: Vec<u64>) -> FinModule {
        FinModule::abelian(Arc::new(FiniteRing::zn(n).unwrap()), fs).unwrap()
    }

    #[test]
    fn lattice_counts_match_group_theory() {
        // Z4 has submodule chain 0 < 2Z4 < Z4
        let m = zmod(4, vec![4]);
        assert_eq!(submodules(&m).len(), 3);
        // Z_p x Z_p has p + 3 subgroups
        let m = zmod(2, vec![2, 2]);
        assert_eq!(submodules(&m).len(), 5);
        let m = zmod(3, vec![3, 3]);
        assert_eq!(submodules(&m).len(), 6);
    }

    #[test]
    fn sum_intersect_are_lattice_ops() {
        let m = zmod(4, vec![2, 4]);
        let subs = submodules(&m);
        for a in &subs {
            for b in &subs {
                let s = Submodule::sum(&m, a, b);
                let i = Submodule::intersect(&m, a, b);
                assert!(a.leq(&s) && b.leq(&s));
                assert!(i.leq(a) && i.leq(b));
                assert_eq!(
                    s.order() as u128 * i.order() as u128,
                    a.order() as u128 * b.order() as u128
                );
            }
        }
    }

    #[test]
    fn closure_under_action() {
        // over t2f2, the cyclic left module generated by e12 is 1-dimensional
        let r = Arc::new(FiniteRing::upper_triangular_2(2).unwrap());
        let m = FinModule::regular(r);
        let c = Submodule::cyclic(&m, &[0, 1, 0]);
        assert_eq!(c.order(), 2);
        // generated by e11: contains e11 and nothing else new (left ideal R.e11)
        let c = Submodule::cyclic(&m, &[1, 0, 0]);
        assert_eq!(c.order(), 2);
        // generated by e22: R.e22 = {0, e22, e12, e12+e22}
        let c = Submodule::cyclic(&m, &[0, 0, 1]);
        assert_eq!(c.order(), 4);
    }

    #[test]
    fn socle_and_radical_of_z8() {
        let m = zmod(8, vec![8]);
        assert_eq!(socle(&m).elements, vec![vec![0], vec![4]]);
        let subs = submodules(&m);
        assert_eq!(radical(&m, &subs).elements, vec![vec![0], vec![2], vec![4], vec![6]]);
    }

    #[test]
    fn essential_detection() {
        let m = zmod(4, vec![4]);
        let two = Submodule::cyclic(&m, &[2]);
        assert!(is_essential(&m, &two));
        let m = zmod(4, vec![2, 4]);
        let two = Submodule::cyclic(&m, &[0, 2]);
        assert!(!is_essential(&m, &two));
        let soc = socle(&m);
        assert!(is_essential(&m, &soc));
    }

    #[test]
    fn annihilator_values() {
        let m = zmod(4, vec![2, 4]);
        let a = annihilator(&m, &[1, 0]).unwrap();
        assert_eq!(a.elements, vec![vec![0], vec![2]]);
        let a = annihilator(&m, &[0, 1]).unwrap();
        assert_eq!(a.elements, vec![vec![0]]);
        let a = annihilator(&m, &[0, 0]).unwrap();
        assert_eq!(a.order(), 4);
    }

    #[test]
    fn singular_of_abelian_groups() {
        // over Z4: essential ideals of Z4 are 2Z4 and Z4; Z(Z4) = {x : 2x=0 or x any} = soc
        let m = zmod(4, vec![4]);
        assert_eq!(singular(&m).unwrap().elements, vec![vec![0], vec![2]]);
        // over Z6 = Z2 x Z3 no proper ideal is essential, so Z(M) = 0
        let m = zmod(6, vec![6]);
        assert!(singular(&m).unwrap().is_zero());
    }
}
