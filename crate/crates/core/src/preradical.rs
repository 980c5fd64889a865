//! Preradical tables: an assignment of a fully invariant submodule to every
//! universe representative, natural with respect to every cached hom.
//!
//! All semantics are relative to the universe the table was built over;
//! trait reports say so. Lattice operations preserve naturality by the usual
//! sum/intersection argument, so only externally supplied values and the
//! pullback-based product/coproduct are re-verified.

use crate::error::{Error, Result};
use crate::hom::maps_into;
use crate::submodule::Submodule;
use crate::universe::Universe;
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone)]
pub struct PreradicalTable {
    universe: Arc<Universe>,
    values: Vec<Submodule>,
}

impl std::fmt::Debug for PreradicalTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut d = f.debug_map();
        for (i, v) in self.values.iter().enumerate() {
            d.entry(&self.universe.label(i), &v.elements);
        }
        d.finish()
    }
}

impl PartialEq for PreradicalTable {
    fn eq(&self, other: &Self) -> bool {
        self.universe.same_as(&other.universe) && self.values == other.values
    }
}
impl Eq for PreradicalTable {}

#[derive(Clone, Debug, Serialize)]
pub struct TraitWitness {
    pub rep: usize,
    pub module: String,
    /// elements of the offending submodule, when one is involved
    pub sub: Option<Vec<Vec<u64>>>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TraitFlag {
    pub holds: bool,
    pub witness: Option<TraitWitness>,
}

impl TraitFlag {
    fn pass() -> Self {
        TraitFlag { holds: true, witness: None }
    }
    fn fail(w: TraitWitness) -> Self {
        TraitFlag { holds: false, witness: Some(w) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TraitReport {
    pub relative_to: String,
    pub idempotent: TraitFlag,
    pub radical: TraitFlag,
    pub left_exact: TraitFlag,
    pub prehereditary: TraitFlag,
    pub essentially_idempotent: TraitFlag,
    pub essentially_coidempotent: TraitFlag,
    pub strongly_nilpotent: TraitFlag,
    pub costable: TraitFlag,
    pub autocostable: TraitFlag,
}

impl PreradicalTable {
    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn value(&self, i: usize) -> &Submodule {
        &self.values[i]
    }

    pub fn values(&self) -> &[Submodule] {
        &self.values
    }

    pub fn new(universe: Arc<Universe>, values: Vec<Submodule>) -> Result<Self> {
        let t = PreradicalTable { universe, values };
        t.verify()?;
        Ok(t)
    }

    fn unchecked(universe: Arc<Universe>, values: Vec<Submodule>) -> Self {
        let t = PreradicalTable { universe, values };
        debug_assert!(t.verify().is_ok());
        t
    }

    /// Naturality across every cached hom; full invariance is the i = j case.
    pub fn verify(&self) -> Result<()> {
        let u = &self.universe;
        if self.values.len() != u.len() {
            return Err(Error::InvalidParameter(format!(
                "table has {} values for {} representatives",
                self.values.len(),
                u.len()
            )));
        }
        for (i, v) in self.values.iter().enumerate() {
            if u.entry_for(i, v).is_none() {
                return Err(Error::NotSubmodule(format!(
                    "value at {} is not a submodule of the representative",
                    u.label(i)
                )));
            }
        }
        for i in 0..u.len() {
            for j in 0..u.len() {
                for f in u.hom(i, j) {
                    if !maps_into(f, &self.values[i], &self.values[j]) {
                        return Err(Error::NotFullyInvariant(format!(
                            "naturality fails along a hom {} -> {}",
                            u.label(i),
                            u.label(j)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn zero(u: &Arc<Universe>) -> Self {
        let values = (0..u.len()).map(|i| Submodule::zero_sub(u.rep(i))).collect();
        PreradicalTable::unchecked(u.clone(), values)
    }

    pub fn one(u: &Arc<Universe>) -> Self {
        let values = (0..u.len()).map(|i| Submodule::full(u.rep(i))).collect();
        PreradicalTable::unchecked(u.clone(), values)
    }

    pub fn socle(u: &Arc<Universe>) -> Result<Self> {
        PreradicalTable::new(u.clone(), u.socles.clone())
    }

    pub fn jacobson(u: &Arc<Universe>) -> Result<Self> {
        PreradicalTable::new(u.clone(), u.radicals.clone())
    }

    pub fn singular(u: &Arc<Universe>) -> Result<Self> {
        PreradicalTable::new(u.clone(), u.singulars.clone())
    }

    fn require_fully_invariant(u: &Universe, m: usize, n: &Submodule) -> Result<()> {
        match u.entry_for(m, n) {
            None => Err(Error::NotSubmodule(format!(
                "not a submodule of {}",
                u.label(m)
            ))),
            Some(e) if !e.fully_invariant => Err(Error::NotFullyInvariant(format!(
                "in {}",
                u.label(m)
            ))),
            _ => Ok(()),
        }
    }

    /// Least preradical sending rep `m` to `n`: K ↦ Σ { f(n) : f ∈ Hom(m, K) }.
    pub fn alpha(u: &Arc<Universe>, m: usize, n: &Submodule) -> Result<Self> {
        Self::require_fully_invariant(u, m, n)?;
        let mut values = Vec::with_capacity(u.len());
        for k in 0..u.len() {
            let mut acc = Submodule::zero_sub(u.rep(k));
            for f in u.hom(m, k) {
                acc = Submodule::sum(u.rep(k), &acc, &f.image_of(n));
            }
            values.push(acc);
        }
        PreradicalTable::new(u.clone(), values)
    }

    /// Greatest preradical sending rep `m` to `n`: K ↦ ⋂ { f⁻¹(n) : f ∈ Hom(K, m) }.
    pub fn omega(u: &Arc<Universe>, m: usize, n: &Submodule) -> Result<Self> {
        Self::require_fully_invariant(u, m, n)?;
        let mut values = Vec::with_capacity(u.len());
        for k in 0..u.len() {
            let mut acc = Submodule::full(u.rep(k));
            for f in u.hom(k, m) {
                acc = Submodule::intersect(u.rep(k), &acc, &f.preimage_of(n));
            }
            values.push(acc);
        }
        PreradicalTable::new(u.clone(), values)
    }

    pub fn trace_of(u: &Arc<Universe>, m: usize) -> Result<Self> {
        let full = Submodule::full(u.rep(m));
        Self::alpha(u, m, &full)
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe)
            || self.universe.same_as(&other.universe)
        {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.leq(b)))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let u = &self.universe;
        let values = (0..u.len())
            .map(|i| Submodule::sum(u.rep(i), &self.values[i], &other.values[i]))
            .collect();
        Ok(PreradicalTable::unchecked(u.clone(), values))
    }

    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let u = &self.universe;
        let values = (0..u.len())
            .map(|i| Submodule::intersect(u.rep(i), &self.values[i], &other.values[i]))
            .collect();
        Ok(PreradicalTable::unchecked(u.clone(), values))
    }

    pub fn join_all(u: &Arc<Universe>, family: &[&Self]) -> Result<Self> {
        let mut acc = PreradicalTable::zero(u);
        for t in family {
            acc = acc.join(t)?;
        }
        Ok(acc)
    }

    pub fn meet_all(u: &Arc<Universe>, family: &[&Self]) -> Result<Self> {
        let mut acc = PreradicalTable::one(u);
        for t in family {
            acc = acc.meet(t)?;
        }
        Ok(acc)
    }

    /// (σ·τ)(M) = σ(τ(M)), computed by classifying τ(M) and pushing the
    /// value of σ forward along the embedding.
    pub fn prod(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let u = &self.universe;
        let mut values = Vec::with_capacity(u.len());
        for i in 0..u.len() {
            let e = u
                .entry_for(i, &other.values[i])
                .expect("table values are cached submodules");
            let (r, emb) = match (e.rep, e.emb.as_ref()) {
                (Some(r), Some(emb)) => (r, emb),
                _ => {
                    return Err(Error::NotInUniverse(format!(
                        "a value inside {} has no representative",
                        u.label(i)
                    )))
                }
            };
            values.push(emb.image_of(&self.values[r]));
        }
        PreradicalTable::new(u.clone(), values)
    }

    /// (σ:τ)(M) = preimage of τ(M/σ(M)) under the projection.
    pub fn coprod(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let u = &self.universe;
        let mut values = Vec::with_capacity(u.len());
        for i in 0..u.len() {
            let e = u
                .entry_for(i, &self.values[i])
                .expect("table values are cached submodules");
            let (q, proj) = match (e.quot_rep, e.proj.as_ref()) {
                (Some(q), Some(p)) => (q, p),
                _ => return Err(Error::ClosureMissing("quotients".into())),
            };
            values.push(proj.preimage_of(&other.values[q]));
        }
        PreradicalTable::new(u.clone(), values)
    }

    pub fn is_torsion(&self, i: usize) -> bool {
        self.values[i].is_full()
    }

    pub fn is_torsion_free(&self, i: usize) -> bool {
        self.values[i].is_zero()
    }

    pub fn torsion_reps(&self) -> Vec<usize> {
        (0..self.universe.len())
            .filter(|&i| self.is_torsion(i))
            .collect()
    }

    /// Greatest idempotent preradical below σ: the trace of the σ-torsion
    /// class, M ↦ Σ { N ≤ M : the class of N is σ-torsion }.
    pub fn hat(&self) -> Result<Self> {
        let u = &self.universe;
        let torsion: Vec<bool> = (0..u.len()).map(|i| self.is_torsion(i)).collect();
        let mut values = Vec::with_capacity(u.len());
        for i in 0..u.len() {
            let mut acc = Submodule::zero_sub(u.rep(i));
            for e in u.sub_entries(i) {
                let r = e.rep.ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
                if torsion[r] {
                    acc = Submodule::sum(u.rep(i), &acc, &e.sub);
                }
            }
            values.push(acc);
        }
        Ok(PreradicalTable::unchecked(u.clone(), values))
    }

    /// Least radical above σ: M ↦ ⋂ { N ≤ M : σ(M/N) = 0 }.
    pub fn bar(&self) -> Result<Self> {
        let u = &self.universe;
        let mut values = Vec::with_capacity(u.len());
        for i in 0..u.len() {
            let mut acc = Submodule::full(u.rep(i));
            for e in u.sub_entries(i) {
                let q = e
                    .quot_rep
                    .ok_or_else(|| Error::ClosureMissing("quotients".into()))?;
                if self.values[q].is_zero() {
                    acc = Submodule::intersect(u.rep(i), &acc, &e.sub);
                }
            }
            values.push(acc);
        }
        Ok(PreradicalTable::unchecked(u.clone(), values))
    }

    /// Least left exact preradical above σ: M ↦ σ(E(M)) ∩ M.
    pub fn tilde(&self) -> Result<Self> {
        let u = &self.universe;
        let mut values = Vec::with_capacity(u.len());
        for i in 0..u.len() {
            let (hi, emb) = u.hull_of(i)?;
            values.push(emb.preimage_of(&self.values[*hi]));
        }
        PreradicalTable::new(u.clone(), values)
    }

    /// Greatest essentially idempotent preradical below σ. Forced-move
    /// fixpoint: while some rep M has τ(M) ≠ 0 but hat(τ)(M) = 0, any
    /// essentially idempotent table below τ vanishes on M, so τ can be cut
    /// to τ ∧ ω^M_0 without passing below the target.
    pub fn circ(&self) -> Result<Self> {
        let u = &self.universe;
        let mut t = self.clone();
        loop {
            let h = t.hat()?;
            let bad = (0..u.len())
                .find(|&i| !t.values[i].is_zero() && h.values[i].is_zero());
            match bad {
                None => return Ok(t),
                Some(i) => {
                    let zero = Submodule::zero_sub(u.rep(i));
                    let cut = PreradicalTable::omega(u, i, &zero)?;
                    t = t.meet(&cut)?;
                }
            }
        }
    }

    /// Least prehereditary preradical above σ. Forced-move fixpoint: while
    /// some σ-torsion rep M has a submodule whose class N is not torsion,
    /// any prehereditary table above τ must make N torsion, so join α^N_N.
    pub fn square(&self) -> Result<Self> {
        let u = &self.universe;
        let mut t = self.clone();
        'outer: loop {
            for i in 0..u.len() {
                if !t.is_torsion(i) {
                    continue;
                }
                for e in u.sub_entries(i) {
                    let r = e.rep.ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
                    if !t.is_torsion(r) {
                        let grow = PreradicalTable::trace_of(u, r)?;
                        t = t.join(&grow)?;
                        continue 'outer;
                    }
                }
            }
            return Ok(t);
        }
    }

    /// Least σ-pure submodule of rep `i` containing `n`:
    /// ⋂ { K ≤ M : n ⊆ K, σ(M/K) = 0 }.
    pub fn purification(&self, i: usize, n: &Submodule) -> Result<Submodule> {
        let u = &self.universe;
        if u.entry_for(i, n).is_none() {
            return Err(Error::NotSubmodule(format!("in {}", u.label(i))));
        }
        let mut acc = Submodule::full(u.rep(i));
        for e in u.sub_entries(i) {
            if !n.leq(&e.sub) {
                continue;
            }
            let q = e
                .quot_rep
                .ok_or_else(|| Error::ClosureMissing("quotients".into()))?;
            if self.values[q].is_zero() {
                acc = Submodule::intersect(u.rep(i), &acc, &e.sub);
            }
        }
        Ok(acc)
    }

    /// Classify the σ-injective hull of rep `i` (the purification of the
    /// image of M inside E(M)): returns the rep index of E_σ and the
    /// purification as a submodule of the hull rep.
    pub(crate) fn sigma_hull_class(&self, i: usize) -> Result<(usize, Submodule)> {
        let u = &self.universe;
        let (hi, emb) = u.hull_of(i)?;
        let pur = self.purification(*hi, &emb.image())?;
        let e = u
            .entry_for(*hi, &pur)
            .expect("purification is a cached submodule");
        let r = e.rep.ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
        Ok((r, pur))
    }

    pub fn traits(&self) -> Result<TraitReport> {
        let u = &self.universe;
        let witness = |i: usize, sub: Option<&Submodule>, detail: String| TraitWitness {
            rep: i,
            module: u.label(i).to_string(),
            sub: sub.map(|s| s.elements.clone()),
            detail,
        };

        let prod = self.prod(self)?;
        let idempotent = match (0..u.len()).find(|&i| prod.values[i] != self.values[i]) {
            None => TraitFlag::pass(),
            Some(i) => TraitFlag::fail(witness(
                i,
                Some(&prod.values[i]),
                "value of the squared table differs here".into(),
            )),
        };

        let copr = self.coprod(self)?;
        let radical = match (0..u.len()).find(|&i| copr.values[i] != self.values[i]) {
            None => TraitFlag::pass(),
            Some(i) => TraitFlag::fail(witness(
                i,
                Some(&copr.values[i]),
                "the value is not the full preimage of the quotient value".into(),
            )),
        };

        let mut left_exact = TraitFlag::pass();
        'le: for i in 0..u.len() {
            for e in u.sub_entries(i) {
                let (r, emb) = match (e.rep, e.emb.as_ref()) {
                    (Some(r), Some(emb)) => (r, emb),
                    _ => return Err(Error::ClosureMissing("submodules".into())),
                };
                let inside = emb.image_of(&self.values[r]);
                if inside != Submodule::intersect(u.rep(i), &e.sub, &self.values[i]) {
                    left_exact = TraitFlag::fail(witness(
                        i,
                        Some(&e.sub),
                        "submodule where the value differs from the intersection".into(),
                    ));
                    break 'le;
                }
            }
        }

        let mut prehereditary = TraitFlag::pass();
        'ph: for i in 0..u.len() {
            if !self.is_torsion(i) {
                continue;
            }
            for e in u.sub_entries(i) {
                let r = e.rep.ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
                if !self.is_torsion(r) {
                    prehereditary = TraitFlag::fail(witness(
                        i,
                        Some(&e.sub),
                        "torsion module with a non-torsion submodule class".into(),
                    ));
                    break 'ph;
                }
            }
        }

        let hat = self.hat()?;
        let essentially_idempotent = match (0..u.len())
            .find(|&i| !self.values[i].is_zero() && hat.values[i].is_zero())
        {
            None => TraitFlag::pass(),
            Some(i) => TraitFlag::fail(witness(
                i,
                None,
                "nonzero value but the greatest idempotent below vanishes".into(),
            )),
        };

        let bar = self.bar()?;
        let essentially_coidempotent = match (0..u.len())
            .find(|&i| bar.values[i].is_full() && !self.values[i].is_full())
        {
            None => TraitFlag::pass(),
            Some(i) => TraitFlag::fail(witness(
                i,
                None,
                "least radical above is full but the value is proper".into(),
            )),
        };

        let strongly_nilpotent = match (0..u.len()).find(|&i| !hat.values[i].is_zero()) {
            None => TraitFlag::pass(),
            Some(i) => TraitFlag::fail(witness(
                i,
                Some(&hat.values[i]),
                "the greatest idempotent below is nonzero here".into(),
            )),
        };

        let mut costable = TraitFlag::pass();
        for i in 0..u.len() {
            if !self.is_torsion_free(i) {
                continue;
            }
            let (hi, _) = u.hull_of(i)?;
            if !self.values[*hi].is_zero() {
                costable = TraitFlag::fail(witness(
                    i,
                    None,
                    "torsion-free module whose injective hull is not torsion-free".into(),
                ));
                break;
            }
        }

        let mut autocostable = TraitFlag::pass();
        for i in 0..u.len() {
            if !self.is_torsion_free(i) {
                continue;
            }
            let (r, _) = self.sigma_hull_class(i)?;
            if !self.values[r].is_zero() {
                autocostable = TraitFlag::fail(witness(
                    i,
                    None,
                    "torsion-free module whose relative hull is not torsion-free".into(),
                ));
                break;
            }
        }

        Ok(TraitReport {
            relative_to: format!(
                "universe over {} with {} representatives",
                u.ring.name,
                u.len()
            ),
            idempotent,
            radical,
            left_exact,
            prehereditary,
            essentially_idempotent,
            essentially_coidempotent,
            strongly_nilpotent,
            costable,
            autocostable,
        })
    }
}

impl TraitReport {
    /// Re-verify every negative flag's witness against the table.
    pub fn verify(&self, t: &PreradicalTable) -> Result<bool> {
        let u = t.universe();
        let sub_of = |i: usize, elems: &Option<Vec<Vec<u64>>>| -> Option<Submodule> {
            elems.as_ref().map(|e| Submodule::from_elements(u.rep(i), e))
        };
        if let Some(w) = &self.idempotent.witness {
            let p = t.prod(t)?;
            if p.value(w.rep) == t.value(w.rep) {
                return Ok(false);
            }
        }
        if let Some(w) = &self.radical.witness {
            let c = t.coprod(t)?;
            if c.value(w.rep) == t.value(w.rep) {
                return Ok(false);
            }
        }
        if let Some(w) = &self.left_exact.witness {
            let sub = sub_of(w.rep, &w.sub).ok_or_else(|| {
                Error::InvalidParameter("left exact witness lacks a submodule".into())
            })?;
            let e = u
                .entry_for(w.rep, &sub)
                .ok_or_else(|| Error::NotSubmodule("witness submodule".into()))?;
            let (r, emb) = (e.rep.unwrap(), e.emb.as_ref().unwrap());
            if emb.image_of(t.value(r))
                == Submodule::intersect(u.rep(w.rep), &e.sub, t.value(w.rep))
            {
                return Ok(false);
            }
        }
        if let Some(w) = &self.prehereditary.witness {
            let sub = sub_of(w.rep, &w.sub).ok_or_else(|| {
                Error::InvalidParameter("prehereditary witness lacks a submodule".into())
            })?;
            let e = u
                .entry_for(w.rep, &sub)
                .ok_or_else(|| Error::NotSubmodule("witness submodule".into()))?;
            if !(t.is_torsion(w.rep) && !t.is_torsion(e.rep.unwrap())) {
                return Ok(false);
            }
        }
        if let Some(w) = &self.essentially_idempotent.witness {
            let h = t.hat()?;
            if !( !t.value(w.rep).is_zero() && h.value(w.rep).is_zero() ) {
                return Ok(false);
            }
        }
        if let Some(w) = &self.essentially_coidempotent.witness {
            let b = t.bar()?;
            if !(b.value(w.rep).is_full() && !t.value(w.rep).is_full()) {
                return Ok(false);
            }
        }
        if let Some(w) = &self.strongly_nilpotent.witness {
            let h = t.hat()?;
            if h.value(w.rep).is_zero() {
                return Ok(false);
            }
        }
        if let Some(w) = &self.costable.witness {
            let (hi, _) = u.hull_of(w.rep)?;
            if !(t.is_torsion_free(w.rep) && !t.value(*hi).is_zero()) {
                return Ok(false);
            }
        }
        if let Some(w) = &self.autocostable.witness {
            let (r, _) = t.sigma_hull_class(w.rep)?;
            if !(t.is_torsion_free(w.rep) && !t.value(r).is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Every naturality-satisfying table over the universe, in lexicographic
/// order of per-rep candidate choices. The candidate space (product of
/// fully invariant submodule counts) must fit the budget.
pub fn enumerate_preradicals(
    u: &Arc<Universe>,
    budget: usize,
) -> Result<Vec<PreradicalTable>> {
    let candidates: Vec<Vec<&Submodule>> = (0..u.len())
        .map(|i| {
            u.sub_entries(i)
                .iter()
                .filter(|e| e.fully_invariant)
                .map(|e| &e.sub)
                .collect()
        })
        .collect();
    let mut space: usize = 1;
    for c in &candidates {
        space = space.saturating_mul(c.len());
    }
    if space > budget {
        return Err(Error::EnumerationBudget { budget, candidates: space });
    }
    let n = u.len();
    let mut out = Vec::new();
    let mut chosen: Vec<&Submodule> = Vec::with_capacity(n);

    fn consistent(u: &Universe, chosen: &[&Submodule], j: usize) -> bool {
        for i in 0..=j {
            for f in u.hom(i, j) {
                if !maps_into(f, chosen[i], chosen[j]) {
                    return false;
                }
            }
            for f in u.hom(j, i) {
                if !maps_into(f, chosen[j], chosen[i]) {
                    return false;
                }
            }
        }
        true
    }

    fn rec<'a>(
        u: &Arc<Universe>,
        candidates: &'a [Vec<&'a Submodule>],
        chosen: &mut Vec<&'a Submodule>,
        out: &mut Vec<PreradicalTable>,
    ) {
        let j = chosen.len();
        if j == candidates.len() {
            let values = chosen.iter().map(|s| (*s).clone()).collect();
            out.push(PreradicalTable::unchecked(u.clone(), values));
            return;
        }
        for s in &candidates[j] {
            chosen.push(s);
            if consistent(u, chosen, j) {
                rec(u, candidates, chosen, out);
            }
            chosen.pop();
        }
    }

    rec(u, &candidates, &mut chosen, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;
    use crate::universe::ClosurePolicy;

    fn univ(name: &str, bound: usize) -> Arc<Universe> {
        let r = Arc::new(FiniteRing::builtin(name).unwrap().unwrap());
        Arc::new(Universe::build(r, &[], ClosurePolicy::with_bound(bound)).unwrap())
    }

    fn u4() -> Arc<Universe> {
        univ("z4", 2)
    }

    #[test]
    fn named_tables_verify() {
        let u = u4();
        for t in [
            PreradicalTable::zero(&u),
            PreradicalTable::one(&u),
            PreradicalTable::socle(&u).unwrap(),
            PreradicalTable::jacobson(&u).unwrap(),
            PreradicalTable::singular(&u).unwrap(),
        ] {
            t.verify().unwrap();
        }
    }

    #[test]
    fn alpha_and_omega_pin_their_module() {
        let u = u4();
        let z4 = u.rep_by_label("R").unwrap();
        let two = Submodule::cyclic(u.rep(z4), &[2]);
        let a = PreradicalTable::alpha(&u, z4, &two).unwrap();
        assert_eq!(*a.value(z4), two);
        let o = PreradicalTable::omega(&u, z4, &two).unwrap();
        assert_eq!(*o.value(z4), two);
        assert!(a.leq(&o).unwrap());
        // alpha with zero value is the zero table, omega with full is one
        let z = Submodule::zero_sub(u.rep(z4));
        assert_eq!(
            PreradicalTable::alpha(&u, z4, &z).unwrap(),
            PreradicalTable::zero(&u)
        );
        let f = Submodule::full(u.rep(z4));
        assert_eq!(
            PreradicalTable::omega(&u, z4, &f).unwrap(),
            PreradicalTable::one(&u)
        );
        // trace of the regular module generates everything
        assert_eq!(
            PreradicalTable::trace_of(&u, z4).unwrap(),
            PreradicalTable::one(&u)
        );
    }

    #[test]
    fn omega_of_simple_kernels() {
        let u = u4();
        let z2 = u.rep_by_label("Z2").unwrap();
        let z4 = u.rep_by_label("R").unwrap();
        let zero = Submodule::zero_sub(u.rep(z2));
        let o = PreradicalTable::omega(&u, z2, &zero).unwrap();
        // both homs Z4 -> Z2 have kernel 2Z4; their intersection survives
        assert_eq!(*o.value(z4), Submodule::cyclic(u.rep(z4), &[2]));
    }

    #[test]
    fn alpha_rejects_non_invariant_submodules() {
        let u = u4();
        let m = u.rep_by_label("Z2+Z4").unwrap();
        // the copy Z2 x 0 is not fully invariant in Z2 + Z4
        let sub = Submodule::cyclic(u.rep(m), &[1, 0]);
        match PreradicalTable::alpha(&u, m, &sub) {
            Err(Error::NotFullyInvariant(_)) => {}
            other => panic!("expected full invariance rejection, got {:?}", other),
        }
    }

    #[test]
    fn lattice_examples() {
        let u = u4();
        let soc = PreradicalTable::socle(&u).unwrap();
        let jac = PreradicalTable::jacobson(&u).unwrap();
        let z4 = u.rep_by_label("R").unwrap();
        let two = Submodule::cyclic(u.rep(z4), &[2]);
        assert_eq!(*soc.meet(&jac).unwrap().value(z4), two);
        assert_eq!(soc.join(&PreradicalTable::zero(&u)).unwrap(), soc);
        assert_eq!(soc.meet(&PreradicalTable::one(&u)).unwrap(), soc);
    }

    #[test]
    fn prod_and_coprod_examples() {
        let u = u4();
        let soc = PreradicalTable::socle(&u).unwrap();
        let jac = PreradicalTable::jacobson(&u).unwrap();
        assert_eq!(soc.prod(&soc).unwrap(), soc);
        let z4 = u.rep_by_label("R").unwrap();
        assert!(jac.prod(&jac).unwrap().value(z4).is_zero());
        let t = PreradicalTable::singular(&u).unwrap();
        assert_eq!(PreradicalTable::zero(&u).coprod(&t).unwrap(), t);
    }

    #[test]
    fn hat_bar_tilde_examples() {
        let u = u4();
        let one = PreradicalTable::one(&u);
        assert_eq!(one.hat().unwrap(), one);
        let soc = PreradicalTable::socle(&u).unwrap();
        let z4 = u.rep_by_label("R").unwrap();
        assert!(soc.bar().unwrap().value(z4).is_full());
        let jac = PreradicalTable::jacobson(&u).unwrap();
        assert_eq!(jac.bar().unwrap(), jac);
        let z2 = u.rep_by_label("Z2").unwrap();
        assert!(soc.tilde().unwrap().value(z2).is_full());
        assert_eq!(soc.tilde().unwrap(), soc);
    }

    #[test]
    fn circ_examples() {
        let u = u4();
        let soc = PreradicalTable::socle(&u).unwrap();
        assert_eq!(soc.circ().unwrap(), soc);
        let jac = PreradicalTable::jacobson(&u).unwrap();
        assert_eq!(jac.circ().unwrap(), PreradicalTable::zero(&u));
    }

    #[test]
    fn square_fixes_jacobson_over_max_rings() {
        let u = u4();
        let jac = PreradicalTable::jacobson(&u).unwrap();
        assert_eq!(jac.square().unwrap(), jac);
        let soc = PreradicalTable::socle(&u).unwrap();
        assert_eq!(soc.square().unwrap(), soc);
    }

    #[test]
    fn square_grows_trace_of_projective() {
        let u = univ("t2f2", 2);
        // the length-2 indecomposable projective
        let p = (0..u.len())
            .find(|&i| u.rep(i).order() == 4 && u.reps[i].signature.len() == 1)
            .unwrap();
        let tr = PreradicalTable::trace_of(&u, p).unwrap();
        assert!(tr.is_torsion(p));
        let socp = crate::submodule::socle(u.rep(p));
        let s1 = u.entry_for(p, &socp).unwrap().rep.unwrap();
        assert!(!tr.is_torsion(s1), "the socle class must not be torsion");
        let sq = tr.square().unwrap();
        assert!(tr.leq(&sq).unwrap() && tr != sq, "square must strictly grow");
        assert!(sq.traits().unwrap().prehereditary.holds);
    }

    #[test]
    fn counterexample_over_z4xz4() {
        let u = univ("z4xz4", 1);
        let r = u.regular_rep();
        // I = Z4 x 2Z4 inside the regular module
        let m = u.rep(r);
        let i_sub = Submodule::from_generators(m, &[vec![1, 0], vec![0, 2]]);
        assert_eq!(i_sub.order(), 8);
        let a = PreradicalTable::alpha(&u, r, &i_sub).unwrap();
        // the copy 0 x Z4: the rep of that class has e1 acting as zero
        let side = (0..u.len())
            .find(|&i| {
                u.rep(i).factors == vec![4] && u.rep(i).action[0] == vec![vec![0]]
            })
            .unwrap();
        // alpha at 0 x Z4 is 0 x 2Z4, one proper nonzero submodule
        assert_eq!(*a.value(side), Submodule::cyclic(u.rep(side), &[2]));
        let hat = a.hat().unwrap();
        assert!(hat.value(side).is_zero());
        assert_eq!(hat.value(r).order(), 4);
        assert_eq!(
            *hat.value(r),
            Submodule::from_generators(m, &[vec![1, 0]])
        );
        let traits = a.traits().unwrap();
        assert!(!traits.essentially_idempotent.holds);
        assert_eq!(
            traits.essentially_idempotent.witness.as_ref().unwrap().rep,
            side
        );
        assert!(traits.verify(&a).unwrap());
    }

    #[test]
    fn traits_of_named_tables() {
        let u = u4();
        let zero = PreradicalTable::zero(&u);
        let t = zero.traits().unwrap();
        assert!(t.idempotent.holds && t.radical.holds && t.left_exact.holds);
        let jac = PreradicalTable::jacobson(&u).unwrap();
        let t = jac.traits().unwrap();
        assert!(t.prehereditary.holds);
        assert!(t.strongly_nilpotent.holds);
        assert!(!t.idempotent.holds);
        assert!(t.verify(&jac).unwrap());
        let soc = PreradicalTable::socle(&u).unwrap();
        let t = soc.traits().unwrap();
        assert!(t.idempotent.holds && t.left_exact.holds && !t.radical.holds);
    }

    #[test]
    fn enumerate_tiny() {
        let u = univ("z2", 1);
        let all = enumerate_preradicals(&u, 1000).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], PreradicalTable::zero(&u));
        assert_eq!(all[1], PreradicalTable::one(&u));
        for t in &all {
            t.verify().unwrap();
        }
    }

    #[test]
    fn enumerate_budget_error() {
        let u = u4();
        match enumerate_preradicals(&u, 3) {
            Err(Error::EnumerationBudget { budget: 3, candidates }) => {
                assert!(candidates > 3);
            }
            other => panic!("expected a budget error, got {:?}", other.map(|v| v.len())),
        }
    }

    #[test]
    fn enumerate_u4_is_stable_and_natural() {
        let u = u4();
        let all = enumerate_preradicals(&u, 100_000).unwrap();
        let again = enumerate_preradicals(&u, 100_000).unwrap();
        assert_eq!(all.len(), again.len());
        assert!(all.iter().zip(&again).all(|(a, b)| a == b));
        for t in &all {
            t.verify().unwrap();
        }
        // the five named tables all appear
        for named in [
            PreradicalTable::zero(&u),
            PreradicalTable::one(&u),
            PreradicalTable::socle(&u).unwrap(),
            PreradicalTable::jacobson(&u).unwrap(),
            PreradicalTable::singular(&u).unwrap(),
        ] {
            assert!(all.contains(&named));
        }
    }
}
