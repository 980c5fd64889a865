//! A finite, isomorphism-deduplicated family of module representatives
//! closed (up to iso) under submodules, quotients, injective hulls and
//! bounded direct sums, with cached hom sets and submodule classifications.
//!
//! Representatives are assembled from a catalog of indecomposable classes;
//! a representative's identity is the sorted multiset of its pieces. Sums of
//! at most `sum_bound` indecomposables are enumerated outright; anything the
//! closure demands beyond that (for instance the regular module, or socles
//! of large sums) is admitted as a forced representative.

use crate::error::{Error, Result};
use crate::hom::{hom_set, maps_into, ModuleHom};
use crate::hull::{injective_hull, is_injective};
use crate::module::{direct_sum, FinModule};
use crate::present::{decompose, is_isomorphic, quotient, submodule_as_module};
use crate::ring::FiniteRing;
use crate::submodule::{self, Submodule};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosurePolicy {
    pub sum_bound: usize,
    pub max_module_size: u64,
    pub submodules: bool,
    pub quotients: bool,
    pub injective_hulls: bool,
    pub direct_sums: bool,
}

impl Default for ClosurePolicy {
    fn default() -> Self {
        ClosurePolicy {
            sum_bound: 2,
            max_module_size: crate::ring::DEFAULT_SIZE_BUDGET,
            submodules: true,
            quotients: true,
            injective_hulls: true,
            direct_sums: true,
        }
    }
}

impl ClosurePolicy {
    pub fn with_bound(sum_bound: usize) -> Self {
        ClosurePolicy { sum_bound, ..Default::default() }
    }

    fn validate(&self) -> Result<()> {
        if self.sum_bound < 1 {
            return Err(Error::InvalidParameter("sum_bound must be at least 1".into()));
        }
        if self.max_module_size > crate::ring::DEFAULT_SIZE_BUDGET {
            return Err(Error::InvalidParameter(format!(
                "max_module_size cannot exceed {}",
                crate::ring::DEFAULT_SIZE_BUDGET
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureCertificate {
    pub submodules: bool,
    pub quotients: bool,
    pub injective_hulls: bool,
    pub direct_sums: bool,
    pub hom_cache: bool,
}

fn shape(m: &FinModule) -> String {
    if m.is_zero() {
        "0".to_string()
    } else {
        m.factors
            .iter()
            .map(|d| format!("Z{}", d))
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// A submodule of a representative together with its classification data.
#[derive(Clone, Debug)]
pub struct SubEntry {
    pub sub: Submodule,
    /// Index of the rep isomorphic to the submodule, with an embedding of
    /// that rep onto the submodule.
    pub rep: Option<usize>,
    pub emb: Option<ModuleHom>,
    /// Index of the rep isomorphic to the quotient, with the projection.
    pub quot_rep: Option<usize>,
    pub proj: Option<ModuleHom>,
    pub fully_invariant: bool,
}

#[derive(Clone, Debug)]
pub struct RepInfo {
    pub module: FinModule,
    pub label: String,
    /// Sorted catalog class ids of the indecomposable pieces.
    pub signature: Vec<usize>,
    /// Injections/projections aligned with `signature`.
    pub part_inj: Vec<ModuleHom>,
    pub part_proj: Vec<ModuleHom>,
}

pub struct Universe {
    pub ring: Arc<FiniteRing>,
    pub policy: ClosurePolicy,
    pub catalog: Vec<FinModule>,
    pub reps: Vec<RepInfo>,
    sig_map: BTreeMap<Vec<usize>, usize>,
    zero_idx: usize,
    regular_idx: usize,
    pub homs: Vec<Vec<Arc<Vec<ModuleHom>>>>,
    pub subs: Vec<Vec<SubEntry>>,
    pub hulls: Vec<Option<(usize, ModuleHom)>>,
    pub socles: Vec<Submodule>,
    pub radicals: Vec<Submodule>,
    pub singulars: Vec<Submodule>,
    pub certificate: ClosureCertificate,
}

const MAX_REPS: usize = 128;

/// Work product of realizing one signature: the module plus aligned
/// injections and projections for its pieces.
struct Realized {
    module: FinModule,
    part_inj: Vec<ModuleHom>,
    part_proj: Vec<ModuleHom>,
}

struct Builder {
    ring: Arc<FiniteRing>,
    policy: ClosurePolicy,
    catalog: Vec<FinModule>,
    forced: BTreeSet<Vec<usize>>,
    realized: BTreeMap<Vec<usize>, Realized>,
    regular_sig: Vec<usize>,
}

fn multisets(n: usize, bound: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if left == 0 {
            return;
        }
        for c in start..n {
            cur.push(c);
            rec(c, n, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(0, n, bound, &mut cur, &mut out);
    out
}

impl Builder {
    /// Match the pieces of `m` against the catalog, extending it when
    /// `grow` is set. Returns the sorted signature with piece isos.
    fn intern(
        &mut self,
        m: &FinModule,
        grow: bool,
    ) -> Result<Option<Vec<(usize, ModuleHom, ModuleHom)>>> {
        let pieces = decompose(m)?;
        let mut tagged: Vec<(usize, ModuleHom, ModuleHom)> = Vec::new();
        for p in pieces {
            let mut found = None;
            for (c, cm) in self.catalog.iter().enumerate() {
                if let Some(iso) = is_isomorphic(&p.module, cm)? {
                    found = Some((c, iso));
                    break;
                }
            }
            let (c, iso) = match found {
                Some(f) => f,
                None if grow => {
                    self.catalog.push(p.module.clone());
                    (self.catalog.len() - 1, ModuleHom::identity(&p.module))
                }
                None => return Ok(None),
            };
            // inj: catalog -> m, proj: m -> catalog
            let back = iso
                .invert()
                .ok_or_else(|| Error::ModuleAxiom("piece iso not invertible".into()))?;
            tagged.push((c, p.inj.compose(&back), iso.compose(&p.proj)));
        }
        tagged.sort_by_key(|(c, _, _)| *c);
        Ok(Some(tagged))
    }

    fn sig_of(tagged: &[(usize, ModuleHom, ModuleHom)]) -> Vec<usize> {
        tagged.iter().map(|(c, _, _)| *c).collect()
    }

    /// Build the module for a signature: the canonical direct sum of catalog
    /// pieces, except that the regular module's class keeps its literal
    /// presentation (so ring and module coordinates agree).
    fn realize(&mut self, sig: &[usize]) -> Result<()> {
        if self.realized.contains_key(sig) {
            return Ok(());
        }
        let r = if sig.is_empty() {
            let module = FinModule::zero_module(self.ring.clone());
            Realized { module, part_inj: vec![], part_proj: vec![] }
        } else if sig == self.regular_sig.as_slice() {
            let module = FinModule::regular(self.ring.clone());
            let tagged = self
                .intern(&module, false)?
                .ok_or_else(|| Error::ModuleAxiom("regular pieces left the catalog".into()))?;
            Realized {
                module,
                part_inj: tagged.iter().map(|(_, i, _)| i.clone()).collect(),
                part_proj: tagged.iter().map(|(_, _, p)| p.clone()).collect(),
            }
        } else if sig.len() == 1 {
            let module = self.catalog[sig[0]].clone();
            let id = ModuleHom::identity(&module);
            Realized { module, part_inj: vec![id.clone()], part_proj: vec![id] }
        } else {
            let parts: Vec<&FinModule> = sig.iter().map(|&c| &self.catalog[c]).collect();
            let total: u64 = parts.iter().map(|p| p.order()).product();
            if total > self.policy.max_module_size {
                return Err(Error::Budget(format!(
                    "direct sum of {} summands has order {}, over the cap {}",
                    sig.len(),
                    total,
                    self.policy.max_module_size
                )));
            }
            let ds = direct_sum(&parts)?;
            Realized { module: ds.module, part_inj: ds.inj, part_proj: ds.proj }
        };
        if r.module.order() > self.policy.max_module_size {
            return Err(Error::Budget(format!(
                "representative of order {} exceeds the cap {}",
                r.module.order(),
                self.policy.max_module_size
            )));
        }
        self.realized.insert(sig.to_vec(), r);
        Ok(())
    }

    fn assemble_sigs(&self) -> Vec<Vec<usize>> {
        let mut sigs: BTreeSet<Vec<usize>> = BTreeSet::new();
        sigs.insert(vec![]);
        sigs.insert(self.regular_sig.clone());
        for f in &self.forced {
            sigs.insert(f.clone());
        }
        if self.policy.direct_sums {
            for s in multisets(self.catalog.len(), self.policy.sum_bound) {
                sigs.insert(s);
            }
        }
        sigs.into_iter().collect()
    }

    /// Record that the closure demands a module of this signature.
    fn demand(&mut self, sig: Vec<usize>) {
        if sig.is_empty() || sig == self.regular_sig {
            return;
        }
        if self.policy.direct_sums && sig.len() <= self.policy.sum_bound {
            return; // the multiset enumeration covers it
        }
        self.forced.insert(sig);
    }
}

impl Universe {
    pub fn build(
        ring: Arc<FiniteRing>,
        seeds: &[FinModule],
        policy: ClosurePolicy,
    ) -> Result<Universe> {
        policy.validate()?;
        if ring.order() > policy.max_module_size {
            return Err(Error::Budget(format!(
                "regular module of order {} exceeds the cap {}",
                ring.order(),
                policy.max_module_size
            )));
        }
        for s in seeds {
            if s.ring != ring {
                return Err(Error::RingMismatch);
            }
        }
        let mut b = Builder {
            ring: ring.clone(),
            policy: policy.clone(),
            catalog: Vec::new(),
            forced: BTreeSet::new(),
            realized: BTreeMap::new(),
            regular_sig: Vec::new(),
        };
        let regular = FinModule::regular(ring.clone());
        let tagged = b.intern(&regular, true)?.expect("catalog grows");
        b.regular_sig = Builder::sig_of(&tagged);
        for s in seeds {
            let tagged = b.intern(s, true)?.expect("catalog grows");
            let sig = Builder::sig_of(&tagged);
            b.demand(sig.clone());
            if !b.policy.direct_sums && sig.len() <= 1 {
                b.forced.insert(sig);
            }
        }
        if !b.policy.direct_sums {
            // still expose the discovered indecomposables themselves
            let classes: Vec<usize> = (0..b.catalog.len()).collect();
            for c in classes {
                b.forced.insert(vec![c]);
            }
        }

        let mut processed: BTreeSet<Vec<usize>> = BTreeSet::new();
        loop {
            let sigs = b.assemble_sigs();
            if sigs.len() > MAX_REPS {
                return Err(Error::Budget(format!(
                    "universe grew to {} representatives (cap {})",
                    sigs.len(),
                    MAX_REPS
                )));
            }
            let pending: Vec<Vec<usize>> = sigs
                .iter()
                .filter(|s| !processed.contains(*s))
                .cloned()
                .collect();
            if pending.is_empty() {
                break;
            }
            for sig in pending {
                b.realize(&sig)?;
                let m = b.realized[&sig].module.clone();
                processed.insert(sig.clone());
                if b.policy.submodules || b.policy.quotients {
                    for sub in submodule::submodules(&m) {
                        if b.policy.submodules {
                            let (sm, _) = submodule_as_module(&m, &sub)?;
                            let t = b.intern(&sm, true)?.expect("catalog grows");
                            b.demand(Builder::sig_of(&t));
                        }
                        if b.policy.quotients {
                            let (q, _) = quotient(&m, &sub)?;
                            let t = b.intern(&q, true)?.expect("catalog grows");
                            b.demand(Builder::sig_of(&t));
                        }
                    }
                }
                if b.policy.injective_hulls {
                    let (e, _) = injective_hull(&m).map_err(|err| match err {
                        Error::Budget(msg) => Error::Budget(format!(
                            "injective hull of a representative: {}",
                            msg
                        )),
                        other => other,
                    })?;
                    let t = b.intern(&e, true)?.expect("catalog grows");
                    b.demand(Builder::sig_of(&t));
                }
            }
        }

        // realize everything that survived and order representatives
        let final_sigs = b.assemble_sigs();
        for sig in &final_sigs {
            b.realize(sig)?;
        }
        let mut order: Vec<Vec<usize>> = final_sigs;
        order.sort_by_key(|sig| {
            let m = &b.realized[sig].module;
            (m.order(), m.factors.clone(), m.action.clone())
        });
        let rep_infos: Vec<RepInfo> = order
            .iter()
            .map(|sig| {
                let r = &b.realized[sig];
                RepInfo {
                    module: r.module.clone(),
                    label: String::new(),
                    signature: sig.clone(),
                    part_inj: r.part_inj.clone(),
                    part_proj: r.part_proj.clone(),
                }
            })
            .collect();
        let mut u = Universe::assemble(ring, policy, b.catalog, rep_infos, b.regular_sig)?;
        u.certificate = u.verify()?;
        Ok(u)
    }

    /// Reconstruct a universe from an explicit representative list (the
    /// deserialization path). Caches are rebuilt, nothing is trusted.
    pub fn from_reps(
        ring: Arc<FiniteRing>,
        reps: Vec<FinModule>,
        policy: ClosurePolicy,
    ) -> Result<Universe> {
        policy.validate()?;
        let mut b = Builder {
            ring: ring.clone(),
            policy: policy.clone(),
            catalog: Vec::new(),
            forced: BTreeSet::new(),
            realized: BTreeMap::new(),
            regular_sig: Vec::new(),
        };
        let regular = FinModule::regular(ring.clone());
        let tagged = b.intern(&regular, true)?.expect("catalog grows");
        b.regular_sig = Builder::sig_of(&tagged);
        let mut infos = Vec::new();
        for m in &reps {
            if m.ring != ring {
                return Err(Error::RingMismatch);
            }
            m.verify()?;
            let tagged = b.intern(m, true)?.expect("catalog grows");
            let sig = Builder::sig_of(&tagged);
            infos.push(RepInfo {
                module: m.clone(),
                label: String::new(),
                signature: sig,
                part_inj: tagged.iter().map(|(_, i, _)| i.clone()).collect(),
                part_proj: tagged.iter().map(|(_, _, p)| p.clone()).collect(),
            });
        }
        let mut u = Universe::assemble(ring, policy, b.catalog, infos, b.regular_sig)?;
        u.certificate = u.verify()?;
        Ok(u)
    }

    fn assemble(
        ring: Arc<FiniteRing>,
        policy: ClosurePolicy,
        catalog: Vec<FinModule>,
        mut reps: Vec<RepInfo>,
        regular_sig: Vec<usize>,
    ) -> Result<Universe> {
        if reps.len() > MAX_REPS {
            return Err(Error::Budget(format!(
                "universe has {} representatives (cap {})",
                reps.len(),
                MAX_REPS
            )));
        }
        let mut sig_map = BTreeMap::new();
        for (i, r) in reps.iter().enumerate() {
            if sig_map.insert(r.signature.clone(), i).is_some() {
                return Err(Error::ModuleAxiom(
                    "two representatives share an isomorphism class".into(),
                ));
            }
        }
        let zero_idx = *sig_map
            .get(&vec![])
            .ok_or_else(|| Error::ModuleAxiom("zero module missing".into()))?;
        let regular_idx = *sig_map
            .get(&regular_sig)
            .ok_or_else(|| Error::ModuleAxiom("regular module missing".into()))?;

        // labels: additive shape, regular gets R, duplicates numbered
        let shapes: Vec<String> = reps.iter().map(|r| shape(&r.module)).collect();
        for i in 0..reps.len() {
            if i == regular_idx {
                reps[i].label = "R".to_string();
                continue;
            }
            let dup: Vec<usize> = (0..reps.len())
                .filter(|&j| j != regular_idx && shapes[j] == shapes[i])
                .collect();
            reps[i].label = if dup.len() == 1 {
                shapes[i].clone()
            } else {
                let k = dup.iter().position(|&j| j == i).unwrap() + 1;
                format!("{}#{}", shapes[i], k)
            };
        }

        let n = reps.len();
        let mut homs: Vec<Vec<Arc<Vec<ModuleHom>>>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(Arc::new(hom_set(&reps[i].module, &reps[j].module)?));
            }
            homs.push(row);
        }

        let mut u = Universe {
            ring,
            policy,
            catalog,
            reps,
            sig_map,
            zero_idx,
            regular_idx,
            homs,
            subs: Vec::new(),
            hulls: Vec::new(),
            socles: Vec::new(),
            radicals: Vec::new(),
            singulars: Vec::new(),
            certificate: ClosureCertificate::default(),
        };

        for i in 0..n {
            let m = u.reps[i].module.clone();
            let ends = u.homs[i][i].clone();
            let mut entries = Vec::new();
            for sub in submodule::submodules(&m) {
                let fully_invariant = ends.iter().all(|f| maps_into(f, &sub, &sub));
                let (sm, incl) = submodule_as_module(&m, &sub)?;
                let (rep, emb) = match u.classify(&sm)? {
                    None => (None, None),
                    Some((ri, iso)) => {
                        let back = iso.invert().ok_or_else(|| {
                            Error::ModuleAxiom("classification iso not invertible".into())
                        })?;
                        (Some(ri), Some(incl.compose(&back)))
                    }
                };
                let (q, proj0) = quotient(&m, &sub)?;
                let (quot_rep, proj) = match u.classify(&q)? {
                    None => (None, None),
                    Some((qi, iso)) => (Some(qi), Some(iso.compose(&proj0))),
                };
                entries.push(SubEntry { sub, rep, emb, quot_rep, proj, fully_invariant });
            }
            u.subs.push(entries);
            u.socles.push(submodule::socle(&m));
            let all: Vec<Submodule> = u.subs[i].iter().map(|e| e.sub.clone()).collect();
            u.radicals.push(submodule::radical(&m, &all));
            u.singulars.push(submodule::singular(&m)?);
        }

        for i in 0..n {
            if !u.policy.injective_hulls {
                u.hulls.push(None);
                continue;
            }
            let (e, emb) = injective_hull(&u.reps[i].module)?;
            let entry = match u.classify(&e)? {
                None => None,
                Some((hi, iso)) => Some((hi, iso.compose(&emb))),
            };
            u.hulls.push(entry);
        }
        Ok(u)
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn policy(&self) -> &ClosurePolicy {
        &self.policy
    }

    pub fn certificate(&self) -> &ClosureCertificate {
        &self.certificate
    }

    pub fn rep(&self, i: usize) -> &FinModule {
        &self.reps[i].module
    }

    pub fn label(&self, i: usize) -> &str {
        &self.reps[i].label
    }

    pub fn zero_rep(&self) -> usize {
        self.zero_idx
    }

    pub fn regular_rep(&self) -> usize {
        self.regular_idx
    }

    pub fn hom(&self, i: usize, j: usize) -> &[ModuleHom] {
        &self.homs[i][j]
    }

    pub fn sub_entries(&self, i: usize) -> &[SubEntry] {
        &self.subs[i]
    }

    pub fn hull_of(&self, i: usize) -> Result<&(usize, ModuleHom)> {
        self.hulls[i]
            .as_ref()
            .ok_or_else(|| Error::ClosureMissing("injective hulls".into()))
    }

    /// Additive shape string, e.g. "Z2+Z4"; "0" for the zero module.
    pub fn shape_of(m: &FinModule) -> String {
        shape(m)
    }

    /// Exact label match first, then additive shape ("Z2+Z4") when unambiguous.
    pub fn rep_by_label(&self, label: &str) -> Option<usize> {
        if let Some(i) = self.reps.iter().position(|r| r.label == label) {
            return Some(i);
        }
        let matches: Vec<usize> = (0..self.reps.len())
            .filter(|&i| shape(&self.reps[i].module) == label)
            .collect();
        match matches.as_slice() {
            [i] => Some(*i),
            _ => None,
        }
    }

    /// Multiset of catalog class ids whose direct sum is rep `i`.
    pub fn signature(&self, i: usize) -> &[usize] {
        &self.reps[i].signature
    }

    pub fn rep_by_signature(&self, sig: &[usize]) -> Option<usize> {
        self.sig_map.get(sig).copied()
    }

    /// Find the entry for a given submodule of rep `i`.
    pub fn entry_for(&self, i: usize, sub: &Submodule) -> Option<&SubEntry> {
        self.subs[i].iter().find(|e| e.sub == *sub)
    }

    /// Identify a module with a representative, producing a witness iso.
    /// Returns None when the module's class is not represented.
    pub fn classify(&self, m: &FinModule) -> Result<Option<(usize, ModuleHom)>> {
        if m.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        for (i, r) in self.reps.iter().enumerate() {
            if r.module == *m {
                return Ok(Some((i, ModuleHom::identity(m))));
            }
        }
        let pieces = decompose(m)?;
        let mut tagged = Vec::new();
        for p in pieces {
            let mut found = None;
            for (c, cm) in self.catalog.iter().enumerate() {
                if let Some(iso) = is_isomorphic(&p.module, cm)? {
                    found = Some((c, iso));
                    break;
                }
            }
            match found {
                None => return Ok(None),
                Some((c, iso)) => tagged.push((c, iso, p)),
            }
        }
        tagged.sort_by_key(|(c, _, _)| *c);
        let sig: Vec<usize> = tagged.iter().map(|(c, _, _)| *c).collect();
        let ri = match self.sig_map.get(&sig) {
            None => return Ok(None),
            Some(&ri) => ri,
        };
        let rep = &self.reps[ri];
        let mut iso = ModuleHom::zero_hom(m, &rep.module);
        for (pos, (_, piso, p)) in tagged.iter().enumerate() {
            iso = iso.add(&rep.part_inj[pos].compose(piso).compose(&p.proj));
        }
        if !iso.is_iso() {
            return Err(Error::ModuleAxiom("assembled classification not an iso".into()));
        }
        Ok(Some((ri, iso)))
    }

    pub fn classify_expect(&self, m: &FinModule) -> Result<(usize, ModuleHom)> {
        self.classify(m)?.ok_or_else(|| {
            Error::NotInUniverse(format!(
                "module with additive factors {:?}",
                m.factors
            ))
        })
    }

    /// Do the two universes describe the same family?
    pub fn same_as(&self, other: &Universe) -> bool {
        self.ring == other.ring
            && self.policy == other.policy
            && self.reps.len() == other.reps.len()
            && self
                .reps
                .iter()
                .zip(&other.reps)
                .all(|(a, b)| a.module == b.module)
    }

    /// Re-verify every certified property from scratch.
    pub fn verify(&self) -> Result<ClosureCertificate> {
        // pairwise non-isomorphic, zero and regular present
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                if is_isomorphic(self.rep(i), self.rep(j))?.is_some() {
                    return Err(Error::ModuleAxiom(format!(
                        "representatives {} and {} are isomorphic",
                        i, j
                    )));
                }
            }
        }
        if !self.rep(self.zero_idx).is_zero() {
            return Err(Error::ModuleAxiom("zero representative wrong".into()));
        }
        let regular = FinModule::regular(self.ring.clone());
        if is_isomorphic(self.rep(self.regular_idx), &regular)?.is_none() {
            return Err(Error::ModuleAxiom("regular representative wrong".into()));
        }
        let mut cert = ClosureCertificate::default();
        cert.submodules = self.policy.submodules;
        cert.quotients = self.policy.quotients;
        for (i, entries) in self.subs.iter().enumerate() {
            let m = self.rep(i);
            for e in entries {
                match (&e.rep, &e.emb) {
                    (Some(ri), Some(emb)) => {
                        if emb.dom != *self.rep(*ri)
                            || !emb.is_injective_map()
                            || emb.image() != e.sub
                        {
                            return Err(Error::ModuleAxiom(format!(
                                "bad submodule witness in rep {}",
                                i
                            )));
                        }
                    }
                    _ => {
                        if self.policy.submodules {
                            cert.submodules = false;
                        }
                    }
                }
                match (&e.quot_rep, &e.proj) {
                    (Some(qi), Some(proj)) => {
                        if proj.cod != *self.rep(*qi)
                            || !proj.is_surjective_map()
                            || proj.kernel() != e.sub
                            || proj.dom != *m
                        {
                            return Err(Error::ModuleAxiom(format!(
                                "bad quotient witness in rep {}",
                                i
                            )));
                        }
                    }
                    _ => {
                        if self.policy.quotients {
                            cert.quotients = false;
                        }
                    }
                }
            }
        }
        cert.injective_hulls = self.policy.injective_hulls;
        for (i, h) in self.hulls.iter().enumerate() {
            match h {
                None => {
                    if self.policy.injective_hulls {
                        cert.injective_hulls = false;
                    }
                }
                Some((hi, emb)) => {
                    let e = self.rep(*hi);
                    if emb.dom != *self.rep(i) || emb.cod != *e || !emb.is_injective_map() {
                        return Err(Error::ModuleAxiom(format!("bad hull witness for rep {}", i)));
                    }
                    if !submodule::is_essential(e, &emb.image()) || !is_injective(e)? {
                        return Err(Error::ModuleAxiom(format!(
                            "hull of rep {} fails verification",
                            i
                        )));
                    }
                }
            }
        }
        cert.direct_sums = self.policy.direct_sums;
        if self.policy.direct_sums {
            for a in &self.reps {
                for b in &self.reps {
                    if a.signature.len() + b.signature.len() <= self.policy.sum_bound {
                        let mut sig = a.signature.clone();
                        sig.extend_from_slice(&b.signature);
                        sig.sort();
                        if !self.sig_map.contains_key(&sig) {
                            cert.direct_sums = false;
                        }
                    }
                }
            }
        }
        cert.hom_cache = true;
        for i in 0..self.len() {
            for j in 0..self.len() {
                let fresh = hom_set(self.rep(i), self.rep(j))?;
                if fresh.iter().map(|h| &h.matrix).ne(self.homs[i][j].iter().map(|h| &h.matrix)) {
                    cert.hom_cache = false;
                }
            }
        }
        Ok(cert)
    }
}

pub fn build_universe(
    ring: Arc<FiniteRing>,
    seeds: &[FinModule],
    policy: ClosurePolicy,
) -> Result<Arc<Universe>> {
    Ok(Arc::new(Universe::build(ring, seeds, policy)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(name: &str) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::builtin(name).unwrap().unwrap())
    }

    fn u(name: &str, bound: usize) -> Universe {
        Universe::build(ring(name), &[], ClosurePolicy::with_bound(bound)).unwrap()
    }

    #[test]
    fn z4_bound2_has_six_reps() {
        let u = u("z4", 2);
        assert_eq!(u.len(), 6);
        let shapes: Vec<Vec<u64>> = u.reps.iter().map(|r| r.module.factors.clone()).collect();
        assert_eq!(
            shapes,
            vec![
                vec![],
                vec![2],
                vec![2, 2],
                vec![4],
                vec![2, 4],
                vec![4, 4]
            ]
        );
        assert_eq!(u.label(u.regular_rep()), "R");
        assert_eq!(u.label(0), "0");
        assert!(u.certificate.submodules && u.certificate.quotients);
        assert!(u.certificate.injective_hulls && u.certificate.direct_sums);
        assert!(u.certificate.hom_cache);
    }

    #[test]
    fn z2_bound1_has_two_reps() {
        let u = u("z2", 1);
        assert_eq!(u.len(), 2);
        assert_eq!(u.label(1), "R");
    }

    #[test]
    fn t2f2_bound2_has_ten_reps_with_simples_and_projective() {
        let u = u("t2f2", 2);
        assert_eq!(u.len(), 10);
        // two non-isomorphic simples of order 2
        let simples: Vec<usize> = (0..u.len())
            .filter(|&i| u.rep(i).order() == 2)
            .collect();
        assert_eq!(simples.len(), 2);
        // the length-2 uniserial projective: order 4, indecomposable
        let p: Vec<usize> = (0..u.len())
            .filter(|&i| u.rep(i).order() == 4 && u.reps[i].signature.len() == 1)
            .collect();
        assert_eq!(p.len(), 1);
        // regular = simple + projective
        assert_eq!(u.reps[u.regular_rep()].signature.len(), 2);
    }

    #[test]
    fn z4xz4_bound1_has_nine_reps() {
        let u = u("z4xz4", 1);
        assert_eq!(u.len(), 9);
        // forced reps beyond the bound: regular and the mixed products
        assert_eq!(u.rep(u.regular_rep()).factors, vec![4, 4]);
    }

    #[test]
    fn z8_bound2_has_ten_reps() {
        let u = u("z8", 2);
        assert_eq!(u.len(), 10);
    }

    #[test]
    fn rebuild_is_identical() {
        let a = u("z4", 2);
        let b = u("z4", 2);
        assert!(a.same_as(&b));
        for i in 0..a.len() {
            assert_eq!(a.label(i), b.label(i));
            for j in 0..a.len() {
                let ha: Vec<_> = a.hom(i, j).iter().map(|h| h.matrix.clone()).collect();
                let hb: Vec<_> = b.hom(i, j).iter().map(|h| h.matrix.clone()).collect();
                assert_eq!(ha, hb);
            }
        }
    }

    #[test]
    fn classification_examples() {
        let u = u("z4", 2);
        let z4 = u.rep_by_label("R").unwrap();
        let m = u.rep(z4).clone();
        // quotient Z4 / 2Z4 is Z2
        let two = Submodule::cyclic(&m, &[2]);
        let (q, _) = quotient(&m, &two).unwrap();
        let (qi, iso) = u.classify_expect(&q).unwrap();
        assert_eq!(u.label(qi), "Z2");
        assert!(iso.is_iso());
        // direct sum Z2 + Z2 classifies to the fourth rep
        let z2 = FinModule::abelian(u.ring.clone(), vec![2]).unwrap();
        let s = direct_sum(&[&z2, &z2]).unwrap().module;
        let (si, _) = u.classify_expect(&s).unwrap();
        assert_eq!(u.label(si), "Z2+Z2");
        // 2Z4 as an abstract module classifies to Z2
        let (sm, _) = submodule_as_module(&m, &two).unwrap();
        let (si, iso) = u.classify_expect(&sm).unwrap();
        assert_eq!(u.label(si), "Z2");
        assert!(iso.is_iso());
        // something outside: Z8 cannot exist over z4, use a bigger sum instead
        let big = direct_sum(&[&m, &m, &m]).unwrap().module;
        assert!(u.classify(&big).unwrap().is_none());
    }

    #[test]
    fn sub_entries_are_classified() {
        let u = u("z4", 2);
        for i in 0..u.len() {
            for e in u.sub_entries(i) {
                let ri = e.rep.unwrap();
                let emb = e.emb.as_ref().unwrap();
                assert_eq!(emb.dom, *u.rep(ri));
                assert_eq!(emb.image(), e.sub);
                let qi = e.quot_rep.unwrap();
                let proj = e.proj.as_ref().unwrap();
                assert_eq!(proj.cod, *u.rep(qi));
                assert_eq!(proj.kernel(), e.sub);
            }
        }
    }

    #[test]
    fn hull_entries_land_on_injectives() {
        let u = u("z4", 2);
        // hull of Z2 is Z4
        let z2 = u.rep_by_label("Z2").unwrap();
        let (hi, emb) = u.hull_of(z2).unwrap();
        assert_eq!(u.label(*hi), "R");
        assert!(emb.is_injective_map());
        // hull of Z2+Z4 is Z4+Z4
        let m = u.rep_by_label("Z2+Z4").unwrap();
        let (hi, _) = u.hull_of(m).unwrap();
        assert_eq!(u.label(*hi), "Z4+Z4");
    }

    #[test]
    fn seeds_are_admitted() {
        let r = ring("z8");
        let seed = FinModule::abelian(r.clone(), vec![2, 8]).unwrap();
        let u = Universe::build(r, &[seed.clone()], ClosurePolicy::with_bound(1)).unwrap();
        assert!(u.classify(&seed).unwrap().is_some());
        // closure through the hull of the seed drags in the two-summand shapes
        assert_eq!(u.len(), 10);
    }

    #[test]
    fn labels_disambiguate_duplicates() {
        let u = u("t2f2", 2);
        let mut labels: Vec<&str> = (0..u.len()).map(|i| u.label(i)).collect();
        labels.sort();
        labels.dedup();
        assert_eq!(labels.len(), u.len(), "labels must be unique");
    }
}
