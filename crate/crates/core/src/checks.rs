//! Claim registry: every proposition the library models, each with a stable
//! id, the hypotheses it carries, the universe it is quantified over, and an
//! executable check producing pass/fail plus a witness.
//!
//! Claims are universe-relative: a fail exports a concrete counterexample,
//! a pass certifies the statement only for the universe named in the result.

use crate::error::{Error, Result};
use crate::filters::{
    enumerate_filters, filter_of, preradical_of_filter, torsion_class_extension_closed,
    torsion_class_hereditary,
};
use crate::hull::{fuchs_criterion, is_injective, is_quasi_injective};
use crate::preradical::{enumerate_preradicals, PreradicalTable};
use crate::relative::{
    is_absolutely_pure, is_dense, is_pure, is_sigma_injective, localization_report,
    sigma_injective_hull, subp, unique_extension_check, InjectivityMode,
};
use crate::ring::FiniteRing;
use crate::submodule::{self, Submodule};
use crate::universe::{ClosurePolicy, Universe};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub claim_id: String,
    pub hypotheses: String,
    pub universe: String,
    pub status: Status,
    pub witness: Option<Value>,
}

pub struct Outcome {
    pub status: Status,
    pub witness: Option<Value>,
}

fn pass() -> Outcome {
    Outcome { status: Status::Pass, witness: None }
}

fn pass_with(witness: Value) -> Outcome {
    Outcome { status: Status::Pass, witness: Some(witness) }
}

fn fail(witness: Value) -> Outcome {
    Outcome { status: Status::Fail, witness: Some(witness) }
}

fn not_applicable(note: &str) -> Outcome {
    Outcome {
        status: Status::NotApplicable,
        witness: Some(json!({ "note": note })),
    }
}

pub struct Claim {
    pub id: &'static str,
    pub title: &'static str,
    pub hypotheses: &'static str,
    pub universe: &'static str,
    pub run: fn(&mut Session) -> Result<Outcome>,
}

/// Caches universes and enumerated table lattices across claims.
#[derive(Default)]
pub struct Session {
    universes: BTreeMap<(String, usize), Arc<Universe>>,
    lattices: BTreeMap<(String, usize), Vec<PreradicalTable>>,
}

const ENUM_BUDGET: usize = 100_000;

impl Session {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn universe(&mut self, ring: &str, bound: usize) -> Result<Arc<Universe>> {
        let key = (ring.to_string(), bound);
        if let Some(u) = self.universes.get(&key) {
            return Ok(Arc::clone(u));
        }
        let r = FiniteRing::builtin(ring)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown builtin ring {ring}")))??;
        let u = Arc::new(Universe::build(
            Arc::new(r),
            &[],
            ClosurePolicy::with_bound(bound),
        )?);
        self.universes.insert(key, Arc::clone(&u));
        Ok(u)
    }

    /// Every preradical table over the universe, in enumeration order.
    pub fn lattice(&mut self, ring: &str, bound: usize) -> Result<Vec<PreradicalTable>> {
        let key = (ring.to_string(), bound);
        if let Some(ts) = self.lattices.get(&key) {
            return Ok(ts.clone());
        }
        let u = self.universe(ring, bound)?;
        let ts = enumerate_preradicals(&u, ENUM_BUDGET)?;
        self.lattices.insert(key, ts.clone());
        Ok(ts)
    }
}

fn table_json(t: &PreradicalTable) -> Value {
    let u = t.universe();
    Value::Array(
        (0..u.len())
            .map(|i| json!({ "module": u.label(i), "value": t.value(i).elements }))
            .collect(),
    )
}

fn torsion_class(t: &PreradicalTable) -> Vec<usize> {
    t.torsion_reps()
}

fn torsion_free_class(t: &PreradicalTable) -> Vec<usize> {
    let u = t.universe();
    (0..u.len()).filter(|&i| t.value(i).is_zero()).collect()
}

fn is_simple(u: &Universe, i: usize) -> bool {
    u.sub_entries(i).len() == 2
}

fn has_complement(u: &Universe, i: usize, n: &Submodule) -> bool {
    let m = u.rep(i);
    u.sub_entries(i).iter().any(|e| {
        Submodule::intersect(m, n, &e.sub).is_zero() && Submodule::sum(m, n, &e.sub).is_full()
    })
}

/// Named tables plus a few operator images, deduplicated; used to quantify
/// claims over universes too big to enumerate exhaustively.
fn sample_tables(u: &Arc<Universe>) -> Result<Vec<PreradicalTable>> {
    let soc = PreradicalTable::socle(u)?;
    let jac = PreradicalTable::jacobson(u)?;
    let mut out = vec![
        PreradicalTable::zero(u),
        PreradicalTable::one(u),
        soc.clone(),
        jac.clone(),
        PreradicalTable::singular(u)?,
        soc.bar()?,
        soc.tilde()?,
        jac.hat()?,
        jac.square()?,
        jac.circ()?,
    ];
    for i in 0..u.len() {
        if is_simple(u, i) {
            out.push(PreradicalTable::trace_of(u, i)?);
        }
    }
    let mut dedup: Vec<PreradicalTable> = Vec::new();
    for t in out {
        if !dedup.contains(&t) {
            dedup.push(t);
        }
    }
    Ok(dedup)
}

// engine level claims

fn s2_hom_oracle(s: &mut Session) -> Result<Outcome> {
    let u = s.universe("z4", 2)?;
    for a in 0..u.len() {
        for b in 0..u.len() {
            let dom = u.rep(a);
            let cod = u.rep(b);
            let k = dom.factors.len();
            // brute force: choose an image for each coordinate generator,
            // keep the assignments that give a well defined R-linear map
            let cod_els = cod.elements();
            let mut count = 0usize;
            let mut pick = vec![0usize; k];
            loop {
                // matrix rows index codomain coordinates, columns the chosen images
                let matrix: Vec<Vec<u64>> = (0..cod.rank())
                    .map(|i| pick.iter().map(|&p| cod_els[p][i]).collect())
                    .collect();
                if crate::hom::ModuleHom::new(dom.clone(), cod.clone(), matrix).is_ok() {
                    count += 1;
                }
                let mut j = 0;
                loop {
                    if j == k {
                        break;
                    }
                    pick[j] += 1;
                    if pick[j] < cod_els.len() {
                        break;
                    }
                    pick[j] = 0;
                    j += 1;
                }
                if j == k {
                    break;
                }
            }
            if count != u.hom(a, b).len() {
                return Ok(fail(json!({
                    "dom": u.label(a), "cod": u.label(b),
                    "brute_force": count, "cached": u.hom(a, b).len(),
                })));
            }
        }
    }
    Ok(pass())
}

fn s2_hull_laws(s: &mut Session) -> Result<Outcome> {
    for ring in ["z4", "z8"] {
        let u = s.universe(ring, 2)?;
        for i in 0..u.len() {
            let (hi, emb) = u.hull_of(i)?;
            if !emb.is_injective_map() || !submodule::is_essential(u.rep(*hi), &emb.image()) {
                return Ok(fail(json!({ "ring": ring, "module": u.label(i), "law": "essential embedding" })));
            }
            if !is_injective(u.rep(*hi))? {
                return Ok(fail(json!({ "ring": ring, "module": u.label(i), "law": "hull injective" })));
            }
            let (hh, _) = u.hull_of(*hi)?;
            if hh != hi {
                return Ok(fail(json!({ "ring": ring, "module": u.label(i), "law": "hull idempotent" })));
            }
        }
        if u.len() <= 8 {
            // exhaustive oracle: the hull class is the unique injective rep
            // receiving an essential embedding
            for i in 0..u.len() {
                let mut found = Vec::new();
                for n in 0..u.len() {
                    if !is_injective(u.rep(n))? {
                        continue;
                    }
                    let ok = u.hom(i, n).iter().any(|f| {
                        f.is_injective_map() && submodule::is_essential(u.rep(n), &f.image())
                    });
                    if ok {
                        found.push(n);
                    }
                }
                let (hi, _) = u.hull_of(i)?;
                if found != vec![*hi] {
                    return Ok(fail(json!({
                        "ring": ring, "module": u.label(i),
                        "oracle": found.iter().map(|&n| u.label(n)).collect::<Vec<_>>(),
                        "cached": u.label(*hi),
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop2_essential(s: &mut Session) -> Result<Outcome> {
    for ring in ["z4", "t2f2"] {
        let u = s.universe(ring, 2)?;
        for i in 0..u.len() {
            let m = u.rep(i);
            let entries = u.sub_entries(i);
            for en in entries {
                let n = &en.sub;
                let n_ess = submodule::is_essential(m, n);
                for ek in entries {
                    let k = &ek.sub;
                    // transitivity: K ess in N and N ess in M force K ess in M
                    if k.leq(n)
                        && submodule::is_essential_within(m, k, n)
                        && n_ess
                        && !submodule::is_essential(m, k)
                    {
                        return Ok(fail(json!({ "ring": ring, "module": u.label(i), "law": "transitivity" })));
                    }
                    // intersections of essentials are essential
                    if n_ess
                        && submodule::is_essential(m, k)
                        && !submodule::is_essential(m, &Submodule::intersect(m, n, k))
                    {
                        return Ok(fail(json!({ "ring": ring, "module": u.label(i), "law": "intersection" })));
                    }
                    // restriction: N ess in M forces N ∩ K ess in K
                    if n_ess
                        && !submodule::is_essential_within(m, &Submodule::intersect(m, n, k), k)
                    {
                        return Ok(fail(json!({ "ring": ring, "module": u.label(i), "law": "restriction" })));
                    }
                    // upward: N ess in M and N within K force K ess in M
                    if n_ess && n.leq(k) && !submodule::is_essential(m, k) {
                        return Ok(fail(json!({ "ring": ring, "module": u.label(i), "law": "upward" })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop1_nonsingular(s: &mut Session) -> Result<Outcome> {
    let mut instances = 0usize;
    for ring in ["z2", "z4", "t2f2"] {
        let u = s.universe(ring, 2)?;
        let sing = PreradicalTable::singular(&u)?;
        for i in 0..u.len() {
            if !sing.value(i).is_zero() || u.rep(i).is_zero() {
                continue;
            }
            for e in u.sub_entries(i) {
                let q = e.quot_rep.ok_or_else(|| Error::ClosureMissing("quotients".into()))?;
                instances += 1;
                let ess = submodule::is_essential(u.rep(i), &e.sub);
                let singular_quot = sing.value(q).is_full();
                if ess != singular_quot {
                    return Ok(fail(json!({
                        "ring": ring, "module": u.label(i), "sub": e.sub.elements,
                        "essential": ess, "quotient_singular": singular_quot,
                    })));
                }
            }
        }
    }
    if instances == 0 {
        return Ok(not_applicable("no nonsingular modules in the tested universes"));
    }
    Ok(pass())
}

fn s7_lemma_fuchs(s: &mut Session) -> Result<Outcome> {
    for ring in ["z4", "z8", "t2f2"] {
        let u = s.universe(ring, 2)?;
        for i in 0..u.len() {
            let f = fuchs_criterion(u.rep(i))?;
            let q = is_quasi_injective(u.rep(i))?;
            if f != q {
                return Ok(fail(json!({
                    "ring": ring, "module": u.label(i),
                    "fuchs": f, "quasi_injective": q,
                })));
            }
        }
    }
    Ok(pass())
}

// preradical claims over the enumerated z4 lattice

fn s3_counterexample(s: &mut Session) -> Result<Outcome> {
    let u = s.universe("z4xz4", 1)?;
    let reg = u.regular_rep();
    let m = u.rep(reg);
    // I = Z4 x 2Z4 inside the regular module
    let ideal = Submodule::from_generators(m, &[vec![1, 0], vec![0, 2]]);
    let alpha = PreradicalTable::alpha(&u, reg, &ideal)?;
    // the factor 0 x Z4: cyclic of order 4 on which the first coordinate acts as zero
    let side = (0..u.len())
        .find(|&i| u.rep(i).factors == [4] && u.rep(i).action[0] == [vec![0]])
        .ok_or_else(|| Error::NotInUniverse("0 x Z4".into()))?;
    let side_val = alpha.value(side);
    let expect_side = Submodule::cyclic(u.rep(side), &[2]);
    if *side_val != expect_side {
        return Ok(fail(json!({ "stage": "alpha at 0xZ4", "got": side_val.elements })));
    }
    let hat = alpha.hat()?;
    if !hat.value(side).is_zero() {
        return Ok(fail(json!({ "stage": "hat at 0xZ4", "got": hat.value(side).elements })));
    }
    let expect_reg = Submodule::from_generators(m, &[vec![1, 0]]);
    if *hat.value(reg) != expect_reg {
        return Ok(fail(json!({ "stage": "hat at R", "got": hat.value(reg).elements })));
    }
    let traits = alpha.traits()?;
    if traits.essentially_idempotent.holds {
        return Ok(fail(json!({ "stage": "essentially_idempotent", "got": true })));
    }
    let w = traits.essentially_idempotent.witness.as_ref();
    Ok(pass_with(json!({
        "witness_module": w.map(|w| w.module.clone()),
        "alpha_there": side_val.elements,
        "hat_there": [],
    })))
}

fn s3_prop1_join_eid(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for a in &ts {
        for b in &ts {
            if !a.traits()?.essentially_idempotent.holds
                || !b.traits()?.essentially_idempotent.holds
            {
                continue;
            }
            let j = a.join(b)?;
            if !j.traits()?.essentially_idempotent.holds {
                return Ok(fail(json!({ "a": table_json(a), "b": table_json(b) })));
            }
        }
    }
    Ok(pass())
}

fn s3_prop2_circ(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let c = t.circ()?;
        if !c.leq(t)? {
            return Ok(fail(json!({ "law": "deflatory", "table": table_json(t) })));
        }
        if c.circ()? != c {
            return Ok(fail(json!({ "law": "idempotent", "table": table_json(t) })));
        }
        for other in &ts {
            if t.leq(other)? && !c.leq(&other.circ()?)? {
                return Ok(fail(json!({
                    "law": "monotone",
                    "table": table_json(t),
                    "other": table_json(other),
                })));
            }
        }
    }
    Ok(pass())
}

fn s4_square_laws(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let q = t.square()?;
        if !t.leq(&q)? {
            return Ok(fail(json!({ "law": "inflatory", "table": table_json(t) })));
        }
        if q.square()? != q {
            return Ok(fail(json!({ "law": "idempotent", "table": table_json(t) })));
        }
        for other in &ts {
            if t.leq(other)? && !q.leq(&other.square()?)? {
                return Ok(fail(json!({
                    "law": "monotone",
                    "table": table_json(t),
                    "other": table_json(other),
                })));
            }
        }
    }
    Ok(pass())
}

fn s3_remark1_torsion_classes(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let c = t.circ()?;
        let h = t.hat()?;
        if torsion_class(t) != torsion_class(&c) || torsion_class(t) != torsion_class(&h) {
            return Ok(fail(json!({ "law": "torsion classes agree", "table": table_json(t) })));
        }
        if c.hat()? != h {
            return Ok(fail(json!({ "law": "hat of circ", "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s3_prop3_bar_eid(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        if !t.traits()?.essentially_idempotent.holds {
            continue;
        }
        let b = t.bar()?;
        let tr = b.traits()?;
        if !tr.essentially_idempotent.holds || !tr.radical.holds {
            return Ok(fail(json!({ "table": table_json(t), "bar": table_json(&b) })));
        }
    }
    Ok(pass())
}

fn s3_prop_hat_meet(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for a in &ts {
        for b in &ts {
            let lhs = a.meet(b)?.hat()?;
            let rhs = a.hat()?.meet(&b.hat()?)?.hat()?;
            if lhs != rhs {
                return Ok(fail(json!({ "a": table_json(a), "b": table_json(b) })));
            }
            for c in &ts {
                let family = [a, b, c];
                let lhs = PreradicalTable::meet_all(&u, &family)?.hat()?;
                let hats = [a.hat()?, b.hat()?, c.hat()?];
                let refs: Vec<&PreradicalTable> = hats.iter().collect();
                let rhs = PreradicalTable::meet_all(&u, &refs)?.hat()?;
                if lhs != rhs {
                    return Ok(fail(json!({
                        "a": table_json(a), "b": table_json(b), "c": table_json(c),
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s3_remark2_eid_iff(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let eid = t.traits()?.essentially_idempotent.holds;
        let same_tf = torsion_free_class(t) == torsion_free_class(&t.hat()?);
        if eid != same_tf {
            return Ok(fail(json!({
                "table": table_json(t),
                "essentially_idempotent": eid,
                "torsion_free_classes_agree": same_tf,
            })));
        }
    }
    Ok(pass())
}

fn s3_remark3_ext_closed(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.essentially_idempotent.holds {
            continue;
        }
        for i in 0..u.len() {
            for e in u.sub_entries(i) {
                let (r, q) = match (e.rep, e.quot_rep) {
                    (Some(r), Some(q)) => (r, q),
                    _ => return Err(Error::ClosureMissing("submodules".into())),
                };
                if t.value(r).is_zero() && t.value(q).is_zero() && !t.value(i).is_zero() {
                    return Ok(fail(json!({
                        "table": table_json(t), "module": u.label(i), "sub": e.sub.elements,
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s3_prop_eid_radical(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let tr = t.traits()?;
        if tr.essentially_idempotent.holds && tr.radical.holds && !tr.idempotent.holds {
            return Ok(fail(json!({ "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s3_prop4_alpha_simple(s: &mut Session) -> Result<Outcome> {
    let mut instances = 0usize;
    for ring in ["z2", "z4", "t2f2"] {
        let u = s.universe(ring, 2)?;
        for i in 0..u.len() {
            if !is_simple(&u, i) {
                continue;
            }
            let (hi, emb) = u.hull_of(i)?;
            let a = PreradicalTable::alpha(&u, *hi, &emb.image())?;
            let tr = a.traits()?;
            instances += 1;
            if tr.essentially_idempotent.holds && !tr.idempotent.holds {
                return Ok(fail(json!({ "ring": ring, "simple": u.label(i) })));
            }
        }
    }
    if instances == 0 {
        return Ok(not_applicable("no simple reps"));
    }
    Ok(pass())
}

fn s3_cor1_atoms_eid(s: &mut Session) -> Result<Outcome> {
    // semisimple rings: every atom of the table lattice is essentially idempotent
    for (ring, bound) in [("z2", 1), ("z2xz2", 1)] {
        let ts = s.lattice(ring, bound)?;
        for t in atoms(&ts)? {
            if !t.traits()?.essentially_idempotent.holds {
                return Ok(fail(json!({ "ring": ring, "atom": table_json(t) })));
            }
        }
    }
    Ok(pass())
}

/// Tables whose only strict predecessor is the zero table.
fn atoms(ts: &[PreradicalTable]) -> Result<Vec<&PreradicalTable>> {
    let mut out = Vec::new();
    for t in ts {
        let mut below = Vec::new();
        for z in ts {
            if z.leq(t)? && z != t {
                below.push(z);
            }
        }
        if below.len() == 1 && below[0].values().iter().all(|v| v.is_zero()) {
            out.push(t);
        }
    }
    Ok(out)
}

fn s4_prop_meet_preh(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for a in &ts {
        for b in &ts {
            if !a.traits()?.prehereditary.holds || !b.traits()?.prehereditary.holds {
                continue;
            }
            let m = a.meet(b)?;
            if !m.traits()?.prehereditary.holds {
                return Ok(fail(json!({ "a": table_json(a), "b": table_json(b) })));
            }
        }
    }
    Ok(pass())
}

fn s4_lemma1_square_tilde(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let sq = t.square()?;
        let lhs = t.leq(&sq.hat()?)?;
        let rhs = t.tilde()? == sq;
        if lhs != rhs {
            return Ok(fail(json!({
                "table": table_json(t),
                "below_hat_of_square": lhs,
                "tilde_equals_square": rhs,
            })));
        }
    }
    Ok(pass())
}

fn s4_prop_square_leftexact(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        if t.traits()?.idempotent.holds && !t.square()?.traits()?.left_exact.holds {
            return Ok(fail(json!({ "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s4_prop_costable_radical(s: &mut Session) -> Result<Outcome> {
    let mut ts = s.lattice("z4", 2)?;
    for ring in ["z8", "t2f2"] {
        let u = s.universe(ring, 2)?;
        ts.extend(sample_tables(&u)?);
    }
    for t in &ts {
        let tr = t.traits()?;
        if tr.radical.holds && tr.costable.holds && !tr.left_exact.holds {
            return Ok(fail(json!({ "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s4_prop_eid_preh_costable(s: &mut Session) -> Result<Outcome> {
    let mut ts = s.lattice("z4", 2)?;
    for ring in ["z8", "t2f2"] {
        let u = s.universe(ring, 2)?;
        ts.extend(sample_tables(&u)?);
    }
    for t in &ts {
        let tr = t.traits()?;
        if tr.essentially_idempotent.holds && tr.prehereditary.holds && !tr.costable.holds {
            return Ok(fail(json!({ "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s4_prop_torsion_square(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        let sq = t.square()?;
        for &m in &torsion_class(t) {
            for n in 0..u.len() {
                for e in u.sub_entries(n) {
                    if e.rep == Some(m) && !e.sub.leq(sq.value(n)) {
                        return Ok(fail(json!({
                            "table": table_json(t),
                            "torsion_module": u.label(m),
                            "host": u.label(n),
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s4_prop_simple_inj_alpha(s: &mut Session) -> Result<Outcome> {
    let mut instances = 0usize;
    for (ring, bound) in [("z2", 2), ("z2xz2", 1), ("z4", 2), ("t2f2", 2)] {
        let u = s.universe(ring, bound)?;
        for i in 0..u.len() {
            if !is_simple(&u, i) || !is_injective(u.rep(i))? {
                continue;
            }
            instances += 1;
            let tr = PreradicalTable::trace_of(&u, i)?;
            if !tr.traits()?.left_exact.holds {
                return Ok(fail(json!({ "ring": ring, "simple": u.label(i) })));
            }
        }
    }
    if instances == 0 {
        return Ok(not_applicable("no simple injective reps"));
    }
    Ok(pass())
}

fn s4_cor_atoms_preh(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let found = atoms(&ts)?;
    if found.is_empty() {
        return Ok(not_applicable("lattice has no atoms"));
    }
    for t in found {
        if !t.traits()?.prehereditary.holds {
            return Ok(fail(json!({ "atom": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s4_prop_leftexact_stn_join(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    let zero = PreradicalTable::zero(&u);
    for a in &ts {
        for b in &ts {
            if !a.traits()?.left_exact.holds || !b.traits()?.strongly_nilpotent.holds {
                continue;
            }
            if a.meet(b)? != zero {
                continue;
            }
            let j = a.join(b)?;
            if !j.traits()?.prehereditary.holds {
                return Ok(fail(json!({ "left_exact": table_json(a), "nilpotent": table_json(b) })));
            }
        }
    }
    Ok(pass())
}

fn s4_prop_max_ring(s: &mut Session) -> Result<Outcome> {
    for ring in ["z4", "z8", "t2f2"] {
        let u = s.universe(ring, 2)?;
        let jac = PreradicalTable::jacobson(&u)?;
        if !jac.traits()?.prehereditary.holds {
            return Ok(fail(json!({ "ring": ring, "item": "jacobson prehereditary" })));
        }
        if torsion_class(&jac) != vec![u.zero_rep()] {
            return Ok(fail(json!({ "ring": ring, "item": "torsion class is {0}" })));
        }
        if jac.hat()? != PreradicalTable::zero(&u) {
            return Ok(fail(json!({ "ring": ring, "item": "hat of jacobson is zero" })));
        }
    }
    Ok(pass())
}

// filter claims

fn s2_filter_counts(s: &mut Session) -> Result<Outcome> {
    let u = s.universe("z4", 2)?;
    let fs = enumerate_filters(u.ring())?;
    let linear = fs.len();
    let gabriel = fs.iter().filter(|f| f.is_gabriel()).count();
    match read_golden("z4_filters.json")? {
        None => Ok(fail(json!({
            "note": "golden file missing",
            "computed": { "linear": linear, "gabriel": gabriel },
        }))),
        Some(g) => {
            let want_linear = g["linear"].as_u64().unwrap_or(0) as usize;
            let want_gabriel = g["gabriel"].as_u64().unwrap_or(0) as usize;
            if linear != want_linear || gabriel != want_gabriel {
                return Ok(fail(json!({
                    "golden": { "linear": want_linear, "gabriel": want_gabriel },
                    "computed": { "linear": linear, "gabriel": gabriel },
                })));
            }
            Ok(pass())
        }
    }
}

fn s4_prop_filter_linear(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let preh = t.traits()?.prehereditary.holds;
        let linear = filter_of(t)?.is_linear();
        if preh != linear {
            return Ok(fail(json!({
                "table": table_json(t), "prehereditary": preh, "filter_linear": linear,
            })));
        }
    }
    Ok(pass())
}

fn s4_cor_filter_gabriel(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let hereditary_torsion =
            torsion_class_hereditary(t)? && torsion_class_extension_closed(t)?;
        let gabriel = filter_of(t)?.is_gabriel();
        if hereditary_torsion != gabriel {
            return Ok(fail(json!({
                "table": table_json(t),
                "hereditary_torsion": hereditary_torsion,
                "filter_gabriel": gabriel,
            })));
        }
    }
    Ok(pass())
}

fn s2_filter_bijection(s: &mut Session) -> Result<Outcome> {
    let u = s.universe("z4", 2)?;
    for f in enumerate_filters(u.ring())? {
        let t = preradical_of_filter(&f, &u)?;
        if filter_of(&t)? != f {
            return Ok(fail(json!({ "direction": "filter round trip", "ideals": f.ideals.len() })));
        }
    }
    for t in s.lattice("z4", 2)? {
        if !t.traits()?.left_exact.holds {
            continue;
        }
        let f = filter_of(&t)?;
        if preradical_of_filter(&f, &u)? != t {
            return Ok(fail(json!({ "direction": "table round trip", "table": table_json(&t) })));
        }
    }
    Ok(pass())
}

// relative claims

fn dense_entries(t: &PreradicalTable, i: usize) -> Result<Vec<usize>> {
    let u = t.universe();
    let mut out = Vec::new();
    for (k, e) in u.sub_entries(i).iter().enumerate() {
        if is_dense(t, &e.sub, i)?.verdict {
            out.push(k);
        }
    }
    Ok(out)
}

fn s5_prop3_upward(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        for i in 0..u.len() {
            for e in u.sub_entries(i) {
                if !is_dense(t, &e.sub, i)?.verdict {
                    continue;
                }
                for above in u.sub_entries(i) {
                    if e.sub.leq(&above.sub) && !is_dense(t, &above.sub, i)?.verdict {
                        return Ok(fail(json!({
                            "table": table_json(t), "module": u.label(i),
                            "dense": e.sub.elements, "above": above.sub.elements,
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop3_colon(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    let reg = u.regular_rep();
    let ring = Arc::clone(u.ring());
    for t in &ts {
        if !t.traits()?.prehereditary.holds {
            continue;
        }
        for i in 0..u.len() {
            let m = u.rep(i);
            for e in u.sub_entries(i) {
                if !is_dense(t, &e.sub, i)?.verdict {
                    continue;
                }
                for x in m.elements() {
                    let rs: Vec<Vec<u64>> = ring
                        .elements()
                        .into_iter()
                        .filter(|r| e.sub.contains(&m.smul(r, &x)))
                        .collect();
                    let colon = Submodule::from_elements(u.rep(reg), &rs);
                    if !is_dense(t, &colon, reg)?.verdict {
                        return Ok(fail(json!({
                            "table": table_json(t), "module": u.label(i),
                            "dense": e.sub.elements, "element": x,
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop3_intersection(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.prehereditary.holds {
            continue;
        }
        for i in 0..u.len() {
            let dense = dense_entries(t, i)?;
            for &a in &dense {
                for &b in &dense {
                    let cap = Submodule::intersect(
                        u.rep(i),
                        &u.sub_entries(i)[a].sub,
                        &u.sub_entries(i)[b].sub,
                    );
                    if !is_dense(t, &cap, i)?.verdict {
                        return Ok(fail(json!({ "table": table_json(t), "module": u.label(i) })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop3_restriction(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.prehereditary.holds {
            continue;
        }
        for i in 0..u.len() {
            for e in u.sub_entries(i) {
                if !is_dense(t, &e.sub, i)?.verdict {
                    continue;
                }
                for k in u.sub_entries(i) {
                    // transport N ∩ K into the rep class of K
                    let (kr, kemb) = match (k.rep, k.emb.as_ref()) {
                        (Some(r), Some(emb)) => (r, emb),
                        _ => return Err(Error::ClosureMissing("submodules".into())),
                    };
                    let cap = Submodule::intersect(u.rep(i), &e.sub, &k.sub);
                    let pulled = kemb.preimage_of(&cap);
                    if !is_dense(t, &pulled, kr)?.verdict {
                        return Ok(fail(json!({
                            "table": table_json(t), "module": u.label(i),
                            "dense": e.sub.elements, "restricted_to": k.sub.elements,
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop3_pullback(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.prehereditary.holds {
            continue;
        }
        for i in 0..u.len() {
            for e in u.sub_entries(i) {
                if !is_dense(t, &e.sub, i)?.verdict {
                    continue;
                }
                for k in 0..u.len() {
                    for f in u.hom(k, i) {
                        let pulled = f.preimage_of(&e.sub);
                        if !is_dense(t, &pulled, k)?.verdict {
                            return Ok(fail(json!({
                                "table": table_json(t), "module": u.label(i),
                                "dense": e.sub.elements, "source": u.label(k),
                            })));
                        }
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop3_transitive(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !torsion_class_extension_closed(t)? {
            continue;
        }
        for i in 0..u.len() {
            for en in u.sub_entries(i) {
                if !is_dense(t, &en.sub, i)?.verdict {
                    continue;
                }
                let (nr, nemb) = match (en.rep, en.emb.as_ref()) {
                    (Some(r), Some(emb)) => (r, emb),
                    _ => return Err(Error::ClosureMissing("submodules".into())),
                };
                for ek in u.sub_entries(i) {
                    if !ek.sub.leq(&en.sub) {
                        continue;
                    }
                    // K dense in N, read inside the rep class of N
                    let k_in_n = nemb.preimage_of(&ek.sub);
                    if !is_dense(t, &k_in_n, nr)?.verdict {
                        continue;
                    }
                    if !is_dense(t, &ek.sub, i)?.verdict {
                        return Ok(fail(json!({
                            "table": table_json(t), "module": u.label(i),
                            "outer": en.sub.elements, "inner": ek.sub.elements,
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop_monotone_density(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for a in &ts {
        let ha = a.hat()?;
        for i in 0..u.len() {
            for e in u.sub_entries(i) {
                let da = is_dense(a, &e.sub, i)?.verdict;
                if da != is_dense(&ha, &e.sub, i)?.verdict {
                    return Ok(fail(json!({
                        "law": "density agrees with hat",
                        "table": table_json(a), "module": u.label(i),
                    })));
                }
                for b in &ts {
                    if a.leq(b)? && da && !is_dense(b, &e.sub, i)?.verdict {
                        return Ok(fail(json!({
                            "law": "monotone",
                            "smaller": table_json(a), "larger": table_json(b),
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s5_prop_tf_essential(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.prehereditary.holds {
            continue;
        }
        for i in 0..u.len() {
            if !t.value(i).is_zero() {
                continue;
            }
            for e in u.sub_entries(i) {
                if is_dense(t, &e.sub, i)?.verdict
                    && !submodule::is_essential(u.rep(i), &e.sub)
                {
                    return Ok(fail(json!({
                        "table": table_json(t), "module": u.label(i), "sub": e.sub.elements,
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s6_prop_pure_intersection(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        for i in 0..u.len() {
            let pure: Vec<&Submodule> = u
                .sub_entries(i)
                .iter()
                .map(|e| &e.sub)
                .filter(|n| is_pure(t, n, i).unwrap_or(false))
                .collect();
            for a in &pure {
                for b in &pure {
                    let cap = Submodule::intersect(u.rep(i), a, b);
                    if !is_pure(t, &cap, i)? {
                        return Ok(fail(json!({ "table": table_json(t), "module": u.label(i) })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s6_lemma_pure_torsion(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        for i in 0..u.len() {
            for e in u.sub_entries(i) {
                let r = e.rep.ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
                if is_pure(t, &e.sub, i)? && t.value(r).is_full() && *t.value(i) != e.sub {
                    return Ok(fail(json!({
                        "table": table_json(t), "module": u.label(i), "sub": e.sub.elements,
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s6_purification_laws(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        let bar = t.bar()?;
        for i in 0..u.len() {
            let zero_pur = t.purification(i, &Submodule::zero_sub(u.rep(i)))?;
            if zero_pur != *bar.value(i) {
                return Ok(fail(json!({
                    "law": "purification of 0 is the radical closure",
                    "table": table_json(t), "module": u.label(i),
                })));
            }
            for e in u.sub_entries(i) {
                let pur = t.purification(i, &e.sub)?;
                if !e.sub.leq(&pur) || !is_pure(t, &pur, i)? {
                    return Ok(fail(json!({
                        "law": "least pure over", "table": table_json(t), "module": u.label(i),
                    })));
                }
                if is_pure(t, &e.sub, i)? != (pur == e.sub) {
                    return Ok(fail(json!({
                        "law": "pure means fixed", "table": table_json(t), "module": u.label(i),
                    })));
                }
                if t.purification(i, &e.sub)? != bar.purification(i, &e.sub)? {
                    return Ok(fail(json!({
                        "law": "purification through bar", "table": table_json(t), "module": u.label(i),
                    })));
                }
                // the bar of the quotient is the purification over N
                let proj = e.proj.as_ref().ok_or_else(|| Error::ClosureMissing("quotients".into()))?;
                let q = e.quot_rep.ok_or_else(|| Error::ClosureMissing("quotients".into()))?;
                if proj.image_of(&pur) != *bar.value(q) {
                    return Ok(fail(json!({
                        "law": "bar of quotient", "table": table_json(t), "module": u.label(i),
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn injective_class(t: &PreradicalTable, mode: InjectivityMode) -> Result<Vec<bool>> {
    let u = t.universe();
    (0..u.len())
        .map(|i| Ok(is_sigma_injective(t, i, mode)?.holds))
        .collect()
}

/// Every embedded copy of rep `m` is a direct summand of some pure submodule
/// of its host.
fn summand_in_pure_over(t: &PreradicalTable, m: usize) -> Result<bool> {
    let u = t.universe();
    for n in 0..u.len() {
        let host = u.rep(n);
        for e in u.sub_entries(n) {
            if e.rep != Some(m) {
                continue;
            }
            let mut ok = false;
            for k in u.sub_entries(n) {
                if !e.sub.leq(&k.sub) || !is_pure(t, &k.sub, n)? {
                    continue;
                }
                let splits = u.sub_entries(n).iter().any(|l| {
                    l.sub.leq(&k.sub)
                        && Submodule::intersect(host, &e.sub, &l.sub).is_zero()
                        && Submodule::sum(host, &e.sub, &l.sub) == k.sub
                });
                if splits {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn s7_prop1_1iff2(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        let tr = t.traits()?;
        if !(tr.idempotent.holds && tr.radical.holds) {
            continue;
        }
        for i in 0..u.len() {
            let purity = is_sigma_injective(t, i, InjectivityMode::Purity)?.holds;
            let summand = summand_in_pure_over(t, i)?;
            if purity != summand {
                return Ok(fail(json!({
                    "table": table_json(t), "module": u.label(i),
                    "purity": purity, "summand_in_pure_extension": summand,
                })));
            }
        }
    }
    Ok(pass())
}

fn s7_prop1_1iff5(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        let tr = t.traits()?;
        if !(tr.idempotent.holds && tr.radical.holds) {
            continue;
        }
        for i in 0..u.len() {
            let purity = is_sigma_injective(t, i, InjectivityMode::Purity)?.holds;
            let definitional = is_sigma_injective(t, i, InjectivityMode::Definitional)?.holds;
            if purity != definitional {
                return Ok(fail(json!({
                    "table": table_json(t), "module": u.label(i),
                    "purity": purity, "definitional": definitional,
                })));
            }
        }
    }
    Ok(pass())
}

fn s7_prop_baer(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.prehereditary.holds {
            continue;
        }
        for i in 0..u.len() {
            let baer = is_sigma_injective(t, i, InjectivityMode::Baer)?.holds;
            let definitional = is_sigma_injective(t, i, InjectivityMode::Definitional)?.holds;
            if baer != definitional {
                return Ok(fail(json!({
                    "table": table_json(t), "module": u.label(i),
                    "baer": baer, "definitional": definitional,
                })));
            }
        }
    }
    Ok(pass())
}

fn s7_prop_products(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    let mut instances = 0usize;
    for t in &ts {
        let inj = injective_class(t, InjectivityMode::Definitional)?;
        for i in 0..u.len() {
            let sig = u.signature(i);
            if sig.len() < 2 {
                continue;
            }
            instances += 1;
            let parts_inj = sig.iter().all(|&c| {
                u.rep_by_signature(&[c]).map(|r| inj[r]).unwrap_or(false)
            });
            if inj[i] != parts_inj {
                return Ok(fail(json!({
                    "table": table_json(t), "module": u.label(i),
                    "sum_injective": inj[i], "parts_injective": parts_inj,
                })));
            }
        }
    }
    if instances == 0 {
        return Ok(not_applicable("no composite reps"));
    }
    Ok(pass())
}

fn s7_prop_pure_sub_inj(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        let tr = t.traits()?;
        if !(tr.idempotent.holds && tr.radical.holds) {
            continue;
        }
        let inj = injective_class(t, InjectivityMode::Definitional)?;
        for i in 0..u.len() {
            if !inj[i] {
                continue;
            }
            for e in u.sub_entries(i) {
                let r = e.rep.ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
                if is_pure(t, &e.sub, i)? && !inj[r] {
                    return Ok(fail(json!({
                        "table": table_json(t), "module": u.label(i), "pure_sub": u.label(r),
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s7_remark_radical_full(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.radical.holds {
            continue;
        }
        for i in 0..u.len() {
            let (hi, emb) = u.hull_of(i)?;
            if *t.value(*hi) == emb.image()
                && !is_sigma_injective(t, i, InjectivityMode::Definitional)?.holds
            {
                return Ok(fail(json!({ "table": table_json(t), "module": u.label(i) })));
            }
        }
    }
    Ok(pass())
}

fn s7_prop_quasi_full(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    let mut instances = 0usize;
    for i in 0..u.len() {
        if !is_quasi_injective(u.rep(i))? {
            continue;
        }
        let (hi, emb) = u.hull_of(i)?;
        let omega = PreradicalTable::omega(&u, *hi, &emb.image())?;
        if !omega.traits()?.radical.holds {
            continue;
        }
        for t in &ts {
            if *t.value(*hi) != emb.image() {
                continue;
            }
            instances += 1;
            if !is_sigma_injective(t, i, InjectivityMode::Definitional)?.holds {
                return Ok(fail(json!({ "table": table_json(t), "module": u.label(i) })));
            }
        }
    }
    if instances == 0 {
        return Ok(not_applicable("hypotheses never jointly satisfied"));
    }
    Ok(pass())
}

fn s7_hull_axioms(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        let tr = t.traits()?;
        for i in 0..u.len() {
            let h = sigma_injective_hull(t, i)?;
            // essential embedding is re-verified in construction; check purity-mode
            // injectivity of the hull
            if !is_sigma_injective(t, h.rep, InjectivityMode::Purity)?.holds {
                return Ok(fail(json!({
                    "law": "hull purity-injective", "table": table_json(t), "module": u.label(i),
                })));
            }
            if !(tr.idempotent.holds && tr.radical.holds) {
                continue;
            }
            if !is_dense(t, &h.embedding.image(), h.rep)?.verdict {
                return Ok(fail(json!({
                    "law": "dense in hull", "table": table_json(t), "module": u.label(i),
                })));
            }
            let inj = is_sigma_injective(t, i, InjectivityMode::Definitional)?.holds;
            let fixed = h.rep == i && h.embedding.is_iso();
            if inj != fixed {
                return Ok(fail(json!({
                    "law": "fixpoint", "table": table_json(t), "module": u.label(i),
                    "injective": inj, "hull_is_identity": fixed,
                })));
            }
            // uniqueness: any pure K between M and E(M) in which M is dense
            // is the purification
            let (hi, emb) = u.hull_of(i)?;
            for e in u.sub_entries(*hi) {
                if !emb.image().leq(&e.sub) || !is_pure(t, &e.sub, *hi)? {
                    continue;
                }
                let (kr, kemb) = match (e.rep, e.emb.as_ref()) {
                    (Some(r), Some(em)) => (r, em),
                    _ => return Err(Error::ClosureMissing("submodules".into())),
                };
                let m_in_k = kemb.preimage_of(&emb.image());
                if is_dense(t, &m_in_k, kr)?.verdict && e.sub != h.purification {
                    return Ok(fail(json!({
                        "law": "uniqueness", "table": table_json(t), "module": u.label(i),
                        "candidate": e.sub.elements,
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s8_remark_subp_members(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        for i in 0..u.len() {
            let m = u.rep(i);
            let members = subp(t, i)?;
            if !members.contains(&Submodule::zero_sub(m)) || !members.contains(&Submodule::full(m)) {
                return Ok(fail(json!({
                    "law": "0 and M pseudocomplemented", "table": table_json(t), "module": u.label(i),
                })));
            }
            for e in u.sub_entries(i) {
                let dense = is_dense(t, &e.sub, i)?.verdict;
                let summand = has_complement(&u, i, &e.sub);
                if (dense || summand) && !members.contains(&e.sub) {
                    return Ok(fail(json!({
                        "law": "dense submodules and summands pseudocomplemented",
                        "table": table_json(t), "module": u.label(i), "sub": e.sub.elements,
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s8_prop_monotone(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for a in &ts {
        for b in &ts {
            if !a.leq(b)? {
                continue;
            }
            for i in 0..u.len() {
                let sa = subp(a, i)?;
                let sb = subp(b, i)?;
                if sa.iter().any(|n| !sb.contains(n)) {
                    return Ok(fail(json!({
                        "smaller": table_json(a), "larger": table_json(b), "module": u.label(i),
                    })));
                }
            }
        }
    }
    Ok(pass())
}

fn s8_prop_transitive(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.essentially_coidempotent.holds {
            continue;
        }
        for i in 0..u.len() {
            let members = subp(t, i)?;
            for en in u.sub_entries(i) {
                if !members.contains(&en.sub) {
                    continue;
                }
                let (nr, nemb) = match (en.rep, en.emb.as_ref()) {
                    (Some(r), Some(emb)) => (r, emb),
                    _ => return Err(Error::ClosureMissing("submodules".into())),
                };
                let inner = subp(t, nr)?;
                for ek in u.sub_entries(i) {
                    if !ek.sub.leq(&en.sub) {
                        continue;
                    }
                    let k_in_n = nemb.preimage_of(&ek.sub);
                    if inner.contains(&k_in_n) && !members.contains(&ek.sub) {
                        return Ok(fail(json!({
                            "table": table_json(t), "module": u.label(i),
                            "mid": en.sub.elements, "inner": ek.sub.elements,
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s8_prop_restriction(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.prehereditary.holds {
            continue;
        }
        for i in 0..u.len() {
            let members = subp(t, i)?;
            for en in u.sub_entries(i) {
                if !members.contains(&en.sub) {
                    continue;
                }
                // pseudocomplementedness passes down to intermediate modules
                for ek in u.sub_entries(i) {
                    if !en.sub.leq(&ek.sub) {
                        continue;
                    }
                    let (kr, kemb) = match (ek.rep, ek.emb.as_ref()) {
                        (Some(r), Some(emb)) => (r, emb),
                        _ => return Err(Error::ClosureMissing("submodules".into())),
                    };
                    let pulled = kemb.preimage_of(&en.sub);
                    if !subp(t, kr)?.contains(&pulled) {
                        return Ok(fail(json!({
                            "table": table_json(t), "module": u.label(i),
                            "pseudocomplemented": en.sub.elements, "intermediate": ek.sub.elements,
                        })));
                    }
                }
            }
        }
    }
    Ok(pass())
}

fn s8_prop_equal_subp(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for a in &ts {
        for b in &ts {
            let same = (0..u.len())
                .map(|i| Ok(subp(a, i)? == subp(b, i)?))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|x| x);
            if !same {
                continue;
            }
            let ia = injective_class(a, InjectivityMode::Definitional)?;
            let ib = injective_class(b, InjectivityMode::Definitional)?;
            if ia != ib {
                return Ok(fail(json!({ "a": table_json(a), "b": table_json(b) })));
            }
        }
    }
    Ok(pass())
}

fn s8_cor_singular(s: &mut Session) -> Result<Outcome> {
    for ring in ["z4", "t2f2"] {
        let u = s.universe(ring, 2)?;
        let z = PreradicalTable::singular(&u)?;
        for i in 0..u.len() {
            let inj = is_injective(u.rep(i))?;
            let zinj = is_sigma_injective(&z, i, InjectivityMode::Definitional)?.holds;
            if inj != zinj {
                return Ok(fail(json!({
                    "ring": ring, "module": u.label(i),
                    "injective": inj, "singular_injective": zinj,
                })));
            }
        }
    }
    Ok(pass())
}

fn pure_in_every_torsion_free_host(t: &PreradicalTable, m: usize) -> Result<bool> {
    let u = t.universe();
    for n in 0..u.len() {
        if !t.value(n).is_zero() {
            continue;
        }
        for e in u.sub_entries(n) {
            if e.rep == Some(m) && !is_pure(t, &e.sub, n)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn s9_prop_abs_pure(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.costable.holds {
            continue;
        }
        for i in 0..u.len() {
            if !t.value(i).is_zero() {
                continue;
            }
            if pure_in_every_torsion_free_host(t, i)? && !is_absolutely_pure(t, i)? {
                return Ok(fail(json!({ "table": table_json(t), "module": u.label(i) })));
            }
        }
    }
    Ok(pass())
}

fn s9_prop_eid_converse(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.essentially_idempotent.holds {
            continue;
        }
        for i in 0..u.len() {
            if is_absolutely_pure(t, i)? && !pure_in_every_torsion_free_host(t, i)? {
                return Ok(fail(json!({ "table": table_json(t), "module": u.label(i) })));
            }
        }
    }
    Ok(pass())
}

fn s9_prop_unique_ext(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    let u = s.universe("z4", 2)?;
    for t in &ts {
        if !t.traits()?.idempotent.holds {
            continue;
        }
        for i in 0..u.len() {
            let abs = is_absolutely_pure(t, i)?;
            let unique = unique_extension_check(t, i)?;
            if abs != unique {
                return Ok(fail(json!({
                    "table": table_json(t), "module": u.label(i),
                    "absolutely_pure": abs, "unique_extension": unique,
                })));
            }
        }
    }
    Ok(pass())
}

fn s10_remark_costable(s: &mut Session) -> Result<Outcome> {
    let mut ts = s.lattice("z4", 2)?;
    for ring in ["z8", "t2f2"] {
        let u = s.universe(ring, 2)?;
        ts.extend(sample_tables(&u)?);
    }
    for t in &ts {
        let tr = t.traits()?;
        if tr.costable.holds && !tr.autocostable.holds {
            return Ok(fail(json!({ "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s10_prop_auto_eid(s: &mut Session) -> Result<Outcome> {
    let mut ts = s.lattice("z4", 2)?;
    for ring in ["z8", "t2f2"] {
        let u = s.universe(ring, 2)?;
        ts.extend(sample_tables(&u)?);
    }
    for t in &ts {
        let tr = t.traits()?;
        if tr.autocostable.holds && tr.essentially_idempotent.holds && !tr.costable.holds {
            return Ok(fail(json!({ "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s10_cor_leftexact(s: &mut Session) -> Result<Outcome> {
    let mut ts = s.lattice("z4", 2)?;
    for ring in ["z8", "t2f2"] {
        let u = s.universe(ring, 2)?;
        ts.extend(sample_tables(&u)?);
    }
    for t in &ts {
        let tr = t.traits()?;
        if tr.autocostable.holds
            && tr.essentially_idempotent.holds
            && tr.radical.holds
            && !tr.left_exact.holds
        {
            return Ok(fail(json!({ "table": table_json(t) })));
        }
    }
    Ok(pass())
}

fn s11_localization(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    for t in &ts {
        let r = localization_report(t)?;
        if !r.first_biconditional || !r.second_biconditional || !r.all_hold() {
            return Ok(fail(json!({
                "table": table_json(t),
                "report": serde_json::to_value(&r)?,
            })));
        }
    }
    Ok(pass())
}

// acceptance criteria

fn golden_dir() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

fn read_golden(name: &str) -> Result<Option<Value>> {
    let path = golden_dir().join(name);
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(path)?;
    Ok(Some(serde_json::from_str(&text)?))
}

fn a1_counterexample(s: &mut Session) -> Result<Outcome> {
    s3_counterexample(s)
}

fn a2_operator_laws(s: &mut Session) -> Result<Outcome> {
    let ts = s.lattice("z4", 2)?;
    match read_golden("u4_preradicals.json")? {
        None => {
            return Ok(fail(json!({
                "note": "golden file missing", "computed_count": ts.len(),
            })))
        }
        Some(g) => {
            let want = g["count"].as_u64().unwrap_or(0) as usize;
            if ts.len() != want {
                return Ok(fail(json!({ "golden_count": want, "computed_count": ts.len() })));
            }
        }
    }
    for f in [
        s3_prop2_circ,
        s4_square_laws,
        s3_prop1_join_eid,
        s4_prop_meet_preh,
        s3_prop_hat_meet,
        s3_remark2_eid_iff,
        s3_prop_eid_radical,
    ] {
        let o = f(s)?;
        if o.status != Status::Pass {
            return Ok(o);
        }
    }
    Ok(pass())
}

fn a3_filters(s: &mut Session) -> Result<Outcome> {
    for f in [s2_filter_counts, s4_prop_filter_linear, s4_cor_filter_gabriel, s2_filter_bijection] {
        let o = f(s)?;
        if o.status != Status::Pass {
            return Ok(o);
        }
    }
    Ok(pass())
}

fn a4_hulls(s: &mut Session) -> Result<Outcome> {
    let u = s.universe("z4", 2)?;
    let z2 = u
        .rep_by_label("Z2")
        .ok_or_else(|| Error::UnknownModule("Z2".into()))?;
    let (hi, _) = u.hull_of(z2)?;
    if u.label(*hi) != "R" {
        return Ok(fail(json!({ "law": "hull of Z2 is Z4", "got": u.label(*hi) })));
    }
    let (hz, _) = u.hull_of(u.zero_rep())?;
    if *hz != u.zero_rep() {
        return Ok(fail(json!({ "law": "hull of 0 is 0" })));
    }
    s2_hull_laws(s)
}

fn a5_non_hereditary(s: &mut Session) -> Result<Outcome> {
    let u = s.universe("t2f2", 2)?;
    // the order 4 indecomposable summand of the regular module
    let reg_sig = u.signature(u.regular_rep()).to_vec();
    let p = reg_sig
        .iter()
        .filter_map(|&c| u.rep_by_signature(&[c]))
        .find(|&r| u.rep(r).order() == 4)
        .ok_or_else(|| Error::NotInUniverse("length 2 projective".into()))?;
    let tr = PreradicalTable::trace_of(&u, p)?;
    if !tr.value(p).is_full() {
        return Ok(fail(json!({ "law": "P is torsion for its trace" })));
    }
    let soc_p = submodule::socle(u.rep(p));
    let soc_class = u
        .entry_for(p, &soc_p)
        .and_then(|e| e.rep)
        .ok_or_else(|| Error::ClosureMissing("submodules".into()))?;
    if tr.value(soc_class).is_full() {
        return Ok(fail(json!({ "law": "socle of P is not torsion" })));
    }
    if torsion_class_hereditary(&tr)? {
        return Ok(fail(json!({ "law": "trace torsion class is not hereditary" })));
    }
    let sq = tr.square()?;
    if !(tr.leq(&sq)? && sq != tr) {
        return Ok(fail(json!({ "law": "square strictly exceeds" })));
    }
    if !sq.traits()?.prehereditary.holds {
        return Ok(fail(json!({ "law": "square prehereditary" })));
    }
    Ok(pass_with(json!({
        "projective": u.label(p),
        "socle_class": u.label(soc_class),
    })))
}

fn a6_injectivity(s: &mut Session) -> Result<Outcome> {
    for f in [s7_prop1_1iff5, s7_prop_baer, s7_hull_axioms] {
        let o = f(s)?;
        if o.status != Status::Pass {
            return Ok(o);
        }
    }
    Ok(pass())
}

fn a7_localization(s: &mut Session) -> Result<Outcome> {
    s11_localization(s)
}

fn a8_max_ring(s: &mut Session) -> Result<Outcome> {
    s4_prop_max_ring(s)
}

pub fn registry() -> Vec<Claim> {
    fn c(
        id: &'static str,
        title: &'static str,
        hypotheses: &'static str,
        universe: &'static str,
        run: fn(&mut Session) -> Result<Outcome>,
    ) -> Claim {
        Claim { id, title, hypotheses, universe, run }
    }
    vec![
        c("S2.hom-oracle", "cached hom sets match brute force enumeration", "none", "z4 bound 2", s2_hom_oracle),
        c("S2.hull-laws", "hull embeddings essential, hulls injective and idempotent, oracle agreement", "none", "z4 and z8 bound 2", s2_hull_laws),
        c("S2.filter-counts", "linear and Gabriel filter counts match the golden record", "none", "z4", s2_filter_counts),
        c("S2.filter-bijection", "filter round trips are identities on left exact tables", "left exact", "z4 bound 2", s2_filter_bijection),
        c("S3.counterexample", "pinned alpha of the product ring is not essentially idempotent, with exact values", "none", "z4xz4 bound 1", s3_counterexample),
        c("S3.prop1.join-eid", "joins of essentially idempotent tables are essentially idempotent", "essentially idempotent operands", "z4 bound 2, all tables", s3_prop1_join_eid),
        c("S3.prop2.circ", "circ is monotone, deflatory and idempotent", "none", "z4 bound 2, all tables", s3_prop2_circ),
        c("S3.remark1.torsion-classes", "torsion classes of a table, its circ and its hat agree; hat of circ is hat", "none", "z4 bound 2, all tables", s3_remark1_torsion_classes),
        c("S3.prop3.bar-eid", "bar of an essentially idempotent table is an essentially idempotent radical", "essentially idempotent", "z4 bound 2, all tables", s3_prop3_bar_eid),
        c("S3.prop.hat-meet", "hat of a meet equals hat of the meet of hats", "none", "z4 bound 2, pairs and triples", s3_prop_hat_meet),
        c("S3.remark2.eid-iff", "essentially idempotent iff hat preserves the torsion free class", "none", "z4 bound 2, all tables", s3_remark2_eid_iff),
        c("S3.remark3.ext-closed", "torsion free class of an essentially idempotent table is extension closed", "essentially idempotent", "z4 bound 2, all tables", s3_remark3_ext_closed),
        c("S3.prop.eid-radical", "essentially idempotent radicals are idempotent", "essentially idempotent radical", "z4 bound 2, all tables", s3_prop_eid_radical),
        c("S3.prop4.alpha-simple", "alpha pinned at the hull of a simple: essentially idempotent implies idempotent", "simple rep", "z2, z4, t2f2", s3_prop4_alpha_simple),
        c("S3.cor1.atoms-eid", "over semisimple rings every lattice atom is essentially idempotent", "semisimple ring", "z2 and z2xz2 bound 1", s3_cor1_atoms_eid),
        c("S4.square-laws", "square is monotone, inflatory and idempotent", "none", "z4 bound 2, all tables", s4_square_laws),
        c("S4.prop.meet-preh", "meets of prehereditary tables are prehereditary", "prehereditary operands", "z4 bound 2, all tables", s4_prop_meet_preh),
        c("S4.lemma1.square-tilde", "below hat of square iff tilde equals square", "none", "z4 bound 2, all tables", s4_lemma1_square_tilde),
        c("S4.prop.square-leftexact", "square of an idempotent table is left exact", "idempotent", "z4 bound 2, all tables", s4_prop_square_leftexact),
        c("S4.prop.costable-radical", "costable radicals are left exact", "costable radical", "z4 lattice plus z8 and t2f2 samples", s4_prop_costable_radical),
        c("S4.prop.eid-preh-costable", "essentially idempotent prehereditary tables are costable", "essentially idempotent and prehereditary", "z4 lattice plus z8 and t2f2 samples", s4_prop_eid_preh_costable),
        c("S4.prop.torsion-square", "every embedded copy of a torsion module lands inside square", "none", "z4 bound 2, all tables", s4_prop_torsion_square),
        c("S4.prop.simple-inj-alpha", "trace of a simple injective is left exact", "simple injective rep", "z2, z2xz2, z4, t2f2", s4_prop_simple_inj_alpha),
        c("S4.cor.atoms-preh", "atoms of the table lattice are prehereditary", "none", "z4 bound 2", s4_cor_atoms_preh),
        c("S4.prop.leftexact-stn-join", "join of a left exact and a strongly nilpotent table meeting at zero is prehereditary", "left exact, strongly nilpotent, meet zero", "z4 bound 2, all pairs", s4_prop_leftexact_stn_join),
        c("S4.prop.max-ring", "jacobson is prehereditary with trivial torsion class and zero hat", "left max ring at finite scale", "z4, z8, t2f2", s4_prop_max_ring),
        c("S4.prop.filter-linear", "prehereditary iff the associated filter is linear", "none", "z4 bound 2, all tables", s4_prop_filter_linear),
        c("S4.cor.filter-gabriel", "hereditary torsion class iff the associated filter is Gabriel", "none", "z4 bound 2, all tables", s4_cor_filter_gabriel),
        c("S5.prop1.nonsingular", "over nonsingular modules essential iff singular quotient", "nonsingular module", "z2, z4, t2f2", s5_prop1_nonsingular),
        c("S5.prop2.essential", "essentiality: transitivity, intersections, restriction, upward closure", "none", "z4 and t2f2 bound 2", s5_prop2_essential),
        c("S5.prop3.upward", "density is upward closed", "none", "z4 bound 2, all tables", s5_prop3_upward),
        c("S5.prop3.colon", "colon ideals of dense submodules are dense in the ring", "prehereditary", "z4 bound 2, all tables", s5_prop3_colon),
        c("S5.prop3.intersection", "finite intersections of dense submodules are dense", "prehereditary", "z4 bound 2, all tables", s5_prop3_intersection),
        c("S5.prop3.restriction", "dense submodules restrict densely to submodules", "prehereditary", "z4 bound 2, all tables", s5_prop3_restriction),
        c("S5.prop3.pullback", "preimages of dense submodules along homs are dense", "prehereditary", "z4 bound 2, all tables", s5_prop3_pullback),
        c("S5.prop3.transitive", "density is transitive when the torsion class is extension closed", "extension closed torsion class", "z4 bound 2, all tables", s5_prop3_transitive),
        c("S5.prop.monotone-density", "density is monotone in the table and agrees with hat", "none", "z4 bound 2, all tables", s5_prop_monotone_density),
        c("S5.prop.tf-essential", "dense submodules of torsion free modules are essential", "prehereditary", "z4 bound 2, all tables", s5_prop_tf_essential),
        c("S6.prop.pure-intersection", "intersections of pure submodules are pure", "none", "z4 bound 2, all tables", s6_prop_pure_intersection),
        c("S6.lemma.pure-torsion", "a pure torsion submodule is the whole table value", "none", "z4 bound 2, all tables", s6_lemma_pure_torsion),
        c("S6.purification-laws", "purification: least pure over, fixpoint test, radical quotient, bar agreement", "none", "z4 bound 2, all tables", s6_purification_laws),
        c("S7.prop1.1iff2", "purity in the hull iff every copy is a summand of a pure submodule", "idempotent radical", "z4 bound 2, all tables", s7_prop1_1iff2),
        c("S7.prop1.1iff5", "purity mode injectivity iff definitional mode", "idempotent radical", "z4 bound 2, all tables", s7_prop1_1iff5),
        c("S7.prop.baer", "Baer mode iff definitional mode", "prehereditary", "z4 bound 2, all tables", s7_prop_baer),
        c("S7.prop.products", "a direct sum is injective relative to the table iff each summand is", "none", "z4 bound 2, all tables", s7_prop_products),
        c("S7.prop.pure-sub-inj", "pure submodules of relatively injective modules are relatively injective", "idempotent radical", "z4 bound 2, all tables", s7_prop_pure_sub_inj),
        c("S7.remark.radical-full", "if the table fills the hull then the module is relatively injective", "radical", "z4 bound 2, all tables", s7_remark_radical_full),
        c("S7.prop.quasi-full", "quasi-injective modules with radical omega are injective for every filling table", "quasi-injective, omega radical", "z4 bound 2, all tables", s7_prop_quasi_full),
        c("S7.lemma.fuchs", "fuchs criterion agrees with quasi-injectivity", "none", "z4, z8, t2f2", s7_lemma_fuchs),
        c("S7.hull-axioms", "relative hulls: purity-injective, dense for idempotent radicals, fixpoint, uniqueness", "idempotent radical for the conditional laws", "z4 bound 2, all tables", s7_hull_axioms),
        c("S8.remark.subp-members", "zero, the module, dense submodules and summands are pseudocomplemented", "none", "z4 bound 2, all tables", s8_remark_subp_members),
        c("S8.prop.monotone", "pseudocomplemented families grow with the table", "comparable tables", "z4 bound 2, all tables", s8_prop_monotone),
        c("S8.prop.transitive", "pseudocomplementedness is transitive along chains", "essentially coidempotent", "z4 bound 2, all tables", s8_prop_transitive),
        c("S8.prop.restriction", "pseudocomplemented in the module implies pseudocomplemented in every intermediate", "prehereditary", "z4 bound 2, all tables", s8_prop_restriction),
        c("S8.prop.equal-subp", "equal pseudocomplemented families force equal injectivity classes", "none", "z4 bound 2, all tables", s8_prop_equal_subp),
        c("S8.cor.singular", "injective iff injective relative to the singular table", "none", "z4 and t2f2 bound 2", s8_cor_singular),
        c("S9.prop.abs-pure", "costable: torsion free and pure in every torsion free host implies absolutely pure", "costable", "z4 bound 2, all tables", s9_prop_abs_pure),
        c("S9.prop.eid-converse", "essentially idempotent: absolutely pure implies pure in every torsion free host", "essentially idempotent", "z4 bound 2, all tables", s9_prop_eid_converse),
        c("S9.prop.unique-ext", "absolutely pure iff unique extension property", "idempotent", "z4 bound 2, all tables", s9_prop_unique_ext),
        c("S10.remark.costable", "costable implies autocostable", "costable", "z4 lattice plus z8 and t2f2 samples", s10_remark_costable),
        c("S10.prop.auto-eid", "autocostable and essentially idempotent implies costable", "autocostable and essentially idempotent", "z4 lattice plus z8 and t2f2 samples", s10_prop_auto_eid),
        c("S10.cor.leftexact", "autocostable essentially idempotent radicals are left exact", "autocostable, essentially idempotent, radical", "z4 lattice plus z8 and t2f2 samples", s10_cor_leftexact),
        c("S11.localization", "localization biconditionals and the left exact radical consequences", "per-law hypotheses inside the report", "z4 bound 2, all tables", s11_localization),
        c("A1", "exact product ring counterexample", "none", "z4xz4 bound 1", a1_counterexample),
        c("A2", "golden enumeration count and the operator law bundle", "none", "z4 bound 2", a2_operator_laws),
        c("A3", "filter counts, correspondences and round trips", "none", "z4", a3_filters),
        c("A4", "hull correctness with the essential extension oracle", "none", "z4 and z8 bound 2", a4_hulls),
        c("A5", "non-hereditary torsion class from the projective trace", "none", "t2f2 bound 2", a5_non_hereditary),
        c("A6", "relative injectivity equivalences and hull axioms", "mode hypotheses per table class", "z4 bound 2", a6_injectivity),
        c("A7", "localization biconditionals", "per-law hypotheses inside the report", "z4 bound 2", a7_localization),
        c("A8", "max ring proposition for the jacobson table", "none", "z4, z8, t2f2", a8_max_ring),
    ]
}

pub fn find(id: &str) -> Result<Claim> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

pub fn run_claim(id: &str, s: &mut Session) -> Result<ClaimResult> {
    let claim = find(id)?;
    let outcome = (claim.run)(s)?;
    Ok(ClaimResult {
        claim_id: claim.id.to_string(),
        hypotheses: claim.hypotheses.to_string(),
        universe: claim.universe.to_string(),
        status: outcome.status,
        witness: outcome.witness,
    })
}

pub fn run_all(s: &mut Session) -> Result<Vec<ClaimResult>> {
    registry().iter().map(|c| run_claim(c.id, s)).collect()
}

pub fn all_passed(results: &[ClaimResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique_and_resolvable() {
        let reg = registry();
        let mut ids: Vec<&str> = reg.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let n = ids.len();
        ids.dedup();
        assert_eq!(n, ids.len());
        assert!(find("S3.counterexample").is_ok());
        assert!(matches!(find("S99.nope"), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn counterexample_claim_passes_with_witness() {
        let mut s = Session::new();
        let r = run_claim("S3.counterexample", &mut s).unwrap();
        assert_eq!(r.status, Status::Pass);
        let w = r.witness.unwrap();
        assert!(w["witness_module"].is_string());
    }

    #[test]
    fn lattice_claims_pass_over_z4() {
        let mut s = Session::new();
        for id in [
            "S3.prop2.circ",
            "S4.square-laws",
            "S3.remark1.torsion-classes",
            "S3.remark2.eid-iff",
            "S4.prop.max-ring",
        ] {
            let r = run_claim(id, &mut s).unwrap();
            assert_eq!(r.status, Status::Pass, "{id}: {:?}", r.witness);
        }
    }

    #[test]
    #[ignore = "full sweep, minutes; run with cargo test -- --ignored"]
    fn every_registered_claim_passes() {
        let mut s = Session::new();
        for r in run_all(&mut s).unwrap() {
            assert_ne!(r.status, Status::Fail, "{}: {:?}", r.claim_id, r.witness);
        }
    }

    #[test]
    fn density_claims_pass_over_z4() {
        let mut s = Session::new();
        for id in [
            "S5.prop3.upward",
            "S5.prop3.colon",
            "S5.prop3.intersection",
            "S5.prop3.transitive",
            "S5.prop.monotone-density",
            "S6.lemma.pure-torsion",
        ] {
            let r = run_claim(id, &mut s).unwrap();
            assert_eq!(r.status, Status::Pass, "{id}: {:?}", r.witness);
        }
    }
}
