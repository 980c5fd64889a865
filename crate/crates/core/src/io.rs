//! JSON documents for rings, modules, universes, preradical tables and
//! filters. Loading always re-validates: rings re-run the axiom checks,
//! universes rebuild every cache and re-verify the closure certificate,
//! tables re-check naturality. Serialization is deterministic, so equal
//! values produce byte-identical documents.

use crate::error::Result;
use crate::filters::FilterTable;
use crate::module::FinModule;
use crate::preradical::PreradicalTable;
use crate::ring::FiniteRing;
use crate::submodule::Submodule;
use crate::universe::{ClosureCertificate, ClosurePolicy, Universe};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RingDoc {
    pub name: String,
    pub invariant_factors: Vec<u64>,
    pub mult_table: Vec<Vec<Vec<u64>>>,
    pub one: Vec<u64>,
}

pub fn ring_doc(r: &FiniteRing) -> RingDoc {
    RingDoc {
        name: r.name.clone(),
        invariant_factors: r.factors.clone(),
        mult_table: r.mult.clone(),
        one: r.one.clone(),
    }
}

pub fn ring_from_doc(d: &RingDoc) -> Result<FiniteRing> {
    FiniteRing::new(&d.name, d.invariant_factors.clone(), d.mult_table.clone(), d.one.clone())
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub ring: RingDoc,
    pub invariant_factors: Vec<u64>,
    pub action: Vec<Vec<Vec<u64>>>,
    pub gens: Vec<Vec<u64>>,
}

pub fn module_doc(m: &FinModule) -> ModuleDoc {
    let k = m.factors.len();
    let gens = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    ModuleDoc {
        ring: ring_doc(&m.ring),
        invariant_factors: m.factors.clone(),
        action: m.action.clone(),
        gens,
    }
}

pub fn module_from_doc(d: &ModuleDoc, ring: &Arc<FiniteRing>) -> Result<FinModule> {
    let declared = ring_from_doc(&d.ring)?;
    if declared != **ring {
        return Err(crate::error::Error::RingMismatch);
    }
    let m = FinModule::new(Arc::clone(ring), d.invariant_factors.clone(), d.action.clone())?;
    if !Submodule::from_generators(&m, &d.gens).is_full() {
        return Err(crate::error::Error::ModuleAxiom(
            "declared gens do not generate the module".into(),
        ));
    }
    Ok(m)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ModuleBody {
    invariant_factors: Vec<u64>,
    action: Vec<Vec<Vec<u64>>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniverseDoc {
    /// caches are never persisted; they are rebuilt and re-verified on load
    pub hom_caches: String,
    pub ring: RingDoc,
    pub policy: ClosurePolicy,
    reps: Vec<ModuleBody>,
    pub closure_certificate: ClosureCertificate,
}

pub fn universe_doc(u: &Universe) -> UniverseDoc {
    UniverseDoc {
        hom_caches: "rebuilt".into(),
        ring: ring_doc(u.ring()),
        policy: u.policy().clone(),
        reps: (0..u.len())
            .map(|i| ModuleBody {
                invariant_factors: u.rep(i).factors.clone(),
                action: u.rep(i).action.clone(),
            })
            .collect(),
        closure_certificate: u.certificate().clone(),
    }
}

pub fn universe_from_doc(d: &UniverseDoc) -> Result<Arc<Universe>> {
    let ring = Arc::new(ring_from_doc(&d.ring)?);
    let reps = d
        .reps
        .iter()
        .map(|b| FinModule::new(Arc::clone(&ring), b.invariant_factors.clone(), b.action.clone()))
        .collect::<Result<Vec<_>>>()?;
    let u = Universe::from_reps(ring, reps, d.policy.clone())?;
    Ok(Arc::new(u))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableDoc {
    pub ring: String,
    /// element lists per rep, in universe order
    pub values: Vec<TableEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TableEntry {
    pub module: String,
    pub elements: Vec<Vec<u64>>,
}

pub fn table_doc(t: &PreradicalTable) -> TableDoc {
    let u = t.universe();
    TableDoc {
        ring: u.ring().name.clone(),
        values: (0..u.len())
            .map(|i| TableEntry {
                module: u.label(i).to_string(),
                elements: t.value(i).elements.clone(),
            })
            .collect(),
    }
}

pub fn table_from_doc(d: &TableDoc, u: &Arc<Universe>) -> Result<PreradicalTable> {
    if d.ring != u.ring().name || d.values.len() != u.len() {
        return Err(crate::error::Error::UniverseMismatch);
    }
    let mut values = Vec::with_capacity(u.len());
    for (i, entry) in d.values.iter().enumerate() {
        if entry.module != u.label(i) {
            return Err(crate::error::Error::UniverseMismatch);
        }
        values.push(Submodule::from_elements(u.rep(i), &entry.elements));
    }
    PreradicalTable::new(Arc::clone(u), values)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FilterDoc {
    pub ring: RingDoc,
    /// generator matrices, one per ideal
    pub ideals: Vec<Vec<Vec<u64>>>,
    pub flags: FilterFlags,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FilterFlags {
    pub linear: bool,
    pub gabriel: bool,
}

pub fn filter_doc(f: &FilterTable) -> FilterDoc {
    FilterDoc {
        ring: ring_doc(&f.ring),
        ideals: f.ideals.iter().map(|i| i.elements.clone()).collect(),
        flags: FilterFlags {
            linear: f.linear.holds,
            gabriel: f.gabriel.holds,
        },
    }
}

pub fn filter_from_doc(d: &FilterDoc) -> Result<FilterTable> {
    let ring = Arc::new(ring_from_doc(&d.ring)?);
    let reg = FinModule::regular(Arc::clone(&ring));
    let ideals = d
        .ideals
        .iter()
        .map(|gens| Submodule::from_generators(&reg, gens))
        .collect();
    let f = FilterTable::new(ring, ideals)?;
    if f.linear.holds != d.flags.linear || f.gabriel.holds != d.flags.gabriel {
        return Err(crate::error::Error::InvalidParameter(
            "declared filter flags disagree with recomputation".into(),
        ));
    }
    Ok(f)
}

/// Canonical document text: pretty JSON plus a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn from_text<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::universe::ClosurePolicy;

    fn u4() -> Arc<Universe> {
        let r = Arc::new(FiniteRing::builtin("z4").unwrap().unwrap());
        Arc::new(Universe::build(r, &[], ClosurePolicy::with_bound(2)).unwrap())
    }

    #[test]
    fn ring_documents_round_trip() {
        for name in ["z4", "z8", "z4xz4", "t2f2"] {
            let r = FiniteRing::builtin(name).unwrap().unwrap();
            let text = to_text(&ring_doc(&r)).unwrap();
            let doc: RingDoc = from_text(&text).unwrap();
            let back = ring_from_doc(&doc).unwrap();
            assert_eq!(r, back);
            assert_eq!(text, to_text(&ring_doc(&back)).unwrap());
        }
    }

    #[test]
    fn ring_documents_are_validated() {
        let r = FiniteRing::builtin("z4").unwrap().unwrap();
        let mut doc = ring_doc(&r);
        doc.one = vec![3];
        // 3 is a unit but not the identity, so the axiom check trips
        assert!(ring_from_doc(&doc).is_err());
    }

    #[test]
    fn module_documents_round_trip() {
        let u = u4();
        let ring = Arc::clone(u.ring());
        for i in 0..u.len() {
            let text = to_text(&module_doc(u.rep(i))).unwrap();
            let doc: ModuleDoc = from_text(&text).unwrap();
            let back = module_from_doc(&doc, &ring).unwrap();
            assert_eq!(*u.rep(i), back);
        }
    }

    #[test]
    fn universe_documents_round_trip_and_reverify() {
        let u = u4();
        let text = to_text(&universe_doc(&u)).unwrap();
        let doc: UniverseDoc = from_text(&text).unwrap();
        assert_eq!(doc.hom_caches, "rebuilt");
        let back = universe_from_doc(&doc).unwrap();
        assert!(u.same_as(&back));
        assert!(back.certificate().submodules);
        // byte-identical re-serialization
        assert_eq!(text, to_text(&universe_doc(&back)).unwrap());
    }

    #[test]
    fn table_documents_round_trip() {
        let u = u4();
        let soc = PreradicalTable::socle(&u).unwrap();
        let text = to_text(&table_doc(&soc)).unwrap();
        let doc: TableDoc = from_text(&text).unwrap();
        let back = table_from_doc(&doc, &u).unwrap();
        assert_eq!(soc, back);
    }

    #[test]
    fn filter_documents_round_trip() {
        let r = Arc::new(FiniteRing::builtin("z4").unwrap().unwrap());
        for f in crate::filters::enumerate_filters(&r).unwrap() {
            let text = to_text(&filter_doc(&f)).unwrap();
            let doc: FilterDoc = from_text(&text).unwrap();
            let back = filter_from_doc(&doc).unwrap();
            assert_eq!(f, back);
            assert_eq!(f.linear.holds, back.linear.holds);
            assert_eq!(f.gabriel.holds, back.gabriel.holds);
        }
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = from_text::<RingDoc>("{\"name\": \"x\",").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line") || msg.contains("column"), "{msg}");
    }
}
