//! prlab: compute with preradicals over finite rings.
//!
//! Subcommands mirror the library layers: rings, universes, preradical
//! expressions, filters, relative notions, claim checks, enumeration.
//! All JSON output is deterministic; identical inputs give identical bytes.

use clap::{Args, Parser, Subcommand, ValueEnum};
use prlab_core::checks::{self, Session, Status};
use prlab_core::error::{Error, Result};
use prlab_core::expr;
use prlab_core::filters::enumerate_filters;
use prlab_core::io::{self, FilterDoc, ModuleDoc, RingDoc, UniverseDoc};
use prlab_core::preradical::{enumerate_preradicals, PreradicalTable};
use prlab_core::relative::{
    is_dense, is_pure, is_sigma_injective, localize, pseudocomplement, sigma_injective_hull,
    InjectivityMode,
};
use prlab_core::ring::FiniteRing;
use prlab_core::submodule::Submodule;
use prlab_core::universe::{ClosurePolicy, Universe};
use serde_json::{json, Value};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

const ENUM_BUDGET: usize = 100_000;

#[derive(Parser)]
#[command(name = "prlab", version, about = "preradicals over finite rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ring documents
    Ring {
        #[command(subcommand)]
        cmd: RingCmd,
    },
    /// Build and verify module universes
    Universe {
        #[command(subcommand)]
        cmd: UniverseCmd,
    },
    /// Evaluate preradical expressions
    Pr {
        #[command(subcommand)]
        cmd: PrCmd,
    },
    /// Linear and Gabriel filters
    Filters {
        #[command(subcommand)]
        cmd: FiltersCmd,
    },
    /// Relative notions: density, purity, injectivity, hulls, localization
    Rel {
        #[command(subcommand)]
        cmd: RelCmd,
    },
    /// Run registered claims
    Check {
        #[command(subcommand)]
        cmd: CheckCmd,
    },
    /// Enumerate every preradical table over a universe
    Enumerate {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Emit the canonical document for a ring
    Define {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// List builtin ring names
    List {
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum UniverseCmd {
    /// Build a universe and emit its document
    Build {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Reload a universe document, re-verify closure, report the certificate
    Verify {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum PrCmd {
    /// Evaluate an expression to a table, or to one value with --module
    Eval {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        expr: String,
        #[arg(long)]
        module: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Trait report for an expression
    Traits {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The five operator closures of an expression
    Closure {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Subcommand)]
enum FiltersCmd {
    /// Enumerate all linear filters of a ring with Gabriel flags
    List {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Re-validate a filter document
    Check {
        /// path to a filter document
        path: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args)]
struct RelArgs {
    #[command(flatten)]
    src: SourceArgs,
    /// preradical expression defining the table
    #[arg(long)]
    expr: String,
    /// universe label of the module in question
    #[arg(long)]
    module: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Subcommand)]
enum RelCmd {
    /// Density certificate for a submodule, given as a generator matrix
    Dense {
        /// generators as a JSON matrix, e.g. "[[2,0]]"
        sub: String,
        #[command(flatten)]
        rel: RelArgs,
    },
    /// Purity of a submodule
    Pure {
        sub: String,
        #[command(flatten)]
        rel: RelArgs,
    },
    /// Purification of a submodule
    Purify {
        sub: String,
        #[command(flatten)]
        rel: RelArgs,
    },
    /// Relative injectivity in the chosen mode
    Injective {
        #[arg(value_enum, default_value_t = ModeArg::Definitional)]
        mode: ModeArg,
        #[command(flatten)]
        rel: RelArgs,
    },
    /// Relative injective hull
    Hull {
        #[command(flatten)]
        rel: RelArgs,
    },
    /// Pseudocomplement of a submodule, if one exists
    Pseudo {
        sub: String,
        #[command(flatten)]
        rel: RelArgs,
    },
    /// Localization of a module with its canonical map
    Localize {
        #[command(flatten)]
        rel: RelArgs,
    },
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Run every registered claim; exit 1 if any fails
    All {
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run one claim by id
    Claim {
        id: String,
        /// assert which ring the claim quantifies over
        #[arg(long)]
        ring: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Definitional,
    Purity,
    Baer,
}

impl From<ModeArg> for InjectivityMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Definitional => InjectivityMode::Definitional,
            ModeArg::Purity => InjectivityMode::Purity,
            ModeArg::Baer => InjectivityMode::Baer,
        }
    }
}

#[derive(Args)]
struct SourceArgs {
    /// builtin ring name or path to a ring document
    #[arg(long, default_value = "z4")]
    ring: String,
    /// universe document; takes precedence over --ring
    #[arg(long)]
    universe: Option<PathBuf>,
    /// module documents seeded into the universe build
    #[arg(long, num_args = 1..)]
    seeds: Vec<PathBuf>,
    /// closure bound on the number of indecomposable summands
    #[arg(long, default_value_t = 2)]
    sum_bound: usize,
    /// cap on the order of any module in the universe
    #[arg(long, default_value_t = 4096)]
    max_size: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct OutputArgs {
    /// write the report to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

fn load_ring(spec: &str) -> Result<FiniteRing> {
    if let Some(r) = FiniteRing::builtin(spec) {
        return r;
    }
    let doc: RingDoc = io::from_text(&fs::read_to_string(spec)?)?;
    io::ring_from_doc(&doc)
}

fn load_universe(src: &SourceArgs) -> Result<Arc<Universe>> {
    if let Some(p) = &src.universe {
        let doc: UniverseDoc = io::from_text(&fs::read_to_string(p)?)?;
        return io::universe_from_doc(&doc);
    }
    let ring = Arc::new(load_ring(&src.ring)?);
    let mut seeds = Vec::new();
    for p in &src.seeds {
        let doc: ModuleDoc = io::from_text(&fs::read_to_string(p)?)?;
        seeds.push(io::module_from_doc(&doc, &ring)?);
    }
    let mut policy = ClosurePolicy::with_bound(src.sum_bound);
    policy.max_module_size = src.max_size;
    Ok(Arc::new(Universe::build(ring, &seeds, policy)?))
}

fn resolve(u: &Universe, label: &str) -> Result<usize> {
    u.rep_by_label(label)
        .ok_or_else(|| Error::UnknownModule(label.to_string()))
}

fn parse_gens(u: &Universe, i: usize, s: &str) -> Result<Submodule> {
    let gens: Vec<Vec<u64>> = serde_json::from_str(s)?;
    let rank = u.rep(i).rank();
    if gens.iter().any(|g| g.len() != rank) {
        return Err(Error::InvalidParameter(format!(
            "generators must have {} coordinates",
            rank
        )));
    }
    Ok(Submodule::from_generators(u.rep(i), &gens))
}

fn emit(out: &OutputArgs, json: &Value, table: String) -> Result<()> {
    let text = match out.format {
        Format::Json => io::to_text(json)?,
        Format::Table => table,
    };
    match &out.out {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn sub_str(s: &Submodule) -> String {
    if s.is_zero() {
        return "0".to_string();
    }
    let gens: Vec<String> = s
        .canon
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .map(|r| {
            let coords: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            format!("({})", coords.join(","))
        })
        .collect();
    format!("<{}> order {}", gens.join(", "), s.order())
}

fn table_lines(t: &PreradicalTable) -> String {
    let u = t.universe();
    let mut s = String::new();
    for i in 0..u.len() {
        s.push_str(&format!("{}: {}\n", u.label(i), sub_str(t.value(i))));
    }
    s
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::NotApplicable => "not-applicable",
    }
}

fn run() -> Result<u8> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Ring { cmd } => match cmd {
            RingCmd::Define { src, out } => {
                let r = load_ring(&src.ring)?;
                let doc = io::ring_doc(&r);
                let table = format!(
                    "{}: order {}, {} generators\n",
                    r.name,
                    r.order(),
                    r.rank()
                );
                emit(&out, &serde_json::to_value(&doc)?, table)?;
                Ok(0)
            }
            RingCmd::List { out } => {
                let examples = ["z4", "z4xz4", "t2f2"];
                let mut rows = Vec::new();
                let mut table = String::new();
                for (pattern, example) in FiniteRing::builtin_names().iter().zip(examples) {
                    table.push_str(&format!("{pattern} (e.g. {example})\n"));
                    rows.push(json!({ "pattern": pattern, "example": example }));
                }
                emit(&out, &Value::Array(rows), table)?;
                Ok(0)
            }
        },
        Cmd::Universe { cmd } => match cmd {
            UniverseCmd::Build { src, out } => {
                let u = load_universe(&src)?;
                let doc = io::universe_doc(&u);
                let labels: Vec<&str> = (0..u.len()).map(|i| u.label(i)).collect();
                let table = format!(
                    "ring {}: {} reps: {}\n",
                    u.ring().name,
                    u.len(),
                    labels.join(", ")
                );
                emit(&out, &serde_json::to_value(&doc)?, table)?;
                Ok(0)
            }
            UniverseCmd::Verify { src, out } => {
                let path = src.universe.as_ref().ok_or_else(|| {
                    Error::InvalidParameter("verify needs --universe <path>".into())
                })?;
                let doc: UniverseDoc = io::from_text(&fs::read_to_string(path)?)?;
                match io::universe_from_doc(&doc) {
                    Ok(u) => {
                        let report = json!({
                            "ok": true,
                            "reps": u.len(),
                            "certificate": serde_json::to_value(u.certificate())?,
                        });
                        emit(&out, &report, format!("ok: {} reps\n", u.len()))?;
                        Ok(0)
                    }
                    Err(e) => {
                        let report = json!({ "ok": false, "error": e.to_string() });
                        emit(&out, &report, format!("failed: {}\n", e))?;
                        Ok(1)
                    }
                }
            }
        },
        Cmd::Pr { cmd } => match cmd {
            PrCmd::Eval { src, expr: e, module, out } => {
                let u = load_universe(&src)?;
                let t = expr::eval_str(&e, &u)?;
                match module {
                    Some(l) => {
                        let i = resolve(&u, &l)?;
                        let v = t.value(i);
                        let report = json!({
                            "expr": e,
                            "module": u.label(i),
                            "order": v.order(),
                            "elements": v.elements,
                        });
                        emit(&out, &report, format!("{}: {}\n", u.label(i), sub_str(v)))?;
                    }
                    None => {
                        let doc = io::table_doc(&t);
                        emit(&out, &serde_json::to_value(&doc)?, table_lines(&t))?;
                    }
                }
                Ok(0)
            }
            PrCmd::Traits { src, expr: e, out } => {
                let u = load_universe(&src)?;
                let t = expr::eval_str(&e, &u)?;
                let rep = t.traits()?;
                let mut table = String::new();
                for (name, flag) in [
                    ("idempotent", &rep.idempotent),
                    ("radical", &rep.radical),
                    ("left_exact", &rep.left_exact),
                    ("prehereditary", &rep.prehereditary),
                    ("essentially_idempotent", &rep.essentially_idempotent),
                    ("essentially_coidempotent", &rep.essentially_coidempotent),
                    ("strongly_nilpotent", &rep.strongly_nilpotent),
                    ("costable", &rep.costable),
                    ("autocostable", &rep.autocostable),
                ] {
                    match &flag.witness {
                        Some(w) if !flag.holds => {
                            table.push_str(&format!("{}: false (at {})\n", name, w.module))
                        }
                        _ => table.push_str(&format!("{}: {}\n", name, flag.holds)),
                    }
                }
                let report = json!({ "expr": e, "traits": serde_json::to_value(&rep)? });
                emit(&out, &report, table)?;
                Ok(0)
            }
            PrCmd::Closure { src, expr: e, out } => {
                let u = load_universe(&src)?;
                let t = expr::eval_str(&e, &u)?;
                let ops: [(&str, PreradicalTable); 5] = [
                    ("hat", t.hat()?),
                    ("bar", t.bar()?),
                    ("tilde", t.tilde()?),
                    ("circ", t.circ()?),
                    ("sq", t.square()?),
                ];
                let mut closures = serde_json::Map::new();
                let mut table = String::new();
                for (name, ct) in &ops {
                    let fixpoint = *ct == t;
                    closures.insert(
                        name.to_string(),
                        json!({
                            "fixpoint": fixpoint,
                            "table": serde_json::to_value(io::table_doc(ct))?,
                        }),
                    );
                    table.push_str(&format!(
                        "{}: {}\n",
                        name,
                        if fixpoint { "fixpoint" } else { "changed" }
                    ));
                }
                let report = json!({ "expr": e, "closures": Value::Object(closures) });
                emit(&out, &report, table)?;
                Ok(0)
            }
        },
        Cmd::Filters { cmd } => match cmd {
            FiltersCmd::List { src, out } => {
                let ring = Arc::new(load_ring(&src.ring)?);
                let fs_all = enumerate_filters(&ring)?;
                let gabriel = fs_all.iter().filter(|f| f.is_gabriel()).count();
                let docs: Vec<FilterDoc> = fs_all.iter().map(io::filter_doc).collect();
                let mut table = format!(
                    "ring {}: {} linear, {} gabriel\n",
                    ring.name,
                    fs_all.len(),
                    gabriel
                );
                for (k, f) in fs_all.iter().enumerate() {
                    table.push_str(&format!(
                        "filter {}: {} ideals, gabriel: {}\n",
                        k,
                        f.ideals.len(),
                        f.is_gabriel()
                    ));
                }
                let report = json!({
                    "ring": ring.name,
                    "linear": fs_all.len(),
                    "gabriel": gabriel,
                    "filters": serde_json::to_value(&docs)?,
                });
                emit(&out, &report, table)?;
                Ok(0)
            }
            FiltersCmd::Check { path, out } => {
                let doc: FilterDoc = io::from_text(&fs::read_to_string(&path)?)?;
                match io::filter_from_doc(&doc) {
                    Ok(f) => {
                        let report = json!({
                            "ok": true,
                            "linear": f.is_linear(),
                            "gabriel": f.is_gabriel(),
                        });
                        emit(&out, &report, "ok\n".to_string())?;
                        Ok(0)
                    }
                    Err(e @ (Error::InvalidParameter(_) | Error::NotLinear(_))) => {
                        let report = json!({ "ok": false, "error": e.to_string() });
                        emit(&out, &report, format!("failed: {}\n", e))?;
                        Ok(1)
                    }
                    Err(e) => Err(e),
                }
            }
        },
        Cmd::Rel { cmd } => match cmd {
            RelCmd::Dense { sub, rel } => {
                let u = load_universe(&rel.src)?;
                let t = expr::eval_str(&rel.expr, &u)?;
                let i = resolve(&u, &rel.module)?;
                let n = parse_gens(&u, i, &sub)?;
                let cert = is_dense(&t, &n, i)?;
                let table = format!("dense: {}\n", cert.verdict);
                emit(&rel.out, &serde_json::to_value(&cert)?, table)?;
                Ok(0)
            }
            RelCmd::Pure { sub, rel } => {
                let u = load_universe(&rel.src)?;
                let t = expr::eval_str(&rel.expr, &u)?;
                let i = resolve(&u, &rel.module)?;
                let n = parse_gens(&u, i, &sub)?;
                let v = is_pure(&t, &n, i)?;
                let report = json!({
                    "module": u.label(i),
                    "sub": n.elements,
                    "pure": v,
                });
                emit(&rel.out, &report, format!("pure: {}\n", v))?;
                Ok(0)
            }
            RelCmd::Purify { sub, rel } => {
                let u = load_universe(&rel.src)?;
                let t = expr::eval_str(&rel.expr, &u)?;
                let i = resolve(&u, &rel.module)?;
                let n = parse_gens(&u, i, &sub)?;
                let p = t.purification(i, &n)?;
                let report = json!({
                    "module": u.label(i),
                    "sub": n.elements,
                    "purification": p.elements,
                });
                emit(&rel.out, &report, format!("purification: {}\n", sub_str(&p)))?;
                Ok(0)
            }
            RelCmd::Injective { mode, rel } => {
                let u = load_universe(&rel.src)?;
                let t = expr::eval_str(&rel.expr, &u)?;
                let i = resolve(&u, &rel.module)?;
                let v = is_sigma_injective(&t, i, mode.into())?;
                let report = json!({
                    "module": u.label(i),
                    "verdict": serde_json::to_value(&v)?,
                });
                emit(&rel.out, &report, format!("injective: {}\n", v.holds))?;
                Ok(0)
            }
            RelCmd::Hull { rel } => {
                let u = load_universe(&rel.src)?;
                let t = expr::eval_str(&rel.expr, &u)?;
                let i = resolve(&u, &rel.module)?;
                let h = sigma_injective_hull(&t, i)?;
                let report = json!({
                    "module": u.label(h.of),
                    "hull": u.label(h.rep),
                    "shape": Universe::shape_of(&h.module),
                    "ambient": u.label(h.ambient),
                    "embedding": h.embedding.matrix,
                    "purification": h.purification.elements,
                });
                emit(&rel.out, &report, format!("hull: {}\n", u.label(h.rep)))?;
                Ok(0)
            }
            RelCmd::Pseudo { sub, rel } => {
                let u = load_universe(&rel.src)?;
                let t = expr::eval_str(&rel.expr, &u)?;
                let i = resolve(&u, &rel.module)?;
                let n = parse_gens(&u, i, &sub)?;
                let p = pseudocomplement(&t, &n, i)?;
                let report = json!({
                    "module": u.label(i),
                    "sub": n.elements,
                    "found": p.is_some(),
                    "pseudocomplement": p.as_ref().map(|k| k.elements.clone()),
                });
                let table = match &p {
                    Some(k) => format!("pseudocomplement: {}\n", sub_str(k)),
                    None => "pseudocomplement: none\n".to_string(),
                };
                emit(&rel.out, &report, table)?;
                Ok(0)
            }
            RelCmd::Localize { rel } => {
                let u = load_universe(&rel.src)?;
                let t = expr::eval_str(&rel.expr, &u)?;
                let i = resolve(&u, &rel.module)?;
                let l = localize(&t, i)?;
                let report = json!({
                    "module": u.label(l.of),
                    "localization": u.label(l.rep),
                    "shape": Universe::shape_of(&l.module),
                    "eta": l.eta.matrix,
                    "eta_is_iso": l.eta.is_iso(),
                    "eta_kernel": l.eta.kernel().elements,
                });
                let table = format!(
                    "Q({}) = {} ({}), eta {}\n",
                    u.label(l.of),
                    u.label(l.rep),
                    Universe::shape_of(&l.module),
                    if l.eta.is_iso() { "iso" } else { "not iso" }
                );
                emit(&rel.out, &report, table)?;
                Ok(0)
            }
        },
        Cmd::Check { cmd } => match cmd {
            CheckCmd::All { out } => {
                let mut s = Session::new();
                let results = checks::run_all(&mut s)?;
                let mut table = String::new();
                for r in &results {
                    table.push_str(&format!("{}: {}\n", r.claim_id, status_str(r.status)));
                }
                let ok = checks::all_passed(&results);
                emit(&out, &serde_json::to_value(&results)?, table)?;
                Ok(if ok { 0 } else { 1 })
            }
            CheckCmd::Claim { id, ring, out } => {
                let claim = checks::find(&id)?;
                if let Some(r) = &ring {
                    let mentioned = claim
                        .universe
                        .split([' ', ','])
                        .any(|tok| tok == r.as_str());
                    if !mentioned {
                        return Err(Error::InvalidParameter(format!(
                            "claim {} runs over {}, not {}",
                            id, claim.universe, r
                        )));
                    }
                }
                let mut s = Session::new();
                let result = checks::run_claim(&id, &mut s)?;
                let mut table = format!("{}: {}\n", result.claim_id, status_str(result.status));
                if let Some(w) = &result.witness {
                    table.push_str(&format!("witness: {}\n", w));
                }
                let failed = result.status == Status::Fail;
                emit(&out, &serde_json::to_value(&result)?, table)?;
                Ok(if failed { 1 } else { 0 })
            }
        },
        Cmd::Enumerate { src, out } => {
            let u = load_universe(&src)?;
            let ts = enumerate_preradicals(&u, ENUM_BUDGET)?;
            let docs: Vec<Value> = ts
                .iter()
                .map(|t| Ok(serde_json::to_value(io::table_doc(t))?))
                .collect::<Result<_>>()?;
            let mut table = format!(
                "ring {}: {} reps, {} preradical tables\n",
                u.ring().name,
                u.len(),
                ts.len()
            );
            for (k, t) in ts.iter().enumerate() {
                let orders: Vec<String> =
                    t.values().iter().map(|v| v.order().to_string()).collect();
                table.push_str(&format!("table {}: orders [{}]\n", k, orders.join(", ")));
            }
            let report = json!({
                "ring": u.ring().name,
                "reps": u.len(),
                "count": ts.len(),
                "tables": docs,
            });
            emit(&out, &report, table)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
