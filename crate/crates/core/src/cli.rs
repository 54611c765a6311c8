//! The `morpho` command line.
//!
//! Exit codes: 0 success or property holds, 1 property fails, 2 bad input,
//! 3 capability limit (enumeration bound, missing closed form, no atoms).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::io;
use crate::lattice::{Lattice, SubStructure};
use crate::logic::{self, Derivation, Profile};
use crate::morphology::{
    check_all_laws, check_law, compare_methods, dilate_with, erode_with, Law, LawReport, Method,
    MethodComparison, MethodResult, Sampler,
};
use crate::structures::{builtin_se, make_lattice, Builtin};
use crate::structuring::StructuringElement;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "morpho", version, about = "Morphology over lattices of substructures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Erode, dilate, open or close a substructure.
    Morph(MorphArgs),
    /// Check erosion/dilation laws on a structuring element.
    Laws(LawsArgs),
    /// Compare the generic, closed-form and procedural evaluations.
    Diverge(DivergeArgs),
    /// Evaluate formulas, validate axioms, check derivations.
    #[command(subcommand)]
    Logic(LogicCommand),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    Erode,
    Dilate,
    Open,
    Close,
}

#[derive(Args, Debug)]
struct Instance {
    /// Ground JSON file.
    #[arg(long)]
    ground: PathBuf,
    /// Structuring element JSON file, or the name of a builtin.
    #[arg(long)]
    se: String,
    /// elements | vertices | edges | hyperedges (default: first mode of the structure).
    #[arg(long)]
    forget: Option<String>,
}

#[derive(Args, Debug)]
struct MorphArgs {
    op: Op,
    #[command(flatten)]
    instance: Instance,
    /// Substructure JSON file.
    #[arg(long)]
    object: PathBuf,
    /// generic | fast | paper-algorithm
    #[arg(long, default_value = "generic")]
    method: String,
    /// Write the result here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a Graphviz rendering.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Baseline for the rendering: kept components solid, removed dashed, added bold.
    #[arg(long)]
    diff: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct LawsArgs {
    #[command(flatten)]
    instance: Instance,
    /// A law id or `all`.
    #[arg(long, default_value = "all")]
    law: String,
    /// Random instances instead of exhaustive checking.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here; a summary goes to stdout.
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DivergeArgs {
    #[command(flatten)]
    instance: Instance,
    #[arg(long, conflicts_with = "samples")]
    object: Option<PathBuf>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum LogicCommand {
    /// Print the denotation of a formula.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        formula: String,
    },
    /// Exit 0 iff the model satisfies the formula.
    Check {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        formula: String,
    },
    /// Validate the axiom schemas of a profile on a model.
    Axioms {
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value = "intuitionistic-base")]
        profile: String,
    },
    /// Check a derivation file.
    ProveCheck {
        #[arg(long)]
        proof: PathBuf,
        /// Overrides the profile named in the file.
        #[arg(long)]
        profile: Option<String>,
    },
}

/// Runs the command line and returns the exit code. `args` includes the
/// program name.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let mut out = std::io::stdout().lock();
    match dispatch(cli.command, &mut out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_capability_limit() {
        EXIT_LIMIT
    } else {
        EXIT_INPUT
    }
}

fn dispatch(cmd: Command, out: &mut dyn std::io::Write) -> Result<i32> {
    match cmd {
        Command::Morph(a) => morph(a, out),
        Command::Laws(a) => laws(a, out),
        Command::Diverge(a) => diverge(a, out),
        Command::Logic(c) => logic_cmd(c, out),
    }
}

fn read_json(path: &Path, what: &str) -> Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    io::parse_json(&text, &format!("{what} {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn std::io::Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Input(format!("stdout: {e}")))
}

fn load_instance(inst: &Instance) -> Result<(Lattice, StructuringElement)> {
    let ground = io::ground_from_json(&read_json(&inst.ground, "ground")?)?;
    let forget = io::forget_or_default(&ground, inst.forget.as_deref())?;
    let lattice = make_lattice(ground, forget)?;
    let path = Path::new(&inst.se);
    let se = if !path.exists() {
        match Builtin::from_name(&inst.se) {
            Ok(b) => builtin_se(&lattice, &b)?,
            Err(_) => {
                return Err(Error::Input(format!(
                    "{}: no such file or builtin structuring element",
                    inst.se
                )))
            }
        }
    } else {
        io::se_from_json(&lattice, &read_json(path, "structuring element")?)?
    };
    Ok((lattice, se))
}

fn load_object(lattice: &Lattice, path: &Path) -> Result<SubStructure> {
    io::subobject_from_json(lattice, &read_json(path, "substructure")?)
}

fn morph(a: MorphArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    let (lattice, se) = load_instance(&a.instance)?;
    let d = load_object(&lattice, &a.object)?;
    let method: Method = a.method.parse()?;
    let (l, b) = (&lattice, &se);
    let result = match a.op {
        Op::Erode => erode_with(method, l, b, &d)?,
        Op::Dilate => dilate_with(method, l, b, &d)?,
        Op::Open => dilate_with(method, l, b, &erode_with(method, l, b, &d)?)?,
        Op::Close => erode_with(method, l, b, &dilate_with(method, l, b, &d)?)?,
    };
    let text = io::to_pretty(&io::subobject_to_json(l, &result)?);
    match &a.out {
        Some(p) => write_file(p, &text)?,
        None => emit(out, &text)?,
    }
    if let Some(p) = &a.dot {
        let baseline = match &a.diff {
            Some(path) => Some(load_object(l, path)?),
            None => None,
        };
        write_file(p, &io::to_dot(l, &result, baseline.as_ref())?)?;
    }
    Ok(EXIT_OK)
}

fn report_code(reports: &[LawReport]) -> i32 {
    if reports.iter().any(LawReport::is_falsified) {
        EXIT_FAILS
    } else {
        EXIT_OK
    }
}

fn laws(a: LawsArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    let (lattice, se) = load_instance(&a.instance)?;
    let sampler = match a.samples {
        Some(n) => Sampler::Random { n, seed: a.seed },
        None => Sampler::Exhaustive,
    };
    let reports = if a.law == "all" {
        check_all_laws(&lattice, &se, sampler)?
    } else {
        let law: Law = a.law.parse()?;
        vec![check_law(&lattice, &se, law, sampler)?]
    };
    let text = io::to_pretty(&reports);
    match &a.report {
        Some(p) => {
            write_file(p, &text)?;
            let mut summary = String::new();
            for r in &reports {
                let status = serde_json::to_value(r.status).expect("serializable");
                summary.push_str(&format!("{:<24} {}\n", r.law, status.as_str().unwrap_or("")));
            }
            emit(out, &summary)?;
        }
        None => emit(out, &text)?,
    }
    Ok(report_code(&reports))
}

fn methods_json(lattice: &Lattice, list: &[MethodResult]) -> Result<Value> {
    let mut results = Vec::new();
    let mut notes = serde_json::Map::new();
    for r in list {
        results.push(match &r.result {
            Some(d) => io::subobject_to_json(lattice, d)?,
            None => Value::Null,
        });
        if let Some(n) = &r.note {
            notes.insert(r.method.name().into(), Value::String(n.clone()));
        }
    }
    Ok(json!({
        "methods": list.iter().map(|r| r.method.name()).collect::<Vec<_>>(),
        "results": results,
        "matrix": MethodComparison::matrix(list),
        "notes": notes,
    }))
}

fn comparison_json(lattice: &Lattice, c: &MethodComparison) -> Result<Value> {
    Ok(json!({
        "object": io::subobject_to_json(lattice, &c.object)?,
        "erosion": methods_json(lattice, &c.erosion)?,
        "dilation": methods_json(lattice, &c.dilation)?,
        "divergences": c
            .divergences()
            .iter()
            .map(|(op, m)| format!("{op}:{}", m.name()))
            .collect::<Vec<_>>(),
        "agrees": c.agrees(),
    }))
}

fn diverge(a: DivergeArgs, out: &mut dyn std::io::Write) -> Result<i32> {
    let (lattice, se) = load_instance(&a.instance)?;
    if let Some(path) = &a.object {
        let d = load_object(&lattice, path)?;
        let c = compare_methods(&lattice, &se, &d)?;
        emit(out, &io::to_pretty(&comparison_json(&lattice, &c)?))?;
        return Ok(if c.agrees() { EXIT_OK } else { EXIT_FAILS });
    }
    let n = a.samples.ok_or_else(|| {
        Error::Input("diverge needs --object or --samples".into())
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    let mut divergent = 0usize;
    let mut first = Value::Null;
    for _ in 0..n {
        let d = lattice.random_subobject(&mut rng);
        let c = compare_methods(&lattice, &se, &d)?;
        if !c.agrees() {
            divergent += 1;
            for (op, m) in c.divergences() {
                *counts.entry(format!("{op}:{}", m.name())).or_default() += 1;
            }
            if first.is_null() {
                first = comparison_json(&lattice, &c)?;
            }
        }
    }
    let doc = json!({
        "samples": n,
        "seed": a.seed,
        "divergent": divergent,
        "divergences": counts,
        "first_divergence": first,
    });
    emit(out, &io::to_pretty(&doc))?;
    Ok(if divergent == 0 { EXIT_OK } else { EXIT_FAILS })
}

fn load_model(path: &Path) -> Result<logic::Model> {
    io::model_from_json(&read_json(path, "model")?)
}

fn logic_cmd(c: LogicCommand, out: &mut dyn std::io::Write) -> Result<i32> {
    match c {
        LogicCommand::Eval { model, formula } => {
            let m = load_model(&model)?;
            let phi = logic::parse_formula(&formula)?;
            let d = logic::eval(&m, &phi)?;
            emit(out, &io::to_pretty(&io::subobject_to_json(m.lattice(), &d)?))?;
            Ok(EXIT_OK)
        }
        LogicCommand::Check { model, formula } => {
            let m = load_model(&model)?;
            let phi = logic::parse_formula(&formula)?;
            let d = logic::eval(&m, &phi)?;
            let sat = d == m.lattice().top();
            let doc = json!({
                "formula": phi.to_string(),
                "satisfied": sat,
                "denotation": io::subobject_to_json(m.lattice(), &d)?,
            });
            emit(out, &io::to_pretty(&doc))?;
            Ok(if sat { EXIT_OK } else { EXIT_FAILS })
        }
        LogicCommand::Axioms { model, profile } => {
            let m = load_model(&model)?;
            let profile: Profile = profile.parse()?;
            let reports = logic::validate_axiom_suite(&m, profile)?;
            emit(out, &io::to_pretty(&reports))?;
            Ok(report_code(&reports))
        }
        LogicCommand::ProveCheck { proof, profile } => {
            let text = std::fs::read_to_string(&proof)
                .map_err(|e| Error::Input(format!("{}: {e}", proof.display())))?;
            let mut d = Derivation::from_json(&text)?;
            if let Some(p) = profile {
                d.profile = p.parse()?;
            }
            match logic::check_derivation(&d) {
                Ok(cert) => {
                    let doc = json!({
                        "accepted": true,
                        "conclusion": cert.conclusion.to_string(),
                        "kind": cert.kind,
                        "premises_used": cert.premises_used,
                    });
                    emit(out, &io::to_pretty(&doc))?;
                    Ok(EXIT_OK)
                }
                Err(Error::InvalidStep { line, reason }) => {
                    let doc = json!({ "accepted": false, "line": line, "reason": reason });
                    emit(out, &io::to_pretty(&doc))?;
                    eprintln!("rejected at line {line}: {reason}");
                    Ok(EXIT_FAILS)
                }
                Err(e) => Err(e),
            }
        }
    }
}
