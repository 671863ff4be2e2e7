//! `phopf`: check, build, globalize and smash partial Hopf structures stored as JSON.
//!
//! Exit codes: 0 success, 1 a check failed or a precondition was violated, 2 unreadable input.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use phopf::actions::{check_action, check_group_partial_action, group_to_kg, is_global, PartialActionData};
use phopf::algebra::{algebra_check, group_algebra_default, hopf_check, sweedler_h4};
use phopf::coactions::{
    bicomodule_to_bimodule, certify_bicomodule, check_coaction, regular_bicomodule, PartialBicomoduleData,
};
use phopf::examples::{h4_bicomodule_k, h4_bimodule_k, z2_partial_group};
use phopf::globalization::{
    maximal_degenerate_subbimodule, psi_map, standard_globalize_bicomodule, standard_globalize_bimodule,
    theta_formulas, verify_globalization,
};
use phopf::io::{self, ActionFile, AlgebraFile, BicomoduleFile, BimoduleFile, CoactionFile, GlobalizationResult, GroupActionFile, HopfFile, Ref, ReportFile};
use phopf::smash::{check_smash_associativity, find_idempotent, smash_product};
use phopf::{actions, Error, FieldSpec, GroupTable, HopfData, Rational, Report, Scalar, Zp};

#[derive(Parser)]
#[command(name = "phopf", version, about = "Exact partial Hopf actions, globalizations and smash products")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for the checkers (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hopf,
    Algebra,
    Action,
    Coaction,
    Bimodule,
    Bicomodule,
    GroupAction,
}

#[derive(Clone, Copy, ValueEnum)]
enum GlobalKind {
    Bimodule,
    Bicomodule,
}

#[derive(Subcommand)]
enum Command {
    /// Run the axiom checker for a structure file.
    Check {
        kind: Kind,
        file: PathBuf,
        /// Also check the symmetry axioms of (co)actions.
        #[arg(long)]
        symmetric: bool,
    },
    /// Write a built-in example to disk.
    Example {
        name: String,
        /// `q` or `gf<p>`.
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        s: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        /// A built-in group name such as z4, s3 or q8.
        #[arg(long)]
        group: Option<String>,
        /// Elements of the normal subgroup, comma separated.
        #[arg(long = "N", value_delimiter = ',')]
        normal: Option<Vec<usize>>,
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
    },
    /// Build and certify the standard globalization.
    Globalize {
        kind: GlobalKind,
        file: PathBuf,
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
    },
    /// Build the smash product of a partial bimodule and a partial bicomodule algebra.
    Smash {
        a: PathBuf,
        abar: PathBuf,
        #[arg(short, long, default_value = ".")]
        out: PathBuf,
    },
}

struct Failed {
    code: u8,
    msg: String,
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        let code = if e.is_input_error() { 2 } else { 1 };
        Failed { code, msg: e.to_string() }
    }
}

type CliResult<T> = Result<T, Failed>;

fn fail<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failed { code: 1, msg: msg.into() })
}

macro_rules! with_field {
    ($field:expr, $f:ident($($arg:expr),*)) => {
        match $field {
            FieldSpec::Rationals => $f::<Rational>($($arg),*),
            FieldSpec::PrimeField { .. } => $f::<Zp>($($arg),*),
        }
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            if cli.format == Format::Json {
                println!("{}", json!({ "error": f.msg, "exit_code": f.code }));
            } else {
                eprintln!("error: {}", f.msg);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<bool> {
    match &cli.command {
        Command::Check { kind, file, symmetric } => {
            let field = io::detect_field(file)?;
            with_field!(field, cmd_check(cli.format, *kind, file, *symmetric))
        }
        Command::Example {
            name,
            field,
            r,
            s,
            t,
            u,
            group,
            normal,
            out,
        } => {
            let field = parse_field(field)?;
            let params = Params {
                r: r.clone(),
                s: s.clone(),
                t: t.clone(),
                u: u.clone(),
                group: group.clone(),
                normal: normal.clone(),
            };
            with_field!(field, cmd_example(cli.format, name, field, &params, out))
        }
        Command::Globalize { kind, file, out } => {
            let field = io::detect_field(file)?;
            with_field!(field, cmd_globalize(cli.format, *kind, file, out))
        }
        Command::Smash { a, abar, out } => {
            let fa = io::detect_field(a)?;
            let fb = io::detect_field(abar)?;
            if fa != fb {
                return fail(format!("the factors are over different fields ({fa} and {fb})"));
            }
            with_field!(fa, cmd_smash(cli.format, a, abar, out))
        }
    }
}

fn parse_field(s: &str) -> CliResult<FieldSpec> {
    let t = s.trim().to_ascii_lowercase();
    if matches!(t.as_str(), "q" | "qq" | "rationals") {
        return Ok(FieldSpec::Rationals);
    }
    if let Some(p) = t.strip_prefix("gf").and_then(|p| p.parse::<u64>().ok()) {
        return Ok(FieldSpec::prime(p)?);
    }
    fail(format!("unknown field {s:?} (use q or gf<p>)"))
}

fn emit_report<F: Scalar>(format: Format, title: &str, r: &Report<F>) -> bool {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&ReportFile::from_report(r)).expect("serializable")),
        Format::Text => {
            if r.passed() {
                println!("PASS {title}");
            } else {
                println!("FAIL {title}: {} failure(s)", r.failures().len());
                for f in r.failures().iter().take(5) {
                    let show = |v: &[F]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
                    println!("  {} at {:?}: lhs [{}] rhs [{}]", f.law, f.indices, show(&f.lhs), show(&f.rhs));
                }
            }
        }
    }
    r.passed()
}

fn cmd_check<F: Scalar>(format: Format, kind: Kind, file: &Path, symmetric: bool) -> CliResult<bool> {
    let title = file.display().to_string();
    let report = match kind {
        Kind::Hopf => hopf_check(&io::load_hopf::<F>(file)?)?,
        Kind::Algebra => algebra_check(&io::load_algebra::<F>(file)?)?,
        Kind::Action => {
            let (p, sym) = io::load_action::<F>(file)?;
            check_action(&p, sym || symmetric)?
        }
        Kind::Coaction => check_coaction(&io::load_coaction::<F>(file)?, symmetric)?,
        Kind::Bimodule => actions::certify_bimodule(&io::load_bimodule::<F>(file)?)?,
        Kind::Bicomodule => certify_bicomodule(&io::load_bicomodule::<F>(file)?)?,
        Kind::GroupAction => check_group_partial_action(&io::load_group_action::<F>(file)?)?,
    };
    Ok(emit_report(format, &title, &report))
}

struct Params {
    r: Option<String>,
    s: Option<String>,
    t: Option<String>,
    u: Option<String>,
    group: Option<String>,
    normal: Option<Vec<usize>>,
}

fn scalar_param<F: Scalar>(field: FieldSpec, v: &Option<String>, default: i64) -> CliResult<F> {
    match v {
        None => Ok(F::from_i64(field, default)),
        Some(s) => Ok(F::parse_in(field, s)?),
    }
}

fn group_param(p: &Params, default: &str) -> CliResult<GroupTable> {
    let name = p.group.as_deref().unwrap_or(default);
    match GroupTable::builtin(name) {
        Some(g) => Ok(g),
        None => fail(format!("unknown group {name:?}; known: {}", GroupTable::builtin_names().join(", "))),
    }
}

fn write(out: &Path, name: &str, value: &impl serde::Serialize) -> CliResult<PathBuf> {
    fs::create_dir_all(out).map_err(|source| Error::Io {
        path: out.display().to_string(),
        source,
    })?;
    let path = out.join(name);
    io::write_json(&path, value)?;
    Ok(path)
}

fn require_pass<F: Scalar>(what: &str, r: Report<F>) -> CliResult<()> {
    if r.passed() {
        Ok(())
    } else {
        fail(format!("{what} fails its checker: {}", r.summary()))
    }
}

fn hopf_ref<F: Scalar>(out: &Path, h: &HopfData<F>) -> CliResult<Ref<HopfFile>> {
    write(out, "hopf.json", &HopfFile::from_data(h))?;
    Ok(Ref::Path("hopf.json".into()))
}

fn action_file<F: Scalar>(p: &PartialActionData<F>, href: &Ref<HopfFile>, symmetric: bool) -> ActionFile {
    ActionFile::from_data(p, href.clone(), symmetric)
}

fn bicomodule_file<F: Scalar>(b: &PartialBicomoduleData<F>, href: &Ref<HopfFile>) -> BicomoduleFile {
    BicomoduleFile {
        lambda: Ref::inline(CoactionFile::from_data(&b.lambda, href.clone())),
        rho: Ref::inline(CoactionFile::from_data(&b.rho, href.clone())),
    }
}

fn cmd_example<F: Scalar>(format: Format, name: &str, field: FieldSpec, p: &Params, out: &Path) -> CliResult<bool> {
    let mut written = Vec::new();
    let mut info = BTreeMap::new();
    match name {
        "sweedler-bimodule-k" => {
            let r = scalar_param::<F>(field, &p.r, 2)?;
            let s = scalar_param::<F>(field, &p.s, 3)?;
            let b = h4_bimodule_k(field, &r, &s)?;
            require_pass("bimodule", actions::certify_bimodule(&b)?)?;
            let href = hopf_ref(out, b.hopf())?;
            written.push(out.join("hopf.json"));
            let file = BimoduleFile {
                left: Ref::inline(action_file(&b.left, &href, false)),
                right: Ref::inline(action_file(&b.right, &href, false)),
            };
            written.push(write(out, "bimodule.json", &file)?);
            info.insert("left_global", is_global(&b.left));
            info.insert("right_global", is_global(&b.right));
        }
        "sweedler-bicomodule-k" => {
            let t = scalar_param::<F>(field, &p.t, 7)?;
            let u = scalar_param::<F>(field, &p.u, 3)?;
            let b = h4_bicomodule_k(field, &t, &u)?;
            require_pass("bicomodule", certify_bicomodule(&b)?)?;
            let href = hopf_ref(out, b.hopf())?;
            written.push(out.join("hopf.json"));
            written.push(write(out, "bicomodule.json", &bicomodule_file(&b, &href))?);
            info.insert("global", b.is_global());
        }
        "en-kg" => {
            let g = group_param(p, "z4")?;
            let normal = p.normal.clone().unwrap_or_else(|| vec![0, 2]);
            let a = actions::en_kg_example::<F>(&g, &normal, field)?;
            require_pass("action", check_action(&a, false)?)?;
            let href = hopf_ref(out, &a.hopf)?;
            written.push(out.join("hopf.json"));
            written.push(write(out, "action.json", &action_file(&a, &href, false))?);
            info.insert("global", is_global(&a));
        }
        "dual-group-action" => {
            let g = group_param(p, "z4")?;
            let a = actions::dual_group_action::<F>(&g, field)?;
            require_pass("action", check_action(&a, true)?)?;
            let href = hopf_ref(out, &a.hopf)?;
            written.push(out.join("hopf.json"));
            written.push(write(out, "action.json", &action_file(&a, &href, true))?);
            info.insert("global", is_global(&a));
        }
        "regular-bicomodule" => {
            let h: HopfData<F> = match &p.group {
                None => sweedler_h4(field)?,
                Some(_) => group_algebra_default(&group_param(p, "z2")?, field)?,
            };
            let b = regular_bicomodule(Arc::new(h))?;
            require_pass("bicomodule", certify_bicomodule(&b)?)?;
            let href = hopf_ref(out, b.hopf())?;
            written.push(out.join("hopf.json"));
            written.push(write(out, "bicomodule.json", &bicomodule_file(&b, &href))?);
            info.insert("global", b.is_global());
        }
        "z2-partial-group" => {
            let g = z2_partial_group::<F>(field)?;
            require_pass("partial group action", check_group_partial_action(&g)?)?;
            written.push(write(out, "group_action.json", &GroupActionFile::from_data(&g))?);
            let a = group_to_kg(&g)?;
            require_pass("action", check_action(&a, true)?)?;
            let href = hopf_ref(out, &a.hopf)?;
            written.push(out.join("hopf.json"));
            written.push(write(out, "action.json", &action_file(&a, &href, true))?);
            info.insert("global", is_global(&a));
        }
        _ => {
            return fail(format!(
                "unknown example {name:?}; known: sweedler-bimodule-k, sweedler-bicomodule-k, en-kg, dual-group-action, regular-bicomodule, z2-partial-group"
            ))
        }
    }
    match format {
        Format::Json => println!("{}", json!({ "example": name, "files": written, "flags": info })),
        Format::Text => {
            for w in &written {
                println!("wrote {}", w.display());
            }
            for (k, v) in &info {
                println!("{k}: {v}");
            }
        }
    }
    Ok(true)
}

fn rows_json<F: Scalar>(rows: impl IntoIterator<Item = Vec<F>>) -> Vec<Vec<String>> {
    rows.into_iter().map(|r| io::vec_to_json(&r)).collect()
}

fn cmd_globalize<F: Scalar>(format: Format, kind: GlobalKind, file: &Path, out: &Path) -> CliResult<bool> {
    let result = match kind {
        GlobalKind::Bimodule => {
            let p = io::load_bimodule::<F>(file)?;
            let g = standard_globalize_bimodule(&p)?;
            let cand = g.candidate();
            let cert = verify_globalization(&cand, &p)?;
            let mstar = maximal_degenerate_subbimodule(&cand)?;
            let (left_ideal, right_ideal) = g.phi_ideal_flags()?;
            let (i, ii, iii, iv) = cert.lemaco_ok;
            let certificate = BTreeMap::from([
                ("theta_multiplicative".to_string(), cert.theta_multiplicative),
                ("b_closed".to_string(), cert.b_closed),
                ("condition1".to_string(), cert.condition1_ok),
                ("condition2".to_string(), cert.condition2_ok),
                ("lemaco_i".to_string(), i),
                ("lemaco_ii".to_string(), ii),
                ("lemaco_iii".to_string(), iii),
                ("lemaco_iv".to_string(), iv),
                ("phi_injective".to_string(), g.phi.rank() == p.alg().dim()),
                ("phi_left_ideal".to_string(), left_ideal),
                ("phi_right_ideal".to_string(), right_ideal),
            ]);
            GlobalizationResult {
                kind: "bimodule".into(),
                ambient_dim: g.ambient.dim(),
                phi: rows_json(g.phi.row_vecs()),
                b_basis: rows_json(g.b_basis.basis().to_vec()),
                mul: io::tensor_to_json(&g.b.alg.mul),
                certificate,
                degenerate_dim: Some(mstar.dim()),
                psi: None,
            }
        }
        GlobalKind::Bicomodule => {
            let b = io::load_bicomodule::<F>(file)?;
            let bg = standard_globalize_bicomodule(&b)?;
            let (t1, t2) = theta_formulas(&b)?;
            let dual = bicomodule_to_bimodule(&b)?;
            let std = standard_globalize_bimodule(&dual)?;
            let psi = psi_map(&bg, &std)?;
            let certificate = BTreeMap::from([
                ("theta_formulas_agree".to_string(), t1 == t2),
                ("theta_injective".to_string(), bg.theta.rank() == b.alg().dim()),
                ("b_unital".to_string(), bg.b_alg.unit.is_some()),
            ]);
            let flags = BTreeMap::from([
                ("injective".to_string(), psi.injective),
                ("multiplicative".to_string(), psi.multiplicative),
                ("unital".to_string(), psi.unital),
                ("intertwines".to_string(), psi.intertwines),
                ("psi_theta_is_phi".to_string(), psi.psi_theta_is_phi),
                ("restricted_iso".to_string(), psi.restricted_iso),
            ]);
            GlobalizationResult {
                kind: "bicomodule".into(),
                ambient_dim: bg.ambient.alg().dim(),
                phi: rows_json(bg.theta.row_vecs()),
                b_basis: rows_json(bg.b_basis.basis().to_vec()),
                mul: io::tensor_to_json(&bg.b_alg.mul),
                certificate,
                degenerate_dim: None,
                psi: Some(flags),
            }
        }
    };
    let path = write(out, "globalization.json", &result)?;
    let ok = result.certificate.values().all(|&b| b) && result.psi.as_ref().is_none_or(|m| m.values().all(|&b| b));
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&result).expect("serializable")),
        Format::Text => {
            println!("dim A = {}", result.phi.len());
            println!("ambient dim = {}", result.ambient_dim);
            println!("dim B = {}", result.b_basis.len());
            for (k, v) in &result.certificate {
                println!("{k}: {v}");
            }
            if let Some(d) = result.degenerate_dim {
                println!("M* dim = {d}");
            }
            if let Some(m) = &result.psi {
                for (k, v) in m {
                    println!("psi {k}: {v}");
                }
            }
            println!("wrote {}", path.display());
        }
    }
    Ok(ok)
}

fn cmd_smash<F: Scalar>(format: Format, a_path: &Path, abar_path: &Path, out: &Path) -> CliResult<bool> {
    let a = io::load_bimodule::<F>(a_path)?;
    let abar = io::load_bicomodule::<F>(abar_path)?;
    let s = smash_product(&a, &abar)?;
    let associative = check_smash_associativity(&s)?.passed();
    let aa = &**a.alg();
    let ab = &**abar.alg();
    let candidates = |alg: &phopf::AlgebraData<F>| {
        let mut c: Vec<(String, Vec<F>)> = (0..alg.dim()).map(|i| (alg.basis[i].clone(), alg.e(i))).collect();
        if let Ok(u) = alg.unit_vec() {
            if !c.iter().any(|(_, v)| v.as_slice() == u) {
                c.push(("1".into(), u.to_vec()));
            }
        }
        c.retain(|(_, v)| alg.product(v, v) == *v);
        c
    };
    let mut found = Vec::new();
    for (la, x) in candidates(aa) {
        for (lu, y) in candidates(ab) {
            let (idem, route) = find_idempotent(&s, &x, &y)?;
            if idem {
                found.push(json!({ "a": la, "u": lu, "route": route.to_string() }));
            }
        }
    }
    let units = s.element(aa.unit_vec()?, ab.unit_vec()?);
    let sq = s.alg.product(&units, &units);
    let unit_pair = if sq == units {
        "idempotent"
    } else if sq.iter().all(|c| c.is_zero()) {
        "nilpotent"
    } else {
        "neither"
    };
    let file = json!({
        "algebra": AlgebraFile::from_data(&s.alg),
        "certificate": {
            "associative": associative,
            "idempotents_found": found,
            "unit_pair": unit_pair,
        }
    });
    let path = write(out, "smash.json", &file)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&file["certificate"]).expect("serializable")),
        Format::Text => {
            println!("dim = {}", s.dim());
            println!("associative: {associative}");
            println!("1♮1 is {unit_pair}");
            for f in &found {
                println!("idempotent {}♮{} via route {}", f["a"].as_str().unwrap_or(""), f["u"].as_str().unwrap_or(""), f["route"].as_str().unwrap_or(""));
            }
            println!("wrote {}", path.display());
        }
    }
    Ok(associative)
}
