//! Command-line front end. `run` parses arguments, dispatches, and returns
//! the process exit status: 0 on success, 1 on a domain failure, 2 on a
//! usage error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::autf2::{is_basis, is_basis_nielsen, nielsen_reduce, AutF2};
use crate::braid::{endo_of_braid, BraidWord};
use crate::error::{parse_err, Error, Result};
use crate::invariant::{
    abelianization, check_s1, default_groups, fingerprint, presentation, stabilization_report,
    tietze_simplify, FiniteGroupTable,
};
use crate::localrep::{
    build_gamma, canonicalize, catalog, check_pair_via_braid, check_quad, classify_search,
    component_of, figure_component, identify, incoming, outgoing, Component, Decoration,
    FamilyId, LocalRep, Quad,
};

#[derive(Parser, Debug)]
#[command(name = "braidrep", version, about = "Local braid group representations on free groups")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a quad "A,B,C,D", or inspect a single core "A,B".
    Verify(VerifyArgs),
    /// Exhaustive search for valid quads up to a word length.
    Classify {
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print catalog quads for a family.
    Catalog {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long)]
        all_decorations: bool,
    },
    /// Build one component of the graph of cores and export it as DOT.
    Gamma {
        /// T, T', A, B, C or D.
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        r: u32,
        /// Output file; "-" writes to standard output.
        #[arg(long)]
        dot: PathBuf,
    },
    /// Endomorphism of F_n induced by a braid.
    Act(RepBraidArgs),
    /// Closed-braid group presentation and fingerprint.
    Invariant {
        #[command(flatten)]
        target: RepBraidArgs,
        /// Comma-separated group names or table files.
        #[arg(long, value_delimiter = ',')]
        homs: Option<Vec<String>>,
    },
    /// Stabilization conditions S1 and S2 for a representation.
    CheckStab {
        #[arg(long)]
        rep: String,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct VerifyArgs {
    #[arg(long)]
    quad: Option<String>,
    #[arg(long)]
    pair: Option<String>,
}

#[derive(Args, Debug)]
struct RepBraidArgs {
    /// "artin", "wada:<family>[:r=K][:decoration]" or "cores:A,B;C,D;...".
    #[arg(long)]
    rep: String,
    #[arg(long)]
    n: Option<usize>,
    /// Signed generator indices, e.g. "1 1 1" or "-2,1".
    #[arg(long, allow_hyphen_values = true)]
    braid: String,
}

/// Builds a representation from its command-line spec. `strands` is required
/// for the constant aliases and checked against the explicit core list.
pub fn parse_rep(spec: &str, strands: Option<usize>) -> Result<LocalRep> {
    let need = || strands.ok_or_else(|| parse_err("rep", spec, "--n is required for this rep"));
    if spec == "artin" {
        return Ok(LocalRep::artin(need()?));
    }
    if let Some(id) = spec.strip_prefix("wada:") {
        let id: FamilyId = id.parse()?;
        let core = catalog(&id).tau()?;
        return LocalRep::constant(&core, need()?);
    }
    if let Some(list) = spec.strip_prefix("cores:") {
        let cores = list
            .split(';')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<AutF2>())
            .collect::<Result<Vec<_>>>()?;
        let n = cores.len() + 1;
        if let Some(m) = strands {
            if m != n {
                return Err(Error::StrandMismatch {
                    expected: n,
                    found: m,
                });
            }
        }
        return LocalRep::new(n, cores);
    }
    Err(parse_err(
        "rep",
        spec,
        "expected \"artin\", \"wada:<family>\" or \"cores:A,B;...\"",
    ))
}

enum Outcome {
    Ok(String),
    /// Printed, but the run counts as a domain failure.
    Failed(String),
}

fn emit<T: Serialize>(json: bool, value: &T, text: String) -> String {
    if json {
        serde_json::to_string_pretty(value).expect("serializable") + "\n"
    } else {
        text
    }
}

#[derive(Serialize)]
struct QuadOut {
    quad: Quad,
    valid: bool,
    failures: Vec<String>,
    braid_check: bool,
    family: Option<FamilyId>,
    canonical: Option<Quad>,
}

fn verify_quad(json: bool, s: &str) -> Result<Outcome> {
    let q: Quad = s.parse()?;
    let report = check_quad(&q);
    let valid = report.is_valid();
    let braid_check = match (q.tau(), q.kappa()) {
        (Ok(t), Ok(k)) => check_pair_via_braid(&t, &k),
        _ => false,
    };
    let out = QuadOut {
        failures: report.failures().iter().map(|c| format!("{c:?}")).collect(),
        family: if valid { identify(&q) } else { None },
        canonical: valid.then(|| canonicalize(&q)),
        quad: q.clone(),
        valid,
        braid_check,
    };
    let mut text = format!("quad: {q}\nvalid: {valid}\n");
    if !valid {
        text += &format!("failed: {}\n", out.failures.join(", "));
        for (name, (l, r)) in [("T", &report.t), ("M", &report.m), ("B", &report.b)] {
            if l != r {
                text += &format!("  [{name}] {} != {}\n", l.to_token_string(), r.to_token_string());
            }
        }
    }
    text += &format!("braid relation: {braid_check}\n");
    if let Some(id) = out.family {
        text += &format!("family: {id}\n");
    }
    if let Some(c) = &out.canonical {
        text += &format!("canonical: {c}\n");
    }
    let body = emit(json, &out, text);
    Ok(if valid { Outcome::Ok(body) } else { Outcome::Failed(body) })
}

#[derive(Serialize)]
struct PairOut {
    core: String,
    basis: bool,
    basis_nielsen: bool,
    nielsen_form: String,
    inverse: Option<AutF2>,
    component: Option<String>,
    outgoing: Vec<AutF2>,
    incoming: Vec<AutF2>,
    s1: Option<crate::invariant::S1Report>,
}

fn verify_pair(json: bool, s: &str) -> Result<Outcome> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| parse_err("core", s, "expected \"A,B\""))?;
    let (a, b) = (a.parse()?, b.parse()?);
    let basis = is_basis(&a, &b);
    let ((p, q), _) = nielsen_reduce(&a, &b);
    let core = AutF2::new(a.clone(), b.clone()).ok();
    let out = PairOut {
        core: format!("{a},{b}"),
        basis,
        basis_nielsen: is_basis_nielsen(&a, &b),
        nielsen_form: format!("{p},{q}"),
        inverse: core.as_ref().map(AutF2::invert),
        component: core.as_ref().and_then(component_of).map(|c| c.to_string()),
        outgoing: core.as_ref().map(outgoing).unwrap_or_default(),
        incoming: core.as_ref().map(incoming).unwrap_or_default(),
        s1: core.as_ref().map(check_s1),
    };
    let mut text = format!(
        "core: {}\nbasis: {basis}\nnielsen reduced: {}\n",
        out.core, out.nielsen_form
    );
    if let Some(inv) = &out.inverse {
        text += &format!("inverse: {inv}\n");
    }
    if let Some(c) = &out.component {
        text += &format!("component: {c}\n");
    }
    if core.is_some() {
        let list = |v: &[AutF2]| v.iter().map(|c| format!("({c})")).collect::<Vec<_>>().join(" ");
        text += &format!("outgoing: {}\nincoming: {}\n", list(&out.outgoing), list(&out.incoming));
    }
    if let Some(r) = &out.s1 {
        text += &format!("S1: {}\n", r.status);
        for line in &r.witness {
            text += &format!("  {line}\n");
        }
    }
    let body = emit(json, &out, text);
    Ok(if basis { Outcome::Ok(body) } else { Outcome::Failed(body) })
}

#[derive(Serialize)]
struct ClassOut {
    quad: Quad,
    family: Option<FamilyId>,
}

fn classify(json: bool, max_len: usize, jobs: Option<usize>) -> Result<Outcome> {
    let found = classify_search(max_len, jobs);
    let rows: Vec<ClassOut> = found
        .into_iter()
        .map(|q| ClassOut {
            family: identify(&q),
            quad: q,
        })
        .collect();
    let mut text = format!("{} canonical quads with words of length <= {max_len}\n", rows.len());
    for r in &rows {
        let fam = r.family.map(|f| f.to_string()).unwrap_or_else(|| "?".into());
        text += &format!("{}\t{fam}\n", r.quad);
    }
    Ok(Outcome::Ok(emit(json, &rows, text)))
}

#[derive(Serialize)]
struct CatalogRow {
    id: FamilyId,
    quad: Quad,
    valid: bool,
}

fn catalog_cmd(json: bool, family: &str, r: u32, all: bool) -> Result<Outcome> {
    let base: FamilyId = family.parse()?;
    let base = FamilyId::new(base.family, if family.contains(":r=") { base.r } else { r }, base.decoration);
    let decorations: Vec<Decoration> = if all {
        Decoration::ALL.to_vec()
    } else {
        vec![base.decoration]
    };
    let rows: Vec<CatalogRow> = decorations
        .into_iter()
        .map(|d| {
            let id = FamilyId::new(base.family, base.r, d);
            let quad = catalog(&id);
            CatalogRow {
                valid: quad.is_valid(),
                id,
                quad,
            }
        })
        .collect();
    let mut text = String::new();
    for row in &rows {
        text += &format!("{}\t{}\t{}\n", row.id, row.quad, if row.valid { "valid" } else { "INVALID" });
    }
    let ok = rows.iter().all(|r| r.valid);
    let body = emit(json, &rows, text);
    Ok(if ok { Outcome::Ok(body) } else { Outcome::Failed(body) })
}

fn gamma_cmd(json: bool, family: &str, r: u32, dot: &PathBuf, out: &mut dyn Write) -> Result<Outcome> {
    let comp = Component::parse(family, r)?;
    let fig = figure_component(comp);
    let g = build_gamma(&fig.vertices);
    let matches = g.edge_set() == fig.edge_set();
    let text = g.to_dot();
    if dot.as_os_str() == "-" {
        out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))?;
    } else {
        std::fs::write(dot, &text).map_err(|e| Error::Io(e.to_string()))?;
    }
    #[derive(Serialize)]
    struct Summary<'a> {
        component: String,
        vertices: usize,
        edges: usize,
        matches_drawing: bool,
        graph: &'a crate::localrep::GammaGraph,
    }
    let summary = Summary {
        component: comp.to_string(),
        vertices: g.vertices.len(),
        edges: g.edges.len(),
        matches_drawing: matches,
        graph: &g,
    };
    let mut msg = format!(
        "{comp}: {} vertices, {} edges, drawn edge set {}\n",
        g.vertices.len(),
        g.edges.len(),
        if matches { "reproduced" } else { "NOT reproduced" }
    );
    if dot.as_os_str() == "-" {
        msg.clear();
    }
    Ok(Outcome::Ok(if json { emit(true, &summary, String::new()) } else { msg }))
}

fn load_rep_braid(args: &RepBraidArgs) -> Result<(LocalRep, BraidWord)> {
    let rep = parse_rep(&args.rep, args.n)?;
    let b = BraidWord::parse(&args.braid, rep.strands())?;
    Ok((rep, b))
}

fn act_cmd(json: bool, args: &RepBraidArgs) -> Result<Outcome> {
    let (rep, b) = load_rep_braid(args)?;
    let e = endo_of_braid(&rep, &b)?;
    #[derive(Serialize)]
    struct ActOut {
        strands: usize,
        braid: String,
        images: Vec<String>,
    }
    let out = ActOut {
        strands: rep.strands(),
        braid: b.to_string(),
        images: e.images().iter().map(|x| x.to_token_string()).collect(),
    };
    Ok(Outcome::Ok(emit(json, &out, format!("{e}\n"))))
}

#[derive(Serialize)]
struct InvariantOut {
    generators: usize,
    relators: Vec<String>,
    abelianization: Vec<i64>,
    hom_counts: BTreeMap<String, u64>,
}

fn invariant_cmd(json: bool, args: &RepBraidArgs, homs: &Option<Vec<String>>) -> Result<Outcome> {
    let (rep, b) = load_rep_braid(args)?;
    let groups = match homs {
        Some(names) => names
            .iter()
            .map(|s| FiniteGroupTable::resolve(s.trim()))
            .collect::<Result<Vec<_>>>()?,
        None => default_groups(),
    };
    let p = presentation(&rep, &b, false)?;
    let fp = fingerprint(&rep, &b, &groups)?;
    let simple = tietze_simplify(&p);
    let out = InvariantOut {
        generators: p.generator_count(),
        relators: p.relators().iter().map(|r| r.to_token_string()).collect(),
        abelianization: fp.abelianization.clone(),
        hom_counts: fp.hom_counts.clone(),
    };
    let text = format!(
        "presentation: {p}\nsimplified: {simple}\nabelianization diagonal: {:?}\n{fp}\n",
        abelianization(&p)?
    );
    Ok(Outcome::Ok(emit(json, &out, text)))
}

fn check_stab_cmd(json: bool, spec: &str, n: usize) -> Result<Outcome> {
    let rep = parse_rep(spec, Some(n))?;
    let report = stabilization_report(&rep);
    let mut text = format!("{rep}\n");
    for r in &report.s1 {
        text += &format!("S1 ({}): {}\n", r.core, r.status);
        for line in &r.witness {
            text += &format!("  {line}\n");
        }
    }
    text += &format!("S1 overall: {}\nS2 (can extend): {}\n", report.s1_status, report.s2);
    if report.s2 {
        let ext: Vec<String> = report.extensions.iter().map(|c| format!("({c})")).collect();
        text += &format!("extensions: {}\n", ext.join(" "));
    }
    Ok(Outcome::Ok(emit(json, &report, text)))
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let json = cli.json;
    match &cli.command {
        Command::Verify(v) => match (&v.quad, &v.pair) {
            (Some(q), _) => verify_quad(json, q),
            (None, Some(p)) => verify_pair(json, p),
            (None, None) => unreachable!("clap enforces one of --quad, --pair"),
        },
        Command::Classify { max_len, jobs } => classify(json, *max_len, *jobs),
        Command::Catalog {
            family,
            r,
            all_decorations,
        } => catalog_cmd(json, family, *r, *all_decorations),
        Command::Gamma { family, r, dot } => gamma_cmd(json, family, *r, dot, out),
        Command::Act(a) => act_cmd(json, a),
        Command::Invariant { target, homs } => invariant_cmd(json, target, homs),
        Command::CheckStab { rep, n } => check_stab_cmd(json, rep, *n),
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return e.exit_code();
        }
    };
    match dispatch(&cli, out) {
        Ok(Outcome::Ok(text)) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Ok(Outcome::Failed(text)) => {
            let _ = out.write_all(text.as_bytes());
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
