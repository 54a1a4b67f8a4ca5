//! Batch driver for the poset-cone enumerators.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or usage error.

pub mod document;

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use poset_cone::enumerator::{antipode_rhs, f0, f_polynomial, fq_poset_cone, ppartitions_bruteforce, ppartitions_via_extensions, zeta_coefficient};
use poset_cone::par::Strategy;
use poset_cone::qsym::{render_terms, Composition, QPoly, QSymFunction};
use poset_cone::survey::{f0_survey, search_collision};
use poset_cone::verify::{run_suite, Suite};
use serde_json::{json, Value};
use thiserror::Error;

pub use document::PosetDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] poset_cone::Error),
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    #[value(name = "M")]
    M,
    #[value(name = "L")]
    L,
}

#[derive(Debug, Parser)]
#[command(name = "pcone", version, about = "Weighted quasisymmetric enumerators of poset cones")]
pub struct Cli {
    /// Poset document (JSON or `n: i<j ...`); stdin when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_q(C(P)), or F(P) with --q0, or one coefficient with --alpha.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Basis::M)]
        basis: Basis,
        #[arg(long)]
        q0: bool,
        /// Composition such as `1,3`.
        #[arg(long)]
        alpha: Option<String>,
    },
    /// Print the f-polynomial of C(P).
    Fpoly,
    /// P-partition series: brute force in m variables, or the linear-extension sum.
    Ppart {
        #[arg(long, default_value_t = 3)]
        m: usize,
        #[arg(long)]
        extensions: bool,
        #[arg(long, value_enum, default_value_t = Basis::M)]
        basis: Basis,
    },
    /// Compare S(F_q(C(P))) with the flag-sum formula.
    AntipodeCheck,
    /// Run identity suites over all posets up to --max-n.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        trunc_m: usize,
        /// Suites to run (comma separated); all when omitted.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
        /// Allow --max-n 6.
        #[arg(long)]
        long: bool,
    },
    /// Check whether F(P) separates all isomorphism classes up to --max-n.
    Survey {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Allow --max-n 6.
        #[arg(long)]
        long: bool,
    },
    /// Look for posets with equal F(P) but different F_q(C(P)).
    SearchCollision {
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Allow --n 7.
        #[arg(long)]
        long: bool,
    },
}

/// Rendered stdout and process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: EXIT_OK }
    }
}

/// Ascending coefficients; integers outside `i64` become strings.
pub fn coeffs_json(c: &QPoly) -> Value {
    Value::Array(
        c.coeffs()
            .iter()
            .map(|b| match i64::try_from(b) {
                Ok(v) => Value::from(v),
                Err(_) => Value::from(b.to_string()),
            })
            .collect(),
    )
}

fn read_document(input: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<PosetDocument, CliError> {
    let text = match input {
        Some(path) => std::fs::read_to_string(path)?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    PosetDocument::parse(&text)
}

fn parse_alpha(s: &str) -> Result<Composition, CliError> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| CliError::Usage(format!("bad composition {s:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Composition::try_new(parts).ok_or_else(|| CliError::Usage(format!("composition parts must be positive: {s:?}")))
}

fn function_json(f: &QSymFunction, basis: Basis) -> Value {
    let terms: Vec<Value> = match basis {
        Basis::M => f
            .terms()
            .map(|(a, c)| json!({"composition": a.parts(), "coeff": coeffs_json(c)}))
            .collect(),
        Basis::L => f
            .to_fundamental()
            .iter()
            .map(|(a, c)| json!({"composition": a.parts(), "coeff": coeffs_json(c)}))
            .collect(),
    };
    Value::Array(terms)
}

fn function_text(f: &QSymFunction, basis: Basis) -> String {
    match basis {
        Basis::M => f.to_string(),
        Basis::L => render_terms(&f.to_fundamental(), "L"),
    }
}

fn basis_name(b: Basis) -> &'static str {
    match b {
        Basis::M => "M",
        Basis::L => "L",
    }
}

fn render_function(doc: &PosetDocument, f: &QSymFunction, basis: Basis, format: Format, extra: Value) -> String {
    match format {
        Format::Text => format!("{}\n", function_text(f, basis)),
        Format::Json => {
            let mut v = json!({"n": doc.n, "basis": basis_name(basis), "terms": function_json(f, basis)});
            if let Some(name) = &doc.name {
                v["name"] = Value::from(name.clone());
            }
            if let (Value::Object(map), Value::Object(more)) = (&mut v, extra) {
                map.extend(more);
            }
            format!("{v}\n")
        }
    }
}

pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Output, CliError> {
    let format = cli.format;
    match &cli.command {
        Command::Enumerate { basis, q0, alpha } => {
            let doc = read_document(cli.input.as_ref(), stdin)?;
            let p = doc.to_poset()?;
            if let Some(alpha) = alpha {
                let alpha = parse_alpha(alpha)?;
                let coeff = zeta_coefficient(&p, &alpha).map_err(|e| CliError::Usage(e.to_string()))?;
                return Ok(Output::ok(match format {
                    Format::Text => format!("{coeff}\n"),
                    Format::Json => format!("{}\n", json!({"alpha": alpha.parts(), "coeff": coeffs_json(&coeff)})),
                }));
            }
            let f = if *q0 { f0(&p) } else { fq_poset_cone(&p) };
            Ok(Output::ok(render_function(&doc, &f, *basis, format, json!({"q0": q0}))))
        }
        Command::Fpoly => {
            let doc = read_document(cli.input.as_ref(), stdin)?;
            let f = f_polynomial(&doc.to_poset()?);
            Ok(Output::ok(match format {
                Format::Text => format!("{f}\n"),
                Format::Json => format!("{}\n", json!({"n": doc.n, "fpoly": coeffs_json(&f)})),
            }))
        }
        Command::Ppart { m, extensions, basis } => {
            let doc = read_document(cli.input.as_ref(), stdin)?;
            let p = doc.to_poset()?;
            if *extensions {
                let f = ppartitions_via_extensions(&p);
                return Ok(Output::ok(render_function(&doc, &f, *basis, format, json!({"extensions": true}))));
            }
            let t = ppartitions_bruteforce(&p, *m)?;
            Ok(Output::ok(match format {
                Format::Text => format!("{t}\n"),
                Format::Json => {
                    let monomials: Vec<Value> = t
                        .monomials()
                        .map(|(e, c)| json!({"exponents": e, "coeff": coeffs_json(c)}))
                        .collect();
                    format!("{}\n", json!({"n": doc.n, "m": m, "monomials": monomials}))
                }
            }))
        }
        Command::AntipodeCheck => {
            let doc = read_document(cli.input.as_ref(), stdin)?;
            let p = doc.to_poset()?;
            let lhs = fq_poset_cone(&p).antipode();
            let rhs = antipode_rhs(&p);
            let holds = lhs == rhs;
            let stdout = match format {
                Format::Text => format!(
                    "S(F_q) = {lhs}\nflag sum = {rhs}\nantipode identity: {}\n",
                    if holds { "holds" } else { "FAILS" }
                ),
                Format::Json => format!(
                    "{}\n",
                    json!({"holds": holds, "antipode": function_json(&lhs, Basis::M), "flag_sum": function_json(&rhs, Basis::M)})
                ),
            };
            Ok(Output { stdout, code: if holds { EXIT_OK } else { EXIT_VERIFY_FAILED } })
        }
        Command::Verify { max_n, trunc_m, suite, long } => verify(*max_n, *trunc_m, suite, *long, format),
        Command::Survey { max_n, long } => survey(*max_n, *long, format),
        Command::SearchCollision { n, long } => collisions(*n, *long, format),
    }
}

fn verify(max_n: usize, trunc_m: usize, suites: &[String], long: bool, format: Format) -> Result<Output, CliError> {
    let limit = if long { 6 } else { 5 };
    if max_n > limit {
        return Err(CliError::Usage(format!("--max-n {max_n} exceeds {limit} (use --long for 6)")));
    }
    let selected: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.iter().map(|s| s.parse::<Suite>().map_err(CliError::Usage)).collect::<Result<_, _>>()?
    };
    let mut text = String::new();
    let mut reports = Vec::new();
    let mut all_ok = true;
    for suite in selected {
        let r = run_suite(suite, max_n, trunc_m, Strategy::default())?;
        let counts: Vec<String> = r.checked.iter().map(|(_, c)| c.to_string()).collect();
        match &r.failure {
            None => writeln!(text, "{suite}: {} posets ({}) all pass", r.total(), counts.join("+")).unwrap(),
            Some(p) => {
                all_ok = false;
                let doc = PosetDocument::from_poset(p, None).to_json();
                writeln!(text, "{suite}: FAIL on {doc}").unwrap();
            }
        }
        reports.push(json!({
            "suite": suite.name(),
            "checked": r.checked.iter().map(|(n, c)| json!({"n": n, "posets": c})).collect::<Vec<_>>(),
            "pass": r.passed(),
            "counterexample": r.failure.as_ref().map(|p| serde_json::to_value(PosetDocument::from_poset(p, None)).unwrap()),
        }));
    }
    let stdout = match format {
        Format::Text => text,
        Format::Json => format!("{}\n", json!({"max_n": max_n, "trunc_m": trunc_m, "suites": reports, "pass": all_ok})),
    };
    Ok(Output { stdout, code: if all_ok { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}

fn survey(max_n: usize, long: bool, format: Format) -> Result<Output, CliError> {
    let limit = if long { 6 } else { 5 };
    if max_n > limit {
        return Err(CliError::Usage(format!("--max-n {max_n} exceeds {limit} (use --long for 6)")));
    }
    let mut text = String::new();
    let mut rows = Vec::new();
    for n in 1..=max_n {
        let r = f0_survey(n, Strategy::default())?;
        writeln!(text, "n={n}: {} classes, {} collisions", r.classes, r.collisions.len()).unwrap();
        for group in &r.collisions {
            let docs: Vec<String> = group.iter().map(|p| PosetDocument::from_poset(p, None).to_json()).collect();
            writeln!(text, "  same F(P): {}", docs.join(" ")).unwrap();
        }
        rows.push(json!({
            "n": n,
            "classes": r.classes,
            "collisions": r.collisions.iter().map(|g| g.iter().map(|p| serde_json::to_value(PosetDocument::from_poset(p, None)).unwrap()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        }));
    }
    Ok(Output::ok(match format {
        Format::Text => text,
        Format::Json => format!("{}\n", Value::Array(rows)),
    }))
}

fn collisions(n: usize, long: bool, format: Format) -> Result<Output, CliError> {
    let limit = if long { 7 } else { 6 };
    if n > limit {
        return Err(CliError::Usage(format!("--n {n} exceeds {limit} (use --long for 7)")));
    }
    let found = search_collision(n, Strategy::default())?;
    let mut text = String::new();
    if found.is_empty() {
        writeln!(text, "n={n}: no pair found").unwrap();
    }
    let mut rows = Vec::new();
    for c in &found {
        let a = PosetDocument::from_poset(&c.first, None);
        let b = PosetDocument::from_poset(&c.second, None);
        writeln!(text, "pair: {} {}", a.to_json(), b.to_json()).unwrap();
        writeln!(text, "  F(P) = {}", c.f0).unwrap();
        writeln!(text, "  zeta_{}: {} vs {}", c.alpha, c.zeta_first, c.zeta_second).unwrap();
        rows.push(json!({
            "first": serde_json::to_value(&a).unwrap(),
            "second": serde_json::to_value(&b).unwrap(),
            "alpha": c.alpha.parts(),
            "zeta_first": coeffs_json(&c.zeta_first),
            "zeta_second": coeffs_json(&c.zeta_second),
        }));
    }
    Ok(Output::ok(match format {
        Format::Text => text,
        Format::Json => format!("{}\n", json!({"n": n, "pairs": rows})),
    }))
}
