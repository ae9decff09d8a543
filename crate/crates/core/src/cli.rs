//! The `lapco` command line. Every subcommand prints one JSON document
//! (except `build`, which prints a graph file) and exits with 0 only when
//! all assertions in that document hold.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumerate::{enumerate_family_guarded, Restriction, MAX_ENUM_ORDER};
use crate::error::Error;
use crate::families::{build_bst, build_u, FamilySpec};
use crate::forest::coefficients_via_forests;
use crate::graph::{classify, Graph};
use crate::io::{parse_graph, write_graph};
use crate::poset::{compare, minimal_elements, strict_indices, PosetRel};
use crate::spectra::{laplacian_coefficients, laplacian_spectrum, lel_of, CoeffVector};
use crate::transforms::{
    balance_reduce, eta, kappa, long_path_condition, path_shift, xi, TransformReceipt,
};
use crate::verify::{
    check_conjecture_guarded, hex, incomparability_probe, verify_minimal_family_guarded, Assertion,
    MemberSummary,
};

/// Coefficients of the two incomparable order-10 graphs, `c_0` first.
pub const COUNTEREXAMPLE_G1: [u64; 11] = [1, 20, 167, 758, 2036, 3296, 3130, 1612, 382, 30, 0];
pub const COUNTEREXAMPLE_G2: [u64; 11] = [1, 20, 168, 770, 2091, 3414, 3243, 1642, 373, 30, 0];

#[derive(Parser, Debug)]
#[command(
    name = "lapco",
    version,
    about = "Laplacian coefficient tools for unicyclic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyKind {
    U,
    Bst,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    Xi,
    Eta,
    Kappa,
    Shift,
    Reduce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    #[value(name = "3.3")]
    OneAttachment,
    #[value(name = "3.4")]
    TwoAttachments,
    #[value(name = "4.3")]
    GirthThree,
    #[value(name = "4.6")]
    GirthFour,
    Conjecture,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RestrictionArg {
    Full,
    OneAttachment,
    TwoAttachments,
}

impl From<RestrictionArg> for Restriction {
    fn from(r: RestrictionArg) -> Self {
        match r {
            RestrictionArg::Full => Restriction::Full,
            RestrictionArg::OneAttachment => Restriction::OneAttachment,
            RestrictionArg::TwoAttachments => Restriction::TwoAttachments,
        }
    }
}

#[derive(clap::Args, Debug)]
struct FamilyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    g: Option<usize>,
    #[arg(long, value_enum, default_value = "full")]
    restriction: RestrictionArg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a graph file for U(n, l, g, p) or BST(n, l).
    Build {
        #[arg(long, value_enum)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Laplacian coefficients, optionally cross-checked by forest sums.
    Coeffs {
        file: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Coefficientwise order between two graphs.
    Compare { a: PathBuf, b: PathBuf },
    /// Laplacian-like energy (sum of square roots of the Laplacian spectrum).
    Lel { file: PathBuf },
    /// Apply one transformation and report how the coefficients moved.
    Transform {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        u: Option<usize>,
        #[arg(long)]
        v: Option<usize>,
        #[arg(long)]
        leaf_p: Option<usize>,
        #[arg(long)]
        leaf_q: Option<usize>,
        /// Where to write the resulting graph file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write every family member as a graph file plus `index.json`.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Minimal elements of a family under the coefficient order.
    Minimal {
        #[command(flatten)]
        family: FamilyArgs,
    },
    /// Check a minimality statement, or the conjecture sweep, by enumeration.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Order (the largest order for `conjecture`).
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
    },
    /// Compare U(n, l, g, p) and U(n, l, g, q) with witnesses.
    Probe {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        l: usize,
        #[arg(long)]
        g: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
    },
    /// Recompute the two incomparable graphs on 10 vertices.
    Counterexample,
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) | CliError::Usage(e) => f.write_str(e),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// What a subcommand produced.
enum Output {
    Text(String),
    Report(Value, bool),
}

/// Enumeration order limit, lowered by `LAPCO_MAX_N` when set.
pub fn order_limit() -> usize {
    std::env::var("LAPCO_MAX_N")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map_or(MAX_ENUM_ORDER, |v| v.min(MAX_ENUM_ORDER))
}

/// Parses `args` (program name first), runs the subcommand, and returns the
/// process exit status.
pub fn run_cli<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(Output::Text(text)) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Ok(Output::Report(doc, pass)) => {
            let text = serde_json::to_string_pretty(&doc).expect("report serializes");
            let _ = writeln!(out, "{text}");
            if pass {
                0
            } else {
                let _ = writeln!(err, "lapco: one or more assertions failed");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "lapco: {e}");
            1
        }
    }
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn echo(g: &Graph) -> Value {
    json!({ "n": g.order(), "edges": g.edges() })
}

fn coeff_json(c: &CoeffVector) -> Value {
    json!(c.to_decimal_strings())
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report serializes")
}

fn report(command: &str, mut data: Value, assertions: Vec<Assertion>) -> Output {
    let pass = assertions.iter().all(|a| a.pass);
    data["command"] = json!(command);
    data["assertions"] = to_value(&assertions);
    data["pass"] = json!(pass);
    Output::Report(data, pass)
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Assertion {
    Assertion {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn dispatch(cmd: Command) -> CliResult<Output> {
    match cmd {
        Command::Build {
            family,
            n,
            l,
            g,
            p,
            out,
        } => {
            let graph = match family {
                FamilyKind::U => {
                    let g =
                        g.ok_or_else(|| CliError::Usage("--g is required for --family u".into()))?;
                    build_u(FamilySpec::new(n, l, g, p))?
                }
                FamilyKind::Bst => build_bst(n, l)?,
            };
            let text = write_graph(&graph);
            match out {
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(Output::Text(String::new()))
                }
                None => Ok(Output::Text(text)),
            }
        }
        Command::Coeffs { file, oracle } => {
            let g = read_graph(&file)?;
            let c = laplacian_coefficients(&g);
            let mut data = json!({
                "graph": echo(&g),
                "coefficients": coeff_json(&c),
                "polynomial": c.polynomial_string(),
            });
            let mut assertions = Vec::new();
            if oracle {
                let f = coefficients_via_forests(&g)?;
                let same = f == c;
                data["forest_coefficients"] = coeff_json(&f);
                data["verdict"] = json!(if same { "match" } else { "mismatch" });
                assertions.push(check("forest_sums_match", same, ""));
            }
            Ok(report("coeffs", data, assertions))
        }
        Command::Compare { a, b } => {
            let (ga, gb) = (read_graph(&a)?, read_graph(&b)?);
            let (ca, cb) = (laplacian_coefficients(&ga), laplacian_coefficients(&gb));
            let verdict = compare(&ca, &cb)?;
            let (below, above) = strict_indices(&ca, &cb);
            let data = json!({
                "a": { "graph": echo(&ga), "coefficients": coeff_json(&ca) },
                "b": { "graph": echo(&gb), "coefficients": coeff_json(&cb) },
                "verdict": verdict,
                "a_below_at": below,
                "a_above_at": above,
            });
            Ok(report("compare", data, Vec::new()))
        }
        Command::Lel { file } => {
            let g = read_graph(&file)?;
            let spectrum = laplacian_spectrum(&g);
            let data = json!({
                "graph": echo(&g),
                "lel": lel_of(&spectrum),
                "spectrum": spectrum.mu,
            });
            Ok(report("lel", data, Vec::new()))
        }
        Command::Transform {
            file,
            kind,
            u,
            v,
            leaf_p,
            leaf_q,
            out,
        } => transform(
            &read_graph(&file)?,
            kind,
            u,
            v,
            leaf_p,
            leaf_q,
            out.as_deref(),
        ),
        Command::Enumerate { family, out } => enumerate(&family, &out),
        Command::Minimal { family } => {
            let catalog = enumerate_family_guarded(
                family.n,
                family.l,
                family.g,
                family.restriction.into(),
                order_limit(),
            )?;
            let minimal = minimal_elements(&catalog);
            let data = json!({
                "n": family.n,
                "l": family.l,
                "g": family.g,
                "restriction": Restriction::from(family.restriction),
                "family_size": catalog.len(),
                "minimal": minimal.members.iter().map(|m| {
                    MemberSummary::of(&m.graph, &m.form, &m.coeffs, crate::spectra::lel(&m.graph))
                }).collect::<Vec<_>>(),
            });
            Ok(report("minimal", data, Vec::new()))
        }
        Command::Verify { theorem, n, l, g } => verify(theorem, n, l, g),
        Command::Probe { n, l, g, p, q } => {
            let r = incomparability_probe(n, l, g, p, q)?;
            let assertions = vec![
                check(
                    "incomparable",
                    r.verdict == PosetRel::Incomparable,
                    format!("{:?}", r.verdict),
                ),
                check("tail_witness", r.tail_witness.is_some(), ""),
                check(
                    "band_witness",
                    !r.band_witnesses.is_empty(),
                    format!("band {:?}", r.band),
                ),
            ];
            Ok(report("probe", to_value(&r), assertions))
        }
        Command::Counterexample => counterexample(),
    }
}

fn need(flag: &str, value: Option<usize>) -> CliResult<usize> {
    value.ok_or_else(|| CliError::Usage(format!("--{flag} is required for this transform")))
}

fn transform(
    g: &Graph,
    kind: Kind,
    u: Option<usize>,
    v: Option<usize>,
    leaf_p: Option<usize>,
    leaf_q: Option<usize>,
    out: Option<&Path>,
) -> CliResult<Output> {
    let mut data = json!({});
    let (receipts, expect_le): (Vec<TransformReceipt>, Option<bool>) = match kind {
        Kind::Xi => {
            let (u, v) = (need("u", u)?, need("v", v)?);
            let cond = long_path_condition(g, u, v)?;
            data["long_path"] = json!({ "s": cond.s, "t": cond.t, "holds": cond.holds() });
            (vec![xi(g, u, v)?], cond.holds().then_some(true))
        }
        Kind::Eta => (vec![eta(g)?], Some(true)),
        Kind::Kappa => (vec![kappa(g)?], Some(true)),
        Kind::Shift => {
            let (v, p, q) = (
                need("v", v)?,
                need("leaf-p", leaf_p)?,
                need("leaf-q", leaf_q)?,
            );
            (vec![path_shift(g, v, p, q)?], Some(false))
        }
        Kind::Reduce => (balance_reduce(g)?, Some(true)),
    };
    let after = receipts
        .last()
        .map_or_else(|| g.clone(), |r| r.after.clone());
    let (cb, ca) = (laplacian_coefficients(g), laplacian_coefficients(&after));
    let verdict = compare(&ca, &cb)?;
    let text = write_graph(&after);
    if let Some(path) = out {
        write_file(path, &text)?;
    }
    data["before"] = json!({ "graph": echo(g), "coefficients": coeff_json(&cb) });
    data["after"] = json!({ "graph": echo(&after), "coefficients": coeff_json(&ca) });
    data["graph_file"] = json!(text);
    data["after_vs_before"] = to_value(&verdict);
    data["steps"] = json!(receipts
        .iter()
        .map(|r| json!({ "kind": r.kind, "touched": r.touched }))
        .collect::<Vec<_>>());
    let mut assertions = Vec::new();
    match expect_le {
        Some(true) => assertions.push(check(
            "after_not_above_before",
            verdict.is_le(),
            format!("{verdict:?}"),
        )),
        Some(false) => assertions.push(check(
            "after_not_below_before",
            verdict.reversed().is_le(),
            format!("{verdict:?}"),
        )),
        None => {}
    }
    Ok(report("transform", data, assertions))
}

fn enumerate(family: &FamilyArgs, dir: &Path) -> CliResult<Output> {
    let restriction: Restriction = family.restriction.into();
    let catalog =
        enumerate_family_guarded(family.n, family.l, family.g, restriction, order_limit())?;
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
    let width = catalog.len().to_string().len().max(3);
    let mut entries = Vec::with_capacity(catalog.len());
    for (i, m) in catalog.members.iter().enumerate() {
        let name = format!("member_{i:0width$}.g");
        write_file(&dir.join(&name), &write_graph(&m.graph))?;
        entries.push(json!({
            "file": name,
            "form": hex(&m.form),
            "girth": m.girth,
            "leaves": m.leaves,
            "attachments": m.attachments,
            "coefficients": coeff_json(&m.coeffs),
        }));
    }
    let index = json!({
        "n": family.n,
        "l": family.l,
        "g": family.g,
        "restriction": restriction,
        "count": catalog.len(),
        "members": entries,
    });
    let text = serde_json::to_string_pretty(&index).expect("index serializes");
    write_file(&dir.join("index.json"), &text)?;
    Ok(report(
        "enumerate",
        json!({ "count": catalog.len(), "directory": dir.display().to_string() }),
        Vec::new(),
    ))
}

fn verify(theorem: Theorem, n: usize, l: Option<usize>, g: Option<usize>) -> CliResult<Output> {
    let limit = order_limit();
    if theorem == Theorem::Conjecture {
        let r = check_conjecture_guarded(n, limit)?;
        let assertions = vec![
            check(
                "branch_vertices_dominated",
                r.branch_violations == 0,
                format!(
                    "{} graphs checked{}",
                    r.branch_checked,
                    if r.branch_vacuous { ", vacuous" } else { "" }
                ),
            ),
            check(
                "pooled_minimal_sets",
                r.pooled_violations == 0,
                format!("{} families checked", r.pooled_checked),
            ),
        ];
        return Ok(report("verify", to_value(&r), assertions));
    }
    let l = l.ok_or_else(|| CliError::Usage("--l is required".into()))?;
    let (girth, restriction) = match theorem {
        Theorem::GirthThree | Theorem::GirthFour => {
            let fixed = if theorem == Theorem::GirthThree { 3 } else { 4 };
            if g.is_some_and(|g| g != fixed) {
                return Err(CliError::Usage(format!("this check fixes g = {fixed}")));
            }
            (fixed, Restriction::Full)
        }
        Theorem::OneAttachment => (need_g(g)?, Restriction::OneAttachment),
        Theorem::TwoAttachments => (need_g(g)?, Restriction::TwoAttachments),
        Theorem::Conjecture => unreachable!(),
    };
    let r = verify_minimal_family_guarded(n, l, girth, restriction, limit)?;
    let assertions = r.assertions.clone();
    Ok(report("verify", to_value(&r), assertions))
}

fn need_g(g: Option<usize>) -> CliResult<usize> {
    g.ok_or_else(|| CliError::Usage("--g is required".into()))
}

fn counterexample() -> CliResult<Output> {
    let g1 = build_u(FamilySpec::new(10, 2, 3, 0))?;
    let g2 = build_u(FamilySpec::new(10, 2, 3, 1))?;
    let (c1, c2) = (laplacian_coefficients(&g1), laplacian_coefficients(&g2));
    let verdict = compare(&c1, &c2)?;
    let (below, above) = strict_indices(&c1, &c2);
    let r1 = classify(&g1);
    let data = json!({
        "g1": { "graph": echo(&g1), "coefficients": coeff_json(&c1), "polynomial": c1.polynomial_string() },
        "g2": { "graph": echo(&g2), "coefficients": coeff_json(&c2), "polynomial": c2.polynomial_string() },
        "verdict": verdict,
        "g1_below_at": below,
        "g1_above_at": above,
    });
    let assertions = vec![
        check(
            "g1_coefficients",
            c1 == CoeffVector::from_u64s(&COUNTEREXAMPLE_G1),
            "",
        ),
        check(
            "g2_coefficients",
            c2 == CoeffVector::from_u64s(&COUNTEREXAMPLE_G2),
            "",
        ),
        check(
            "incomparable",
            verdict == PosetRel::Incomparable,
            format!("{verdict:?}"),
        ),
        check(
            "g1_shape",
            r1.is_unicyclic && r1.girth == Some(3) && r1.leaf_count == 2,
            "unicyclic, girth 3, two leaves",
        ),
    ];
    Ok(report("counterexample", data, assertions))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_cli(
            std::iter::once("lapco").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn counterexample_passes() {
        let (code, out, _) = run(&["counterexample"]);
        assert_eq!(code, 0);
        let doc: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(doc["verdict"], "incomparable");
        assert_eq!(doc["g1"]["coefficients"][8], "382");
    }

    #[test]
    fn unknown_subcommand() {
        let (code, _, err) = run(&["frobnicate"]);
        assert_ne!(code, 0);
        assert!(!err.is_empty());
    }

    #[test]
    fn build_to_stdout() {
        let (code, out, _) = run(&["build", "--family", "u", "--n", "5", "--l", "1", "--g", "3"]);
        assert_eq!(code, 0);
        assert_eq!(parse_graph(&out).unwrap().order(), 5);
        let (code, _, err) = run(&["build", "--family", "u", "--n", "5", "--l", "3", "--g", "3"]);
        assert_eq!(code, 1);
        assert!(err.contains("g + p + l"));
    }
}
