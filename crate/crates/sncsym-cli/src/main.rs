//! Batch command-line front end for the sNCSym library: enumeration tables,
//! basis expansions and conversions, products, projection and lifting, inner
//! product matrices, Möbius values, Schur functions, Kostka tables and an
//! identity-verification suite.
//!
//! Exit status: 0 on success, 1 on a usage error, 2 when `verify` detects a
//! failing identity.

use clap::{Args, Parser, Subcommand, ValueEnum};
use sncsym::algebra::{Basis, Element};
use sncsym::combinat::{
    mobius, mobius_zero, set_superpartitions, super_compositions, SuperComposition,
    Superpartition,
};
use sncsym::oracle;
use sncsym::schur::{kostka, schur, Kind};
use sncsym::ssym::{self, SBasis, SElement};
use sncsym::verify::run_suite;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "sncsym", version, about = "Symmetric functions in noncommuting variables in superspace")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value = "text", global = false)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// List the set superpartitions of a bidegree in enumeration order
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Expand an expression into concrete noncommuting variables
    Expand {
        /// Number of x-variables (default: degree + fermionic degree + 1)
        #[arg(long)]
        num_vars: Option<u32>,
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Convert an expression between the m, p, e and h bases
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Multiply two expressions
    Product {
        lhs: String,
        rhs: String,
        #[command(flatten)]
        common: Common,
    },
    /// Project an expression to sSym via ρ
    Project {
        /// Target sSym basis for the output
        #[arg(long)]
        to: Option<String>,
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Lift an sSym expression to sNCSym via ρ̃
    Lift {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Inner product of two expressions, or the Gram matrix of a bidegree
    Inner {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
        /// Row basis for the Gram matrix
        #[arg(long, default_value = "m")]
        from: String,
        /// Column basis for the Gram matrix
        #[arg(long, default_value = "h")]
        to: String,
        exprs: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Möbius value μ(K, L), or the table of μ(0̂, K) over a bidegree
    Mobius {
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        m: Option<usize>,
        indices: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Schur function S (kind 1) or S̄ (kind 2) of a superpartition shape
    Schur {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        kind: u32,
        /// Output basis
        #[arg(long, default_value = "m")]
        basis: String,
        shape: String,
        #[command(flatten)]
        common: Common,
    },
    /// Kostka table K_{Λ,Ω} over the superpartitions of a bidegree
    Kostka {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=2))]
        kind: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run the identity-verification suite and report per-identity results
    Verify {
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<sncsym::Error> for Failure {
    fn from(e: sncsym::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (common, result) = dispatch(cli.verb);
    match result {
        Ok(output) => match emit(&common, &output) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}

fn emit(common: &Common, output: &str) -> std::io::Result<()> {
    match &common.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{output}")
        }
        None => {
            println!("{output}");
            Ok(())
        }
    }
}

fn dispatch(verb: Verb) -> (Common, Result<String, Failure>) {
    match verb {
        Verb::Enumerate { n, m, common } => {
            let r = cmd_enumerate(n, m, common.format);
            (common, r)
        }
        Verb::Expand {
            num_vars,
            expr,
            common,
        } => {
            let r = cmd_expand(num_vars, &expr, common.format);
            (common, r)
        }
        Verb::Convert {
            from,
            to,
            expr,
            common,
        } => {
            let r = cmd_convert(&from, &to, &expr, common.format);
            (common, r)
        }
        Verb::Product { lhs, rhs, common } => {
            let r = cmd_product(&lhs, &rhs, common.format);
            (common, r)
        }
        Verb::Project { to, expr, common } => {
            let r = cmd_project(to.as_deref(), &expr, common.format);
            (common, r)
        }
        Verb::Lift { expr, common } => {
            let r = cmd_lift(&expr, common.format);
            (common, r)
        }
        Verb::Inner {
            n,
            m,
            from,
            to,
            exprs,
            common,
        } => {
            let r = cmd_inner(n, m, &from, &to, &exprs, common.format);
            (common, r)
        }
        Verb::Mobius {
            n,
            m,
            indices,
            common,
        } => {
            let r = cmd_mobius(n, m, &indices, common.format);
            (common, r)
        }
        Verb::Schur {
            kind,
            basis,
            shape,
            common,
        } => {
            let r = cmd_schur(kind, &basis, &shape, common.format);
            (common, r)
        }
        Verb::Kostka {
            n,
            m,
            kind,
            common,
        } => {
            let r = cmd_kostka(n, m, kind, common.format);
            (common, r)
        }
        Verb::Verify { max_degree, common } => {
            let r = cmd_verify(max_degree, common.format);
            (common, r)
        }
    }
}

/// Quote a field for CSV output.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn element_output(el: &Element, format: Format) -> String {
    match format {
        Format::Text => el.to_string(),
        Format::Json => el.to_json().to_string(),
        Format::Csv => {
            let mut out = String::from("index,coefficient");
            for (i, c) in el.terms() {
                out.push_str(&format!("\n{},{}", csv_field(&i.to_string()), c));
            }
            out
        }
    }
}

fn selement_output(el: &SElement, format: Format) -> String {
    match format {
        Format::Text => el.to_string(),
        Format::Json => el.to_json().to_string(),
        Format::Csv => {
            let mut out = String::from("index,coefficient");
            for (lam, c) in el.terms() {
                out.push_str(&format!("\n{},{}", csv_field(&lam.to_string()), c));
            }
            out
        }
    }
}

fn matrix_output(
    rows: &[String],
    cols: &[String],
    entries: &[Vec<String>],
    format: Format,
) -> String {
    match format {
        Format::Text => {
            let mut widths: Vec<usize> = cols.iter().map(|c| c.len()).collect();
            for row in entries {
                for (j, v) in row.iter().enumerate() {
                    widths[j] = widths[j].max(v.len());
                }
            }
            let label_w = rows.iter().map(|r| r.len()).max().unwrap_or(0);
            let mut out = format!("{:label_w$}", "");
            for (j, c) in cols.iter().enumerate() {
                out.push_str(&format!("  {:>w$}", c, w = widths[j]));
            }
            for (i, r) in rows.iter().enumerate() {
                out.push_str(&format!("\n{r:label_w$}"));
                for (j, v) in entries[i].iter().enumerate() {
                    out.push_str(&format!("  {:>w$}", v, w = widths[j]));
                }
            }
            out
        }
        Format::Json => serde_json::json!({
            "rows": rows,
            "cols": cols,
            "entries": entries,
        })
        .to_string(),
        Format::Csv => {
            let mut out = String::from("index");
            for c in cols {
                out.push(',');
                out.push_str(&csv_field(c));
            }
            for (i, r) in rows.iter().enumerate() {
                out.push('\n');
                out.push_str(&csv_field(r));
                for v in &entries[i] {
                    out.push(',');
                    out.push_str(&csv_field(v));
                }
            }
            out
        }
    }
}

fn cmd_enumerate(n: u32, m: usize, format: Format) -> Result<String, Failure> {
    let items: Vec<String> = set_superpartitions(n, m)
        .iter()
        .map(|i| i.to_string())
        .collect();
    Ok(match format {
        Format::Text => items.join("\n"),
        Format::Json => serde_json::json!({
            "n": n,
            "m": m,
            "count": items.len(),
            "items": items,
        })
        .to_string(),
        Format::Csv => {
            let mut out = String::from("index");
            for i in &items {
                out.push('\n');
                out.push_str(&csv_field(i));
            }
            out
        }
    })
}

fn cmd_expand(num_vars: Option<u32>, expr: &str, format: Format) -> Result<String, Failure> {
    let el = Element::parse_expression(expr)?;
    let nv = num_vars.unwrap_or_else(|| oracle::default_vars(el.degree(), el.df()));
    let poly = el.expand(nv);
    Ok(match format {
        Format::Text => poly.to_string(),
        Format::Json => serde_json::json!({
            "expression": el.to_string(),
            "num_vars": nv,
            "polynomial": poly.to_string(),
        })
        .to_string(),
        Format::Csv => {
            let mut out = String::from("monomial,coefficient");
            for (mono, c) in poly.terms() {
                let mut name = String::new();
                for t in &mono.thetas {
                    name.push_str(&format!("t{t} "));
                }
                for x in &mono.word {
                    name.push_str(&format!("x{x} "));
                }
                out.push_str(&format!("\n{},{}", csv_field(name.trim_end()), c));
            }
            out
        }
    })
}

fn cmd_convert(from: &str, to: &str, expr: &str, format: Format) -> Result<String, Failure> {
    let from = Basis::from_letter(from)?;
    let to = Basis::from_letter(to)?;
    let el = Element::parse_expression(expr)?;
    if !el.is_zero() && el.basis() != from {
        return Err(Failure::Usage(format!(
            "expression is in the {} basis, not {}",
            el.basis(),
            from
        )));
    }
    Ok(element_output(&el.convert(to), format))
}

fn cmd_product(lhs: &str, rhs: &str, format: Format) -> Result<String, Failure> {
    let a = Element::parse_expression(lhs)?;
    let b = Element::parse_expression(rhs)?;
    Ok(element_output(&a.product(&b), format))
}

fn cmd_project(to: Option<&str>, expr: &str, format: Format) -> Result<String, Failure> {
    let el = Element::parse_expression(expr)?;
    let mut projected = ssym::rho(&el);
    if let Some(to) = to {
        projected = projected.convert(SBasis::from_letter(to)?)?;
    }
    Ok(selement_output(&projected, format))
}

fn cmd_lift(expr: &str, format: Format) -> Result<String, Failure> {
    let el = SElement::parse_expression(expr)?;
    Ok(element_output(&ssym::lift(&el)?, format))
}

fn cmd_inner(
    n: Option<u32>,
    m: Option<usize>,
    from: &str,
    to: &str,
    exprs: &[String],
    format: Format,
) -> Result<String, Failure> {
    match exprs {
        [lhs, rhs] => {
            let a = Element::parse_expression(lhs)?;
            let b = Element::parse_expression(rhs)?;
            let v = a.inner(&b)?;
            Ok(match format {
                Format::Text => v.to_string(),
                Format::Json => serde_json::json!({ "value": v.to_string() }).to_string(),
                Format::Csv => format!("value\n{v}"),
            })
        }
        [] => {
            let (n, m) = match (n, m) {
                (Some(n), Some(m)) => (n, m),
                _ => {
                    return Err(Failure::Usage(
                        "inner needs either two expressions or --n and --m".to_string(),
                    ))
                }
            };
            let from = Basis::from_letter(from)?;
            let to = Basis::from_letter(to)?;
            let indices = set_superpartitions(n, m);
            let labels: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
            let mut entries = Vec::with_capacity(indices.len());
            for i in &indices {
                let fi = Element::basis_fn(from, i.as_comp());
                let mut row = Vec::with_capacity(indices.len());
                for j in &indices {
                    let gj = Element::basis_fn(to, j.as_comp());
                    row.push(fi.inner(&gj)?.to_string());
                }
                entries.push(row);
            }
            Ok(matrix_output(&labels, &labels, &entries, format))
        }
        _ => Err(Failure::Usage(
            "inner takes exactly two expressions, or none with --n and --m".to_string(),
        )),
    }
}

fn cmd_mobius(
    n: Option<u32>,
    m: Option<usize>,
    indices: &[String],
    format: Format,
) -> Result<String, Failure> {
    match indices {
        [k, l] => {
            let k = SuperComposition::parse(k)?;
            let l = SuperComposition::parse(l)?;
            if (k.degree(), k.df()) != (l.degree(), l.df()) {
                return Err(Failure::Usage("indices have different bidegrees".to_string()));
            }
            let v = mobius(&k, &l);
            Ok(match format {
                Format::Text => v.to_string(),
                Format::Json => serde_json::json!({ "value": v.to_string() }).to_string(),
                Format::Csv => format!("value\n{v}"),
            })
        }
        [] => {
            let (n, m) = match (n, m) {
                (Some(n), Some(m)) => (n, m),
                _ => {
                    return Err(Failure::Usage(
                        "mobius needs either two indices or --n and --m".to_string(),
                    ))
                }
            };
            let all = super_compositions(n, m);
            let rows: Vec<(String, String)> = all
                .iter()
                .map(|k| (k.to_string(), mobius_zero(k).to_string()))
                .collect();
            Ok(match format {
                Format::Text => rows
                    .iter()
                    .map(|(k, v)| format!("{k}  {v}"))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Json => serde_json::json!({
                    "n": n,
                    "m": m,
                    "values": rows
                        .iter()
                        .map(|(k, v)| serde_json::json!({ "index": k, "mobius": v }))
                        .collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Csv => {
                    let mut out = String::from("index,mobius");
                    for (k, v) in &rows {
                        out.push_str(&format!("\n{},{}", csv_field(k), v));
                    }
                    out
                }
            })
        }
        _ => Err(Failure::Usage(
            "mobius takes exactly two indices, or none with --n and --m".to_string(),
        )),
    }
}

fn cmd_schur(kind: u32, basis: &str, shape: &str, format: Format) -> Result<String, Failure> {
    let lam = Superpartition::parse(shape)?;
    let kind = Kind::from_num(kind)?;
    let basis = Basis::from_letter(basis)?;
    Ok(element_output(&schur(&lam, kind).convert(basis), format))
}

fn cmd_kostka(n: u32, m: usize, kind: u32, format: Format) -> Result<String, Failure> {
    let kind = Kind::from_num(kind)?;
    let shapes = Superpartition::enumerate(n, m);
    let labels: Vec<String> = shapes.iter().map(|l| l.to_string()).collect();
    let entries: Vec<Vec<String>> = shapes
        .iter()
        .map(|lam| {
            shapes
                .iter()
                .map(|omega| kostka(lam, omega, kind).to_string())
                .collect()
        })
        .collect();
    Ok(matrix_output(&labels, &labels, &entries, format))
}

fn cmd_verify(max_degree: u32, format: Format) -> Result<String, Failure> {
    let outcomes = run_suite(max_degree);
    let failures = outcomes.iter().filter(|o| !o.pass).count();
    let output = match format {
        Format::Text => {
            let mut lines: Vec<String> = outcomes
                .iter()
                .map(|o| {
                    let status = if o.pass { "PASS" } else { "FAIL" };
                    if o.detail.is_empty() {
                        format!("{status} {}", o.name)
                    } else {
                        format!("{status} {}: {}", o.name, o.detail)
                    }
                })
                .collect();
            lines.push(format!(
                "{} identities checked, {} failed",
                outcomes.len(),
                failures
            ));
            lines.join("\n")
        }
        Format::Json => serde_json::json!({
            "max_degree": max_degree,
            "identities": outcomes
                .iter()
                .map(|o| {
                    let mut entry = serde_json::json!({
                        "criterion": o.criterion,
                        "identity": o.name,
                        "status": if o.pass { "pass" } else { "fail" },
                    });
                    if !o.detail.is_empty() {
                        entry["detail"] = serde_json::Value::String(o.detail.clone());
                    }
                    entry
                })
                .collect::<Vec<_>>(),
            "checked": outcomes.len(),
            "failed": failures,
        })
        .to_string(),
        Format::Csv => {
            let mut out = String::from("criterion,identity,status,detail");
            for o in &outcomes {
                out.push_str(&format!(
                    "\n{},{},{},{}",
                    o.criterion,
                    o.name,
                    if o.pass { "pass" } else { "fail" },
                    csv_field(&o.detail)
                ));
            }
            out
        }
    };
    if failures > 0 {
        // still print the report before signalling failure
        println!("{output}");
        return Err(Failure::Verification);
    }
    Ok(output)
}
