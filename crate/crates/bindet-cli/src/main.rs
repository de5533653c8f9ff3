//! `bindet`: exact binomial determinants from the command line.
//!
//! Exit codes: 0 success, 1 domain error (formula hypotheses violated,
//! verification failures), 2 usage or parse error.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use bindet::error::Error;
use bindet::formulas::{self, Method, DEFAULT_TERM_CAP};
use bindet::indexsets::IndexSet;
use bindet::interchange::interchange_checked;
use bindet::nullspace::{nullspace_cramer, nullspace_lambda};
use bindet::verify::{run_suite, InstanceGen, Shape};
use bindet::{oracle, pi, q_quotient, ExactRat};

#[derive(Parser)]
#[command(
    name = "bindet",
    about = "Exact binomial determinants, expansions, nullspaces, and interchange identities",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate det(B^I_J) and report the method used.
    Det {
        /// Row set: "3,5,7,8", "2..6", or "2..6/4".
        #[arg(long)]
        rows: String,
        /// Column set, same grammar.
        #[arg(long)]
        cols: String,
        /// auto, oracle, moh, rows_interval, cols_interval, rows_almost_cols,
        /// almost_rows_cols, size_reduction, reduce_shift, zero_rule,
        /// identity_rule.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Cap on size-reduction expansion terms.
        #[arg(long, default_value_t = DEFAULT_TERM_CAP)]
        term_cap: u64,
        /// Thousands separators in text output.
        #[arg(long)]
        pretty: bool,
    },
    /// The scalar quotient pi^I_J.
    Pi {
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// List the size-reduction expansion terms and their determinants.
    Expand {
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_TERM_CAP)]
        term_cap: u64,
    },
    /// Left nullspace generator of the d x (d-1) matrix B^I_J.
    Nullspace {
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
        /// Use the lambda closed form (rows an interval, cols {0} u [j, j+d-3]).
        #[arg(long)]
        lambda: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reflect rows and columns at n: det(I,J) = q * det(n-J, n-I).
    Interchange {
        #[arg(long)]
        rows: String,
        #[arg(long)]
        cols: String,
        #[arg(long)]
        n: i64,
        /// Second reflection point m >= n: composes to
        /// det(I,J) = q * q2 * det(I+m-n, J+m-n).
        #[arg(long)]
        m: Option<i64>,
        /// Skip the oracle verification of the identity.
        #[arg(long)]
        unchecked: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a named verification suite of seeded random instances.
    Verify {
        /// oracle-equivalence, positivity, size-reduction-sum, max-rank,
        /// nullspace-annihilation, interchange, pi-product,
        /// counting-identity, counterexample-fixtures.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 5)]
        max_d: usize,
        #[arg(long, default_value_t = 16)]
        max_index: i64,
        /// Instance family: general, j-leq-i, rows-interval, cols-interval,
        /// both-intervals, punctured-rows, punctured-cols, nullspace-family.
        /// Defaults to the suite's natural family.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Usage errors (malformed flag values) exit with 2, domain errors
/// (formula hypotheses violated) with 1.
enum CliError {
    Usage(Error),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(CliError::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_set(name: &str, s: &str) -> Result<IndexSet, CliError> {
    let set: IndexSet = s.parse().map_err(CliError::Usage)?;
    if set.is_empty() {
        eprintln!("note: --{name} {s} denotes the empty set");
    }
    Ok(set)
}

fn group_thousands(digits: &str) -> String {
    let (sign, body) = digits.strip_prefix('-').map_or(("", digits), |b| ("-", b));
    let mut out = String::with_capacity(body.len() + body.len() / 3 + 1);
    let off = body.len() % 3;
    for (k, ch) in body.chars().enumerate() {
        if k > 0 && (k + 3 - off) % 3 == 0 {
            out.push(',');
        }
        out.push(ch);
    }
    format!("{sign}{out}")
}

fn run(cmd: Cmd) -> Result<ExitCode, CliError> {
    match cmd {
        Cmd::Det {
            rows,
            cols,
            method,
            format,
            term_cap,
            pretty,
        } => {
            let rows = parse_set("rows", &rows)?;
            let cols = parse_set("cols", &cols)?;
            let method = match method.as_str() {
                "auto" => None,
                other => Some(Method::from_str(other).map_err(CliError::Usage)?),
            };
            let report = formulas::det_with_cap(&rows, &cols, method, term_cap)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => {
                    let s = report.value.to_string();
                    println!("{}", if pretty { group_thousands(&s) } else { s });
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Pi { rows, cols, format } => {
            let rows = parse_set("rows", &rows)?;
            let cols = parse_set("cols", &cols)?;
            let value = pi(&rows, &cols)?;
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "rows": rows.to_string(),
                        "cols": cols.to_string(),
                        "pi": value.to_string(),
                    })
                ),
                Format::Text => println!("{value}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Expand {
            rows,
            cols,
            format,
            term_cap,
        } => {
            let rows = parse_set("rows", &rows)?;
            let cols = parse_set("cols", &cols)?;
            let terms = formulas::size_reduction_expand_capped(&rows, &cols, term_cap)?;
            let p = pi(&rows, &cols)?;
            let dets: Vec<bindet::ExactInt> = terms
                .iter()
                .map(|t| oracle::det_submatrix(&t.rows, &t.cols))
                .collect::<Result<_, _>>()?;
            let total = formulas::det_with_cap(&rows, &cols, None, term_cap)?.value;
            match format {
                Format::Json => {
                    let term_objs: Vec<_> = terms
                        .iter()
                        .zip(&dets)
                        .map(|(t, d)| {
                            json!({
                                "rows": t.rows.to_string(),
                                "cols": t.cols.to_string(),
                                "det": d.to_string(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "rows": rows.to_string(),
                            "cols": cols.to_string(),
                            "pi": p.to_string(),
                            "count": terms.len(),
                            "terms": term_objs,
                            "det": total.to_string(),
                        })
                    );
                }
                Format::Text => {
                    println!("pi: {p}");
                    println!("terms: {}", terms.len());
                    for (t, d) in terms.iter().zip(&dets) {
                        println!("  rows={} cols={} det={}", t.rows, t.cols, d);
                    }
                    println!("det: {total}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Nullspace {
            rows,
            cols,
            lambda,
            format,
        } => {
            let rows = parse_set("rows", &rows)?;
            let cols = parse_set("cols", &cols)?;
            let (form, vector) = if lambda {
                let ri = rows.as_interval().ok_or(Error::MethodInapplicable {
                    method: "lambda",
                    reason: "rows must be an interval",
                })?;
                if cols.len() < 2 || cols.min() != Some(0) {
                    return Err(Error::MethodInapplicable {
                        method: "lambda",
                        reason: "cols must be {0} followed by an interval",
                    }
                    .into());
                }
                let (form, v) = nullspace_lambda(ri.lo(), rows.len(), cols.elems()[1])?;
                (Some(form), v)
            } else {
                (None, nullspace_cramer(&rows, &cols)?)
            };
            match format {
                Format::Json => {
                    let mut obj = json!({
                        "rows": rows.to_string(),
                        "cols": cols.to_string(),
                    });
                    let map = obj.as_object_mut().unwrap();
                    for (k, v) in vector.to_json().as_object().unwrap() {
                        map.insert(k.clone(), v.clone());
                    }
                    if let Some(form) = form {
                        map.insert("lambda_form".into(), form.to_json());
                    }
                    println!("{obj}");
                }
                Format::Text => {
                    let coeffs: Vec<String> =
                        vector.coeffs().iter().map(|c| c.to_string()).collect();
                    let integral: Vec<String> = vector
                        .integral_coeffs()
                        .iter()
                        .map(|c| c.to_string())
                        .collect();
                    println!("coeffs: {}", coeffs.join(","));
                    println!("integral: {}", integral.join(","));
                    if let Some(form) = form {
                        println!("lambda: {}", form.lambda);
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Interchange {
            rows,
            cols,
            n,
            m,
            unchecked,
            format,
        } => {
            let rows = parse_set("rows", &rows)?;
            let cols = parse_set("cols", &cols)?;
            let verify = !unchecked && rows.len() <= 6;
            let res = interchange_checked(&rows, &cols, n, verify)?;
            // optional second reflection composes back to a shifted pair
            let composed = match m {
                Some(m) => {
                    if m < n {
                        return Err(Error::OutOfRange {
                            name: "m",
                            value: m,
                            lo: n,
                            hi: i64::MAX,
                        }
                        .into());
                    }
                    let q2 = q_quotient(&res.new_cols, &res.new_rows, m)?;
                    let shifted_rows = rows.shift_up(m - n)?;
                    let shifted_cols = cols.shift_up(m - n)?;
                    if verify {
                        let original = ExactRat::from_integer(oracle::det_submatrix(&rows, &cols)?);
                        let shifted = ExactRat::from_integer(oracle::det_submatrix(
                            &shifted_rows,
                            &shifted_cols,
                        )?);
                        assert_eq!(&res.q_factor * &q2 * shifted, original);
                    }
                    Some((q2, shifted_rows, shifted_cols))
                }
                None => None,
            };
            match format {
                Format::Json => {
                    let mut obj = json!({
                        "rows": rows.to_string(),
                        "cols": cols.to_string(),
                    });
                    let map = obj.as_object_mut().unwrap();
                    for (k, v) in res.to_json().as_object().unwrap() {
                        map.insert(k.clone(), v.clone());
                    }
                    if let Some((q2, sr, sc)) = &composed {
                        map.insert("m".into(), json!(m.unwrap()));
                        map.insert("q2".into(), json!(q2.to_string()));
                        map.insert("shifted_rows".into(), json!(sr.to_string()));
                        map.insert("shifted_cols".into(), json!(sc.to_string()));
                    }
                    map.insert("verified".into(), json!(verify));
                    println!("{obj}");
                }
                Format::Text => {
                    println!("q: {}", res.q_factor);
                    println!("new_rows: {}", res.new_rows);
                    println!("new_cols: {}", res.new_cols);
                    if let Some((q2, sr, sc)) = &composed {
                        println!("q2: {q2}");
                        println!("shifted_rows: {sr}");
                        println!("shifted_cols: {sc}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suite,
            seed,
            trials,
            max_d,
            max_index,
            shape,
            format,
        } => {
            let shape = match shape {
                Some(s) => Shape::from_str(&s).map_err(CliError::Usage)?,
                None => default_shape(&suite),
            };
            let gen = InstanceGen::new(seed, max_d, max_index, shape);
            let report = run_suite(&suite, &gen, trials).map_err(|e| match e {
                Error::UnknownSuite { .. } => CliError::Usage(e),
                other => CliError::Domain(other),
            })?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => {
                    println!(
                        "suite {}: {} trials, {} failures ({} ms)",
                        report.suite,
                        report.trials,
                        report.failures.len(),
                        report.elapsed_ms
                    );
                    if let Some(s) = &report.summary {
                        println!("{s}");
                    }
                    for f in &report.failures {
                        println!(
                            "FAIL {} expected={} got={} replay: bindet {}",
                            f.instance, f.expected, f.got, f.replay
                        );
                    }
                }
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn default_shape(suite: &str) -> Shape {
    match suite {
        "positivity" => Shape::General,
        "nullspace-annihilation" => Shape::NullspaceFamily,
        "pi-product" => Shape::RowsInterval,
        _ => Shape::JLeqI,
    }
}
