//! `hecke`: expansions, coefficients, tables and verification suites for the
//! centre of the Hecke algebra of `S_n`.

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hecke_core::central::{formula_coeff, q_coeff, Centre, Method, DEFAULT_VERIFY_BOUND};
use hecke_core::combin::{perm_character, Composition, Partition};
use hecke_core::error::Error;
use hecke_core::hecke::{AlgebraConfig, HeckeElement};
use hecke_core::polyring::XiPoly;
use hecke_core::table::CoefficientTable;
use hecke_core::verify;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "hecke",
    version,
    about = "Exact computations in the centre of the Hecke algebra of S_n"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest n for brute-force computations (direct method, verification).
    #[arg(long, global = true)]
    bound: Option<usize>,

    /// Disable memoization of products and norms.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Report coefficients over Z[q^(1/2), q^(-1/2)] instead of Z[x].
    #[arg(long, global = true)]
    q: bool,

    /// Worker threads; 1 runs sequentially.
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand the norm b_alpha.
    ExpandNorm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long, value_enum, default_value_t = Basis::Gamma)]
        basis: Basis,
        #[arg(long, default_value = "formula")]
        method: Method,
    },
    /// Expand the class element Gamma_lambda on the T basis.
    ExpandGamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
    },
    /// Coefficient of Gamma_lambda in b_alpha.
    Coeff {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        lambda: String,
    },
    /// Matrix of coefficients of Gamma_lambda in b_alpha for all partitions of n.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "formula")]
        method: Method,
    },
    /// Value of the permutation character of S_lambda at the class alpha.
    Character {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        alpha: String,
    },
    /// Projection of b_alpha onto the parabolic subalgebra H_lambda.
    Project {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Basis::Gamma)]
        basis: Basis,
    },
    /// Run the invariant suites.
    Verify {
        /// Run only these suites (repeatable).
        #[arg(long)]
        suite: Vec<String>,
        /// List the suites and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// Class elements Gamma_lambda (formula terms for `project`).
    Gamma,
    /// Standard basis T_w.
    T,
}

enum Failure {
    Usage(String),
    Invariant(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_invariant_violation() || e == Error::NotCentral {
            Failure::Invariant(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("writing CSV: {e}"))
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(&cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violation: {msg}");
            ExitCode::from(3)
        }
    }
}

fn centre(cli: &Cli) -> Centre {
    let config = AlgebraConfig {
        cache_enabled: !cli.no_cache,
        parallel: cli.jobs != Some(1),
        ..AlgebraConfig::default()
    };
    Centre::new(config).with_verify_bound(cli.bound.unwrap_or(DEFAULT_VERIFY_BOUND))
}

fn run(cli: &Cli) -> Outcome {
    let bound = cli.bound.unwrap_or(DEFAULT_VERIFY_BOUND);
    match &cli.command {
        Command::ExpandNorm {
            n,
            alpha,
            basis,
            method,
        } => {
            let alpha = partition_arg("alpha", alpha, *n)?;
            if *method == Method::Direct || *basis == Basis::T {
                check_bound(*n, bound)?;
            }
            expand_norm(cli, *n, &alpha, *basis, *method)
        }
        Command::ExpandGamma { n, lambda } => {
            let lam = partition_arg("lambda", lambda, *n)?;
            check_bound(*n, bound)?;
            let g = centre(cli).gamma(&lam)?;
            Ok(render_element(cli, &g, lam.l())?)
        }
        Command::Coeff { n, alpha, lambda } => {
            let alpha = partition_arg("alpha", alpha, *n)?;
            let lam = partition_arg("lambda", lambda, *n)?;
            coeff(cli, *n, &alpha, &lam, bound)
        }
        Command::Table { n, method } => {
            if *n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            if *method == Method::Direct {
                check_bound(*n, bound)?;
            }
            let table = CoefficientTable::build(&centre(cli), *n, *method)?;
            table_output(cli, &table)
        }
        Command::Character { n, lambda, alpha } => {
            let lam = composition_arg("lambda", lambda, *n)?;
            let alpha = partition_arg("alpha", alpha, *n)?;
            let value = perm_character(*n, &lam, &alpha)?;
            Ok(match cli.format {
                Format::Text => format!("{value}\n"),
                Format::Json => json_line(&json!({
                    "n": n,
                    "lambda": lam,
                    "alpha": alpha,
                    "value": value.to_string(),
                })),
                Format::Csv => csv_text(
                    &["lambda", "alpha", "value"],
                    [vec![lam.to_string(), alpha.to_string(), value.to_string()]],
                )?,
            })
        }
        Command::Project {
            n,
            alpha,
            lambda,
            basis,
        } => {
            let alpha = partition_arg("alpha", alpha, *n)?;
            let lam = composition_arg("lambda", lambda, *n)?;
            check_bound(*n, bound)?;
            project(cli, *n, &alpha, &lam, *basis)
        }
        Command::Verify { suite, list } => verify_cmd(cli, suite, *list),
    }
}

fn parse_composition(name: &str, text: &str, n: usize) -> Result<Composition, Failure> {
    let c: Composition = text
        .parse()
        .map_err(|e: Error| Failure::Usage(format!("--{name}: {e}")))?;
    if c.total() != n {
        return Err(Failure::Usage(format!(
            "--{name} {c} sums to {}, not {n}",
            c.total()
        )));
    }
    Ok(c)
}

fn composition_arg(name: &str, text: &str, n: usize) -> Result<Composition, Failure> {
    parse_composition(name, text, n)
}

/// Accepts any composition; an unsorted one is sorted with a notice.
fn partition_arg(name: &str, text: &str, n: usize) -> Result<Partition, Failure> {
    let c = parse_composition(name, text, n)?;
    let p = c.sorted();
    if p.as_composition() != &c {
        eprintln!("note: --{name} {c} read as the partition {p}");
    }
    Ok(p)
}

fn check_bound(n: usize, bound: usize) -> Result<(), Failure> {
    if n > bound {
        return Err(Failure::Usage(format!(
            "n = {n} needs a brute-force computation; raise --bound (currently {bound}) to allow it"
        )));
    }
    Ok(())
}

/// Text or JSON form of a coefficient, moved to `q` when requested.
fn coeff_text(cli: &Cli, c: &XiPoly, from_l: usize, to_l: usize) -> String {
    if cli.q {
        q_coeff(c, from_l, to_l).to_string()
    } else {
        c.to_string()
    }
}

fn coeff_json(cli: &Cli, c: &XiPoly, from_l: usize, to_l: usize) -> Value {
    if cli.q {
        q_coeff(c, from_l, to_l).to_json()
    } else {
        serde_json::to_value(c).expect("polynomial serializes")
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json renders");
    s.push('\n');
    s
}

fn csv_text<I>(header: &[&str], rows: I) -> Result<String, Failure>
where
    I: IntoIterator<Item = Vec<String>>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Element on the `T` basis; `scale_l` is the length used for the `q` shift.
fn render_element(cli: &Cli, h: &HeckeElement, scale_l: usize) -> Outcome {
    Ok(match cli.format {
        Format::Text => format!(
            "{}\n",
            h.to_text_with(|w, c| coeff_text(cli, c, scale_l, w.length()))
        ),
        Format::Json if !cli.q => json_line(&h.to_json()),
        Format::Json => {
            let terms: Vec<Value> = h
                .sorted_terms()
                .into_iter()
                .map(|(w, c)| json!({"perm": w, "coeff": coeff_json(cli, c, scale_l, w.length())}))
                .collect();
            json_line(&json!({"n": h.degree(), "terms": terms}))
        }
        Format::Csv => csv_text(
            &["perm", "coeff"],
            h.sorted_terms()
                .into_iter()
                .map(|(w, c)| vec![w.to_string(), coeff_text(cli, c, scale_l, w.length())]),
        )?,
    })
}

fn expand_norm(cli: &Cli, n: usize, alpha: &Partition, basis: Basis, method: Method) -> Outcome {
    let centre = centre(cli);
    if basis == Basis::T {
        let b = centre.norm_b(alpha.as_composition())?;
        return render_element(cli, &b, alpha.l());
    }
    let e = centre.expand_norm(alpha.as_composition(), method)?;
    let la = alpha.l();
    Ok(match cli.format {
        Format::Text => format!(
            "{}\n",
            e.to_text_with(|lam, c| coeff_text(cli, c, la, lam.l()))
        ),
        Format::Json if !cli.q => json_line(&e.to_json()),
        Format::Json => {
            let coeffs: Vec<Value> = e
                .coeffs()
                .iter()
                .map(|(lam, c)| json!({"lambda": lam, "coeff": coeff_json(cli, c, la, lam.l())}))
                .collect();
            json_line(&json!({"n": n, "coeffs": coeffs}))
        }
        Format::Csv => csv_text(
            &["lambda", "coeff"],
            e.coeffs()
                .iter()
                .map(|(lam, c)| vec![lam.to_string(), coeff_text(cli, c, la, lam.l())]),
        )?,
    })
}

fn coeff(cli: &Cli, n: usize, alpha: &Partition, lam: &Partition, bound: usize) -> Outcome {
    let formula = formula_coeff(alpha, lam)?;
    let direct = if n <= bound {
        let centre = centre(cli);
        let b = centre.norm_b(alpha.as_composition())?;
        Some(centre.gamma_coeff(&b, lam)?)
    } else {
        None
    };
    let agree = direct.as_ref().map(|d| *d == formula);
    let (la, ll) = (alpha.l(), lam.l());
    let out = match cli.format {
        Format::Text => {
            let mut s = format!("{}\n", coeff_text(cli, &formula, la, ll));
            if let Some(d) = &direct {
                let mark = if agree == Some(true) {
                    "agree"
                } else {
                    "DISAGREE"
                };
                s.push_str(&format!(
                    "direct: {} [{mark}]\n",
                    coeff_text(cli, d, la, ll)
                ));
            }
            s
        }
        Format::Json => json_line(&json!({
            "n": n,
            "alpha": alpha,
            "lambda": lam,
            "coeff": coeff_json(cli, &formula, la, ll),
            "direct": direct.as_ref().map(|d| coeff_json(cli, d, la, ll)),
            "agree": agree,
        })),
        Format::Csv => csv_text(
            &["alpha", "lambda", "coeff", "direct", "agree"],
            [vec![
                alpha.to_string(),
                lam.to_string(),
                coeff_text(cli, &formula, la, ll),
                direct
                    .as_ref()
                    .map(|d| coeff_text(cli, d, la, ll))
                    .unwrap_or_default(),
                agree.map(|a| a.to_string()).unwrap_or_default(),
            ]],
        )?,
    };
    if agree == Some(false) {
        return Err(Failure::Invariant(format!(
            "formula and direct coefficients differ for alpha={alpha}, lambda={lam}:\n{out}"
        )));
    }
    Ok(out)
}

fn table_output(cli: &Cli, table: &CoefficientTable) -> Outcome {
    let cell = |a: &Partition, l: &Partition, c: &XiPoly| coeff_text(cli, c, a.l(), l.l());
    Ok(match cli.format {
        Format::Text => table.to_text_with(cell),
        Format::Json if !cli.q => json_line(&table.to_json()),
        Format::Json => {
            let rows: Vec<Vec<Value>> = table
                .partitions
                .iter()
                .zip(&table.rows)
                .map(|(a, row)| {
                    table
                        .partitions
                        .iter()
                        .zip(row)
                        .map(|(l, c)| coeff_json(cli, c, a.l(), l.l()))
                        .collect()
                })
                .collect();
            json_line(&json!({"n": table.n, "partitions": table.partitions, "rows": rows}))
        }
        Format::Csv => {
            let header = table.csv_header();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_text(&header, table.csv_records(cell))?
        }
    })
}

fn project(cli: &Cli, n: usize, alpha: &Partition, lam: &Composition, basis: Basis) -> Outcome {
    let centre = centre(cli);
    let terms = centre.project_norm_general(alpha, lam)?;
    if basis == Basis::T {
        let sum = hecke_core::central::sum_projection(n, &terms)?;
        return render_element(cli, &sum, alpha.l());
    }
    Ok(match cli.format {
        Format::Text => {
            let body: Vec<String> = terms
                .iter()
                .map(|t| {
                    let c = t.coeff.to_string();
                    if c == "1" {
                        format!("N{}", t.theta)
                    } else {
                        format!("N{} * {c}", t.theta)
                    }
                })
                .collect();
            if body.is_empty() {
                "0\n".into()
            } else {
                format!("{}\n", body.join(" + "))
            }
        }
        Format::Json => {
            let items: Vec<Value> = terms
                .iter()
                .map(|t| json!({"theta": t.theta.to_string(), "coeff": t.coeff.to_string(), "norm": t.norm.to_json()}))
                .collect();
            json_line(&json!({"n": n, "alpha": alpha, "lambda": lam, "terms": items}))
        }
        Format::Csv => csv_text(
            &["theta", "coeff"],
            terms
                .iter()
                .map(|t| vec![t.theta.to_string(), t.coeff.to_string()]),
        )?,
    })
}

fn verify_cmd(cli: &Cli, names: &[String], list: bool) -> Outcome {
    let all = verify::suites();
    if list {
        return Ok(all
            .iter()
            .map(|s| {
                format!(
                    "{:<30} n <= {}  {}\n",
                    s.name, s.default_max_n, s.description
                )
            })
            .collect());
    }
    let selected: Vec<&verify::Suite> = if names.is_empty() {
        all.iter().collect()
    } else {
        names
            .iter()
            .map(|name| {
                all.iter().find(|s| s.name == name).ok_or_else(|| {
                    Failure::Usage(format!("unknown suite {name:?}; see `hecke verify --list`"))
                })
            })
            .collect::<Result<_, _>>()?
    };
    let centre = centre(cli);
    let cap = cli.bound.unwrap_or(usize::MAX);
    let mut reports = Vec::new();
    for s in selected {
        reports.push(s.run(&centre, cap)?);
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let out = match cli.format {
        Format::Text => {
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            s.push_str(&format!("{} suites, {failed} failed\n", reports.len()));
            s
        }
        Format::Json => json_line(&Value::Array(
            reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.name,
                        "max_n": r.max_n,
                        "checks": r.checks,
                        "passed": r.passed(),
                        "failures": r.failures,
                        "suppressed": r.suppressed,
                    })
                })
                .collect(),
        )),
        Format::Csv => csv_text(
            &["suite", "max_n", "checks", "passed"],
            reports.iter().map(|r| {
                vec![
                    r.name.to_string(),
                    r.max_n.to_string(),
                    r.checks.to_string(),
                    r.passed().to_string(),
                ]
            }),
        )?,
    };
    if failed > 0 {
        return Err(Failure::Invariant(format!("{failed} suites failed\n{out}")));
    }
    Ok(out)
}
