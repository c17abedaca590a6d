//! Command-line front end: reads quaternion matrices from files, runs the
//! inverses and solvers, and prints results with verification reports.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 inconsistent equation
//! (or failed verification), 3 determinant size cap exceeded.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use quatrix::det::{cdet_capped, hermitian_det_capped, rdet_capped};
use quatrix::inverse::{drazin_with, inverse_capped, mp_inverse_with, DrazinRoute, MpRoute};
use quatrix::solve::{solve_left, solve_right, solve_two_sided, SolveReport, SolveRoute};
use quatrix::verify::{all_hold, verify_drazin, verify_penrose, verify_wdrazin, AxiomReport};
use quatrix::wdrazin::{wdrazin, wdrazin_with, DetForm, WdRoute};
use quatrix::{Error, QMatrix};

#[derive(Parser)]
#[command(
    name = "quatrix",
    version,
    about = "Exact quaternion matrix inverses and restricted-equation solvers",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a JSON document instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Skip the axiom verification pass.
    #[arg(long, global = true)]
    no_verify: bool,

    /// Render terminating rationals as decimals (19/2 prints as 9.5).
    #[arg(long, global = true)]
    decimal: bool,

    /// Size cap for the factorial determinant engine.
    #[arg(long, global = true, default_value_t = 8)]
    max_n: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyKind {
    Mp,
    Drazin,
    Wdrazin,
}

#[derive(Subcommand)]
enum Command {
    /// Exact inverse of a square matrix.
    Inverse {
        matrix: String,
        /// Route: left (A*A expansion) or right (AA* expansion).
        #[arg(long, default_value = "left")]
        route: String,
    },
    /// Moore-Penrose inverse.
    Mp {
        matrix: String,
        /// Route: left or right.
        #[arg(long, default_value = "left")]
        route: String,
    },
    /// Drazin inverse of a square matrix.
    Drazin {
        matrix: String,
        /// Route: auto, cdet, rdet, hermitian-cdet, hermitian-rdet, composition.
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// W-weighted Drazin inverse of A with respect to W.
    Wdrazin {
        a: String,
        w: String,
        /// Route: auto, u-det, v-det, factored-left, factored-right,
        /// hermitian-aw, hermitian-wa, cline.
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// Solve WAWX = D.
    SolveLeft {
        a: String,
        w: String,
        d: String,
        /// Route: auto, factored, drazin, hermitian, oracle.
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// Solve XWAW = D.
    SolveRight {
        d: String,
        a: String,
        w: String,
        /// Route: auto, factored, drazin, hermitian, oracle.
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// Solve W1·A·W1·X·W2·B·W2 = D.
    SolveTwoSided {
        a: String,
        w1: String,
        d: String,
        b: String,
        w2: String,
        /// Route: auto, drazin, hermitian, hermitian-alt, oracle.
        #[arg(long, default_value = "auto")]
        route: String,
    },
    /// Check the defining axioms of a candidate inverse.
    Verify {
        kind: VerifyKind,
        /// Input files: A X (mp, drazin) or A W X (wdrazin).
        files: Vec<String>,
    },
    /// Determinant of a Hermitian matrix (or a single row/column determinant).
    Det {
        matrix: String,
        /// Row determinant anchored at this 1-based row.
        #[arg(long, conflicts_with = "col_det")]
        row_det: Option<usize>,
        /// Column determinant anchored at this 1-based column.
        #[arg(long)]
        col_det: Option<usize>,
    },
}

fn load(path: &str) -> Result<QMatrix, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read `{path}`: {e}"))?;
    QMatrix::from_text(&text).map_err(|e| format!("{path}: {e}"))
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::SizeCap { .. } => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn print_reports(reports: &[AxiomReport], decimal: bool) {
    for r in reports {
        if r.holds {
            eprintln!("verify {}: ok", r.axiom);
        } else {
            eprintln!("verify {}: FAILED, residual:", r.axiom);
            eprint!("{}", r.residual.to_text(decimal));
        }
    }
}

fn reports_json(reports: &[AxiomReport]) -> serde_json::Value {
    json!(reports
        .iter()
        .map(|r| json!({
            "axiom": r.axiom.to_string(),
            "holds": r.holds,
            "residual": r.residual.to_nested(),
        }))
        .collect::<Vec<_>>())
}

struct Output {
    matrix: QMatrix,
    route: String,
    denominator: Option<String>,
    reports: Vec<AxiomReport>,
}

fn emit(cli: &Cli, out: Output) -> ExitCode {
    if cli.json {
        let doc = json!({
            "matrix": out.matrix.to_nested(),
            "rows": out.matrix.rows(),
            "cols": out.matrix.cols(),
            "route": out.route,
            "denominator": out.denominator,
            "axioms": reports_json(&out.reports),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print!("{}", out.matrix.to_text(cli.decimal));
        print_reports(&out.reports, cli.decimal);
    }
    if all_hold(&out.reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn emit_solve(cli: &Cli, rep: &SolveReport) -> ExitCode {
    if cli.json {
        let doc = json!({
            "matrix": rep.x.to_nested(),
            "rows": rep.x.rows(),
            "cols": rep.x.cols(),
            "route": format!("{:?}", rep.route),
            "consistent": rep.consistent,
            "residual_zero": rep.residual_zero,
            "residual": rep.residual.to_nested(),
            "axioms": reports_json(&rep.verification),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print!("{}", rep.x.to_text(cli.decimal));
        print_reports(&rep.verification, cli.decimal);
        if !rep.consistent {
            eprintln!("equation is inconsistent; residual of the returned X:");
            eprint!("{}", rep.residual.to_text(cli.decimal));
        }
    }
    if rep.consistent && all_hold(&rep.verification) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

fn wd_route(name: &str) -> Option<Option<WdRoute>> {
    // inner None means auto
    Some(match name {
        "auto" => None,
        "u-det" => Some(WdRoute::UDet(DetForm::Cdet, DetForm::Cdet)),
        "v-det" => Some(WdRoute::VDet(DetForm::Cdet, DetForm::Cdet)),
        "factored-left" => Some(WdRoute::FactoredLeft),
        "factored-right" => Some(WdRoute::FactoredRight),
        "hermitian-aw" => Some(WdRoute::HermitianAw),
        "hermitian-wa" => Some(WdRoute::HermitianWa),
        "cline" => Some(WdRoute::Cline),
        _ => return None,
    })
}

fn run(cli: &Cli) -> Result<ExitCode, (String, ExitCode)> {
    let usage = |msg: String| (msg, ExitCode::from(1));
    let lib = |err: Error| {
        let code = exit_code_for(&err);
        (err.to_string(), code)
    };
    let cap = cli.max_n;
    match &cli.command {
        Command::Inverse { matrix, route } | Command::Mp { matrix, route } => {
            let m = load(matrix).map_err(usage)?;
            let mp_route = match route.as_str() {
                "left" => MpRoute::Left,
                "right" => MpRoute::Right,
                other => return Err(usage(format!("unknown route `{other}`"))),
            };
            let exact = matches!(cli.command, Command::Inverse { .. });
            let mut out = if exact {
                Output {
                    matrix: inverse_capped(&m, cap).map_err(lib)?,
                    route: format!("{mp_route:?}"),
                    denominator: None,
                    reports: Vec::new(),
                }
            } else {
                let r = mp_inverse_with(&m, mp_route, cap).map_err(lib)?;
                Output {
                    matrix: r.matrix,
                    route: format!("{:?}", r.route),
                    denominator: Some(r.denominator.to_string()),
                    reports: Vec::new(),
                }
            };
            if !cli.no_verify {
                out.reports = verify_penrose(&m, &out.matrix).map_err(lib)?;
            }
            Ok(emit(cli, out))
        }
        Command::Drazin { matrix, route } => {
            let m = load(matrix).map_err(usage)?;
            let result = match route.as_str() {
                "auto" => quatrix::inverse::drazin(&m).map_err(lib)?,
                "cdet" => drazin_with(&m, DrazinRoute::Cdet, cap).map_err(lib)?,
                "rdet" => drazin_with(&m, DrazinRoute::Rdet, cap).map_err(lib)?,
                "hermitian-cdet" => {
                    drazin_with(&m, DrazinRoute::HermitianCdet, cap).map_err(lib)?
                }
                "hermitian-rdet" => {
                    drazin_with(&m, DrazinRoute::HermitianRdet, cap).map_err(lib)?
                }
                "composition" => drazin_with(&m, DrazinRoute::Composition, cap).map_err(lib)?,
                other => return Err(usage(format!("unknown route `{other}`"))),
            };
            let mut out = Output {
                matrix: result.matrix,
                route: format!("{:?}", result.route),
                denominator: Some(result.denominator.to_string()),
                reports: Vec::new(),
            };
            if !cli.no_verify {
                out.reports = verify_drazin(&m, &out.matrix).map_err(lib)?;
            }
            Ok(emit(cli, out))
        }
        Command::Wdrazin { a, w, route } => {
            let a = load(a).map_err(usage)?;
            let w = load(w).map_err(usage)?;
            let parsed =
                wd_route(route).ok_or_else(|| usage(format!("unknown route `{route}`")))?;
            let result = match parsed {
                None => wdrazin(&a, &w).map_err(lib)?,
                Some(r) => wdrazin_with(&a, &w, r, cap).map_err(lib)?,
            };
            let mut out = Output {
                matrix: result.matrix,
                route: format!("{:?}", result.route),
                denominator: None,
                reports: Vec::new(),
            };
            if !cli.no_verify {
                out.reports = verify_wdrazin(&a, &w, &out.matrix).map_err(lib)?;
            }
            Ok(emit(cli, out))
        }
        Command::SolveLeft { a, w, d, route } => {
            let a = load(a).map_err(usage)?;
            let w = load(w).map_err(usage)?;
            let d = load(d).map_err(usage)?;
            let route =
                SolveRoute::parse(route).ok_or_else(|| usage(format!("unknown route `{route}`")))?;
            let rep = solve_left(&a, &w, &d, route, cap, !cli.no_verify).map_err(lib)?;
            Ok(emit_solve(cli, &rep))
        }
        Command::SolveRight { d, a, w, route } => {
            let a = load(a).map_err(usage)?;
            let w = load(w).map_err(usage)?;
            let d = load(d).map_err(usage)?;
            let route =
                SolveRoute::parse(route).ok_or_else(|| usage(format!("unknown route `{route}`")))?;
            let rep = solve_right(&d, &a, &w, route, cap, !cli.no_verify).map_err(lib)?;
            Ok(emit_solve(cli, &rep))
        }
        Command::SolveTwoSided { a, w1, d, b, w2, route } => {
            let a = load(a).map_err(usage)?;
            let w1 = load(w1).map_err(usage)?;
            let d = load(d).map_err(usage)?;
            let b = load(b).map_err(usage)?;
            let w2 = load(w2).map_err(usage)?;
            let route =
                SolveRoute::parse(route).ok_or_else(|| usage(format!("unknown route `{route}`")))?;
            let rep =
                solve_two_sided(&a, &w1, &d, &b, &w2, route, cap, !cli.no_verify).map_err(lib)?;
            Ok(emit_solve(cli, &rep))
        }
        Command::Verify { kind, files } => {
            let need = match kind {
                VerifyKind::Wdrazin => 3,
                _ => 2,
            };
            if files.len() != need {
                return Err(usage(format!("verify needs {need} matrix files")));
            }
            let mats: Vec<QMatrix> = files
                .iter()
                .map(|f| load(f))
                .collect::<Result<_, _>>()
                .map_err(usage)?;
            let reports = match kind {
                VerifyKind::Mp => verify_penrose(&mats[0], &mats[1]).map_err(lib)?,
                VerifyKind::Drazin => verify_drazin(&mats[0], &mats[1]).map_err(lib)?,
                VerifyKind::Wdrazin => verify_wdrazin(&mats[0], &mats[1], &mats[2]).map_err(lib)?,
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "axioms": reports_json(&reports),
                        "all_hold": all_hold(&reports),
                    }))
                    .unwrap()
                );
            } else {
                for r in &reports {
                    println!("{}: {}", r.axiom, if r.holds { "ok" } else { "FAILED" });
                }
            }
            Ok(if all_hold(&reports) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Det { matrix, row_det, col_det } => {
            let m = load(matrix).map_err(usage)?;
            let value = match (row_det, col_det) {
                (Some(i), None) => {
                    if *i == 0 || *i > m.rows() {
                        return Err(usage(format!("row index {i} out of range")));
                    }
                    rdet_capped(&m, i - 1, cap).map_err(lib)?
                }
                (None, Some(j)) => {
                    if *j == 0 || *j > m.cols() {
                        return Err(usage(format!("column index {j} out of range")));
                    }
                    cdet_capped(&m, j - 1, cap).map_err(lib)?
                }
                _ => {
                    let d = hermitian_det_capped(&m, cap).map_err(lib)?;
                    quatrix::Quaternion::from_rational(d)
                }
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({ "value": value.to_string() })).unwrap()
                );
            } else {
                println!("{}", value.to_text(cli.decimal));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}
