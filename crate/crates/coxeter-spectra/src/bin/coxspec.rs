//! Thin command-line front end over the library. Exit codes: 0 on success,
//! 1 for semantically negative results (unequal spectra, failed self-tests),
//! 2 for usage errors.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use coxeter_spectra::error::Result;
use coxeter_spectra::matrix::QMatrix;
use coxeter_spectra::realize::{conjugacy_classes, enumerate_group_capped, regular_representation};
use coxeter_spectra::rep::{alternating_rep, trivial_rep, Representation};
use coxeter_spectra::rewrite::to_echelon;
use coxeter_spectra::spectra::{
    bivariate_slice, compare_spectra, curve_identity_check, decompose_involution_pair,
    dihedral_report, joint_spectrum, DihedralSpectrumReport, MatrixPairFile, LINE_LABELS,
};
use coxeter_spectra::system::{CoxeterSystem, Word};
use coxeter_spectra::{affine, selftest};

#[derive(Parser)]
#[command(name = "coxspec", version, about = "Coxeter word rewriting and determinantal joint spectra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a word to echelon form.
    Normalize(NormalizeArgs),
    /// Enumerate a group; optionally list its conjugacy classes.
    Group(GroupArgs),
    /// Joint spectrum of a representation.
    Spectrum(SpectrumArgs),
    /// Compare the joint spectra of two representation files.
    Compare(CompareArgs),
    /// Line/ellipse report for an exact involution pair.
    DihedralReport(DihedralArgs),
    /// Implicit-curve identities on seeded random self-adjoint pairs.
    CurveCheck(CurveArgs),
    /// Decompose a floating involution pair into blocks.
    Decompose(DecomposeArgs),
    /// Arithmetic and conjugacy-class labels in the affine group C̃2.
    Ctilde2(CtildeArgs),
    /// Run the acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct NormalizeArgs {
    /// System name such as A3, B2, D4.
    #[arg(long)]
    system: String,
    /// Comma-separated letters, e.g. 2,1,2,1.
    #[arg(long)]
    word: String,
    /// Include the full step trace in the output.
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(long)]
    system: String,
    /// Emit conjugacy classes with representative words.
    #[arg(long)]
    classes: bool,
    /// Enumeration cap.
    #[arg(long, default_value_t = 10_000)]
    cap: usize,
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    system: String,
    /// One of `regular`, `trivial`, `sign`, or a path to a representation
    /// JSON file prefixed with `@`.
    #[arg(long, default_value = "regular")]
    rep: String,
    /// Restrict to the (i, j) coordinate slice, e.g. `1,2`.
    #[arg(long)]
    slice: Option<String>,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    out: OutFormat,
    #[arg(long, default_value_t = 10_000)]
    cap: usize,
}

#[derive(Args)]
struct CompareArgs {
    #[arg(long)]
    rep1: PathBuf,
    #[arg(long)]
    rep2: PathBuf,
}

#[derive(Args)]
struct DihedralArgs {
    /// JSON file with rational matrices {"a1": [["0","1"],…], "a2": […]}.
    #[arg(long)]
    matrices: PathBuf,
    #[arg(long, value_enum, default_value_t = OutFormat::Json)]
    out: OutFormat,
}

#[derive(Args)]
struct CurveArgs {
    /// Matrix dimension of the random pairs.
    #[arg(long, default_value_t = 4)]
    dim: usize,
    /// Number of admissible pairs to test.
    #[arg(long, default_value_t = 5)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct DecomposeArgs {
    #[arg(long)]
    matrices: PathBuf,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Args)]
struct CtildeArgs {
    /// Comma-separated letters over b1,b2,b3,r1,r2,r1^-1,r2^-1.
    #[arg(long)]
    word: String,
    /// Also compute the conjugacy-class label and its certificate.
    #[arg(long)]
    label: bool,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run a single criterion (1-10).
    #[arg(long)]
    only: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Normalize(args) => {
            let sys: CoxeterSystem = args.system.parse()?;
            let word = Word::parse(&args.word)?;
            let (form, trace) = to_echelon(&word, &sys)?;
            let mut out = serde_json::json!({
                "system": sys,
                "input": trace.start,
                "echelon": trace.end,
                "deltas": form.labels(),
            });
            if args.trace {
                out["steps"] = serde_json::to_value(&trace.steps).expect("serializable steps");
                out["conjugator"] = serde_json::to_value(trace.conjugator_word(&sys)?)
                    .expect("serializable word");
            }
            println!("{}", serde_json::to_string_pretty(&out).expect("valid json"));
            Ok(0)
        }
        Command::Group(args) => {
            let sys: CoxeterSystem = args.system.parse()?;
            let table = enumerate_group_capped(&sys, args.cap)?;
            let mut out = serde_json::json!({
                "system": sys,
                "order": table.order(),
            });
            if args.classes {
                let classes = conjugacy_classes(&table);
                let entries: Vec<serde_json::Value> = classes
                    .iter()
                    .map(|class| {
                        serde_json::json!({
                            "size": class.len(),
                            "representative_word": table.word_for(class[0]),
                        })
                    })
                    .collect();
                out["classes"] = serde_json::Value::Array(entries);
            }
            println!("{}", serde_json::to_string_pretty(&out).expect("valid json"));
            Ok(0)
        }
        Command::Spectrum(args) => {
            let sys: CoxeterSystem = args.system.parse()?;
            let rep = load_rep(&args.rep, &sys, args.cap)?;
            let js = joint_spectrum(&rep)?;
            match (&args.slice, args.out) {
                (None, OutFormat::Json) => {
                    println!("{}", serde_json::to_string_pretty(&js.poly).expect("valid json"));
                }
                (None, OutFormat::Csv) => {
                    println!("exponents,coefficient");
                    for (exp, coef) in js.poly.terms_desc() {
                        let exps: Vec<String> = exp.0.iter().map(|e| e.to_string()).collect();
                        println!("{},{}", exps.join(" "), coxeter_spectra::matrix::rat_to_string(coef));
                    }
                }
                (Some(slice), out) => {
                    let (i, j) = parse_slice(slice)?;
                    let poly = bivariate_slice(&js, i, j)?;
                    if out == OutFormat::Json {
                        println!("{}", serde_json::to_string_pretty(&poly).expect("valid json"));
                    } else {
                        // Point cloud of the real slice components.
                        let mats = rep.exact_matrices()?;
                        let report = dihedral_report(&mats[i - 1], &mats[j - 1])?;
                        print_point_cloud(&report);
                    }
                }
            }
            Ok(0)
        }
        Command::Compare(args) => {
            let r1: Representation = read_json(&args.rep1)?;
            let r2: Representation = read_json(&args.rep2)?;
            let equal = compare_spectra(&r1, &r2)?;
            println!("{}", serde_json::json!({ "equal": equal }));
            Ok(if equal { 0 } else { 1 })
        }
        Command::DihedralReport(args) => {
            let pair: MatrixPairFile = read_json(&args.matrices)?;
            let a1 = QMatrix::from_strings(&pair.a1)?;
            let a2 = QMatrix::from_strings(&pair.a2)?;
            let report = dihedral_report(&a1, &a2)?;
            match args.out {
                OutFormat::Json => {
                    println!("{}", serde_json::to_string_pretty(&report).expect("valid json"))
                }
                OutFormat::Csv => print_point_cloud(&report),
            }
            Ok(0)
        }
        Command::CurveCheck(args) => {
            use coxeter_spectra::numeric::{random_symmetric, symmetric_eigen};
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
            let mut reports = Vec::new();
            let mut all_ok = true;
            let mut attempts = 0;
            while reports.len() < args.count && attempts < 200 * args.count.max(1) {
                attempts += 1;
                let a1 = random_symmetric(args.dim, &mut rng);
                let a2 = random_symmetric(args.dim, &mut rng);
                let eig = symmetric_eigen(&a1);
                let Some(lambda) = pick_lambda(&eig.values) else { continue };
                match curve_identity_check(&a1, &a2, lambda) {
                    Ok(report) => {
                        all_ok &= report.within(args.tol);
                        reports.push(serde_json::json!({
                            "dim": args.dim,
                            "lambda": report.lambda,
                            "x1_prime": report.x1_prime,
                            "x1_double_prime": report.x1_double_prime,
                            "first_order_residual": report.identity_first_order,
                            "second_order_residual": report.identity_second_order,
                            "pass": report.within(args.tol),
                        }));
                    }
                    Err(coxeter_spectra::Error::HypothesisNotMet(_)) => continue,
                    Err(e) => return Err(e),
                }
            }
            println!("{}", serde_json::to_string_pretty(&reports).expect("valid json"));
            Ok(if all_ok && reports.len() == args.count { 0 } else { 1 })
        }
        Command::Decompose(args) => {
            let pair: MatrixPairFile = read_json(&args.matrices)?;
            let a1 = QMatrix::from_strings(&pair.a1)?.to_f64();
            let a2 = QMatrix::from_strings(&pair.a2)?.to_f64();
            let decomp = decompose_involution_pair(&a1, &a2, args.tol)?;
            let out = serde_json::json!({
                "common_eigenvectors": decomp.common.iter()
                    .map(|(s1, s2, _)| serde_json::json!({"a1_sign": s1, "a2_sign": s2}))
                    .collect::<Vec<_>>(),
                "blocks": decomp.blocks.iter()
                    .map(|b| serde_json::json!({"theta": b.theta, "alpha": b.alpha}))
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("valid json"));
            Ok(0)
        }
        Command::Ctilde2(args) => {
            let x = affine::element_from_word(&args.word)?;
            let mut out = serde_json::json!({
                "coset": x.coset.label(),
                "m1": x.m1,
                "m2": x.m2,
            });
            if args.label {
                let label = affine::class_label(&x)?;
                out["class"] = serde_json::json!({
                    "j": label.j,
                    "m1": label.m1,
                    "m2": label.m2,
                });
                out["conjugator"] = serde_json::json!({
                    "coset": label.conjugator.coset.label(),
                    "m1": label.conjugator.m1,
                    "m2": label.conjugator.m2,
                });
            }
            println!("{}", serde_json::to_string_pretty(&out).expect("valid json"));
            Ok(0)
        }
        Command::Selftest(args) => {
            let reports = match args.only {
                Some(k) => vec![selftest::run_criterion(k, args.seed)],
                None => selftest::run_all(args.seed),
            };
            let mut ok = true;
            for report in &reports {
                println!("{}", report.line());
                ok &= report.passed;
            }
            Ok(if ok { 0 } else { 1 })
        }
    }
}

fn pick_lambda(values: &[f64]) -> Option<f64> {
    let mut best: Option<(f64, f64)> = None;
    for (k, &v) in values.iter().enumerate() {
        let gap = values
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, w)| (w - v).abs())
            .fold(f64::INFINITY, f64::min);
        if v.abs() > 0.35 && gap > 0.1
            && best.is_none_or(|(_, b)| v.abs() > b) {
                best = Some((v, v.abs()));
            }
    }
    best.map(|(v, _)| v)
}

fn load_rep(spec: &str, sys: &CoxeterSystem, cap: usize) -> Result<Representation> {
    match spec {
        "regular" => {
            let table = enumerate_group_capped(sys, cap)?;
            Ok(regular_representation(&table))
        }
        "trivial" => trivial_rep(sys),
        "sign" => alternating_rep(sys),
        path if path.starts_with('@') => read_json(&PathBuf::from(&path[1..])),
        other => Err(coxeter_spectra::Error::Validation(format!(
            "unknown representation '{other}' (use regular, trivial, sign, or @file.json)"
        ))),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| coxeter_spectra::Error::Validation(format!("cannot read {path:?}: {e}")))?;
    serde_json::from_str(&text)
        .map_err(|e| coxeter_spectra::Error::Validation(format!("cannot parse {path:?}: {e}")))
}

fn parse_slice(s: &str) -> Result<(usize, usize)> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(coxeter_spectra::Error::Validation("slice must be i,j".into()));
    }
    let parse = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| coxeter_spectra::Error::Validation(format!("bad slice index '{t}'")))
    };
    Ok((parse(parts[0])?, parse(parts[1])?))
}

/// Sampled real points of every component in a report, as CSV.
fn print_point_cloud(report: &DihedralSpectrumReport) {
    println!("component,t,x,y");
    let steps = 64usize;
    for (idx, &mult) in report.lines.iter().enumerate() {
        if mult == 0 {
            continue;
        }
        for s in 0..=steps {
            let t = -1.5 + 3.0 * s as f64 / steps as f64;
            let (x, y) = match idx {
                0 => (t, 1.0 - t),
                1 => (t, -1.0 - t),
                2 => (t, t - 1.0),
                _ => (t, t + 1.0),
            };
            println!("{},{t:.6},{x:.6},{y:.6}", LINE_LABELS[idx]);
        }
    }
    for (alpha, _) in &report.ellipses {
        let a = alpha.as_f64();
        if a.abs() >= 2.0 {
            continue;
        }
        let su = (1.0f64 + a / 2.0).sqrt();
        let sv = (1.0f64 - a / 2.0).sqrt();
        for s in 0..steps {
            let t = std::f64::consts::TAU * s as f64 / steps as f64;
            let u = t.cos() / su;
            let v = t.sin() / sv;
            let x = (u + v) / std::f64::consts::SQRT_2;
            let y = (u - v) / std::f64::consts::SQRT_2;
            println!("ellipse alpha={a:.6},{t:.6},{x:.6},{y:.6}");
        }
    }
}
