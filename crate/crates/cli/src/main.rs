//! Command-line surface: parse algebra files, dispatch the checkers, and
//! emit human-readable or JSON certificates.
//!
//! Exit codes: 0 for a passing verdict (or a successful report), 1 for a
//! failing verdict, 2 for input errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use uefact::classify::classify_report;
use uefact::grading::Sign;
use uefact::lie::LieAlgebra;
use uefact::pmfactor::FactorizationScheme;
use uefact::subspace::Subspace;
use uefact::textfmt::{parse_algebra, parse_combination_of, parse_expression};
use uefact::uea::pbw_normal_form;
use uefact::{
    check_ak_bk, pair_search, span_certificate, verify_pm_pair, verify_regular_pair, verify_rep,
    Certificate, Grading, QMatrix, Scalar, XyxSolver,
};

#[derive(Parser)]
#[command(
    name = "uefact",
    about = "Exact factorization checks in universal enveloping algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Filtration degree bound for the certificates.
    #[arg(long, default_value_t = 4)]
    degree: u32,
    /// Seed echoed into certificates and used by any sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of the key: value text block.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify antisymmetry and the Jacobi identity.
    Check {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the PBW normal form of an expression.
    Nf {
        file: String,
        /// Expression such as "f*e^2 - 1/3*h".
        #[arg(long)]
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Rewrite an expression into the x-y-x shape for a generating pair.
    Factorize {
        file: String,
        /// The pair, e.g. "e,f" (linear combinations allowed).
        #[arg(long)]
        pair: String,
        #[arg(long)]
        expr: String,
        /// linear, recursive, or both (both also cross-checks agreement).
        #[arg(long, default_value = "both")]
        method: String,
        #[command(flatten)]
        common: Common,
    },
    /// Classify a three-dimensional algebra.
    Classify {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check an ordered factorization scheme at the degree bound.
    Span {
        file: String,
        /// Comma-separated factors: gplus | gminus | gzero | spans like "e|h".
        #[arg(long)]
        scheme: String,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a plus-minus pair, or search for one with --search.
    Pair {
        file: String,
        #[arg(long)]
        pair: Option<String>,
        /// Bounded seeded search over one-dimensional pairs.
        #[arg(long)]
        search: bool,
        #[arg(long, default_value_t = 25)]
        attempts: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Verify a regular plus-minus pair with its involution.
    Regular {
        file: String,
        #[arg(long)]
        pair: String,
        /// Involution as images, e.g. "e->f, f->e, h->-h".
        #[arg(long)]
        sigma: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the ladder congruence checks A_k, B_k, C_k for a pair.
    Ladder {
        file: String,
        #[arg(long)]
        pair: String,
        /// Highest k checked.
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run the representation suite on a bundled irreducible module.
    Rep {
        /// Highest weight of the bundled module.
        #[arg(long, default_value_t = 4)]
        irrep: u32,
        #[command(flatten)]
        common: Common,
    },
}

struct InputError(String);

type CmdResult = Result<(bool, String), InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok((true, out)) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Ok((false, out)) => {
            print!("{}", out);
            ExitCode::from(1)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Command) -> CmdResult {
    match cmd {
        Command::Check { file, common } => {
            let (l, _) = load_raw(&file)?;
            let cert = l.check_axioms().with_seed(common.seed);
            Ok((cert.passed(), emit(&cert, common.json)))
        }
        Command::Nf { file, expr, common } => {
            let (l, _) = load(&file)?;
            let p = parse_expression(&expr, &l).map_err(|e| InputError(e.to_string()))?;
            let nf = pbw_normal_form(&l, &p).map_err(|e| InputError(e.to_string()))?;
            let text = nf.format_with(&l);
            if common.json {
                Ok((
                    true,
                    format!(
                        "{}\n",
                        serde_json::json!({"normal_form": text, "degree": nf.total_degree()})
                    ),
                ))
            } else {
                Ok((true, format!("{}\n", text)))
            }
        }
        Command::Factorize {
            file,
            pair,
            expr,
            method,
            common,
        } => {
            let (l, _) = load(&file)?;
            let (x, y) = parse_pair(&pair, &l)?;
            let p = parse_expression(&expr, &l).map_err(|e| InputError(e.to_string()))?;
            let bound = 2 * p.total_degree().max(1);
            let mut solver =
                XyxSolver::new(&l, &x, &y, bound).map_err(|e| InputError(e.to_string()))?;
            let result = match method.as_str() {
                "linear" => solver.rewrite_linear(&p),
                "recursive" => solver.rewrite_recursive(&p),
                "both" => {
                    let lin = solver.rewrite_linear(&p);
                    let rec = solver.rewrite_recursive(&p);
                    match (lin, rec) {
                        (Ok(a), Ok(b)) if a == b => Ok(a),
                        (Ok(_), Ok(_)) => {
                            return Err(InputError("rewrite methods disagree".into()))
                        }
                        (Err(e), _) | (_, Err(e)) => Err(e),
                    }
                }
                other => return Err(InputError(format!("unknown method '{}'", other))),
            }
            .map_err(|e| InputError(e.to_string()))?;
            if common.json {
                Ok((
                    true,
                    format!(
                        "{}\n",
                        serde_json::json!({
                            "xyx_form": result.to_string(),
                            "pair": pair,
                            "degree": result.total_degree(),
                        })
                    ),
                ))
            } else {
                Ok((true, format!("{}\n", result)))
            }
        }
        Command::Classify { file, common } => {
            let (l, _) = load(&file)?;
            let report = classify_report(&l).map_err(|e| InputError(e.to_string()))?;
            if common.json {
                Ok((
                    true,
                    format!("{}\n", serde_json::to_string(&report).expect("serializable")),
                ))
            } else {
                let mut out = String::new();
                out.push_str(&format!("jacobson_case: {}\n", report.jacobson_case));
                out.push_str(&format!("has_pair: {}\n", report.has_pair));
                if let Some(w) = &report.witness {
                    out.push_str(&format!("witness: {}\n", w.join(", ")));
                }
                if let Some(c) = &report.pf_class {
                    out.push_str(&format!("pf_class: {}\n", c));
                }
                if let Some(r) = &report.r_class {
                    out.push_str(&format!("r_class: {}\n", r));
                }
                out.push_str(&format!("regular_class: {}\n", report.regular_class));
                if !report.anomaly_flags.is_empty() {
                    out.push_str(&format!(
                        "anomaly_flags: {}\n",
                        report.anomaly_flags.join(", ")
                    ));
                }
                Ok((true, out))
            }
        }
        Command::Span {
            file,
            scheme,
            common,
        } => {
            let (l, grading) = load(&file)?;
            let scheme = parse_scheme(&scheme, &l, grading.as_ref())?;
            let cert = span_certificate(&l, &scheme, common.degree)
                .map_err(|e| InputError(e.to_string()))?
                .with_seed(common.seed);
            Ok((cert.passed(), emit(&cert, common.json)))
        }
        Command::Pair {
            file,
            pair,
            search,
            attempts,
            common,
        } => {
            let (l, _) = load(&file)?;
            let cert = if search {
                let (_, cert) = pair_search(&l, common.degree, common.seed, attempts)
                    .map_err(|e| InputError(e.to_string()))?;
                cert
            } else {
                let spec = pair.ok_or(InputError("give --pair or --search".into()))?;
                let (x, y) = parse_pair(&spec, &l)?;
                verify_pm_pair(
                    &l,
                    &Subspace::from_vectors(l.dim(), vec![x]),
                    &Subspace::from_vectors(l.dim(), vec![y]),
                    common.degree,
                )
                .map_err(|e| InputError(e.to_string()))?
                .with_seed(common.seed)
            };
            Ok((cert.passed(), emit(&cert, common.json)))
        }
        Command::Regular {
            file,
            pair,
            sigma,
            common,
        } => {
            let (l, _) = load(&file)?;
            let (x, y) = parse_pair(&pair, &l)?;
            let sigma = parse_sigma(&sigma, &l)?;
            let cert = verify_regular_pair(
                &l,
                &Subspace::from_vectors(l.dim(), vec![x]),
                &Subspace::from_vectors(l.dim(), vec![y]),
                &sigma,
                common.degree,
            )
            .map_err(|e| InputError(e.to_string()))?
            .with_seed(common.seed);
            Ok((cert.passed(), emit(&cert, common.json)))
        }
        Command::Ladder {
            file,
            pair,
            kmax,
            common,
        } => {
            let (l, _) = load(&file)?;
            let (x, y) = parse_pair(&pair, &l)?;
            let cert = check_ak_bk(&l, &x, &y, kmax)
                .map_err(|e| InputError(e.to_string()))?
                .with_seed(common.seed);
            Ok((cert.passed(), emit(&cert, common.json)))
        }
        Command::Rep { irrep, common } => {
            let cert = rep_suite(irrep, common.seed);
            Ok((cert.passed(), emit(&cert, common.json)))
        }
    }
}

/// Load without insisting on the axioms (for `check` itself).
fn load_raw(file: &str) -> Result<(LieAlgebra, Option<Grading>), InputError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| InputError(format!("cannot read {}: {}", file, e)))?;
    parse_algebra(&text).map_err(|e| InputError(format!("{}: {}", file, e)))
}

fn load(file: &str) -> Result<(LieAlgebra, Option<Grading>), InputError> {
    let (l, g) = load_raw(file)?;
    let axioms = l.check_axioms();
    if !axioms.passed() {
        return Err(InputError(format!(
            "{}: not a Lie algebra ({})",
            file,
            axioms.witnesses.join("; ")
        )));
    }
    if let Some(g) = &g {
        if !g.respects(&l) {
            return Err(InputError(format!(
                "{}: grading does not respect the bracket",
                file
            )));
        }
    }
    Ok((l, g))
}

fn emit(cert: &Certificate, json: bool) -> String {
    if json {
        format!("{}\n", cert.to_json())
    } else {
        cert.to_text()
    }
}

fn parse_pair(spec: &str, l: &LieAlgebra) -> Result<(Vec<Scalar>, Vec<Scalar>), InputError> {
    let (a, b) = spec
        .split_once(',')
        .ok_or(InputError("pair must look like \"x,y\"".into()))?;
    let names = l.basis_names().to_vec();
    let x = parse_combination_of(a.trim(), &names, 1).map_err(|e| InputError(e.to_string()))?;
    let y = parse_combination_of(b.trim(), &names, 1).map_err(|e| InputError(e.to_string()))?;
    Ok((x, y))
}

fn parse_sigma(spec: &str, l: &LieAlgebra) -> Result<QMatrix, InputError> {
    let names = l.basis_names().to_vec();
    let dim = l.dim();
    let mut columns: Vec<Option<Vec<Scalar>>> = vec![None; dim];
    for part in spec.split(',') {
        let (sym, image) = part
            .trim()
            .split_once("->")
            .ok_or(InputError("sigma entries look like \"e->f\"".into()))?;
        let i = l
            .basis_index(sym.trim())
            .ok_or(InputError(format!("unknown symbol '{}'", sym.trim())))?;
        if columns[i].is_some() {
            return Err(InputError(format!("duplicate image for '{}'", sym.trim())));
        }
        let v =
            parse_combination_of(image.trim(), &names, 1).map_err(|e| InputError(e.to_string()))?;
        columns[i] = Some(v);
    }
    let mut m = QMatrix::zero(dim, dim);
    for (j, col) in columns.into_iter().enumerate() {
        let col = col.ok_or(InputError(format!(
            "sigma misses an image for '{}'",
            l.basis_names()[j]
        )))?;
        for i in 0..dim {
            m[(i, j)] = col[i].clone();
        }
    }
    Ok(m)
}

fn parse_scheme(
    spec: &str,
    l: &LieAlgebra,
    grading: Option<&Grading>,
) -> Result<FactorizationScheme, InputError> {
    let names = l.basis_names().to_vec();
    let mut factors = Vec::new();
    let mut labels = Vec::new();
    for token in spec.split(',') {
        let token = token.trim();
        let factor = match token {
            "gplus" | "gminus" | "gzero" => {
                let g = grading.ok_or(InputError(format!(
                    "factor '{}' needs a graded algebra file",
                    token
                )))?;
                let sign = match token {
                    "gplus" => Sign::Positive,
                    "gminus" => Sign::Negative,
                    _ => Sign::Zero,
                };
                g.piece_by_sign(sign)
            }
            _ => {
                let mut vectors = Vec::new();
                for part in token.split('|') {
                    let v = parse_combination_of(part.trim(), &names, 1)
                        .map_err(|e| InputError(e.to_string()))?;
                    vectors.push(v);
                }
                Subspace::from_vectors(l.dim(), vectors)
            }
        };
        factors.push(factor);
        labels.push(token.to_string());
    }
    if factors.is_empty() {
        return Err(InputError("scheme needs at least one factor".into()));
    }
    Ok(FactorizationScheme::new(factors, labels))
}

/// Bundled representation suite: bracket compatibility, nilpotence of the
/// shift operators, submodule generation from a seeded vector, and the
/// exact spectrum of the diagonal operator.
fn rep_suite(n: u32, seed: u64) -> Certificate {
    use std::time::Instant;
    let started = Instant::now();
    let r = uefact::sl2_irrep(n);
    let l = r.algebra().clone();
    let mut witnesses = Vec::new();
    let compat = verify_rep(&r);
    if !compat.passed() {
        return compat;
    }
    witnesses.push(format!("bracket compatibility on V({})", n));
    if !uefact::is_nilpotent(r.matrix(0)) || !uefact::is_nilpotent(r.matrix(2)) {
        return Certificate::fail()
            .with_witness("shift operators are not nilpotent")
            .timed(started);
    }
    witnesses.push("e and f act nilpotently".into());
    let mut rng = uefact::sample::rng(seed);
    let v = uefact::sample::random_nonzero_vector(&mut rng, r.size());
    let span = match uefact::generated_submodule(
        &r,
        &v,
        &l.basis_vector(0),
        &l.basis_vector(2),
        2 * n + 2,
    ) {
        Ok(s) => s,
        Err(e) => {
            return Certificate::fail()
                .with_witness(format!("submodule generation failed: {}", e))
                .timed(started)
        }
    };
    witnesses.push(format!(
        "seeded vector generates a {}-dimensional submodule of V({})",
        span.dim(),
        n
    ));
    match uefact::semisimple_on(r.matrix(1), &Subspace::full(r.size())) {
        Ok(rep) if rep.diagonalizable_over_q => {
            let spectrum: Vec<String> = rep
                .spectrum
                .iter()
                .map(|(v, m)| format!("{}x{}", uefact::scalar::format_scalar(v), m))
                .collect();
            witnesses.push(format!("h spectrum: {}", spectrum.join(" ")));
        }
        Ok(rep) => {
            return Certificate::fail()
                .with_witness(format!(
                    "h is not semisimple: {}",
                    rep.reason.unwrap_or_default()
                ))
                .timed(started)
        }
        Err(e) => {
            return Certificate::fail()
                .with_witness(format!("semisimplicity check failed: {}", e))
                .timed(started)
        }
    }
    Certificate::pass()
        .with_seed(seed)
        .with_witnesses(witnesses)
        .timed(started)
}
