//! The `kn` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! and input errors.

use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kn_core::central::{self, IndependenceOutcome, Realization};
use kn_core::cohomology::{self, named, Ansatz, CoboundaryOutcome, Cochain, Shape};
use kn_core::geom::laurent::LaurentPoly;
use kn_core::geom::{verify_against_geometry, Model};
use kn_core::moduli::{self, Fiber, LineSlope};
use kn_core::{catalog, rational, FamilySpec, ParamPoly, Rational};
use serde_json::{json, Value};

use crate::error::{Result, ToolkitError};
use crate::json::{cochain_from, cochain_to, element_to, family_to, poly_to, rational_to};
use crate::report::{Check, RunReport};
use crate::{sampling, suite};

#[derive(Parser, Debug)]
#[command(name = "kn", version, about = "Exact checks for Witt, Virasoro and Krichever-Novikov type algebras")]
pub struct Cli {
    /// Print the report as JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Print the report as plain text.
    #[arg(long, global = true)]
    text: bool,
    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = sampling::DEFAULT_SEED)]
    seed: u64,
    /// Include wall-clock timings (reruns are then no longer byte-identical).
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List or dump catalog families.
    #[command(subcommand)]
    Families(FamiliesCmd),
    /// Bracket of two basis elements.
    Bracket {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// Jacobi identity on a window.
    VerifyJacobi {
        #[command(flatten)]
        family: FamilyArg,
        /// `lo..hi`; defaults to -8..8, or 1..16 on L1-type domains.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Structure constants against the vector-field realization.
    VerifyGeometry {
        /// three-point, nodal, w1, witt or elliptic.
        #[arg(long)]
        family: String,
        #[arg(long, default_value = "-6..6", allow_hyphen_values = true)]
        window: String,
        /// Random parameter samples; 0 checks the genus-0 models symbolically.
        #[arg(long, default_value_t = 0)]
        samples: usize,
    },
    #[command(subcommand)]
    Cohomology(CohomologyCmd),
    #[command(subcommand)]
    Central(CentralCmd),
    #[command(subcommand)]
    Moduli(ModuliCmd),
    /// Every acceptance check, in order.
    PaperSuite {
        /// Run one criterion only.
        #[arg(long)]
        criterion: Option<u8>,
    },
}

#[derive(Subcommand, Debug)]
enum FamiliesCmd {
    List,
    Dump {
        #[command(flatten)]
        family: FamilyArg,
    },
}

#[derive(Args, Debug)]
struct FamilyArg {
    /// Catalog name (see `families list`) or a path to a family JSON file.
    #[arg(long)]
    family: String,
    /// Parameter values, e.g. `e1=1,e2=-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    params: Option<String>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AnsatzShape {
    Constant,
    Affine,
    PerIndex,
}

#[derive(Args, Debug)]
struct SolveArgs {
    /// Algebra the cochain lives on (catalog name or JSON file).
    #[arg(long, default_value = "witt")]
    algebra: String,
    /// Named cochain (omega1, omega2, beta1, beta2, beta3, l1-omega), a JSON
    /// file, or inline JSON.
    #[arg(long)]
    cocycle: String,
    #[arg(long, allow_hyphen_values = true)]
    weight: i64,
    #[arg(long, value_enum, default_value = "constant")]
    ansatz: AnsatzShape,
    /// Fixed values `n=c`, repeatable.
    #[arg(long, allow_hyphen_values = true)]
    pin: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    window: Option<String>,
}

#[derive(Subcommand, Debug)]
enum CohomologyCmd {
    /// Graded cohomology dimensions of L1.
    Goncharova {
        #[arg(long, default_value_t = 3)]
        qmax: usize,
        #[arg(long, default_value_t = 20)]
        smax: i64,
    },
    /// Cocycle condition on a window.
    Check {
        #[arg(long, default_value = "witt")]
        algebra: String,
        #[arg(long)]
        cocycle: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Solve d₁Φ = ω.
    Solve(SolveArgs),
    /// Solve ω − d₁Φ = c·β.
    Compare {
        #[command(flatten)]
        solve: SolveArgs,
        #[arg(long)]
        beta: String,
    },
}

#[derive(Args, Debug)]
struct RealizationArg {
    /// witt or three-point.
    #[arg(long)]
    family: String,
    /// Value of α² for the three-point realization; symbolic when absent.
    #[arg(long, allow_hyphen_values = true)]
    alpha2: Option<String>,
    #[arg(long, default_value = "-10..10", allow_hyphen_values = true)]
    window: String,
}

#[derive(Subcommand, Debug)]
enum CentralCmd {
    /// Support table of the residue cocycle.
    Cocycle {
        #[command(flatten)]
        real: RealizationArg,
        /// Connection as a Laurent polynomial, e.g. `0`, `1`, `z^-1`, `2*z^-2 + 1/2`.
        #[arg(long = "R", default_value = "0", allow_hyphen_values = true)]
        r: String,
    },
    /// Locality bound of the residue cocycle.
    Locality {
        #[command(flatten)]
        real: RealizationArg,
        #[arg(long = "R", default_value = "0", allow_hyphen_values = true)]
        r: String,
    },
    /// Coboundary relating two connections.
    Independence {
        #[command(flatten)]
        real: RealizationArg,
        #[arg(long, allow_hyphen_values = true)]
        r1: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        r2: String,
    },
}

#[derive(Subcommand, Debug)]
enum ModuliCmd {
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        e1: String,
        #[arg(long, allow_hyphen_values = true)]
        e2: String,
    },
    JLine {
        /// Slope `p/q` or `inf`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    Rescale {
        #[command(flatten)]
        family: FamilyArg,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: String,
    },
}

fn usage(msg: impl Into<String>) -> ToolkitError {
    ToolkitError::Usage(msg.into())
}

pub fn parse_window(s: &str) -> Result<(i64, i64)> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| usage(format!("window `{s}` is not lo..hi")))?;
    let p = |x: &str| x.trim().parse::<i64>().map_err(|_| usage(format!("bad window bound `{x}`")));
    let (lo, hi) = (p(lo)?, p(hi)?);
    if lo > hi {
        return Err(usage(format!("empty window {lo}..{hi}")));
    }
    Ok((lo, hi))
}

/// `name=value` pairs separated by commas.
pub fn parse_params(s: &str) -> Result<Vec<(String, Rational)>> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| usage(format!("parameter `{p}` is not name=value")))?;
            Ok((k.trim().to_string(), rational::parse(v)?))
        })
        .collect()
}

/// Sums of terms `c`, `z^k`, `c*z^k`, `c*z`.
pub fn parse_laurent(s: &str) -> Result<LaurentPoly> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = s.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            terms.push(&s[start..i]);
            start = i;
        }
    }
    terms.push(&s[start..]);
    let mut out = LaurentPoly::zero();
    for t in terms.into_iter().filter(|t| !t.is_empty()) {
        let (sign, body) = match t.as_bytes()[0] {
            b'+' => (1, &t[1..]),
            b'-' => (-1, &t[1..]),
            _ => (1, t),
        };
        let (coeff, power) = match body.find('z') {
            None => (rational::parse(body)?, 0),
            Some(i) => {
                let c = body[..i].trim_end_matches('*');
                let c = if c.is_empty() { rational::int(1) } else { rational::parse(c)? };
                let rest = &body[i + 1..];
                let k = match rest.strip_prefix('^') {
                    Some(k) => k.parse::<i64>().map_err(|_| usage(format!("bad exponent in `{t}`")))?,
                    None if rest.is_empty() => 1,
                    None => return Err(usage(format!("bad Laurent term `{t}`"))),
                };
                (c, k)
            }
        };
        out.add_term(power, ParamPoly::constant(coeff * rational::int(sign)));
    }
    Ok(out)
}

fn laurent_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().map(|(k, c)| json!([k, poly_to(c)])).collect())
}

fn read_json(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(Path::new(arg))?
    };
    Ok(serde_json::from_str(&text)?)
}

fn load_family(name: &str) -> Result<FamilySpec> {
    match catalog::lookup(name) {
        Err(_) if Path::new(name).exists() => crate::json::family_from(&read_json(name)?),
        other => Ok(other?),
    }
}

fn family_with_params(arg: &FamilyArg) -> Result<FamilySpec> {
    let f = load_family(&arg.family)?;
    match &arg.params {
        None => Ok(f),
        Some(p) => {
            let values = parse_params(p)?;
            let refs: Vec<(&str, Rational)> = values.iter().map(|(k, v)| (k.as_str(), v.clone())).collect();
            Ok(f.specialize(&refs)?)
        }
    }
}

fn load_cochain(arg: &str) -> Result<Cochain> {
    Ok(match arg {
        "omega1" => named::omega_first(),
        "omega2" => named::omega_second(),
        "phi1" => named::phi_first(),
        "phi2" => named::phi_second(),
        "beta1" => named::beta(1)?,
        "beta2" => named::beta(2)?,
        "beta3" => named::beta(3)?,
        "gamma1" => named::gamma_first(),
        "l1-omega" => named::l1_omega()?,
        "l1-phi" => named::l1_phi(),
        "l1-phi-printed" => named::l1_phi_printed(),
        _ => cochain_from(&read_json(arg)?)?,
    })
}

fn realization(arg: &RealizationArg) -> Result<Realization> {
    let alpha2 = arg.alpha2.as_deref().map(rational::parse).transpose()?.map(ParamPoly::constant);
    Ok(Realization::for_family(&arg.family, alpha2)?)
}

fn default_window(f: &FamilySpec) -> (i64, i64) {
    suite::jacobi_window(f)
}

fn ansatz(args: &SolveArgs) -> Result<Ansatz> {
    let shape = match args.ansatz {
        AnsatzShape::Constant => Shape::ParityConstant,
        AnsatzShape::Affine => Shape::AffineInN,
        AnsatzShape::PerIndex => Shape::PerIndex,
    };
    let mut a = Ansatz::new(args.weight, shape);
    for p in &args.pin {
        let (n, v) = p.split_once('=').ok_or_else(|| usage(format!("pin `{p}` is not n=value")))?;
        let n = n.trim().parse::<i64>().map_err(|_| usage(format!("bad pin index `{n}`")))?;
        a = a.pin(n, rational::parse(v)?);
    }
    Ok(a)
}

fn outcome_check(name: &str, out: &CoboundaryOutcome, window: (i64, i64)) -> Result<Check> {
    Ok(match out {
        CoboundaryOutcome::Found(w) => {
            let mut values = serde_json::Map::new();
            for n in window.0..=window.1.min(window.0 + 7) {
                values.insert(n.to_string(), element_to(&w.phi.eval(&[n])?));
            }
            Check::new(
                name,
                true,
                json!({
                    "outcome": "found",
                    "phi": cochain_to(&w.phi),
                    "phi_values": values,
                    "scalar": w.scalar.as_ref().map(rational_to),
                    "equations": w.equations,
                    "certificate": format!("{:?}", w.certificate),
                }),
            )
        }
        CoboundaryOutcome::Infeasible { system, certificate } => Check::new(
            name,
            false,
            json!({"outcome": "infeasible", "equations": system.num_equations(), "certified": system.certifies(certificate)}),
        )
        .with_witness(json!({"multipliers": certificate.multipliers.iter().map(|(r, y)| json!([r, rational_to(y)])).collect::<Vec<_>>()})),
    })
}

fn fiber_json(f: &Fiber) -> Value {
    match f {
        Fiber::Cuspidal => json!({"kind": "cuspidal"}),
        Fiber::Nodal(c) => json!({"kind": "nodal", "case": format!("{c:?}")}),
        Fiber::Smooth { j } => json!({"kind": "smooth", "j": rational_to(j)}),
    }
}

fn run(cli: &Cli) -> Result<RunReport> {
    let seed = cli.seed;
    let mut report = match &cli.command {
        Command::Families(FamiliesCmd::List) => {
            let mut r = RunReport::new("families list");
            r.push(Check::new("catalog", true, json!(catalog::names())));
            r
        }
        Command::Families(FamiliesCmd::Dump { family }) => {
            let f = family_with_params(family)?;
            let mut r = RunReport::new("families dump").input("family", family.family.clone());
            r.push(Check::new("family", true, family_to(&f)));
            r
        }
        Command::Bracket { family, n, m } => {
            let f = family_with_params(family)?;
            let x = f.bracket_basis(*n, *m)?;
            let mut r = RunReport::new("bracket").input("family", family.family.clone()).input("n", *n).input("m", *m);
            r.push(Check::new("bracket", true, json!({"params": f.params, "element": element_to(&x), "terms": x.len()})));
            r
        }
        Command::VerifyJacobi { family, window } => {
            let f = family_with_params(family)?;
            let (lo, hi) = match window {
                Some(w) => parse_window(w)?,
                None => default_window(&f),
            };
            let mut r = RunReport::new("verify-jacobi").input("family", family.family.clone()).input("window", json!([lo, hi]));
            r.push(suite::jacobi_check(&f, lo, hi)?.1);
            r
        }
        Command::VerifyGeometry { family, window, samples } => {
            let (lo, hi) = parse_window(window)?;
            let model = Model::for_family(family)?;
            let f = load_family(family)?;
            let draws: Vec<Vec<Rational>> = match model {
                Model::Elliptic => sampling::elliptic_samples(&mut sampling::rng(seed), (*samples).max(3)),
                _ => {
                    let mut rng = sampling::rng(seed);
                    (0..*samples).map(|_| (0..model.parameter_count()).map(|_| sampling::small_rational(&mut rng)).collect()).collect()
                }
            };
            let g = verify_against_geometry(&f, model, lo, hi, &draws)?;
            let mut r = RunReport::new("verify-geometry")
                .input("family", family.clone())
                .input("window", json!([lo, hi]))
                .input("samples", *samples)
                .input("seed", seed);
            let mut check = suite::geometry_check(&g);
            check.detail["per_pair"] = Value::Array(g.pairs.iter().map(|p| json!([p.n, p.m, p.sample, p.ok])).collect());
            r.push(check);
            r
        }
        Command::Cohomology(CohomologyCmd::Goncharova { qmax, smax }) => {
            let mut r = RunReport::new("cohomology goncharova").input("qmax", *qmax).input("smax", *smax);
            for (q, row) in cohomology::goncharova_table(*qmax, *smax) {
                let predicted: Vec<usize> = (1..=*smax).map(|s| cohomology::goncharova::goncharova_predicted(q, s)).collect();
                r.push(Check::new(format!("q={q}"), row == predicted, json!({"dims": row, "predicted": predicted})));
            }
            r
        }
        Command::Cohomology(CohomologyCmd::Check { algebra, cocycle, window }) => {
            let a = load_family(algebra)?;
            let phi = load_cochain(cocycle)?;
            let (lo, hi) = match window {
                Some(w) => parse_window(w)?,
                None => default_window(&a),
            };
            let mut r = RunReport::new("cohomology check").input("algebra", algebra.clone()).input("cocycle", cocycle.clone());
            r.push(suite::cocycle_check("cocycle", &cohomology::is_cocycle(&a, &phi, lo, hi)?));
            r
        }
        Command::Cohomology(CohomologyCmd::Solve(args)) => {
            let a = load_family(&args.algebra)?;
            let omega = load_cochain(&args.cocycle)?;
            let w = match &args.window {
                Some(w) => parse_window(w)?,
                None => default_window(&a),
            };
            let out = cohomology::solve_coboundary(&a, &omega, &ansatz(args)?, w.0, w.1)?;
            let mut r = RunReport::new("cohomology solve")
                .input("algebra", args.algebra.clone())
                .input("cocycle", args.cocycle.clone())
                .input("weight", args.weight)
                .input("window", json!([w.0, w.1]));
            r.push(outcome_check("coboundary", &out, w)?);
            r
        }
        Command::Cohomology(CohomologyCmd::Compare { solve: args, beta }) => {
            let a = load_family(&args.algebra)?;
            let omega = load_cochain(&args.cocycle)?;
            let b = load_cochain(beta)?;
            let w = match &args.window {
                Some(w) => parse_window(w)?,
                None => default_window(&a),
            };
            let out = cohomology::compare_classes(&a, &omega, &b, &ansatz(args)?, w.0, w.1)?;
            let mut r = RunReport::new("cohomology compare")
                .input("algebra", args.algebra.clone())
                .input("cocycle", args.cocycle.clone())
                .input("beta", beta.clone())
                .input("weight", args.weight)
                .input("window", json!([w.0, w.1]));
            r.push(outcome_check("comparison", &out, w)?);
            r
        }
        Command::Central(CentralCmd::Cocycle { real, r }) => {
            let re = realization(real)?;
            let conn = parse_laurent(r)?;
            let (lo, hi) = parse_window(&real.window)?;
            let t = central::support_table(&re, &conn, lo, hi)?;
            let mut rep = RunReport::new("central cocycle")
                .input("family", re.name())
                .input("R", laurent_json(&conn))
                .input("window", json!([lo, hi]));
            rep.push(Check::new(
                "support",
                true,
                json!({
                    "entries": t.entries.iter().map(|(n, m, v)| json!([n, m, poly_to(v)])).collect::<Vec<_>>(),
                    "levels": t.levels(&re),
                }),
            ));
            rep
        }
        Command::Central(CentralCmd::Locality { real, r }) => {
            let re = realization(real)?;
            let conn = parse_laurent(r)?;
            let (lo, hi) = parse_window(&real.window)?;
            let mut rep = RunReport::new("central locality")
                .input("family", re.name())
                .input("R", laurent_json(&conn))
                .input("window", json!([lo, hi]));
            let check = match central::locality_bound(&re, &conn, lo, hi) {
                Ok(l) => Check::new(
                    "locality",
                    l.upper_bound_holds,
                    json!({
                        "M": l.lower,
                        "levels": l.support.levels(&re),
                        "support": l.support.entries.iter().map(|(n, m, v)| json!([n, m, poly_to(v)])).collect::<Vec<_>>(),
                    }),
                ),
                Err(kn_core::Error::UpperBoundViolated { n, m }) => {
                    Check::new("locality", false, json!({"upper_bound": "violated"})).with_witness(json!({"pair": [n, m]}))
                }
                Err(e) => return Err(e.into()),
            };
            rep.push(check);
            rep
        }
        Command::Central(CentralCmd::Independence { real, r1, r2 }) => {
            let re = realization(real)?;
            let (c1, c2) = (parse_laurent(r1)?, parse_laurent(r2)?);
            let (lo, hi) = parse_window(&real.window)?;
            let mut rep = RunReport::new("central independence")
                .input("family", re.name())
                .input("R1", laurent_json(&c1))
                .input("R2", laurent_json(&c2))
                .input("window", json!([lo, hi]));
            rep.push(match central::class_independence(&re, &c1, &c2, lo, hi)? {
                IndependenceOutcome::Coboundary { lambda, equations } => Check::new(
                    "coboundary",
                    true,
                    json!({"lambda": lambda.iter().map(|(k, v)| json!([k, rational_to(v)])).collect::<Vec<_>>(), "equations": equations}),
                ),
                IndependenceOutcome::Inconsistent { system, certificate } => Check::new(
                    "coboundary",
                    false,
                    json!({"equations": system.num_equations(), "certified": system.certifies(&certificate)}),
                ),
            });
            rep
        }
        Command::Moduli(ModuliCmd::Classify { e1, e2 }) => {
            let (a, b) = (rational::parse(e1)?, rational::parse(e2)?);
            let c = moduli::CurveParams::new(a.clone(), b.clone());
            let mut r = RunReport::new("moduli classify").input("e1", rational_to(&a)).input("e2", rational_to(&b));
            r.push(Check::new(
                "fiber",
                true,
                json!({
                    "fiber": fiber_json(&moduli::classify_fiber(&a, &b)),
                    "e3": rational_to(&c.e3()),
                    "g2": rational_to(&c.g2()),
                    "g3": rational_to(&c.g3()),
                    "discriminant": rational_to(&c.discriminant()),
                }),
            ));
            r
        }
        Command::Moduli(ModuliCmd::JLine { s }) => {
            let slope = LineSlope::parse(s)?;
            let partner = match moduli::line_partner(&slope) {
                LineSlope::Infinity => json!("inf"),
                LineSlope::Finite(t) => rational_to(&t),
            };
            let mut r = RunReport::new("moduli j-line").input("s", s.clone());
            r.push(match moduli::j_of_line(&slope) {
                Ok(j) => Check::new("j", true, json!({"j": rational_to(&j), "partner": partner})),
                Err(kn_core::Error::DegenerateLine) => Check::new("j", false, json!({"error": "degenerate line", "partner": partner})),
                Err(e) => return Err(e.into()),
            });
            r
        }
        Command::Moduli(ModuliCmd::Rescale { family, lambda2 }) => {
            let f = family_with_params(family)?;
            let l2 = rational::parse(lambda2)?;
            let g = moduli::rescale(&f, &l2)?;
            let mut r = RunReport::new("moduli rescale").input("family", family.family.clone()).input("lambda2", rational_to(&l2));
            r.push(Check::new("rescaled", true, family_to(&g)));
            r
        }
        Command::PaperSuite { criterion } => {
            let mut r = RunReport::new("paper-suite").input("seed", seed);
            if cli.timings {
                r = r.with_timings();
            }
            let ids: Vec<u8> = match criterion {
                Some(c) if (1..=9).contains(c) => vec![*c],
                Some(c) => return Err(usage(format!("no criterion {c}"))),
                None => (1..=9).collect(),
            };
            for id in ids {
                r.timed(&format!("criterion {id}"), || {
                    let c = suite::by_id(id, seed).expect("id in range");
                    c.checks
                        .into_iter()
                        .map(|mut k| {
                            k.name = format!("[{id}] {}", k.name);
                            k
                        })
                        .collect()
                });
            }
            r
        }
    };
    if cli.timings && report.timings.is_none() {
        report = report.with_timings();
    }
    Ok(report)
}

/// Parses the process arguments, runs, prints, and returns the exit code.
pub fn main() -> i32 {
    main_with(std::env::args_os())
}

pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(report) => {
            let text = if cli.text { report.to_text() } else { report.to_json() + "\n" };
            // a closed pipe (`kn … | head`) is not an error worth a panic
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_terms() {
        let p = parse_laurent("2*z^-2 - z + 1/2").unwrap();
        assert_eq!(p.coeff(-2), ParamPoly::from_i64(2));
        assert_eq!(p.coeff(1), ParamPoly::from_i64(-1));
        assert_eq!(p.coeff(0), ParamPoly::constant(rational::rat(1, 2)));
        assert!(parse_laurent("0").unwrap().is_zero());
        assert_eq!(parse_laurent("z^-1").unwrap(), LaurentPoly::power(-1));
        assert!(parse_laurent("z^x").is_err());
    }

    #[test]
    fn windows_and_params() {
        assert_eq!(parse_window("-6..6").unwrap(), (-6, 6));
        assert!(parse_window("3..1").is_err());
        let p = parse_params("e1=1,e2=-1/2").unwrap();
        assert_eq!(p[1], ("e2".to_string(), rational::rat(-1, 2)));
    }
}
