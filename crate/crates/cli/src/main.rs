use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use albert::io::{self, Document};
use albert::matrix_model::{ohwashi_action, ohwashi_action_complex, smolin_action};
use albert::projective::{self, DEFAULT_TOLERANCE};
use albert::random::{SeededRng, DEFAULT_SEED};
use albert::spectral::spectral_decompose;
use albert::verify::{self, VerifyOptions};
use albert::{
    GaugeAlgebra, GaugeConfiguration, Ground, HermitianElement, Incidence, ProjectiveLine,
    ProjectivePoint,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "albert",
    version,
    about = "Formally real Jordan algebras: spectra, projective planes, matrix-model actions"
)]
struct Cli {
    /// Seed for every randomized computation.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Tolerance for invariant and incidence checks.
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Require real diagonals on C⊗O elements and a real E6 action.
    #[arg(long, global = true)]
    paper_strict: bool,

    /// Incidence convention: `p∘ℓ = p` or `p∘ℓ = 0`.
    #[arg(long, global = true, value_enum, default_value_t = IncidenceArg::Containment)]
    incidence: IncidenceArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum IncidenceArg {
    Containment,
    PaperLiteral,
}

impl From<IncidenceArg> for Incidence {
    fn from(a: IncidenceArg) -> Self {
        match a {
            IncidenceArg::Containment => Incidence::Containment,
            IncidenceArg::PaperLiteral => Incidence::PaperLiteral,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Element,
    Point,
    Configuration,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues and eigenprojections of an element of h_3.
    Spectral { element: PathBuf },
    /// Whether a point lies on a line.
    Incidence { point: PathBuf, line: PathBuf },
    /// Line through two points.
    Join { p: PathBuf, q: PathBuf },
    /// Point on two lines.
    Meet { l1: PathBuf, l2: PathBuf },
    /// Cubic action over h_3(O) for a gauge configuration.
    ActionSmolin {
        configuration: PathBuf,
        /// Structure constants; su(2) when omitted.
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// E6-invariant cubic action over h_3(C⊗O).
    ActionE6 {
        configuration: PathBuf,
        #[arg(long)]
        algebra: Option<PathBuf>,
    },
    /// Whether an element of h_2 or h_3 lies on the lightcone.
    Lightcone { element: PathBuf },
    /// Seeded random elements, points or configurations.
    Random {
        #[arg(long, default_value = "O")]
        ground: Ground,
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Kind::Element)]
        kind: Kind,
        /// Gauge dimension for configurations.
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Seeded property suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Trials per randomized check, overriding the defaults.
        #[arg(long)]
        trials: Option<usize>,
        /// Print the suites and their checks instead of running them.
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    Validation(String),
    Verify,
}

impl From<albert::Error> for Failure {
    fn from(e: albert::Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type Outcome = Result<(Value, String), Failure>;

fn main() -> ExitCode {
    // usage errors exit with 1 so that 2 stays reserved for verify failures
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verify) => ExitCode::from(2),
    }
}

fn execute(cli: &Cli) -> Result<(), Failure> {
    if !(cli.tolerance.is_finite() && cli.tolerance > 0.0) {
        return Err(Failure::Validation(format!(
            "tolerance must be positive, got {}",
            cli.tolerance
        )));
    }
    let (report, summary, verify_failed) = match &cli.command {
        Command::Verify {
            suite,
            trials,
            list,
        } => {
            if *list {
                let suites: Vec<Value> = verify::list()
                    .into_iter()
                    .map(|(name, checks)| json!({ "name": name, "checks": checks }))
                    .collect();
                let n = suites.len();
                (json!({ "suites": suites }), format!("{n} suites"), false)
            } else {
                let opts = VerifyOptions {
                    seed: cli.seed,
                    trials: *trials,
                };
                let r = verify::run(suite, opts)?;
                let summary = r
                    .suites
                    .iter()
                    .flat_map(|s| {
                        s.checks.iter().map(move |c| {
                            format!(
                                "{} {}/{}: {} failures in {} trials, max residual {:e}",
                                if c.passed { "PASS" } else { "FAIL" },
                                s.name,
                                c.name,
                                c.failures,
                                c.trials,
                                c.max_residual
                            )
                        })
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                let value =
                    serde_json::to_value(&r).map_err(|e| Failure::Validation(e.to_string()))?;
                (value, summary, !r.passed)
            }
        }
        other => {
            let (v, s) = compute(cli, other)?;
            (v, s, false)
        }
    };
    emit(cli.out.as_deref(), &report)?;
    eprintln!("{summary}");
    if verify_failed {
        Err(Failure::Verify)
    } else {
        Ok(())
    }
}

fn emit(out: Option<&Path>, report: &Value) -> Result<(), Failure> {
    let mut text =
        serde_json::to_string_pretty(report).map_err(|e| Failure::Validation(e.to_string()))?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Validation(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn load(path: &Path, tol: f64) -> Result<Document, Failure> {
    io::parse_document(&read(path)?, tol)
        .map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))
}

fn load_element(path: &Path, cli: &Cli) -> Result<HermitianElement, Failure> {
    let x = match load(path, cli.tolerance)? {
        Document::Element(x) => x,
        Document::Point(p) => p.into_element(),
        Document::Line(l) => l.into_element(),
        other => return Err(wrong_kind(path, "an element", other.kind())),
    };
    if cli.paper_strict && x.ground() == Ground::Bioctonion {
        x.check_real_diagonal()?;
    }
    Ok(x)
}

fn load_point(path: &Path, cli: &Cli) -> Result<ProjectivePoint, Failure> {
    match load(path, cli.tolerance)? {
        Document::Point(p) => Ok(p),
        Document::Element(x) => Ok(ProjectivePoint::new(x, cli.tolerance)?),
        other => Err(wrong_kind(path, "a point", other.kind())),
    }
}

fn load_line(path: &Path, cli: &Cli) -> Result<ProjectiveLine, Failure> {
    match load(path, cli.tolerance)? {
        Document::Line(l) => Ok(l),
        Document::Element(x) => Ok(ProjectiveLine::new(x, cli.tolerance)?),
        other => Err(wrong_kind(path, "a line", other.kind())),
    }
}

fn load_action_inputs(
    configuration: &Path,
    algebra: Option<&Path>,
    cli: &Cli,
) -> Result<(GaugeConfiguration, GaugeAlgebra), Failure> {
    let cfg = io::parse_configuration(&read(configuration)?)
        .map_err(|e| Failure::Validation(format!("{}: {e}", configuration.display())))?;
    let g = match algebra {
        Some(path) => io::parse_algebra(&read(path)?)
            .map_err(|e| Failure::Validation(format!("{}: {e}", path.display())))?,
        None => GaugeAlgebra::su2(),
    };
    let jacobi = g.jacobi_residual();
    if jacobi > cli.tolerance {
        eprintln!("warning: structure constants violate the Jacobi identity by {jacobi:e}");
    }
    Ok((cfg, g))
}

fn wrong_kind(path: &Path, expected: &str, found: &str) -> Failure {
    Failure::Validation(format!(
        "{}: expected {expected}, found a {found}",
        path.display()
    ))
}

fn compute(cli: &Cli, command: &Command) -> Outcome {
    let tol = cli.tolerance;
    match command {
        Command::Spectral { element } => {
            let x = load_element(element, cli)?;
            let frame = spectral_decompose(&x)?;
            let summary = format!("eigenvalues {:?}", frame.roots());
            Ok((io::frame_to_value(&frame), summary))
        }
        Command::Incidence { point, line } => {
            let p = load_point(point, cli)?;
            let l = load_line(line, cli)?;
            let convention = Incidence::from(cli.incidence);
            let incident = projective::incident(&p, &l, convention, tol)?;
            let report = json!({ "incident": incident, "convention": convention });
            Ok((report, format!("incident: {incident}")))
        }
        Command::Join { p, q } => {
            let l = projective::join(&load_point(p, cli)?, &load_point(q, cli)?)?;
            Ok((io::line_to_value(&l), "join computed".into()))
        }
        Command::Meet { l1, l2 } => {
            let p = projective::meet(&load_line(l1, cli)?, &load_line(l2, cli)?)?;
            Ok((io::point_to_value(&p), "meet computed".into()))
        }
        Command::ActionSmolin {
            configuration,
            algebra,
        } => {
            let (cfg, g) = load_action_inputs(configuration, algebra.as_deref(), cli)?;
            let s = smolin_action(&cfg, &g)?;
            Ok((json!({ "action": s }), format!("Smolin action {s:e}")))
        }
        Command::ActionE6 {
            configuration,
            algebra,
        } => {
            let (cfg, g) = load_action_inputs(configuration, algebra.as_deref(), cli)?;
            let z = ohwashi_action_complex(&cfg, &g)?;
            let s = ohwashi_action(&cfg, &g, cli.paper_strict, tol)?;
            let report = json!({ "action": s, "imaginary": z.im });
            Ok((
                report,
                format!("E6 action {s:e} (imaginary part {:e})", z.im),
            ))
        }
        Command::Lightcone { element } => {
            let x = load_element(element, cli)?;
            let lightlike = projective::is_lightlike(&x, tol)?;
            Ok((
                json!({ "lightlike": lightlike }),
                format!("lightlike: {lightlike}"),
            ))
        }
        Command::Random {
            ground,
            n,
            kind,
            dim,
            count,
        } => {
            let real_diagonal = cli.paper_strict;
            let items = (0..*count as u64)
                .map(|i| {
                    let mut rng = SeededRng::new(cli.seed, i);
                    Ok(match kind {
                        Kind::Element => {
                            io::element_to_value(&rng.element(*ground, *n, real_diagonal)?)
                        }
                        Kind::Point => io::point_to_value(&rng.point(*ground, *n)?),
                        Kind::Configuration => io::configuration_to_value(&rng.configuration(
                            *ground,
                            *dim,
                            real_diagonal,
                        )?),
                    })
                })
                .collect::<Result<Vec<Value>, albert::Error>>()?;
            let summary = format!("{} item(s) from seed {}", items.len(), cli.seed);
            Ok((json!({ "seed": cli.seed, "items": items }), summary))
        }
        Command::Verify { .. } => unreachable!("handled by execute"),
    }
}
