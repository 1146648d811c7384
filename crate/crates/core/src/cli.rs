//! Batch command-line front end. Every subcommand validates its inputs with the
//! relevant verifiers, writes one JSON artifact (or DOT/CSV views), and exits with
//! a status from [`exit_code`].

use std::ffi::OsString;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::borsuk::{
    choose_rs, embed_family, probe_map, verify_embedding, CandidateMap, EmbeddedGraph, ProbeReport, TabulatedMapFile,
};
use crate::chromatic::{chi_exact, verify_certificate, verify_colouring, ChiConfig, ChiOutcome, KColouring, DEFAULT_CHI_CAP};
use crate::error::{Error, Result};
use crate::fan::{find_balanced_edge, positive_alternating_count, refute_colouring, Labelling, MonochromeEdgeCert};
use crate::graph::{
    build_family, complement, complete, cycle, double_cover, mycielski, petersen, Graph, GraphJson, MycielskiSpec,
};
use crate::lift::{check_lift, sphere_model, SphereModel, SphereModelFile};
use crate::report::Report;
use crate::simplicial::{
    circle_complex, cross_polytope, verify_flag, verify_sphere_necessary, verify_symmetric, ComplexFile, Simplex,
    SymmetricComplex,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;
pub const EXIT_INCONCLUSIVE: i32 = 4;
pub const EXIT_THEOREM_VIOLATION: i32 = 5;

/// Usage and domain errors 2, contract/input failures 3, exhausted budgets 4,
/// theorem violations 5.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Domain(_) => EXIT_USAGE,
        Error::SizeLimit { .. } | Error::Contract { .. } | Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_CONTRACT,
        Error::SamplingExhausted { .. } => EXIT_INCONCLUSIVE,
        Error::TheoremViolation(_) => EXIT_THEOREM_VIOLATION,
    }
}

#[derive(Debug, Parser)]
#[command(name = "mycielski", version, about = "Generalised Mycielski graphs, sphere models and antipodal-map probes")]
pub struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Time budget per solver call, in milliseconds.
    #[arg(long, global = true, default_value_t = 60_000)]
    pub budget_ms: u64,
    /// Largest graph order the exact chromatic solver accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_CHI_CAP)]
    pub cap: usize,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the family member for a spec such as `2,3`.
    Build {
        spec: MycielskiSpec,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact chromatic number with certificate.
    ///
    /// GRAPH is a file or an expression: petersen, cycle:N, complete:N, family:SPEC,
    /// complement:EXPR, mycielski:R:EXPR, cover:EXPR.
    Chi { graph: String },
    /// Sphere model whose antipodal quotient is the family member.
    SphereModel { spec: MycielskiSpec },
    /// Lift a sphere model (file or spec) by one Mycielski iteration.
    Lift { model: String, r: usize },
    /// Refute colourings of a model's quotient with at most dim + 1 colours.
    Refute {
        model: String,
        /// Colouring file `{palette, colours}`.
        colouring: Option<PathBuf>,
        /// Refute this many seeded random colourings instead.
        #[arg(long, conflicts_with = "colouring")]
        random: Option<usize>,
    },
    /// Count positive alternating facets of a labelling.
    ///
    /// COMPLEX is a file or one of cross:N, circle:R, model:SPEC.
    FanCount { complex: String, labelling: PathBuf },
    /// Embed a family member near-antipodally in a sphere.
    Embed {
        /// Spec to embed; omit with --choose.
        spec: Option<MycielskiSpec>,
        /// Pick the spec for S^N that meets --delta.
        #[arg(long, requires = "delta", conflicts_with = "spec")]
        choose: Option<usize>,
        #[arg(long)]
        delta: Option<f64>,
        /// Also write per-edge defects here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Re-check any artifact written by this tool.
    Verify { artifact: PathBuf },
    /// Refute a candidate antipodal map S^N -> S^(N-1) under its declared modulus.
    ///
    /// MAP is `sign`, `drop-normalize`, or a tabulated map file.
    Probe {
        map: String,
        #[arg(long)]
        n: usize,
        /// Override the declared delta of a built-in map.
        #[arg(long)]
        delta: Option<f64>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChiArtifact {
    pub graph: GraphJson,
    #[serde(flatten)]
    pub outcome: ChiOutcome,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Refutation {
    pub colouring: KColouring,
    pub certificate: MonochromeEdgeCert,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RefutationArtifact {
    pub model: SphereModelFile,
    pub refutations: Vec<Refutation>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FanCountArtifact {
    pub complex: ComplexFile,
    pub labelling: Labelling,
    pub count: usize,
    pub odd: bool,
    pub facets: Vec<Simplex>,
    pub balanced_edge: Option<(usize, usize)>,
    /// Whether a verified hemisphere flag came with the complex.
    pub aligned: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingArtifact {
    #[serde(flatten)]
    pub embedding: EmbeddedGraph,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeArtifact {
    pub candidate: CandidateMap,
    #[serde(flatten)]
    pub report: ProbeReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationArtifact {
    pub artifact: String,
    pub passed: bool,
    pub report: Report,
}

/// Every file this tool writes, tagged by `kind`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Artifact {
    Graph(GraphJson),
    ChiCertificate(ChiArtifact),
    SphereModel(SphereModelFile),
    Complex(ComplexFile),
    Refutation(RefutationArtifact),
    FanCount(FanCountArtifact),
    Embedding(EmbeddingArtifact),
    Probe(ProbeArtifact),
    Verification(VerificationArtifact),
}

impl Artifact {
    pub fn kind(&self) -> &'static str {
        match self {
            Artifact::Graph(_) => "graph",
            Artifact::ChiCertificate(_) => "chi-certificate",
            Artifact::SphereModel(_) => "sphere-model",
            Artifact::Complex(_) => "complex",
            Artifact::Refutation(_) => "refutation",
            Artifact::FanCount(_) => "fan-count",
            Artifact::Embedding(_) => "embedding",
            Artifact::Probe(_) => "probe",
            Artifact::Verification(_) => "verification",
        }
    }
}

/// Parses a graph expression, falling back to a JSON file.
pub fn parse_graph(expr: &str) -> Result<Graph> {
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::domain(format!("expected a number, got {s:?}")))
    };
    if expr == "petersen" {
        return Ok(petersen());
    }
    if let Some(rest) = expr.strip_prefix("cycle:") {
        return cycle(num(rest)?);
    }
    if let Some(rest) = expr.strip_prefix("complete:") {
        return complete(num(rest)?);
    }
    if let Some(rest) = expr.strip_prefix("family:") {
        return build_family(&rest.parse()?);
    }
    if let Some(rest) = expr.strip_prefix("complement:") {
        return Ok(complement(&parse_graph(rest)?));
    }
    if let Some(rest) = expr.strip_prefix("cover:") {
        return Ok(double_cover(&parse_graph(rest)?));
    }
    if let Some(rest) = expr.strip_prefix("mycielski:") {
        let (r, inner) = rest
            .split_once(':')
            .ok_or_else(|| Error::domain("expected mycielski:R:EXPR"))?;
        return mycielski(&parse_graph(inner)?, num(r)?);
    }
    let path = Path::new(expr);
    if !path.exists() {
        return Err(Error::domain(format!("{expr:?} is neither a graph expression nor a file")));
    }
    let text = fs::read_to_string(path)?;
    match serde_json::from_str::<Artifact>(&text) {
        Ok(Artifact::Graph(g)) => g.into_graph(),
        Ok(Artifact::ChiCertificate(c)) => c.graph.into_graph(),
        Ok(other) => Err(Error::Parse(format!("{expr} holds a {} artifact, not a graph", other.kind()))),
        Err(_) => serde_json::from_str::<GraphJson>(&text)?.into_graph(),
    }
}

/// A model file, or a spec to build the model from.
pub fn load_model(arg: &str) -> Result<SphereModel> {
    let path = Path::new(arg);
    if path.exists() {
        let file: SphereModelFile = serde_json::from_str(&fs::read_to_string(path)?)?;
        return SphereModel::from_file(file);
    }
    sphere_model(&arg.parse()?)
}

/// A complex with an optional flag: `cross:N`, `circle:R`, `model:SPEC`, or a file.
pub fn load_complex(arg: &str) -> Result<ComplexFile> {
    if let Some(rest) = arg.strip_prefix("cross:") {
        let n = rest.parse().map_err(|_| Error::domain(format!("bad dimension {rest:?}")))?;
        let (k, flag) = cross_polytope(n)?;
        return Ok(ComplexFile::new(&k, Some(&flag), None));
    }
    if let Some(rest) = arg.strip_prefix("circle:") {
        let r = rest.parse().map_err(|_| Error::domain(format!("bad r {rest:?}")))?;
        let (k, kappa, flag) = circle_complex(r)?;
        return Ok(ComplexFile::new(&k, Some(&flag), Some(&kappa)));
    }
    if let Some(rest) = arg.strip_prefix("model:") {
        return Ok(sphere_model(&rest.parse()?)?.to_file().complex);
    }
    let path = Path::new(arg);
    if !path.exists() {
        return Err(Error::domain(format!("{arg:?} is neither a complex name nor a file")));
    }
    let text = fs::read_to_string(path)?;
    match serde_json::from_str::<Artifact>(&text) {
        Ok(Artifact::Complex(c)) => Ok(c),
        Ok(Artifact::SphereModel(m)) => Ok(m.complex),
        Ok(Artifact::FanCount(f)) => Ok(f.complex),
        Ok(other) => Err(Error::Parse(format!("{arg} holds a {} artifact, not a complex", other.kind()))),
        Err(_) => Ok(serde_json::from_str::<ComplexFile>(&text)?),
    }
}

/// Symmetry and sphere checks, plus the flag when one is present.
fn checked_complex(file: &ComplexFile) -> Result<(SymmetricComplex, bool)> {
    let k = file.complex()?;
    let mut report = verify_symmetric(&k);
    report.merge(verify_sphere_necessary(&k));
    if let Some(flag) = &file.flag {
        report.merge(verify_flag(&k, flag));
    }
    if !report.passed() {
        return Err(Error::contract("complex failed verification", report));
    }
    Ok((k, file.flag.is_some()))
}

fn fan_count(file: ComplexFile, labelling: Labelling) -> Result<FanCountArtifact> {
    let (k, aligned) = checked_complex(&file)?;
    let (count, facets) = positive_alternating_count(&k, &labelling)?;
    let balanced_edge = find_balanced_edge(&k, &labelling);
    Ok(FanCountArtifact {
        complex: file,
        labelling,
        count,
        odd: count % 2 == 1,
        facets,
        balanced_edge,
        aligned,
    })
}

fn load_map(arg: &str, n: usize, delta: Option<f64>) -> Result<CandidateMap> {
    let path = Path::new(arg);
    if path.exists() {
        let file: TabulatedMapFile = serde_json::from_str(&fs::read_to_string(path)?)?;
        let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| arg.to_string());
        let mut m = CandidateMap::tabulated(name, file)?;
        if let Some(d) = delta {
            m.modulus.delta = d;
        }
        return Ok(m);
    }
    CandidateMap::builtin(arg, n, delta)
}

/// Re-checks an artifact from scratch.
pub fn verify_artifact(artifact: &Artifact, budget: Duration) -> Result<Report> {
    let mut r = Report::new(artifact.kind());
    match artifact {
        Artifact::Graph(g) => {
            let built = g.clone().into_graph();
            r.record("well-formed", built.err().map(|e| e.to_string()));
        }
        Artifact::ChiCertificate(c) => {
            let g = c.graph.clone().into_graph()?;
            match &c.outcome {
                ChiOutcome::Exact(cert) => r.merge(verify_certificate(&g, cert, budget)?),
                ChiOutcome::Inconclusive { lower, upper, best_colouring, .. } => {
                    let mono = verify_colouring(&g, best_colouring)?;
                    r.record(
                        "upper-bound",
                        (!mono.is_empty() || best_colouring.palette != *upper).then(|| "best colouring does not witness the upper bound".to_string()),
                    );
                    r.record("bounds-ordered", (lower > upper).then(|| format!("lower {lower} exceeds upper {upper}")));
                }
            }
        }
        Artifact::SphereModel(m) => match SphereModel::from_file(m.clone()) {
            Ok(_) => r.pass("model"),
            Err(Error::Contract { report, .. }) => r.merge(report),
            Err(e) => return Err(e),
        },
        Artifact::Complex(file) => {
            let k = file.complex()?;
            r.merge(verify_symmetric(&k));
            r.merge(verify_sphere_necessary(&k));
            if let Some(flag) = &file.flag {
                r.merge(verify_flag(&k, flag));
            }
            if let Some(kappa) = &file.kappa {
                r.merge(crate::simplicial::verify_two_colouring(&k, kappa));
            }
        }
        Artifact::Refutation(a) => {
            let model = SphereModel::from_file(a.model.clone())?;
            r.pass("model");
            let bad = a
                .refutations
                .iter()
                .enumerate()
                .find_map(|(i, x)| match x.certificate.verify(&model.sphere, &x.colouring) {
                    Ok(rep) if rep.passed() => None,
                    Ok(rep) => Some(format!("certificate {i}: {}", rep.failed_checks().map(|c| c.name.as_str()).collect::<Vec<_>>().join(", "))),
                    Err(e) => Some(format!("certificate {i}: {e}")),
                });
            r.record("certificates", bad);
        }
        Artifact::FanCount(f) => {
            let again = fan_count(f.complex.clone(), f.labelling.clone())?;
            r.record("recomputed", (&again != f).then(|| "count, facets or balanced edge differ".to_string()));
        }
        Artifact::Embedding(e) => {
            let built = embed_family(&e.embedding.spec)?;
            r.record(
                "family-graph",
                (built.graph != e.embedding.graph).then(|| format!("graph differs from build_family({})", e.embedding.spec)),
            );
            let delta = e.delta.unwrap_or(2.0);
            r.merge(verify_embedding(&e.embedding, delta));
        }
        Artifact::Probe(p) => {
            let again = probe_map(&p.candidate, p.report.n)?;
            r.record("reproduced", (again != p.report).then(|| "re-running the probe gives a different report".to_string()));
        }
        Artifact::Verification(v) => {
            r.record("consistent", (v.passed != v.report.passed()).then(|| "passed flag disagrees with the checks".to_string()));
        }
    }
    Ok(r)
}

struct Outcome {
    artifact: Artifact,
    status: i32,
    csv: Option<(PathBuf, String)>,
    dot: Option<String>,
}

impl Outcome {
    fn ok(artifact: Artifact) -> Self {
        Outcome {
            artifact,
            status: EXIT_OK,
            csv: None,
            dot: None,
        }
    }
}

fn execute(cli: &Cli) -> Result<Outcome> {
    let budget = Duration::from_millis(cli.budget_ms);
    Ok(match &cli.command {
        Command::Build { spec, format } => {
            let g = build_family(spec)?;
            let mut out = Outcome::ok(Artifact::Graph(GraphJson::from(&g)));
            if *format == Format::Dot {
                out.dot = Some(g.to_dot());
            }
            out
        }
        Command::Chi { graph } => {
            let g = parse_graph(graph)?;
            let outcome = chi_exact(&g, &ChiConfig { budget, cap: cli.cap })?;
            let status = if outcome.exact().is_some() { EXIT_OK } else { EXIT_INCONCLUSIVE };
            let mut out = Outcome::ok(Artifact::ChiCertificate(ChiArtifact {
                graph: GraphJson::from(&g),
                outcome,
            }));
            out.status = status;
            out
        }
        Command::SphereModel { spec } => Outcome::ok(Artifact::SphereModel(sphere_model(spec)?.to_file())),
        Command::Lift { model, r } => {
            let before = load_model(model)?;
            let after = before.lift(*r)?;
            let report = check_lift(&before.sphere, &after.sphere, *r)?;
            if !report.passed() {
                return Err(Error::contract("lift failed its contract", report));
            }
            Outcome::ok(Artifact::SphereModel(after.to_file()))
        }
        Command::Refute { model, colouring, random } => {
            let model = load_model(model)?;
            let colourings = match (colouring, random) {
                (Some(path), None) => vec![serde_json::from_str::<KColouring>(&fs::read_to_string(path)?)?],
                (None, Some(count)) => {
                    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
                    let palette = model.sphere.dim() as u32 + 1;
                    (0..*count)
                        .map(|_| KColouring {
                            palette,
                            colours: (0..model.graph.order()).map(|_| rng.gen_range(1..=palette)).collect(),
                        })
                        .collect()
                }
                _ => return Err(Error::domain("refute needs a colouring file or --random N")),
            };
            let refutations = colourings
                .into_iter()
                .map(|c| {
                    let certificate = refute_colouring(&model.sphere, &c)?;
                    Ok(Refutation { colouring: c, certificate })
                })
                .collect::<Result<Vec<_>>>()?;
            Outcome::ok(Artifact::Refutation(RefutationArtifact {
                model: model.to_file(),
                refutations,
            }))
        }
        Command::FanCount { complex, labelling } => {
            let file = load_complex(complex)?;
            let lam: Labelling = serde_json::from_str(&fs::read_to_string(labelling)?)?;
            Outcome::ok(Artifact::FanCount(fan_count(file, lam)?))
        }
        Command::Embed { spec, choose, delta, csv } => {
            let spec = match (spec, choose) {
                (Some(s), None) => s.clone(),
                (None, Some(n)) => choose_rs(*n, delta.expect("clap requires --delta with --choose"))?,
                _ => return Err(Error::domain("embed needs a spec or --choose N --delta D")),
            };
            let embedding = embed_family(&spec)?;
            let report = delta.map(|d| verify_embedding(&embedding, d));
            let status = match &report {
                Some(r) if !r.passed() => EXIT_CONTRACT,
                _ => EXIT_OK,
            };
            let csv = csv.as_ref().map(|p| (p.clone(), embedding.edge_csv()));
            Outcome {
                artifact: Artifact::Embedding(EmbeddingArtifact {
                    embedding,
                    delta: *delta,
                    report,
                }),
                status,
                csv,
                dot: None,
            }
        }
        Command::Verify { artifact } => {
            let parsed: Artifact = serde_json::from_str(&fs::read_to_string(artifact)?)?;
            let report = verify_artifact(&parsed, budget)?;
            let passed = report.passed();
            let mut out = Outcome::ok(Artifact::Verification(VerificationArtifact {
                artifact: parsed.kind().to_string(),
                passed,
                report,
            }));
            if !passed {
                out.status = EXIT_CONTRACT;
            }
            out
        }
        Command::Probe { map, n, delta } => {
            let candidate = load_map(map, *n, *delta)?;
            let report = probe_map(&candidate, *n)?;
            Outcome::ok(Artifact::Probe(ProbeArtifact { candidate, report }))
        }
    })
}

fn emit(cli: &Cli, out: &Outcome) -> Result<()> {
    let mut text = match &out.dot {
        Some(dot) => dot.clone(),
        None => serde_json::to_string_pretty(&out.artifact)?,
    };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    if let Some((path, csv)) = &out.csv {
        fs::write(path, csv)?;
    }
    Ok(())
}

/// Parses `args` (program name first), runs the subcommand and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = execute(&cli).and_then(|out| emit(&cli, &out).map(|_| out.status));
    match result {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
