use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use repalg::functors::{
    find_symmetrizing_form, coapprox, nakayama_permutation, projective_injective_vertices,
    verify_c_squared_is_nakayama, Symmetry,
};
use repalg::homological::{ext, random_serre_trials};
use repalg::linalg::{fmt_rational, parse_rational, rat};
use repalg::q2::{
    build_q2, classify_weight, ext1_super, induced_character, verify_block, BlockId, SuperModule, Weight,
};
use repalg::quiver::{parse_presentation, to_dot, to_text, truncate, PresentedAlgebra};
use repalg::rep::{Algebra, Representation};
use repalg::Error;

/// Exact computations with finite-dimensional quiver algebras and the
/// block algebras of q(2).
#[derive(Parser)]
#[command(name = "repalg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a presentation, check finite dimensionality and the slf conditions.
    Validate { file: PathBuf },
    /// List a path basis of the algebra, grouped by endpoints.
    Basis { file: PathBuf },
    /// Print the Cartan matrix, entry (i, j) = dim e_i A e_j.
    Cartan { file: PathBuf },
    /// Radical layers of P(v), S(v) or I(v).
    Loewy {
        file: PathBuf,
        #[arg(long)]
        module: String,
    },
    /// Search for a nondegenerate symmetric trace form.
    Symmetric {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The permutation sending i to the socle vertex of P(i).
    NakayamaPerm {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Partial coapproximation with respect to the projective-injectives.
    Coapprox {
        file: PathBuf,
        #[arg(long)]
        module: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check that coapproximation applied twice agrees with the Nakayama functor on projectives.
    C2Check {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Dimension of Ext^n between two modules.
    Ext {
        file: PathBuf,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Serre duality on random pairs of perfect complexes.
    SerreCheck {
        file: PathBuf,
        #[arg(long, env = "SERRE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Computations specific to q(2).
    #[command(subcommand)]
    Q2(Q2Command),
    /// Emit the quiver of a presentation in DOT.
    Dot { file: PathBuf },
}

#[derive(Args)]
struct BlockArgs {
    /// a, b, c, d or strongly-typical, typical, half-integer-atypical, principal.
    id: BlockId,
    #[arg(long, default_value_t = 6)]
    truncate: usize,
}

#[derive(Subcommand)]
enum Q2Command {
    /// Print the presentation of a block algebra.
    Block {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long)]
        dot: bool,
    },
    /// Check projective structure, symmetry and biseriality of a block.
    Verify {
        #[command(flatten)]
        block: BlockArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Ext^1 between the trivial module and its parity shift.
    Ext1,
    /// Character data for P(λ^k), λ^k = (k, -k).
    Characters {
        #[arg(long)]
        k: String,
    },
    /// Route a highest weight "l1,l2" to its block.
    Classify { weight: String },
}

/// A finished command: its report and whether the checked property held.
struct Outcome {
    report: String,
    holds: bool,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome { report, holds: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.report);
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Undetermined(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load(path: &Path) -> repalg::Result<Algebra> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
    let p = parse_presentation(&text)?;
    Ok(Arc::new(PresentedAlgebra::from_presentation(&p)?))
}

fn vertex(alg: &PresentedAlgebra, name: &str) -> repalg::Result<usize> {
    let q = alg.quiver();
    q.vertex(name)
        .or_else(|| name.parse::<usize>().ok().filter(|&i| i < q.vertex_count()))
        .ok_or_else(|| Error::UnknownVertex(name.to_string()))
}

/// `P(v)`, `S(v)` or `I(v)` with `v` a label or an index.
fn module(alg: &Algebra, spec: &str) -> repalg::Result<Representation> {
    let spec = spec.trim();
    let bad = || Error::Invalid(format!("module must be P(v), S(v) or I(v), got {spec:?}"));
    let inner = spec
        .get(2..spec.len().saturating_sub(1))
        .filter(|_| spec.len() > 3 && spec.as_bytes()[1] == b'(' && spec.ends_with(')'))
        .ok_or_else(bad)?;
    let v = vertex(alg, inner)?;
    match &spec[..1] {
        "P" => Ok(Representation::projective(alg, v)),
        "S" => Ok(Representation::simple(alg, v)),
        "I" => Ok(Representation::injective(alg, v)),
        _ => Err(bad()),
    }
}

fn labels(alg: &PresentedAlgebra, vs: &[usize]) -> String {
    let q = alg.quiver();
    vs.iter().map(|&v| q.label(v)).collect::<Vec<_>>().join(" ")
}

/// Layers as centred lines of vertex labels, top first.
fn render_layers(alg: &PresentedAlgebra, layers: &[Vec<usize>]) -> String {
    let q = alg.quiver();
    let lines: Vec<String> = layers
        .iter()
        .map(|layer| {
            let mut names = Vec::new();
            for (v, &m) in layer.iter().enumerate() {
                names.extend(std::iter::repeat_n(q.label(v), m));
            }
            names.join("  ")
        })
        .collect();
    let width = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for l in lines {
        let pad = (width - l.chars().count()) / 2;
        let _ = writeln!(out, "  {}{l}", " ".repeat(pad));
    }
    out
}

fn describe_module(alg: &Algebra, m: &Representation) -> String {
    let mut out = String::new();
    let dims: Vec<String> = m.dims().iter().map(usize::to_string).collect();
    let _ = writeln!(out, "dims: {}", dims.join(" "));
    let _ = writeln!(out, "dimension: {}", m.total_dim());
    let _ = writeln!(out, "loewy length: {}", m.loewy_length());
    let _ = writeln!(out, "layers:");
    out.push_str(&render_layers(alg, &m.loewy_layers()));
    out
}

fn run(command: Command) -> repalg::Result<Outcome> {
    match command {
        Command::Validate { file } => {
            let alg = load(&file)?;
            let slf = alg.slf_report();
            let mut out = String::new();
            let _ = writeln!(out, "vertices: {}", alg.vertex_count());
            let _ = writeln!(out, "arrows: {}", alg.quiver().arrow_count());
            let _ = writeln!(out, "relations: {}", alg.relations().len());
            let _ = writeln!(out, "dimension: {}", alg.dim());
            let _ = writeln!(out, "nilpotency index: {}", alg.nilpotency_index());
            let _ = writeln!(out, "basic: {}", slf.basic);
            let _ = writeln!(out, "finite hom spaces: {}", slf.finite_hom_spaces);
            let _ = writeln!(out, "locally finite support: {}", slf.locally_finite_support);
            let _ = writeln!(out, "local endomorphisms: {}", slf.local_endomorphisms);
            let _ = writeln!(out, "direct sum: {}", slf.direct_sum);
            Ok(Outcome {
                report: out,
                holds: slf.all_hold(),
            })
        }
        Command::Basis { file } => {
            let alg = load(&file)?;
            let q = alg.quiver();
            let mut out = String::new();
            let _ = writeln!(out, "dimension: {}", alg.dim());
            for i in 0..alg.vertex_count() {
                for j in 0..alg.vertex_count() {
                    let paths: Vec<String> = alg
                        .block(i, j)
                        .iter()
                        .map(|&b| alg.basis()[b].display(q))
                        .collect();
                    if !paths.is_empty() {
                        let _ = writeln!(out, "{} -> {}: {}", q.label(i), q.label(j), paths.join(", "));
                    }
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Cartan { file } => {
            let alg = load(&file)?;
            let c = alg.cartan_matrix();
            let n = c.len();
            let mut out = String::new();
            let _ = writeln!(out, "vertices: {}", labels(&alg, &(0..n).collect::<Vec<_>>()));
            for (i, row) in c.iter().enumerate() {
                let r: Vec<String> = row.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "{}: {}", alg.quiver().label(i), r.join(" "));
            }
            let symmetric = (0..n).all(|i| (0..n).all(|j| c[i][j] == c[j][i]));
            let _ = writeln!(out, "symmetric: {symmetric}");
            Ok(Outcome::ok(out))
        }
        Command::Loewy { file, module: spec } => {
            let alg = load(&file)?;
            let m = module(&alg, &spec)?;
            let mut out = format!("module: {spec}\n");
            out.push_str(&describe_module(&alg, &m));
            Ok(Outcome::ok(out))
        }
        Command::Symmetric { file, seed } => {
            let alg = load(&file)?;
            Ok(match find_symmetrizing_form(&alg, seed)? {
                Symmetry::Symmetric(form) => {
                    let q = alg.quiver();
                    let mut out = String::from("symmetric: true\nform:\n");
                    for (b, v) in form.values.iter().enumerate() {
                        if *v != rat(0) {
                            let _ = writeln!(out, "  {} -> {}", alg.basis()[b].display(q), fmt_rational(v));
                        }
                    }
                    Outcome::ok(out)
                }
                Symmetry::NotSymmetric(reason) => Outcome {
                    report: format!("not symmetric\nreason: {reason}\n"),
                    holds: false,
                },
            })
        }
        Command::NakayamaPerm { file, seed } => {
            let alg = load(&file)?;
            match nakayama_permutation(&alg, seed) {
                Ok(perm) => {
                    let q = alg.quiver();
                    let mut out = String::new();
                    for (i, &j) in perm.iter().enumerate() {
                        let _ = writeln!(out, "{} -> {}", q.label(i), q.label(j));
                    }
                    let identity = perm.iter().enumerate().all(|(i, &j)| i == j);
                    let _ = writeln!(out, "identity: {identity}");
                    Ok(Outcome::ok(out))
                }
                Err(Error::NotSelfInjective(reason)) => Ok(Outcome {
                    report: format!("not self-injective\nreason: {reason}\n"),
                    holds: false,
                }),
                Err(e) => Err(e),
            }
        }
        Command::Coapprox { file, module: spec, seed } => {
            let alg = load(&file)?;
            let m = module(&alg, &spec)?;
            let projinj = projective_injective_vertices(&alg, seed)?;
            let c = coapprox(&m, &projinj)?.module;
            let mut out = format!("module: {spec}\nprojective-injective: {}\n", labels(&alg, &projinj));
            out.push_str(&describe_module(&alg, &c));
            Ok(Outcome::ok(out))
        }
        Command::C2Check { file, seed } => {
            let alg = load(&file)?;
            let projinj = projective_injective_vertices(&alg, seed)?;
            let verdicts = verify_c_squared_is_nakayama(&alg, &projinj, seed)?;
            let q = alg.quiver();
            let mut out = format!("projective-injective: {}\n", labels(&alg, &projinj));
            for v in &verdicts {
                let dims = |d: &[usize]| d.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                let _ = writeln!(
                    out,
                    "P({}): C^2 dims {} | N dims {} | {}",
                    q.label(v.vertex),
                    dims(&v.c_squared_dims),
                    dims(&v.nakayama_dims),
                    if v.holds() {
                        "isomorphic".to_string()
                    } else {
                        format!("not isomorphic: {}", v.reason.as_deref().unwrap_or("?"))
                    }
                );
            }
            let holds = verdicts.iter().all(|v| v.holds());
            let _ = writeln!(out, "holds: {holds}");
            Ok(Outcome { report: out, holds })
        }
        Command::Ext { file, from, to, degree } => {
            let alg = load(&file)?;
            let m = module(&alg, &from)?;
            let n = module(&alg, &to)?;
            let d = ext(&m, &n, degree);
            Ok(Outcome::ok(format!("dim Ext^{degree}({from}, {to}) = {d}\n")))
        }
        Command::SerreCheck { file, seed, trials } => {
            let alg = load(&file)?;
            let runs = random_serre_trials(&alg, seed, trials)?;
            let mut out = format!("seed: {seed}\ntrials: {trials}\n");
            let mut holds = true;
            for (t, (_, _, report)) in runs.iter().enumerate() {
                let parts: Vec<String> = report
                    .shifts
                    .iter()
                    .map(|(k, a, b)| format!("[{k}] {a}/{b}"))
                    .collect();
                let verdict = if report.holds() { "ok" } else { "FAIL" };
                let _ = writeln!(out, "trial {t}: {verdict} {}", parts.join(" "));
                holds &= report.holds();
            }
            let _ = writeln!(out, "holds: {holds}");
            Ok(Outcome { report: out, holds })
        }
        Command::Q2(cmd) => run_q2(cmd),
        Command::Dot { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", file.display())))?;
            let p = parse_presentation(&text)?;
            Ok(Outcome::ok(to_dot(&p)))
        }
    }
}

fn run_q2(cmd: Q2Command) -> repalg::Result<Outcome> {
    match cmd {
        Q2Command::Block { block, dot } => {
            let t = truncate(block.id, block.truncate)?;
            let p = t.algebra.presentation();
            if dot {
                return Ok(Outcome::ok(to_dot(&p)));
            }
            let mut out = format!("# block {} ({})", block.id.letter(), block.id.name());
            if block.id.is_infinite() {
                let _ = write!(out, ", {} columns", block.truncate);
            }
            out.push('\n');
            out.push_str(&to_text(&p));
            Ok(Outcome::ok(out))
        }
        Q2Command::Verify { block, seed } => {
            let report = verify_block(block.id, block.truncate, seed)?;
            let holds = report.all_pass();
            Ok(Outcome {
                report: format!("{report}holds: {holds}\n"),
                holds,
            })
        }
        Q2Command::Ext1 => {
            let g = build_q2();
            let d = ext1_super(&g, &SuperModule::trivial(&g, false), &SuperModule::trivial(&g, true));
            Ok(Outcome::ok(format!("dim Ext¹(L(0), ΠL(0)) = {d}\n")))
        }
        Q2Command::Characters { k } => {
            let k = parse_rational(&k).ok_or_else(|| Error::Invalid(format!("not a rational number: {k}")))?;
            let data = induced_character(&k)?;
            let fmt_dec = |d: &[(Weight, i64)]| {
                d.iter()
                    .map(|(w, m)| format!("{m} N{w}"))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            let mut out = String::new();
            let _ = writeln!(out, "k: {}", fmt_rational(&k));
            let _ = writeln!(out, "dim N(λ^k): {}", data.induced.dim() / 16);
            let _ = writeln!(out, "dim Ind N(λ^k): {}", data.dim());
            let _ = writeln!(out, "dim P(λ^k): {}", data.projective.dim());
            let _ = writeln!(out, "P even part: {}", fmt_dec(&data.even_decomposition));
            let _ = writeln!(out, "P odd part: {}", fmt_dec(&data.odd_decomposition));
            let _ = writeln!(out, "length P(λ^k): {}", data.length);
            Ok(Outcome::ok(out))
        }
        Q2Command::Classify { weight } => {
            let parts: Vec<&str> = weight.split(',').map(str::trim).collect();
            let coords: Option<Vec<_>> = parts.iter().map(|s| parse_rational(s)).collect();
            let coords = coords
                .filter(|c| c.len() == 2)
                .ok_or_else(|| Error::Invalid(format!("weight must be l1,l2, got {weight:?}")))?;
            let w = Weight::new(coords[0].clone(), coords[1].clone());
            let c = classify_weight(&w)?;
            let mut out = String::new();
            let _ = writeln!(out, "weight: {w}");
            let _ = writeln!(out, "typical: {}", c.typical);
            let _ = writeln!(out, "parity self-dual: {}", c.parity_self_dual);
            let _ = writeln!(out, "block: {} ({})", c.block.letter(), c.block.name());
            if c.heuristic {
                let _ = writeln!(out, "note: strong typicality decided by the heuristic l1*l2 != 0");
            }
            Ok(Outcome::ok(out))
        }
    }
}
