use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bistellar_core::bistellar::{apply_move, find_bistellar_pairs_with_fresh, middle_move_data, BistellarPair};
use bistellar_core::cluster::{exchange_relations, initial_seed, mutate_seed, presentation};
use bistellar_core::complex::{FaceVector, TriangulatedManifold};
use bistellar_core::error::Error;
use bistellar_core::exchange::{exchange_matrix, exchange_matrix_of, mutate, ExchangeMatrix};
use bistellar_core::graph::{enumerate_class, pair_set, to_dot, to_structured, DEFAULT_NODE_CAP};
use bistellar_core::io::{emit_oriented, matrix_text, parse_facets, parse_manifold, parse_oriented_complex};
use bistellar_core::pl::build_chain_2d;
use bistellar_core::reference::run_reference_checks;
use bistellar_core::semifield::{PositiveRational, Semifield, Trivial, Tropical};
use bistellar_core::simplex::{Simplex, Vertex};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "bistellar", version, about = "Bistellar moves, exchange matrices and cluster algebras of triangulated manifolds")]
struct Cli {
    /// Coefficient semifield for seeds and relations.
    #[arg(long, global = true, value_enum, default_value_t = SemifieldChoice::Trivial)]
    semifield: SemifieldChoice,

    /// Maximum number of triangulations visited by orbit enumeration.
    #[arg(long, global = true, env = "BISTELLAR_NODE_CAP", default_value_t = DEFAULT_NODE_CAP, value_parser = parse_cap)]
    cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Label of the new vertex of a type-0 move (default: largest label + 1).
    #[arg(long, global = true)]
    fresh_vertex: Option<Vertex>,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("cap must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Face vectors, orientability and bistellar pair counts.
    Info { file: PathBuf },
    /// Exchange matrix of a closed manifold or an oriented local complex.
    Bmatrix { file: PathBuf },
    /// Applies the bistellar move at the face `alpha`.
    Move {
        file: PathBuf,
        #[arg(required = true, num_args = 1..)]
        alpha: Vec<Vertex>,
    },
    /// Exchange graph of the middle-move class.
    Orbit { file: PathBuf },
    /// Deduplicated exchange relations of the class.
    Relations { file: PathBuf },
    /// Seed mutation along the middle move at `alpha`.
    Mutate {
        file: PathBuf,
        #[arg(required = true, num_args = 1..)]
        alpha: Vec<Vertex>,
    },
    /// Class algebras of a surface for vertex counts up to `max_vertices`.
    Chain {
        file: PathBuf,
        #[arg(long)]
        max_vertices: usize,
    },
    /// Runs the built-in reference checks.
    VerifyPaper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SemifieldChoice {
    Trivial,
    Tropical,
    Posrat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
    Dot,
}

enum Failure {
    Validation(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Validation(e.to_string())
    }
}

type Outcome = Result<(String, bool), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> Result<TriangulatedManifold, Failure> {
    Ok(parse_manifold(&read(path)?)?)
}

fn no_dot(cli: &Cli) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        return Err(Failure::Usage("--format dot is only available for orbit".into()));
    }
    Ok(())
}

fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn pretty(v: serde_json::Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn fresh(cli: &Cli, k: &TriangulatedManifold) -> Vertex {
    cli.fresh_vertex.unwrap_or(k.vertex_universe() + 1)
}

fn all_pairs(cli: &Cli, k: &TriangulatedManifold) -> Vec<Vec<BistellarPair>> {
    let v = fresh(cli, k);
    (0..=k.dim()).map(|t| find_bistellar_pairs_with_fresh(k, t, v)).collect()
}

fn resolve_pair(cli: &Cli, k: &TriangulatedManifold, alpha: &[Vertex]) -> Result<BistellarPair, Failure> {
    let a = Simplex::new(alpha.iter().copied())?;
    all_pairs(cli, k)
        .into_iter()
        .flatten()
        .find(|p| p.alpha == a)
        .ok_or_else(|| Failure::Validation(format!("{a} is not the first face of a bistellar pair")))
}

fn info(cli: &Cli, file: &Path) -> Outcome {
    no_dot(cli)?;
    let text = read(file)?;
    let k = match parse_manifold(&text) {
        Ok(k) => k,
        Err(e) => {
            let list = parse_facets(&text)?;
            let mut f = Vec::new();
            for size in 1..=list.dim + 1 {
                let faces: BTreeSet<Simplex> = list.facets.iter().flat_map(|s| s.faces_of_size(size)).collect();
                f.push(faces.len() as i64);
            }
            let out = match cli.format {
                Format::Structured => pretty(json!({ "dimension": list.dim, "f": f, "valid": false, "error": e.to_string() })),
                _ => format!("n={}, f={}, not a closed orientable manifold: {e}\n", list.dim, tuple(&f)),
            };
            return Ok((out, false));
        }
    };
    let fv: FaceVector = k.face_vectors();
    let pairs: Vec<usize> = all_pairs(cli, &k).iter().map(|p| p.len()).collect();
    let out = match cli.format {
        Format::Structured => pretty(json!({
            "dimension": k.dim(),
            "vertices": k.vertices().len(),
            "f": fv.f,
            "h": fv.h,
            "g": fv.g,
            "valid": true,
            "orientable": true,
            "pairs": pairs,
        })),
        _ => {
            let mut s = format!("n={}, f={}, orientable\n", k.dim(), tuple(&fv.f));
            writeln!(s, "h={}", tuple(&fv.h)).expect("write to string");
            writeln!(s, "g={}", tuple(&fv.g)).expect("write to string");
            for (t, c) in pairs.iter().enumerate() {
                writeln!(s, "type-{t} pairs: {c}").expect("write to string");
            }
            s
        }
    };
    Ok((out, true))
}

fn render_matrix(cli: &Cli, b: &ExchangeMatrix) -> String {
    match cli.format {
        Format::Structured => pretty(json!({
            "index": b.index().iter().map(|s| s.vertices().to_vec()).collect::<Vec<_>>(),
            "rows": b.rows(),
        })),
        _ => matrix_text(b),
    }
}

fn bmatrix(cli: &Cli, file: &Path) -> Outcome {
    no_dot(cli)?;
    let text = read(file)?;
    let b = match parse_manifold(&text) {
        Ok(k) => exchange_matrix(&k),
        Err(Error::NotClosed { .. }) => exchange_matrix_of(&parse_oriented_complex(&text)?),
        Err(e) => return Err(e.into()),
    };
    Ok((render_matrix(cli, &b), true))
}

fn do_move(cli: &Cli, file: &Path, alpha: &[Vertex]) -> Outcome {
    no_dot(cli)?;
    let k = load(file)?;
    let p = resolve_pair(cli, &k, alpha)?;
    let l = apply_move(&k, &p)?;
    let out = match cli.format {
        Format::Structured => pretty(json!({
            "alpha": p.alpha.vertices(),
            "beta": p.beta.vertices(),
            "dimension": l.dim(),
            "facets": l.facets().map(|f| f.vertices().to_vec()).collect::<Vec<_>>(),
            "signs": l.oriented().signs().values().collect::<Vec<_>>(),
        })),
        _ => format!("# bistellar move at {}\n{}", p.label(), emit_oriented(l.oriented())),
    };
    Ok((out, true))
}

fn orbit(cli: &Cli, file: &Path) -> Outcome {
    let k = load(file)?;
    let g = enumerate_class(&k, cli.cap)?;
    let out = match cli.format {
        Format::Dot => to_dot(&g),
        Format::Structured => to_structured(&g),
        Format::Text => {
            let mut s = format!(
                "{} nodes, {} edges, {} directed pairs\n",
                g.node_count(),
                g.edge_count(),
                pair_set(&g).len()
            );
            writeln!(s, "connected: {}", if g.is_connected() { "yes" } else { "no" }).expect("write to string");
            for (i, n) in g.nodes.iter().enumerate() {
                writeln!(s, "n{i} depth={} {}", g.depth[i], n.key()).expect("write to string");
            }
            for e in &g.edges {
                writeln!(s, "n{} -- n{} {}", e.source, e.target, e.pair.label()).expect("write to string");
            }
            s
        }
    };
    Ok((out, true))
}

fn relations_with<S: Semifield>(cli: &Cli, k: &TriangulatedManifold, s: &S) -> Outcome {
    let g = enumerate_class(k, cli.cap)?;
    let p = presentation(&g, s)?;
    let out = match cli.format {
        Format::Structured => pretty(json!({
            "semifield": s.name(),
            "generators": p.generators.iter().map(|f| f.vertices().to_vec()).collect::<Vec<_>>(),
            "relations": p.relations.iter().map(|r| json!({
                "left": r.left().to_string(),
                "plus": r.plus.to_string(),
                "minus": r.minus.to_string(),
                "p_plus": r.p_plus.to_string(),
                "p_minus": r.p_minus.to_string(),
            })).collect::<Vec<_>>(),
            "coefficient_conflicts": p.coefficient_conflicts.len(),
        })),
        _ => {
            let mut out = format!(
                "{} generators, {} relations ({})\n",
                p.generators.len(),
                p.relations.len(),
                s.name()
            );
            for r in &p.relations {
                writeln!(out, "{r}").expect("write to string");
            }
            if !p.coefficient_conflicts.is_empty() {
                writeln!(out, "coefficient conflicts: {}", p.coefficient_conflicts.len()).expect("write to string");
            }
            out
        }
    };
    Ok((out, true))
}

fn relations(cli: &Cli, file: &Path) -> Outcome {
    no_dot(cli)?;
    let k = load(file)?;
    match cli.semifield {
        SemifieldChoice::Trivial => relations_with(cli, &k, &Trivial),
        SemifieldChoice::Tropical => relations_with(cli, &k, &Tropical),
        SemifieldChoice::Posrat => relations_with(cli, &k, &PositiveRational),
    }
}

fn mutate_with<S: Semifield>(cli: &Cli, k: &TriangulatedManifold, p: &BistellarPair, s: &S) -> Outcome {
    let (frame, sets) = middle_move_data(k, p)?;
    let seed = initial_seed(k, s)?;
    let next = mutate_seed(&seed, s, &frame, &sets)?;
    let mutated = mutate(&exchange_matrix(k), &frame, &sets)?;
    let agrees = mutated == exchange_matrix(&next.host);
    let rels = exchange_relations(&seed, s, &frame, &sets)?;
    let changed: Vec<(&Simplex, String, String)> = next
        .coefficients
        .iter()
        .filter(|(f, c)| seed.coefficients.get(*f).is_none_or(|d| !s.equal(&c.ratio(s), &d.ratio(s))))
        .map(|(f, c)| (f, s.render(&c.plus), s.render(&c.minus)))
        .collect();
    let out = match cli.format {
        Format::Structured => pretty(json!({
            "alpha": p.alpha.vertices(),
            "beta": p.beta.vertices(),
            "semifield": s.name(),
            "matrix_agrees": agrees,
            "index": mutated.index().iter().map(|f| f.vertices().to_vec()).collect::<Vec<_>>(),
            "rows": mutated.rows(),
            "relations": rels.iter().map(|r| r.render(s)).collect::<Vec<_>>(),
            "coefficients": changed.iter().map(|(f, a, b)| json!({ "face": f.vertices(), "plus": a, "minus": b })).collect::<Vec<_>>(),
        })),
        _ => {
            let mut out = format!("mutation at {} over {}\n", p.label(), s.name());
            writeln!(out, "mutated matrix equals B of the moved complex: {}", if agrees { "yes" } else { "no" })
                .expect("write to string");
            out.push_str(&matrix_text(&mutated));
            out.push_str("relations:\n");
            for r in &rels {
                writeln!(out, "  {}", r.render(s)).expect("write to string");
            }
            out.push_str("changed coefficients:\n");
            for (f, a, b) in &changed {
                writeln!(out, "  {f}: p+ = {a}, p- = {b}").expect("write to string");
            }
            out
        }
    };
    Ok((out, agrees))
}

fn do_mutate(cli: &Cli, file: &Path, alpha: &[Vertex]) -> Outcome {
    no_dot(cli)?;
    let k = load(file)?;
    let p = resolve_pair(cli, &k, alpha)?;
    match cli.semifield {
        SemifieldChoice::Trivial => mutate_with(cli, &k, &p, &Trivial),
        SemifieldChoice::Tropical => mutate_with(cli, &k, &p, &Tropical),
        SemifieldChoice::Posrat => mutate_with(cli, &k, &p, &PositiveRational),
    }
}

fn chain(cli: &Cli, file: &Path, max_vertices: usize) -> Outcome {
    no_dot(cli)?;
    let k = load(file)?;
    let c = build_chain_2d(&k, max_vertices, cli.cap)?;
    let out = match cli.format {
        Format::Structured => pretty(json!({
            "levels": c.nodes.iter().map(|n| json!({
                "vertices": n.vertex_count,
                "nodes": n.graph.node_count(),
                "edges": n.graph.edge_count(),
                "generators": n.algebra.generators.len(),
                "relations": n.algebra.relations.len(),
            })).collect::<Vec<_>>(),
            "embeddings": c.embeddings.len(),
        })),
        _ => {
            let mut out = String::new();
            for n in &c.nodes {
                writeln!(
                    out,
                    "m={}: {} nodes, {} edges, {} generators, {} relations",
                    n.vertex_count,
                    n.graph.node_count(),
                    n.graph.edge_count(),
                    n.algebra.generators.len(),
                    n.algebra.relations.len()
                )
                .expect("write to string");
            }
            writeln!(out, "{} embeddings, each preserving relations", c.embeddings.len()).expect("write to string");
            out
        }
    };
    Ok((out, true))
}

fn verify(cli: &Cli) -> Outcome {
    no_dot(cli)?;
    let checks = run_reference_checks();
    let ok = checks.iter().all(|c| c.passed);
    let out = match cli.format {
        Format::Structured => pretty(json!({
            "checks": checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect::<Vec<_>>(),
            "passed": ok,
        })),
        _ => {
            let mut out = String::new();
            for c in &checks {
                writeln!(out, "{c}").expect("write to string");
            }
            let passed = checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed}/{} checks passed", checks.len()).expect("write to string");
            out
        }
    };
    Ok((out, ok))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Info { file } => info(cli, file),
        Command::Bmatrix { file } => bmatrix(cli, file),
        Command::Move { file, alpha } => do_move(cli, file, alpha),
        Command::Orbit { file } => orbit(cli, file),
        Command::Relations { file } => relations(cli, file),
        Command::Mutate { file, alpha } => do_mutate(cli, file, alpha),
        Command::Chain { file, max_vertices } => chain(cli, file, *max_vertices),
        Command::VerifyPaper => verify(cli),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &out) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                print!("{out}");
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
