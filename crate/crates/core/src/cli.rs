//! Command-line front end. Every subcommand renders to a string so output is
//! written in one piece; diagnostics go to stderr from `main`.

use std::fmt::{self, Write as _};
use std::io::Read as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use surfdens::census::{bounds, max_excess, surface_table, CensusInput};
use surfdens::constructions::{lower_bound_graph, split_growth, tree_blowup, Generator};
use surfdens::counting::{
    check_genus_triangle_bound, check_goodman, count_cliques, count_copies_with, count_hom_with,
    count_injective_hom_with, scaling_exponent_with, CountOptions, InequalityCheck,
    DEFAULT_WORK_CAP,
};
use surfdens::embedding::{min_genus_search, EmbeddedGraph};
use surfdens::flap::{
    flap_number_capped, is_strongly_non_planar, max_independent_flaps, tree_beta,
    DEFAULT_FLAP_CAP,
};
use surfdens::spqrk::spqrk_build;
use surfdens::{Error, Graph};

#[derive(Debug, Parser)]
#[command(name = "surfdens", version, about = "Flap-numbers, subgraph counts and clique census for graphs on surfaces")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for counting.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Backtracking node budget for counting.
    #[arg(long, global = true, default_value_t = DEFAULT_WORK_CAP)]
    work_cap: u64,
    /// Vertex cap for the flap-number search.
    #[arg(long, global = true, default_value_t = DEFAULT_FLAP_CAP)]
    size_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Flap-number f(H).
    FlapNumber {
        graph: PathBuf,
        /// Also list a maximum independent flap family.
        #[arg(long)]
        family: bool,
    },
    /// Whether H is strongly non-planar.
    Snp { graph: PathBuf },
    /// β(T) of a tree.
    Beta { tree: PathBuf },
    /// SPQRK tree of a connected graph.
    Spqrk { graph: PathBuf },
    /// Copies of a pattern in a host.
    Count {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
        /// Count injective homomorphisms instead of copies.
        #[arg(long)]
        injective: bool,
    },
    /// Homomorphisms from a pattern to a host.
    Hom {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long)]
        host: PathBuf,
    },
    /// Clique profiles and maximum excess of a list of triangulations.
    Census { embeddings: Vec<PathBuf> },
    /// Maximum clique counts for a surface.
    Table(TableArgs),
    /// Grow a triangulation by triangle splitting.
    Grow {
        /// k4, k6 or an embedding file.
        #[arg(long)]
        seed: String,
        #[arg(long)]
        n: usize,
    },
    /// Build an extremal graph.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Explicit bounds on the maximum number of copies of K_s.
    Bounds {
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
    },
    /// Check a homomorphism inequality on a graph.
    Inequality {
        #[arg(value_enum)]
        which: InequalityKind,
        graph: PathBuf,
        /// Euler genus for the triangle bound.
        #[arg(long, default_value_t = 0)]
        genus: usize,
    },
    /// Log-log slope of pattern counts along a host family.
    Scaling {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        generator: GeneratorKind,
        /// Seed for split-growth: k4, k6 or an embedding file.
        #[arg(long, default_value = "k4")]
        seed: String,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
    /// Euler genus of an embedding, or minimum genus of a graph with --search.
    Genus {
        input: PathBuf,
        #[arg(long)]
        search: bool,
    },
    /// Facial walks of an embedding.
    Faces { embedding: PathBuf },
    /// Contract a reducible edge of a triangulation.
    Contract {
        embedding: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1)]
        edge: Vec<usize>,
    },
    /// Split a path x,v,y at v, or a triangular face.
    Split {
        embedding: PathBuf,
        #[arg(long, value_delimiter = ',', conflicts_with = "face")]
        path: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        face: Option<Vec<usize>>,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum, conflicts_with_all = ["genus", "list"])]
    surface: Option<Surface>,
    #[arg(long, requires = "list")]
    genus: Option<usize>,
    #[arg(long, num_args = 1.., requires = "genus")]
    list: Vec<PathBuf>,
    /// Assert the list holds every irreducible triangulation of the surface.
    #[arg(long)]
    complete: bool,
    /// Surface name for the report.
    #[arg(long)]
    name: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Surface {
    Sphere,
    N1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConstructKind {
    LowerBound,
    TreeBlowup,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InequalityKind {
    Goodman,
    GenusTriangle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GeneratorKind {
    TreeBlowup,
    LowerBound,
    SplitGrowth,
}

#[derive(Debug)]
pub enum CliError {
    Domain(Error),
    Io(String),
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(m) | CliError::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T = String> = std::result::Result<T, CliError>;

fn read_input(path: &Path) -> CliResult {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
    }
}

fn in_file<T>(path: &Path, r: surfdens::Result<T>) -> CliResult<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => CliError::Io(format!("{}: {e}", path.display())),
        other => CliError::Domain(other),
    })
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = read_input(path)?;
    in_file(path, Graph::parse(&text))
}

fn load_embedding(path: &Path) -> CliResult<EmbeddedGraph> {
    let text = read_input(path)?;
    in_file(path, EmbeddedGraph::parse(&text))
}

fn load_seed(seed: &str) -> CliResult<EmbeddedGraph> {
    match seed {
        "k4" => Ok(EmbeddedGraph::tetrahedron()),
        "k6" => Ok(EmbeddedGraph::k6_projective()),
        path => load_embedding(Path::new(path)),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn triple(v: &[usize], what: &str) -> CliResult<[usize; 3]> {
    <[usize; 3]>::try_from(v).map_err(|_| CliError::Usage(format!("--{what} takes three comma-separated vertices")))
}

fn inequality_line(label: Option<&str>, c: &InequalityCheck) -> String {
    let prefix = label.map(|l| format!("form={l} ")).unwrap_or_default();
    format!("{prefix}lhs={} rhs={} holds={}\n", c.lhs, c.rhs, c.holds)
}

pub fn run(cli: &Cli) -> CliResult {
    let opts = CountOptions {
        work_cap: cli.work_cap,
        threads: cli.threads.max(1),
    };
    let json = cli.json;
    let out = match &cli.command {
        Command::FlapNumber { graph, family } => {
            let h = load_graph(graph)?;
            let f = flap_number_capped(&h, cli.size_cap)?;
            let fam = if *family { max_independent_flaps(&h)? } else { Vec::new() };
            if json {
                if *family {
                    to_json(&json!({ "flap_number": f, "family": fam }))
                } else {
                    to_json(&json!({ "flap_number": f }))
                }
            } else {
                let mut s = format!("{f}\n");
                for sep in &fam {
                    let _ = writeln!(s, "{sep}");
                }
                s
            }
        }
        Command::Snp { graph } => {
            let v = is_strongly_non_planar(&load_graph(graph)?);
            if json {
                to_json(&json!({ "strongly_non_planar": v }))
            } else {
                format!("{v}\n")
            }
        }
        Command::Beta { tree } => {
            let b = tree_beta(&load_graph(tree)?)?;
            if json {
                to_json(&json!({ "beta": b }))
            } else {
                format!("{b}\n")
            }
        }
        Command::Spqrk { graph } => {
            let t = spqrk_build(&load_graph(graph)?)?;
            if json {
                to_json(&t)
            } else {
                t.serialize()
            }
        }
        Command::Count { pattern, host, injective } => {
            let (h, g) = (load_graph(pattern)?, load_graph(host)?);
            let c = if *injective {
                count_injective_hom_with(&h, &g, &opts)?
            } else {
                count_copies_with(&h, &g, &opts)?
            };
            if json {
                let key = if *injective { "injective_homomorphisms" } else { "copies" };
                to_json(&json!({ key: c.to_string() }))
            } else {
                format!("{c}\n")
            }
        }
        Command::Hom { pattern, host } => {
            let c = count_hom_with(&load_graph(pattern)?, &load_graph(host)?, &opts)?;
            if json {
                to_json(&json!({ "homomorphisms": c.to_string() }))
            } else {
                format!("{c}\n")
            }
        }
        Command::Census { embeddings } => census(embeddings, json)?,
        Command::Table(args) => table(args, json)?,
        Command::Grow { seed, n } => {
            let e = split_growth(&load_seed(seed)?, *n)?;
            if json {
                to_json(&json!({ "n": e.n(), "embedding": e.serialize() }))
            } else {
                e.serialize()
            }
        }
        Command::Construct { kind, graph, n } => {
            let h = load_graph(graph)?;
            let g = match kind {
                ConstructKind::LowerBound => lower_bound_graph(&h, *n)?,
                ConstructKind::TreeBlowup => tree_blowup(&h, *n)?,
            };
            if json {
                to_json(&json!({ "n": g.n(), "m": g.m(), "edges": g.edges().collect::<Vec<_>>() }))
            } else {
                g.serialize()
            }
        }
        Command::Bounds { genus, s, n } => {
            let b = bounds(*genus, *s, *n)?;
            if json {
                to_json(&b)
            } else {
                format!("lower={} upper={} lower_valid={}\n", b.lower, b.upper, b.lower_valid)
            }
        }
        Command::Inequality { which, graph, genus } => {
            let g = load_graph(graph)?;
            match which {
                InequalityKind::Goodman => {
                    let c = check_goodman(&g)?;
                    if json {
                        to_json(&c)
                    } else {
                        inequality_line(None, &c)
                    }
                }
                InequalityKind::GenusTriangle => {
                    let c = check_genus_triangle_bound(&g, *genus)?;
                    if json {
                        to_json(&c)
                    } else {
                        inequality_line(Some("triangles"), &c.triangles)
                            + &inequality_line(Some("hom"), &c.hom_form)
                    }
                }
            }
        }
        Command::Scaling { graph, generator, seed, sizes } => {
            let h = load_graph(graph)?;
            let gen = match generator {
                GeneratorKind::TreeBlowup => Generator::TreeBlowup,
                GeneratorKind::LowerBound => Generator::LowerBound,
                GeneratorKind::SplitGrowth => Generator::SplitGrowth(load_seed(seed)?),
            };
            let report = scaling_exponent_with(&h, sizes, &mut |n| gen.host(&h, n), &opts)?;
            if json {
                to_json(&report)
            } else {
                let mut s = String::new();
                for i in 0..report.sizes.len() {
                    let _ = writeln!(
                        s,
                        "n={} host_vertices={} count={}",
                        report.sizes[i], report.hosts[i], report.counts[i]
                    );
                }
                let _ = writeln!(s, "slope={:.6}", report.slope);
                s
            }
        }
        Command::Genus { input, search } => {
            if *search {
                let (g, w) = min_genus_search(&load_graph(input)?)?;
                if json {
                    to_json(&json!({ "genus": g, "witness": w.serialize() }))
                } else {
                    format!("{g}\n{}", w.serialize())
                }
            } else {
                let g = load_embedding(input)?.euler_genus()?;
                if json {
                    to_json(&json!({ "genus": g }))
                } else {
                    format!("{g}\n")
                }
            }
        }
        Command::Faces { embedding } => {
            let e = load_embedding(embedding)?;
            let faces = e.trace_faces();
            if json {
                let walks: Vec<Vec<usize>> = faces.iter().map(|f| f.vertices().collect()).collect();
                to_json(&json!({ "faces": faces.len(), "walks": walks }))
            } else {
                let mut s = format!("{}\n", faces.len());
                for f in &faces {
                    let vs: Vec<String> = f.vertices().map(|v| v.to_string()).collect();
                    let _ = writeln!(s, "{}", vs.join(" "));
                }
                s
            }
        }
        Command::Contract { embedding, edge } => {
            let [v, w] = <[usize; 2]>::try_from(edge.as_slice())
                .map_err(|_| CliError::Usage("--edge takes two comma-separated vertices".into()))?;
            let e = load_embedding(embedding)?.contract_reducible(v, w)?;
            emit_embedding(&e, json)
        }
        Command::Split { embedding, path, face } => {
            let e = load_embedding(embedding)?;
            let out = match (path, face) {
                (Some(p), None) => {
                    let [x, v, y] = triple(p, "path")?;
                    e.split_path(x, v, y)?
                }
                (None, Some(f)) => {
                    let [x, v, y] = triple(f, "face")?;
                    e.split_triangle(x, v, y)?
                }
                _ => return Err(CliError::Usage("split needs exactly one of --path or --face".into())),
            };
            emit_embedding(&out, json)
        }
    };
    Ok(out)
}

fn emit_embedding(e: &EmbeddedGraph, json: bool) -> String {
    if json {
        to_json(&json!({ "n": e.n(), "embedding": e.serialize() }))
    } else {
        e.serialize()
    }
}

fn census(paths: &[PathBuf], json: bool) -> CliResult {
    if paths.is_empty() {
        return Err(CliError::Usage("census needs at least one embedding file".into()));
    }
    let list: Vec<EmbeddedGraph> = paths.iter().map(|p| load_embedding(p)).collect::<CliResult<_>>()?;
    let e3 = max_excess(&list, 3)?;
    let e4 = max_excess(&list, 4)?;
    let mut rows = Vec::new();
    for (i, e) in list.iter().enumerate() {
        let g = e.graph();
        let mut counts = Vec::new();
        for s in 3.. {
            let c = count_cliques(&g, s);
            if c == 0u32.into() {
                break;
            }
            counts.push(c);
        }
        let c3 = counts.first().map(|c| c.to_string()).unwrap_or_else(|| "0".into());
        let c4 = counts.get(1).map(|c| c.to_string()).unwrap_or_else(|| "0".into());
        let ex3 = c3.parse::<i64>().unwrap_or(0) - 3 * e.n() as i64;
        let ex4 = c4.parse::<i64>().unwrap_or(0) - e.n() as i64;
        rows.push(json!({
            "index": i,
            "n": e.n(),
            "m": e.m(),
            "genus": e.euler_genus()?,
            "cliques_from_3": counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "excess3": ex3,
            "excess4": ex4,
        }));
    }
    if json {
        return Ok(to_json(&json!({ "triangulations": rows, "phi3": e3, "phi4": e4 })));
    }
    let mut s = String::new();
    for r in &rows {
        let counts: Vec<String> = r["cliques_from_3"]
            .as_array()
            .unwrap()
            .iter()
            .enumerate()
            .map(|(k, c)| format!("C{}={}", k + 3, c.as_str().unwrap()))
            .collect();
        let _ = writeln!(
            s,
            "{}: n={} m={} genus={} {} excess3={} excess4={}",
            r["index"], r["n"], r["m"], r["genus"], counts.join(" "), r["excess3"], r["excess4"]
        );
    }
    let _ = writeln!(s, "phi3={} argmax={:?}", e3.phi, e3.argmax);
    let _ = writeln!(s, "phi4={} argmax={:?}", e4.phi, e4.argmax);
    Ok(s)
}

fn table(args: &TableArgs, json: bool) -> CliResult {
    let input = match (args.surface, args.genus) {
        (Some(Surface::Sphere), None) => CensusInput::sphere(),
        (Some(Surface::N1), None) => CensusInput::projective_plane(),
        (None, Some(g)) => {
            let list: Vec<EmbeddedGraph> = args.list.iter().map(|p| load_embedding(p)).collect::<CliResult<_>>()?;
            let name = args.name.clone().unwrap_or_else(|| format!("genus {g}"));
            CensusInput::new(name, g, list, args.complete)?
        }
        _ => return Err(CliError::Usage("table needs --surface, or --genus with --list".into())),
    };
    let t = surface_table(&input);
    Ok(if json { to_json(&t) } else { t.render() })
}
