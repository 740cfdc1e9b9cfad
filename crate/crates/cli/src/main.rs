//! `polycontact`: build, verify, analyze and export polygon contact scenes.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error, 3 construction
//! precondition violated.

mod export;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use polycontact::graph::graph_from_edge_list;
use polycontact::hypergraph::{builtin_system, hypergraph_from_block_list, validate_steiner, Hypergraph, SteinerDescriptor};
use polycontact::oneplanar3d::OnePlaneEmbedding;
use polycontact::steiner::{self, FanoParams, S239Params};
use polycontact::verify::grid_extent_any;
use polycontact::{bip3d, cubic3d, cyclesq3d, gen3d, graph::families, verify_any, AnyScene, Error, Graph};

use export::View;

#[derive(Parser)]
#[command(name = "polycontact", version, about = "Contact representations of graphs by polygons in 3D")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a scene for a graph or hypergraph class and verify it.
    Represent(RepresentArgs),
    /// Verify a scene file; exit status 0 iff it passes.
    Verify {
        file: PathBuf,
        #[arg(long)]
        epsilon: Option<f64>,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Combinatorial and geometric analyses.
    Analyze(AnalyzeArgs),
    /// Write scene geometry as OBJ or SVG.
    Export {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long, value_enum, default_value = "xy")]
        view: View,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Summarize a scene file.
    Info { file: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Class {
    Complete,
    Mindeg3,
    BipartiteToroidal,
    BipartiteGrid,
    K33,
    OneplanarCubic,
    #[value(name = "cubic-2ec")]
    Cubic2ec,
    Cubic,
    Maxdeg3,
    CycleSquare,
    Fano,
    S239,
}

#[derive(clap::Args)]
struct RepresentArgs {
    #[arg(long, value_enum)]
    class: Class,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Edge list, or a 1-plane embedding in JSON for `oneplanar-cubic`.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Rotation of the Fano top triangle in degrees.
    #[arg(long)]
    alpha: Option<f64>,
    /// Rotation of the `S(2,3,9)` top triangle in degrees.
    #[arg(long)]
    beta: Option<f64>,
    #[arg(long, short)]
    output: Option<PathBuf>,
    #[arg(long)]
    no_verify: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Obj,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Analysis {
    /// Search a Steiner quadruple system on ten points for the obstruction pattern.
    FPattern,
    /// Link-graph counting certificate for a Steiner quadruple system.
    Counting,
    /// Largest set of coplanar contact points of a scene.
    CoplanarPoints,
    /// Polygon pairs of a scene sharing a supporting plane.
    CoplanarPolygons,
    /// Check a block list against Steiner parameters.
    SteinerCheck,
}

#[derive(clap::Args)]
struct AnalyzeArgs {
    #[arg(value_enum)]
    analysis: Analysis,
    /// Block list or scene file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in block table: S237, S239, S348, S3410 or PG3.
    #[arg(long)]
    system: Option<String>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    epsilon: Option<f64>,
}

enum Failure {
    Verification,
    Usage(anyhow::Error),
    Construction(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(Error::Precondition(_) | Error::Bridge { .. } | Error::NonPlanar(_) | Error::Construction(_)) => Failure::Construction(e),
            _ => Failure::Usage(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

type Outcome = std::result::Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Represent(args) => represent(args),
        Command::Verify { file, epsilon, json } => verify(&file, epsilon, json),
        Command::Analyze(args) => analyze(args),
        Command::Export { file, format, view, output } => export(&file, format, view, output.as_deref()),
        Command::Info { file } => info(&file),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Construction(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display())).map_err(Failure::Usage)
}

fn write_out(output: Option<&Path>, text: &str) -> Outcome {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())).map_err(Failure::Usage),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn need<T>(v: Option<T>, flag: &str, class: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(anyhow::anyhow!("--{flag} is required for {class}")))
}

fn input_graph(args: &RepresentArgs) -> Result<Graph, Failure> {
    let path = need(args.input.as_deref(), "input", "this class")?;
    let g = graph_from_edge_list(&read(path)?).with_context(|| format!("parsing {}", path.display())).map_err(Failure::Usage)?;
    Ok(g)
}

fn load_scene(path: &Path) -> Result<AnyScene, Failure> {
    AnyScene::from_json(&read(path)?).with_context(|| format!("parsing {}", path.display())).map_err(Failure::Usage)
}

fn represent(args: RepresentArgs) -> Outcome {
    let scene: AnyScene = match args.class {
        Class::Complete => gen3d::represent_complete(need(args.n, "n", "complete")?)?.into(),
        Class::Mindeg3 => gen3d::represent_min_degree3(&input_graph(&args)?)?.into(),
        Class::BipartiteToroidal => {
            let g = families::complete_bipartite(need(args.a, "a", "bipartite-toroidal")?, need(args.b, "b", "bipartite-toroidal")?);
            bip3d::represent_bipartite_toroidal(&g)?.into()
        }
        Class::BipartiteGrid => {
            let g = families::complete_bipartite(need(args.a, "a", "bipartite-grid")?, need(args.b, "b", "bipartite-grid")?);
            bip3d::represent_bipartite_grid(&g)?.into()
        }
        Class::K33 => bip3d::represent_k33_unit_triangles()?.into(),
        Class::OneplanarCubic => {
            let path = need(args.input.as_deref(), "input", "oneplanar-cubic")?;
            let e = OnePlaneEmbedding::from_json(&read(path)?)
                .with_context(|| format!("parsing {}", path.display()))
                .map_err(Failure::Usage)?;
            polycontact::oneplanar3d::represent_oneplanar_cubic(&e)?.into()
        }
        Class::Cubic2ec => cubic3d::represent_2ec_cubic(&input_graph(&args)?)?.into(),
        Class::Cubic => cubic3d::represent_cubic(&input_graph(&args)?)?.into(),
        Class::Maxdeg3 => cubic3d::represent_max_degree3(&input_graph(&args)?)?.into(),
        Class::CycleSquare => cyclesq3d::represent_cycle_square(need(args.n, "n", "cycle-square")?)?.into(),
        Class::Fano => {
            let p = FanoParams { alpha: args.alpha.unwrap_or(FanoParams::default().alpha) };
            steiner::represent_fano(p)?.into()
        }
        Class::S239 => {
            let p = S239Params { beta: args.beta.unwrap_or(S239Params::default().beta), ..S239Params::default() };
            steiner::represent_s239(p)?.into()
        }
    };
    write_out(args.output.as_deref(), &(scene.to_json() + "\n"))?;
    if args.no_verify {
        return Ok(());
    }
    let report = verify_any(&scene, None);
    eprint!("{}", report.to_text());
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify(file: &Path, epsilon: Option<f64>, json: bool) -> Outcome {
    let scene = load_scene(file)?;
    let report = verify_any(&scene, epsilon);
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn blocks(args: &AnalyzeArgs) -> Result<Hypergraph, Failure> {
    match (&args.system, &args.input) {
        (Some(name), _) => Ok(builtin_system(name)?),
        (None, Some(path)) => {
            Ok(hypergraph_from_block_list(&read(path)?).with_context(|| format!("parsing {}", path.display())).map_err(Failure::Usage)?)
        }
        (None, None) => Err(Failure::Usage(anyhow::anyhow!("give --input FILE or --system NAME"))),
    }
}

fn analyze(args: AnalyzeArgs) -> Outcome {
    match args.analysis {
        Analysis::FPattern => {
            let h = blocks(&args)?;
            match steiner::find_obstruction_pattern(&h)? {
                Some(a) => println!("found: {}", a.describe()),
                None => println!("no assignment"),
            }
        }
        Analysis::Counting => {
            let h = blocks(&args)?;
            let d = SteinerDescriptor::new(3, 4, h.n())?;
            let cert = steiner::counting_certificate(&h, d)?;
            println!("{}", serde_json::to_string_pretty(&cert).expect("certificate serializes"));
        }
        Analysis::SteinerCheck => {
            let h = blocks(&args)?;
            let t = need(args.t, "t", "steiner-check")?;
            let k = need(args.k, "k", "steiner-check")?;
            let v = validate_steiner(&h, SteinerDescriptor::new(t, k, h.n())?);
            if v.valid {
                println!("valid S({t},{k},{})", h.n());
            } else {
                println!("invalid: {}", v.reason.unwrap_or_default());
                return Err(Failure::Verification);
            }
        }
        Analysis::CoplanarPoints | Analysis::CoplanarPolygons => {
            let path = need(args.input.as_deref(), "input", "scene analyses")?;
            let scene = load_scene(path)?;
            let eps = args.epsilon.unwrap_or(scene.meta().epsilon);
            if args.analysis == Analysis::CoplanarPoints {
                let (count, elements) = match &scene {
                    AnyScene::Exact(s) => steiner::max_coplanar_vertices(s, 0.0).map(|w| (w.count, w.elements))?,
                    AnyScene::Float(s) => steiner::max_coplanar_vertices(s, eps).map(|w| (w.count, w.elements))?,
                };
                println!("{count} coplanar contact points: {}", elements.join(" "));
            } else {
                let pairs = match &scene {
                    AnyScene::Exact(s) => steiner::coplanar_polygon_pairs(s, 0.0),
                    AnyScene::Float(s) => steiner::coplanar_polygon_pairs(s, eps),
                };
                println!("{} coplanar polygon pairs", pairs.len());
                for (p, q) in pairs {
                    println!("{p} {q}");
                }
            }
        }
    }
    Ok(())
}

fn export(file: &Path, format: Format, view: View, output: Option<&Path>) -> Outcome {
    let polys = load_scene(file)?.float_polygons();
    let text = match format {
        Format::Obj => export::to_obj(&polys),
        Format::Svg => export::to_svg(&polys, view),
    };
    write_out(output, &text)
}

fn info(file: &Path) -> Outcome {
    let scene = load_scene(file)?;
    let meta = scene.meta();
    let polys = scene.float_polygons();
    let g = grid_extent_any(&scene).counts;
    println!("kind: {}", scene.structure().kind());
    println!("construction: {}", meta.construction);
    println!("arithmetic: {:?}", meta.arithmetic);
    println!("polygons: {}", polys.len());
    println!("max corners: {}", polys.iter().map(|p| p.1.len()).max().unwrap_or(0));
    println!("grid extent: {} x {} x {}", g[0], g[1], g[2]);
    if let Some(b) = meta.grid_bounds {
        println!("claimed grid bounds: {} x {} x {}", b[0], b[1], b[2]);
    }
    Ok(())
}
