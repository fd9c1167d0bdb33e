use angopt::io::{format_drawing, named_graph, parse_drawing, parse_edge_list};
use angopt::layout::{layout, LayoutConfig, SpringModel};
use angopt::metrics::{compute_metrics_with_default, Metrics};
use angopt::solver::{solve, DisplacementQuery, GridParams};
use angopt::svg::{render_svg, SvgStyle};
use angopt::{Error, Graph, Point};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Angle-optimizing spring embedder and max-min-angle solver.
#[derive(Parser)]
#[command(name = "angopt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lay out a graph and write the drawing and an SVG.
    Layout(LayoutArgs),
    /// Solve a single max-min-angle displacement instance.
    Solve(SolveArgs),
    /// Report quality metrics of an existing drawing.
    Metrics(MetricsArgs),
    /// Compare layouts with and without the angle force over several seeds.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Linear,
    Logarithmic,
}

#[derive(Args)]
struct ConfigArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    iterations: Option<usize>,
    /// Angle-force radius at the first iteration [default: 0.25 * edge length]
    #[arg(long)]
    radius_start: Option<f64>,
    #[arg(long)]
    radius_decay: Option<f64>,
    #[arg(long)]
    angle_weight: Option<f64>,
    #[arg(long)]
    spring_weight: Option<f64>,
    #[arg(long)]
    repulsion_weight: Option<f64>,
    /// Desired length of edges without an explicit length
    #[arg(long)]
    edge_length: Option<f64>,
    #[arg(long, value_enum)]
    spring_model: Option<Model>,
    /// Intermediate vertices inserted on every edge
    #[arg(long)]
    subdivide: Option<usize>,
    /// Grid step for vertices of degree four or more, as a fraction of the radius
    #[arg(long)]
    grid_ratio: Option<f64>,
}

impl ConfigArgs {
    fn config(&self) -> Result<LayoutConfig> {
        let mut cfg = LayoutConfig {
            seed: self.seed,
            ..LayoutConfig::default()
        };
        if let Some(l) = self.edge_length {
            cfg.default_edge_length = l;
            cfg.angle_radius_start = 0.25 * l;
        }
        if let Some(v) = self.iterations {
            cfg.iterations = v;
        }
        if let Some(v) = self.radius_start {
            cfg.angle_radius_start = v;
        }
        if let Some(v) = self.radius_decay {
            cfg.angle_radius_decay = v;
        }
        if let Some(v) = self.angle_weight {
            cfg.angle_weight = v;
        }
        if let Some(v) = self.spring_weight {
            cfg.spring_weight = v;
        }
        if let Some(v) = self.repulsion_weight {
            cfg.repulsion_weight = v;
        }
        if let Some(m) = self.spring_model {
            cfg.spring_model = match m {
                Model::Linear => SpringModel::Linear,
                Model::Logarithmic => SpringModel::Logarithmic,
            };
        }
        if let Some(v) = self.subdivide {
            cfg.subdivide_edges = v;
        }
        if let Some(v) = self.grid_ratio {
            cfg.grid = GridParams::new(v)?;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct LayoutArgs {
    /// Built-in graph name (petersen, heawood, herschel, cycle:N, path:N,
    /// complete:N) or an edge-list file
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    config: ConfigArgs,
    /// SVG output path
    #[arg(long)]
    out: Option<PathBuf>,
    /// Drawing output path [default: the SVG path with extension .drawing]
    #[arg(long)]
    drawing: Option<PathBuf>,
    /// Per-iteration trace as JSON
    #[arg(long)]
    trace: Option<PathBuf>,
    /// Label vertices in the SVG
    #[arg(long)]
    labels: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct SolveArgs {
    /// Vertex position as x,y
    #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
    p: Point,
    /// Neighbor position as x,y (repeatable)
    #[arg(long = "neighbor", allow_hyphen_values = true, value_parser = parse_point)]
    neighbors: Vec<Point>,
    /// Displacement radius
    #[arg(long)]
    r: f64,
    #[arg(long, default_value_t = 1.0 / 3.0)]
    grid_ratio: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct MetricsArgs {
    #[arg(long)]
    graph: String,
    /// Drawing file with `id x y` lines
    #[arg(long)]
    drawing: PathBuf,
    #[arg(long, default_value_t = 1.0)]
    edge_length: f64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct CompareArgs {
    #[arg(long)]
    graph: String,
    #[command(flatten)]
    config: ConfigArgs,
    /// Number of consecutive seeds starting at --seed
    #[arg(long, default_value_t = 10)]
    seeds: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_point(s: &str) -> std::result::Result<Point, String> {
    let (x, y) = s.split_once(',').ok_or_else(|| format!("expected x,y, got {s:?}"))?;
    let coord = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
    let p = Point::new(coord(x)?, coord(y)?);
    if !p.is_finite() {
        return Err(format!("non-finite point {s:?}"));
    }
    Ok(p)
}

fn load_graph(spec: &str) -> Result<Graph> {
    match named_graph(spec) {
        Ok(g) => Ok(g),
        Err(Error::UnknownGraph(_)) if Path::new(spec).is_file() => {
            let text = fs::read_to_string(spec).with_context(|| format!("reading {spec}"))?;
            parse_edge_list(&text).with_context(|| format!("parsing {spec}"))
        }
        Err(e) => Err(anyhow::Error::new(e).context(format!("{spec:?} is neither a built-in graph nor a file"))),
    }
}

#[derive(Serialize)]
struct MetricsReport {
    angular_resolution_deg: f64,
    angular_resolution: f64,
    edge_length_rmse: f64,
    crossings: usize,
    degenerate_crossings: usize,
    degenerate: bool,
}

impl From<&Metrics> for MetricsReport {
    fn from(m: &Metrics) -> Self {
        Self {
            angular_resolution_deg: m.angular_resolution.to_degrees(),
            angular_resolution: m.angular_resolution,
            edge_length_rmse: m.edge_length_rmse,
            crossings: m.crossings,
            degenerate_crossings: m.degenerate_crossings,
            degenerate: m.degenerate,
        }
    }
}

fn print_metrics(m: &MetricsReport) {
    println!("angular resolution  {:.6} deg", m.angular_resolution_deg);
    println!("edge length rmse    {:.6}", m.edge_length_rmse);
    print!("crossings           {}", m.crossings);
    if m.degenerate_crossings > 0 {
        print!(" ({} degenerate)", m.degenerate_crossings);
    }
    println!();
    if m.degenerate {
        println!("warning: drawing has coincident adjacent vertices");
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

#[derive(Serialize)]
struct LayoutReport<'a> {
    graph: &'a str,
    vertices: usize,
    edges: usize,
    seed: u64,
    iterations_run: usize,
    converged: bool,
    metrics: MetricsReport,
    svg: Option<String>,
    drawing: Option<String>,
}

fn cmd_layout(args: &LayoutArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let cfg = args.config.config()?;
    let res = layout(&g, &cfg)?;
    let m = compute_metrics_with_default(&res.graph, &res.drawing, cfg.default_edge_length)?;

    let drawing_path = args
        .drawing
        .clone()
        .or_else(|| args.out.as_ref().map(|p| p.with_extension("drawing")));
    if let Some(path) = &args.out {
        let style = SvgStyle {
            labels: args.labels,
            ..SvgStyle::default()
        };
        fs::write(path, render_svg(&res.graph, &res.drawing, &style)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &drawing_path {
        fs::write(path, format_drawing(&res.drawing)).with_context(|| format!("writing {}", path.display()))?;
    }
    if let Some(path) = &args.trace {
        fs::write(path, serde_json::to_string_pretty(&res.trace)?)
            .with_context(|| format!("writing {}", path.display()))?;
    }

    let report = LayoutReport {
        graph: &args.graph,
        vertices: res.graph.vertex_count(),
        edges: res.graph.edge_count(),
        seed: cfg.seed,
        iterations_run: res.trace.len(),
        converged: res.converged,
        metrics: MetricsReport::from(&m),
        svg: args.out.as_ref().map(|p| p.display().to_string()),
        drawing: drawing_path.as_ref().map(|p| p.display().to_string()),
    };
    match args.format {
        Format::Json => print_json(&report)?,
        Format::Text => {
            println!(
                "graph               {} ({} vertices, {} edges)",
                report.graph, report.vertices, report.edges
            );
            println!(
                "iterations          {}{}",
                report.iterations_run,
                if report.converged { " (converged)" } else { "" }
            );
            print_metrics(&report.metrics);
            for (label, path) in [("svg", &report.svg), ("drawing", &report.drawing)] {
                if let Some(p) = path {
                    println!("{label:<20}{p}");
                }
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SolveReport {
    p_star: [f64; 2],
    min_angle: f64,
    min_angle_deg: f64,
    method: &'static str,
    degenerate: bool,
}

fn cmd_solve(args: &SolveArgs) -> Result<()> {
    let q = DisplacementQuery::new(args.p, args.neighbors.clone(), args.r)?;
    let res = solve(&q, GridParams::new(args.grid_ratio)?);
    let report = SolveReport {
        p_star: [res.p_star.x, res.p_star.y],
        min_angle: res.min_angle,
        min_angle_deg: res.min_angle.to_degrees(),
        method: res.method.as_str(),
        degenerate: res.degenerate,
    };
    match args.format {
        Format::Json => print_json(&report)?,
        Format::Text => {
            println!("p*         ({:.9}, {:.9})", report.p_star[0], report.p_star[1]);
            println!("min angle  {:.6} deg ({:.9} rad)", report.min_angle_deg, report.min_angle);
            println!("method     {}", report.method);
            if report.degenerate {
                println!("warning: no well-defined incident angle");
            }
        }
    }
    Ok(())
}

fn cmd_metrics(args: &MetricsArgs) -> Result<()> {
    let g = load_graph(&args.graph)?;
    let path = &args.drawing;
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let d = parse_drawing(&text).with_context(|| format!("parsing {}", path.display()))?;
    if !(args.edge_length > 0.0 && args.edge_length.is_finite()) {
        bail!("edge length must be positive, got {}", args.edge_length);
    }
    let m = compute_metrics_with_default(&g, &d, args.edge_length)?;
    match args.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Full<'a, T: Serialize> {
                #[serde(flatten)]
                summary: MetricsReport,
                per_vertex_min_angle: &'a T,
            }
            print_json(&Full {
                summary: MetricsReport::from(&m),
                per_vertex_min_angle: &m.per_vertex_min_angle,
            })?
        }
        Format::Text => print_metrics(&MetricsReport::from(&m)),
    }
    Ok(())
}

#[derive(Serialize)]
struct SeedRow {
    seed: u64,
    off: MetricsReport,
    on: MetricsReport,
}

#[derive(Serialize)]
struct CompareReport<'a> {
    graph: &'a str,
    angle_weight: f64,
    seeds: Vec<SeedRow>,
    median_angular_resolution_deg_off: f64,
    median_angular_resolution_deg_on: f64,
    median_edge_length_rmse_off: f64,
    median_edge_length_rmse_on: f64,
    median_crossings_off: f64,
    median_crossings_on: f64,
}

fn median(mut v: Vec<f64>) -> f64 {
    if v.is_empty() {
        return f64::NAN;
    }
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    }
}

fn cmd_compare(args: &CompareArgs) -> Result<()> {
    if args.seeds == 0 {
        bail!("--seeds must be at least 1");
    }
    let g = load_graph(&args.graph)?;
    let base = args.config.config()?;
    let off_cfg = LayoutConfig {
        angle_weight: 0.0,
        ..base.clone()
    };
    off_cfg.validate().context("the comparison run without angle force needs a positive spring weight")?;
    let run = |cfg: &LayoutConfig| -> Result<MetricsReport> {
        let res = layout(&g, cfg)?;
        let m = compute_metrics_with_default(&res.graph, &res.drawing, cfg.default_edge_length)?;
        Ok(MetricsReport::from(&m))
    };
    let mut rows = Vec::new();
    for k in 0..args.seeds {
        let seed = base.seed.wrapping_add(k);
        rows.push(SeedRow {
            seed,
            off: run(&LayoutConfig { seed, ..off_cfg.clone() })?,
            on: run(&LayoutConfig { seed, ..base.clone() })?,
        });
    }
    let col = |f: &dyn Fn(&SeedRow) -> f64| median(rows.iter().map(f).collect());
    let report = CompareReport {
        graph: &args.graph,
        angle_weight: base.angle_weight,
        median_angular_resolution_deg_off: col(&|r| r.off.angular_resolution_deg),
        median_angular_resolution_deg_on: col(&|r| r.on.angular_resolution_deg),
        median_edge_length_rmse_off: col(&|r| r.off.edge_length_rmse),
        median_edge_length_rmse_on: col(&|r| r.on.edge_length_rmse),
        median_crossings_off: col(&|r| r.off.crossings as f64),
        median_crossings_on: col(&|r| r.on.crossings as f64),
        seeds: rows,
    };
    match args.format {
        Format::Json => print_json(&report)?,
        Format::Text => {
            println!("{:>6}  {:>12} {:>12}  {:>10} {:>10}  {:>5} {:>5}", "seed", "res off", "res on", "rmse off", "rmse on", "x off", "x on");
            for r in &report.seeds {
                println!(
                    "{:>6}  {:>12.4} {:>12.4}  {:>10.4} {:>10.4}  {:>5} {:>5}",
                    r.seed,
                    r.off.angular_resolution_deg,
                    r.on.angular_resolution_deg,
                    r.off.edge_length_rmse,
                    r.on.edge_length_rmse,
                    r.off.crossings,
                    r.on.crossings
                );
            }
            println!(
                "{:>6}  {:>12.4} {:>12.4}  {:>10.4} {:>10.4}  {:>5} {:>5}",
                "median",
                report.median_angular_resolution_deg_off,
                report.median_angular_resolution_deg_on,
                report.median_edge_length_rmse_off,
                report.median_edge_length_rmse_on,
                report.median_crossings_off,
                report.median_crossings_on
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Layout(a) => cmd_layout(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Metrics(a) => cmd_metrics(a),
        Command::Compare(a) => cmd_compare(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
