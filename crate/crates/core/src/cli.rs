//! Command-line front end: mesh loading and generation, dimension tables, ideal dumps.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dimension::{
    argyris_dim, euler_assembly, exact_dimension, lower_bound_51, lower_bound_52, ps_dim_general, star_profile,
    upper_bound_53, vertex_star_dim, DimensionReport, ExactMethod,
};
use crate::error::Error;
use crate::ideals::{edge_ideal, vertex_ideal, EdgeIdealSpec, GradedIdeal, VertexIdealKind};
use crate::mesh::{validate_disk, vertex_ordering, Mesh, MeshDocument, Point, SmoothnessBlock, SmoothnessSpec};
use crate::polyring::LinearForm3;
use crate::refine::{crossed_star, generic_star, morgan_scott_mesh, powell_sabin_6split};

/// Degrees above this need `--allow-high-degree`.
pub const MAX_DEGREE: u32 = 30;

#[derive(Parser, Debug)]
#[command(name = "superspline", version, about = "Dimensions of superspline spaces on planar triangulations")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension (or a bound) per degree.
    Dim(DimArgs),
    /// All columns per degree, one row each.
    Table(DimArgs),
    /// Generators and graded dimensions of an edge or vertex ideal.
    Ideal(IdealArgs),
    /// Powell–Sabin 6-split of a mesh, with its smoothness.
    Refine(RefineArgs),
    /// Print a builtin mesh.
    Gen(GenArgs),
    /// Check that a mesh is a triangulated disk.
    Validate(ValidateArgs),
}

#[derive(Args, Debug)]
struct Source {
    /// Mesh JSON file.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    mesh: Option<PathBuf>,
    /// Builtin mesh: triangle, argyris-demo, morgan-scott, star:<t>-generic, star:crossed, ps6:<builtin>.
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Args, Debug)]
struct Orders {
    /// Smoothness across edges.
    #[arg(short = 'r', long = "r")]
    r: Option<u32>,
    /// Supersmoothness at vertices; defaults to r.
    #[arg(short = 's', long = "s")]
    s: Option<u32>,
}

#[derive(Args, Debug)]
struct DimArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    orders: Orders,
    /// Degree `d` or inclusive range `a..b`.
    #[arg(short = 'd', long = "degree", value_parser = parse_degrees)]
    degrees: Degrees,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, value_enum)]
    method: Option<Method>,
    /// Verify the bound ordering and the Euler identity on every row.
    #[arg(long)]
    check: bool,
    /// Permit degrees above 30.
    #[arg(long)]
    allow_high_degree: bool,
}

#[derive(Args, Debug)]
struct IdealArgs {
    #[arg(long, conflicts_with = "gen")]
    mesh: Option<PathBuf>,
    #[arg(long)]
    gen: Option<String>,
    #[command(flatten)]
    orders: Orders,
    /// Edge ideal in the frame x, y, z, without a mesh.
    #[arg(long, conflicts_with_all = ["mesh", "gen", "edge", "vertex"])]
    canonical_edge: bool,
    /// Edge given by its endpoints, `a,b`.
    #[arg(long, conflicts_with = "vertex", value_parser = parse_pair)]
    edge: Option<(usize, usize)>,
    #[arg(long)]
    vertex: Option<usize>,
    #[arg(long, value_enum, default_value_t = Kind::Full)]
    kind: Kind,
    #[arg(short = 'd', long = "degree", value_parser = parse_degrees)]
    degrees: Degrees,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct RefineArgs {
    #[command(flatten)]
    source: Source,
    #[arg(short = 'r', long = "r")]
    r: u32,
    #[arg(short = 's', long = "s")]
    s: Option<u32>,
}

#[derive(Args, Debug)]
struct GenArgs {
    name: String,
    #[command(flatten)]
    orders: Orders,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[command(flatten)]
    source: Source,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Exact,
    Lb51,
    Lb52,
    Ub53,
    Formula,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Full,
    Bar,
    Tilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Degrees {
    from: u32,
    to: u32,
}

fn parse_degrees(text: &str) -> Result<Degrees, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("not a degree: {t:?}"));
    let (from, to) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(text)?, num(text)?),
    };
    if from > to {
        return Err(format!("empty degree range {from}..{to}"));
    }
    Ok(Degrees { from, to })
}

fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let (a, b) = text.split_once(',').ok_or_else(|| format!("expected a,b, got {text:?}"))?;
    let idx = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("not a vertex index: {t:?}"));
    Ok((idx(a)?, idx(b)?))
}

/// Failure of a command, with its exit status.
#[derive(Debug)]
enum Failure {
    Input(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Invariant(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Inconsistency(msg) => Failure::Invariant(msg),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult<T> = std::result::Result<T, Failure>;

/// Parse `args` (program name first), run, and return the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Dim(a) => run_dim(&a, Method::Exact),
        Command::Table(a) => run_dim(&a, Method::All),
        Command::Ideal(a) => run_ideal(&a),
        Command::Refine(a) => run_refine(&a),
        Command::Gen(a) => run_gen(&a),
        Command::Validate(a) => run_validate(&a),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let (kind, msg) = match &f {
                Failure::Input(m) => ("error", m),
                Failure::Invariant(m) => ("invariant violated", m),
            };
            let _ = writeln!(err, "{kind}: {msg}");
            f.code()
        }
    }
}

/// A loaded mesh and where it came from.
struct Loaded {
    mesh: Mesh,
    block: Option<SmoothnessBlock>,
    /// Original mesh and smoothness of a generated Powell–Sabin split.
    split_of: Option<(Mesh, SmoothnessSpec)>,
}

fn builtin(name: &str) -> CmdResult<Mesh> {
    let bad = || Failure::Input(format!("unknown builtin mesh {name:?}"));
    match name {
        "triangle" => Ok(Mesh::new(
            vec![Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(0, 1)],
            vec![[0, 1, 2]],
        )?),
        "argyris-demo" => Ok(Mesh::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(3, 0),
                Point::from_ints(2, 2),
                Point::from_ints(0, 1),
            ],
            vec![[0, 1, 2], [0, 2, 3]],
        )?),
        "morgan-scott" => Ok(morgan_scott_mesh()),
        "star:crossed" | "crossed-star" => Ok(crossed_star()),
        _ => {
            let t = name
                .strip_prefix("star:")
                .and_then(|rest| rest.strip_suffix("-generic"))
                .ok_or_else(bad)?;
            let t: usize = t.parse().map_err(|_| bad())?;
            Ok(generic_star(t)?)
        }
    }
}

fn load(source: &Source, orders: &Orders) -> CmdResult<Loaded> {
    if let Some(path) = &source.mesh {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
        let doc = MeshDocument::parse(&text)?;
        return Ok(Loaded {
            mesh: doc.to_mesh()?,
            block: doc.smoothness,
            split_of: None,
        });
    }
    let name = source.gen.as_deref().expect("clap requires a mesh source");
    generate(name, orders)
}

fn generate(name: &str, orders: &Orders) -> CmdResult<Loaded> {
    if let Some(base) = name.strip_prefix("ps6:") {
        let base = builtin(base)?;
        let r = orders
            .r
            .ok_or_else(|| Failure::Input("a Powell–Sabin split needs -r".into()))?;
        let s = orders.s.unwrap_or(r);
        let split = powell_sabin_6split(&base, r, s)?;
        let spec = split.spec.clone();
        return Ok(Loaded {
            block: Some(MeshDocument::from_mesh(&split.refined, Some(&spec)).smoothness.expect("block")),
            mesh: split.refined,
            split_of: Some((base, spec)),
        });
    }
    Ok(Loaded {
        mesh: builtin(name)?,
        block: None,
        split_of: None,
    })
}

fn resolve_spec(loaded: &Loaded, orders: &Orders) -> CmdResult<SmoothnessSpec> {
    if let Some((_, spec)) = &loaded.split_of {
        return Ok(spec.clone());
    }
    let m = &loaded.mesh;
    match &loaded.block {
        Some(block) => {
            let r = orders.r.or(block.default_r);
            let s = orders.s.or(block.default_s).or(r);
            let covers_edges = m.interior_edges().all(|e| {
                let (a, b) = m.edges()[e];
                block
                    .edge_r
                    .iter()
                    .any(|&[x, y, _]| (x as usize, y as usize) == (a, b) || (y as usize, x as usize) == (a, b))
            });
            let covers_vertices = (0..m.num_vertices()).all(|v| block.vertex_s.iter().any(|&[w, _]| w as usize == v));
            match (r, s) {
                (Some(r), Some(s)) => Ok(block.to_spec(m, r, s)?),
                _ if covers_edges && covers_vertices => Ok(block.to_spec(m, 0, 0)?),
                _ => Err(Failure::Input("smoothness block is incomplete; pass -r".into())),
            }
        }
        None => {
            let r = orders
                .r
                .ok_or_else(|| Failure::Input("no smoothness in the mesh; pass -r".into()))?;
            Ok(SmoothnessSpec::uniform(m, r, orders.s.unwrap_or(r)))
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
struct Row {
    d: u32,
    h0: Option<i64>,
    lb52: Option<i64>,
    lb51: Option<i64>,
    ub53: Option<i64>,
    exact: Option<i64>,
    method: String,
}

impl From<&DimensionReport> for Row {
    fn from(r: &DimensionReport) -> Self {
        Row {
            d: r.d,
            h0: Some(r.h0),
            lb52: Some(r.lb52),
            lb51: Some(r.lb51),
            ub53: Some(r.ub53),
            exact: Some(r.exact),
            method: r.method.to_string(),
        }
    }
}

/// Closed form for the exact dimension, when one applies.
fn formula_dimension(loaded: &Loaded, spec: &SmoothnessSpec, d: u32) -> CmdResult<Option<i64>> {
    let m = &loaded.mesh;
    if let Some((base, split_spec)) = &loaded.split_of {
        let (r, s) = split_orders(base, split_spec);
        return match ps_dim_general(base, r, s, d) {
            Ok(v) => Ok(Some(v)),
            Err(Error::OutOfRange(_)) => Ok(None),
            Err(e) => Err(e.into()),
        };
    }
    if m.interior_edges().next().is_none() {
        return Ok(Some(((d as i64 + 2) * (d as i64 + 1)) / 2));
    }
    let edge_orders: Vec<u32> = spec.edge_values().values().copied().collect();
    let r = edge_orders[0];
    if edge_orders.iter().any(|&x| x != r) {
        return Ok(None);
    }
    if let Ok(profile) = star_profile(m, r) {
        let s = spec.vertex_s(profile.center);
        let rim_free = (0..m.num_vertices())
            .filter(|&v| v != profile.center)
            .all(|v| spec.vertex_s(v) <= r);
        if rim_free && s >= r {
            return Ok(Some(vertex_star_dim(m, r, s, d)?));
        }
    }
    if spec.uniform_values() == Some((r, 2 * r)) && d == 4 * r + 1 {
        return Ok(Some(argyris_dim(m, r)));
    }
    Ok(None)
}

/// `(r, s)` of a Powell–Sabin split's standard smoothness.
fn split_orders(base: &Mesh, spec: &SmoothnessSpec) -> (u32, u32) {
    let r = spec.edge_values().values().copied().min().unwrap_or(0);
    let s = (0..base.num_vertices()).map(|v| spec.vertex_s(v)).max().unwrap_or(r);
    (r, s)
}

fn compute_rows(loaded: &Loaded, spec: &SmoothnessSpec, args: &DimArgs, method: Method) -> CmdResult<Vec<Row>> {
    let m = &loaded.mesh;
    let mut rows = Vec::new();
    for d in args.degrees.from..=args.degrees.to {
        let full = if method == Method::All || args.check {
            let report = euler_assembly(m, spec, d)?;
            let problems = report.violations();
            if !problems.is_empty() {
                return Err(Failure::Invariant(problems.join("; ")));
            }
            Some(report)
        } else {
            None
        };
        let mut row = Row {
            d,
            ..Row::default()
        };
        match method {
            Method::All => row = Row::from(full.as_ref().expect("report computed")),
            Method::Exact => {
                row.exact = Some(match &full {
                    Some(r) => r.exact,
                    None => exact_dimension(m, spec, d)?,
                });
                row.method = ExactMethod::Oracle.to_string();
            }
            Method::Formula => match formula_dimension(loaded, spec, d)? {
                Some(v) => {
                    if let Some(r) = &full {
                        if r.exact != v {
                            return Err(Failure::Invariant(format!(
                                "d={d}: closed form gives {v}, kernel gives {}",
                                r.exact
                            )));
                        }
                    }
                    row.exact = Some(v);
                    row.method = ExactMethod::Formula.to_string();
                }
                None => {
                    row.exact = Some(match &full {
                        Some(r) => r.exact,
                        None => exact_dimension(m, spec, d)?,
                    });
                    row.method = ExactMethod::Oracle.to_string();
                }
            },
            Method::Lb51 => {
                row.lb51 = Some(lower_bound_51(m, spec, d)?);
                row.method = "lb51".into();
            }
            Method::Lb52 => {
                row.lb52 = Some(lower_bound_52(m, spec, d)?);
                row.method = "lb52".into();
            }
            Method::Ub53 => {
                row.ub53 = Some(upper_bound_53(m, spec, d)?);
                row.method = "ub53".into();
            }
        }
        if let (Some(full), Method::Lb51 | Method::Lb52 | Method::Ub53) = (&full, method) {
            let mut all = Row::from(full);
            all.method = row.method.clone();
            row = all;
        }
        rows.push(row);
    }
    Ok(rows)
}

fn run_dim(args: &DimArgs, default_method: Method) -> CmdResult<String> {
    if args.degrees.to > MAX_DEGREE && !args.allow_high_degree {
        return Err(Failure::Input(format!(
            "degree {} exceeds {MAX_DEGREE}; pass --allow-high-degree to proceed",
            args.degrees.to
        )));
    }
    let loaded = load(&args.source, &args.orders)?;
    let spec = resolve_spec(&loaded, &args.orders)?;
    let rows = compute_rows(&loaded, &spec, args, args.method.unwrap_or(default_method))?;
    render_rows(&rows, args.format)
}

const COLUMNS: [&str; 7] = ["d", "h0", "lb52", "lb51", "ub53", "exact", "method"];

fn cells(row: &Row) -> [String; 7] {
    let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
    [
        row.d.to_string(),
        opt(row.h0),
        opt(row.lb52),
        opt(row.lb51),
        opt(row.ub53),
        opt(row.exact),
        row.method.clone(),
    ]
}

fn render_rows(rows: &[Row], format: Format) -> CmdResult<String> {
    match format {
        Format::Json => to_sorted_json(&rows),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Failure::Input(e.to_string());
            w.write_record(COLUMNS).map_err(io)?;
            for row in rows {
                w.write_record(cells(row)).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Input(e.to_string()))?;
            Ok(String::from_utf8(bytes).expect("csv is utf-8"))
        }
        Format::Text => {
            let body: Vec<[String; 7]> = rows
                .iter()
                .map(|r| {
                    let mut c = cells(r);
                    for cell in c.iter_mut().take(6) {
                        if cell.is_empty() {
                            *cell = "-".into();
                        }
                    }
                    c
                })
                .collect();
            let mut widths = COLUMNS.map(str::len);
            for c in &body {
                for (w, cell) in widths.iter_mut().zip(c) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            let line = |out: &mut String, cells: &[&str]| {
                let mut parts = Vec::new();
                for (i, cell) in cells.iter().enumerate() {
                    if i == 6 {
                        parts.push(cell.to_string());
                    } else {
                        parts.push(format!("{cell:>w$}", w = widths[i]));
                    }
                }
                out.push_str(parts.join("  ").trim_end());
                out.push('\n');
            };
            line(&mut out, &COLUMNS);
            for c in &body {
                let refs: Vec<&str> = c.iter().map(String::as_str).collect();
                line(&mut out, &refs);
            }
            Ok(out)
        }
    }
}

fn to_sorted_json<T: Serialize>(value: &T) -> CmdResult<String> {
    let v = serde_json::to_value(value).map_err(|e| Failure::Input(e.to_string()))?;
    let mut text = serde_json::to_string_pretty(&v).map_err(|e| Failure::Input(e.to_string()))?;
    text.push('\n');
    Ok(text)
}

#[derive(Serialize)]
struct IdealDump {
    generators: Vec<String>,
    dims: BTreeMap<u32, usize>,
}

fn run_ideal(args: &IdealArgs) -> CmdResult<String> {
    if args.degrees.to > MAX_DEGREE {
        return Err(Failure::Input(format!("degree {} exceeds {MAX_DEGREE}", args.degrees.to)));
    }
    let ideal: GradedIdeal = if args.canonical_edge {
        let r = args.orders.r.ok_or_else(|| Failure::Input("pass -r".into()))?;
        let s = args.orders.s.unwrap_or(r);
        let form = |a, b, c| LinearForm3::from_ints(a, b, c).expect("nonzero form");
        edge_ideal(&EdgeIdealSpec {
            ell_tau: form(1, 0, 0),
            ell_gamma: form(0, 1, 0),
            ell_gamma_prime: form(0, 0, 1),
            r,
            s_gamma: s,
            s_gamma_prime: s,
        })?
    } else {
        let source = Source {
            mesh: args.mesh.clone(),
            gen: args.gen.clone(),
        };
        if source.mesh.is_none() && source.gen.is_none() {
            return Err(Failure::Input("pass --mesh, --gen or --canonical-edge".into()));
        }
        let loaded = load(&source, &args.orders)?;
        let spec = resolve_spec(&loaded, &args.orders)?;
        let m = &loaded.mesh;
        match (args.edge, args.vertex) {
            (Some((a, b)), None) => {
                let e = m
                    .edge_id(a, b)
                    .ok_or_else(|| Failure::Input(format!("no edge [{a},{b}]")))?;
                edge_ideal(&EdgeIdealSpec::for_edge(m, &spec, e, a.min(b))?)?
            }
            (None, Some(v)) => {
                let kind = match args.kind {
                    Kind::Full => VertexIdealKind::Full,
                    Kind::Bar => VertexIdealKind::Bar,
                    Kind::Tilde => VertexIdealKind::Tilde,
                };
                let order = if kind == VertexIdealKind::Tilde {
                    Some(vertex_ordering(m)?)
                } else {
                    None
                };
                vertex_ideal(m, &spec, v, kind, order.as_deref())?
            }
            _ => return Err(Failure::Input("select one of --edge or --vertex".into())),
        }
    };
    let dump = IdealDump {
        generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
        dims: (args.degrees.from..=args.degrees.to)
            .map(|d| (d, ideal.graded_dim(d)))
            .collect(),
    };
    match args.format {
        Format::Json => to_sorted_json(&dump),
        Format::Csv => {
            let mut out = String::from("d,dim\n");
            for (d, n) in &dump.dims {
                let _ = writeln!(out, "{d},{n}");
            }
            Ok(out)
        }
        Format::Text => {
            let mut out = String::from("generators:\n");
            for g in &dump.generators {
                let _ = writeln!(out, "  {g}");
            }
            out.push_str("dimensions:\n");
            for (d, n) in &dump.dims {
                let _ = writeln!(out, "  d={d}: {n}");
            }
            Ok(out)
        }
    }
}

fn run_refine(args: &RefineArgs) -> CmdResult<String> {
    let orders = Orders {
        r: Some(args.r),
        s: args.s,
    };
    let loaded = load(&args.source, &orders)?;
    let split = powell_sabin_6split(&loaded.mesh, args.r, args.s.unwrap_or(args.r))?;
    to_sorted_json(&MeshDocument::from_mesh(&split.refined, Some(&split.spec)))
}

fn run_gen(args: &GenArgs) -> CmdResult<String> {
    let loaded = generate(&args.name, &args.orders)?;
    let doc = match (&loaded.split_of, args.orders.r) {
        (Some((_, spec)), _) => MeshDocument::from_mesh(&loaded.mesh, Some(spec)),
        (None, Some(r)) => {
            let spec = SmoothnessSpec::uniform(&loaded.mesh, r, args.orders.s.unwrap_or(r));
            MeshDocument::from_mesh(&loaded.mesh, Some(&spec))
        }
        (None, None) => MeshDocument::from_mesh(&loaded.mesh, None),
    };
    to_sorted_json(&doc)
}

fn run_validate(args: &ValidateArgs) -> CmdResult<String> {
    let loaded = load(
        &args.source,
        &Orders {
            r: Some(0),
            s: None,
        },
    )?;
    let m = &loaded.mesh;
    let check = validate_disk(m);
    if let Some(why) = check.failure {
        return Err(Failure::Input(format!("not a triangulated disk: {why}")));
    }
    let c = m.face_counts();
    let mut out = format!(
        "ok: disk with f0={} f1={} f2={} (interior: {} vertices, {} edges)\n",
        c.f0, c.f1, c.f2, c.f0_interior, c.f1_interior
    );
    if let Some(block) = &loaded.block {
        block.to_spec(m, 0, 0)?;
        out.push_str("smoothness block: ok\n");
    }
    Ok(out)
}
