//! Command-line surface. Every subcommand writes one JSON document with a
//! `schema` field; exit status is 0 on success, 2 when a published fact of an
//! example fails, 3 on bad input.

pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::clifford::SemidirectDatum;
use crate::error::{Error, Result};
use crate::exquo::{extended_quotient_first, fiber_cardinality, piece_count};
use crate::fingrp::{close_group, conjugacy_classes, FinGroup, GroupElement, Perm, TabulatedGroup};
use crate::intlat::{cokernel_structure, smith_normal_form, IntMatrix};
use crate::langlands::{build_phi, eval_phi, Partition, PrincipalSeries};
use crate::torus::{MonomialAction, Scalar, TorusPoint};
use crate::weyl::{compute_ws, weyl_group, InertialDatum, RootDatum, WsMode};
use report::{ExampleReport, SCHEMA};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PUBLISHED_FAILURE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "exq", version, about = "Extended quotients and principal-series labels in exact arithmetic")]
pub struct Cli {
    /// Largest group the closure routines may build.
    #[arg(long, global = true, env = "EXQ_BOUND", default_value_t = crate::fingrp::DEFAULT_BOUND)]
    pub bound: usize,
    /// Write the JSON report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    Roots,
    Stabilizer,
}

impl From<Mode> for WsMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Roots => WsMode::Roots,
            Mode::Stabilizer => WsMode::Stabilizer,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GroupQuery {
    Classes,
    Chartable,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ExampleName {
    Sl4,
    Gln,
    LowestCell,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Smith normal form `U A V = D` of an integer matrix.
    Snf { file: PathBuf },
    /// Conjugacy classes or character table of a generated group.
    Group {
        query: GroupQuery,
        #[arg(long)]
        generators: PathBuf,
    },
    /// The group `W^s` of an inertial datum.
    Ws {
        #[arg(long)]
        datum: String,
        #[arg(long)]
        chi: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "roots")]
        mode: Mode,
    },
    /// Pieces of the extended quotient of the first kind.
    Components {
        #[arg(long)]
        datum: String,
        #[arg(long = "ws-chi", alias = "chi")]
        ws_chi: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "roots")]
        mode: Mode,
    },
    /// Fibers of both extended quotients over the orbit of a point.
    Fiber {
        #[arg(long)]
        datum: String,
        #[arg(long)]
        point: PathBuf,
        #[arg(long)]
        chi: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "roots")]
        mode: Mode,
    },
    /// Clifford labels of `Gamma1 x| Gamma` and the cocycle verdict.
    Clifford {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        action: PathBuf,
    },
    /// Assemble a `GL(n)` parameter and evaluate it.
    Lparam {
        #[arg(long)]
        chi: Option<PathBuf>,
        #[arg(long = "t", alias = "point")]
        t: PathBuf,
        #[arg(long)]
        lambda: String,
        /// `mag:angle`, both rationals, e.g. `3/2:1/4`.
        #[arg(long)]
        alpha: Vec<String>,
    },
    /// L-packet classes among the second-kind points over given points.
    Lpackets {
        #[arg(long, alias = "point")]
        points: PathBuf,
        #[arg(long, default_value = "GL3")]
        datum: String,
        #[arg(long)]
        chi: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "roots")]
        mode: Mode,
    },
    /// Built-in example suites.
    Example {
        name: ExampleName,
        /// Rank for `gln`, between 1 and 6.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Root datum for `lowest-cell`: a built-in name or a JSON file.
        #[arg(long, default_value = "GL3")]
        datum: String,
        /// Inertial datum for `lowest-cell`, as a JSON file of generators.
        #[arg(long)]
        chi: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "roots")]
        mode: Mode,
    },
}

/// Outcome of a subcommand: the JSON document and the exit status.
pub struct Output {
    pub value: Value,
    pub code: i32,
}

fn read(path: &Path) -> Result<String> {
    Ok(fs::read_to_string(path)?)
}

/// Built-in name such as `PGL4`, `GL3`, `B2`, `G2`, or a JSON file.
pub fn load_datum(name: &str) -> Result<RootDatum> {
    match RootDatum::builtin(name) {
        Ok(rd) => Ok(rd),
        Err(builtin_err) => {
            let path = Path::new(name);
            if path.exists() {
                RootDatum::from_json(&read(path)?)
            } else {
                Err(builtin_err)
            }
        }
    }
}

fn load_inertial(chi: Option<&Path>, rank: usize) -> Result<InertialDatum> {
    match chi {
        Some(p) => {
            let d = InertialDatum::from_json(&read(p)?)?;
            if let Some(g) = d.generators.iter().find(|g| g.rank() != rank) {
                return Err(Error::DimensionMismatch { expected: rank, found: g.rank() });
            }
            Ok(d)
        }
        None => Ok(InertialDatum::trivial(rank)),
    }
}

/// Generators as permutation image lists or as integer matrices.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorFile {
    #[serde(default)]
    permutations: Vec<Vec<u32>>,
    #[serde(default)]
    matrices: Vec<Vec<Vec<i64>>>,
}

enum Generators {
    Perms(Vec<Perm>),
    Matrices(Vec<MonomialAction>),
}

fn load_generators(path: &Path) -> Result<Generators> {
    let f: GeneratorFile = serde_json::from_str(&read(path)?)?;
    match (f.permutations.is_empty(), f.matrices.is_empty()) {
        (false, true) => Ok(Generators::Perms(f.permutations.into_iter().map(Perm::new).collect::<Result<_>>()?)),
        (true, false) => Ok(Generators::Matrices(f.matrices.iter().map(|m| MonomialAction::from_rows(m)).collect::<Result<_>>()?)),
        _ => Err(Error::InvalidInput("give exactly one nonempty list of permutations or matrices".into())),
    }
}

fn perm_group(path: &Path, bound: usize) -> Result<FinGroup<Perm>> {
    match load_generators(path)? {
        Generators::Perms(p) => close_group(&p, bound),
        Generators::Matrices(_) => Err(Error::InvalidInput(format!("{}: expected permutations", path.display()))),
    }
}

fn group_json<E: GroupElement>(g: FinGroup<E>, query: GroupQuery, show: impl Fn(&E) -> Value) -> Result<Value> {
    let classes = conjugacy_classes(&g);
    Ok(match query {
        GroupQuery::Classes => json!({
            "schema": SCHEMA,
            "order": g.order(),
            "class_count": classes.len(),
            "classes": classes.representatives.iter().zip(classes.sizes()).map(|(&r, size)| json!({
                "representative": show(g.element(r)),
                "size": size,
                "element_order": g.element_order(r),
            })).collect::<Vec<_>>(),
        }),
        GroupQuery::Chartable => {
            let tab = TabulatedGroup::new(g)?;
            json!({ "schema": SCHEMA, "order": tab.group.order(), "table": tab.table.to_repr() })
        }
    })
}

/// `"p/q"` or `"p"` as a pair of integers.
fn parse_ratio(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::InvalidInput(format!("bad rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => (s.trim().parse().map_err(|_| bad())?, 1),
    };
    if den == 0 {
        return Err(bad());
    }
    Ok((num, den))
}

/// `mag:angle`, e.g. `3/2:1/4`; a bare `mag` means angle zero.
pub fn parse_alpha(s: &str) -> Result<Scalar> {
    let (mag, angle) = s.split_once(':').unwrap_or((s, "0"));
    Scalar::from_parts(parse_ratio(mag)?, parse_ratio(angle)?)
}

#[derive(Deserialize)]
struct PointsFile {
    points: Vec<TorusPoint>,
}

fn example_value(r: ExampleReport) -> Output {
    let code = match r.exit_code() {
        0 => EXIT_OK,
        2 => EXIT_PUBLISHED_FAILURE,
        c => c,
    };
    Output { value: serde_json::to_value(&r).expect("serializable"), code }
}

/// Runs one parsed command.
pub fn execute(cli: &Cli) -> Result<Output> {
    let bound = cli.bound;
    if bound == 0 {
        return Err(Error::InvalidInput("bound must be positive".into()));
    }
    let ok = |value: Value| Ok(Output { value, code: EXIT_OK });
    match &cli.command {
        Command::Snf { file } => {
            let a: IntMatrix = serde_json::from_str(&read(file)?)?;
            let snf = smith_normal_form(&a);
            let mut v = serde_json::to_value(&snf)?;
            v["schema"] = json!(SCHEMA);
            v["cokernel"] = serde_json::to_value(cokernel_structure(&a))?;
            ok(v)
        }
        Command::Group { query, generators } => match load_generators(generators)? {
            Generators::Perms(p) => ok(group_json(close_group(&p, bound)?, *query, |e: &Perm| json!(e.images()))?),
            Generators::Matrices(m) => ok(group_json(close_group(&m, bound)?, *query, |e: &MonomialAction| json!(e.matrix()))?),
        },
        Command::Ws { datum, chi, mode } => {
            let rd = load_datum(datum)?;
            let inert = load_inertial(chi.as_deref(), rd.rank)?;
            let w = weyl_group(&rd, bound)?;
            let ws = compute_ws(&rd, &w, &inert, (*mode).into(), bound)?;
            let sub = rd.subsystem(&ws.roots);
            ok(json!({
                "schema": SCHEMA,
                "datum": rd.name,
                "mode": ws.mode,
                "weyl_order": w.order(),
                "order": ws.group.order(),
                "is_abelian": ws.group.is_abelian(),
                "roots": ws.roots,
                "components": sub.components.iter().map(|c| &c.cartan_type).collect::<Vec<_>>(),
                "elements": ws.group.elements().iter().map(|e| e.matrix()).collect::<Vec<_>>(),
            }))
        }
        Command::Components { datum, ws_chi, mode } => {
            let rd = load_datum(datum)?;
            let ps = PrincipalSeries::new(rd.clone(), load_inertial(ws_chi.as_deref(), rd.rank)?, (*mode).into(), bound)?;
            let eq = extended_quotient_first(ps.group())?;
            ok(json!({
                "schema": SCHEMA,
                "datum": rd.name,
                "group_order": ps.group().order(),
                "piece_count": piece_count(&eq),
                "classes": eq.iter().map(|c| json!({
                    "class": c.class_index,
                    "class_size": c.class_size,
                    "representative": c.class_rep.matrix(),
                    "dimension": c.fixed_locus.dimension,
                    "fixed_components": c.fixed_locus.component_count,
                    "centralizer_order": c.centralizer_order,
                    "pieces": c.quotient_component_count,
                })).collect::<Vec<_>>(),
            }))
        }
        Command::Fiber { datum, point, chi, mode } => {
            let rd = load_datum(datum)?;
            let t: TorusPoint = serde_json::from_str(&read(point)?)?;
            if t.rank() != rd.rank {
                return Err(Error::DimensionMismatch { expected: rd.rank, found: t.rank() });
            }
            let ps = PrincipalSeries::new(rd.clone(), load_inertial(chi.as_deref(), rd.rank)?, (*mode).into(), bound)?;
            let report = fiber_cardinality(ps.group(), &t)?;
            let second = match ps.springer_fiber(&t) {
                Ok(points) => {
                    let cells = points.iter().map(|p| ps.cell_of(p)).collect::<Result<Vec<_>>>()?;
                    json!(points.iter().zip(cells).map(|(p, c)| json!({ "tau": p.tau, "springer": p.springer, "cell": c })).collect::<Vec<_>>())
                }
                Err(Error::UnsupportedType(msg)) => json!({ "unsupported": msg }),
                Err(e) => return Err(e),
            };
            ok(json!({ "schema": SCHEMA, "datum": rd.name, "fiber": report, "canonical_point": ps.canonical(&t)?, "second_kind": second }))
        }
        Command::Clifford { g1, g, action } => {
            let g1 = perm_group(g1, bound)?;
            let g = perm_group(g, bound)?;
            let images: Vec<Vec<Vec<u32>>> = serde_json::from_str::<Value>(&read(action)?)?
                .get("images")
                .cloned()
                .map(serde_json::from_value)
                .transpose()?
                .ok_or_else(|| Error::InvalidInput("action file needs an \"images\" list".into()))?;
            let images: Vec<Vec<Perm>> = images.into_iter().map(|v| v.into_iter().map(Perm::new).collect::<Result<_>>()).collect::<Result<_>>()?;
            let datum = SemidirectDatum::from_generator_images(g1, g, &images, bound)?;
            let (labels, status) = datum.labels_with_status()?;
            ok(json!({ "schema": SCHEMA, "product_order": datum.product.order(), "labels": labels, "status": status }))
        }
        Command::Lparam { chi, t, lambda, alpha } => {
            let t: TorusPoint = serde_json::from_str(&read(t)?)?;
            let lambda = Partition::parse(lambda)?;
            let inert = load_inertial(chi.as_deref(), t.rank())?;
            let phi = build_phi(&inert, &t, &lambda)?;
            let values = alpha
                .iter()
                .map(|a| {
                    let a = parse_alpha(a)?;
                    Ok(json!({ "alpha": a, "phi": eval_phi(&phi, &[], 1, &a)? }))
                })
                .collect::<Result<Vec<_>>>()?;
            ok(json!({ "schema": SCHEMA, "parameter": phi, "evaluations": values }))
        }
        Command::Lpackets { points, datum, chi, mode } => {
            let rd = load_datum(datum)?;
            let file: PointsFile = serde_json::from_str(&read(points)?)?;
            let ps = PrincipalSeries::new(rd.clone(), load_inertial(chi.as_deref(), rd.rank)?, (*mode).into(), bound)?;
            let mut inventory = Vec::new();
            for t in &file.points {
                inventory.extend(ps.springer_fiber(t)?);
            }
            let classes = ps.lpackets(&inventory)?;
            let listed = classes
                .iter()
                .map(|c| {
                    let p = &inventory[c[0]];
                    Ok(json!({ "t": p.t, "cell": ps.cell_of(p)?, "taus": c.iter().map(|&i| inventory[i].tau).collect::<Vec<_>>() }))
                })
                .collect::<Result<Vec<_>>>()?;
            ok(json!({ "schema": SCHEMA, "datum": rd.name, "point_count": inventory.len(), "packets": listed }))
        }
        Command::Example { name, n, datum, chi, mode } => match name {
            ExampleName::Sl4 => Ok(example_value(report::run_example_sl4(bound)?)),
            ExampleName::Gln => Ok(example_value(report::run_example_gln(*n, bound)?)),
            ExampleName::LowestCell => {
                let rd = load_datum(datum)?;
                let inert = load_inertial(chi.as_deref(), rd.rank)?;
                Ok(example_value(report::run_example_lowest_cell(rd, inert, (*mode).into(), bound)?))
            }
        },
    }
}

/// Parses arguments, runs, writes the output, and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.value).expect("serializable") + "\n";
            let written = match &cli.out {
                Some(p) => fs::write(p, text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => out.code,
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_INPUT
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}
