//! The `mobiuskit` command line.
//!
//! Every subcommand reads JSON files and prints one JSON report on standard
//! output. Exit codes: 0 on success, 2 when the answer is negative (not
//! invertible, not Möbius, ...), 1 on malformed input or usage errors.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::category::{Arrow, CategoryData, DirectedGraph, FinCategory, Functor, ValidationReport};
use crate::enriched::{self, GradedGraphCategory, MetricFile, MetricSpace};
use crate::functoriality;
use crate::incidence::{self, CoarseElement, FineElement, IncidenceError};
use crate::infinite::{builtin, Builtin, PatchwiseSolver};
use crate::matrix::{self, RigMatrix};
use crate::matrixrig;
use crate::par;
use crate::rig::{
    parse_rational, rational_to_f64, render_real, EmbedsInField, Integers, Naturals, Rationals, Reals, Rig,
    SeriesRig, TruncatedSeries,
};

pub const RIG_ENV: &str = "MOBIUSKIT_RIG";

#[derive(Parser, Debug)]
#[command(name = "mobiuskit", version, about = "Möbius inversion for finite categories")]
struct Cli {
    /// Coefficient rig: nat, int, rat, real or poly:N.
    #[arg(long, global = true)]
    rig: Option<String>,
    /// Worker threads for data-parallel kernels.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Algebra {
    Fine,
    Coarse,
    Patch,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixOp {
    Detpm,
    Adjpm,
    Transitive,
    Zeros,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and validate a category file.
    Validate {
        #[arg(long)]
        category: PathBuf,
    },
    /// Zeta function in one of the incidence algebras.
    Zeta {
        #[arg(long)]
        category: PathBuf,
        #[arg(long, value_enum, default_value = "coarse")]
        algebra: Algebra,
    },
    /// Möbius function of a category file or of a built-in infinite family.
    Mobius {
        #[arg(long, conflicts_with = "family")]
        category: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "coarse")]
        algebra: Algebra,
        /// dinj, dsurj, divisibility or nat_leq.
        #[arg(long, value_parser = Builtin::from_str, requires_all = ["from", "to"])]
        family: Option<Builtin>,
        #[arg(long)]
        from: Option<u64>,
        #[arg(long)]
        to: Option<u64>,
    },
    /// Euler characteristic (sum of the coarse Möbius function).
    Euler {
        #[arg(long)]
        category: PathBuf,
    },
    /// Euler characteristic of the nerve by counting chains.
    NerveEuler {
        #[arg(long)]
        category: PathBuf,
    },
    /// Magnitude of a finite metric space, or the segment refinement study.
    Magnitude {
        #[arg(long)]
        metric: Option<PathBuf>,
        /// Comma-separated point counts for evenly spaced segments.
        #[arg(long, value_delimiter = ',')]
        study: Vec<usize>,
        #[arg(long, default_value_t = 2.0)]
        length: f64,
    },
    /// Zeta and Möbius series of the free category on a graph.
    Graded {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Skeletality, special endomorphisms, and invertibility status.
    Classify {
        #[arg(long)]
        category: PathBuf,
    },
    /// ULF, bijectivity on objects, fibres and induced homomorphisms.
    FunctorCheck {
        #[arg(long)]
        src: PathBuf,
        #[arg(long)]
        tgt: PathBuf,
        #[arg(long)]
        map: PathBuf,
    },
    /// Determinant and adjugate halves, transitivity, zero inheritance.
    Matrix {
        #[arg(long, value_enum)]
        op: MatrixOp,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Compare two compositions on the same underlying graph.
    Compare {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RigChoice {
    Nat,
    Int,
    Rat,
    Real,
    Poly(usize),
}

impl fmt::Display for RigChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RigChoice::Nat => f.write_str("nat"),
            RigChoice::Int => f.write_str("int"),
            RigChoice::Rat => f.write_str("rat"),
            RigChoice::Real => f.write_str("real"),
            RigChoice::Poly(n) => write!(f, "poly:{n}"),
        }
    }
}

impl FromStr for RigChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "nat" => Ok(RigChoice::Nat),
            "int" => Ok(RigChoice::Int),
            "rat" => Ok(RigChoice::Rat),
            "real" => Ok(RigChoice::Real),
            _ => match s.strip_prefix("poly:") {
                Some(n) => n
                    .parse()
                    .map(RigChoice::Poly)
                    .map_err(|_| format!("bad truncation degree in `{s}`")),
                None => Err(format!("unknown rig `{s}` (expected nat, int, rat, real or poly:N)")),
            },
        }
    }
}

/// A failure that ends the run with exit code 1.
#[derive(Debug)]
struct CliError(String);

impl<E: fmt::Display> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

type CliResult = Result<Outcome, CliError>;

struct Outcome {
    results: Value,
    exit: i32,
    warnings: Vec<String>,
}

impl Outcome {
    fn ok(results: Value) -> Self {
        Outcome {
            results,
            exit: 0,
            warnings: Vec::new(),
        }
    }

    fn negative(results: Value) -> Self {
        Outcome {
            results,
            exit: 2,
            warnings: Vec::new(),
        }
    }

    fn exit_if(mut self, negative: bool) -> Self {
        if negative {
            self.exit = 2;
        }
        self
    }
}

/// Rig instances the command line can read values into.
trait CliRig: Rig {
    fn parse(&self, v: &Value) -> Result<Self::Elem, String>;
}

fn exact(v: &Value) -> Result<BigRational, String> {
    match v {
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(BigRational::from_integer(BigInt::from(i))),
            None => Err(format!("{n} is not an integer; write exact values as \"p/q\"")),
        },
        Value::String(s) => parse_rational(s).ok_or_else(|| format!("cannot parse `{s}` as a rational")),
        other => Err(format!("expected a number or \"p/q\" string, got {other}")),
    }
}

impl CliRig for Naturals {
    fn parse(&self, v: &Value) -> Result<BigUint, String> {
        let q = exact(v)?;
        if !q.is_integer() || q.is_negative() {
            return Err(format!("{v} is not a natural number"));
        }
        Ok(q.to_integer().to_biguint().expect("nonnegative"))
    }
}

impl CliRig for Integers {
    fn parse(&self, v: &Value) -> Result<BigInt, String> {
        let q = exact(v)?;
        if !q.is_integer() {
            return Err(format!("{v} is not an integer"));
        }
        Ok(q.to_integer())
    }
}

impl CliRig for Rationals {
    fn parse(&self, v: &Value) -> Result<BigRational, String> {
        exact(v)
    }
}

impl CliRig for Reals {
    fn parse(&self, v: &Value) -> Result<f64, String> {
        match v {
            Value::Number(n) => n.as_f64().ok_or_else(|| format!("bad number {n}")),
            Value::String(s) if s == "inf" => Ok(f64::INFINITY),
            Value::String(_) => exact(v).map(|q| rational_to_f64(&q)),
            other => Err(format!("expected a number, got {other}")),
        }
    }
}

impl CliRig for SeriesRig {
    fn parse(&self, v: &Value) -> Result<TruncatedSeries, String> {
        let n = self.truncation_degree;
        match v {
            Value::Array(coefficients) => {
                if coefficients.len() > n + 1 {
                    return Err(format!("series has more than {} coefficients", n + 1));
                }
                let cs = coefficients.iter().map(exact).collect::<Result<Vec<_>, _>>()?;
                Ok(TruncatedSeries::from_coefficients(cs, n))
            }
            other => Ok(TruncatedSeries::constant(exact(other)?, n)),
        }
    }
}

/// Binds `$r` to the chosen rig, for operations that need a fraction field.
macro_rules! with_field_rig {
    ($choice:expr, $r:ident => $body:expr) => {
        match $choice {
            RigChoice::Nat => {
                let $r = &Naturals;
                $body
            }
            RigChoice::Int => {
                let $r = &Integers;
                $body
            }
            RigChoice::Rat => {
                let $r = &Rationals;
                $body
            }
            RigChoice::Real => {
                let $r = &Reals;
                $body
            }
            RigChoice::Poly(_) => Err(CliError(format!(
                "rig `{}` is not supported by this command (needs nat, int, rat or real)",
                $choice
            ))),
        }
    };
}

/// Binds `$r` to the chosen rig, for operations valid over any rig.
macro_rules! with_any_rig {
    ($choice:expr, $r:ident => $body:expr) => {
        match $choice {
            RigChoice::Poly(n) => {
                let $r = &SeriesRig::new(n);
                $body
            }
            other => with_field_rig!(other, $r => $body),
        }
    };
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn load_category(path: &Path) -> Result<FinCategory, CliError> {
    let data: CategoryData = read_json(path)?;
    FinCategory::from_data(&data).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

#[derive(Deserialize)]
struct EdgeFile {
    name: String,
    src: String,
    tgt: String,
}

#[derive(Deserialize)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
}

fn load_graph(path: &Path) -> Result<DirectedGraph, CliError> {
    let file: GraphFile = read_json(path)?;
    let index = |name: &str, k: usize, field: &str| {
        file.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| CliError(format!("{}: edges[{k}].{field}: unknown vertex `{name}`", path.display())))
    };
    let mut edges = Vec::new();
    for (k, e) in file.edges.iter().enumerate() {
        edges.push(Arrow {
            name: e.name.clone(),
            src: index(&e.src, k, "src")?,
            tgt: index(&e.tgt, k, "tgt")?,
        });
    }
    DirectedGraph::new(file.vertices.clone(), edges).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn load_matrix<R: CliRig>(rig: &R, path: &Path) -> Result<RigMatrix<R::Elem>, CliError> {
    let rows: Vec<Vec<Value>> = read_json(path)?;
    let mut parsed = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let mut r = Vec::with_capacity(row.len());
        for (j, v) in row.iter().enumerate() {
            r.push(rig.parse(v).map_err(|e| CliError(format!("{}: [{i}][{j}]: {e}", path.display())))?);
        }
        parsed.push(r);
    }
    RigMatrix::from_rows(parsed).map_err(|e| CliError(format!("{}: {e}", path.display())))
}

fn matrix_json<R: Rig>(rig: &R, m: &RigMatrix<R::Elem>) -> Value {
    Value::Array(
        (0..m.dim())
            .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(rig.render(x))).collect()))
            .collect(),
    )
}

fn coarse_json<R: Rig>(rig: &R, x: &CoarseElement<R::Elem>) -> Value {
    json!({ "objects": x.objects(), "matrix": matrix_json(rig, x.values()) })
}

fn fine_json<R: Rig>(rig: &R, x: &FineElement<R::Elem>) -> Value {
    let c = x.category();
    Value::Array(
        x.values()
            .iter()
            .enumerate()
            .map(|(a, v)| json!({ "arrow": c.arrow_name(a), "value": rig.render(v) }))
            .collect(),
    )
}

fn not_invertible(e: &IncidenceError) -> Value {
    json!({ "invertible": false, "reason": e.to_string() })
}

fn cmd_validate(path: &Path) -> CliResult {
    let data: CategoryData = read_json(path)?;
    Ok(match crate::category::validate_category(&data) {
        ValidationReport::Valid => {
            let c = FinCategory::from_data(&data)?;
            Outcome::ok(json!({
                "valid": true,
                "objects": c.num_objects(),
                "arrows": c.num_arrows(),
            }))
        }
        ValidationReport::Invalid(e) => Outcome {
            results: json!({ "valid": false, "error": e.to_string() }),
            exit: 1,
            warnings: Vec::new(),
        },
    })
}

fn cmd_zeta(rig: RigChoice, path: &Path, algebra: Algebra) -> CliResult {
    let c = load_category(path)?;
    with_any_rig!(rig, r => Ok(Outcome::ok(match algebra {
        Algebra::Fine => json!({ "algebra": "fine", "zeta": fine_json(r, &incidence::fine_zeta(&c, r)) }),
        Algebra::Coarse => json!({ "algebra": "coarse", "zeta": coarse_json(r, &incidence::coarse_zeta(&c, r)) }),
        Algebra::Patch => json!({
            "algebra": "patch",
            "zeta": coarse_json(r, &incidence::patch_zeta(&c, r).to_coarse()),
        }),
    })))
}

fn mobius_of_category<R: EmbedsInField>(r: &R, c: &FinCategory, algebra: Algebra) -> CliResult {
    let result = match algebra {
        Algebra::Fine => incidence::fine_mobius(c, r).map(|mu| {
            json!({
                "algebra": "fine",
                "invertible": true,
                "mu": fine_json(r, &mu),
                "sigma": coarse_json(r, &incidence::sigma_to_coarse(r, &mu)),
            })
        }),
        Algebra::Coarse => incidence::coarse_mobius(c, r).map(|mu| {
            json!({ "algebra": "coarse", "invertible": true, "mu": coarse_json(r, &mu) })
        }),
        Algebra::Patch => incidence::patch_mobius(c, r).map(|mu| {
            json!({ "algebra": "patch", "invertible": true, "mu": coarse_json(r, &mu.to_coarse()) })
        }),
    };
    Ok(match result {
        Ok(v) => Outcome::ok(v),
        Err(e) => Outcome::negative(not_invertible(&e)),
    })
}

fn mobius_of_family<R: EmbedsInField + Clone + 'static>(r: &R, family: Builtin, a: u64, b: u64) -> CliResult {
    let solver = PatchwiseSolver::new(builtin(family), r.clone());
    let count = solver.oracle().hom_count(a, b)?;
    if count == 0 {
        return Ok(Outcome::ok(json!({
            "family": family.to_string(),
            "from": a,
            "to": b,
            "hom_count": 0,
            "patch": [],
            "mu": r.render(&r.zero()),
        })));
    }
    match solver.mobius(a, b) {
        Ok(mu) => {
            let (objects, inv) = solver.patch_inverse(a, b)?;
            Ok(Outcome::ok(json!({
                "family": family.to_string(),
                "from": a,
                "to": b,
                "hom_count": count,
                "patch": objects,
                "mu": r.render(&mu),
                "patch_mobius": matrix_json(r, inv.values()),
            })))
        }
        Err(crate::infinite::InfiniteError::NotInvertible { witness, .. }) => Ok(Outcome::negative(json!({
            "family": family.to_string(),
            "from": a,
            "to": b,
            "invertible": false,
            "reason": witness,
        }))),
        Err(e) => Err(e.into()),
    }
}

fn cmd_mobius(
    rig: RigChoice,
    category: Option<&Path>,
    algebra: Algebra,
    family: Option<Builtin>,
    from: Option<u64>,
    to: Option<u64>,
) -> CliResult {
    match (category, family) {
        (Some(path), None) => {
            let c = load_category(path)?;
            with_field_rig!(rig, r => mobius_of_category(r, &c, algebra))
        }
        (None, Some(family)) => {
            let (a, b) = (from.expect("required by clap"), to.expect("required by clap"));
            with_field_rig!(rig, r => mobius_of_family(r, family, a, b))
        }
        _ => Err(CliError("exactly one of --category or --family is required".into())),
    }
}

fn cmd_euler(rig: RigChoice, path: &Path) -> CliResult {
    let c = load_category(path)?;
    with_field_rig!(rig, r => Ok(match incidence::euler_characteristic(&c, r) {
        Ok(chi) => Outcome::ok(json!({ "euler_characteristic": r.render(&chi) })),
        Err(e) => Outcome::negative(not_invertible(&e)),
    }))
}

fn cmd_nerve_euler(path: &Path) -> CliResult {
    let c = load_category(path)?;
    Ok(match incidence::nerve_euler_characteristic(&c) {
        Ok(chi) => {
            let coarse = incidence::euler_characteristic(&c, &Rationals)
                .map(|x| Value::String(Rationals.render(&x)))
                .unwrap_or(Value::Null);
            Outcome::ok(json!({
                "nerve_euler_characteristic": chi.to_string(),
                "euler_characteristic": coarse,
            }))
        }
        Err(e) => Outcome::negative(json!({ "applicable": false, "reason": e.to_string() })),
    })
}

fn cmd_magnitude(metric: Option<&Path>, study: &[usize], length: f64) -> CliResult {
    if metric.is_none() && study.is_empty() {
        return Err(CliError("magnitude needs --metric or --study".into()));
    }
    let mut results = serde_json::Map::new();
    let mut exit = 0;
    if let Some(path) = metric {
        let file: MetricFile = read_json(path)?;
        let space = MetricSpace::from_file(&file).map_err(|e| CliError(format!("{}: {e}", path.display())))?;
        match enriched::magnitude(&space) {
            Ok(rep) => {
                results.insert("points".into(), json!(space.points()));
                results.insert("magnitude".into(), json!(render_real(rep.magnitude)));
                results.insert(
                    "weights".into(),
                    rep.weights
                        .map(|w| json!(w.iter().map(|x| render_real(*x)).collect::<Vec<_>>()))
                        .unwrap_or(Value::Null),
                );
                results.insert("condition_estimate".into(), json!(render_real(rep.condition_estimate)));
                results.insert("symmetric".into(), json!(space.is_symmetric()));
            }
            Err(e) => {
                exit = 2;
                results.insert("invertible".into(), json!(false));
                results.insert("reason".into(), json!(e.to_string()));
            }
        }
    }
    if !study.is_empty() {
        let rows = enriched::segment_study(study, length)?;
        let monotone = rows.windows(2).all(|w| w[1].error_to_limit < w[0].error_to_limit);
        results.insert(
            "study".into(),
            json!({
                "length": render_real(length),
                "limit": render_real(1.0 + length / 2.0),
                "monotone": monotone,
                "rows": rows.iter().map(|r| json!({
                    "points": r.points,
                    "magnitude": render_real(r.magnitude),
                    "closed_form": render_real(r.closed_form),
                    "error_to_limit": render_real(r.error_to_limit),
                })).collect::<Vec<_>>(),
            }),
        );
    }
    Ok(Outcome {
        results: Value::Object(results),
        exit,
        warnings: Vec::new(),
    })
}

fn cmd_graded(graph: &Path, degree: usize) -> CliResult {
    let g = load_graph(graph)?;
    let (n_vertices, n_edges) = (g.vertices.len() as i64, g.edges.len() as i64);
    let cat = GradedGraphCategory::new(g, degree)?;
    let rig = cat.rig();
    let zeta = enriched::graded_zeta(&cat);
    let mu = enriched::graded_mobius(&cat);
    let left = incidence::coarse_multiply(&rig, &mu, &zeta)?;
    let right = incidence::coarse_multiply(&rig, &zeta, &mu)?;
    let total = enriched::series_total(&rig, &mu);
    let at_one = total.evaluate(&BigRational::from_integer(1.into()));
    Ok(Outcome::ok(json!({
        "degree": degree,
        "zeta": coarse_json(&rig, &zeta),
        "mu": coarse_json(&rig, &mu),
        "total_mu": rig.render(&total),
        "total_mu_at_1": Rationals.render(&at_one),
        "vertices_minus_edges": n_vertices - n_edges,
        "inverse_verified": left.values().is_identity(&rig) && right.values().is_identity(&rig),
    })))
}

fn inversion_status<R: EmbedsInField>(r: &R, c: &FinCategory) -> Value {
    let status = |res: Result<(), IncidenceError>| match res {
        Ok(()) => json!({ "invertible": true }),
        Err(e) => not_invertible(&e),
    };
    json!({
        "fine": status(incidence::fine_mobius(c, r).map(|_| ())),
        "coarse": status(incidence::coarse_mobius(c, r).map(|_| ())),
    })
}

fn cmd_classify(rig: RigChoice, path: &Path) -> CliResult {
    let c = load_category(path)?;
    let report = c.endomorphism_report();
    let names = |v: &[usize]| v.iter().map(|&a| c.arrow_name(a).to_string()).collect::<Vec<_>>();
    let mut over = serde_json::Map::new();
    over.insert("rat".into(), inversion_status(&Rationals, &c));
    over.insert("int".into(), inversion_status(&Integers, &c));
    let chosen = with_field_rig!(rig, r => Ok(inversion_status(r, &c)))?;
    over.insert(rig.to_string(), chosen);
    let subcategories = if c.num_arrows() <= functoriality::SUBCATEGORY_ARROW_LIMIT {
        match functoriality::non_invertible_subcategory(&c)? {
            None => json!({ "all_invertible_over_int": true }),
            Some((s, e)) => json!({
                "all_invertible_over_int": false,
                "counterexample": {
                    "objects": s.objects(),
                    "arrows": s.arrows().iter().map(|a| a.name.clone()).collect::<Vec<_>>(),
                    "reason": e.to_string(),
                },
            }),
        }
    } else {
        json!({ "skipped": format!("more than {} arrows", functoriality::SUBCATEGORY_ARROW_LIMIT) })
    };
    let mobius = report.is_mobius();
    Ok(Outcome::ok(json!({
        "objects": c.num_objects(),
        "arrows": c.num_arrows(),
        "skeletal": c.is_skeletal(),
        "nontrivial_isomorphisms": names(&report.nontrivial_isos),
        "nontrivial_idempotents": names(&report.nontrivial_idempotents),
        "nontrivial_endomorphisms": names(&report.nontrivial_endos),
        "mobius_category": mobius,
        "inversion": over,
        "subcategories": subcategories,
    }))
    .exit_if(!mobius))
}

fn cmd_functor_check(rig: RigChoice, src: &Path, tgt: &Path, map: &Path) -> CliResult {
    let source = load_category(src)?;
    let target = load_category(tgt)?;
    let names: BTreeMap<String, String> = read_json(map)?;
    let f = Functor::from_arrow_names(source, target, &names).map_err(|e| CliError(format!("{}: {e}", map.display())))?;
    let ulf = match functoriality::is_ulf(&f) {
        Ok(()) => json!({ "holds": true }),
        Err(v) => json!({
            "holds": false,
            "counterexample": {
                "arrow": v.arrow,
                "first": v.first,
                "second": v.second,
                "lifts": v.lifts,
            },
        }),
    };
    let fibres: Vec<Value> = functoriality::fibre_sizes(&f)
        .iter()
        .enumerate()
        .map(|(a, k)| json!({ "arrow": f.target().arrow_name(a), "size": k }))
        .collect();
    let (push, pull) = with_any_rig!(rig, r => Ok::<_, CliError>((
        functoriality::pushforward_is_homomorphism(r, &f),
        functoriality::pullback_is_homomorphism(r, &f),
    )))?;
    Ok(Outcome::ok(json!({
        "bijective_on_objects": functoriality::is_bijective_on_objects(&f),
        "ulf": ulf,
        "ulf_via_pullback_squares": functoriality::ulf_via_pullback_squares(&f),
        "fibre_sizes": fibres,
        "pushforward_homomorphism": push,
        "pullback_homomorphism": pull,
    })))
}

fn matrix_report<R: CliRig>(r: &R, op: MatrixOp, input: &Path) -> CliResult {
    let m = load_matrix(r, input)?;
    match op {
        MatrixOp::Detpm => {
            let (p, q) = matrixrig::det_plus_minus(r, &m)?;
            let det = r.try_neg(&q).ok().map(|nq| r.render(&r.add(&p, &nq)));
            Ok(Outcome::ok(json!({
                "dimension": m.dim(),
                "det_plus": r.render(&p),
                "det_minus": r.render(&q),
                "det": det,
            })))
        }
        MatrixOp::Adjpm => {
            let (p, q) = matrixrig::adj_plus_minus(r, &m)?;
            Ok(Outcome::ok(json!({
                "dimension": m.dim(),
                "adj_plus": matrix_json(r, &p),
                "adj_minus": matrix_json(r, &q),
            })))
        }
        MatrixOp::Transitive => {
            let t = matrixrig::is_transitive(r, &m, None);
            Ok(Outcome::ok(json!({
                "dimension": m.dim(),
                "transitive": t.transitive,
                "bounded": t.bounded,
                "counterexample": t.counterexample,
            }))
            .exit_if(!t.transitive))
        }
        MatrixOp::Zeros => unreachable!("handled by zeros_report"),
    }
}

fn zeros_report<F: CliRig + crate::rig::Field>(field: &F, input: &Path) -> CliResult {
    let z = load_matrix(field, input)?;
    let t = matrixrig::is_transitive(field, &z, None);
    let inv = match matrix::invert(field, &z) {
        Ok(inv) => inv,
        Err(e) => {
            return Ok(Outcome::negative(json!({
                "transitive": t.transitive,
                "invertible": false,
                "reason": e.to_string(),
            })))
        }
    };
    let violation = matrixrig::inverse_zero_check(field, &z, &inv)?;
    Ok(Outcome::ok(json!({
        "transitive": t.transitive,
        "invertible": true,
        "inverse": matrix_json(field, &inv),
        "zeros_inherited": violation.is_none(),
        "violation": violation,
    }))
    .exit_if(violation.is_some()))
}

fn cmd_matrix(rig: RigChoice, op: MatrixOp, input: &Path) -> CliResult {
    if op == MatrixOp::Zeros {
        return match rig {
            RigChoice::Rat => zeros_report(&Rationals, input),
            RigChoice::Real => zeros_report(&Reals, input),
            other => Err(CliError(format!("--op zeros needs a field (rat or real), not `{other}`"))),
        };
    }
    with_any_rig!(rig, r => matrix_report(r, op, input))
}

fn compare_over<R: EmbedsInField>(r: &R, left: &FinCategory, right: &FinCategory) -> Result<(Value, bool), CliError> {
    let side = |c: &FinCategory| -> (Value, Option<CoarseElement<R::Elem>>) {
        match incidence::fine_mobius(c, r) {
            Ok(mu) => {
                let sigma = incidence::sigma_to_coarse(r, &mu);
                (json!({ "invertible": true, "sigma_mu": coarse_json(r, &sigma) }), Some(sigma))
            }
            Err(e) => (not_invertible(&e), None),
        }
    };
    let (lv, ls) = side(left);
    let (rv, rs) = side(right);
    let agree = match (&ls, &rs) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    let nerve = |c: &FinCategory| incidence::nerve_euler_characteristic(c).ok();
    let (ln, rn) = (nerve(left), nerve(right));
    let nerve_json = match (&ln, &rn) {
        (Some(a), Some(b)) => json!({ "left": a.to_string(), "right": b.to_string(), "agree": a == b }),
        _ => Value::Null,
    };
    let positive = agree == Some(true) && ln == rn;
    Ok((
        json!({
            "left": lv,
            "right": rv,
            "sigma_mu_agree": agree,
            "nerve_euler": nerve_json,
        }),
        positive,
    ))
}

fn cmd_compare(rig: RigChoice, left: &Path, right: &Path) -> CliResult {
    let l = load_category(left)?;
    let r_cat = load_category(right)?;
    let same_graph = l.underlying_graph() == r_cat.underlying_graph();
    let distinct = l != r_cat;
    if !same_graph {
        return Ok(Outcome::negative(json!({ "same_graph": false })));
    }
    let (mut body, positive) = with_field_rig!(rig, r => compare_over(r, &l, &r_cat))?;
    body["same_graph"] = json!(true);
    body["distinct_compositions"] = json!(distinct);
    Ok(Outcome::ok(body).exit_if(!positive))
}

/// The effective rig and whether it was requested explicitly.
fn resolve_rig(flag: Option<&str>, env: Option<&str>) -> Result<(RigChoice, bool), CliError> {
    match flag.or(env) {
        Some(s) => Ok((RigChoice::from_str(s).map_err(CliError)?, true)),
        None => Ok((RigChoice::Rat, false)),
    }
}

fn dispatch(cli: &Cli, env_rig: Option<&str>) -> Result<(Outcome, String), CliError> {
    let (rig, explicit) = resolve_rig(cli.rig.as_deref(), env_rig)?;
    let fixed = |native: &str, ok: bool| -> Result<String, CliError> {
        if explicit && !ok {
            Err(CliError(format!("this command computes over `{native}` and cannot use rig `{rig}`")))
        } else {
            Ok(native.to_string())
        }
    };
    let outcome = match &cli.command {
        Command::Validate { category } => (cmd_validate(category)?, rig.to_string()),
        Command::Zeta { category, algebra } => (cmd_zeta(rig, category, *algebra)?, rig.to_string()),
        Command::Mobius {
            category,
            algebra,
            family,
            from,
            to,
        } => (
            cmd_mobius(rig, category.as_deref(), *algebra, *family, *from, *to)?,
            rig.to_string(),
        ),
        Command::Euler { category } => (cmd_euler(rig, category)?, rig.to_string()),
        Command::NerveEuler { category } => {
            let name = fixed("int", matches!(rig, RigChoice::Int))?;
            (cmd_nerve_euler(category)?, name)
        }
        Command::Magnitude { metric, study, length } => {
            let name = fixed("real", rig == RigChoice::Real)?;
            (cmd_magnitude(metric.as_deref(), study, *length)?, name)
        }
        Command::Graded { graph, degree } => {
            let degree = match (rig, explicit, degree) {
                (RigChoice::Poly(n), true, None) => n,
                (RigChoice::Poly(n), true, Some(d)) if n == *d => n,
                (_, true, _) => {
                    return Err(CliError(format!(
                        "graded computes over poly:N with N = --degree; rig `{rig}` does not match"
                    )))
                }
                (_, false, Some(d)) => *d,
                (_, false, None) => return Err(CliError("graded needs --degree".into())),
            };
            (cmd_graded(graph, degree)?, format!("poly:{degree}"))
        }
        Command::Classify { category } => (cmd_classify(rig, category)?, rig.to_string()),
        Command::FunctorCheck { src, tgt, map } => (cmd_functor_check(rig, src, tgt, map)?, rig.to_string()),
        Command::Matrix { op, input } => (cmd_matrix(rig, *op, input)?, rig.to_string()),
        Command::Compare { left, right } => (cmd_compare(rig, left, right)?, rig.to_string()),
    };
    Ok(outcome)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Validate { .. } => "validate",
        Command::Zeta { .. } => "zeta",
        Command::Mobius { .. } => "mobius",
        Command::Euler { .. } => "euler",
        Command::NerveEuler { .. } => "nerve-euler",
        Command::Magnitude { .. } => "magnitude",
        Command::Graded { .. } => "graded",
        Command::Classify { .. } => "classify",
        Command::FunctorCheck { .. } => "functor-check",
        Command::Matrix { .. } => "matrix",
        Command::Compare { .. } => "compare",
    }
}

/// Runs the command line with an explicit environment value for the rig
/// variable, writing the report to `out` and diagnostics to `err`.
pub fn run_with_env<W: Write, E: Write>(args: &[String], env_rig: Option<&str>, out: &mut W, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    return 0;
                }
                _ => 1,
            };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let start = Instant::now();
    let result = par::with_threads(cli.threads, || dispatch(&cli, env_rig));
    match result {
        Ok((outcome, rig)) => {
            let timing = if cli.timing {
                json!({ "elapsed_ms": start.elapsed().as_secs_f64() * 1e3, "threads": cli.threads })
            } else {
                Value::Null
            };
            let report = json!({
                "command": command_name(&cli.command),
                "arguments": args.iter().skip(1).collect::<Vec<_>>(),
                "rig": rig,
                "results": outcome.results,
                "warnings": outcome.warnings,
                "timing": timing,
            });
            let text = serde_json::to_string_pretty(&report).expect("reports serialize");
            let _ = writeln!(out, "{text}");
            outcome.exit
        }
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

/// Runs the command line, reading the rig variable from the environment.
pub fn run<W: Write, E: Write>(args: &[String], out: &mut W, err: &mut E) -> i32 {
    let env = std::env::var(RIG_ENV).ok();
    run_with_env(args, env.as_deref(), out, err)
}

/// Integer value of a rendered report entry, for callers that post-process.
pub fn parse_rendered_integer(s: &str) -> Option<i64> {
    parse_rational(s).filter(|q| q.is_integer()).and_then(|q| q.to_integer().to_i64())
}
