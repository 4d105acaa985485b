//! Grid certification of the inequality registry, endpoint-limit checks for
//! best constants, and pairwise comparison of bounds.
//!
//! Every margin is evaluated from direct interval evaluations of sin, cos,
//! tan and tanh, never through the remainder series, so a certified verdict
//! is independent of the series machinery.

use std::fmt;

use rayon::prelude::*;
use rug::ops::Pow;
use rug::Float;
use serde::{Serialize, Serializer};

use crate::arith::{to_decimal, Enclosure};
use crate::best_constants::bounds::{bound_spec, BoundSpec, Domain, PointValues, PreparedBound, Side, Target};
use crate::error::{rejected, Result};
use crate::zeta_sums::ClosedForm;

/// Every registered inequality id.
pub const REGISTRY: [&str; 33] = [
    "becker-stark",
    "banjac",
    "chen.tan.N1",
    "tanh.corollary.m1",
    "tanh.corollary.m2",
    "chen.tanh.N1N2",
    "chen-sandor.sec",
    "chen.sec.N1",
    "wilker.classic",
    "wilker.sumner",
    "chen-cheung.wilker.1",
    "chen-cheung.wilker.2",
    "huygens.classic",
    "chen-cheung.huygens.1",
    "chen-cheung.huygens.2",
    "lazarevic",
    "wu-srivastava",
    "neuman-sandor.chain",
    "chen-sandor.chain",
    "wilker.sharp.N1",
    "wilker.sharp.N2",
    "wilker.alphabeta.N1",
    "wilker.conjecture2.N",
    "huygens.sharp.N1",
    "huygens.sharp.N2",
    "huygens.varrho.N",
    "papenfuss",
    "bach",
    "ge",
    "sun-zhu",
    "sun-zhu.open",
    "chen.sectan.N2",
    "sec.remainder.N",
];

/// Relative guard band at each open endpoint.
pub const DEFAULT_GUARD: f64 = 1e-6;

/// Highest precision reached by escalation.
pub const MAX_PRECISION: u32 = 2048;

/// Orders swept by the `.N` ids.
pub fn default_orders(id: &str) -> Option<Vec<u32>> {
    match id {
        "wilker.conjecture2.N" | "huygens.varrho.N" => Some((1..=4).collect()),
        "sec.remainder.N" => Some((0..=4).collect()),
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Inconclusive,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Violated => "violated",
        })
    }
}

fn dec<S: Serializer>(x: &Float, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_decimal(x))
}

fn dec_opt<S: Serializer>(x: &Option<Float>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&to_decimal(v)),
        None => s.serialize_none(),
    }
}

fn dec_vec<S: Serializer>(xs: &[Float], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(to_decimal))
}

fn enc<S: Serializer>(x: &Option<Enclosure>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&[to_decimal(v.lo()), to_decimal(v.hi())]),
        None => s.serialize_none(),
    }
}

/// One side or link of an inequality; positive on the whole domain when
/// the inequality holds.
#[derive(Debug, Clone)]
enum Margin {
    /// `target − bound`
    Above(Target, PreparedBound),
    /// `bound − target`
    Below(Target, PreparedBound),
    Link(Link),
}

#[derive(Debug, Clone, Copy)]
enum Link {
    /// `(2 + cos x)/3 − sin x/x`
    CusaLeft,
    /// `(x/sin x + cos x)/2 − (2 + cos x)/3`
    CusaRight,
    /// Successive terms of the six-link chain.
    Chain(usize),
}

impl Margin {
    fn label(&self) -> String {
        match self {
            Margin::Above(..) => "lower".into(),
            Margin::Below(..) => "upper".into(),
            Margin::Link(Link::CusaLeft) => "link1".into(),
            Margin::Link(Link::CusaRight) => "link2".into(),
            Margin::Link(Link::Chain(i)) => format!("link{}", i + 1),
        }
    }

    fn eval(&self, p: &PointValues) -> Enclosure {
        match self {
            Margin::Above(t, b) => &t.eval(p) - &b.eval(p),
            Margin::Below(t, b) => &b.eval(p) - &t.eval(p),
            Margin::Link(l) => link_margin(*l, p),
        }
    }
}

fn chain_terms(p: &PointValues) -> [Enclosure; 7] {
    let x = &p.x;
    let s = p.sin().div(x);
    let t = p.tan().div(x);
    let s2 = s.sqr();
    let prec = x.prec();
    let rs = x.div(p.sin());
    let rt = x.div(p.tan());
    [
        (&s2 + &t).mul_pow2(-1),
        &s2 * &t,
        (&s.mul_int(2) + &t).div_int(3),
        &s2.cbrt() * &t.cbrt(),
        (&rs.sqr() + &rt).mul_pow2(-1),
        (&rs.mul_int(2) + &rt).div_int(3),
        Enclosure::from_int(1, prec),
    ]
}

fn link_margin(l: Link, p: &PointValues) -> Enclosure {
    let x = &p.x;
    let prec = x.prec();
    match l {
        Link::CusaLeft => {
            let mid = (&Enclosure::from_int(2, prec) + p.cos()).div_int(3);
            &mid - &p.sin().div(x)
        }
        Link::CusaRight => {
            let mid = (&Enclosure::from_int(2, prec) + p.cos()).div_int(3);
            &(&x.div(p.sin()) + p.cos()).mul_pow2(-1) - &mid
        }
        Link::Chain(i) => {
            let terms = chain_terms(p);
            &terms[i] - &terms[i + 1]
        }
    }
}

/// Adverse perturbation of the best constants: the lower sharp constant
/// `c` becomes `c + lower·|c|`, the upper one `c − upper·|c|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tweak {
    pub lower: f64,
    pub upper: f64,
}

#[derive(Debug, Clone)]
struct Plan {
    domain: Domain,
    margins: Vec<Margin>,
}

fn family_key(id: &str, order: Option<u32>) -> String {
    match (id.strip_suffix(".N"), order) {
        (Some(base), Some(n)) => format!("{base}.N{n}"),
        _ => id.to_string(),
    }
}

fn plan(id: &str, order: Option<u32>, prec: u32, tweak: Option<Tweak>) -> Result<Plan> {
    match id {
        "neuman-sandor.chain" => {
            return Ok(Plan {
                domain: Domain::HalfPi,
                margins: vec![Margin::Link(Link::CusaLeft), Margin::Link(Link::CusaRight)],
            })
        }
        "chen-sandor.chain" => {
            return Ok(Plan {
                domain: Domain::HalfPi,
                margins: (0..6).map(|i| Margin::Link(Link::Chain(i))).collect(),
            })
        }
        _ => {}
    }
    let key = family_key(id, order);
    let mut margins = Vec::new();
    let mut domain = None;
    for side in [Side::Lower, Side::Upper] {
        let Ok(spec) = bound_spec(&format!("{key}.{side}")) else {
            continue;
        };
        domain = Some(spec.domain());
        let mut b = spec.expr.prepare(prec);
        if let Some(tw) = tweak {
            match side {
                Side::Lower => b.tweak_sharp(tw.lower),
                Side::Upper => b.tweak_sharp(-tw.upper),
            }
        }
        margins.push(match side {
            Side::Lower => Margin::Above(spec.target, b),
            Side::Upper => Margin::Below(spec.target, b),
        });
    }
    match domain {
        Some(domain) => Ok(Plan { domain, margins }),
        None => Err(rejected(format!("unknown inequality id `{id}`"))),
    }
}

/// Chebyshev nodes of the first kind on `[lo, hi]`, ascending, rounded to
/// `prec` bits.
pub fn chebyshev_nodes(lo: &Float, hi: &Float, n: usize, prec: u32) -> Vec<Float> {
    let c = Float::with_val(prec, lo + hi) / 2u32;
    let r = Float::with_val(prec, hi - lo) / 2u32;
    let pi = Float::with_val(prec, rug::float::Constant::Pi);
    let mut out: Vec<Float> = (0..n)
        .map(|i| {
            let theta = Float::with_val(prec, &pi * (2 * i + 1) as u32) / (2 * n) as u32;
            Float::with_val(prec, &c + &(Float::with_val(prec, &r * theta.cos())))
        })
        .collect();
    out.sort_by(|a, b| a.partial_cmp(b).expect("finite nodes"));
    out
}

/// Interior grid `[g, H − g]` (the tanh window keeps its closed right end).
fn grid(domain: Domain, n: usize, guard: f64, prec: u32) -> Vec<Float> {
    let hi_end = domain.upper(prec).mid();
    let g = Float::with_val(prec, &hi_end * guard);
    let hi = match domain {
        Domain::HalfPi => Float::with_val(prec, &hi_end - &g),
        Domain::Tanh => hi_end,
    };
    chebyshev_nodes(&g, &hi, n, prec)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Status {
    Certified,
    Unresolved,
    Violated,
}

#[derive(Debug, Clone)]
struct PointResult {
    x: Float,
    status: Status,
    /// Smallest rigorous lower bound over the margins.
    min_lo: Float,
    /// Margin that decided the status, for violated or unresolved points.
    witness: Option<(String, Enclosure)>,
    precision: u32,
}

fn precision_ladder(start: u32, max: u32) -> Vec<u32> {
    let mut out = vec![start];
    let mut p = start;
    while p < max {
        p = (p * 2).min(max);
        out.push(p);
    }
    out
}

fn eval_point(x: &Float, plans: &[(u32, Plan)]) -> PointResult {
    let mut last = None;
    for (prec, plan) in plans {
        let p = PointValues::new(Enclosure::point(Float::with_val(*prec, x)));
        let values: Vec<Enclosure> = plan.margins.iter().map(|m| m.eval(&p)).collect();
        let min_lo = values
            .iter()
            .map(|v| v.lo().clone())
            .min_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or_else(|| Float::with_val(*prec, 0));
        if let Some(i) = values.iter().position(|v| v.is_negative()) {
            return PointResult {
                x: x.clone(),
                status: Status::Violated,
                min_lo,
                witness: Some((plan.margins[i].label(), values[i].clone())),
                precision: *prec,
            };
        }
        if values.iter().all(Enclosure::is_positive) {
            return PointResult {
                x: x.clone(),
                status: Status::Certified,
                min_lo,
                witness: None,
                precision: *prec,
            };
        }
        let i = values.iter().position(|v| !v.is_positive()).expect("unresolved margin");
        last = Some(PointResult {
            x: x.clone(),
            status: Status::Unresolved,
            min_lo,
            witness: Some((plan.margins[i].label(), values[i].clone())),
            precision: *prec,
        });
    }
    last.expect("at least one precision level")
}

#[derive(Debug, Clone, Serialize)]
pub struct OrderSummary {
    pub order: u32,
    pub verdict: Verdict,
    #[serde(serialize_with = "dec")]
    pub min_margin: Float,
    #[serde(serialize_with = "dec")]
    pub argmin: Float,
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityReport {
    pub inequality_id: String,
    pub domain: String,
    /// Relative guard band at the open endpoints.
    pub guard: f64,
    pub grid_points: usize,
    pub sides: Vec<String>,
    #[serde(serialize_with = "dec")]
    pub min_margin: Float,
    #[serde(serialize_with = "dec")]
    pub argmin: Float,
    pub verdict: Verdict,
    pub precision_bits: u32,
    pub max_precision_used: u32,
    /// Point and margin enclosure where a violation was found.
    #[serde(serialize_with = "dec_opt")]
    pub violation_at: Option<Float>,
    /// Points not resolved at the highest precision.
    pub unresolved_points: usize,
    #[serde(serialize_with = "enc")]
    pub tightest_unresolved: Option<Enclosure>,
    pub orders: Vec<OrderSummary>,
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub grid_points: usize,
    pub precision: u32,
    pub guard: f64,
    pub max_precision: u32,
    pub tweak: Option<Tweak>,
    /// Overrides the swept orders of a `.N` id.
    pub orders: Option<Vec<u32>>,
}

impl VerifyOptions {
    pub fn new(grid_points: usize, precision: u32) -> Self {
        VerifyOptions {
            grid_points,
            precision,
            guard: DEFAULT_GUARD,
            max_precision: MAX_PRECISION.max(precision),
            tweak: None,
            orders: None,
        }
    }
}

pub fn verify(inequality_id: &str, grid_points: usize, precision: u32) -> Result<InequalityReport> {
    verify_with(inequality_id, &VerifyOptions::new(grid_points, precision))
}

struct OrderRun {
    order: Option<u32>,
    sides: Vec<String>,
    domain: Domain,
    points: Vec<PointResult>,
}

fn run_order(id: &str, order: Option<u32>, opts: &VerifyOptions) -> Result<OrderRun> {
    let ladder = precision_ladder(opts.precision, opts.max_precision);
    let plans = ladder
        .iter()
        .map(|&p| plan(id, order, p, opts.tweak).map(|pl| (p, pl)))
        .collect::<Result<Vec<_>>>()?;
    let domain = plans[0].1.domain;
    let sides = plans[0].1.margins.iter().map(Margin::label).collect();
    let nodes = grid(domain, opts.grid_points, opts.guard, opts.precision);
    let points = nodes.par_iter().map(|x| eval_point(x, &plans)).collect();
    Ok(OrderRun {
        order,
        sides,
        domain,
        points,
    })
}

/// Smallest by `key`, ties broken by the smaller abscissa.
fn argmin_by<'a>(points: impl Iterator<Item = &'a PointResult>, key: impl Fn(&PointResult) -> Float) -> Option<&'a PointResult> {
    points.min_by(|a, b| {
        key(a)
            .partial_cmp(&key(b))
            .unwrap_or(std::cmp::Ordering::Equal)
            .then_with(|| a.x.partial_cmp(&b.x).unwrap_or(std::cmp::Ordering::Equal))
    })
}

fn verdict_of(points: &[PointResult]) -> Verdict {
    match points.iter().map(|p| &p.status).max() {
        Some(Status::Violated) => Verdict::Violated,
        Some(Status::Unresolved) => Verdict::Inconclusive,
        _ => Verdict::Certified,
    }
}

pub fn verify_with(inequality_id: &str, opts: &VerifyOptions) -> Result<InequalityReport> {
    if opts.grid_points < 3 {
        return Err(rejected("grid needs at least 3 points"));
    }
    if !REGISTRY.contains(&inequality_id) {
        return Err(rejected(format!("unknown inequality id `{inequality_id}`")));
    }
    let orders: Vec<Option<u32>> = match opts.orders.clone().or_else(|| default_orders(inequality_id)) {
        Some(list) if inequality_id.ends_with(".N") => list.into_iter().map(Some).collect(),
        _ => vec![None],
    };
    let runs = orders
        .into_iter()
        .map(|o| run_order(inequality_id, o, opts))
        .collect::<Result<Vec<_>>>()?;
    let all: Vec<&PointResult> = runs.iter().flat_map(|r| r.points.iter()).collect();
    let best = argmin_by(all.iter().copied(), |p| p.min_lo.clone()).expect("non-empty grid");
    let violation = all
        .iter()
        .copied()
        .filter(|p| p.status == Status::Violated)
        .min_by(|a, b| a.x.partial_cmp(&b.x).unwrap_or(std::cmp::Ordering::Equal));
    let unresolved: Vec<&PointResult> = all.iter().copied().filter(|p| p.status == Status::Unresolved).collect();
    let tightest = unresolved
        .iter()
        .filter_map(|p| p.witness.as_ref().map(|w| w.1.clone()))
        .min_by(|a, b| a.width().partial_cmp(&b.width()).unwrap_or(std::cmp::Ordering::Equal));
    let verdict = runs.iter().map(|r| verdict_of(&r.points)).max().unwrap_or(Verdict::Certified);
    let order_summaries = runs
        .iter()
        .filter_map(|r| {
            let o = r.order?;
            let m = argmin_by(r.points.iter(), |p| p.min_lo.clone())?;
            Some(OrderSummary {
                order: o,
                verdict: verdict_of(&r.points),
                min_margin: m.min_lo.clone(),
                argmin: m.x.clone(),
            })
        })
        .collect();
    Ok(InequalityReport {
        inequality_id: inequality_id.to_string(),
        domain: runs[0].domain.name().to_string(),
        guard: opts.guard,
        grid_points: opts.grid_points,
        sides: runs[0].sides.clone(),
        min_margin: Float::with_val(opts.precision, &best.min_lo),
        argmin: best.x.clone(),
        verdict,
        precision_bits: opts.precision,
        max_precision_used: all.iter().map(|p| p.precision).max().unwrap_or(opts.precision),
        violation_at: violation.map(|p| p.x.clone()),
        unresolved_points: unresolved.len(),
        tightest_unresolved: tightest,
        orders: order_summaries,
    })
}

/// Verifies every registry id in order.
pub fn verify_all(grid_points: usize, precision: u32) -> Result<Vec<InequalityReport>> {
    REGISTRY.iter().map(|id| verify(id, grid_points, precision)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Endpoint {
    #[serde(rename = "0+")]
    ZeroPlus,
    #[serde(rename = "pi/2-")]
    HalfPiMinus,
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Endpoint::ZeroPlus => "0+",
            Endpoint::HalfPiMinus => "pi/2-",
        })
    }
}

impl std::str::FromStr for Endpoint {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" | "0+" | "zero" => Ok(Endpoint::ZeroPlus),
            "pi/2" | "pi/2-" | "π/2" | "π/2-" | "half-pi" => Ok(Endpoint::HalfPiMinus),
            other => Err(rejected(format!("unknown endpoint `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitCheck {
    pub expression_id: String,
    pub endpoint: Endpoint,
    /// Exact form of the claimed limit.
    pub claimed_form: String,
    #[serde(serialize_with = "dec")]
    pub claimed_limit: Float,
    #[serde(serialize_with = "dec_vec")]
    pub sample_points: Vec<Float>,
    #[serde(serialize_with = "dec_vec")]
    pub samples: Vec<Float>,
    #[serde(serialize_with = "dec")]
    pub extrapolated: Float,
    /// Relative discrepancy, or absolute when the claimed limit is 0.
    #[serde(serialize_with = "dec")]
    pub discrepancy: Float,
    pub diverged: bool,
    pub passed: bool,
}

/// Tolerance on the extrapolated limit.
pub const LIMIT_TOLERANCE: f64 = 1e-6;

const LIMIT_SAMPLES: usize = 8;

/// Families whose best constants are endpoint limits, with the side whose
/// constant is attained at `0⁺` (the other side's is attained at `(π/2)⁻`).
fn limit_family(family: &str) -> Option<Side> {
    let base = family.rsplit_once(".N").map_or(family, |(b, _)| b);
    match base {
        "sun-zhu.open" | "wilker.sharp" | "huygens.sharp" | "wilker.alphabeta" | "sec.remainder" => Some(Side::Lower),
        "wilker.conjecture2" | "huygens.varrho" => Some(Side::Upper),
        _ => None,
    }
}

/// Ids accepted by [`endpoint_limit`]: `sun-zhu.ratio` and
/// `<family>.N<k>.ratio` for the sharp families.
pub fn limit_expression(expression_id: &str) -> Result<(String, Side)> {
    let family = expression_id
        .strip_suffix(".ratio")
        .ok_or_else(|| rejected(format!("unknown limit expression `{expression_id}`")))?;
    let family = if family == "sun-zhu" { "sun-zhu.open" } else { family };
    let zero_side = limit_family(family).ok_or_else(|| rejected(format!("unknown limit expression `{expression_id}`")))?;
    Ok((family.to_string(), zero_side))
}

/// The ratio whose endpoint limit is the sharp constant of `spec`:
/// `(target − other terms) / shape of the sharp term`.
fn sharp_ratio(spec: &BoundSpec, p: &PointValues, prec: u32) -> Enclosure {
    let idx = spec.expr.sharp.expect("sharp family");
    let mut rest = spec.target.eval(p);
    for (i, t) in spec.expr.terms.iter().enumerate() {
        if i == idx {
            continue;
        }
        let one = BoundSpec {
            id: String::new(),
            target: spec.target,
            side: spec.side,
            expr: crate::best_constants::BoundExpr {
                terms: vec![t.clone()],
                sharp: None,
            },
        };
        rest = &rest - &one.expr.prepare(prec).eval(p);
    }
    let mut unit = spec.expr.terms[idx].clone();
    unit.coeff = ClosedForm::rational(1);
    let shape = crate::best_constants::BoundExpr {
        terms: vec![unit],
        sharp: None,
    };
    rest.div(&shape.prepare(prec).eval(p))
}

/// Richardson extrapolation of samples at `h_0 2^{-i}` for an expansion in
/// powers of `h^step`. Returns the final estimate and whether the last
/// corrections grew.
fn richardson(samples: &[Float], step: u32, prec: u32) -> (Float, bool) {
    let n = samples.len();
    let mut table: Vec<Vec<Float>> = vec![samples.to_vec()];
    let base = Float::with_val(prec, 1u32 << step);
    for j in 1..n {
        let prev = &table[j - 1];
        let factor = Float::with_val(prec, base.clone().pow(j as u32)) - 1u32;
        let row: Vec<Float> = (1..prev.len())
            .map(|i| {
                let d = Float::with_val(prec, &prev[i] - &prev[i - 1]);
                Float::with_val(prec, &prev[i] + &(d / &factor))
            })
            .collect();
        table.push(row);
    }
    let diag: Vec<Float> = table.iter().map(|r| r.last().expect("non-empty").clone()).collect();
    let corr: Vec<Float> = diag.windows(2).map(|w| Float::with_val(prec, &w[1] - &w[0]).abs()).collect();
    let k = corr.len();
    let diverged = !diag.iter().all(|v| v.is_finite())
        || (k >= 3 && corr[k - 1] > Float::with_val(prec, &corr[k - 2] * 10u32) && corr[k - 2] > corr[k - 3]);
    (diag.last().expect("non-empty").clone(), diverged)
}

pub fn endpoint_limit(expression_id: &str, endpoint: Endpoint, precision: u32) -> Result<LimitCheck> {
    let (family, zero_side) = limit_expression(expression_id)?;
    let side = match (endpoint, zero_side) {
        (Endpoint::ZeroPlus, s) => s,
        (Endpoint::HalfPiMinus, Side::Lower) => Side::Upper,
        (Endpoint::HalfPiMinus, Side::Upper) => Side::Lower,
    };
    let spec = bound_spec(&format!("{family}.{side}"))?;
    let claimed = spec.expr.terms[spec.expr.sharp.expect("sharp family")].coeff.clone();
    let wp = precision + 64;
    let h0 = Float::with_val(wp, 1) / 16u32;
    let half_pi = Enclosure::pi(wp).mul_pow2(-1).mid();
    let mut points = Vec::with_capacity(LIMIT_SAMPLES);
    let mut samples = Vec::with_capacity(LIMIT_SAMPLES);
    for i in 0..LIMIT_SAMPLES {
        let h = Float::with_val(wp, &h0 >> i as u32);
        let x = match endpoint {
            Endpoint::ZeroPlus => h,
            Endpoint::HalfPiMinus => Float::with_val(wp, &half_pi - &h),
        };
        let p = PointValues::new(Enclosure::point(x.clone()));
        samples.push(sharp_ratio(&spec, &p, wp).mid());
        points.push(x);
    }
    let step = match endpoint {
        Endpoint::ZeroPlus => 2,
        Endpoint::HalfPiMinus => 1,
    };
    let (extrapolated, diverged) = richardson(&samples, step, wp);
    let claimed_value = claimed.eval(wp).mid();
    let diff = Float::with_val(wp, &extrapolated - &claimed_value).abs();
    let discrepancy = if claimed_value.is_zero() {
        diff
    } else {
        diff / claimed_value.clone().abs()
    };
    let passed = !diverged && discrepancy <= LIMIT_TOLERANCE;
    let round = |x: Float| Float::with_val(precision, x);
    Ok(LimitCheck {
        expression_id: expression_id.to_string(),
        endpoint,
        claimed_form: claimed.to_string(),
        claimed_limit: round(claimed_value),
        sample_points: points.into_iter().map(round).collect(),
        samples: samples.into_iter().map(round).collect(),
        extrapolated: round(extrapolated),
        discrepancy: round(discrepancy),
        diverged,
        passed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dominance {
    ADominates,
    BDominates,
    Incomparable,
    Inconclusive,
}

impl fmt::Display for Dominance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dominance::ADominates => "a-dominates",
            Dominance::BDominates => "b-dominates",
            Dominance::Incomparable => "incomparable",
            Dominance::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DominanceReport {
    pub bound_a: String,
    pub bound_b: String,
    pub side: Side,
    pub domain: String,
    pub grid_points: usize,
    pub verdict: Dominance,
    /// A point where `a` is certainly sharper.
    #[serde(serialize_with = "dec_opt")]
    pub witness_a: Option<Float>,
    /// A point where `b` is certainly sharper.
    #[serde(serialize_with = "dec_opt")]
    pub witness_b: Option<Float>,
    /// Points whose order could not be resolved.
    #[serde(serialize_with = "dec_vec")]
    pub unresolved: Vec<Float>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Better {
    A,
    B,
    Unknown,
}

/// Compares two bounds on the same side of the same expression over the
/// guarded interior of their common domain.
pub fn compare_bounds(bound_a: &str, bound_b: &str, grid_points: usize, precision: u32) -> Result<DominanceReport> {
    let a = bound_spec(bound_a)?;
    let b = bound_spec(bound_b)?;
    if a.target != b.target || a.side != b.side {
        return Err(rejected(format!(
            "{bound_a} and {bound_b} do not bound the same expression from the same side"
        )));
    }
    if grid_points < 3 {
        return Err(rejected("grid needs at least 3 points"));
    }
    let domain = a.domain();
    let ladder = precision_ladder(precision, MAX_PRECISION.max(precision));
    let prepared: Vec<(u32, PreparedBound, PreparedBound)> = ladder
        .iter()
        .map(|&p| (p, a.expr.prepare(p), b.expr.prepare(p)))
        .collect();
    let nodes = grid(domain, grid_points, DEFAULT_GUARD, precision);
    let side = a.side;
    let outcome: Vec<Better> = nodes
        .par_iter()
        .map(|x| {
            for (p, pa, pb) in &prepared {
                let pv = PointValues::new(Enclosure::point(Float::with_val(*p, x)));
                let d = &pa.eval(&pv) - &pb.eval(&pv);
                let a_better = match side {
                    Side::Lower => d.is_positive(),
                    Side::Upper => d.is_negative(),
                };
                let b_better = match side {
                    Side::Lower => d.is_negative(),
                    Side::Upper => d.is_positive(),
                };
                if a_better {
                    return Better::A;
                }
                if b_better {
                    return Better::B;
                }
            }
            Better::Unknown
        })
        .collect();
    let first = |w: Better| nodes.iter().zip(&outcome).find(|(_, o)| **o == w).map(|(x, _)| x.clone());
    let witness_a = first(Better::A);
    let witness_b = first(Better::B);
    let unresolved: Vec<Float> = nodes
        .iter()
        .zip(&outcome)
        .filter(|(_, o)| **o == Better::Unknown)
        .map(|(x, _)| x.clone())
        .collect();
    let verdict = match (&witness_a, &witness_b) {
        (Some(_), Some(_)) => Dominance::Incomparable,
        _ if !unresolved.is_empty() => Dominance::Inconclusive,
        (Some(_), None) => Dominance::ADominates,
        (None, Some(_)) => Dominance::BDominates,
        (None, None) => Dominance::Inconclusive,
    };
    Ok(DominanceReport {
        bound_a: bound_a.to_string(),
        bound_b: bound_b.to_string(),
        side,
        domain: domain.name().to_string(),
        grid_points,
        verdict,
        witness_a,
        witness_b,
        unresolved,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_registry_id_has_a_plan() {
        for id in REGISTRY {
            let orders = default_orders(id).unwrap_or_else(|| vec![0]);
            for n in orders {
                let order = id.ends_with(".N").then_some(n);
                let pl = plan(id, order, 128, None).unwrap_or_else(|e| panic!("{id}: {e}"));
                assert!(!pl.margins.is_empty(), "{id}");
            }
        }
        assert!(verify("nope", 11, 128).is_err());
        assert!(verify("becker-stark", 2, 128).is_err());
    }

    #[test]
    fn nodes_are_interior_and_ascending() {
        let lo = Float::with_val(128, 0.1);
        let hi = Float::with_val(128, 1.5);
        let xs = chebyshev_nodes(&lo, &hi, 9, 128);
        assert_eq!(xs.len(), 9);
        assert!(xs.windows(2).all(|w| w[0] < w[1]));
        assert!(xs[0] > lo && xs[8] < hi);
        assert!((xs[4].clone() - 0.8f64).abs() < 1e-15);
    }

    #[test]
    fn small_grids_certify() {
        for id in ["becker-stark", "wilker.classic", "chen-sandor.chain", "sec.remainder.N"] {
            let r = verify(id, 11, 256).unwrap();
            assert_eq!(r.verdict, Verdict::Certified, "{id}");
            assert!(r.min_margin > 0);
        }
    }

    #[test]
    fn richardson_recovers_polynomial_limit() {
        let samples: Vec<Float> = (0..8)
            .map(|i| {
                let h = Float::with_val(128, 0.5f64.powi(i));
                Float::with_val(128, 3u32) + Float::with_val(128, &h * 2u32) - Float::with_val(128, h.square_ref())
            })
            .collect();
        let (v, diverged) = richardson(&samples, 1, 128);
        assert!(!diverged);
        assert!((v - 3u32).abs() < 1e-30);
    }

    #[test]
    fn limit_expression_ids() {
        assert!(limit_expression("sun-zhu.ratio").is_ok());
        assert!(limit_expression("sec.remainder.N2.ratio").is_ok());
        assert!(limit_expression("banjac.ratio").is_err());
        assert!(limit_expression("wilker.sharp.N1").is_err());
    }
}
