//! Closed-form evaluation of `R_α(S(G,t))` and `R_α(P(G,t))`.
//!
//! Both evaluators reduce to weighted sums `count · a^α · b^α` where `count`
//! is an exact integer built from `n^k`, `ψ(k)` and the base degrees. The
//! integers are only converted to `f64` at that final multiplication, so the
//! cost is `O(|E| + |V|)` big-integer operations regardless of `t`.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::counts::{edge_counters, exact_quotient, power, psi};
use crate::error::{Error, Result};
use crate::graph::{tau_pair, Graph, Vertex};
use crate::index::{randic_direct, IndexParams, IndexValue};
use crate::sierpinski::{build_polymeric, build_sierpinski, check_base};

/// Relative tolerance used for every floating-point comparison.
pub const REL_TOL: f64 = 1e-9;
/// Absolute floor under the relative tolerance.
pub const ABS_FLOOR: f64 = 1e-12;

/// `|value - reference| <= max(rel_tol · |reference|, ABS_FLOOR)`.
pub fn agrees(value: f64, reference: f64, rel_tol: f64) -> bool {
    (value - reference).abs() <= (rel_tol * reference.abs()).max(ABS_FLOOR)
}

/// `|value - reference| / |reference|`, or the absolute error when the
/// reference is zero.
pub fn relative_error(value: f64, reference: f64) -> f64 {
    let diff = (value - reference).abs();
    if reference == 0.0 {
        diff
    } else {
        diff / reference.abs()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// Generalized Sierpiński graph `S(G,t)`.
    Sierpinski,
    /// Polymeric Sierpiński graph `P(G,t)`.
    Polymeric,
}

impl Variant {
    pub fn symbol(self) -> &'static str {
        match self {
            Variant::Sierpinski => "S",
            Variant::Polymeric => "P",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    ClosedForm,
    /// Explicit construction followed by [`randic_direct`].
    Oracle,
}

/// One degree class of one base edge: `count` copies whose endpoints have
/// degrees `degrees`, contributing `value = count · a^α · b^α`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassTerm {
    pub class: (u8, u8),
    pub count: BigUint,
    pub degrees: (u64, u64),
    pub value: IndexValue,
}

/// The four class terms of one base edge and their sum.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeTerms {
    pub edge: (Vertex, Vertex),
    pub terms: [ClassTerm; 4],
    pub value: IndexValue,
}

/// Per-edge terms `W_{x,y}` of `R_α(S(G,t))`, in canonical edge order.
#[derive(Clone, Debug, PartialEq)]
pub struct SierpinskiTermBreakdown {
    pub edges: Vec<EdgeTerms>,
    pub total: IndexValue,
}

/// `R_α(P(G,1))` split into hub edges and lifted base edges.
#[derive(Clone, Debug, PartialEq)]
pub struct PolymericBaseBreakdown {
    pub hub: IndexValue,
    pub lifted: Vec<EdgeTerms>,
    pub total: IndexValue,
}

/// `R_α(P(G,t)) = β_1 + ... + β_7` for `t >= 2`.
///
/// `beta[k]` holds `β_{k+1}`: level-1 hub edges, level-1 base edges, hub
/// edges of levels `2..t-1`, base edges of levels `2..t-1`, edges to the next
/// level's hubs, level-`t` hub edges, level-`t` base edges. `w4` and `w7` are
/// the per-edge terms of `β_4` and `β_7`.
#[derive(Clone, Debug, PartialEq)]
pub struct PolymericBetaBreakdown {
    pub beta: [IndexValue; 7],
    pub w4: Vec<EdgeTerms>,
    pub w7: Vec<EdgeTerms>,
    pub total: IndexValue,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Breakdown {
    Sierpinski(SierpinskiTermBreakdown),
    PolymericBase(PolymericBaseBreakdown),
    Polymeric(Box<PolymericBetaBreakdown>),
    /// Oracle values carry no decomposition.
    None,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndexReport {
    pub variant: Variant,
    pub t: u32,
    pub params: IndexParams,
    pub value: IndexValue,
    pub provenance: Provenance,
    pub breakdown: Breakdown,
}

fn sum<'a>(params: &IndexParams, values: impl IntoIterator<Item = &'a IndexValue>) -> IndexValue {
    let mut total = params.zero();
    for v in values {
        total += v;
    }
    total
}

fn unsigned(value: BigInt) -> BigUint {
    assert!(!value.is_negative(), "negative copy count; base graph is not simple");
    value.magnitude().clone()
}

/// Terms of one edge whose class `(i, j)` copies have degrees
/// `(d(x) + offset + i, d(y) + offset + j)`.
fn edge_terms(
    params: &IndexParams,
    edge: (Vertex, Vertex),
    degrees: (u64, u64),
    offset: u64,
    counts: [BigInt; 4],
) -> EdgeTerms {
    let [c00, c01, c10, c11] = counts;
    let term = |i: u8, j: u8, count: BigInt| {
        let a = degrees.0 + offset + u64::from(i);
        let b = degrees.1 + offset + u64::from(j);
        let value = params.weigh(&count, &[a, b]);
        ClassTerm {
            class: (i, j),
            count: unsigned(count),
            degrees: (a, b),
            value,
        }
    };
    let terms = [term(0, 0, c00), term(0, 1, c01), term(1, 0, c10), term(1, 1, c11)];
    let value = sum(params, terms.iter().map(|t| &t.value));
    EdgeTerms { edge, terms, value }
}

/// One copy of the edge, with both endpoints in class 0.
fn single() -> [BigInt; 4] {
    [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::zero()]
}

struct EdgeData {
    edge: (Vertex, Vertex),
    dx: u64,
    dy: u64,
    tau: u64,
}

fn edge_data(base: &Graph) -> Vec<EdgeData> {
    base.edges()
        .iter()
        .map(|&(x, y)| EdgeData {
            edge: (x, y),
            dx: base.degree(x) as u64,
            dy: base.degree(y) as u64,
            tau: tau_pair(base, x, y).expect("canonical edge") as u64,
        })
        .collect()
}

/// `R_α(S(G,t))` from the edge-class counters. `t = 1` is `R_α(G)` itself.
pub fn randic_sierpinski(base: &Graph, t: u32, params: &IndexParams) -> Result<IndexReport> {
    if t < 1 {
        return Err(Error::LevelTooSmall { t, min: 1 });
    }
    check_base(base)?;
    let n = base.order() as u64;
    let edges: Vec<EdgeTerms> = edge_data(base)
        .into_iter()
        .map(|e| {
            let counts = if t == 1 {
                single()
            } else {
                edge_counters(n, t, e.dx, e.dy, e.tau)
            };
            edge_terms(params, e.edge, (e.dx, e.dy), 0, counts)
        })
        .collect();
    let total = sum(params, edges.iter().map(|e| &e.value));
    if t == 1 {
        debug_assert_eq!(Ok(&total), randic_direct(base, params).as_ref());
    }
    Ok(IndexReport {
        variant: Variant::Sierpinski,
        t,
        params: *params,
        value: total.clone(),
        provenance: Provenance::ClosedForm,
        breakdown: Breakdown::Sierpinski(SierpinskiTermBreakdown { edges, total }),
    })
}

fn check_polymeric_base(base: &Graph) -> Result<()> {
    check_base(base)?;
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// `R_α(P(G,1)) = n^α Σ_x (d(x)+1)^α + Σ_{xy} (d(x)+1)^α (d(y)+1)^α`.
pub fn randic_polymeric_base(base: &Graph, params: &IndexParams) -> Result<PolymericBaseBreakdown> {
    check_polymeric_base(base)?;
    let n = base.order() as u64;
    let one = BigInt::one();
    let hub = sum(
        params,
        base.degrees()
            .map(|d| params.weigh(&one, &[n, d as u64 + 1]))
            .collect::<Vec<_>>()
            .iter(),
    );
    let lifted: Vec<EdgeTerms> = edge_data(base)
        .into_iter()
        .map(|e| {
            edge_terms(params, e.edge, (e.dx, e.dy), 1, single())
        })
        .collect();
    let mut total = hub.clone();
    for e in &lifted {
        total += &e.value;
    }
    Ok(PolymericBaseBreakdown { hub, lifted, total })
}

/// `R_α(P(G,t))` as the seven-term decomposition; `t = 1` uses
/// [`randic_polymeric_base`].
pub fn randic_polymeric(base: &Graph, t: u32, params: &IndexParams) -> Result<IndexReport> {
    if t < 1 {
        return Err(Error::LevelTooSmall { t, min: 1 });
    }
    let (value, breakdown) = if t == 1 {
        let b = randic_polymeric_base(base, params)?;
        (b.total.clone(), Breakdown::PolymericBase(b))
    } else {
        check_polymeric_base(base)?;
        let b = polymeric_betas(base, t, params);
        (b.total.clone(), Breakdown::Polymeric(Box::new(b)))
    };
    Ok(IndexReport {
        variant: Variant::Polymeric,
        t,
        params: *params,
        value,
        provenance: Provenance::ClosedForm,
        breakdown,
    })
}

fn polymeric_betas(base: &Graph, t: u32, params: &IndexParams) -> PolymericBetaBreakdown {
    let n = base.order() as u64;
    let nb = BigInt::from(n);
    let hub = n + 1;
    let psi2 = BigInt::from(psi(n, t - 2));
    let psi1 = BigInt::from(psi(n, t - 1));
    let top = BigInt::from(power(n, t - 1));
    let t2 = BigInt::from(t - 2);
    let t1 = BigInt::from(t - 1);
    // Sums of ψ over the inner levels, as exact quotients by n - 1.
    let c3 = exact_quotient(&t2 - &nb * &psi2, n);
    let c4 = exact_quotient(&t2 - &psi2, n);
    let c5 = exact_quotient(&t1 - &psi1, n);
    let one = BigInt::one();

    // Each entry is (count, hub degree, offset) for copies of degree d + offset.
    let vertex_sum = |terms: &VertexTerms<'_>| {
        let mut total = params.zero();
        for d in base.degrees() {
            let d = d as u64;
            for (count, hub_degree, offset) in terms(&BigInt::from(d)) {
                total += &params.weigh(&unsigned(count).into(), &[hub_degree, d + offset]);
            }
        }
        total
    };

    let beta1 = vertex_sum(&|_| vec![(one.clone(), n, 2)]);
    let beta3 = vertex_sum(&|d| vec![(&nb * &psi2 + &c3 * d, hub, 2), (-(&c3 * d), hub, 3)]);
    let beta5 = vertex_sum(&|d| vec![(&psi1 + &c5 * d, hub, 2), (-(&c5 * d), hub, 3)]);
    let beta6 = vertex_sum(&|d| vec![(&top - d * &psi1, hub, 1), (d * &psi1, hub, 2)]);

    let data = edge_data(base);
    let w2: Vec<EdgeTerms> = data
        .iter()
        .map(|e| edge_terms(params, e.edge, (e.dx, e.dy), 2, single()))
        .collect();
    let w4: Vec<EdgeTerms> = data
        .iter()
        .map(|e| {
            let (dx, dy, tau) = (BigInt::from(e.dx), BigInt::from(e.dy), BigInt::from(e.tau));
            let counts = [
                (&nb - &dx - &dy + &tau) * &psi2,
                (&dy - &tau) * &psi2 + &dx * &c4,
                (&dx - &tau) * &psi2 + &dy * &c4,
                (&tau + 1) * &psi2 - (&dx + &dy + 1) * &c4,
            ];
            edge_terms(params, e.edge, (e.dx, e.dy), 2, counts)
        })
        .collect();
    let w7: Vec<EdgeTerms> = data
        .iter()
        .map(|e| edge_terms(params, e.edge, (e.dx, e.dy), 1, edge_counters(n, t, e.dx, e.dy, e.tau)))
        .collect();

    let beta2 = sum(params, w2.iter().map(|e| &e.value));
    let beta4 = sum(params, w4.iter().map(|e| &e.value));
    let beta7 = sum(params, w7.iter().map(|e| &e.value));
    let beta = [beta1, beta2, beta3, beta4, beta5, beta6, beta7];
    let total = sum(params, beta.iter());
    PolymericBetaBreakdown { beta, w4, w7, total }
}

/// `(count, hub degree, offset)` entries for a base vertex of degree `d`.
type VertexTerms<'a> = dyn Fn(&BigInt) -> Vec<(BigInt, u64, u64)> + 'a;

/// Builds the graph explicitly and evaluates [`randic_direct`] on it.
pub fn randic_oracle(
    variant: Variant,
    base: &Graph,
    t: u32,
    params: &IndexParams,
    budget: u64,
) -> Result<IndexReport> {
    let graph = match variant {
        Variant::Sierpinski => build_sierpinski(base, t, budget)?,
        Variant::Polymeric => build_polymeric(base, t, budget)?.graph,
    };
    Ok(IndexReport {
        variant,
        t,
        params: *params,
        value: randic_direct(&graph, params)?,
        provenance: Provenance::Oracle,
        breakdown: Breakdown::None,
    })
}

/// Dispatches to [`randic_sierpinski`] or [`randic_polymeric`].
pub fn randic_closed(variant: Variant, base: &Graph, t: u32, params: &IndexParams) -> Result<IndexReport> {
    match variant {
        Variant::Sierpinski => randic_sierpinski(base, t, params),
        Variant::Polymeric => randic_polymeric(base, t, params),
    }
}
