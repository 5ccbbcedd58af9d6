//! Sandwich bounds on `R_α(S(G,t))` for triangle-free base graphs, in terms
//! of `R_α(G)`, `M_{α+1}(G)`, `M_1(G)`, `δ` and `Δ`.
//!
//! For triangle-free `G`, with `h(d) = (d+1)^α - d^α`, the edge-class counters
//! regroup into
//!
//! ```text
//! R_α(S(G,t)) = (n^(t-1) + ψ(t-1)) R_α(G)
//!             + ψ(t-1) Σ_{xy} [(d(y)+1) h(d(y)) d(x)^α + (d(x)+1) h(d(x)) d(y)^α]
//!             + Σ_{xy} (n^(t-2) + ψ(t-2)(d(x)+d(y)+1)) h(d(x)) h(d(y)).
//! ```
//!
//! [`randic_sierpinski_bounds`] bounds the last two sums degree by degree,
//! which is exact for regular bases. [`randic_sierpinski_bounds_stated`]
//! evaluates the commonly quoted form of the bounds, which is not sound: it
//! fails to sandwich the index even for regular bases.

use num_traits::ToPrimitive;

use crate::counts::{power, psi};
use crate::error::{Error, Result};
use crate::graph::{tau_graph, Graph};
use crate::index::{m_index, power as pow, randic_direct, IndexParams};
use crate::sierpinski::check_base;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Bounds {
    pub lower: f64,
    pub upper: f64,
}

impl Bounds {
    pub fn contains(&self, value: f64, rel_tol: f64) -> bool {
        let slack = |x: f64| (rel_tol * x.abs()).max(crate::closed::ABS_FLOOR);
        self.lower - slack(value) <= value && value <= self.upper + slack(value)
    }
}

struct Inputs {
    n: f64,
    big_n: f64,
    psi2: f64,
    psi1: f64,
    top: f64,
    r: f64,
    m_next: f64,
    m1: f64,
    size: f64,
    min_d: u64,
    max_d: u64,
}

fn inputs(base: &Graph, t: u32, alpha: f64) -> Result<Inputs> {
    if t < 2 {
        return Err(Error::LevelTooSmall { t, min: 2 });
    }
    check_base(base)?;
    if let Some(v) = base.vertices().find(|&v| base.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    if tau_graph(base) > 0 {
        return Err(Error::HasTriangle);
    }
    let n = base.order() as u64;
    let float = |x: num_bigint::BigUint| x.to_f64().unwrap_or(f64::INFINITY);
    Ok(Inputs {
        n: n as f64,
        big_n: float(power(n, t - 2)),
        psi2: float(psi(n, t - 2)),
        psi1: float(psi(n, t - 1)),
        top: float(power(n, t - 1)),
        r: randic_direct(base, &IndexParams::new(alpha)?)?.to_f64(),
        m_next: m_index(base, alpha + 1.0)?,
        m1: m_index(base, 1.0)?,
        size: base.size() as f64,
        min_d: base.min_degree() as u64,
        max_d: base.max_degree() as u64,
    })
}

/// Sound bounds: `β_L ≤ R_α(S(G,t)) ≤ β_U`, with equality for regular `G`.
///
/// With `k(d) = (d+1) h(d)`:
///
/// ```text
/// β_L = (n^(t-1) + ψ(t-1)) R_α(G) + ψ(t-1) min k · M_{α+1}(G)
///     + (n^(t-2) + (2δ+1) ψ(t-2)) m min(|h(δ)|, |h(Δ)|)^2
/// ```
///
/// and `β_U` likewise with `max k`, `2Δ+1` and `max(|h(δ)|, |h(Δ)|)^2`; `k`
/// ranges over the integers in `[δ, Δ]`.
pub fn randic_sierpinski_bounds(base: &Graph, t: u32, alpha: f64) -> Result<Bounds> {
    let v = inputs(base, t, alpha)?;
    let h = |d: u64| pow(d as f64 + 1.0, alpha) - pow(d as f64, alpha);
    let k = |d: u64| (d as f64 + 1.0) * h(d);
    let (k_min, k_max) = (v.min_d..=v.max_d)
        .map(k)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), x| (lo.min(x), hi.max(x)));
    let (h_lo, h_hi) = {
        let (a, b) = (h(v.min_d).abs(), h(v.max_d).abs());
        (a.min(b), a.max(b))
    };
    let head = (v.top + v.psi1) * v.r;
    let lower = head
        + v.psi1 * k_min * v.m_next
        + (v.big_n + (2.0 * v.min_d as f64 + 1.0) * v.psi2) * v.size * h_lo * h_lo;
    let upper = head
        + v.psi1 * k_max * v.m_next
        + (v.big_n + (2.0 * v.max_d as f64 + 1.0) * v.psi2) * v.size * h_hi * h_hi;
    Ok(Bounds { lower, upper })
}

/// The commonly stated bounds, evaluated term by term as written:
///
/// ```text
/// β_L = n^(t-2)(n-Δ) R + 2(n^(t-2)δ - Δψ(t-2))(R + M_{α+1} c)
///     + (n^(t-2) + (2δ+1)ψ(t-2))(R + 2 M_{α+1} c)
///     + (n^(t-2) + (2δ+1)ψ(t-2)) (M_1/2) c^2,        c = (δ+1)^α - Δ^α
/// ```
///
/// and `β_U` with `δ` and `Δ` exchanged. Kept for comparison only.
pub fn randic_sierpinski_bounds_stated(base: &Graph, t: u32, alpha: f64) -> Result<Bounds> {
    let v = inputs(base, t, alpha)?;
    let side = |lo: u64, hi: u64| {
        let (lo, hi) = (lo as f64, hi as f64);
        let c = pow(lo + 1.0, alpha) - pow(hi, alpha);
        let outer = v.big_n + (2.0 * lo + 1.0) * v.psi2;
        v.big_n * (v.n - hi) * v.r
            + 2.0 * (v.big_n * lo - hi * v.psi2) * (v.r + v.m_next * c)
            + outer * (v.r + 2.0 * v.m_next * c)
            + outer * v.m1 / 2.0 * c * c
    };
    Ok(Bounds {
        lower: side(v.min_d, v.max_d),
        upper: side(v.max_d, v.min_d),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed::{agrees, randic_sierpinski, REL_TOL};
    use crate::families::Family;

    fn exact(f: Family, t: u32, alpha: f64) -> f64 {
        let g = f.build().unwrap();
        randic_sierpinski(&g, t, &IndexParams::new(alpha).unwrap()).unwrap().value.to_f64()
    }

    #[test]
    fn equality_for_regular_bases() {
        for f in [Family::Cycle(4), Family::Cycle(6), Family::Cycle(5), Family::Complete(2)] {
            for alpha in [-1.0, -0.5, 0.5, 1.0, 2.0] {
                for t in 2..=5 {
                    let b = randic_sierpinski_bounds(&f.build().unwrap(), t, alpha).unwrap();
                    let r = exact(f, t, alpha);
                    assert!(agrees(b.lower, r, REL_TOL) && agrees(b.upper, r, REL_TOL), "{f:?} {t} {alpha}");
                }
            }
        }
    }

    #[test]
    fn strict_for_irregular_bases() {
        for f in [Family::Star(3), Family::Path(4), Family::Path(5), Family::Path(3), Family::CompleteBipartite(2, 3)] {
            for alpha in [-1.0, -0.5, 0.5, 1.0, 2.0] {
                for t in 2..=5 {
                    let b = randic_sierpinski_bounds(&f.build().unwrap(), t, alpha).unwrap();
                    let r = exact(f, t, alpha);
                    assert!(b.lower < r - 1e-6 && r + 1e-6 < b.upper, "{f:?} {t} {alpha}: {b:?} {r}");
                }
            }
        }
    }

    #[test]
    fn stated_bounds_fail_to_sandwich() {
        let c4 = Family::Cycle(4).build().unwrap();
        let b = randic_sierpinski_bounds_stated(&c4, 2, -0.5).unwrap();
        assert!(agrees(b.lower, b.upper, REL_TOL));
        assert!(!agrees(b.lower, exact(Family::Cycle(4), 2, -0.5), 1e-3));
    }

    #[test]
    fn preconditions() {
        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(randic_sierpinski_bounds(&k3, 2, 1.0), Err(Error::HasTriangle));
        let c4 = Family::Cycle(4).build().unwrap();
        assert_eq!(randic_sierpinski_bounds(&c4, 1, 1.0), Err(Error::LevelTooSmall { t: 1, min: 2 }));
        let isolated = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(randic_sierpinski_bounds(&isolated, 2, 1.0), Err(Error::IsolatedVertex(3)));
    }
}
