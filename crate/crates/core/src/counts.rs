//! Copy counters of `S(G,t)` in closed form.
//!
//! Every vertex of `S(G,t)` is a copy of its last letter `x` and has degree
//! `d(x)` or `d(x) + 1`; every edge is a copy of a base edge. The counters
//! below split those copies by degree class. All arithmetic is exact.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{tau_pair, Graph, Vertex};

/// `ψ(t) = 1 + n + ... + n^(t-1) = (n^t - 1)/(n - 1)`, with `ψ(0) = 0`.
pub fn psi(n: u64, t: u32) -> BigUint {
    assert!(n >= 2, "psi needs n >= 2");
    let n = BigUint::from(n);
    (n.pow(t) - 1u32) / (n - 1u32)
}

/// `n^k` as a big integer.
pub fn power(n: u64, k: u32) -> BigUint {
    BigUint::from(n).pow(k)
}

/// `(a - b) / (n - 1)` where the division is known to be exact. Panics
/// otherwise.
pub(crate) fn exact_quotient(numerator: BigInt, n: u64) -> BigInt {
    let (q, r) = numerator.div_rem(&BigInt::from(n - 1));
    assert!(r.is_zero(), "prefactor must divide exactly by n - 1");
    q
}

/// Copies of the base edge `{x, y}` (`x < y`) in `S(G,t)`, by endpoint degree
/// class: `f_ij` counts copies whose `x` end has degree `d(x) + i` and whose
/// `y` end has degree `d(y) + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClassCounts {
    pub edge: (Vertex, Vertex),
    pub f00: BigUint,
    pub f01: BigUint,
    pub f10: BigUint,
    pub f11: BigUint,
}

impl EdgeClassCounts {
    pub fn zero(edge: (Vertex, Vertex)) -> EdgeClassCounts {
        EdgeClassCounts {
            edge,
            f00: BigUint::zero(),
            f01: BigUint::zero(),
            f10: BigUint::zero(),
            f11: BigUint::zero(),
        }
    }

    pub fn total(&self) -> BigUint {
        &self.f00 + &self.f01 + &self.f10 + &self.f11
    }

    /// `(i, j, f_ij)` in the order `00, 01, 10, 11`.
    pub fn classes(&self) -> [(u8, u8, &BigUint); 4] {
        [
            (0, 0, &self.f00),
            (0, 1, &self.f01),
            (1, 0, &self.f10),
            (1, 1, &self.f11),
        ]
    }

    pub(crate) fn slot_mut(&mut self, i: u8, j: u8) -> &mut BigUint {
        match (i, j) {
            (0, 0) => &mut self.f00,
            (0, 1) => &mut self.f01,
            (1, 0) => &mut self.f10,
            _ => &mut self.f11,
        }
    }
}

/// Copies of base vertex `x` in `S(G,t)` with degree `d(x)` (`g0`) and
/// `d(x) + 1` (`g1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexClassCounts {
    pub vertex: Vertex,
    pub g0: BigUint,
    pub g1: BigUint,
}

fn non_negative(value: BigInt, what: &str) -> BigUint {
    assert!(!value.is_negative(), "{what} is negative; base graph is not simple");
    value.magnitude().clone()
}

/// Signed counters `(f00, f01, f10, f11)` of an edge with endpoint degrees
/// `dx`, `dy` and `tau` common neighbours, at level `t >= 2`.
pub(crate) fn edge_counters(n: u64, t: u32, dx: u64, dy: u64, tau: u64) -> [BigInt; 4] {
    let scale = BigInt::from(power(n, t - 2));
    let psi2 = BigInt::from(psi(n, t - 2));
    let (dx, dy, tau, n) = (BigInt::from(dx), BigInt::from(dy), BigInt::from(tau), BigInt::from(n));
    [
        &scale * (&n - &dx - &dy + &tau),
        &scale * (&dy - &tau) - &psi2 * &dx,
        &scale * (&dx - &tau) - &psi2 * &dy,
        &scale * (&tau + 1) + &psi2 * (&dx + &dy + 1),
    ]
}

/// Closed-form edge counters for `{x, y}` at level `t >= 2`. The edge may be
/// given in either orientation; the result is reported with `x < y`.
pub fn edge_class_counts_closed(g: &Graph, edge: (Vertex, Vertex), t: u32) -> Result<EdgeClassCounts> {
    if t < 2 {
        return Err(Error::LevelTooSmall { t, min: 2 });
    }
    let (x, y) = if edge.0 < edge.1 { edge } else { (edge.1, edge.0) };
    let tau = tau_pair(g, x, y)? as u64;
    let n = g.order() as u64;
    if n < 2 {
        return Err(Error::DegenerateBase { order: g.order(), size: g.size() });
    }
    let [f00, f01, f10, f11] = edge_counters(n, t, g.degree(x) as u64, g.degree(y) as u64, tau);
    Ok(EdgeClassCounts {
        edge: (x, y),
        f00: non_negative(f00, "f00"),
        f01: non_negative(f01, "f01"),
        f10: non_negative(f10, "f10"),
        f11: non_negative(f11, "f11"),
    })
}

/// Closed-form vertex counters at level `t >= 2`: `g1 = d(x) ψ(t-1)` and
/// `g0 = n^(t-1) - g1`.
pub fn vertex_class_counts_closed(g: &Graph, x: Vertex, t: u32) -> Result<VertexClassCounts> {
    if t < 2 {
        return Err(Error::LevelTooSmall { t, min: 2 });
    }
    if !g.contains(x) {
        return Err(Error::VertexOutOfRange { vertex: x.into(), order: g.order() as u64 });
    }
    let n = g.order() as u64;
    if n < 2 {
        return Err(Error::DegenerateBase { order: g.order(), size: g.size() });
    }
    let g1 = BigUint::from(g.degree(x)) * psi(n, t - 1);
    let all = power(n, t - 1);
    let g0 = non_negative(BigInt::from(all) - BigInt::from(g1.clone()), "g0");
    Ok(VertexClassCounts { vertex: x, g0, g1 })
}

/// Number of vertices of `S(G,t)`, `n^t`.
pub fn sierpinski_order(n: u64, t: u32) -> BigUint {
    power(n, t)
}

/// Number of edges of `S(G,t)`, `m ψ(t)`.
pub fn sierpinski_size(n: u64, m: u64, t: u32) -> BigUint {
    BigUint::from(m) * psi(n, t)
}

/// Number of vertices of `P(G,t)`, `(n + 1) ψ(t)`.
pub fn polymeric_order(n: u64, t: u32) -> BigUint {
    BigUint::from(n + 1) * psi(n, t)
}

/// Number of edges of `P(G,t)`:
/// `Σ_{i=1..t} (m ψ(i) + n^i) + Σ_{i=1..t-1} n^i`.
pub fn polymeric_size(n: u64, m: u64, t: u32) -> BigUint {
    let mut total = BigUint::zero();
    for i in 1..=t {
        total += BigUint::from(m) * psi(n, i) + power(n, i);
        if i < t {
            total += power(n, i);
        }
    }
    total
}

/// `Σ_{k=0}^{j-1} ψ(k)`, used to cross-check the exact-quotient prefactors.
#[cfg(test)]
pub(crate) fn psi_prefix_sum(n: u64, j: u32) -> BigUint {
    (0..j).fold(BigUint::zero(), |acc, k| acc + psi(n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn counts(g: &Graph, e: (Vertex, Vertex), t: u32) -> [u64; 4] {
        let c = edge_class_counts_closed(g, e, t).unwrap();
        [&c.f00, &c.f01, &c.f10, &c.f11].map(|v| u64::try_from(v).unwrap())
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(3, 2), BigUint::from(4u32));
        assert_eq!(psi(7, 0), BigUint::zero());
        assert_eq!(psi(2, 5), BigUint::from(31u32));
    }

    #[test]
    fn prefactor_quotients_are_prefix_sums() {
        for n in 2..6u64 {
            for t in 2..9u32 {
                let nb = BigInt::from(n);
                let s3 = exact_quotient(&nb * BigInt::from(psi(n, t - 2)) - BigInt::from(t - 2), n);
                assert_eq!(s3, BigInt::from(psi_prefix_sum(n, t - 1)));
                let s4 = exact_quotient(BigInt::from(psi(n, t - 2)) - BigInt::from(t - 2), n);
                assert_eq!(s4, BigInt::from(psi_prefix_sum(n, t - 2)));
            }
        }
    }

    #[test]
    fn edge_counter_examples() {
        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(counts(&k3, (1, 2), 2), [0, 1, 1, 2]);
        assert_eq!(counts(&k3, (2, 3), 3), [0, 1, 1, 11]);

        let fig = Family::Figure1.build().unwrap();
        assert_eq!(counts(&fig, (6, 7), 2), [4, 1, 2, 1]);
        assert_eq!(counts(&fig, (7, 6), 2), [4, 1, 2, 1]);

        let p3 = Family::Path(3).build().unwrap();
        assert_eq!(counts(&p3, (1, 2), 2), [0, 2, 1, 1]);

        assert_eq!(
            edge_class_counts_closed(&k3, (1, 2), 1),
            Err(Error::LevelTooSmall { t: 1, min: 2 })
        );
        assert!(edge_class_counts_closed(&p3, (1, 3), 2).is_err());
    }

    #[test]
    fn vertex_counter_examples() {
        let k3 = Family::Complete(3).build().unwrap();
        let c = vertex_class_counts_closed(&k3, 2, 2).unwrap();
        assert_eq!((c.g0, c.g1), (BigUint::from(1u32), BigUint::from(2u32)));

        let star = Family::Star(3).build().unwrap();
        let c = vertex_class_counts_closed(&star, 1, 2).unwrap();
        assert_eq!((c.g0, c.g1), (BigUint::from(1u32), BigUint::from(3u32)));

        let k2 = Family::Complete(2).build().unwrap();
        let c = vertex_class_counts_closed(&k2, 1, 3).unwrap();
        assert_eq!((c.g0, c.g1), (BigUint::from(1u32), BigUint::from(3u32)));
    }

    #[test]
    fn counters_conserve_copies() {
        for f in [Family::Figure1, Family::Complete(4), Family::Star(3), Family::Cycle(5)] {
            let g = f.build().unwrap();
            let n = g.order() as u64;
            for t in 2..7 {
                let total: BigUint = g
                    .edges()
                    .iter()
                    .map(|&e| edge_class_counts_closed(&g, e, t).unwrap().total())
                    .sum();
                assert_eq!(total, sierpinski_size(n, g.size() as u64, t), "{f:?} t={t}");
                for x in g.vertices() {
                    let c = vertex_class_counts_closed(&g, x, t).unwrap();
                    assert_eq!(c.g0 + c.g1, power(n, t - 1));
                }
            }
        }
    }

    #[test]
    fn polymeric_sizes() {
        // P(K3,1) = K4; P(K2,2) ~ S(K3,2); P(K3,2) ~ S(K4,2).
        assert_eq!(polymeric_order(3, 1), BigUint::from(4u32));
        assert_eq!(polymeric_size(3, 3, 1), BigUint::from(6u32));
        assert_eq!(polymeric_order(2, 2), BigUint::from(9u32));
        assert_eq!(polymeric_size(2, 1, 2), BigUint::from(12u32));
        assert_eq!(polymeric_order(3, 2), BigUint::from(16u32));
        assert_eq!(polymeric_size(3, 3, 2), BigUint::from(30u32));
    }
}
