//! The general Randić index `R_α(G) = Σ_{uv ∈ E} (d(u) d(v))^α` and the
//! vertex power sum `M_α(G) = Σ_v d(v)^α`.

use core::fmt;
use core::ops::AddAssign;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Arithmetic used to evaluate an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Float,
    /// Arbitrary-precision integers; only for α ∈ {1, 2, 3, ...}.
    Exact,
}

/// Exponent α together with the evaluation mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct IndexParams {
    alpha: f64,
    mode: Mode,
}

impl IndexParams {
    /// Floating-point evaluation. α must be finite and nonzero.
    pub fn new(alpha: f64) -> Result<IndexParams> {
        IndexParams::with_mode(alpha, Mode::Float)
    }

    /// Exact evaluation. α must be a positive integer.
    pub fn exact(alpha: f64) -> Result<IndexParams> {
        IndexParams::with_mode(alpha, Mode::Exact)
    }

    pub fn with_mode(alpha: f64, mode: Mode) -> Result<IndexParams> {
        if !alpha.is_finite() || alpha == 0.0 {
            return Err(Error::InvalidAlpha(alpha));
        }
        if mode == Mode::Exact && (alpha < 1.0 || libm::trunc(alpha) != alpha || alpha > u32::MAX as f64) {
            return Err(Error::InvalidExactExponent(alpha));
        }
        Ok(IndexParams { alpha, mode })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn zero(&self) -> IndexValue {
        match self.mode {
            Mode::Float => IndexValue::Float(0.0),
            Mode::Exact => IndexValue::Exact(BigInt::zero()),
        }
    }

    /// `count · Π_k bases[k]^α` in this mode.
    ///
    /// In float mode the integer count is converted only here, at the final
    /// multiplication.
    pub fn weigh(&self, count: &BigInt, bases: &[u64]) -> IndexValue {
        match self.mode {
            Mode::Float => {
                let c = count.to_f64().unwrap_or(f64::NAN);
                IndexValue::Float(bases.iter().fold(c, |acc, &b| acc * power(b as f64, self.alpha)))
            }
            Mode::Exact => {
                let k = self.alpha as u32;
                IndexValue::Exact(
                    bases
                        .iter()
                        .fold(count.clone(), |acc, &b| acc * BigInt::from(b).pow(k)),
                )
            }
        }
    }
}

/// `x^α` for real α.
pub fn power(x: f64, alpha: f64) -> f64 {
    libm::pow(x, alpha)
}

/// An index value, either a double or an exact integer.
#[derive(Clone, Debug, PartialEq)]
pub enum IndexValue {
    Float(f64),
    Exact(BigInt),
}

impl IndexValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            IndexValue::Float(x) => *x,
            IndexValue::Exact(n) => n.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn as_exact(&self) -> Option<&BigInt> {
        match self {
            IndexValue::Exact(n) => Some(n),
            IndexValue::Float(_) => None,
        }
    }
}

impl AddAssign<&IndexValue> for IndexValue {
    /// Panics when mixing modes.
    fn add_assign(&mut self, rhs: &IndexValue) {
        match (self, rhs) {
            (IndexValue::Float(a), IndexValue::Float(b)) => *a += *b,
            (IndexValue::Exact(a), IndexValue::Exact(b)) => *a += b,
            _ => panic!("cannot add float and exact index values"),
        }
    }
}

impl fmt::Display for IndexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexValue::Float(x) => write!(f, "{x}"),
            IndexValue::Exact(n) => write!(f, "{n}"),
        }
    }
}

/// `R_α(G)`, summed in canonical edge order as `d(u)^α d(v)^α`.
pub fn randic_direct(g: &Graph, params: &IndexParams) -> Result<IndexValue> {
    if g.size() == 0 {
        return Err(Error::EmptyGraph);
    }
    let one = BigInt::from(1);
    let mut total = params.zero();
    for &(u, v) in g.edges() {
        total += &params.weigh(&one, &[g.degree(u) as u64, g.degree(v) as u64]);
    }
    Ok(total)
}

/// `M_α(G)`. Isolated vertices are rejected when α ≤ 0.
pub fn m_index(g: &Graph, alpha: f64) -> Result<f64> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        if alpha <= 0.0 {
            return Err(Error::IsolatedVertex(v));
        }
    }
    Ok(g.degrees().map(|d| power(d as f64, alpha)).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-12 * b.abs().max(1.0)
    }

    #[test]
    fn alpha_validation() {
        assert_eq!(IndexParams::new(0.0), Err(Error::InvalidAlpha(0.0)));
        assert!(IndexParams::new(f64::NAN).is_err());
        assert!(IndexParams::exact(0.5).is_err());
        assert!(IndexParams::exact(-1.0).is_err());
        assert!(IndexParams::exact(2.0).is_ok());
    }

    #[test]
    fn direct_examples() {
        let p = IndexParams::new(-0.5).unwrap();
        let k3 = Family::Complete(3).build().unwrap();
        assert!(close(randic_direct(&k3, &p).unwrap().to_f64(), 1.5));

        let p4 = Family::Path(4).build().unwrap();
        let expected = 2.0 / 2f64.sqrt() + 0.5;
        assert!(close(randic_direct(&p4, &p).unwrap().to_f64(), expected));

        let p3 = Family::Path(3).build().unwrap();
        let zagreb = randic_direct(&p3, &IndexParams::exact(1.0).unwrap()).unwrap();
        assert_eq!(zagreb, IndexValue::Exact(BigInt::from(4)));
        assert_eq!(randic_direct(&p3, &IndexParams::new(1.0).unwrap()).unwrap(), IndexValue::Float(4.0));
    }

    #[test]
    fn empty_graph_rejected() {
        let g = Graph::from_edges(2, []).unwrap();
        assert_eq!(randic_direct(&g, &IndexParams::new(1.0).unwrap()), Err(Error::EmptyGraph));
    }

    #[test]
    fn m_index_examples() {
        assert_eq!(m_index(&Family::Complete(3).build().unwrap(), 1.0), Ok(6.0));
        assert_eq!(m_index(&Family::Path(3).build().unwrap(), 2.0), Ok(6.0));
        assert_eq!(m_index(&Family::Figure1.build().unwrap(), 1.0), Ok(16.0));
        let isolated = Graph::from_edges(3, [(1, 2)]).unwrap();
        assert_eq!(m_index(&isolated, -1.0), Err(Error::IsolatedVertex(3)));
        assert_eq!(m_index(&isolated, 2.0), Ok(2.0));
    }
}
