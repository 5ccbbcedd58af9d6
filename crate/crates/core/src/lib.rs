//! General Randić index of generalized Sierpiński graphs `S(G,t)` and
//! polymeric Sierpiński graphs `P(G,t)`.
//!
//! The crate has two independent routes to every value:
//!
//! * [`closed`] evaluates closed formulae in `O(|E|)` base-graph work, with
//!   all copy counters kept as exact integers so `t` can be in the hundreds.
//! * [`sierpinski`] builds `S(G,t)` and `P(G,t)` explicitly and censuses
//!   them; [`index::randic_direct`] on the result is the brute-force oracle.
//!
//! Specialized formulae for regular, complete, cycle, star, path and
//! semiregular base graphs live in [`special`], and the triangle-free
//! sandwich bounds in [`bounds`].
//!
//! The crate is `no_std` and only needs `alloc`. Text formats, JSON and the
//! command line live in the `sierpinski-cli` companion crate.
//!
//! ```
//! use sierpinski_core::{closed, families::Family, index::IndexParams};
//!
//! let k3 = Family::Complete(3).build().unwrap();
//! let report = closed::randic_sierpinski(&k3, 2, &IndexParams::new(-0.5).unwrap()).unwrap();
//! let expected = 2.0 + 6f64.sqrt();
//! assert!((report.value.to_f64() - expected).abs() < 1e-12);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod closed;
pub mod counts;
pub mod error;
pub mod families;
pub mod graph;
pub mod index;
pub mod iso;
pub mod sierpinski;
pub mod special;
pub mod word;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use index::{IndexParams, IndexValue};

pub use num_bigint;
