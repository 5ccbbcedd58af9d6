#![allow(dead_code)]

use sierpinski_core::families::Family;
use sierpinski_core::Graph;

pub const ALPHAS: [f64; 5] = [-1.0, -0.5, 0.5, 1.0, 2.0];

pub fn corpus() -> Vec<(&'static str, Graph)> {
    [
        ("K2", Family::Complete(2)),
        ("K3", Family::Complete(3)),
        ("K4", Family::Complete(4)),
        ("K5", Family::Complete(5)),
        ("C4", Family::Cycle(4)),
        ("C5", Family::Cycle(5)),
        ("C6", Family::Cycle(6)),
        ("P3", Family::Path(3)),
        ("P4", Family::Path(4)),
        ("P5", Family::Path(5)),
        ("K13", Family::Star(3)),
        ("K23", Family::CompleteBipartite(2, 3)),
        ("figure1", Family::Figure1),
    ]
    .into_iter()
    .map(|(name, f)| (name, f.build().unwrap()))
    .collect()
}
