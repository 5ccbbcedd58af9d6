//! Explicit construction of `S(G,t)` and `P(G,t)`, and degree-class
//! censuses over the built graphs. This is the brute-force ground truth for
//! everything in [`crate::closed`].
//!
//! `S(G,t)` has vertex set `{1..n}^t`. For every level `k = 1..t`, every
//! prefix `w` of length `k - 1` and every base edge `{x, y}` there is one
//! edge `{w x y...y, w y x...x}`; level `t` gives the `n^(t-1)` copies of `G`
//! and lower levels give the connectors between copies of `S(G, t-k+1)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::counts::{polymeric_order, sierpinski_order, EdgeClassCounts, VertexClassCounts};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::word::WordCodec;

/// Default cap on the number of vertices an explicit construction may create.
pub const DEFAULT_VERTEX_BUDGET: u64 = 10_000_000;

pub(crate) fn check_base(base: &Graph) -> Result<()> {
    if base.order() < 2 || base.size() == 0 {
        return Err(Error::DegenerateBase {
            order: base.order(),
            size: base.size(),
        });
    }
    Ok(())
}

fn check_budget(required: BigUint, budget: u64) -> Result<u32> {
    match required.to_u64() {
        Some(r) if r <= budget && r <= u64::from(u32::MAX) => Ok(r as u32),
        _ => Err(Error::BudgetExceeded { required, budget }),
    }
}

/// Edges of `S(G,t)` over word ids `1..=n^t`, level by level, each pair
/// ordered `(low, high)`. Not sorted.
fn word_edges(base: &Graph, t: u32) -> Vec<(u64, u64)> {
    let n = base.order() as u64;
    let mut edges = Vec::new();
    for k in 1..=t {
        let suffix = t - k;
        let block = n.pow(suffix);
        // id offset of y...y (suffix letters) is (y - 1) * (1 + n + ... + n^(suffix-1))
        let tail = (block - 1) / (n - 1);
        let stride = block * n;
        for prefix in 0..n.pow(k - 1) {
            let start = 1 + prefix * stride;
            for &(x, y) in base.edges() {
                let (x, y) = (u64::from(x) - 1, u64::from(y) - 1);
                let u = start + x * block + y * tail;
                let v = start + y * block + x * tail;
                edges.push(if u < v { (u, v) } else { (v, u) });
            }
        }
    }
    edges
}

/// Builds `S(G,t)` with vertices numbered by [`WordCodec`]`::new(n, t)`.
pub fn build_sierpinski(base: &Graph, t: u32, budget: u64) -> Result<Graph> {
    if t < 1 {
        return Err(Error::LevelTooSmall { t, min: 1 });
    }
    check_base(base)?;
    let order = check_budget(sierpinski_order(base.order() as u64, t), budget)?;
    let mut edges: Vec<(Vertex, Vertex)> = word_edges(base, t)
        .into_iter()
        .map(|(u, v)| (u as Vertex, v as Vertex))
        .collect();
    edges.sort_unstable();
    Ok(Graph::from_canonical(order, edges))
}

/// Role of a vertex of `P(G,t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolymericLabel {
    /// Hub `a_{level, index}`, `index` in `1..=n^(level-1)`.
    Hub { level: u32, index: u64 },
    /// Vertex of the level's copy of `S(G, level)`.
    Word { level: u32, word: Vec<Vertex> },
}

/// Vertex numbering of `P(G,t)`: level 1 hubs, level 1 words, level 2 hubs,
/// level 2 words, and so on, each range contiguous.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolymericLayout {
    n: u64,
    t: u32,
    // First id minus one of each level block.
    offsets: Vec<u64>,
}

impl PolymericLayout {
    pub fn new(n: u32, t: u32) -> PolymericLayout {
        let n = u64::from(n);
        let mut offsets = Vec::with_capacity(t as usize);
        let mut next = 0;
        for i in 1..=t {
            offsets.push(next);
            next += n.pow(i - 1) + n.pow(i);
        }
        PolymericLayout { n, t, offsets }
    }

    pub fn levels(&self) -> u32 {
        self.t
    }

    pub fn order(&self) -> u64 {
        let last = self.t as usize - 1;
        self.offsets[last] + self.n.pow(self.t - 1) + self.n.pow(self.t)
    }

    /// Id of hub `a_{level, index}`.
    pub fn hub(&self, level: u32, index: u64) -> Vertex {
        debug_assert!(index >= 1 && index <= self.n.pow(level - 1));
        (self.offsets[level as usize - 1] + index) as Vertex
    }

    /// Id of the `index`-th vertex (word id) of `S(G, level)`.
    pub fn vertex(&self, level: u32, index: u64) -> Vertex {
        debug_assert!(index >= 1 && index <= self.n.pow(level));
        (self.offsets[level as usize - 1] + self.n.pow(level - 1) + index) as Vertex
    }

    pub fn hubs(&self, level: u32) -> RangeInclusive<Vertex> {
        self.hub(level, 1)..=self.hub(level, self.n.pow(level - 1))
    }

    pub fn words(&self, level: u32) -> RangeInclusive<Vertex> {
        self.vertex(level, 1)..=self.vertex(level, self.n.pow(level))
    }

    pub fn label(&self, id: Vertex) -> PolymericLabel {
        let id = u64::from(id);
        let level = self.offsets.partition_point(|&o| o < id) as u32;
        let local = id - self.offsets[level as usize - 1];
        let hubs = self.n.pow(level - 1);
        if local <= hubs {
            PolymericLabel::Hub { level, index: local }
        } else {
            let codec = WordCodec::new(self.n as u32, level);
            PolymericLabel::Word {
                level,
                word: codec.decode(local - hubs),
            }
        }
    }
}

/// `P(G,t)` together with its vertex layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolymericGraph {
    pub graph: Graph,
    pub layout: PolymericLayout,
}

/// Builds `P(G,t)`: for every level `i`, a copy of `S(G,i)`, hubs `A_i`
/// each joined to one copy of `G` inside it, and (for `i < t`) each vertex of
/// `S(G,i)` joined to the hub of level `i + 1` with the same index.
pub fn build_polymeric(base: &Graph, t: u32, budget: u64) -> Result<PolymericGraph> {
    if t < 1 {
        return Err(Error::LevelTooSmall { t, min: 1 });
    }
    check_base(base)?;
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = base.order() as u64;
    let order = check_budget(polymeric_order(n, t), budget)?;
    let layout = PolymericLayout::new(n as u32, t);
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for i in 1..=t {
        edges.extend(
            word_edges(base, i)
                .into_iter()
                .map(|(u, v)| (layout.vertex(i, u), layout.vertex(i, v))),
        );
        for j in 1..=n.pow(i - 1) {
            let hub = layout.hub(i, j);
            for x in 1..=n {
                edges.push((hub, layout.vertex(i, (j - 1) * n + x)));
            }
        }
        if i < t {
            for j in 1..=n.pow(i) {
                edges.push((layout.vertex(i, j), layout.hub(i + 1, j)));
            }
        }
    }
    for e in edges.iter_mut() {
        if e.0 > e.1 {
            *e = (e.1, e.0);
        }
    }
    edges.sort_unstable();
    debug_assert_eq!(order as u64, layout.order());
    Ok(PolymericGraph {
        graph: Graph::from_canonical(order, edges),
        layout,
    })
}

/// Builds `S(G,t)` (`t >= 2`) and counts, for every base edge, its copies by
/// endpoint degree class. A copy's endpoints are identified by their last
/// letters.
pub fn census_edge_classes(base: &Graph, t: u32, budget: u64) -> Result<Vec<EdgeClassCounts>> {
    if t < 2 {
        return Err(Error::LevelTooSmall { t, min: 2 });
    }
    let s = build_sierpinski(base, t, budget)?;
    let codec = WordCodec::new(base.order() as u32, t);
    let mut tallies = vec![[0u64; 4]; base.size()];
    for &(u, v) in s.edges() {
        let (a, b) = (codec.last_letter(u.into()), codec.last_letter(v.into()));
        let ((x, xu), (y, yv)) = if a < b { ((a, u), (b, v)) } else { ((b, v), (a, u)) };
        let slot = base
            .edges()
            .binary_search(&(x, y))
            .map_err(|_| Error::CensusInvariant(format!("edge {{{u}, {v}}} copies no base edge ({a}, {b})")))?;
        let i = degree_class(&s, xu, base.degree(x))?;
        let j = degree_class(&s, yv, base.degree(y))?;
        tallies[slot][(2 * i + j) as usize] += 1;
    }
    Ok(base
        .edges()
        .iter()
        .zip(tallies)
        .map(|(&edge, tally)| {
            let mut counts = EdgeClassCounts::zero(edge);
            for (k, c) in tally.into_iter().enumerate() {
                *counts.slot_mut((k / 2) as u8, (k % 2) as u8) = c.into();
            }
            counts
        })
        .collect())
}

fn degree_class(s: &Graph, v: Vertex, base_degree: usize) -> Result<u8> {
    match s.degree(v).checked_sub(base_degree) {
        Some(0) => Ok(0),
        Some(1) => Ok(1),
        _ => Err(Error::CensusInvariant(format!(
            "vertex {v} has degree {} but copies a vertex of degree {base_degree}",
            s.degree(v)
        ))),
    }
}

/// Builds `S(G,t)` (`t >= 2`) and counts the copies of each base vertex by
/// degree class.
pub fn census_vertex_classes(base: &Graph, t: u32, budget: u64) -> Result<Vec<VertexClassCounts>> {
    if t < 2 {
        return Err(Error::LevelTooSmall { t, min: 2 });
    }
    let s = build_sierpinski(base, t, budget)?;
    let codec = WordCodec::new(base.order() as u32, t);
    let mut tallies = vec![[0u64; 2]; base.order()];
    for v in s.vertices() {
        let x = codec.last_letter(v.into());
        let class = degree_class(&s, v, base.degree(x))?;
        tallies[x as usize - 1][class as usize] += 1;
    }
    Ok(base
        .vertices()
        .zip(tallies)
        .map(|(vertex, [g0, g1])| VertexClassCounts {
            vertex,
            g0: g0.into(),
            g1: g1.into(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counts::{polymeric_size, psi, sierpinski_size};
    use crate::families::Family;
    use crate::iso::find_isomorphism;

    const B: u64 = DEFAULT_VERTEX_BUDGET;

    fn u(x: &BigUint) -> u64 {
        x.to_u64().unwrap()
    }

    #[test]
    fn k2_gives_paths() {
        let k2 = Family::Complete(2).build().unwrap();
        for t in 1..=6 {
            let s = build_sierpinski(&k2, t, B).unwrap();
            let path = Family::Path(1 << t).build().unwrap();
            assert!(find_isomorphism(&s, &path).is_some(), "t={t}");
        }
    }

    #[test]
    fn k3_level_two() {
        let k3 = Family::Complete(3).build().unwrap();
        let s = build_sierpinski(&k3, 2, B).unwrap();
        assert_eq!((s.order(), s.size()), (9, 12));
        let codec = WordCodec::new(3, 2);
        for x in 1..=3 {
            assert_eq!(s.degree(codec.extreme(x) as Vertex), 2);
        }
        assert_eq!(build_sierpinski(&k3, 1, B).unwrap(), k3);
    }

    #[test]
    fn sizes_extremes_and_connectors() {
        for f in [Family::Figure1, Family::Star(3), Family::Complete(4), Family::Cycle(5), Family::Path(4)] {
            let g = f.build().unwrap();
            let n = g.order() as u32;
            for t in 1..=4 {
                let s = build_sierpinski(&g, t, B).unwrap();
                assert_eq!(s.order() as u64, u64::from(n).pow(t));
                assert_eq!(BigUint::from(s.size()), sierpinski_size(n.into(), g.size() as u64, t));
                let codec = WordCodec::new(n, t);
                for x in g.vertices() {
                    assert_eq!(s.degree(codec.extreme(x) as Vertex), g.degree(x));
                }
                if t >= 2 {
                    for &(x, y) in g.edges() {
                        let mut xyy = vec![y; t as usize];
                        xyy[0] = x;
                        let mut yxx = vec![x; t as usize];
                        yxx[0] = y;
                        let (a, b) = (codec.encode(&xyy) as Vertex, codec.encode(&yxx) as Vertex);
                        assert!(s.has_edge(a, b));
                        assert_eq!(s.degree(a), g.degree(y) + 1);
                        assert_eq!(s.degree(b), g.degree(x) + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let k3 = Family::Complete(3).build().unwrap();
        match build_sierpinski(&k3, 30, B) {
            Err(Error::BudgetExceeded { required, budget }) => {
                assert_eq!(required, BigUint::from(3u32).pow(30));
                assert_eq!(budget, B);
            }
            other => panic!("{other:?}"),
        }
        assert!(build_sierpinski(&k3, 3, 26).is_err());
        assert!(build_sierpinski(&k3, 3, 27).is_ok());
        assert!(build_polymeric(&k3, 3, 51).is_err());
        assert!(build_polymeric(&k3, 3, 52).is_ok());
    }

    #[test]
    fn degenerate_and_disconnected_bases() {
        let single = Graph::from_edges(1, []).unwrap();
        assert!(matches!(build_sierpinski(&single, 2, B), Err(Error::DegenerateBase { .. })));
        let two_k2 = Graph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
        assert!(build_sierpinski(&two_k2, 2, B).is_ok());
        assert_eq!(build_polymeric(&two_k2, 2, B), Err(Error::Disconnected));
    }

    #[test]
    fn polymeric_small_cases() {
        let k3 = Family::Complete(3).build().unwrap();
        let p = build_polymeric(&k3, 1, B).unwrap();
        assert!(find_isomorphism(&p.graph, &Family::Complete(4).build().unwrap()).is_some());

        let k2 = Family::Complete(2).build().unwrap();
        let p = build_polymeric(&k2, 2, B).unwrap();
        let s = build_sierpinski(&Family::Complete(3).build().unwrap(), 2, B).unwrap();
        assert!(find_isomorphism(&p.graph, &s).is_some());

        let p = build_polymeric(&k3, 2, B).unwrap();
        assert_eq!((p.graph.order(), p.graph.size()), (16, 30));
        let s = build_sierpinski(&Family::Complete(4).build().unwrap(), 2, B).unwrap();
        assert!(find_isomorphism(&p.graph, &s).is_some());

        // The two families part ways from t = 3 on.
        let p = build_polymeric(&k3, 3, B).unwrap();
        let s = build_sierpinski(&Family::Complete(4).build().unwrap(), 3, B).unwrap();
        assert_ne!(p.graph.order(), s.order());
    }

    #[test]
    fn polymeric_sizes_and_degrees() {
        for f in [Family::Figure1, Family::Star(3), Family::Cycle(4), Family::Complete(3)] {
            let g = f.build().unwrap();
            let n = g.order() as u64;
            for t in 1..=3 {
                let p = build_polymeric(&g, t, B).unwrap();
                assert_eq!(BigUint::from(p.graph.order()), (n + 1) * psi(n, t));
                assert_eq!(BigUint::from(p.graph.size()), polymeric_size(n, g.size() as u64, t));
                let l = &p.layout;
                assert_eq!(p.graph.degree(l.hub(1, 1)), n as usize);
                for i in 2..=t {
                    for h in l.hubs(i) {
                        assert_eq!(p.graph.degree(h), n as usize + 1);
                    }
                }
                for i in 1..=t {
                    let codec = WordCodec::new(n as u32, i);
                    let s = build_sierpinski(&g, i, B).unwrap();
                    let extra = if i < t { 2 } else { 1 };
                    for (k, v) in l.words(i).enumerate() {
                        assert_eq!(p.graph.degree(v), s.degree(k as Vertex + 1) + extra);
                        assert_eq!(
                            l.label(v),
                            PolymericLabel::Word { level: i, word: codec.decode(k as u64 + 1) }
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn census_examples() {
        let k3 = Family::Complete(3).build().unwrap();
        let c = census_edge_classes(&k3, 2, B).unwrap();
        assert_eq!(c[0].edge, (1, 2));
        assert_eq!([u(&c[0].f00), u(&c[0].f01), u(&c[0].f10), u(&c[0].f11)], [0, 1, 1, 2]);

        let p3 = Family::Path(3).build().unwrap();
        let c = census_edge_classes(&p3, 2, B).unwrap();
        assert_eq!([u(&c[0].f00), u(&c[0].f01), u(&c[0].f10), u(&c[0].f11)], [0, 2, 1, 1]);

        let fig = Family::Figure1.build().unwrap();
        for c in census_edge_classes(&fig, 2, B).unwrap() {
            assert_eq!(u(&c.total()), 8);
        }
        let last = census_edge_classes(&fig, 2, B).unwrap().pop().unwrap();
        assert_eq!(last.edge, (6, 7));
        assert_eq!([u(&last.f00), u(&last.f01), u(&last.f10), u(&last.f11)], [4, 1, 2, 1]);

        for v in census_vertex_classes(&k3, 2, B).unwrap() {
            assert_eq!((u(&v.g0), u(&v.g1)), (1, 2));
        }
        let k2 = Family::Complete(2).build().unwrap();
        let v = &census_vertex_classes(&k2, 3, B).unwrap()[0];
        assert_eq!((u(&v.g0), u(&v.g1)), (1, 3));
    }

    #[test]
    fn layout_labels_round_trip() {
        let l = PolymericLayout::new(3, 3);
        assert_eq!(l.order(), 4 * 13);
        assert_eq!(l.label(1), PolymericLabel::Hub { level: 1, index: 1 });
        assert_eq!(l.label(2), PolymericLabel::Word { level: 1, word: vec![1] });
        assert_eq!(l.label(5), PolymericLabel::Hub { level: 2, index: 1 });
        assert_eq!(l.hubs(3), l.hub(3, 1)..=l.hub(3, 9));
        assert_eq!(*l.words(3).end() as u64, l.order());
    }
}
