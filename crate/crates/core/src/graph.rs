//! Simple undirected graphs with vertices `1..=n`, stored as compressed
//! sorted adjacency arrays.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::error::{Error, Result};

/// Vertex id. Ids are 1-based, matching the edge-list format.
pub type Vertex = u32;

/// Immutable simple undirected graph.
///
/// The edge list is kept in canonical form: every pair is `(u, v)` with
/// `u < v`, and the list is sorted lexicographically. All index sums iterate
/// this list, so floating-point results do not depend on input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    order: u32,
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Graph {
    /// Builds a graph on vertices `1..=order`, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range ids.
    pub fn from_edges<I>(order: u32, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > order {
                    return Err(Error::VertexOutOfRange {
                        vertex: w.into(),
                        order: order.into(),
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push(if u < v { (u, v) } else { (v, u) });
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph::from_canonical(order, list))
    }

    /// `edges` must already be canonical: `u < v`, in range, sorted, unique.
    pub(crate) fn from_canonical(order: u32, edges: Vec<(Vertex, Vertex)>) -> Graph {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let n = order as usize;
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in &edges {
            offsets[u as usize] += 1;
            offsets[v as usize] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut cursor = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        // Scanning sorted pairs fills every list in increasing order: smaller
        // neighbours arrive first (as `v`), then larger ones (as `u`).
        for &(u, v) in &edges {
            targets[cursor[u as usize - 1]] = v;
            cursor[u as usize - 1] += 1;
            targets[cursor[v as usize - 1]] = u;
            cursor[v as usize - 1] += 1;
        }
        Graph {
            order,
            offsets,
            targets,
            edges,
        }
    }

    pub fn order(&self) -> usize {
        self.order as usize
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> RangeInclusive<Vertex> {
        1..=self.order
    }

    /// Canonical edge list.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    /// Sorted neighbour list of `v`.
    ///
    /// Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let i = v as usize - 1;
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        let i = v as usize - 1;
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.order
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order()];
        let mut stack = vec![1];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in self.neighbors(v) {
                if !seen[w as usize - 1] {
                    seen[w as usize - 1] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order()
    }

    /// Applies the relabelling `v -> perm[v - 1]`.
    ///
    /// Panics unless `perm` is a permutation of `1..=n`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let mut seen = vec![false; self.order()];
        for &p in perm {
            assert!(self.contains(p) && !seen[p as usize - 1], "not a permutation");
            seen[p as usize - 1] = true;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u as usize - 1], perm[v as usize - 1]);
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort_unstable();
        Graph::from_canonical(self.order, edges)
    }
}

/// Number of triangles through the edge `{u, v}`, i.e. `|N(u) ∩ N(v)|`.
pub fn tau_pair(g: &Graph, u: Vertex, v: Vertex) -> Result<usize> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(common_neighbors(g.neighbors(u), g.neighbors(v)))
}

fn common_neighbors(a: &[Vertex], b: &[Vertex]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Total number of triangles.
pub fn tau_graph(g: &Graph) -> usize {
    let sum: usize = g
        .edges()
        .iter()
        .map(|&(u, v)| common_neighbors(g.neighbors(u), g.neighbors(v)))
        .sum();
    assert_eq!(sum % 3, 0, "edge triangle counts must sum to a multiple of 3");
    sum / 3
}

/// Sizes and uniform degrees of the two colour classes of a bipartite
/// semiregular graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Semiregular {
    pub n1: usize,
    pub n2: usize,
    pub d1: usize,
    pub d2: usize,
}

/// Degree facts that decide which specialized formula applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    pub regular_degree: Option<usize>,
    pub is_triangle_free: bool,
    pub bipartite_semiregular: Option<Semiregular>,
}

pub fn degree_profile(g: &Graph) -> DegreeProfile {
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    let is_regular = min_degree == max_degree;
    DegreeProfile {
        min_degree,
        max_degree,
        is_regular,
        regular_degree: is_regular.then_some(min_degree),
        is_triangle_free: tau_graph(g) == 0,
        bipartite_semiregular: semiregular_parts(g),
    }
}

/// Two-colours each component and checks that both classes have uniform
/// degree. Components are oriented so the class containing the lowest vertex
/// of the first component is part 1.
fn semiregular_parts(g: &Graph) -> Option<Semiregular> {
    if g.order() == 0 || g.min_degree() == 0 {
        return None;
    }
    let mut colour: Vec<Option<bool>> = vec![None; g.order()];
    let mut parts: Option<(usize, usize)> = None;
    let (mut n1, mut n2) = (0, 0);
    for start in g.vertices() {
        if colour[start as usize - 1].is_some() {
            continue;
        }
        colour[start as usize - 1] = Some(false);
        let mut stack = vec![start];
        let mut class_degree: [Option<usize>; 2] = [None, None];
        let mut class_size = [0usize; 2];
        while let Some(v) = stack.pop() {
            let c = colour[v as usize - 1]?;
            let d = g.degree(v);
            match class_degree[c as usize] {
                None => class_degree[c as usize] = Some(d),
                Some(e) if e != d => return None,
                Some(_) => {}
            }
            class_size[c as usize] += 1;
            for &w in g.neighbors(v) {
                match colour[w as usize - 1] {
                    None => {
                        colour[w as usize - 1] = Some(!c);
                        stack.push(w);
                    }
                    Some(cw) if cw == c => return None,
                    Some(_) => {}
                }
            }
        }
        let (a, b) = (class_degree[0]?, class_degree[1]?);
        match parts {
            None => {
                parts = Some((a, b));
                n1 += class_size[0];
                n2 += class_size[1];
            }
            Some((p1, p2)) if (a, b) == (p1, p2) => {
                n1 += class_size[0];
                n2 += class_size[1];
            }
            Some((p1, p2)) if (b, a) == (p1, p2) => {
                n1 += class_size[1];
                n2 += class_size[0];
            }
            Some(_) => return None,
        }
    }
    let (d1, d2) = parts?;
    Some(Semiregular { n1, n2, d1, d2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn brute_triangles(g: &Graph) -> usize {
        let mut count = 0;
        for a in g.vertices() {
            for b in a + 1..=g.order() as u32 {
                for c in b + 1..=g.order() as u32 {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn rejects_invalid_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert_eq!(
            Graph::from_edges(3, [(1, 4)]),
            Err(Error::VertexOutOfRange { vertex: 4, order: 3 })
        );
        assert!(Graph::from_edges(3, [(0, 1)]).is_err());
    }

    #[test]
    fn canonical_edges_and_sorted_adjacency() {
        let g = Graph::from_edges(4, [(4, 1), (3, 2), (1, 2), (2, 4)]).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(g.neighbors(2), &[1, 3, 4]);
        assert_eq!(g.neighbors(4), &[1, 2]);
        assert_eq!(g.degrees().sum::<usize>(), 2 * g.size());
        assert!(g.has_edge(4, 2));
        assert!(!g.has_edge(1, 3));
    }

    #[test]
    fn tau_examples() {
        let k3 = Family::Complete(3).build().unwrap();
        assert_eq!(tau_pair(&k3, 1, 2), Ok(1));
        assert_eq!(tau_graph(&k3), 1);

        let c5 = Family::Cycle(5).build().unwrap();
        assert!(c5.edges().iter().all(|&(u, v)| tau_pair(&c5, u, v) == Ok(0)));

        let fig = Family::Figure1.build().unwrap();
        assert_eq!(tau_pair(&fig, 3, 4), Ok(1));
        assert_eq!(tau_graph(&fig), brute_triangles(&fig));
        assert_eq!(tau_graph(&fig), 1);

        assert_eq!(tau_graph(&Family::Complete(4).build().unwrap()), 4);
        assert_eq!(tau_pair(&fig, 1, 4), Err(Error::NotAnEdge(1, 4)));
    }

    #[test]
    fn tau_graph_matches_brute_force_on_small_families() {
        for f in [
            Family::Complete(5),
            Family::Cycle(3),
            Family::Path(5),
            Family::Star(4),
            Family::CompleteBipartite(2, 3),
            Family::Figure1,
        ] {
            let g = f.build().unwrap();
            assert_eq!(tau_graph(&g), brute_triangles(&g), "{f:?}");
        }
    }

    #[test]
    fn profiles() {
        let c4 = degree_profile(&Family::Cycle(4).build().unwrap());
        assert_eq!((c4.min_degree, c4.max_degree), (2, 2));
        assert!(c4.is_regular && c4.is_triangle_free);
        assert_eq!(c4.regular_degree, Some(2));
        assert_eq!(
            c4.bipartite_semiregular,
            Some(Semiregular { n1: 2, n2: 2, d1: 2, d2: 2 })
        );

        let star = degree_profile(&Family::Star(3).build().unwrap());
        assert_eq!(
            star.bipartite_semiregular,
            Some(Semiregular { n1: 1, n2: 3, d1: 3, d2: 1 })
        );

        let fig = degree_profile(&Family::Figure1.build().unwrap());
        assert_eq!((fig.min_degree, fig.max_degree), (1, 3));
        assert!(!fig.is_regular && !fig.is_triangle_free);
        assert_eq!(fig.bipartite_semiregular, None);

        assert_eq!(
            degree_profile(&Family::Cycle(5).build().unwrap()).bipartite_semiregular,
            None
        );
        assert_eq!(
            degree_profile(&Family::Path(4).build().unwrap()).bipartite_semiregular,
            None
        );
    }

    #[test]
    fn semiregular_across_components() {
        // K_{1,2} twice, second copy listed with the centre last.
        let g = Graph::from_edges(6, [(1, 2), (1, 3), (4, 6), (5, 6)]).unwrap();
        let s = degree_profile(&g).bipartite_semiregular.unwrap();
        assert_eq!(s, Semiregular { n1: 2, n2: 4, d1: 2, d2: 1 });
        assert_eq!(s.n1 * s.d1, g.size());
        assert_eq!(s.n2 * s.d2, g.size());
    }
}
