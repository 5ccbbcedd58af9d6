//! Backtracking isomorphism search for small graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Returns `map` with `map[v - 1]` the image of `v`, or `None` if the graphs
/// are not isomorphic. Exponential in the worst case; intended for sanity
/// checks on graphs of a few dozen vertices.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<Vertex>> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    let mut da: Vec<usize> = a.degrees().collect();
    let mut db: Vec<usize> = b.degrees().collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return None;
    }

    // Visit `a` in BFS order so every new vertex has mapped neighbours.
    let mut order = Vec::with_capacity(a.order());
    let mut seen = vec![false; a.order()];
    for root in a.vertices() {
        if seen[root as usize - 1] {
            continue;
        }
        seen[root as usize - 1] = true;
        let mut head = order.len();
        order.push(root);
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in a.neighbors(v) {
                if !seen[w as usize - 1] {
                    seen[w as usize - 1] = true;
                    order.push(w);
                }
            }
        }
    }

    let mut map = vec![0 as Vertex; a.order()];
    let mut used = vec![false; b.order()];
    if extend(a, b, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn extend(a: &Graph, b: &Graph, order: &[Vertex], depth: usize, map: &mut [Vertex], used: &mut [bool]) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for c in b.vertices() {
        if used[c as usize - 1] || b.degree(c) != a.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u as usize - 1], c));
        if !consistent {
            continue;
        }
        map[v as usize - 1] = c;
        used[c as usize - 1] = true;
        if extend(a, b, order, depth + 1, map, used) {
            return true;
        }
        used[c as usize - 1] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    #[test]
    fn finds_relabelling() {
        let g = Family::Figure1.build().unwrap();
        let h = g.relabel(&[7, 3, 5, 1, 2, 6, 4]);
        let map = find_isomorphism(&g, &h).unwrap();
        for &(u, v) in g.edges() {
            assert!(h.has_edge(map[u as usize - 1], map[v as usize - 1]));
        }
    }

    #[test]
    fn rejects_same_degree_sequence() {
        // C6 and two triangles are both 2-regular on 6 vertices.
        let c6 = Family::Cycle(6).build().unwrap();
        let two_k3 = Graph::from_edges(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert!(find_isomorphism(&c6, &two_k3).is_none());
        assert!(find_isomorphism(&c6, &Family::Path(6).build().unwrap()).is_none());
    }
}
