//! Simple graphs on semigroup elements: the upper non-nilpotent graph, the
//! lower non-nilpotent graph, and the non-commuting graph, plus the small
//! graph-theory toolbox needed to classify them.

use std::collections::BTreeSet;

use crate::canonical::permutations;
use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// An undirected, irreflexive graph on vertices 0..order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    order: usize,
    adj: Vec<bool>,
    labels: Option<Vec<String>>,
}

impl SimpleGraph {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "graphs here have at least one vertex");
        SimpleGraph {
            order,
            adj: vec![false; order * order],
            labels: None,
        }
    }

    pub fn with_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(order);
        for &(i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn set_labels(&mut self, labels: Option<Vec<String>>) {
        if let Some(l) = &labels {
            assert_eq!(l.len(), self.order);
        }
        self.labels = labels;
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j, "simple graphs are irreflexive");
        assert!(i < self.order && j < self.order);
        self.adj[i * self.order + j] = true;
        self.adj[j * self.order + i] = true;
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i * self.order + j]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Edges as (i, j) with i < j, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.order {
            for j in i + 1..self.order {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.order).filter(|&u| self.has_edge(v, u)).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for root in 0..self.order {
            if seen[root] {
                continue;
            }
            let mut comp = vec![root];
            seen[root] = true;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for (u, visited) in seen.iter_mut().enumerate() {
                    if self.has_edge(v, u) && !*visited {
                        *visited = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_empty_graph(&self) -> bool {
        self.adj.iter().all(|&b| !b)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.order)
            .all(|i| (i + 1..self.order).all(|j| self.has_edge(i, j)))
    }

    /// Whether every component induces a complete subgraph. A single vertex
    /// counts as a complete component.
    pub fn all_components_complete(&self) -> bool {
        self.components().iter().all(|c| {
            c.iter()
                .all(|&i| c.iter().all(|&j| i == j || self.has_edge(i, j)))
        })
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order).filter(|&v| self.degree(v) == 0).collect()
    }

    pub fn is_path_graph(&self) -> bool {
        if self.order == 1 {
            return self.edge_count() == 0;
        }
        if !self.is_connected() || self.edge_count() != self.order - 1 {
            return false;
        }
        let mut deg = self.degrees();
        deg.sort_unstable();
        deg[0] == 1 && deg[1] == 1 && deg[2..].iter().all(|&d| d == 2)
    }

    pub fn is_cycle_graph(&self) -> bool {
        self.order >= 3 && self.is_connected() && self.degrees().iter().all(|&d| d == 2)
    }

    /// A tree in which one vertex is adjacent to all others and the rest are
    /// leaves.
    pub fn is_star_graph(&self) -> bool {
        if self.order == 1 {
            return self.edge_count() == 0;
        }
        if !self.is_connected() || self.edge_count() != self.order - 1 {
            return false;
        }
        let mut deg = self.degrees();
        deg.sort_unstable();
        *deg.last().unwrap() == self.order - 1 && deg[..self.order - 1].iter().all(|&d| d == 1)
    }

    /// The center of a star graph: the smallest vertex of full degree.
    pub fn star_center(&self) -> Option<usize> {
        if !self.is_star_graph() {
            return None;
        }
        if self.order == 1 {
            return Some(0);
        }
        (0..self.order).find(|&v| self.degree(v) == self.order - 1)
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut g = SimpleGraph::new(self.order);
        for i in 0..self.order {
            for j in i + 1..self.order {
                if !self.has_edge(i, j) {
                    g.add_edge(i, j);
                }
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// The induced subgraph on the given vertices, renumbered in list order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for (j, &u) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(v, u) {
                    g.add_edge(i, j);
                }
            }
        }
        g.labels = self
            .labels
            .as_ref()
            .map(|ls| vertices.iter().map(|&v| ls[v].clone()).collect());
        g
    }

    /// DOT text: vertices in index order, then edges in lexicographic order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order {
            match &self.labels {
                Some(ls) => {
                    let escaped = ls[v].replace('\\', "\\\\").replace('"', "\\\"");
                    out.push_str(&format!("  {v} [label=\"{escaped}\"];\n"));
                }
                None => out.push_str(&format!("  {v};\n")),
            }
        }
        for (i, j) in self.edges() {
            out.push_str(&format!("  {i} -- {j};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Compact JSON edge-list form with i < j pairs in sorted order.
    pub fn to_edge_list_json(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(i, j)| format!("[{i},{j}]"))
            .collect();
        format!(
            "{{\"order\":{},\"edges\":[{}]}}",
            self.order,
            edges.join(",")
        )
    }
}

fn pair_bit(n: usize, i: usize, j: usize) -> u32 {
    debug_assert!(i < j && j < n);
    (i * n - i * (i + 1) / 2 + (j - i - 1)) as u32
}

fn graph_to_mask(g: &SimpleGraph) -> u64 {
    let n = g.order();
    let mut mask = 0u64;
    for (i, j) in g.edges() {
        mask |= 1 << pair_bit(n, i, j);
    }
    mask
}

fn permute_mask(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if mask & (1 << pair_bit(n, i, j)) != 0 {
                let (a, b) = if perm[i] < perm[j] {
                    (perm[i], perm[j])
                } else {
                    (perm[j], perm[i])
                };
                out |= 1 << pair_bit(n, a, b);
            }
        }
    }
    out
}

/// Minimal adjacency bitstring over all relabelings: the isomorphism-class
/// key for small graphs.
pub(crate) fn canonical_edge_mask(g: &SimpleGraph) -> u64 {
    let n = g.order();
    let mask = graph_to_mask(g);
    permutations(n)
        .iter()
        .map(|p| permute_mask(n, mask, p))
        .min()
        .unwrap()
}

/// The canonical representative of a graph's isomorphism class: the graph
/// with the minimal adjacency bitstring, unlabeled.
pub fn canonical_graph(g: &SimpleGraph) -> SimpleGraph {
    mask_to_graph(g.order(), canonical_edge_mask(g))
}

fn mask_to_graph(n: usize, mask: u64) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if mask & (1 << pair_bit(n, i, j)) != 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// One representative per isomorphism class of graphs on n vertices, sorted
/// by canonical bitstring.
pub fn all_graphs_on(n: usize) -> Vec<SimpleGraph> {
    assert!((1..=6).contains(&n), "all_graphs_on supports 1..=6 vertices");
    let perms = permutations(n);
    let bits = n * (n - 1) / 2;
    let mut canon: BTreeSet<u64> = BTreeSet::new();
    for mask in 0..(1u64 << bits) {
        let min = perms
            .iter()
            .map(|p| permute_mask(n, mask, p))
            .min()
            .unwrap();
        canon.insert(min);
    }
    canon.into_iter().map(|m| mask_to_graph(n, m)).collect()
}

/// Brute-force isomorphism with degree pruning; orders up to 10.
pub fn graph_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> Result<bool> {
    const MAX: usize = 10;
    for x in [g, h] {
        if x.order() > MAX {
            return Err(Error::OrderTooLarge {
                order: x.order(),
                max: MAX,
            });
        }
    }
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }

    fn extend(g: &SimpleGraph, h: &SimpleGraph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = map.len();
        if i == g.order() {
            return true;
        }
        for t in 0..h.order() {
            if used[t] || g.degree(i) != h.degree(t) {
                continue;
            }
            if (0..i).all(|j| g.has_edge(i, j) == h.has_edge(t, map[j])) {
                map.push(t);
                used[t] = true;
                if extend(g, h, map, used) {
                    return true;
                }
                map.pop();
                used[t] = false;
            }
        }
        false
    }

    let mut map = Vec::with_capacity(g.order());
    let mut used = vec![false; h.order()];
    Ok(extend(g, h, &mut map, &mut used))
}

pub fn empty_graph(n: usize) -> SimpleGraph {
    SimpleGraph::new(n)
}

pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j);
        }
    }
    g
}

pub fn path_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for i in 0..n.saturating_sub(1) {
        g.add_edge(i, i + 1);
    }
    g
}

pub fn cycle_graph(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycle graphs need at least 3 vertices");
    let mut g = path_graph(n);
    g.add_edge(n - 1, 0);
    g
}

/// Star with center 0 and n - 1 leaves.
pub fn star_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for i in 1..n {
        g.add_edge(0, i);
    }
    g
}

impl FiniteSemigroup {
    /// The upper non-nilpotent graph: an edge joins x and y iff <x, y> is
    /// not nilpotent.
    pub fn upper_graph(&self) -> SimpleGraph {
        let n = self.size();
        let mut g = SimpleGraph::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if !self.is_two_gen_nilpotent(x, y) {
                    g.add_edge(x, y);
                }
            }
        }
        g.set_labels(self.labels().map(|l| l.to_vec()));
        g
    }

    /// The lower non-nilpotent graph: an edge joins x and y iff the pair
    /// returns to itself under a word with multipliers from <x, y>^1.
    pub fn lower_graph(&self) -> SimpleGraph {
        let n = self.size();
        let mut g = SimpleGraph::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if self.lower_edge(x, y).expect("distinct by construction") {
                    g.add_edge(x, y);
                }
            }
        }
        g.set_labels(self.labels().map(|l| l.to_vec()));
        g
    }

    /// The non-commuting graph: an edge joins x and y iff xy != yx.
    pub fn noncommuting_graph(&self) -> SimpleGraph {
        let n = self.size();
        let mut g = SimpleGraph::new(n);
        for x in 0..n {
            for y in x + 1..n {
                if self.product(x, y) != self.product(y, x) {
                    g.add_edge(x, y);
                }
            }
        }
        g.set_labels(self.labels().map(|l| l.to_vec()));
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_has_all_vertices_isolated() {
        let g = empty_graph(4);
        assert_eq!(g.components().len(), 4);
        assert_eq!(g.isolated_vertices(), vec![0, 1, 2, 3]);
        assert!(g.is_empty_graph());
        assert!(g.all_components_complete());
    }

    #[test]
    fn family_shapes() {
        assert!(path_graph(4).is_path_graph());
        assert!(!path_graph(4).is_cycle_graph());
        assert!(cycle_graph(5).is_cycle_graph());
        assert!(star_graph(4).is_star_graph());
        assert_eq!(star_graph(4).star_center(), Some(0));
        assert!(complete_graph(4).is_complete());
        assert!(path_graph(1).is_path_graph());
        assert!(path_graph(2).is_star_graph());
    }

    #[test]
    fn single_vertex_counts_as_complete_component() {
        let g = SimpleGraph::with_edges(3, &[(0, 1)]);
        assert!(g.all_components_complete());
        assert_eq!(g.isolated_vertices(), vec![2]);
    }

    #[test]
    fn isomorphism_basics() {
        let p4 = path_graph(4);
        assert!(graph_isomorphic(&p4, &p4).unwrap());
        // P4 is isomorphic to its complement, C4 is not isomorphic to P4.
        assert!(graph_isomorphic(&p4, &p4.complement()).unwrap());
        assert!(!graph_isomorphic(&p4, &cycle_graph(4)).unwrap());
    }

    #[test]
    fn isomorphism_rejects_large_orders() {
        let g = empty_graph(11);
        assert_eq!(
            graph_isomorphic(&g, &g),
            Err(Error::OrderTooLarge { order: 11, max: 10 })
        );
    }

    #[test]
    fn graph_counts_up_to_isomorphism() {
        assert_eq!(all_graphs_on(1).len(), 1);
        assert_eq!(all_graphs_on(2).len(), 2);
        assert_eq!(all_graphs_on(3).len(), 4);
        assert_eq!(all_graphs_on(4).len(), 11);
    }

    #[test]
    fn all_graphs_on_matches_pairwise_isomorphism_bucketing() {
        // Independent route: bucket every 4-vertex edge set with the
        // backtracking isomorphism test instead of canonical bitstrings.
        let mut reps: Vec<SimpleGraph> = Vec::new();
        for mask in 0u64..(1 << 6) {
            let g = mask_to_graph(4, mask);
            if !reps.iter().any(|r| graph_isomorphic(r, &g).unwrap()) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), all_graphs_on(4).len());
    }

    #[test]
    fn dot_output_is_deterministic() {
        let mut g = SimpleGraph::with_edges(3, &[(1, 2), (0, 1)]);
        g.set_labels(Some(vec!["x".into(), "y".into(), "z".into()]));
        assert_eq!(
            g.to_dot(),
            "graph G {\n  0 [label=\"x\"];\n  1 [label=\"y\"];\n  2 [label=\"z\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn edge_list_json_is_sorted_and_compact() {
        let g = SimpleGraph::with_edges(4, &[(2, 3), (0, 2)]);
        assert_eq!(g.to_edge_list_json(), "{\"order\":4,\"edges\":[[0,2],[2,3]]}");
    }

    #[test]
    fn induced_subgraph_renumbers() {
        let g = SimpleGraph::with_edges(5, &[(1, 3), (3, 4), (2, 4)]);
        let h = g.induced(&[1, 2, 3, 4]);
        assert_eq!(h.edges(), vec![(0, 2), (1, 3), (2, 3)]);
        assert!(graph_isomorphic(&h, &path_graph(4)).unwrap());
    }
}
