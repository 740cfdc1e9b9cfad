//! Labelled simple graphs.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};

/// Undirected simple graph with opaque string labels.
///
/// Vertices keep insertion order; edges are stored as `(min, max)` index pairs.
#[derive(Debug, Clone, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.label_set() == other.label_set() && self.edge_label_set() == other.edge_label_set()
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from label pairs. Panics on loops or duplicates; meant for literals.
    pub fn from_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Self {
        let mut g = Graph::new();
        for (u, v) in edges {
            let a = g.add_vertex(u.as_ref());
            let b = g.add_vertex(v.as_ref());
            g.add_edge(a, b).expect("invalid literal edge list");
        }
        g
    }

    /// Returns the index of `label`, inserting it if new.
    pub fn add_vertex(&mut self, label: &str) -> usize {
        if let Some(&i) = self.index.get(label) {
            return i;
        }
        let i = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), i);
        self.adj.push(Vec::new());
        i
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop { line: 0, label: self.labels[u].clone() });
        }
        if self.has_edge(u, v) {
            return Err(Error::DuplicateEdge { line: 0, u: self.labels[u].clone(), v: self.labels[v].clone() });
        }
        self.edges.push((u.min(v), u.max(v)));
        self.adj[u].push(v);
        self.adj[v].push(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let (a, b) = if self.adj[u].len() <= self.adj[v].len() { (u, v) } else { (v, u) };
        self.adj[a].contains(&b)
    }

    /// Index of edge `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.iter().position(|&e| e == key)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        (0..self.n()).all(|v| self.degree(v) == d)
    }

    pub fn label_set(&self) -> BTreeSet<String> {
        self.labels.iter().cloned().collect()
    }

    pub fn edge_label_set(&self) -> BTreeSet<(String, String)> {
        self.edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (self.labels[u].clone(), self.labels[v].clone());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Two-colouring `(A, B)` with the first vertex of every component in `A`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side = vec![u8::MAX; self.n()];
        for s in 0..self.n() {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        let a = (0..self.n()).filter(|&v| side[v] == 0).collect();
        let b = (0..self.n()).filter(|&v| side[v] == 1).collect();
        Some((a, b))
    }

    /// Graph on the given vertex subset, keeping the relative order and labels.
    pub fn induced(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new();
        for &v in verts {
            g.add_vertex(&self.labels[v]);
        }
        for &(u, v) in &self.edges {
            if let (Some(a), Some(b)) = (g.index_of(&self.labels[u]), g.index_of(&self.labels[v])) {
                g.add_edge(a, b).expect("subgraph of a simple graph is simple");
            }
        }
        g
    }

    /// Edge-list text, one `u v` pair per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::new();
        for &(u, v) in &self.edges {
            s.push_str(&self.labels[u]);
            s.push(' ');
            s.push_str(&self.labels[v]);
            s.push('\n');
        }
        s
    }
}

/// Parses whitespace-separated `u v` lines. `#` starts a comment; blank lines are skipped.
pub fn graph_from_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks.as_slice() {
            [] => continue,
            [u, v] => {
                if u == v {
                    return Err(Error::SelfLoop { line, label: u.to_string() });
                }
                let a = g.add_vertex(u);
                let b = g.add_vertex(v);
                if g.has_edge(a, b) {
                    return Err(Error::DuplicateEdge { line, u: u.to_string(), v: v.to_string() });
                }
                g.add_edge(a, b)?;
            }
            _ => return Err(Error::Parse { line, msg: format!("expected two labels, found {}", toks.len()) }),
        }
    }
    Ok(g)
}

/// Standard graph families used by the constructions and tests.
pub mod families {
    use super::Graph;

    fn numbered(n: usize, offset: usize) -> Vec<String> {
        (0..n).map(|i| (i + offset).to_string()).collect()
    }

    /// `K_n` on labels `1..=n`.
    pub fn complete(n: usize) -> Graph {
        let l = numbered(n, 1);
        let mut g = Graph::new();
        for s in &l {
            g.add_vertex(s);
        }
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j).unwrap();
            }
        }
        g
    }

    /// `K_{a,b}` with parts `a1..aa` and `b1..bb`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::new();
        for i in 1..=a {
            g.add_vertex(&format!("a{i}"));
        }
        for j in 1..=b {
            g.add_vertex(&format!("b{j}"));
        }
        for i in 0..a {
            for j in 0..b {
                g.add_edge(i, a + j).unwrap();
            }
        }
        g
    }

    /// Cycle on labels `1..=n`.
    pub fn cycle(n: usize) -> Graph {
        let l = numbered(n, 1);
        let mut g = Graph::new();
        for s in &l {
            g.add_vertex(s);
        }
        for i in 0..n {
            g.add_edge(i, (i + 1) % n).unwrap();
        }
        g
    }

    /// Square of the cycle `C_n`: `i` adjacent to `i±1` and `i±2`.
    pub fn cycle_square(n: usize) -> Graph {
        let mut g = cycle(n);
        for i in 0..n {
            let j = (i + 2) % n;
            if !g.has_edge(i, j) {
                g.add_edge(i, j).unwrap();
            }
        }
        g
    }

    /// Petersen graph on labels `0..=9`: outer 5-cycle, spokes, inner pentagram.
    pub fn petersen() -> Graph {
        let mut g = Graph::new();
        for i in 0..10 {
            g.add_vertex(&i.to_string());
        }
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        }
        g
    }

    /// Prism `C_k × K_2`: outer `u1..uk`, inner `w1..wk`.
    pub fn prism(k: usize) -> Graph {
        let mut g = Graph::new();
        for i in 1..=k {
            g.add_vertex(&format!("u{i}"));
        }
        for i in 1..=k {
            g.add_vertex(&format!("w{i}"));
        }
        for i in 0..k {
            g.add_edge(i, (i + 1) % k).unwrap();
            g.add_edge(k + i, k + (i + 1) % k).unwrap();
            g.add_edge(i, k + i).unwrap();
        }
        g
    }

    /// Cubic graph made of `k ≥ 2` gadgets in a path, joined by bridges.
    ///
    /// End gadgets are `K_4` with one subdivided edge (5 vertices), inner gadgets
    /// are `K_4` with two subdivided edges (6 vertices). Labels are `g{i}_{j}`.
    pub fn bridge_chain(k: usize) -> Graph {
        assert!(k >= 2);
        let mut g = Graph::new();
        let mut ports: Vec<Vec<usize>> = Vec::new();
        for i in 0..k {
            let inner = i > 0 && i + 1 < k;
            let base: Vec<usize> = (0..4).map(|j| g.add_vertex(&format!("g{i}_{j}"))).collect();
            let s1 = g.add_vertex(&format!("g{i}_s1"));
            let mut p = vec![s1];
            g.add_edge(base[0], s1).unwrap();
            g.add_edge(s1, base[1]).unwrap();
            if inner {
                let s2 = g.add_vertex(&format!("g{i}_s2"));
                g.add_edge(base[2], s2).unwrap();
                g.add_edge(s2, base[3]).unwrap();
                p.push(s2);
            } else {
                g.add_edge(base[2], base[3]).unwrap();
            }
            for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
                g.add_edge(base[a], base[b]).unwrap();
            }
            ports.push(p);
        }
        for i in 0..k - 1 {
            let left = *ports[i].last().unwrap();
            let right = ports[i + 1][0];
            g.add_edge(left, right).unwrap();
        }
        g
    }

    /// `K_{1,3}` with centre `c` and leaves `l1..l3`.
    pub fn star3() -> Graph {
        Graph::from_edges(&[("c", "l1"), ("c", "l2"), ("c", "l3")])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_from_text() {
        let g = graph_from_edge_list("1 2\n2 3\n1 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert_eq!(g.labels(), &["1", "2", "3"]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = graph_from_edge_list("# header\n\na b  # trailing\n b c\n").unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.labels(), &["a", "b", "c"]);
    }

    #[test]
    fn self_loop_rejected() {
        assert_eq!(graph_from_edge_list("a a"), Err(Error::SelfLoop { line: 1, label: "a".into() }));
    }

    #[test]
    fn duplicate_rejected_with_line() {
        let err = graph_from_edge_list("a b\nc d\nb a").unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { line: 3, .. }));
    }

    #[test]
    fn parse_error_reports_line() {
        let err = graph_from_edge_list("a b\na b c").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn petersen_text_is_cubic() {
        let text = families::petersen().to_edge_list();
        assert_eq!(text.lines().count(), 15);
        let g = graph_from_edge_list(&text).unwrap();
        assert_eq!((g.n(), g.m()), (10, 15));
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        assert_eq!(degree_sum, 30);
        assert!(g.is_regular(3));
    }

    #[test]
    fn equality_ignores_line_order() {
        let a = graph_from_edge_list("1 2\n2 3\n3 1").unwrap();
        let b = graph_from_edge_list("3 2\n1 3\n2 1").unwrap();
        assert_eq!(a, b);
        let c = graph_from_edge_list("1 2\n2 3").unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn bipartition_detects_odd_cycle() {
        assert!(families::cycle(5).bipartition().is_none());
        let (a, b) = families::complete_bipartite(2, 3).bipartition().unwrap();
        assert_eq!((a.len(), b.len()), (2, 3));
    }

    #[test]
    fn bridge_chain_is_cubic() {
        for k in 2..=4 {
            let g = families::bridge_chain(k);
            assert!(g.is_regular(3), "k={k}");
            assert!(g.is_connected());
        }
        assert_eq!(families::bridge_chain(2).n(), 10);
    }

    #[test]
    fn cycle_square_is_four_regular() {
        for n in 6..10 {
            let g = families::cycle_square(n);
            assert!(g.is_regular(4));
            assert_eq!(g.m(), 2 * n);
        }
    }
}
