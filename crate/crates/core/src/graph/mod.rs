//! Simple undirected graphs, proper colourings, and the certificate types
//! (decompositions, interval models) validated against them.

mod decomposition;
mod interval;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, ParseCode, ParseError, Result};

pub use decomposition::{validate_decomposition, Decomposition, DecompositionError};
pub use interval::{validate_interval_model, Event, IntervalError, IntervalModel};

/// Simple graph on dense vertex ids `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).unwrap();
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u >= n || v >= n {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) outside 0..{n}"
            )));
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::InvalidGraph(format!("parallel edge ({u}, {v})"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.m += 1;
                Ok(())
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Component label per vertex, labels in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.component_count() == self.n()
    }

    /// Breadth-first distances from `src` inside the vertex set `allowed`.
    pub fn distances_within(&self, src: usize, allowed: &[bool]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adj[u] {
                if allowed[v] && dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Parses `n m`, then `m` lines `u v` (0-indexed), then optionally a
    /// `colors` line followed by `n` colour indices.
    pub fn parse(text: &str) -> Result<(Graph, Option<Vec<usize>>)> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lno, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(ParseCode::Empty, 1, "missing header"))?;
        let nums = parse_usizes(lno, header)?;
        let [n, m] = nums[..] else {
            return Err(ParseError::new(ParseCode::Header, lno, "expected `n m`").into());
        };
        let mut g = Graph::new(n);
        for _ in 0..m {
            let (lno, l) = lines.next().ok_or_else(|| {
                ParseError::new(ParseCode::Count, lno, format!("expected {m} edge lines"))
            })?;
            let nums = parse_usizes(lno, l)?;
            let [u, v] = nums[..] else {
                return Err(ParseError::new(ParseCode::Arity, lno, "expected `u v`").into());
            };
            g.add_edge(u, v)
                .map_err(|e| ParseError::new(ParseCode::Range, lno, e.to_string()))?;
        }
        let colours = match lines.next() {
            None => None,
            Some((_, "colors")) | Some((_, "colours")) => {
                let mut colours = Vec::with_capacity(n);
                for (lno, l) in lines.by_ref() {
                    colours.extend(parse_usizes(lno, l)?);
                }
                if colours.len() != n {
                    return Err(ParseError::new(
                        ParseCode::Count,
                        0,
                        format!("expected {n} colours, found {}", colours.len()),
                    )
                    .into());
                }
                Some(colours)
            }
            Some((lno, _)) => {
                return Err(ParseError::new(ParseCode::Token, lno, "trailing content").into())
            }
        };
        Ok((g, colours))
    }
}

fn parse_usizes(lno: usize, line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| {
                ParseError::new(ParseCode::Token, lno, format!("bad number {tok:?}")).into()
            })
        })
        .collect()
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n(), self.m())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// A graph with a proper vertex colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: Graph,
    colours: Vec<usize>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colours: Vec<usize>) -> Result<Self> {
        if colours.len() != graph.n() {
            return Err(Error::InvalidGraph(format!(
                "{} colours for {} vertices",
                colours.len(),
                graph.n()
            )));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| colours[u] == colours[v]) {
            return Err(Error::InvalidGraph(format!(
                "edge ({u}, {v}) joins two vertices of colour {}",
                colours[u]
            )));
        }
        Ok(ColoredGraph { graph, colours })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colour(&self, v: usize) -> usize {
        self.colours[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    /// Distinct colours in use, ascending.
    pub fn palette(&self) -> Vec<usize> {
        let mut p = self.colours.clone();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (g, colours) = Graph::parse(text)?;
        let colours = colours
            .ok_or_else(|| ParseError::new(ParseCode::Empty, 0, "missing colors section"))?;
        ColoredGraph::new(g, colours)
    }
}

impl fmt::Display for ColoredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.graph)?;
        writeln!(f, "colors")?;
        for c in &self.colours {
            writeln!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A connected graph of pathwidth at most one: a tree whose non-leaf
/// vertices induce a path.
pub fn is_caterpillar(g: &Graph) -> bool {
    if !g.is_tree() {
        return false;
    }
    let spine: Vec<bool> = (0..g.n()).map(|v| g.degree(v) > 1).collect();
    (0..g.n())
        .filter(|&v| spine[v])
        .all(|v| g.neighbors(v).iter().filter(|&&u| spine[u]).count() <= 2)
}

/// Replaces each listed edge `(u, v)` by a fresh vertex `w` and edges
/// `(u, w)`, `(w, v)`. Fresh vertices are numbered `n, n+1, ...` in list
/// order.
pub fn subdivide(g: &Graph, edges: &[(usize, usize)]) -> Result<Graph> {
    let mut chosen = std::collections::HashSet::new();
    for &(u, v) in edges {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidGraph(format!("({u}, {v}) is not an edge")));
        }
        if !chosen.insert((u.min(v), u.max(v))) {
            return Err(Error::InvalidGraph(format!("({u}, {v}) listed twice")));
        }
    }
    let mut out = Graph::new(g.n());
    for (u, v) in g.edges() {
        if !chosen.contains(&(u, v)) {
            out.add_edge(u, v)?;
        }
    }
    for &(u, v) in edges {
        let w = out.add_vertex();
        out.add_edge(u, w)?;
        out.add_edge(w, v)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    /// Three legs of length two; the smallest tree that is not a caterpillar.
    fn spider() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }

    #[test]
    fn simple_graph_invariants() {
        let mut g = Graph::new(3);
        g.add_edge(0, 1).unwrap();
        assert!(g.add_edge(1, 0).is_err());
        assert!(g.add_edge(2, 2).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(g.has_edge(1, 0));
        assert_eq!(g.m(), 1);
    }

    #[test]
    fn caterpillar_recognition() {
        assert!(is_caterpillar(&Graph::path(5)));
        assert!(is_caterpillar(&star(4)));
        assert!(is_caterpillar(&Graph::new(1)));
        assert!(!is_caterpillar(&spider()));
        assert!(is_caterpillar(
            &Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap()
        ));
        assert!(!is_caterpillar(&Graph::cycle(4)));
        assert!(!is_caterpillar(&Graph::new(2)));
    }

    #[test]
    fn subdivision() {
        let tri = Graph::complete(3);
        let c4 = subdivide(&tri, &[(0, 1)]).unwrap();
        assert_eq!((c4.n(), c4.m()), (4, 4));
        assert!((0..4).all(|v| c4.degree(v) == 2));
        assert!(c4.is_connected());
        assert_eq!(subdivide(&tri, &[]).unwrap(), tri);
        assert!(subdivide(&Graph::path(3), &[(0, 2)]).is_err());
        assert!(subdivide(&tri, &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn subdividing_spine_keeps_caterpillars() {
        // Spine 0-1-2-3 with hairs on 0, 2, 3.
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (0, 4), (2, 5), (3, 6)]).unwrap();
        assert!(is_caterpillar(&g));
        let h = subdivide(&g, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_caterpillar(&h));
        assert_eq!(h.n(), 10);
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let cg = ColoredGraph::new(g.clone(), vec![1, 2, 1, 2]).unwrap();
        assert_eq!(ColoredGraph::parse(&cg.to_string()).unwrap(), cg);
        let (h, colours) = Graph::parse(&g.to_string()).unwrap();
        assert_eq!(h, g);
        assert!(colours.is_none());
        assert!(Graph::parse("3 2\n0 1\n").is_err());
        assert!(ColoredGraph::new(g, vec![1, 1, 2, 1]).is_err());
    }
}
