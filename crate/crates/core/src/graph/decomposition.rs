use std::fmt;

use thiserror::Error;

use super::Graph;
use crate::error::{ParseCode, ParseError, Result};

/// Tree (or path) decomposition: bags plus the tree over bag indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    bags: Vec<Vec<usize>>,
    tree: Vec<(usize, usize)>,
}

impl Decomposition {
    /// Bags joined in a line, in the given order.
    pub fn path(bags: Vec<Vec<usize>>) -> Self {
        let tree = (1..bags.len()).map(|i| (i - 1, i)).collect();
        Self::tree(bags, tree)
    }

    pub fn tree(bags: Vec<Vec<usize>>, tree: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        Decomposition { bags, tree }
    }

    /// Tree given as a parent array; `None` marks the root.
    pub fn from_parents(bags: Vec<Vec<usize>>, parents: &[Option<usize>]) -> Self {
        let tree = parents
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i)))
            .collect();
        Self::tree(bags, tree)
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bags_mut(&mut self) -> &mut Vec<Vec<usize>> {
        &mut self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree
    }

    /// Largest bag size minus one; `-1` for no bags.
    pub fn width(&self) -> isize {
        self.bags
            .iter()
            .map(|b| b.len() as isize)
            .max()
            .unwrap_or(0)
            - 1
    }

    pub fn is_path_shaped(&self) -> bool {
        let k = self.bags.len();
        self.tree.len() + 1 == k.max(1)
            && self.tree.iter().all(|&(a, b)| a.max(b) == a.min(b) + 1)
            && {
                let mut seen = vec![false; k];
                self.tree
                    .iter()
                    .all(|&(a, b)| !std::mem::replace(&mut seen[a.min(b)], true))
            }
    }

    /// Removes bag `i`; neighbours of the removed bag are reattached to its
    /// first neighbour so that the shape stays a tree.
    pub fn without_bag(&self, i: usize) -> Decomposition {
        let mut bags = self.bags.clone();
        bags.remove(i);
        let nbrs: Vec<usize> = self
            .tree
            .iter()
            .filter_map(|&(a, b)| (a == i).then_some(b).or((b == i).then_some(a)))
            .collect();
        let relabel = |x: usize| if x > i { x - 1 } else { x };
        let mut tree: Vec<(usize, usize)> = self
            .tree
            .iter()
            .filter(|&&(a, b)| a != i && b != i)
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        if let Some((&hub, rest)) = nbrs.split_first() {
            tree.extend(rest.iter().map(|&x| (relabel(hub), relabel(x))));
        }
        Decomposition { bags, tree }
    }

    /// One bag per line; a final `parents` line when the shape is not the
    /// line through the bags in order.
    pub fn parse(text: &str) -> Result<Self> {
        let mut bags = Vec::new();
        let mut parents = None;
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if let Some(rest) = line.strip_prefix("parents") {
                let ps = rest
                    .split_whitespace()
                    .map(|tok| match tok {
                        "-" | "-1" => Ok(None),
                        _ => tok.parse::<usize>().map(Some).map_err(|_| {
                            ParseError::new(ParseCode::Token, k + 1, format!("bad parent {tok:?}"))
                        }),
                    })
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                parents = Some(ps);
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            let bag = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| {
                        ParseError::new(ParseCode::Token, k + 1, format!("bad vertex {tok:?}"))
                    })
                })
                .collect::<std::result::Result<Vec<_>, _>>()?;
            bags.push(bag);
        }
        while bags.last().is_some_and(|b| b.is_empty()) {
            bags.pop();
        }
        Ok(match parents {
            Some(ps) => {
                if ps.len() != bags.len() {
                    return Err(ParseError::new(
                        ParseCode::Count,
                        0,
                        format!("{} parents for {} bags", ps.len(), bags.len()),
                    )
                    .into());
                }
                Decomposition::from_parents(bags, &ps)
            }
            None => Decomposition::path(bags),
        })
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for bag in &self.bags {
            let parts: Vec<String> = bag.iter().map(usize::to_string).collect();
            writeln!(f, "{}", parts.join(" "))?;
        }
        if !self.is_path_shaped() {
            let mut parent = vec![None; self.bags.len()];
            // Orient the tree away from bag 0.
            let mut adj = vec![Vec::new(); self.bags.len()];
            for &(a, b) in &self.tree {
                adj[a].push(b);
                adj[b].push(a);
            }
            let mut seen = vec![false; self.bags.len()];
            let mut stack = vec![0];
            while let Some(u) = stack.pop() {
                if std::mem::replace(&mut seen[u], true) {
                    continue;
                }
                for &v in &adj[u] {
                    if !seen[v] {
                        parent[v] = Some(u);
                        stack.push(v);
                    }
                }
            }
            let parts: Vec<String> = parent
                .iter()
                .map(|p| p.map_or("-".to_string(), |p| p.to_string()))
                .collect();
            writeln!(f, "parents {}", parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("bag {bag} names vertex {vertex} which is not in the graph")]
    BagIndex { bag: usize, vertex: usize },
    #[error("bag shape is not a tree")]
    NotATree,
    #[error("bag {bag} has {size} vertices, more than width + 1")]
    TooWide { bag: usize, size: usize },
    #[error("{count} bags exceed the budget of {max}")]
    TooManyBags { count: usize, max: usize },
    #[error("vertex {0} is in no bag")]
    VertexMissing(usize),
    #[error("bags containing vertex {0} are not connected")]
    Disconnected(usize),
    #[error("edge ({0}, {1}) is in no bag")]
    EdgeUncovered(usize, usize),
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            cur = std::mem::replace(&mut self.0[cur], root);
        }
        root
    }

    /// False when `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

/// Checks the three decomposition conditions plus width and bag budgets.
pub fn validate_decomposition(
    g: &Graph,
    d: &Decomposition,
    max_width: usize,
    max_bags: usize,
) -> std::result::Result<(), DecompositionError> {
    let k = d.bags.len();
    for (i, bag) in d.bags.iter().enumerate() {
        if let Some(&v) = bag.iter().find(|&&v| v >= g.n()) {
            return Err(DecompositionError::BagIndex { bag: i, vertex: v });
        }
    }
    if k > 0 {
        let mut uf = UnionFind((0..k).collect());
        if d.tree.len() + 1 != k
            || d.tree
                .iter()
                .any(|&(a, b)| a >= k || b >= k || !uf.union(a, b))
        {
            return Err(DecompositionError::NotATree);
        }
    } else if !d.tree.is_empty() {
        return Err(DecompositionError::NotATree);
    }
    if k > max_bags {
        return Err(DecompositionError::TooManyBags {
            count: k,
            max: max_bags,
        });
    }
    if let Some((i, bag)) = d
        .bags
        .iter()
        .enumerate()
        .find(|(_, b)| b.len() > max_width + 1)
    {
        return Err(DecompositionError::TooWide {
            bag: i,
            size: bag.len(),
        });
    }

    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, bag) in d.bags.iter().enumerate() {
        for &v in bag {
            holders[v].push(i);
        }
    }
    let mut in_set = vec![false; k];
    for (v, hs) in holders.iter().enumerate() {
        if hs.is_empty() {
            return Err(DecompositionError::VertexMissing(v));
        }
        // The bags holding v induce a subtree iff they span |hs| - 1 tree edges.
        for &i in hs {
            in_set[i] = true;
        }
        let mut uf = UnionFind((0..k).collect());
        let joined = d
            .tree
            .iter()
            .filter(|&&(a, b)| in_set[a] && in_set[b] && uf.union(a, b))
            .count();
        for &i in hs {
            in_set[i] = false;
        }
        if joined + 1 != hs.len() {
            return Err(DecompositionError::Disconnected(v));
        }
    }
    for (u, v) in g.edges() {
        let covered = holders[u]
            .iter()
            .any(|&i| d.bags[i].binary_search(&v).is_ok());
        if !covered {
            return Err(DecompositionError::EdgeUncovered(u, v));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_bag_clique() {
        let k4 = Graph::complete(4);
        let d = Decomposition::path(vec![vec![0, 1, 2, 3]]);
        assert_eq!(validate_decomposition(&k4, &d, 3, 1), Ok(()));
        assert_eq!(
            validate_decomposition(&k4, &d, 2, 1),
            Err(DecompositionError::TooWide { bag: 0, size: 4 })
        );
        assert_eq!(
            validate_decomposition(&k4, &d, 3, 0),
            Err(DecompositionError::TooManyBags { count: 1, max: 0 })
        );
    }

    #[test]
    fn detects_each_violation() {
        let p4 = Graph::path(4);
        let good = Decomposition::path(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        assert_eq!(validate_decomposition(&p4, &good, 1, 3), Ok(()));
        let gap = Decomposition::path(vec![vec![0, 1], vec![2, 3], vec![1, 2]]);
        assert_eq!(
            validate_decomposition(&p4, &gap, 1, 3),
            Err(DecompositionError::Disconnected(1))
        );
        let missing = Decomposition::path(vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(
            validate_decomposition(&p4, &missing, 1, 3),
            Err(DecompositionError::VertexMissing(3))
        );
        let uncovered = Decomposition::path(vec![vec![0, 1], vec![1], vec![2, 3]]);
        assert_eq!(
            validate_decomposition(&p4, &uncovered, 1, 3),
            Err(DecompositionError::EdgeUncovered(1, 2))
        );
        let cyclic = Decomposition::tree(
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
            vec![(0, 1), (1, 2), (2, 0)],
        );
        assert_eq!(
            validate_decomposition(&p4, &cyclic, 1, 3),
            Err(DecompositionError::NotATree)
        );
        let stray = Decomposition::path(vec![vec![0, 1, 9]]);
        assert!(matches!(
            validate_decomposition(&p4, &stray, 5, 3),
            Err(DecompositionError::BagIndex { .. })
        ));
    }

    #[test]
    fn dfs_edge_bags_of_trees_have_width_one() {
        let t = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        // One bag per edge, each attached to the bag of its parent edge.
        let bags = vec![
            vec![0, 1],
            vec![1, 3],
            vec![1, 4],
            vec![0, 2],
            vec![2, 5],
            vec![2, 6],
        ];
        let d =
            Decomposition::from_parents(bags, &[None, Some(0), Some(0), Some(0), Some(3), Some(3)]);
        assert_eq!(validate_decomposition(&t, &d, 1, 6), Ok(()));
        assert!(!d.is_path_shaped());
        let back = Decomposition::parse(&d.to_string()).unwrap();
        assert_eq!(validate_decomposition(&t, &back, 1, 6), Ok(()));
    }

    #[test]
    fn text_round_trip_path() {
        let d = Decomposition::path(vec![vec![0, 1], vec![1, 2]]);
        assert!(d.is_path_shaped());
        assert_eq!(d.to_string(), "0 1\n1 2\n");
        assert_eq!(Decomposition::parse(&d.to_string()).unwrap(), d);
    }

    #[test]
    fn bag_removal_keeps_a_tree() {
        let d = Decomposition::path(vec![vec![0], vec![1], vec![2]]);
        let e = d.without_bag(1);
        assert_eq!(e.bags(), &[vec![0], vec![2]]);
        // The middle bag had two neighbours; they get joined.
        assert_eq!(e.tree_edges(), &[(0, 1)]);
        assert_eq!(d.without_bag(0).tree_edges(), &[(0, 1)]);
    }
}
