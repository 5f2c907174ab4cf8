use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Decomposition, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    Path,
    Tree,
}

/// Finds a decomposition of `g` with bags of at most `max_width + 1`
/// vertices and at most `max_bags` bags, or proves none exists. `budget`
/// caps the number of candidate bags tried.
pub fn mspd_exact(
    g: &Graph,
    max_width: usize,
    max_bags: usize,
    shape: Shape,
    budget: u64,
) -> Result<Option<Decomposition>> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Decomposition::path(Vec::new())));
    }
    if n > 64 {
        return Err(Error::BudgetExceeded {
            budget: 64,
            unit: "vertices",
        });
    }
    let cap = max_width + 1;
    let nbrs: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect();
    // Every clique lies inside a single bag, and treewidth is at least the
    // degeneracy.
    if max_clique(&nbrs, all(n)) > cap
        || degeneracy(&nbrs) > max_width
        || n > max_bags.saturating_mul(cap)
    {
        return Ok(None);
    }
    let mut s = Exact {
        nbrs,
        n,
        cap,
        steps: 0,
        budget,
        failed: HashMap::new(),
        bags: Vec::new(),
    };
    match shape {
        Shape::Path => {
            if s.sweep(0, 0, max_bags)? {
                Ok(Some(Decomposition::path(
                    s.bags.iter().map(|&b| members(b)).collect(),
                )))
            } else {
                Ok(None)
            }
        }
        Shape::Tree => s.trees(max_bags.min(n)),
    }
}

fn all(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1 << n) - 1
    }
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn max_clique(nbrs: &[u64], candidates: u64) -> usize {
    fn grow(nbrs: &[u64], size: usize, mut cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            grow(nbrs, size + 1, cand & nbrs[v], best);
        }
    }
    let mut best = 0;
    grow(nbrs, 0, candidates, &mut best);
    best
}

fn degeneracy(nbrs: &[u64]) -> usize {
    let mut alive = all(nbrs.len());
    let mut best = 0;
    while alive != 0 {
        let (v, d) = members(alive)
            .into_iter()
            .map(|v| (v, (nbrs[v] & alive).count_ones() as usize))
            .min_by_key(|&(_, d)| d)
            .expect("alive is non-empty");
        best = best.max(d);
        alive &= !(1 << v);
    }
    best
}

struct Exact {
    nbrs: Vec<u64>,
    n: usize,
    cap: usize,
    steps: u64,
    budget: u64,
    /// Largest number of remaining bags known to be insufficient.
    failed: HashMap<(u64, u64), usize>,
    bags: Vec<u64>,
}

impl Exact {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                unit: "candidate bags",
            });
        }
        Ok(())
    }

    /// Extends a bag sequence. `keep` holds the vertices of the last bag
    /// that still have neighbours outside `introduced`; all other vertices
    /// of that bag are forgotten, which never hurts.
    fn sweep(&mut self, introduced: u64, keep: u64, left: usize) -> Result<bool> {
        let rest = all(self.n) & !introduced;
        let room = self.cap - keep.count_ones() as usize;
        if left == 0
            || room == 0
            || rest.count_ones() as usize + keep.count_ones() as usize > left * self.cap
        {
            return Ok(false);
        }
        if self
            .failed
            .get(&(introduced, keep))
            .is_some_and(|&f| f >= left)
        {
            return Ok(false);
        }
        // The final bag has to introduce everything that is left.
        let pool = if left == 1 { Vec::new() } else { members(rest) };
        let mut chosen = if left == 1 { rest } else { 0 };
        if self.choose(&pool, 0, room, &mut chosen, introduced, keep, left)? {
            return Ok(true);
        }
        let entry = self.failed.entry((introduced, keep)).or_insert(0);
        *entry = (*entry).max(left);
        Ok(false)
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &mut self,
        pool: &[usize],
        i: usize,
        room: usize,
        chosen: &mut u64,
        introduced: u64,
        keep: u64,
        left: usize,
    ) -> Result<bool> {
        if i == pool.len() || room == 0 {
            if *chosen == 0 {
                return Ok(false);
            }
            let now = introduced | *chosen;
            if left == 1 && now != all(self.n) {
                return Ok(false);
            }
            self.tick()?;
            let bag = keep | *chosen;
            self.bags.push(bag);
            if now == all(self.n) {
                return Ok(true);
            }
            let next = members(bag)
                .into_iter()
                .filter(|&v| self.nbrs[v] & !now != 0)
                .fold(0, |m, v| m | 1 << v);
            if self.sweep(now, next, left - 1)? {
                return Ok(true);
            }
            self.bags.pop();
            return Ok(false);
        }
        let v = pool[i];
        *chosen |= 1 << v;
        if self.choose(pool, i + 1, room - 1, chosen, introduced, keep, left)? {
            return Ok(true);
        }
        *chosen &= !(1 << v);
        self.choose(pool, i + 1, room, chosen, introduced, keep, left)
    }

    /// Tries every tree shape on up to `max_nodes` nodes and assigns each
    /// vertex a connected set of nodes.
    fn trees(&mut self, max_nodes: usize) -> Result<Option<Decomposition>> {
        let order = sweep_order(&self.nbrs);
        let edges_total: usize = self
            .nbrs
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2;
        // Each edge sits inside some bag.
        let per_bag = self.cap * (self.cap - 1) / 2;
        for t in 1..=max_nodes {
            if edges_total > t * per_bag {
                continue;
            }
            for edges in tree_shapes(t) {
                let subtrees = connected_node_sets(t, &edges);
                let mut assign = vec![0u64; self.n];
                let mut load = vec![0usize; t];
                if self.place(&order, 0, &subtrees, &mut assign, &mut load)? {
                    let bags = (0..t)
                        .map(|b| (0..self.n).filter(|&v| assign[v] >> b & 1 == 1).collect())
                        .collect();
                    return Ok(Some(Decomposition::tree(bags, edges)));
                }
            }
        }
        Ok(None)
    }

    fn place(
        &mut self,
        order: &[usize],
        k: usize,
        subtrees: &[u64],
        assign: &mut Vec<u64>,
        load: &mut Vec<usize>,
    ) -> Result<bool> {
        let Some(&v) = order.get(k) else {
            return Ok(true);
        };
        let spare: usize = load.iter().map(|&l| self.cap - l).sum();
        if spare < order.len() - k {
            return Ok(false);
        }
        for &nodes in subtrees {
            self.tick()?;
            let t = load.len();
            let fits = (0..t).all(|b| nodes >> b & 1 == 0 || load[b] < self.cap);
            let mut rest = self.nbrs[v];
            let mut meets = true;
            while rest != 0 && meets {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                meets = assign[u] == 0 || assign[u] & nodes != 0;
            }
            if !fits || !meets {
                continue;
            }
            for (b, l) in load.iter_mut().enumerate() {
                *l += (nodes >> b & 1) as usize;
            }
            assign[v] = nodes;
            if self.place(order, k + 1, subtrees, assign, load)? {
                return Ok(true);
            }
            assign[v] = 0;
            for (b, l) in load.iter_mut().enumerate() {
                *l -= (nodes >> b & 1) as usize;
            }
        }
        Ok(false)
    }
}

/// Trees on `t` nodes numbered in breadth-first order: node `i > 0` has a
/// parent below `i`, and parents never decrease. Every tree has such a
/// numbering, so this covers all shapes.
fn tree_shapes(t: usize) -> Vec<Vec<(usize, usize)>> {
    fn grow(t: usize, parents: &mut Vec<usize>, out: &mut Vec<Vec<(usize, usize)>>) {
        let i = parents.len() + 1;
        if i == t {
            out.push(
                parents
                    .iter()
                    .enumerate()
                    .map(|(k, &p)| (p, k + 1))
                    .collect(),
            );
            return;
        }
        let low = parents.last().copied().unwrap_or(0);
        for p in low..i {
            parents.push(p);
            grow(t, parents, out);
            parents.pop();
        }
    }
    let mut out = Vec::new();
    if t <= 1 {
        out.push(Vec::new());
    } else {
        grow(t, &mut Vec::new(), &mut out);
    }
    out
}

/// Breadth-first vertex order, so most vertices meet a placed neighbour.
fn sweep_order(nbrs: &[u64]) -> Vec<usize> {
    let n = nbrs.len();
    let mut seen = 0u64;
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| seen >> v & 1 == 0)
            .max_by_key(|&v| (nbrs[v].count_ones(), std::cmp::Reverse(v)))
            .expect("unseen vertex");
        seen |= 1 << start;
        let mut i = order.len();
        order.push(start);
        while i < order.len() {
            for u in members(nbrs[order[i]]) {
                if seen >> u & 1 == 0 {
                    seen |= 1 << u;
                    order.push(u);
                }
            }
            i += 1;
        }
    }
    order
}

fn connected_node_sets(t: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    (1u64..1 << t)
        .filter(|&mask| {
            let inner = edges
                .iter()
                .filter(|&&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1)
                .count();
            inner + 1 == mask.count_ones() as usize
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::validate_decomposition;

    const BUDGET: u64 = 5_000_000;

    fn decide(g: &Graph, w: usize, b: usize, shape: Shape) -> bool {
        let d = mspd_exact(g, w, b, shape, BUDGET).unwrap();
        if let Some(d) = &d {
            assert_eq!(validate_decomposition(g, d, w, b), Ok(()));
            if shape == Shape::Path {
                assert!(d.is_path_shaped());
            }
        }
        d.is_some()
    }

    #[test]
    fn cliques_and_paths() {
        for shape in [Shape::Path, Shape::Tree] {
            assert!(decide(&Graph::complete(4), 3, 1, shape));
            assert!(!decide(&Graph::complete(5), 3, 10, shape));
            assert!(decide(&Graph::path(6), 1, 5, shape));
            assert!(!decide(&Graph::path(6), 1, 4, shape));
            assert!(decide(&Graph::cycle(6), 2, 4, shape));
            assert!(!decide(&Graph::cycle(6), 1, 6, shape));
        }
    }

    #[test]
    fn single_bag_is_a_size_check() {
        let g = Graph::complete(17);
        assert!(decide(&g, 16, 1, Shape::Path));
        let mut h = Graph::new(18);
        h.add_edge(0, 17).unwrap();
        assert!(!decide(&h, 16, 1, Shape::Path));
        assert!(!decide(&h, 16, 1, Shape::Tree));
        assert!(decide(&h, 16, 2, Shape::Path));
    }

    #[test]
    fn trees_beat_paths_on_spiders() {
        // Three legs of length two: pathwidth 2, treewidth 1.
        let spider =
            Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(!decide(&spider, 1, 7, Shape::Path));
        assert!(decide(&spider, 1, 6, Shape::Tree));
    }

    #[test]
    fn tree_shape_enumeration() {
        // Ordered-tree counts are Catalan numbers.
        assert_eq!(tree_shapes(4).len(), 5);
        assert_eq!(tree_shapes(6).len(), 42);
        for edges in tree_shapes(5) {
            assert_eq!(
                connected_node_sets(5, &edges)
                    .iter()
                    .filter(|m| m.count_ones() == 2)
                    .count(),
                4
            );
        }
    }
}
