use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Relation {
    Subgraph,
    Induced,
    Minor,
    InducedMinor,
    TopMinor,
    /// Minor whose branch sets have radius at most `r` around some centre.
    ShallowMinor(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EmbeddingWitness {
    /// Injective pattern-to-host vertex map.
    Map(Vec<usize>),
    /// Disjoint connected branch set per pattern vertex.
    BranchSets(Vec<Vec<usize>>),
    /// Branch sets with the centre witnessing each radius bound.
    Shallow {
        sets: Vec<Vec<usize>>,
        centres: Vec<usize>,
    },
    /// Branch vertex per pattern vertex, plus one host path per pattern edge
    /// `(u, v)`, listed from `branch[u]` to `branch[v]` inclusive.
    Subdivision {
        branch: Vec<usize>,
        paths: Vec<((usize, usize), Vec<usize>)>,
    },
}

impl EmbeddingWitness {
    /// The vertex map, for the subgraph relations.
    pub fn as_map(&self) -> Option<&[usize]> {
        match self {
            EmbeddingWitness::Map(m) => Some(m),
            _ => None,
        }
    }
}

struct Choice {
    set: Vec<usize>,
    centre: Option<usize>,
    /// `(placed neighbour, internal vertices from the new branch vertex)`.
    paths: Vec<(usize, Vec<usize>)>,
}

struct Search<'a> {
    p: &'a Graph,
    g: &'a Graph,
    rel: Relation,
    order: Vec<usize>,
    /// Checkpoint at an order position, with the root whose claim the
    /// remaining sub-problem depends on.
    checkpoint: Vec<Option<Option<usize>>>,
    /// At each component start, the sizes of that and all later components.
    pending: Vec<Vec<usize>>,
    owner: Vec<Option<usize>>,
    used: Vec<bool>,
    unused: usize,
    placed: Vec<bool>,
    claim: Vec<Vec<usize>>,
    centre: Vec<usize>,
    paths: Vec<((usize, usize), Vec<usize>)>,
    steps: u64,
    budget: u64,
    failed: HashSet<(usize, Vec<u64>, Vec<u64>)>,
}

/// Decides whether `p` relates to `g` under `rel` by exhaustive
/// backtracking. Candidates are tried in increasing order, so the witness
/// is deterministic. Failed sub-problems are memoised at component
/// boundaries, keyed by the set of consumed host vertices. `budget` caps
/// the number of search steps.
pub fn embed_bf(
    p: &Graph,
    g: &Graph,
    rel: Relation,
    budget: u64,
) -> Result<Option<EmbeddingWitness>> {
    if p.n() > g.n() || (matches!(rel, Relation::Subgraph | Relation::Induced) && p.m() > g.m()) {
        return Ok(None);
    }
    let (order, checkpoint, pending) = placement_order(p);
    let mut s = Search {
        p,
        g,
        rel,
        order,
        checkpoint,
        pending,
        owner: vec![None; g.n()],
        used: vec![false; g.n()],
        unused: g.n(),
        placed: vec![false; p.n()],
        claim: vec![Vec::new(); p.n()],
        centre: vec![0; p.n()],
        paths: Vec::new(),
        steps: 0,
        budget,
        failed: HashSet::new(),
    };
    if !s.go(0)? {
        return Ok(None);
    }
    Ok(Some(match rel {
        Relation::Subgraph | Relation::Induced => {
            EmbeddingWitness::Map(s.claim.iter().map(|c| c[0]).collect())
        }
        Relation::Minor | Relation::InducedMinor => EmbeddingWitness::BranchSets(s.claim),
        Relation::ShallowMinor(_) => EmbeddingWitness::Shallow {
            sets: s.claim,
            centres: s.centre,
        },
        Relation::TopMinor => {
            let mut paths = s.paths;
            paths.sort();
            EmbeddingWitness::Subdivision {
                branch: s.claim.iter().map(|c| c[0]).collect(),
                paths,
            }
        }
    }))
}

/// Components largest first. Per component: the highest-degree vertex
/// first, then each component of the rest in breadth-first order. Every
/// later vertex has an earlier neighbour inside its component.
#[allow(clippy::type_complexity)]
fn placement_order(p: &Graph) -> (Vec<usize>, Vec<Option<Option<usize>>>, Vec<Vec<usize>>) {
    let n = p.n();
    let labels = p.components();
    let count = labels.iter().max().map_or(0, |&c| c + 1);
    let mut comps: Vec<Vec<usize>> = vec![Vec::new(); count];
    for v in 0..n {
        comps[labels[v]].push(v);
    }
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut order = Vec::with_capacity(n);
    let mut checkpoint = Vec::with_capacity(n);
    let mut pending = vec![Vec::new(); n];
    for (c, members) in comps.iter().enumerate() {
        pending[order.len()] = comps[c..].iter().map(Vec::len).collect();
        let root = *members
            .iter()
            .max_by_key(|&&v| (p.degree(v), std::cmp::Reverse(v)))
            .expect("components are non-empty");
        order.push(root);
        checkpoint.push(Some(None));
        let mut seen = vec![false; n];
        seen[root] = true;
        for &start in members {
            if seen[start] {
                continue;
            }
            // `start` is the smallest vertex of a fresh piece; begin the
            // sweep at the piece's smallest neighbour of the root instead.
            let mut piece = vec![start];
            let mut mark = seen.clone();
            mark[start] = true;
            let mut i = 0;
            while i < piece.len() {
                for &w in p.neighbors(piece[i]) {
                    if !mark[w] {
                        mark[w] = true;
                        piece.push(w);
                    }
                }
                i += 1;
            }
            let first = piece
                .iter()
                .copied()
                .filter(|&v| p.has_edge(v, root))
                .min()
                .expect("pieces touch the root");
            checkpoint.push(Some(Some(root)));
            let mut queue = std::collections::VecDeque::from([first]);
            seen[first] = true;
            let mut k = 0;
            while let Some(u) = queue.pop_front() {
                if k > 0 {
                    checkpoint.push(None);
                }
                k += 1;
                order.push(u);
                for &w in p.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    (order, checkpoint, pending)
}

/// Whether items fit into bins, each item in a single bin.
fn packs(items: &[usize], bins: &mut [usize]) -> bool {
    let Some((&item, rest)) = items.split_first() else {
        return true;
    };
    for j in 0..bins.len() {
        if bins[j] < item || bins[..j].contains(&bins[j]) {
            continue;
        }
        bins[j] -= item;
        let ok = packs(rest, bins);
        bins[j] += item;
        if ok {
            return true;
        }
    }
    false
}

fn bits(flags: impl Iterator<Item = bool>) -> Vec<u64> {
    let mut out = Vec::new();
    for (i, f) in flags.enumerate() {
        if i % 64 == 0 {
            out.push(0);
        }
        if f {
            *out.last_mut().unwrap() |= 1 << (i % 64);
        }
    }
    out
}

impl Search<'_> {
    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                unit: "search steps",
            });
        }
        Ok(())
    }

    fn go(&mut self, k: usize) -> Result<bool> {
        self.tick()?;
        if k == self.order.len() {
            return Ok(true);
        }
        if self.unused < self.order.len() - k {
            return Ok(false);
        }
        let key = self.checkpoint[k].map(|root| {
            let claim = root.map_or_else(Vec::new, |r| {
                let mut f = vec![false; self.g.n()];
                for &x in &self.claim[r] {
                    f[x] = true;
                }
                bits(f.into_iter())
            });
            (k, bits(self.used.iter().copied()), claim)
        });
        if let Some(key) = &key {
            if self.failed.contains(key) {
                return Ok(false);
            }
        }
        if self.checkpoint[k] == Some(None) && !self.components_fit(k) {
            return Ok(false);
        }
        let v = self.order[k];
        for choice in self.choices(v, k)? {
            self.apply(v, &choice);
            if self.go(k + 1)? {
                return Ok(true);
            }
            self.undo(v, &choice);
        }
        if let Some(key) = key {
            self.failed.insert(key);
        }
        Ok(false)
    }

    /// Every remaining pattern component must fit inside one connected
    /// region of free host vertices; for the induced relations, free
    /// vertices next to used ones are off limits.
    fn components_fit(&self, k: usize) -> bool {
        let n = self.g.n();
        let induced = matches!(self.rel, Relation::Induced | Relation::InducedMinor);
        let open: Vec<bool> = (0..n)
            .map(|x| {
                !self.used[x]
                    && !(induced && self.g.neighbors(x).iter().any(|&y| self.owner[y].is_some()))
            })
            .collect();
        let mut seen = vec![false; n];
        let mut regions = Vec::new();
        for x in 0..n {
            if !open[x] || seen[x] {
                continue;
            }
            seen[x] = true;
            let mut stack = vec![x];
            let mut size = 0;
            while let Some(y) = stack.pop() {
                size += 1;
                for &z in self.g.neighbors(y) {
                    if open[z] && !seen[z] {
                        seen[z] = true;
                        stack.push(z);
                    }
                }
            }
            regions.push(size);
        }
        regions.sort_unstable_by(|a, b| b.cmp(a));
        packs(&self.pending[k], &mut regions)
    }

    fn apply(&mut self, v: usize, c: &Choice) {
        for &x in &c.set {
            self.owner[x] = Some(v);
            self.used[x] = true;
        }
        self.unused -= c.set.len();
        for (u, internal) in &c.paths {
            for &x in internal {
                self.used[x] = true;
            }
            self.unused -= internal.len();
            let mut path = vec![self.claim[*u][0]];
            path.extend(internal.iter());
            path.push(c.set[0]);
            let edge = if *u < v { (*u, v) } else { (v, *u) };
            if *u > v {
                path.reverse();
            }
            self.paths.push((edge, path));
        }
        self.claim[v] = c.set.clone();
        self.centre[v] = c.centre.unwrap_or(c.set[0]);
        self.placed[v] = true;
    }

    fn undo(&mut self, v: usize, c: &Choice) {
        for &x in &c.set {
            self.owner[x] = None;
            self.used[x] = false;
        }
        self.unused += c.set.len();
        for (_, internal) in &c.paths {
            for &x in internal {
                self.used[x] = false;
            }
            self.unused += internal.len();
            self.paths.pop();
        }
        self.claim[v].clear();
        self.placed[v] = false;
    }

    fn free_neighbours(&self, set: &[usize]) -> usize {
        let mut seen = HashSet::new();
        for &x in set {
            for &y in self.g.neighbors(x) {
                if !self.used[y] && !set.contains(&y) {
                    seen.insert(y);
                }
            }
        }
        seen.len()
    }

    fn choices(&mut self, v: usize, k: usize) -> Result<Vec<Choice>> {
        let placed: Vec<usize> = self
            .p
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| self.placed[u])
            .collect();
        let waiting = self.p.degree(v) - placed.len();
        // Host vertices that must stay free for the pattern vertices after v.
        let later = self.order.len() - k - 1;
        match self.rel {
            Relation::Subgraph | Relation::Induced => {
                let cands: Vec<usize> = match placed.first() {
                    Some(&u) => self.g.neighbors(self.claim[u][0]).to_vec(),
                    None => (0..self.g.n()).collect(),
                };
                let mut out = Vec::new();
                for c in cands {
                    if self.used[c] || self.free_neighbours(&[c]) < waiting {
                        continue;
                    }
                    if !placed.iter().all(|&u| self.g.has_edge(c, self.claim[u][0])) {
                        continue;
                    }
                    if self.rel == Relation::Induced
                        && self
                            .g
                            .neighbors(c)
                            .iter()
                            .any(|&x| self.owner[x].is_some_and(|w| !self.p.has_edge(v, w)))
                    {
                        continue;
                    }
                    out.push(Choice {
                        set: vec![c],
                        centre: None,
                        paths: Vec::new(),
                    });
                }
                out.sort_by_key(|c| c.set[0]);
                Ok(out)
            }
            Relation::TopMinor => self.topological_choices(v, &placed, waiting, later),
            _ => self.branch_choices(v, &placed, waiting, later),
        }
    }

    fn branch_choices(
        &mut self,
        v: usize,
        placed: &[usize],
        waiting: usize,
        later: usize,
    ) -> Result<Vec<Choice>> {
        let mut cap = self.unused - later;
        // A vertex with at most one neighbour can always shrink to a
        // single host vertex.
        if self.p.degree(v) <= 1 {
            cap = cap.min(1);
        }
        let mut seeds: Vec<usize> = match placed.first() {
            Some(&u) => self.claim[u]
                .iter()
                .flat_map(|&x| self.g.neighbors(x).iter().copied())
                .filter(|&y| !self.used[y])
                .collect(),
            None => (0..self.g.n()).filter(|&y| !self.used[y]).collect(),
        };
        seeds.sort_unstable();
        seeds.dedup();
        let mut allowed: Vec<bool> = self.used.iter().map(|u| !u).collect();
        let mut raw = Vec::new();
        for &seed in &seeds {
            let mut counter = 0u64;
            connected_sets(self.g, seed, &allowed, cap, &mut raw, &mut counter);
            self.steps += counter;
            self.tick()?;
            allowed[seed] = false;
        }
        let mut out = Vec::new();
        for mut set in raw {
            set.sort_unstable();
            let touches = |u: usize| {
                set.iter().any(|&x| {
                    self.g
                        .neighbors(x)
                        .iter()
                        .any(|&y| self.owner[y] == Some(u))
                })
            };
            if !placed.iter().all(|&u| touches(u)) {
                continue;
            }
            if self.free_neighbours(&set) < waiting {
                continue;
            }
            if self.rel == Relation::InducedMinor
                && set.iter().any(|&x| {
                    self.g
                        .neighbors(x)
                        .iter()
                        .any(|&y| self.owner[y].is_some_and(|w| !self.p.has_edge(v, w)))
                })
            {
                continue;
            }
            let mut centre = None;
            if let Relation::ShallowMinor(r) = self.rel {
                let mut inside = vec![false; self.g.n()];
                for &x in &set {
                    inside[x] = true;
                }
                centre = set.iter().copied().find(|&c| {
                    let d = self.g.distances_within(c, &inside);
                    set.iter().all(|&x| d[x].is_some_and(|d| d <= r))
                });
                if centre.is_none() {
                    continue;
                }
            } else if set.len() >= 2 && too_many_leaves(self.g, &set, self.p.degree(v)) {
                continue;
            }
            out.push(Choice {
                set,
                centre,
                paths: Vec::new(),
            });
        }
        out.sort_by(|a, b| (a.set.len(), &a.set).cmp(&(b.set.len(), &b.set)));
        Ok(out)
    }

    fn topological_choices(
        &mut self,
        v: usize,
        placed: &[usize],
        waiting: usize,
        later: usize,
    ) -> Result<Vec<Choice>> {
        let slack = self.unused - later - 1;
        let mut out = Vec::new();
        let Some((&first, rest)) = placed.split_first() else {
            for c in 0..self.g.n() {
                if !self.used[c] && self.free_neighbours(&[c]) >= waiting {
                    out.push(Choice {
                        set: vec![c],
                        centre: None,
                        paths: Vec::new(),
                    });
                }
            }
            return Ok(out);
        };
        let mut blocked = self.used.clone();
        let mut leads = Vec::new();
        simple_paths(
            self.g,
            self.claim[first][0],
            None,
            &mut blocked,
            slack,
            &mut Vec::new(),
            &mut leads,
        );
        self.steps += leads.len() as u64;
        self.tick()?;
        for (c, internal) in leads {
            if self.g.degree(c) < self.p.degree(v) || self.free_neighbours(&[c]) < waiting {
                continue;
            }
            let mut blocked = self.used.clone();
            blocked[c] = true;
            for &x in &internal {
                blocked[x] = true;
            }
            let budget = slack - internal.len();
            let mut routed = vec![(first, internal)];
            self.route_rest(c, rest, &mut blocked, budget, &mut routed, &mut out)?;
        }
        out.sort_by(|a, b| a.set.cmp(&b.set));
        Ok(out)
    }

    /// Routes paths from the new branch vertex `c` to each of `rest` in
    /// turn, emitting every combination.
    fn route_rest(
        &mut self,
        c: usize,
        rest: &[usize],
        blocked: &mut Vec<bool>,
        budget: usize,
        routed: &mut Vec<(usize, Vec<usize>)>,
        out: &mut Vec<Choice>,
    ) -> Result<()> {
        let Some((&u, tail)) = rest.split_first() else {
            // Internal vertices are stored from the branch vertex of the
            // neighbour towards `c`.
            out.push(Choice {
                set: vec![c],
                centre: None,
                paths: routed.clone(),
            });
            return Ok(());
        };
        let mut found = Vec::new();
        simple_paths(
            self.g,
            c,
            Some(self.claim[u][0]),
            blocked,
            budget,
            &mut Vec::new(),
            &mut found,
        );
        self.steps += found.len() as u64;
        self.tick()?;
        for (_, mut internal) in found {
            internal.reverse();
            for &x in &internal {
                blocked[x] = true;
            }
            let left = budget - internal.len();
            routed.push((u, internal));
            self.route_rest(c, tail, blocked, left, routed, out)?;
            let (_, internal) = routed.pop().unwrap();
            for &x in &internal {
                blocked[x] = false;
            }
        }
        Ok(())
    }
}

/// Simple paths from `from` through unblocked vertices with at most
/// `limit` internal vertices. With a `target`, paths end there; without,
/// every unblocked vertex reached is a possible end. Emits
/// `(end, internal vertices in order from `from`)`.
fn simple_paths(
    g: &Graph,
    from: usize,
    target: Option<usize>,
    blocked: &mut Vec<bool>,
    limit: usize,
    internal: &mut Vec<usize>,
    out: &mut Vec<(usize, Vec<usize>)>,
) {
    let mut next: Vec<usize> = g.neighbors(from).to_vec();
    next.sort_unstable();
    for y in next {
        if Some(y) == target {
            out.push((y, internal.clone()));
            continue;
        }
        if blocked[y] {
            continue;
        }
        if target.is_none() {
            out.push((y, internal.clone()));
        }
        if internal.len() < limit {
            blocked[y] = true;
            internal.push(y);
            simple_paths(g, y, target, blocked, limit, internal, out);
            internal.pop();
            blocked[y] = false;
        }
    }
}

/// A minimal branch set inducing a tree has each leaf as the only contact
/// to some neighbour, so it has at most `degree` leaves.
fn too_many_leaves(g: &Graph, set: &[usize], degree: usize) -> bool {
    let inner = |x: usize| g.neighbors(x).iter().filter(|y| set.contains(y)).count();
    let edges: usize = set.iter().map(|&x| inner(x)).sum::<usize>() / 2;
    if edges + 1 != set.len() {
        return false;
    }
    set.iter().filter(|&&x| inner(x) == 1).count() > degree
}

/// Every connected vertex set of size at most `cap` that contains `seed`
/// and otherwise uses `allowed` vertices, each exactly once.
fn connected_sets(
    g: &Graph,
    seed: usize,
    allowed: &[bool],
    cap: usize,
    out: &mut Vec<Vec<usize>>,
    counter: &mut u64,
) {
    if cap == 0 {
        return;
    }
    let mut banned = vec![false; g.n()];
    banned[seed] = true;
    let mut frontier = Vec::new();
    for &y in g.neighbors(seed) {
        if allowed[y] && !frontier.contains(&y) {
            frontier.push(y);
        }
    }
    frontier.sort_unstable();
    extend(
        g,
        allowed,
        cap,
        &mut vec![seed],
        frontier,
        &mut banned,
        out,
        counter,
    );
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    allowed: &[bool],
    cap: usize,
    set: &mut Vec<usize>,
    frontier: Vec<usize>,
    banned: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
    counter: &mut u64,
) {
    *counter += 1;
    out.push(set.clone());
    if set.len() == cap {
        return;
    }
    let mut excluded = Vec::new();
    for idx in 0..frontier.len() {
        let x = frontier[idx];
        let mut next: Vec<usize> = frontier[idx + 1..].to_vec();
        for &y in g.neighbors(x) {
            if allowed[y]
                && !banned[y]
                && !set.contains(&y)
                && !frontier.contains(&y)
                && !next.contains(&y)
            {
                next.push(y);
            }
        }
        banned[x] = true;
        set.push(x);
        extend(g, allowed, cap, set, next, banned, out, counter);
        set.pop();
        excluded.push(x);
    }
    for x in excluded {
        banned[x] = false;
    }
}

/// Checks a witness against its relation without reference to the search.
pub fn verify_embedding(p: &Graph, g: &Graph, rel: Relation, w: &EmbeddingWitness) -> bool {
    let in_range = |xs: &[usize]| xs.iter().all(|&x| x < g.n());
    let disjoint = |sets: &[Vec<usize>]| {
        let mut seen = HashSet::new();
        sets.iter().flatten().all(|&x| seen.insert(x))
    };
    let touching =
        |a: &[usize], b: &[usize]| a.iter().any(|&x| b.iter().any(|&y| g.has_edge(x, y)));
    let connected = |set: &[usize]| {
        let mut inside = vec![false; g.n()];
        for &x in set {
            inside[x] = true;
        }
        let d = g.distances_within(set[0], &inside);
        set.iter().all(|&x| d[x].is_some())
    };
    match (rel, w) {
        (Relation::Subgraph | Relation::Induced, EmbeddingWitness::Map(m)) => {
            if m.len() != p.n() || !in_range(m) || m.iter().collect::<HashSet<_>>().len() != m.len()
            {
                return false;
            }
            (0..p.n()).all(|u| {
                (u + 1..p.n()).all(|v| {
                    let host = g.has_edge(m[u], m[v]);
                    if p.has_edge(u, v) {
                        host
                    } else {
                        rel == Relation::Subgraph || !host
                    }
                })
            })
        }
        (Relation::Minor | Relation::InducedMinor, EmbeddingWitness::BranchSets(sets))
        | (Relation::ShallowMinor(_), EmbeddingWitness::Shallow { sets, .. }) => {
            if sets.len() != p.n()
                || sets
                    .iter()
                    .any(|s| s.is_empty() || !in_range(s) || !connected(s))
                || !disjoint(sets)
            {
                return false;
            }
            let adjacency = (0..p.n()).all(|u| {
                (u + 1..p.n()).all(|v| {
                    let host = touching(&sets[u], &sets[v]);
                    if p.has_edge(u, v) {
                        host
                    } else {
                        rel != Relation::InducedMinor || !host
                    }
                })
            });
            if !adjacency {
                return false;
            }
            match (rel, w) {
                (Relation::ShallowMinor(r), EmbeddingWitness::Shallow { centres, .. }) => {
                    centres.len() == p.n()
                        && sets.iter().zip(centres).all(|(set, &c)| {
                            let mut inside = vec![false; g.n()];
                            for &x in set {
                                inside[x] = true;
                            }
                            c < g.n() && inside[c] && {
                                let d = g.distances_within(c, &inside);
                                set.iter().all(|&x| d[x].is_some_and(|d| d <= r))
                            }
                        })
                }
                _ => true,
            }
        }
        (Relation::TopMinor, EmbeddingWitness::Subdivision { branch, paths }) => {
            if branch.len() != p.n()
                || !in_range(branch)
                || branch.iter().collect::<HashSet<_>>().len() != branch.len()
            {
                return false;
            }
            let mut edges: Vec<(usize, usize)> = paths.iter().map(|(e, _)| *e).collect();
            edges.sort_unstable();
            if edges != p.edges().collect::<Vec<_>>() {
                return false;
            }
            let mut seen: HashSet<usize> = branch.iter().copied().collect();
            paths.iter().all(|((u, v), path)| {
                let (u, v) = (*u, *v);
                path.len() >= 2
                    && in_range(path)
                    && path[0] == branch[u]
                    && path[path.len() - 1] == branch[v]
                    && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
                    && path[1..path.len() - 1].iter().all(|&x| seen.insert(x))
            })
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: u64 = 1_000_000;

    fn check(p: &Graph, g: &Graph, rel: Relation) -> bool {
        let w = embed_bf(p, g, rel, BUDGET).unwrap();
        if let Some(w) = &w {
            assert!(verify_embedding(p, g, rel, w), "{rel:?} witness {w:?}");
        }
        w.is_some()
    }

    #[test]
    fn small_cases() {
        assert!(check(
            &Graph::path(2),
            &Graph::complete(3),
            Relation::Subgraph
        ));
        assert!(!check(
            &Graph::path(3),
            &Graph::complete(3),
            Relation::Induced
        ));
        assert!(check(
            &Graph::path(3),
            &Graph::complete(3),
            Relation::Subgraph
        ));
        assert!(check(
            &Graph::complete(3),
            &Graph::cycle(4),
            Relation::Minor
        ));
        assert!(!check(
            &Graph::complete(3),
            &Graph::cycle(4),
            Relation::Subgraph
        ));
        assert!(check(
            &Graph::complete(3),
            &Graph::cycle(4),
            Relation::TopMinor
        ));
        assert!(check(
            &Graph::complete(3),
            &Graph::cycle(4),
            Relation::ShallowMinor(1)
        ));
        assert!(!check(
            &Graph::complete(3),
            &Graph::cycle(4),
            Relation::ShallowMinor(0)
        ));
        assert!(!check(
            &Graph::complete(4),
            &Graph::cycle(6),
            Relation::Minor
        ));
        assert!(check(
            &Graph::cycle(4),
            &Graph::cycle(6),
            Relation::InducedMinor
        ));
        assert!(!check(
            &Graph::cycle(4),
            &Graph::cycle(6),
            Relation::Induced
        ));
    }

    #[test]
    fn topological_needs_branch_degree() {
        // A claw is a minor of the "H" graph but not a topological minor of
        // the path.
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let h = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        assert!(check(&claw, &h, Relation::TopMinor));
        assert!(!check(&claw, &Graph::path(6), Relation::TopMinor));
        assert!(!check(&claw, &Graph::path(6), Relation::Minor));
        let spider =
            Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(check(&claw, &spider, Relation::TopMinor));
        assert!(check(&claw, &spider, Relation::ShallowMinor(0)));
    }

    #[test]
    fn induced_minor_respects_non_edges() {
        // Two disjoint edges are a minor of the triangle-free path P_4 only
        // as a non-induced structure.
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(check(&two, &Graph::path(4), Relation::Minor));
        assert!(!check(&two, &Graph::path(4), Relation::InducedMinor));
        assert!(check(&two, &Graph::path(5), Relation::InducedMinor));
    }

    #[test]
    fn budget_is_reported() {
        let err =
            embed_bf(&Graph::complete(5), &Graph::cycle(12), Relation::Minor, 10).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 10, .. }));
    }

    #[test]
    fn connected_set_enumeration_is_exact() {
        let g = Graph::cycle(5);
        let allowed = vec![true; 5];
        let mut out = Vec::new();
        let mut counter = 0;
        connected_sets(&g, 0, &allowed, 5, &mut out, &mut counter);
        // Arcs of the 5-cycle through vertex 0: 1 + 2 + 3 + 4 + 1.
        assert_eq!(out.len(), 11);
        let distinct: HashSet<Vec<usize>> = out
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        assert_eq!(distinct.len(), 11);
    }
}
