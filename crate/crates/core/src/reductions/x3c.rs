use std::fmt;

use serde::Serialize;

use crate::error::{Error, ParseCode, ParseError, Result};
use crate::graph::{ColoredGraph, Event, Graph, IntervalModel};

/// Exact Cover by 3-Sets: universe `1..=n`, sets `X_1..X_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct X3cInstance {
    n: usize,
    sets: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(n: usize, sets: Vec<[usize; 3]>) -> Result<Self> {
        if !n.is_multiple_of(3) {
            return Err(Error::InvalidInstance(format!(
                "universe size {n} is not a multiple of 3"
            )));
        }
        for (k, set) in sets.iter().enumerate() {
            let [a, b, c] = *set;
            if a == b || b == c || a == c || set.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::InvalidInstance(format!(
                    "X_{} = {set:?} is not three distinct elements of 1..={n}",
                    k + 1
                )));
            }
        }
        Ok(X3cInstance { n, sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[[usize; 3]] {
        &self.sets
    }

    /// The 1-based set `X_i`.
    pub fn set(&self, i: usize) -> [usize; 3] {
        self.sets[i - 1]
    }

    /// Whether the 1-based set indices in `cover` partition the universe.
    pub fn is_exact_cover(&self, cover: &[usize]) -> bool {
        let mut hit = vec![false; self.n + 1];
        let mut chosen = vec![false; self.sets.len() + 1];
        for &i in cover {
            if i == 0 || i > self.sets.len() || std::mem::replace(&mut chosen[i], true) {
                return false;
            }
            for x in self.sets[i - 1] {
                if std::mem::replace(&mut hit[x], true) {
                    return false;
                }
            }
        }
        hit[1..].iter().all(|&h| h)
    }

    /// Line 1 `n m`, then `m` lines of three element labels.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let nums = |lno: usize, l: &str| -> Result<Vec<usize>> {
            l.split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| {
                        ParseError::new(ParseCode::Token, lno, format!("bad number {tok:?}")).into()
                    })
                })
                .collect()
        };
        let (lno, header) = lines
            .next()
            .ok_or_else(|| ParseError::new(ParseCode::Empty, 1, "missing `n m` header"))?;
        let [n, m] = nums(lno, header)?[..] else {
            return Err(ParseError::new(ParseCode::Header, lno, "expected `n m`").into());
        };
        let mut sets = Vec::with_capacity(m);
        for (lno, l) in lines {
            let [a, b, c] = nums(lno, l)?[..] else {
                return Err(
                    ParseError::new(ParseCode::Arity, lno, "expected three elements").into(),
                );
            };
            if [a, b, c].iter().any(|&x| x == 0 || x > n) {
                return Err(ParseError::new(
                    ParseCode::Range,
                    lno,
                    format!("element outside 1..={n}"),
                )
                .into());
            }
            sets.push([a, b, c]);
        }
        if sets.len() != m {
            return Err(ParseError::new(
                ParseCode::Count,
                lno,
                format!("header declares {m} sets, found {}", sets.len()),
            )
            .into());
        }
        X3cInstance::new(n, sets)
    }
}

impl fmt::Display for X3cInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.sets.len())?;
        for [a, b, c] in &self.sets {
            writeln!(f, "{a} {b} {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum X3cRole {
    P(usize),
    RightBarrier,
    V(usize),
    LeftBarrier(usize),
    Connector,
    Central(usize),
    C {
        set: usize,
        copy: usize,
    },
    B {
        set: usize,
        copy: usize,
    },
    F {
        set: usize,
        element: usize,
        copy: usize,
    },
    E {
        set: usize,
        element: usize,
        copy: usize,
    },
}

/// Vertex ids of one set component. Element gadgets follow the order of
/// the set's elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetComponent {
    pub central: usize,
    pub c: [usize; 2],
    pub b: [usize; 2],
    pub f: [[usize; 2]; 3],
    pub e: [[usize; 2]; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct X3cMap {
    pub n: usize,
    pub roles: Vec<X3cRole>,
    pub p: Vec<usize>,
    pub right_barrier: usize,
    pub v: Vec<usize>,
    pub left_barriers: Vec<usize>,
    pub connector: usize,
    pub components: Vec<SetComponent>,
}

impl X3cMap {
    pub const A: usize = 1;
    pub const B: usize = 2;
    pub const C: usize = 3;
    pub const D: usize = 4;

    pub fn colour_e(&self, element: usize) -> usize {
        4 + element
    }

    pub fn colour_f(&self, element: usize) -> usize {
        4 + self.n + element
    }
}

struct Builder {
    g: Graph,
    colours: Vec<usize>,
    roles: Vec<X3cRole>,
}

impl Builder {
    fn vertex(&mut self, role: X3cRole, colour: usize) -> usize {
        self.roles.push(role);
        self.colours.push(colour);
        self.g.add_vertex()
    }

    fn child(&mut self, parent: usize, role: X3cRole, colour: usize) -> usize {
        let v = self.vertex(role, colour);
        self.g.add_edge(parent, v).expect("fresh vertex");
        v
    }
}

/// Builds a coloured tree that can be intervalized iff the X3C instance
/// has an exact cover. Colours: `a, b, c, d = 1, 2, 3, 4`, then `e_i = 4 + i`
/// and `f_i = 4 + n + i`.
pub fn x3c_to_icg(x3c: &X3cInstance) -> Result<(ColoredGraph, X3cMap)> {
    let n = x3c.n();
    let m = x3c.m();
    if m <= n / 3 {
        return Err(Error::Precondition(format!(
            "need more than n/3 = {} sets, got {m}; decide this case directly",
            n / 3
        )));
    }
    let (a, b_, c_, d) = (X3cMap::A, X3cMap::B, X3cMap::C, X3cMap::D);
    let e = |i: usize| 4 + i;
    let f = |i: usize| 4 + n + i;
    let mut b = Builder {
        g: Graph::new(0),
        colours: Vec::new(),
        roles: Vec::new(),
    };
    let len = 2 * (m - n / 3);
    let mut p: Vec<usize> = Vec::with_capacity(len + 1);
    for j in 0..=len {
        let colour = if j % 2 == 0 { a } else { b_ };
        let v = match p.last() {
            Some(&prev) => b.child(prev, X3cRole::P(j), colour),
            None => b.vertex(X3cRole::P(j), colour),
        };
        p.push(v);
    }
    let right_barrier = b.child(p[len], X3cRole::RightBarrier, d);
    let v: Vec<usize> = (1..=n)
        .map(|i| b.child(p[0], X3cRole::V(i), e(i)))
        .collect();
    let left_barriers: Vec<usize> = (1..=n)
        .map(|i| b.child(v[i - 1], X3cRole::LeftBarrier(i), d))
        .collect();
    let connector = b.child(p[0], X3cRole::Connector, d);
    let mut components = Vec::with_capacity(m);
    for (k, elements) in x3c.sets().iter().enumerate() {
        let set = k + 1;
        let central = b.child(connector, X3cRole::Central(set), a);
        let mut cs = [0; 2];
        let mut bs = [0; 2];
        for copy in 0..2 {
            cs[copy] = b.child(central, X3cRole::C { set, copy }, c_);
            bs[copy] = b.child(cs[copy], X3cRole::B { set, copy }, b_);
        }
        let mut fs = [[0; 2]; 3];
        let mut es = [[0; 2]; 3];
        for (slot, &element) in elements.iter().enumerate() {
            for copy in 0..2 {
                fs[slot][copy] = b.child(central, X3cRole::F { set, element, copy }, f(element));
                es[slot][copy] = b.child(
                    fs[slot][copy],
                    X3cRole::E { set, element, copy },
                    e(element),
                );
            }
        }
        components.push(SetComponent {
            central,
            c: cs,
            b: bs,
            f: fs,
            e: es,
        });
    }
    let cg = ColoredGraph::new(b.g, b.colours)?;
    let map = X3cMap {
        n,
        roles: b.roles,
        p,
        right_barrier,
        v,
        left_barriers,
        connector,
        components,
    };
    Ok((cg, map))
}

/// Interval model for an exact cover: cover components packed inside the
/// common part of the `v` intervals with `f` intervals sticking out on both
/// sides, every other component nested in its own odd path vertex.
pub fn build_icg_witness_x3c(
    map: &X3cMap,
    x3c: &X3cInstance,
    cover: &[usize],
) -> Result<IntervalModel> {
    use Event::{Close, Open};
    if !x3c.is_exact_cover(cover) {
        return Err(Error::Precondition(format!(
            "{cover:?} is not an exact cover"
        )));
    }
    let mut in_cover = vec![false; x3c.m() + 1];
    for &i in cover {
        in_cover[i] = true;
    }
    let comps = &map.components;
    let mut ev = Vec::new();
    for &i in cover {
        for slot in 0..3 {
            let (fv, evx) = (comps[i - 1].f[slot][0], comps[i - 1].e[slot][0]);
            ev.extend([Open(evx), Open(fv), Close(evx)]);
        }
    }
    ev.extend(map.v.iter().map(|&x| Open(x)));
    for &dv in &map.left_barriers {
        ev.extend([Open(dv), Close(dv)]);
    }
    ev.push(Open(map.connector));
    for &i in cover {
        let c = &comps[i - 1];
        ev.push(Open(c.central));
        ev.extend((0..3).map(|slot| Close(c.f[slot][0])));
        for copy in 0..2 {
            ev.extend([
                Open(c.c[copy]),
                Open(c.b[copy]),
                Close(c.b[copy]),
                Close(c.c[copy]),
            ]);
        }
        ev.extend((0..3).map(|slot| Open(c.f[slot][1])));
        ev.push(Close(c.central));
    }
    ev.push(Open(map.p[0]));
    ev.extend(map.v.iter().map(|&x| Close(x)));
    for &i in cover {
        for slot in 0..3 {
            let (fv, evx) = (comps[i - 1].f[slot][1], comps[i - 1].e[slot][1]);
            ev.extend([Open(evx), Close(fv), Close(evx)]);
        }
    }
    let rest = (1..=x3c.m()).filter(|&i| !in_cover[i]);
    for (r, i) in (1..).zip(rest) {
        let c = &comps[i - 1];
        let p = &map.p;
        ev.extend([
            Open(c.c[0]),
            Open(c.b[0]),
            Close(c.b[0]),
            Open(p[2 * r - 1]),
            Close(p[2 * r - 2]),
            Open(c.central),
            Close(c.c[0]),
        ]);
        for slot in 0..3 {
            for copy in 0..2 {
                let (fv, evx) = (c.f[slot][copy], c.e[slot][copy]);
                ev.extend([Open(fv), Open(evx), Close(evx), Close(fv)]);
            }
        }
        ev.extend([
            Open(c.c[1]),
            Close(c.central),
            Open(p[2 * r]),
            Close(p[2 * r - 1]),
            Open(c.b[1]),
            Close(c.b[1]),
            Close(c.c[1]),
        ]);
    }
    let last = *map.p.last().expect("path is non-empty");
    ev.extend([
        Close(map.connector),
        Open(map.right_barrier),
        Close(map.right_barrier),
        Close(last),
    ]);
    IntervalModel::from_events(map.roles.len(), &ev)
        .map_err(|e| Error::Inconsistent(format!("interval layout: {e}")))
}

/// Sets whose central vertex lies strictly inside the common part of all
/// `v` intervals, ascending.
pub fn decode_cover_from_model(map: &X3cMap, model: &IntervalModel) -> Vec<usize> {
    let lo = map.v.iter().map(|&x| model.interval(x).0).max();
    let hi = map.v.iter().map(|&x| model.interval(x).1).min();
    let (Some(lo), Some(hi)) = (lo, hi) else {
        return Vec::new();
    };
    map.components
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let (l, r) = model.interval(c.central);
            lo < l && r < hi
        })
        .map(|(k, _)| k + 1)
        .collect()
}
