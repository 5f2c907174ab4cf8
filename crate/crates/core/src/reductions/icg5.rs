use serde::Serialize;

use super::{require_mode, require_palindromes, Strictness};
use crate::bitstring::Mode;
use crate::crafting::{locate, verify_witness, CraftingInstance, Witness};
use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Event, Graph, IntervalModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BarrierPart {
    Centre,
    /// Clique vertex; colour 2 copy 0 is the barrier's endpoint.
    Clique {
        colour: usize,
        copy: usize,
    },
    /// Colour-1 neighbour of a non-endpoint clique vertex.
    Pendant {
        colour: usize,
        copy: usize,
    },
    Block3,
    Block2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MarkHost {
    /// Position `i` of `s`, marked on `p_{2i-1}`.
    S(usize),
    /// Position `pos` of `t_string`, marked on `q_{string, 2pos-1}`.
    T { string: usize, pos: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Icg5Role {
    P(usize),
    N(usize),
    Barrier(Side, BarrierPart),
    Q { string: usize, j: usize },
    M { string: usize, j: usize },
    TEnd { string: usize, right: bool },
    Connector,
    Mark { host: MarkHost, copy: usize },
    MarkPendant { host: MarkHost, copy: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BarrierIds {
    pub centre: usize,
    /// `clique[c - 2][copy]` for colours `c` in `2..=5`.
    pub clique: [[usize; 2]; 4],
    pub pendant: [[Option<usize>; 2]; 4],
    pub block3: usize,
    pub block2: usize,
}

impl BarrierIds {
    pub fn endpoint(&self) -> usize {
        self.clique[0][0]
    }

    fn pendant_of(&self, colour: usize, copy: usize) -> usize {
        self.pendant[colour - 2][copy].expect("non-endpoint clique vertices have pendants")
    }

    /// Left-barrier event order ending with `p` open; the right barrier
    /// uses the mirror image.
    fn events(&self, p: usize) -> Vec<Event> {
        use Event::{Close, Open};
        let c = |colour: usize, copy: usize| self.clique[colour - 2][copy];
        let mut ev = Vec::new();
        for colour in 2..=5 {
            ev.extend([
                Open(c(colour, 1)),
                Open(self.pendant_of(colour, 1)),
                Close(self.pendant_of(colour, 1)),
            ]);
        }
        ev.push(Open(self.centre));
        ev.extend((2..=5).map(|colour| Close(c(colour, 1))));
        ev.extend((2..=5).map(|colour| Open(c(colour, 0))));
        ev.push(Close(self.centre));
        for colour in 3..=5 {
            ev.extend([
                Open(self.pendant_of(colour, 0)),
                Close(self.pendant_of(colour, 0)),
                Close(c(colour, 0)),
            ]);
        }
        ev.extend([
            Open(p),
            Open(self.block3),
            Close(self.endpoint()),
            Open(self.block2),
            Close(self.block2),
            Close(self.block3),
        ]);
        ev
    }
}

/// `(marking vertex, its colour-3 neighbour)` for both copies.
pub type MarkPair = Option<[(usize, usize); 2]>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Icg5Map {
    pub roles: Vec<Icg5Role>,
    /// `p_0 .. p_{2|s|}`.
    pub p: Vec<usize>,
    /// `n_j` for even `j`, indexed by `j`.
    pub n: Vec<Option<usize>>,
    /// Left, then right.
    pub barriers: [BarrierIds; 2],
    /// `q[string - 1][j]`.
    pub q: Vec<Vec<usize>>,
    /// `m[string - 1][j]` for odd `j`.
    pub m: Vec<Vec<Option<usize>>>,
    /// Endpoint vertices at `q_{i,0}` and `q_{i,2|t_i|}`.
    pub t_ends: Vec<(usize, usize)>,
    pub connector: usize,
    /// Pairs `(marking vertex, its colour-3 neighbour)`, two per marked
    /// position of `s`.
    pub s_marks: Vec<MarkPair>,
    pub t_marks: Vec<Vec<MarkPair>>,
}

impl Icg5Map {
    pub fn barrier_vertices(&self, side: Side) -> Vec<usize> {
        self.roles
            .iter()
            .enumerate()
            .filter(|(_, r)| matches!(r, Icg5Role::Barrier(s, _) if *s == side))
            .map(|(v, _)| v)
            .collect()
    }
}

struct Builder {
    g: Graph,
    colours: Vec<usize>,
    roles: Vec<Icg5Role>,
}

impl Builder {
    fn vertex(&mut self, role: Icg5Role, colour: usize) -> usize {
        self.roles.push(role);
        self.colours.push(colour);
        self.g.add_vertex()
    }

    fn child(&mut self, parent: usize, role: Icg5Role, colour: usize) -> usize {
        let v = self.vertex(role, colour);
        self.g.add_edge(parent, v).expect("fresh vertex");
        v
    }

    fn barrier(&mut self, side: Side, anchor: usize) -> BarrierIds {
        let role = |part| Icg5Role::Barrier(side, part);
        let centre = self.vertex(role(BarrierPart::Centre), 1);
        let mut clique = [[0; 2]; 4];
        let mut pendant = [[None; 2]; 4];
        for colour in 2..=5 {
            for copy in 0..2 {
                let v = self.child(centre, role(BarrierPart::Clique { colour, copy }), colour);
                clique[colour - 2][copy] = v;
                if (colour, copy) != (2, 0) {
                    pendant[colour - 2][copy] =
                        Some(self.child(v, role(BarrierPart::Pendant { colour, copy }), 1));
                }
            }
        }
        let endpoint = clique[0][0];
        self.g.add_edge(endpoint, anchor).expect("fresh edge");
        let block3 = self.child(endpoint, role(BarrierPart::Block3), 3);
        let block2 = self.child(block3, role(BarrierPart::Block2), 2);
        BarrierIds {
            centre,
            clique,
            pendant,
            block3,
            block2,
        }
    }

    fn marks(&mut self, at: usize, host: MarkHost) -> [(usize, usize); 2] {
        [0, 1].map(|copy| {
            let mark = self.child(at, Icg5Role::Mark { host, copy }, 4);
            let pendant = self.child(mark, Icg5Role::MarkPendant { host, copy }, 3);
            (mark, pendant)
        })
    }
}

/// Builds a properly 5-coloured tree that can be intervalized iff the
/// Orthogonal Vector Crafting instance is a yes-instance.
///
/// The S-path runs `p_0 .. p_{2|s|}` so that every position `i` has its
/// own odd vertex `p_{2i-1}`.
pub fn ovc_to_icg5(
    inst: &CraftingInstance,
    strictness: Strictness,
) -> Result<(ColoredGraph, Icg5Map)> {
    require_mode(inst, Mode::Orthogonality)?;
    require_palindromes(inst, false, strictness)?;
    let len = inst.s().len();
    if len == 0 {
        return Err(Error::Precondition("host string is empty".into()));
    }
    let mut b = Builder {
        g: Graph::new(0),
        colours: Vec::new(),
        roles: Vec::new(),
    };

    let mut p = Vec::with_capacity(2 * len + 1);
    let mut n = vec![None; 2 * len + 1];
    for j in 0..=2 * len {
        let colour = if j % 2 == 0 { 1 } else { 2 };
        let v = match p.last() {
            Some(&prev) => b.child(prev, Icg5Role::P(j), colour),
            None => b.vertex(Icg5Role::P(j), colour),
        };
        p.push(v);
        if j % 2 == 0 {
            n[j] = Some(b.child(v, Icg5Role::N(j), 3));
        }
    }
    let left = b.barrier(Side::Left, p[0]);
    let right = b.barrier(Side::Right, p[2 * len]);

    let connector = b.child(p[1], Icg5Role::Connector, 5);
    let mut q = Vec::with_capacity(inst.n());
    let mut m = Vec::with_capacity(inst.n());
    let mut t_ends = Vec::with_capacity(inst.n());
    for (k, t) in inst.ts().iter().enumerate() {
        let string = k + 1;
        let mut path = Vec::with_capacity(2 * t.len() + 1);
        let mut ms = vec![None; 2 * t.len() + 1];
        for j in 0..=2 * t.len() {
            let colour = if j % 2 == 1 { 3 } else { 2 };
            let v = match path.last() {
                Some(&prev) => b.child(prev, Icg5Role::Q { string, j }, colour),
                None => b.vertex(Icg5Role::Q { string, j }, colour),
            };
            path.push(v);
            if j % 2 == 1 {
                ms[j] = Some(b.child(v, Icg5Role::M { string, j }, 1));
            }
        }
        b.g.add_edge(connector, path[1]).expect("fresh edge");
        let lo = b.child(
            path[0],
            Icg5Role::TEnd {
                string,
                right: false,
            },
            3,
        );
        let hi = b.child(
            path[2 * t.len()],
            Icg5Role::TEnd {
                string,
                right: true,
            },
            3,
        );
        q.push(path);
        m.push(ms);
        t_ends.push((lo, hi));
    }

    let s_marks = inst
        .s()
        .iter()
        .enumerate()
        .map(|(k, bit)| bit.then(|| b.marks(p[2 * k + 1], MarkHost::S(k + 1))))
        .collect();
    let t_marks = inst
        .ts()
        .iter()
        .enumerate()
        .map(|(k, t)| {
            t.iter()
                .enumerate()
                .map(|(j, bit)| {
                    bit.then(|| {
                        b.marks(
                            q[k][2 * j + 1],
                            MarkHost::T {
                                string: k + 1,
                                pos: j + 1,
                            },
                        )
                    })
                })
                .collect()
        })
        .collect();

    let cg = ColoredGraph::new(b.g, b.colours)?;
    let map = Icg5Map {
        roles: b.roles,
        p,
        n,
        barriers: [left, right],
        q,
        m,
        t_ends,
        connector,
        s_marks,
        t_marks,
    };
    Ok((cg, map))
}

/// Lays out the barriers, the S-path and the T-paths woven into it in the
/// order `w`; every colour-3 vertex `q_{i,2j-1}` strictly contains the
/// colour-2 vertex `p_{2k-1}` of the position it crafts.
pub fn build_icg5_witness(
    map: &Icg5Map,
    inst: &CraftingInstance,
    w: &Witness,
) -> Result<IntervalModel> {
    use Event::{Close, Open};
    if !verify_witness(inst, w)? {
        return Err(Error::InvalidWitness(format!(
            "{w} does not solve the instance"
        )));
    }
    let len = inst.s().len();
    let p = &map.p;
    let mut ev = map.barriers[0].events(p[0]);
    let n_of = |j: usize| map.n[j].expect("even path vertices have hairs");
    ev.extend([Open(map.connector), Open(n_of(0)), Close(n_of(0))]);
    for k in 1..=len {
        let (block, pos) = locate(inst, w, k)?;
        let string = w.perm()[block - 1];
        let qs = &map.q[string - 1];
        let big_q = qs[2 * pos - 1];
        let prev = qs[2 * pos - 2];
        let s_marked = map.s_marks[k - 1];
        let t_marked = map.t_marks[string - 1][pos - 1];
        let marks = s_marked.or(t_marked);
        let (lo_end, hi_end) = map.t_ends[string - 1];

        if pos == 1 {
            ev.extend([Open(prev), Open(lo_end), Close(lo_end)]);
        }
        if let Some([(mark, pend), _]) = marks {
            ev.extend([Open(pend), Open(mark), Close(pend)]);
        }
        ev.extend([Open(big_q), Close(prev)]);
        if let Some([(mark, _), _]) = t_marked {
            ev.push(Close(mark));
        }
        ev.push(Open(p[2 * k - 1]));
        if let Some([(mark, _), _]) = s_marked {
            ev.push(Close(mark));
        }
        let m = map.m[string - 1][2 * pos - 1].expect("odd q vertices have m");
        ev.extend([Close(p[2 * k - 2]), Open(m), Close(m)]);
        if let Some([_, (mark, _)]) = s_marked {
            ev.push(Open(mark));
        }
        ev.extend([Open(p[2 * k]), Close(p[2 * k - 1])]);
        if let Some([_, (mark, _)]) = t_marked {
            ev.push(Open(mark));
        }
        ev.extend([Open(qs[2 * pos]), Close(big_q)]);
        if let Some([_, (mark, pend)]) = marks {
            ev.extend([Open(pend), Close(mark), Close(pend)]);
        }
        if pos == inst.t(string).len() {
            ev.extend([Open(hi_end), Close(hi_end), Close(qs[2 * pos])]);
        }
        ev.extend([Open(n_of(2 * k)), Close(n_of(2 * k))]);
    }
    ev.push(Close(map.connector));
    let right = map.barriers[1].events(p[2 * len]);
    ev.extend(right.into_iter().rev().map(|e| match e {
        Open(v) => Close(v),
        Close(v) => Open(v),
    }));
    IntervalModel::from_events(map.roles.len(), &ev)
        .map_err(|e| Error::Inconsistent(format!("interval layout: {e}")))
}

/// Reads the crafting order off an interval model: each `p_{2k-1}` lies
/// strictly inside one colour-3 `q` vertex, which fixes the position of
/// that character; strings are ordered by their first position.
pub fn decode_perm_from_interval_model(map: &Icg5Map, model: &IntervalModel) -> Result<Witness> {
    let len = (map.p.len() - 1) / 2;
    let mut owner = vec![None; len + 1];
    for (k, slot) in owner.iter_mut().enumerate().skip(1) {
        let pk = map.p[2 * k - 1];
        for (s, qs) in map.q.iter().enumerate() {
            for j in (1..qs.len()).step_by(2) {
                if model.strictly_inside(pk, qs[j]) {
                    *slot = Some(s + 1);
                }
            }
        }
    }
    let mut firsts: Vec<(usize, usize)> = Vec::new();
    for s in 1..=map.q.len() {
        let first = (1..=len).find(|&k| owner[k] == Some(s)).ok_or_else(|| {
            Error::Inconsistent(format!("no p-vertex lies inside a q-vertex of t_{s}"))
        })?;
        firsts.push((first, s));
    }
    firsts.sort_unstable();
    Witness::new(firsts.into_iter().map(|(_, s)| s).collect())
}
