use serde::Serialize;

use super::{require_mode, require_palindromes, Strictness};
use crate::bitstring::Mode;
use crate::crafting::{locate, verify_witness, CraftingInstance, Witness};
use crate::error::{Error, Result};
use crate::graph::{Decomposition, Graph};

const S_CLIQUE: usize = 6;
const T_CLIQUE: usize = 2;
/// Width reached by two size-6 cliques, two size-2 cliques and one marker.
pub const BASE_WIDTH: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MspdRole {
    /// Member of clique `C_i`, `1 <= i <= |s| + 1`.
    SClique {
        i: usize,
        member: usize,
    },
    /// `s_i`, present when `s(i) = 1`.
    SMarker(usize),
    /// Member of clique `T_{string, j}`, `1 <= j <= |t| + 1`.
    TClique {
        string: usize,
        j: usize,
        member: usize,
    },
    /// `t_{string, j}`, present when `t_string(j) = 1`.
    TMarker {
        string: usize,
        j: usize,
    },
    Universal(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MspdMap {
    pub width: usize,
    pub bag_budget: usize,
    pub roles: Vec<MspdRole>,
    /// `s_cliques[i - 1]` holds the members of `C_i`.
    pub s_cliques: Vec<Vec<usize>>,
    pub s_markers: Vec<Option<usize>>,
    /// `t_cliques[string - 1][j - 1]` holds the members of `T_{string, j}`.
    pub t_cliques: Vec<Vec<Vec<usize>>>,
    pub t_markers: Vec<Vec<Option<usize>>>,
    pub universals: Vec<usize>,
}

struct Builder {
    g: Graph,
    roles: Vec<MspdRole>,
}

impl Builder {
    fn vertex(&mut self, role: MspdRole) -> usize {
        self.roles.push(role);
        self.g.add_vertex()
    }

    fn join(&mut self, a: &[usize], b: &[usize]) {
        for &u in a {
            for &v in b {
                if u != v && !self.g.has_edge(u, v) {
                    self.g.add_edge(u, v).expect("vertices exist");
                }
            }
        }
    }

    /// Clique chain for `bits` with cliques of `size`, joined consecutively,
    /// plus a marker on each 1-bit adjacent to both surrounding cliques.
    fn chain(
        &mut self,
        bits: &crate::bitstring::BitString,
        size: usize,
        clique_role: impl Fn(usize, usize) -> MspdRole,
        marker_role: impl Fn(usize) -> MspdRole,
    ) -> (Vec<Vec<usize>>, Vec<Option<usize>>) {
        let cliques: Vec<Vec<usize>> = (1..=bits.len() + 1)
            .map(|i| {
                let members: Vec<usize> =
                    (0..size).map(|k| self.vertex(clique_role(i, k))).collect();
                self.join(&members, &members);
                members
            })
            .collect();
        for w in cliques.windows(2) {
            self.join(&w[0], &w[1]);
        }
        let markers = bits
            .iter()
            .enumerate()
            .map(|(k, b)| {
                b.then(|| {
                    let v = self.vertex(marker_role(k + 1));
                    let around: Vec<usize> =
                        cliques[k].iter().chain(&cliques[k + 1]).copied().collect();
                    self.join(&[v], &around);
                    v
                })
            })
            .collect();
        (cliques, markers)
    }
}

/// Builds a graph that has a path (or tree) decomposition of width `k`
/// with at most `|s|` bags iff the Orthogonal Vector Crafting instance is
/// a yes-instance. Returns the graph, the bag budget and the map.
pub fn ovc_to_mspd(
    inst: &CraftingInstance,
    k: usize,
    strictness: Strictness,
) -> Result<(Graph, usize, MspdMap)> {
    require_mode(inst, Mode::Orthogonality)?;
    if k < BASE_WIDTH {
        return Err(Error::Precondition(format!(
            "width {k} is below {BASE_WIDTH}"
        )));
    }
    require_palindromes(inst, false, strictness)?;
    let mut b = Builder {
        g: Graph::new(0),
        roles: Vec::new(),
    };
    let (s_cliques, s_markers) = b.chain(
        inst.s(),
        S_CLIQUE,
        |i, member| MspdRole::SClique { i, member },
        MspdRole::SMarker,
    );
    let mut t_cliques = Vec::with_capacity(inst.n());
    let mut t_markers = Vec::with_capacity(inst.n());
    for (idx, t) in inst.ts().iter().enumerate() {
        let string = idx + 1;
        let (c, m) = b.chain(
            t,
            T_CLIQUE,
            |j, member| MspdRole::TClique { string, j, member },
            |j| MspdRole::TMarker { string, j },
        );
        t_cliques.push(c);
        t_markers.push(m);
    }
    let universals: Vec<usize> = (0..k - BASE_WIDTH)
        .map(|u| b.vertex(MspdRole::Universal(u)))
        .collect();
    for &u in &universals {
        for v in 0..b.g.n() {
            if v != u && !b.g.has_edge(u, v) {
                b.g.add_edge(u, v).expect("vertices exist");
            }
        }
    }
    let bag_budget = inst.s().len();
    let map = MspdMap {
        width: k,
        bag_budget,
        roles: b.roles,
        s_cliques,
        s_markers,
        t_cliques,
        t_markers,
        universals,
    };
    Ok((b.g, bag_budget, map))
}

/// One bag per position `i` of `s`: `C_i`, `C_{i+1}`, the two T-cliques
/// around the character of `t^Π` at `i`, whichever marker exists there, and
/// the universal vertices.
pub fn build_mspd_witness(
    map: &MspdMap,
    inst: &CraftingInstance,
    w: &Witness,
) -> Result<Decomposition> {
    if !verify_witness(inst, w)? {
        return Err(Error::InvalidWitness(format!(
            "{w} does not solve the instance"
        )));
    }
    let mut bags = Vec::with_capacity(inst.s().len());
    for i in 1..=inst.s().len() {
        let (j, pos) = locate(inst, w, i)?;
        let string = w.perm()[j - 1];
        let cliques = &map.t_cliques[string - 1];
        let mut bag: Vec<usize> = map.s_cliques[i - 1]
            .iter()
            .chain(&map.s_cliques[i])
            .chain(&cliques[pos - 1])
            .chain(&cliques[pos])
            .chain(&map.universals)
            .copied()
            .collect();
        bag.extend(map.s_markers[i - 1]);
        bag.extend(map.t_markers[string - 1][pos - 1]);
        bags.push(bag);
    }
    Ok(Decomposition::path(bags))
}

/// Recovers the crafting order from a decomposition with at most `|s|`
/// bags: bags are ranked by the pair `C_i, C_{i+1}` they hold, and strings
/// are ordered by the first ranked bag holding two consecutive T-cliques
/// of theirs.
pub fn decode_perm_from_decomposition(map: &MspdMap, d: &Decomposition) -> Result<Witness> {
    let holds =
        |bag: &[usize], clique: &[usize]| clique.iter().all(|v| bag.binary_search(v).is_ok());
    let rank_of = |bag: &[usize]| {
        map.s_cliques
            .windows(2)
            .position(|w| holds(bag, &w[0]) && holds(bag, &w[1]))
    };
    let mut firsts = Vec::with_capacity(map.t_cliques.len());
    for (k, cliques) in map.t_cliques.iter().enumerate() {
        let first = d
            .bags()
            .iter()
            .filter(|bag| {
                cliques
                    .windows(2)
                    .any(|w| holds(bag, &w[0]) && holds(bag, &w[1]))
            })
            .filter_map(|bag| rank_of(bag))
            .min()
            .ok_or_else(|| {
                Error::Inconsistent(format!("no ranked bag holds two T-cliques of t_{}", k + 1))
            })?;
        firsts.push((first, k + 1));
    }
    firsts.sort_unstable();
    if firsts.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::Inconsistent(
            "two strings start in the same bag".into(),
        ));
    }
    Witness::new(firsts.into_iter().map(|(_, k)| k).collect())
}
