use std::collections::HashMap;

use serde::Serialize;

use super::{require_mode, require_palindromes, Strictness};
use crate::bitstring::{BitString, Mode};
use crate::crafting::{verify_witness, CraftingInstance, Witness};
use crate::error::{Error, Result};
use crate::graph::{subdivide, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubgraphVariant {
    /// Host is a caterpillar, pattern a forest of caterpillars.
    Caterpillar,
    /// Adds a hub to each side to make both graphs connected.
    Connected,
    /// `Caterpillar` with every path edge subdivided once.
    Induced,
    /// `Connected` with path and hub edges subdivided once.
    InducedConnected,
}

impl SubgraphVariant {
    pub const ALL: [SubgraphVariant; 4] = [
        SubgraphVariant::Caterpillar,
        SubgraphVariant::Connected,
        SubgraphVariant::Induced,
        SubgraphVariant::InducedConnected,
    ];

    pub fn is_connected(self) -> bool {
        matches!(
            self,
            SubgraphVariant::Connected | SubgraphVariant::InducedConnected
        )
    }

    pub fn is_induced(self) -> bool {
        matches!(
            self,
            SubgraphVariant::Induced | SubgraphVariant::InducedConnected
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SubgraphRole {
    /// Path vertex for position `pos` (1-based) of `s`.
    HostPath(usize),
    HostHair(usize),
    PatternPath {
        string: usize,
        pos: usize,
    },
    PatternHair {
        string: usize,
        pos: usize,
    },
    Hub,
    /// Pendant leaf of the hub.
    HubLeaf(usize),
    /// Fresh vertex splitting the edge between the two given vertices.
    Subdivision(usize, usize),
}

/// Leaves hung on each hub. Host path vertices have degree at most 4, so a
/// pattern hub of degree at least 5 can only land on the host hub.
pub const HUB_LEAVES: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphMap {
    pub variant: SubgraphVariant,
    pub host_roles: Vec<SubgraphRole>,
    pub pattern_roles: Vec<SubgraphRole>,
    /// Host path vertex of each position of `s`.
    pub host_path: Vec<usize>,
    pub host_hair: Vec<Option<usize>>,
    /// Pattern path vertices, per string and position.
    pub pattern_path: Vec<Vec<usize>>,
    pub pattern_hair: Vec<Vec<Option<usize>>>,
    pub host_hub: Option<usize>,
    pub pattern_hub: Option<usize>,
    pub host_hub_leaves: Vec<usize>,
    pub pattern_hub_leaves: Vec<usize>,
}

struct Side {
    g: Graph,
    roles: Vec<SubgraphRole>,
    to_subdivide: Vec<(usize, usize)>,
}

impl Side {
    fn new() -> Self {
        Side {
            g: Graph::new(0),
            roles: Vec::new(),
            to_subdivide: Vec::new(),
        }
    }

    fn vertex(&mut self, role: SubgraphRole) -> usize {
        self.roles.push(role);
        self.g.add_vertex()
    }

    fn edge(&mut self, u: usize, v: usize, subdivided: bool) {
        self.g.add_edge(u, v).expect("fresh edge");
        if subdivided {
            self.to_subdivide.push((u, v));
        }
    }

    /// Path vertices for `bits`, then one hair per 1-bit.
    fn caterpillar(
        &mut self,
        bits: &BitString,
        induced: bool,
        path_role: impl Fn(usize) -> SubgraphRole,
        hair_role: impl Fn(usize) -> SubgraphRole,
    ) -> (Vec<usize>, Vec<Option<usize>>) {
        let path: Vec<usize> = (1..=bits.len())
            .map(|p| self.vertex(path_role(p)))
            .collect();
        for w in path.windows(2) {
            self.edge(w[0], w[1], induced);
        }
        let hair = bits
            .iter()
            .enumerate()
            .map(|(k, b)| {
                b.then(|| {
                    let h = self.vertex(hair_role(k + 1));
                    self.edge(path[k], h, false);
                    h
                })
            })
            .collect();
        (path, hair)
    }

    fn hub_leaves(&mut self, hub: Option<usize>) -> Vec<usize> {
        let Some(u) = hub else {
            return Vec::new();
        };
        (0..HUB_LEAVES)
            .map(|k| {
                let leaf = self.vertex(SubgraphRole::HubLeaf(k));
                self.edge(u, leaf, false);
                leaf
            })
            .collect()
    }

    fn finish(mut self) -> (Graph, Vec<SubgraphRole>) {
        let g = subdivide(&self.g, &self.to_subdivide).expect("listed edges exist");
        self.roles.extend(
            self.to_subdivide
                .iter()
                .map(|&(u, v)| SubgraphRole::Subdivision(u.min(v), u.max(v))),
        );
        (g, self.roles)
    }
}

/// Builds host `G` from `s` and pattern `P` from the `t_i`; `P` embeds in
/// `G` iff the String Crafting instance is a yes-instance.
pub fn sc_to_subgraph(
    inst: &CraftingInstance,
    variant: SubgraphVariant,
    strictness: Strictness,
) -> Result<(Graph, Graph, SubgraphMap)> {
    require_mode(inst, Mode::Domination)?;
    require_palindromes(inst, true, strictness)?;
    let induced = variant.is_induced();

    let mut host = Side::new();
    let (host_path, host_hair) = host.caterpillar(
        inst.s(),
        induced,
        SubgraphRole::HostPath,
        SubgraphRole::HostHair,
    );
    let host_hub = variant.is_connected().then(|| {
        let u = host.vertex(SubgraphRole::Hub);
        for &v in &host_path {
            host.edge(v, u, induced);
        }
        u
    });
    let host_hub_leaves = host.hub_leaves(host_hub);

    let mut pattern = Side::new();
    let mut pattern_path = Vec::with_capacity(inst.n());
    let mut pattern_hair = Vec::with_capacity(inst.n());
    for (k, t) in inst.ts().iter().enumerate() {
        let string = k + 1;
        let (path, hair) = pattern.caterpillar(
            t,
            induced,
            |pos| SubgraphRole::PatternPath { string, pos },
            |pos| SubgraphRole::PatternHair { string, pos },
        );
        pattern_path.push(path);
        pattern_hair.push(hair);
    }
    let pattern_hub = variant.is_connected().then(|| {
        let u = pattern.vertex(SubgraphRole::Hub);
        for path in &pattern_path {
            pattern.edge(path[0], u, induced);
        }
        u
    });
    let pattern_hub_leaves = pattern.hub_leaves(pattern_hub);

    let (g, host_roles) = host.finish();
    let (p, pattern_roles) = pattern.finish();
    let map = SubgraphMap {
        variant,
        host_roles,
        pattern_roles,
        host_path,
        host_hair,
        pattern_path,
        pattern_hair,
        host_hub,
        pattern_hub,
        host_hub_leaves,
        pattern_hub_leaves,
    };
    Ok((g, p, map))
}

/// Maps pattern vertices to host vertices following the order `w`.
pub fn build_subgraph_embedding(
    map: &SubgraphMap,
    inst: &CraftingInstance,
    w: &Witness,
) -> Result<Vec<usize>> {
    if !verify_witness(inst, w)? {
        return Err(Error::InvalidWitness(format!(
            "{w} does not solve the instance"
        )));
    }
    let mut emb = vec![usize::MAX; map.pattern_roles.len()];
    let mut offset = 0;
    for &k in w.perm() {
        for (p, &v) in map.pattern_path[k - 1].iter().enumerate() {
            emb[v] = map.host_path[offset + p];
            if let Some(h) = map.pattern_hair[k - 1][p] {
                emb[h] = map.host_hair[offset + p].expect("a verified witness has s = 1 here");
            }
        }
        offset += map.pattern_path[k - 1].len();
    }
    if let (Some(a), Some(b)) = (map.pattern_hub, map.host_hub) {
        emb[a] = b;
    }
    for (&a, &b) in map.pattern_hub_leaves.iter().zip(&map.host_hub_leaves) {
        emb[a] = b;
    }
    let host_subdivisions: HashMap<(usize, usize), usize> = map
        .host_roles
        .iter()
        .enumerate()
        .filter_map(|(v, r)| match *r {
            SubgraphRole::Subdivision(a, b) => Some(((a, b), v)),
            _ => None,
        })
        .collect();
    for (v, role) in map.pattern_roles.iter().enumerate() {
        if let SubgraphRole::Subdivision(a, b) = *role {
            let (x, y) = (emb[a], emb[b]);
            emb[v] = *host_subdivisions
                .get(&(x.min(y), x.max(y)))
                .ok_or_else(|| Error::Inconsistent(format!("no host subdivision of ({x}, {y})")))?;
        }
    }
    Ok(emb)
}

/// Reads the crafting order off an embedding: components sorted by the
/// first host path position their path vertices occupy.
pub fn decode_perm_from_embedding(map: &SubgraphMap, emb: &[usize]) -> Result<Witness> {
    if emb.len() != map.pattern_roles.len() {
        return Err(Error::InvalidWitness(format!(
            "embedding has {} entries, pattern has {} vertices",
            emb.len(),
            map.pattern_roles.len()
        )));
    }
    let mut firsts = Vec::with_capacity(map.pattern_path.len());
    for (k, path) in map.pattern_path.iter().enumerate() {
        let mut first = usize::MAX;
        for &v in path {
            match map.host_roles.get(emb[v]) {
                Some(SubgraphRole::HostPath(pos)) => first = first.min(*pos),
                other => {
                    return Err(Error::Inconsistent(format!(
                        "path vertex {v} of t_{} maps to {other:?}",
                        k + 1
                    )))
                }
            }
        }
        firsts.push((first, k + 1));
    }
    firsts.sort_unstable();
    Witness::new(firsts.into_iter().map(|(_, k)| k).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_caterpillar;

    fn inst(s: &str, ts: &[&str]) -> CraftingInstance {
        CraftingInstance::new(
            s.parse().unwrap(),
            ts.iter().map(|t| t.parse().unwrap()).collect(),
            Mode::Domination,
        )
        .unwrap()
    }

    #[test]
    fn nine_bit_counts() {
        let sample = inst("101110101", &["1010", "101", "00"]);
        assert!(sc_to_subgraph(&sample, SubgraphVariant::Caterpillar, Strictness::Strict).is_err());
        let (g, p, map) = sc_to_subgraph(
            &sample,
            SubgraphVariant::Caterpillar,
            Strictness::Permissive,
        )
        .unwrap();
        assert_eq!((g.n(), p.n()), (15, 13));
        assert!(is_caterpillar(&g));
        assert!((0..g.n()).all(|v| g.degree(v) <= 3));
        assert_eq!(p.component_count(), 3);
        let emb = build_subgraph_embedding(&map, &sample, &Witness::identity(3)).unwrap();
        assert_eq!(
            decode_perm_from_embedding(&map, &emb).unwrap().perm(),
            &[1, 2, 3]
        );
    }

    #[test]
    fn single_edge() {
        let i = inst("1", &["1"]);
        let (g, p, _) =
            sc_to_subgraph(&i, SubgraphVariant::Caterpillar, Strictness::Strict).unwrap();
        assert_eq!((g.n(), g.m(), p.n(), p.m()), (2, 1, 2, 1));
    }

    #[test]
    fn variants_have_expected_shape() {
        let i = inst("10111", &["11", "101"]);
        let (g, p, map) =
            sc_to_subgraph(&i, SubgraphVariant::InducedConnected, Strictness::Strict).unwrap();
        // 5 path + 4 hairs + hub and its leaves + 4 path subdivisions + 5
        // hub subdivisions.
        assert_eq!(g.n(), 24);
        assert!(g.is_connected());
        // 5 path + 4 hairs + hub and its leaves + 3 path subdivisions + 2
        // hub subdivisions.
        assert_eq!(p.n(), 20);
        assert!(p.is_tree());
        assert_eq!(map.host_roles.len(), g.n());
        assert_eq!(map.pattern_roles.len(), p.n());
        let w = Witness::new(vec![2, 1]).unwrap();
        let emb = build_subgraph_embedding(&map, &i, &w).unwrap();
        for (a, b) in p.edges() {
            assert!(g.has_edge(emb[a], emb[b]));
        }
        assert_eq!(decode_perm_from_embedding(&map, &emb).unwrap(), w);
    }

    #[test]
    fn flipped_component_decodes_the_same() {
        let i = inst("10111", &["101", "1", "1"]);
        let (_, _, map) =
            sc_to_subgraph(&i, SubgraphVariant::Caterpillar, Strictness::Strict).unwrap();
        let w = Witness::identity(3);
        let mut emb = build_subgraph_embedding(&map, &i, &w).unwrap();
        let path = &map.pattern_path[0];
        let images: Vec<usize> = path.iter().map(|&v| emb[v]).collect();
        for (&v, &img) in path.iter().zip(images.iter().rev()) {
            emb[v] = img;
        }
        assert_eq!(decode_perm_from_embedding(&map, &emb).unwrap(), w);
    }

    #[test]
    fn rejects_non_palindromes() {
        let i = inst("1101", &["1101"]);
        let err = sc_to_subgraph(&i, SubgraphVariant::Caterpillar, Strictness::Strict).unwrap_err();
        assert!(err.to_string().contains("t_1"));
    }
}
