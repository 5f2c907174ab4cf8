use proptest::prelude::*;

use craftbench::reductions::{
    build_icg5_witness, build_icg_witness_x3c, build_mspd_witness, build_subgraph_embedding,
    decode_assignment, decode_cover_from_model, decode_perm_from_decomposition,
    decode_perm_from_embedding, decode_perm_from_interval_model, encode_assignment, ovc_to_icg5,
    ovc_to_mspd, sat_to_sc, sc_to_subgraph, x3c_to_icg, CnfFormula, Strictness, SubgraphVariant,
    X3cInstance,
};
use craftbench::{
    embed_bf, id_encode, intervalize_exact, mspd_exact, sat_bf, solve, validate_interval_model,
    verify_embedding, verify_witness, x3c_bf, BitString, ColoredGraph, CraftingInstance, Event,
    Graph, IntervalModel, Method, Mode, Relation, Shape,
};

fn bits(max: usize) -> impl Strategy<Value = BitString> {
    prop::collection::vec(any::<bool>(), 1..=max).prop_map(BitString::from_bits)
}

fn palindrome(max_half: usize, ends_with_one: bool) -> impl Strategy<Value = BitString> {
    (
        prop::collection::vec(any::<bool>(), 1..=max_half),
        any::<bool>(),
    )
        .prop_map(move |(half, odd)| {
            let mut all = half.clone();
            all.extend(half.iter().rev().skip(odd as usize));
            if ends_with_one {
                let last = all.len() - 1;
                all[0] = true;
                all[last] = true;
            }
            BitString::from_bits(all)
        })
}

/// Strings `ts` plus a host of the same total length. With `planted`, the
/// host is built from the strings in the given order, so it is a yes-instance.
fn instance(
    ts: impl Strategy<Value = Vec<BitString>>,
    mode: Mode,
    planted: bool,
) -> impl Strategy<Value = CraftingInstance> {
    ts.prop_flat_map(move |ts| {
        let len: usize = ts.iter().map(BitString::len).sum();
        (Just(ts), prop::collection::vec(any::<bool>(), len))
    })
    .prop_map(move |(ts, noise)| {
        let crafted = BitString::concat_all(&ts);
        let s =
            BitString::from_bits(
                crafted
                    .iter()
                    .zip(noise)
                    .map(|(b, x)| match (planted, mode) {
                        (false, _) => x,
                        (true, Mode::Domination) => b || x,
                        (true, Mode::Orthogonality) => !b && x,
                    }),
            );
        CraftingInstance::new(s, ts, mode).unwrap()
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |mask| {
            let mut g = Graph::new(n);
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            for ((u, v), on) in pairs.zip(mask) {
                if on {
                    g.add_edge(u, v).unwrap();
                }
            }
            g
        })
    })
}

fn cnf() -> impl Strategy<Value = CnfFormula> {
    (1..=4usize).prop_flat_map(|n| {
        let lit = (1..=n as i32, any::<bool>()).prop_map(|(v, neg)| if neg { -v } else { v });
        prop::collection::vec([lit.clone(), lit.clone(), lit], 1..=3)
            .prop_map(move |clauses| CnfFormula::new(n, clauses).unwrap())
    })
}

/// Every event order in which each vertex opens before it closes, checked
/// with the validator alone.
fn intervalizable_by_enumeration(cg: &ColoredGraph) -> bool {
    fn go(cg: &ColoredGraph, state: &mut Vec<u8>, events: &mut Vec<Event>) -> bool {
        let n = state.len();
        if events.len() == 2 * n {
            let model = IntervalModel::from_events(n, events).unwrap();
            return validate_interval_model(cg, &model).is_ok();
        }
        for v in 0..n {
            let event = match state[v] {
                0 => Event::Open(v),
                1 => Event::Close(v),
                _ => continue,
            };
            state[v] += 1;
            events.push(event);
            let found = go(cg, state, events);
            events.pop();
            state[v] -= 1;
            if found {
                return true;
            }
        }
        false
    }
    go(cg, &mut vec![0; cg.graph().n()], &mut Vec::new())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solvers_agree(
        inst in prop_oneof![Just(Mode::Domination), Just(Mode::Orthogonality)]
            .prop_flat_map(|mode| instance(prop::collection::vec(bits(4), 1..=6), mode, false)),
    ) {
        let answers: Vec<_> = Method::ALL.iter().map(|&m| solve(&inst, m)).collect();
        for w in &answers {
            prop_assert_eq!(w.is_some(), answers[0].is_some());
            if let Some(w) = w {
                prop_assert!(verify_witness(&inst, w).unwrap());
            }
        }
    }

    #[test]
    fn planted_instances_are_yes(
        inst in instance(prop::collection::vec(bits(5), 1..=6), Mode::Domination, true),
    ) {
        prop_assert!(solve(&inst, Method::Split).is_some());
    }

    #[test]
    fn complement_is_an_involution(s in bits(40)) {
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert_eq!(s.complement().count_ones(), s.len() - s.count_ones());
    }

    #[test]
    fn ids_are_distinct_palindromes(q in 1u32..=4) {
        let ids: Vec<BitString> = (1..=1usize << q).map(|i| id_encode(i, q).unwrap()).collect();
        for (k, id) in ids.iter().enumerate() {
            prop_assert!(id.is_palindrome());
            prop_assert_eq!(id.len(), 4 * q as usize + 2);
            prop_assert!(ids[k + 1..].iter().all(|other| other != id));
        }
    }

    #[test]
    fn sat_round_trip(f in cnf()) {
        let (inst, map) = sat_to_sc(&f);
        prop_assert!(inst.ts().iter().all(|t| t.is_palindrome() && t.get(1) == Some(true)));
        if let Some(a) = sat_bf(&f) {
            let w = encode_assignment(&map, &f, &a).unwrap();
            prop_assert!(verify_witness(&inst, &w).unwrap());
            let back = decode_assignment(&map, &inst, &w).unwrap();
            prop_assert!(f.is_satisfied_by(&back));
        }
    }

    #[test]
    fn subgraph_round_trip(
        inst in instance(prop::collection::vec(palindrome(3, true), 1..=4), Mode::Domination, true),
    ) {
        let w = solve(&inst, Method::HeldKarp).unwrap();
        for variant in SubgraphVariant::ALL {
            let (host, pattern, map) = sc_to_subgraph(&inst, variant, Strictness::Strict).unwrap();
            let emb = build_subgraph_embedding(&map, &inst, &w).unwrap();
            let rel = if variant.is_induced() { Relation::Induced } else { Relation::Subgraph };
            prop_assert!(verify_embedding(&pattern, &host, rel, &craftbench::EmbeddingWitness::Map(emb.clone())));
            let back = decode_perm_from_embedding(&map, &emb).unwrap();
            prop_assert!(verify_witness(&inst, &back).unwrap());
        }
    }

    #[test]
    fn mspd_round_trip(
        inst in instance(prop::collection::vec(palindrome(3, false), 1..=4), Mode::Orthogonality, true),
        extra in 0usize..3,
    ) {
        let w = solve(&inst, Method::HeldKarp).unwrap();
        let (g, bags, map) = ovc_to_mspd(&inst, 16 + extra, Strictness::Strict).unwrap();
        let d = build_mspd_witness(&map, &inst, &w).unwrap();
        prop_assert_eq!(craftbench::validate_decomposition(&g, &d, 16 + extra, bags), Ok(()));
        let back = decode_perm_from_decomposition(&map, &d).unwrap();
        prop_assert!(verify_witness(&inst, &back).unwrap());
    }

    #[test]
    fn icg5_round_trip(
        inst in instance(prop::collection::vec(palindrome(3, false), 1..=4), Mode::Orthogonality, true),
    ) {
        let w = solve(&inst, Method::HeldKarp).unwrap();
        let (cg, map) = ovc_to_icg5(&inst, Strictness::Strict).unwrap();
        prop_assert!(cg.graph().is_tree());
        let model = build_icg5_witness(&map, &inst, &w).unwrap();
        prop_assert_eq!(validate_interval_model(&cg, &model), Ok(()));
        let back = decode_perm_from_interval_model(&map, &model).unwrap();
        prop_assert!(verify_witness(&inst, &back).unwrap());
    }

    #[test]
    fn x3c_round_trip(
        sets in prop::collection::vec(prop::sample::subsequence((1..=6usize).collect::<Vec<_>>(), 3), 3..=5),
    ) {
        let sets: Vec<[usize; 3]> = sets.into_iter().map(|s| [s[0], s[1], s[2]]).collect();
        let x = X3cInstance::new(6, sets).unwrap();
        let (cg, map) = x3c_to_icg(&x).unwrap();
        prop_assert!(cg.graph().is_tree());
        if let Some(cover) = x3c_bf(&x) {
            let model = build_icg_witness_x3c(&map, &x, &cover).unwrap();
            prop_assert_eq!(validate_interval_model(&cg, &model), Ok(()));
            let back = decode_cover_from_model(&map, &model);
            prop_assert!(x.is_exact_cover(&back));
        }
    }

    #[test]
    fn relation_hierarchy(p in graph(4), g in graph(6)) {
        let holds = |rel| {
            let w = embed_bf(&p, &g, rel, 10_000_000).unwrap();
            if let Some(w) = &w {
                assert!(verify_embedding(&p, &g, rel, w), "{rel:?} witness rejected");
            }
            w.is_some()
        };
        let sub = holds(Relation::Subgraph);
        let ind = holds(Relation::Induced);
        let minor = holds(Relation::Minor);
        let ind_minor = holds(Relation::InducedMinor);
        let top = holds(Relation::TopMinor);
        let shallow: Vec<bool> = (0..3).map(|r| holds(Relation::ShallowMinor(r))).collect();
        prop_assert!(!ind || sub);
        prop_assert!(!ind || ind_minor);
        prop_assert!(!sub || top);
        prop_assert!(!top || minor);
        prop_assert!(!ind_minor || minor);
        prop_assert_eq!(shallow[0], sub);
        prop_assert!(!shallow[0] || shallow[1]);
        prop_assert!(!shallow[1] || shallow[2]);
        prop_assert!(!shallow[2] || minor);
    }

    #[test]
    fn mspd_is_monotone(g in graph(7), width in 0usize..4, bags in 1usize..5) {
        let yes = |w, b, shape| mspd_exact(&g, w, b, shape, 10_000_000).unwrap().is_some();
        let path = yes(width, bags, Shape::Path);
        let tree = yes(width, bags, Shape::Tree);
        prop_assert!(!path || tree);
        prop_assert!(!path || yes(width + 1, bags, Shape::Path));
        prop_assert!(!path || yes(width, bags + 1, Shape::Path));
        prop_assert!(!tree || yes(width + 1, bags, Shape::Tree));
        prop_assert!(!tree || yes(width, bags + 1, Shape::Tree));
        if let Some(d) = mspd_exact(&g, width, bags, Shape::Tree, 10_000_000).unwrap() {
            prop_assert_eq!(craftbench::validate_decomposition(&g, &d, width, bags), Ok(()));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn intervalize_matches_enumeration(
        (colours, mask) in (1..=5usize, 2..=3usize).prop_flat_map(|(n, k)| {
            (
                prop::collection::vec(1..=k, n),
                prop::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        }),
    ) {
        let n = colours.len();
        let mut g = Graph::new(n);
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        for ((u, v), on) in pairs.zip(mask) {
            if on && colours[u] != colours[v] {
                g.add_edge(u, v).unwrap();
            }
        }
        let cg = ColoredGraph::new(g, colours).unwrap();
        let found = intervalize_exact(&cg, 1_000_000).unwrap();
        if let Some(m) = &found {
            prop_assert_eq!(validate_interval_model(&cg, m), Ok(()));
        }
        prop_assert_eq!(found.is_some(), intervalizable_by_enumeration(&cg));
    }
}

#[test]
fn intervalize_matches_enumeration_exhaustively() {
    let mut counts = [0usize; 2];
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for code in 0..3usize.pow(n as u32) {
            let colours: Vec<usize> = (0..n)
                .map(|v| code / 3usize.pow(v as u32) % 3 + 1)
                .collect();
            let allowed: Vec<(usize, usize)> = pairs
                .iter()
                .copied()
                .filter(|&(u, v)| colours[u] != colours[v])
                .collect();
            for mask in 0..1u32 << allowed.len() {
                let edges: Vec<(usize, usize)> = allowed
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let cg = ColoredGraph::new(Graph::from_edges(n, &edges).unwrap(), colours.clone())
                    .unwrap();
                let found = intervalize_exact(&cg, 1_000_000).unwrap().is_some();
                assert_eq!(found, intervalizable_by_enumeration(&cg), "{cg}");
                counts[found as usize] += 1;
            }
        }
    }
    assert!(counts[0] > 0 && counts[1] > 0, "{counts:?}");
}
