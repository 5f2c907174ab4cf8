//! String Crafting as caterpillar subgraph isomorphism, in all four
//! variants, checked against the exhaustive embedding search.

use craftbench::reductions::{
    build_subgraph_embedding, decode_perm_from_embedding, sc_to_subgraph, Strictness,
    SubgraphVariant,
};
use craftbench::{embed_bf, solve, CraftingInstance, EmbeddingWitness, Method, Relation};

fn main() -> craftbench::Result<()> {
    let inst = CraftingInstance::parse("SC\n1111011\n1\n101\n11\n1\n")?;
    let w = solve(&inst, Method::HeldKarp).expect("a yes-instance");
    println!("order {w}");
    for variant in SubgraphVariant::ALL {
        let (host, pattern, map) = sc_to_subgraph(&inst, variant, Strictness::Strict)?;
        let rel = if variant.is_induced() {
            Relation::Induced
        } else {
            Relation::Subgraph
        };
        let emb = build_subgraph_embedding(&map, &inst, &w)?;
        let back = decode_perm_from_embedding(&map, &emb)?;
        let searched = embed_bf(&pattern, &host, rel, 10_000_000)?;
        let found = searched
            .as_ref()
            .and_then(EmbeddingWitness::as_map)
            .is_some();
        println!(
            "{variant:?}: host {}v/{}e, pattern {}v/{}e, decoded {back}, search finds one: {found}",
            host.n(),
            host.m(),
            pattern.n(),
            pattern.m()
        );
    }
    Ok(())
}
