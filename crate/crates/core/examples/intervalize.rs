//! Orthogonal Vector Crafting as intervalizing a 5-coloured tree, and the
//! exact intervalization search on small coloured graphs.

use craftbench::reductions::{
    build_icg5_witness, decode_perm_from_interval_model, ovc_to_icg5, Side, Strictness,
};
use craftbench::{
    intervalize_exact, solve, validate_interval_model, ColoredGraph, CraftingInstance, Graph,
    Method,
};

fn main() -> craftbench::Result<()> {
    let inst = CraftingInstance::parse("OVC\n00100\n010\n00\n")?;
    let (cg, map) = ovc_to_icg5(&inst, Strictness::Strict)?;
    println!(
        "{} vertices, tree: {}, colours {:?}, barrier sizes {} and {}",
        cg.graph().n(),
        cg.graph().is_tree(),
        cg.palette(),
        map.barrier_vertices(Side::Left).len(),
        map.barrier_vertices(Side::Right).len()
    );
    let w = solve(&inst, Method::HeldKarp).expect("a yes-instance");
    let model = build_icg5_witness(&map, &inst, &w)?;
    println!("model valid: {:?}", validate_interval_model(&cg, &model));
    println!(
        "decoded back: {}",
        decode_perm_from_interval_model(&map, &model)?
    );

    let c4 = ColoredGraph::new(Graph::cycle(4), vec![1, 2, 1, 2])?;
    println!(
        "alternating C4: {:?}",
        intervalize_exact(&c4, 10_000)?.map(|m| m.to_string())
    );
    let c4 = ColoredGraph::new(Graph::cycle(4), vec![1, 2, 3, 2])?;
    if let Some(m) = intervalize_exact(&c4, 10_000)? {
        print!("C4 coloured 1,2,3,2:\n{m}");
    }
    Ok(())
}
