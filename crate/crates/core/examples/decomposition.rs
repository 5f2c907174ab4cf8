//! Orthogonal Vector Crafting as a minimum-size path decomposition:
//! build the graph, turn a crafting order into bags and validate them.

use craftbench::reductions::{
    build_mspd_witness, decode_perm_from_decomposition, ovc_to_mspd, Strictness,
};
use craftbench::{mspd_exact, solve, validate_decomposition, CraftingInstance, Method, Shape};

fn main() -> craftbench::Result<()> {
    let inst = CraftingInstance::parse("OVC\n1001000\n010\n0\n101\n")?;
    let (g, bags, map) = ovc_to_mspd(&inst, 16, Strictness::Strict)?;
    println!(
        "{} vertices, {} edges, question: width <= 16 with <= {bags} bags",
        g.n(),
        g.m()
    );
    let w = solve(&inst, Method::HeldKarp).expect("a yes-instance");
    let d = build_mspd_witness(&map, &inst, &w)?;
    let sizes: Vec<usize> = d.bags().iter().map(Vec::len).collect();
    println!("order {w} gives bag sizes {sizes:?}");
    println!("valid: {:?}", validate_decomposition(&g, &d, 16, bags));
    println!(
        "decoded back: {}",
        decode_perm_from_decomposition(&map, &d)?
    );

    for s in ["0", "1"] {
        let tiny = CraftingInstance::parse(&format!("OVC\n{s}\n{s}\n"))?;
        let (g, bags, _) = ovc_to_mspd(&tiny, 16, Strictness::Strict)?;
        let exact = mspd_exact(&g, 16, bags, Shape::Path, 1_000_000)?;
        println!(
            "s = t = {s}: {} vertices, one bag suffices: {}",
            g.n(),
            exact.is_some()
        );
    }
    Ok(())
}
