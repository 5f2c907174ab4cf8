//! Exact Cover by 3-Sets as intervalizing a coloured tree.

use craftbench::reductions::{
    build_icg_witness_x3c, decode_cover_from_model, x3c_to_icg, X3cInstance,
};
use craftbench::{validate_interval_model, x3c_bf};

fn main() -> craftbench::Result<()> {
    let x = X3cInstance::parse("6 4\n1 2 3\n2 3 4\n4 5 6\n1 5 6\n")?;
    let (cg, map) = x3c_to_icg(&x)?;
    println!(
        "{} vertices, {} colours, path of {}",
        cg.graph().n(),
        cg.palette().len(),
        map.p.len()
    );
    let Some(cover) = x3c_bf(&x) else {
        println!("no exact cover");
        return Ok(());
    };
    println!("cover {cover:?}");
    let model = build_icg_witness_x3c(&map, &x, &cover)?;
    println!("model valid: {:?}", validate_interval_model(&cg, &model));
    println!(
        "cover read back: {:?}",
        decode_cover_from_model(&map, &model)
    );
    Ok(())
}
