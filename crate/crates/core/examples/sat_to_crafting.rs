//! A 3-CNF formula becomes a String Crafting instance; a crafting order
//! decodes back to a satisfying assignment.

use craftbench::pipeline::parse_dimacs;
use craftbench::reductions::{decode_assignment, sat_to_sc};
use craftbench::{sat_bf, solve, Method};

fn main() -> craftbench::Result<()> {
    let cnf = parse_dimacs("p cnf 3 2\n1 2 3 0\n-1 -2 3 0\n")?;
    let (inst, map) = sat_to_sc(&cnf);
    println!("q = {}, r = {}", map.q, map.r);
    println!("|s| = {}, {} strings", inst.s().len(), inst.n());
    println!("brute force: {:?}", sat_bf(&cnf));
    match solve(&inst, Method::Split) {
        Some(w) => {
            let a = decode_assignment(&map, &inst, &w)?;
            println!("decoded {a:?}, satisfies: {}", cnf.is_satisfied_by(&a));
        }
        None => println!("unsatisfiable"),
    }
    Ok(())
}
