//! The three exact solvers on one instance, with their state counts.

use craftbench::{solve_with_stats, verify_witness, CraftingInstance, Method};

fn main() -> craftbench::Result<()> {
    let inst = CraftingInstance::parse("SC\n101110101\n1010\n101\n00\n")?;
    print!("{inst}");
    for method in Method::ALL {
        let (found, stats) = solve_with_stats(&inst, method);
        match found {
            Some(w) => {
                let crafted = inst.crafted(&w)?;
                println!(
                    "{method:?}: order {w}, crafted {crafted}, valid {}, states {}",
                    verify_witness(&inst, &w)?,
                    stats.states
                );
            }
            None => println!("{method:?}: no order, states {}", stats.states),
        }
    }
    Ok(())
}
