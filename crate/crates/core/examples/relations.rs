//! Subgraph, minor and related containment checks on small graphs.

use craftbench::{embed_bf, verify_embedding, Graph, Relation};

fn main() -> craftbench::Result<()> {
    let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?;
    let hosts = [
        ("C4", Graph::cycle(4)),
        ("P6", Graph::path(6)),
        (
            "spider",
            Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])?,
        ),
        (
            "H",
            Graph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])?,
        ),
    ];
    let relations = [
        Relation::Subgraph,
        Relation::Induced,
        Relation::Minor,
        Relation::InducedMinor,
        Relation::TopMinor,
        Relation::ShallowMinor(1),
    ];
    println!("claw inside ...");
    for (name, g) in &hosts {
        let row: Vec<String> = relations
            .iter()
            .map(|&rel| {
                let w = embed_bf(&claw, g, rel, 1_000_000).expect("small search");
                if let Some(w) = &w {
                    assert!(verify_embedding(&claw, g, rel, w));
                }
                format!("{rel:?}={}", w.is_some())
            })
            .collect();
        println!("{name:>7}: {}", row.join(" "));
    }
    println!(
        "K3 minor of C4: {}",
        embed_bf(&Graph::complete(3), &Graph::cycle(4), Relation::Minor, 1000)?.is_some()
    );
    Ok(())
}
