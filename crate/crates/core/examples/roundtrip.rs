//! Full round trips through the pipeline, as the CLI runs them.

use craftbench::pipeline::{roundtrip, Options, Source, Target};
use craftbench::reductions::Strictness;

fn main() -> craftbench::Result<()> {
    let cnf = Source::parse("p cnf 3 1\n1 2 3 0\n")?;
    for target in [Target::Sc, Target::Ovc, Target::Subgraph] {
        let report = roundtrip(&cnf, target, &Options::default())?;
        println!(
            "{target}: {} (exit {})",
            report.verdict,
            report.verdict.exit_code()
        );
    }

    let ovc = Source::parse("OVC\n1001000\n010\n0\n101\n")?;
    let report = roundtrip(&ovc, Target::Icg5, &Options::default())?;
    print!("{report}");

    let x3c = Source::parse("3 2\n1 2 3\n1 2 3\n")?;
    let opts = Options {
        strictness: Strictness::Permissive,
        ..Options::default()
    };
    println!("{}", roundtrip(&x3c, Target::Icg, &opts)?.to_json());
    Ok(())
}
