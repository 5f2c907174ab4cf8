//! Seeded instance generators. Set CRAFTBENCH_SEED to change the draw.

use craftbench::gen::{
    random_cnf, random_ovc_yes, random_palindromic, random_x3c, seeded_rng, SEED_VAR,
};
use craftbench::{solve, Method, Mode};

fn main() {
    println!("{SEED_VAR} = {:?}", std::env::var(SEED_VAR).ok());
    let mut rng = seeded_rng(42);
    let sc = random_palindromic(&mut rng, Mode::Domination, 12, 4, true);
    print!("{sc}");
    println!("solvable: {}", solve(&sc, Method::Split).is_some());
    print!("{}", random_ovc_yes(&mut rng, 8, 3));
    print!("{}", random_cnf(&mut rng, 4, 3));
    print!("{}", random_x3c(&mut rng, 6, 4));
}
