pub mod bitstring;
pub mod crafting;
pub mod error;
pub mod gen;
pub mod graph;
pub mod oracles;
pub mod pipeline;
pub mod reductions;

pub use bitstring::{check_pair, id_encode, BitString, Mode, Transform};
pub use crafting::{
    locate, solve, solve_with_stats, verify_witness, CraftingInstance, Method, SolveStats, Witness,
};
pub use error::{Error, ParseCode, ParseError, Result};
pub use graph::{
    is_caterpillar, subdivide, validate_decomposition, validate_interval_model, ColoredGraph,
    Decomposition, DecompositionError, Event, Graph, IntervalError, IntervalModel,
};
pub use oracles::{
    embed_bf, intervalize_exact, mspd_exact, sat_bf, verify_embedding, x3c_bf, EmbeddingWitness,
    Relation, Shape,
};
