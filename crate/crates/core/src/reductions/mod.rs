//! Gadget reductions between crafting problems and graph problems, with
//! witness translation in both directions.

mod cnf;
mod icg5;
mod mspd;
mod sat_sc;
mod subgraph;
mod x3c;

pub use cnf::CnfFormula;
pub use icg5::{
    build_icg5_witness, decode_perm_from_interval_model, ovc_to_icg5, BarrierIds, BarrierPart,
    Icg5Map, Icg5Role, MarkHost, MarkPair, Side,
};
pub use mspd::{
    build_mspd_witness, decode_perm_from_decomposition, ovc_to_mspd, MspdMap, MspdRole, BASE_WIDTH,
};
pub use sat_sc::{
    decode_assignment, encode_assignment, sat_to_sc, SatScMap, StringKind, VariableBlock,
};
pub use subgraph::{
    build_subgraph_embedding, decode_perm_from_embedding, sc_to_subgraph, SubgraphMap,
    SubgraphRole, SubgraphVariant, HUB_LEAVES,
};
pub use x3c::{
    build_icg_witness_x3c, decode_cover_from_model, x3c_to_icg, SetComponent, X3cInstance, X3cMap,
    X3cRole,
};

use crate::bitstring::Mode;
use crate::crafting::CraftingInstance;
use crate::error::{Error, Result};

/// Whether a generator enforces the string restrictions its correctness
/// proof needs. `Permissive` exists to draw illustrative instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strictness {
    #[default]
    Strict,
    Permissive,
}

/// Turns a String Crafting instance into the equivalent Orthogonal Vector
/// Crafting instance by complementing the host string.
pub fn complement_to_ovc(inst: &CraftingInstance) -> Result<CraftingInstance> {
    require_mode(inst, Mode::Domination)?;
    inst.with_host(inst.s().complement(), Mode::Orthogonality)
}

fn require_mode(inst: &CraftingInstance, mode: Mode) -> Result<()> {
    if inst.mode() != mode {
        return Err(Error::Precondition(format!(
            "expected a {mode:?} instance, got {:?}",
            inst.mode()
        )));
    }
    Ok(())
}

/// Every `t_i` must be a palindrome, and with `ends_with_one` also start
/// and end with a 1.
fn require_palindromes(
    inst: &CraftingInstance,
    ends_with_one: bool,
    strictness: Strictness,
) -> Result<()> {
    if strictness == Strictness::Permissive {
        return Ok(());
    }
    for (k, t) in inst.ts().iter().enumerate() {
        if !t.is_palindrome() {
            return Err(Error::Precondition(format!(
                "t_{} = {t} is not a palindrome",
                k + 1
            )));
        }
        if ends_with_one && !(t.get(1) == Some(true) && t.get(t.len()) == Some(true)) {
            return Err(Error::Precondition(format!(
                "t_{} = {t} does not start and end with 1",
                k + 1
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crafting::{solve, Method};

    #[test]
    fn complement_bridge() {
        let sc = CraftingInstance::parse("SC\n101110101\n1010\n101\n00\n").unwrap();
        let ovc = complement_to_ovc(&sc).unwrap();
        assert_eq!(ovc.s().to_string(), "010001010");
        assert_eq!(ovc.mode(), Mode::Orthogonality);
        assert!(solve(&sc, Method::HeldKarp).is_some());
        assert!(solve(&ovc, Method::HeldKarp).is_some());
        assert!(complement_to_ovc(&ovc).is_err());
        let back = ovc
            .with_host(ovc.s().complement(), Mode::Domination)
            .unwrap();
        assert_eq!(back, sc);
    }
}
