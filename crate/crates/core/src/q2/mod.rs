//! The queer Lie superalgebra `q(2)` and its blocks of finite-dimensional
//! modules.

mod blocks;
mod superalg;
mod weights;

pub use blocks::{composition_factors, expected_layers, synthesize_block, verify_block, BlockCheck, BlockReport};
pub use superalg::{
    adjoint_module, build_q2, ext1_super, q2_matrices, supercommutator, SuperLieAlgebra, SuperModule,
};
pub use weights::{
    classify_weight, expected_projective_length, half, induced_character, odd_part_weights, tensor_decompose,
    wedge_g1_character, CharacterVector, GlCharacter, InducedData, Weight, WeightClass,
};

/// Blocks are indexed by the same four families as the presentations.
pub type BlockId = crate::quiver::Family;
