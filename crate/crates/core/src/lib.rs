//! Exact basis matrices for the finite-dimensional `(p,q)` irreducible
//! representations of SU(3).
//!
//! The eight matrices `{T±, T³, U±, U³, V±}` are built from closed-form
//! expressions in exact radical arithmetic and can be checked against the
//! su(3) commutation relations, the quadratic Casimir, and an independent
//! solver that recovers the block constants from the algebra alone.

pub mod cli;
pub mod error;
pub mod generators;
pub mod matrix;
pub mod oracle;
pub mod scalar;
pub mod structure;
pub mod su2;
pub mod unknowns;
pub mod verify;
pub mod wire;

pub use error::{Result, Su3Error};
pub use generators::{
    admissible_blocks, build_generator_set, build_t_matrices, build_u3, build_uplus_vplus, to_gell_mann,
    AdmissibleBlock, BlockRelation, GellMannSet, GeneratorName, GeneratorSet,
};
pub use matrix::{ComplexMatrix, Matrix};
pub use oracle::oracle_solve;
pub use scalar::{sqrt_of_rational, RadicalSum, RadicalTerm, Rational};
pub use structure::{
    dimension, n0, state_labels, tspin_list, u3_lead_list, weight_multiplicities, BlockLayout, IrrepLabel, StateLabel,
    TSpinList,
};
pub use unknowns::{region_of, upc2_map, Region, Upc2Map};
pub use verify::{check_casimir, check_commutators, check_structure, sweep, verify_irrep, CheckReport};
