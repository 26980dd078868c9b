//! Exact-arithmetic kernel for finite-dimensional nonassociative
//! structures defined by structure constants: transposed Poisson algebras,
//! anti-pre-Lie (Poisson) algebras, their representations, matched pairs,
//! Manin triples with respect to commutative 2-cocycles, (coboundary)
//! bialgebras, the associated Yang-Baxter equations, O-operators and
//! pre-structures.
//!
//! All arithmetic is over arbitrary-precision rationals; every checker is
//! exact and every failure carries a reproducible witness. Values are
//! immutable after construction and all operations are pure functions.

pub mod algebra;
pub mod catalog;
pub mod coalg;
pub mod error;
pub mod forms;
pub mod linmap;
pub mod matched;
pub mod oper;
pub mod rep;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod ybe;

pub use algebra::{
    check_class, check_derivation, class_holds, commutator, pre_apl_sum, zinbiel_symmetrization,
    AlgebraPresentation, ClassId, ProductName,
};
pub use coalg::{
    check_bialgebra, check_one_cocycle, coproduct_to_product, product_to_coproduct, BialgebraKind,
    Coproduct,
};
pub use error::{KernelError, Result};
pub use forms::{
    check_form, check_manin_triple, check_tpa_both_invariant_triviality, induce_anti_pre_lie,
    standard_form, BilinearForm, FormPredicate, ManinKind,
};
pub use linmap::{matrix_rank_and_inverse, solve, LinearMap};
pub use matched::{
    build_double, build_double_unchecked, check_matched_pair, standard_pair_from_dual,
    MatchedPairData,
};
pub use oper::{
    apl_from_derivation, aybe_derivation_solution_check, canonical_r, canonical_r_unchecked,
    check_o_operator, induce_pre_structure, pre_apl_from_zinbiel, pre_aplp_from_zinbiel, witt_lie,
    CanonicalSource, OOperatorProblem,
};
pub use rep::{
    adjoint, check_representation, check_tpa_dual_condition, dualize, semidirect_product, tpa_dual,
    FamilyName, RepKind, Representation,
};
pub use report::{all_hold, IdentityReport, Witness};
pub use scalar::Scalar;
pub use tensor::{compose_perms, permute_tensor, tensor_contract, Tensor};
pub use ybe::{
    check_coboundary_conditions, check_o_operator_forms, coboundary_comul, coboundary_coproducts,
    coboundary_delta, compute_a, compute_t, CoboundaryKind, TwoTensor,
};
