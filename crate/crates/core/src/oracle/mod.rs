//! Brute-force ground truth over explicitly enumerated GL_n(F_p): induction
//! products, induction from the Coxeter torus, induction to G x G,
//! centralizers and Brauer pairings with the graded module S(V) or
//! Lambda(V) (x) S(V).

mod classfn;
mod enumerate;
mod matrix;

pub use classfn::{
    brauer_pairing_series, centralizer_order, comultiplication_oracle, graded_brauer_characters,
    induce_from_torus, induction_product, semisimple_class_of, ClassFn, InductionTable, TorusInductionTable,
};
pub use enumerate::{enumerate_gl, group_order, GlEnumerator, DEFAULT_BUDGET};
pub use matrix::GLMatrix;
