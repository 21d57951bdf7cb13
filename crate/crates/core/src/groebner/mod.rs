//! Bivariate polynomial ideals: reduced lexicographic Gröbner bases over prime
//! fields and the rationals, and the SLP over the algebraic closure of `F_p`.

pub mod buchberger;
pub mod field;
pub mod generic;
pub mod poly;
pub mod upoly;

pub use buchberger::{buchberger, normal_form, GroebnerBasis2};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use generic::{
    groebner_summary, has_slp_generic, has_slp_generic_with, slp_via_initial, GenericSlpReport,
    GroebnerSummary, PairRank, RankCertificate,
};
pub use poly::BivariatePoly;
