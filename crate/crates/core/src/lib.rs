//! Canonical trace ideals and nearly Gorenstein tests for numerical
//! semigroups, Hibi rings of posets, squarefree Veronese algebras and
//! Segre products of polynomial rings.
//!
//! ```
//! use trace_toolkit::{canonical_trace, NumericalSemigroup};
//!
//! let h = NumericalSemigroup::from_generators(&[5, 6, 7]).unwrap();
//! let t = canonical_trace(&h);
//! assert_eq!(t.residue, 1);
//! assert!(t.nearly_gorenstein);
//! ```

mod bits;
pub mod families;
pub mod hibi;
pub mod ideal;
pub mod monomial;
pub mod semigroup;
pub mod sweep;
pub mod three_gen;

pub use families::{arithmetic_family, max_embdim_family, minimal_multiplicity_suite, FamilyError};
pub use hibi::{count_poset_ideals, hibi_classify, parse_poset, poset_structure, FinitePoset, PosetError};
pub use ideal::{canonical_trace, ng_report, CanonicalTrace, IdealError, NgReport, RelativeIdeal};
pub use monomial::{
    segre_trace, veronese_trace_witness, ExponentVector, MonomialError, SqVeronese,
};
pub use semigroup::{NumericalSemigroup, SemigroupError, DEFAULT_MAX_FROBENIUS};
pub use sweep::{SmallSemigroup, SweepError};
pub use three_gen::{shift_analysis, StructureMatrix, ThreeGenError};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/semigroups.md")]
    mod semigroups {}
    #[doc = include_str!("../../../book/src/trace.md")]
    mod trace {}
    #[doc = include_str!("../../../book/src/three-generated.md")]
    mod three_generated {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/enumeration.md")]
    mod enumeration {}
    #[doc = include_str!("../../../book/src/monomial.md")]
    mod monomial {}
    #[doc = include_str!("../../../book/src/posets.md")]
    mod posets {}
}
