//! Exact computational algebra for Kummer elements and Kummer subspaces of
//! symbol algebras of prime degree.
//!
//! Fix an odd prime `p`, a field element `ρ` that is a primitive `p`-th root
//! of unity, and two central parameters `α`, `β`. The algebra under study is
//! generated by `x` and `y` subject to
//!
//! ```text
//! x^p = α,    y^p = β,    y·x = ρ·x·y.
//! ```
//!
//! An element `v` is *Kummer* when `v^p` is central but no lower power is;
//! a subspace is *Kummer* when all of its nonzero elements are. This crate
//! provides exact (big-integer, division-free) criteria for these
//! properties, together with the combinatorics that make them decidable:
//!
//! * [`cyclotomic`] — arithmetic in the ring of integers extended by `ρ`,
//!   with the residue map onto `Z/p`.
//! * [`symbol_algebra`] — the algebra itself over the central rational
//!   function field, symmetrized products, traces, and the trace/power
//!   criteria for Kummer elements and spaces.
//! * [`zerosum`] — minimal zero-sum combinations in `(Z/p)²` and the residue
//!   shortcuts that decide whether small monomial spaces are Kummer.
//! * [`classify`] — standard monomial spaces, certificates, exhaustive
//!   enumeration of maximal monomial Kummer spaces, and triple
//!   classification.
//! * [`generic`] — the graded plane with `Y·X = ρ·X·Y` and no exponent
//!   reduction, basis normalization, and degeneration of symbolic spaces to
//!   monomial ones.
//!
//! All arithmetic is exact: coefficients are unbounded integers and every
//! verdict is decided by finite search, never by floating point or sampling.

pub mod classify;
pub mod cyclotomic;
pub mod generic;
pub mod symbol_algebra;
pub mod zerosum;

pub use classify::{
    classify_triple, comm, enumerate_maximal, is_maximal, standard_space, standardness_certificate,
    ClassifyError, EnumerationMode, MonomialSpace, SpaceError, StandardCertificate,
    TripleCondition, TripleVerdict,
};
pub use cyclotomic::{CycInt, PrimeCtx, PrimeCtxError, MAX_PRIME};
pub use generic::{
    degenerate, degeneration_report, embed, leading_class, normalize_basis, reduce_to_algebra,
    DegenerationReport, GenericError, GradedDegree, TElement,
};
pub use symbol_algebra::{
    is_kummer_element, is_kummer_space_power, is_kummer_space_trace, monomial_spanning_set,
    monomial_sym_coeff, rank_over_k, sym_product, AlgElement, CenterPoly, Monomial, SpaceVerdict,
    SymTuple, SymbolError,
};
pub use zerosum::{
    admissible_triple, dim3_residue_witness, dim4_witness, index_witness, is_kummer_monomial,
    min_zero_sum, MonomialVerdict, Vec2p, ZeroSumError, ZeroSumWitness,
};
