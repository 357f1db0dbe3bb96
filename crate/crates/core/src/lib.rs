//! Patterns of mirrors on reflexible regular maps: coset enumeration, link indices
//! from mirror-automorphism words, lattice computations on tori, named families,
//! hyperbolic lengths, and an independent flag-complex tracer.

pub mod flag_tracer;
pub mod hyperbolic_metrics;
pub mod lattice_tori;
pub mod patterns;
pub mod presentations;
pub mod suites;
pub mod surface_families;
pub mod tables;

pub use flag_tracer::{
    build_flag_complex, mirror_census, trace_mirror, verify_against_patterns, FlagComplex,
    TraceError, Verification,
};
pub use hyperbolic_metrics::{mirror_length, triangle_sides, MetricError, TriangleSides};
pub use lattice_tori::{
    toroidal_patterns, EisensteinInteger, GaussianInteger, LatticeError, ToroidalMapId,
    TorusFamily, TorusVariant,
};
pub use patterns::{
    classify_type, full_pattern_report, link_index, mirror_automorphism_word, Geometry, Link,
    LinkIndex, MapType, Parity, PatternError, PatternReport, ReflectionClass,
};
pub use presentations::{
    enumerate_cosets, enumerate_cosets_with, group_order, parse_presentation, CosetTable,
    EnumerationError, EnumerationOptions, ParseError, Presentation, PresentationError, Strategy,
    Word, DEFAULT_BUDGET,
};
pub use surface_families::{FamilyError, FamilyKind, FamilyMap, FamilyRequest};
pub use tables::{RowStatus, RunContext, TableId, TableRow};

/// Any failure of the library, for callers that do not care which module raised it.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    UnknownTable(#[from] tables::UnknownTable),
}

impl Error {
    /// Whether the coset budget ran out, as opposed to bad input or a failed check.
    pub fn is_budget(&self) -> bool {
        fn pattern(e: &PatternError) -> bool {
            matches!(
                e,
                PatternError::Enumeration(EnumerationError::BudgetExceeded { .. })
            )
        }
        match self {
            Error::Enumeration(EnumerationError::BudgetExceeded { .. }) => true,
            Error::Pattern(e) => pattern(e),
            Error::Family(e) => e.is_budget(),
            Error::Trace(TraceError::Enumeration(EnumerationError::BudgetExceeded { .. })) => true,
            Error::Trace(TraceError::Pattern(e)) => pattern(e),
            _ => false,
        }
    }
}
