//! Executable vanishing, agreement and distinctness statements about
//! characters of `S_n` and `A_n`.

mod alternating;
mod fixture;
mod quadratic;
mod search;

pub use alternating::{split_values, AnCharLabel, AnCharacterTable};
pub use fixture::{
    verify_decomposition_fixture, verify_with_table, DecompositionFixture, FixtureFailure, FixtureReport,
    FIXTURE_FORMAT,
};
pub use quadratic::{squarefree_decomposition, QuadraticSum, QuadraticValue};
pub use search::{
    agreement_kernel, even_cycle_classes, min_distinguishing_set, min_vanishing_set, odd_regular_classes,
    regular_classes, restriction_agreement, transposition_pair_counterexamples, vanishing_counterexamples,
    SearchOutcome, SearchPredicate,
};
