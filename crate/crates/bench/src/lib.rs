//! Shared fixtures for the criterion benches.

use malcev_core::algebra::catalog;
use malcev_core::operators::multiplication_triple;
use malcev_core::TranslationTriple;

/// The octonion multiplication model with parameters on the imaginary units.
pub fn octonion_model() -> TranslationTriple {
    multiplication_triple(&catalog::octonions(), &[1, 2, 3, 4, 5, 6, 7]).expect("octonion model")
}
