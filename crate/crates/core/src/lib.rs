// SPDX-License-Identifier: Apache-2.0

//! Classical and quantum codes for the amplitude damping channel.
//!
//! Binary 1-codes (codes correcting one asymmetric 1 -> 0 error) that are
//! closed under complement give quantum codes against single amplitude
//! damping errors. This crate builds such codes algebraically, searches for
//! them through a ternary reduction, and checks the resulting quantum codes.

pub mod channels;
pub mod code;
pub mod codefile;
pub mod error;
pub mod groups;
pub mod quantum;
pub mod search;
pub mod words;

pub use channels::{compatible, error_ball, verify_sec, ChannelSpec, SecWitness};
pub use code::{ClassicalCode, CodeMeta, Verdict};
pub use codefile::{quantum_dimension, CodeFile};
pub use error::{Error, Result};
pub use groups::{
    cr_code, cr_code_with_elements, cr_words, negation_pairing, self_complementary_construction,
    shortened_vt, vt_code, AbelianGroup, GroupElement,
};
pub use quantum::{
    assemble, css_bounds, kl_verify, kraus, weight_enumerator, KLReport, QuantumADCode,
    WeightEnumerator,
};
pub use words::{asymmetric_distance, binarize, ternarize, Alphabet, Pairing, SymbolKind, Word};
