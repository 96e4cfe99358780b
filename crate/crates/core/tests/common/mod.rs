// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

pub mod oracles;
pub mod properties;

/// Every property and oracle check, by name.
pub const SUITE: &[(&str, fn())] = &[
    (
        "complement_is_an_involution",
        properties::complement_is_an_involution,
    ),
    (
        "binarize_then_ternarize_is_identity",
        properties::binarize_then_ternarize_is_identity,
    ),
    (
        "ternarize_then_binarize_contains_word",
        properties::ternarize_then_binarize_contains_word,
    ),
    (
        "asymmetric_distance_laws",
        properties::asymmetric_distance_laws,
    ),
    (
        "pair_edge_rule_is_complement_invariant",
        properties::pair_edge_rule_is_complement_invariant,
    ),
    (
        "compatibility_is_symmetric",
        properties::compatibility_is_symmetric,
    ),
    ("code_file_roundtrip", properties::code_file_roundtrip),
    (
        "kraus_completeness_and_ladder_identity",
        properties::kraus_completeness_and_ladder_identity,
    ),
    (
        "binary_pair_edges_are_sound",
        properties::binary_pair_edges_are_sound,
    ),
    (
        "seeded_search_is_monotone",
        properties::seeded_search_is_monotone,
    ),
    (
        "sec_matches_decoder_on_every_small_code",
        oracles::sec_matches_decoder_on_every_small_code,
    ),
    (
        "sec_matches_decoder_on_sampled_codes",
        oracles::sec_matches_decoder_on_sampled_codes,
    ),
    (
        "one_code_matches_decay_simulation",
        oracles::one_code_matches_decay_simulation,
    ),
    (
        "one_code_matches_decay_simulation_on_construction_subsets",
        oracles::one_code_matches_decay_simulation_on_construction_subsets,
    ),
    (
        "distance_two_pairs_over_t2",
        oracles::distance_two_pairs_over_t2,
    ),
    (
        "sec_codes_binarize_to_one_codes",
        oracles::sec_codes_binarize_to_one_codes,
    ),
    (
        "exact_search_matches_subset_enumeration",
        oracles::exact_search_matches_subset_enumeration,
    ),
    (
        "clique_solver_matches_subset_enumeration",
        oracles::clique_solver_matches_subset_enumeration,
    ),
    (
        "enumerator_matches_dense_oracle_exhaustively",
        oracles::enumerator_matches_dense_oracle_exhaustively,
    ),
    (
        "kl_matches_dense_oracle_exhaustively",
        oracles::kl_matches_dense_oracle_exhaustively,
    ),
    (
        "quantum_checks_match_dense_oracles",
        oracles::quantum_checks_match_dense_oracles,
    ),
    (
        "cr_codes_partition_the_cube",
        oracles::cr_codes_partition_the_cube,
    ),
    ("vt_codes_are_one_codes", oracles::vt_codes_are_one_codes),
    (
        "shortened_vt_complement_identity",
        oracles::shortened_vt_complement_identity,
    ),
    (
        "constructed_codes_pass_kl_with_zero_phase_diagonal",
        oracles::constructed_codes_pass_kl_with_zero_phase_diagonal,
    ),
];
