// SPDX-License-Identifier: Apache-2.0

//! Randomized property checks, shared by the property tests and the
//! acceptance runner.

use adcodes::quantum::kraus;
use adcodes::search::{
    binary_selfcomp_graph, build_conflict_graph, randomized_search, SearchBudget,
};
use adcodes::words::asymmetric_distance_bits;
use adcodes::{
    asymmetric_distance, binarize, compatible, self_complementary_construction, ternarize,
    Alphabet, ChannelSpec, ClassicalCode, CodeFile, Pairing, Word,
};
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn alphabet_and_symbols() -> impl Strategy<Value = (Alphabet, Vec<u8>)> {
    (2usize..=16, 0u8..3).prop_flat_map(|(len, kind)| {
        let alphabet = match kind {
            0 => Alphabet::Binary,
            1 => Alphabet::Ternary,
            _ => Alphabet::GeneralizedTernary { bit_origin: 0 },
        };
        let symbols: Vec<BoxedStrategy<u8>> = (0..len)
            .map(|i| {
                let radix = match alphabet {
                    Alphabet::Binary => 2u8,
                    Alphabet::Ternary => 3,
                    Alphabet::GeneralizedTernary { .. } if i == 0 => 2,
                    Alphabet::GeneralizedTernary { .. } => 3,
                };
                (0..radix).boxed()
            })
            .collect();
        (Just(alphabet), symbols)
    })
}

/// Random pairing of a random binary length.
fn pairing() -> impl Strategy<Value = Pairing> {
    (2usize..=14)
        .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|order| {
            let n = order.len();
            let pairs = order.chunks_exact(2).map(|c| (c[0], c[1])).collect();
            let unpaired = (n % 2 == 1).then(|| order[n - 1]);
            Pairing::new(n, pairs, unpaired).unwrap()
        })
}

/// Random word over a pairing's ternary alphabet.
fn ternary_word(p: &Pairing) -> impl Strategy<Value = Word> {
    let alphabet = p.ternary_alphabet();
    let len = p.ternary_len();
    let bit_first = p.unpaired().is_some();
    proptest::collection::vec(0u8..3, len).prop_map(move |mut symbols| {
        if bit_first {
            symbols[0] %= 2;
        }
        Word::new(alphabet, &symbols).unwrap()
    })
}

/// Channel of trit length 1..=5, with or without a leading bit, plus two
/// conforming words.
fn channel_pair() -> impl Strategy<Value = (ChannelSpec, Word, Word)> {
    (1usize..=5, any::<bool>()).prop_flat_map(|(m, with_bit)| {
        let (channel, alphabet) = if with_bit {
            (
                ChannelSpec::zt(m).unwrap(),
                Alphabet::GeneralizedTernary { bit_origin: 0 },
            )
        } else {
            (ChannelSpec::t(m).unwrap(), Alphabet::Ternary)
        };
        let len = m + usize::from(with_bit);
        let word = move || {
            proptest::collection::vec(0u8..3, len).prop_map(move |mut s| {
                if with_bit {
                    s[0] %= 2;
                }
                Word::new(alphabet, &s).unwrap()
            })
        };
        (Just(channel), word(), word())
    })
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn complement_is_an_involution() {
    runner(256)
        .run(&alphabet_and_symbols(), |(alphabet, symbols)| {
            let w = Word::new(alphabet, &symbols).unwrap();
            prop_assert_eq!(w.complement().complement(), w);
            prop_assert_eq!(w.complement().len(), w.len());
            prop_assert_eq!(w.complement().alphabet(), w.alphabet());
            Ok(())
        })
        .unwrap();
}

pub fn binarize_then_ternarize_is_identity() {
    let strategy = pairing().prop_flat_map(|p| {
        let w = ternary_word(&p);
        (Just(p), w)
    });
    runner(256)
        .run(&strategy, |(p, w)| {
            let expansion = binarize(&w, &p).unwrap();
            prop_assert_eq!(expansion.len(), 1usize << w.zero_trits());
            for b in &expansion {
                prop_assert_eq!(b.len(), p.len());
                prop_assert_eq!(ternarize(b, &p).unwrap(), w);
            }
            let mut sorted = expansion.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted.len(), expansion.len());
            Ok(())
        })
        .unwrap();
}

pub fn ternarize_then_binarize_contains_word() {
    let strategy = pairing().prop_flat_map(|p| {
        let n = p.len();
        (Just(p), 0u64..(1u64 << n))
    });
    runner(256)
        .run(&strategy, |(p, bits)| {
            let b = Word::from_bits(bits, p.len()).unwrap();
            let t = ternarize(&b, &p).unwrap();
            prop_assert!(binarize(&t, &p).unwrap().contains(&b));
            // The complement ternarizes to the complement.
            prop_assert_eq!(ternarize(&b.complement(), &p).unwrap(), t.complement());
            Ok(())
        })
        .unwrap();
}

pub fn asymmetric_distance_laws() {
    runner(512)
        .run(&(1usize..=20, any::<u64>(), any::<u64>()), |(n, x, y)| {
            let mask = (1u64 << n) - 1;
            let (x, y) = (x & mask, y & mask);
            let (wx, wy) = (
                Word::from_bits(x, n).unwrap(),
                Word::from_bits(y, n).unwrap(),
            );
            let d = asymmetric_distance(&wx, &wy).unwrap();
            prop_assert_eq!(d, asymmetric_distance(&wy, &wx).unwrap());
            prop_assert_eq!(
                d,
                asymmetric_distance(&wx.complement(), &wy.complement()).unwrap()
            );
            prop_assert_eq!(d == 0, x == y);
            // Oracle: max of the two one-way counts.
            let n10 = (x & !y).count_ones();
            let n01 = (!x & y & mask).count_ones();
            prop_assert_eq!(d, n10.max(n01));
            Ok(())
        })
        .unwrap();
}

pub fn pair_edge_rule_is_complement_invariant() {
    runner(512)
        .run(&(3usize..=14, any::<u64>(), any::<u64>()), |(n, u, v)| {
            let mask = (1u64 << n) - 1;
            let (u, v) = (u & mask, v & mask);
            let d = asymmetric_distance_bits;
            prop_assert_eq!(d(u ^ mask, v ^ mask), d(u, v));
            prop_assert_eq!(d(u ^ mask, v), d(u, v ^ mask));
            Ok(())
        })
        .unwrap();
}

pub fn compatibility_is_symmetric() {
    runner(512)
        .run(&channel_pair(), |(channel, a, b)| {
            let ab = compatible(&a, &b, &channel).unwrap();
            prop_assert_eq!(ab, compatible(&b, &a, &channel).unwrap());
            prop_assert_eq!(
                ab,
                compatible(&a.complement(), &b.complement(), &channel).unwrap()
            );
            prop_assert!(!compatible(&a, &a, &channel).unwrap());
            Ok(())
        })
        .unwrap();
}

pub fn code_file_roundtrip() {
    let strategy = (2usize..=10, proptest::collection::vec(any::<u64>(), 1..40));
    runner(128)
        .run(&strategy, |(n, raw)| {
            let mask = (1u64 << n) - 1;
            let bits: Vec<u64> = raw.iter().flat_map(|&b| [b & mask, !b & mask]).collect();
            let code = ClassicalCode::from_bits(n, bits)
                .unwrap()
                .with_construction("random");
            let file = CodeFile::new(code);
            let text = file.to_text();
            let back = CodeFile::parse(&text).unwrap();
            prop_assert_eq!(back.code.words(), file.code.words());
            prop_assert_eq!(back.declared_k, Some(file.k()));
            prop_assert_eq!(back.to_text(), text);
            Ok(())
        })
        .unwrap();
}

pub fn kraus_completeness_and_ladder_identity() {
    runner(128)
        .run(&(0i64..=1000), |num| {
            let ops = kraus(Ratio::new(num, 1000)).unwrap();
            let (one, zero) = (Ratio::from_integer(1), Ratio::from_integer(0));
            prop_assert_eq!(ops.completeness().unwrap(), [[one, zero], [zero, one]]);
            prop_assert_eq!(ops.number_like(), [[0, 0], [0, 4]]);
            Ok(())
        })
        .unwrap();
}

/// Every edge of the binary pair graph leaves both pairs jointly a 1-code.
pub fn binary_pair_edges_are_sound() {
    let strategy = (3usize..=9, any::<u64>(), any::<u64>());
    runner(64)
        .run(&strategy, |(n, a, b)| {
            let g = binary_selfcomp_graph(n).unwrap();
            let mask = (1u64 << n) - 1;
            let (u, v) = ((a as usize) % g.len(), (b as usize) % g.len());
            prop_assume!(u != v);
            let words = [u as u64, u as u64 ^ mask, v as u64, v as u64 ^ mask];
            let all_far = words.iter().enumerate().all(|(i, &x)| {
                words[i + 1..]
                    .iter()
                    .all(|&y| asymmetric_distance_bits(x, y) >= 2)
            });
            prop_assert_eq!(g.has_edge(u, v), all_far);
            Ok(())
        })
        .unwrap();
}

/// Seeding tabu search with the construction code never loses weight.
pub fn seeded_search_is_monotone() {
    runner(24)
        .run(&(6usize..=12, 0u64..1000), |(n, seed)| {
            let channel = if n % 2 == 0 {
                ChannelSpec::t(n / 2)
            } else {
                ChannelSpec::zt(n / 2)
            }
            .unwrap();
            let graph = build_conflict_graph(&channel, &Pairing::canonical(n).unwrap()).unwrap();
            let code = self_complementary_construction(n).unwrap();
            let start = graph.seed_from_code(&code).unwrap();
            let budget = SearchBudget::nodes(2000).unwrap().with_seed(seed);
            let result = randomized_search(&graph, &budget, Some(&start), None).unwrap();
            prop_assert!(result.code.size() >= code.size());
            prop_assert!(result.code.is_one_code());
            prop_assert!(result.code.is_self_complementary());
            Ok(())
        })
        .unwrap();
}
