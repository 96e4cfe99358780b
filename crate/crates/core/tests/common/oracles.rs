// SPDX-License-Identifier: Apache-2.0

//! Brute-force oracles checked against the library, shared by the oracle
//! tests and the acceptance runner.

use std::collections::{BTreeSet, HashMap};

use adcodes::quantum::Rational;
use adcodes::search::{
    build_conflict_graph, exact_search, max_weight_clique, max_weight_clique_with, CliqueOptions,
    SearchBudget, WeightedGraph,
};
use adcodes::{
    compatible, cr_code, kl_verify, self_complementary_construction, shortened_vt, verify_sec,
    vt_code, weight_enumerator, AbelianGroup, Alphabet, ChannelSpec, ClassicalCode, Pairing,
    QuantumADCode, SymbolKind, Word,
};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

// ---------------------------------------------------------------------------
// Channel oracles: explicit outcome sets and a lookup-table decoder.

/// Every word the channel can deliver when `word` is sent, itself included.
fn outcomes(word: &[u8], kinds: &[SymbolKind]) -> Vec<Vec<u8>> {
    let mut out = vec![word.to_vec()];
    for (i, (&s, &kind)) in word.iter().zip(kinds).enumerate() {
        let targets: &[u8] = match (kind, s) {
            (SymbolKind::Bit, 1) => &[0],
            (SymbolKind::Bit, _) => &[],
            (SymbolKind::Trit, 0) => &[1, 2],
            (SymbolKind::Trit, _) => &[0],
        };
        for &t in targets {
            let mut w = word.to_vec();
            w[i] = t;
            out.push(w);
        }
    }
    out
}

/// True iff every received word has a unique sender.
fn table_decoder_exists(code: &[Vec<u8>], kinds: &[SymbolKind]) -> bool {
    let mut table: HashMap<Vec<u8>, usize> = HashMap::new();
    for (i, c) in code.iter().enumerate() {
        for r in outcomes(c, kinds) {
            if let Some(&prev) = table.get(&r) {
                if prev != i {
                    return false;
                }
            }
            table.insert(r, i);
        }
    }
    true
}

fn all_words(kinds: &[SymbolKind]) -> Vec<Vec<u8>> {
    let mut words = vec![Vec::new()];
    for kind in kinds {
        let radix = if *kind == SymbolKind::Bit { 2 } else { 3 };
        words = words
            .into_iter()
            .flat_map(|w| {
                (0..radix).map(move |s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect();
    }
    words
}

fn alphabet_for(kinds: &[SymbolKind]) -> Alphabet {
    match (
        kinds[0],
        kinds.iter().filter(|k| **k == SymbolKind::Bit).count(),
    ) {
        (_, 0) => Alphabet::Ternary,
        (SymbolKind::Bit, b) if b == kinds.len() => Alphabet::Binary,
        _ => Alphabet::GeneralizedTernary { bit_origin: 0 },
    }
}

fn to_code(words: &[Vec<u8>], alphabet: Alphabet) -> ClassicalCode {
    ClassicalCode::new(
        alphabet,
        words.first().map_or(1, Vec::len),
        words.iter().map(|w| Word::new(alphabet, w).unwrap()),
    )
    .unwrap()
}

fn channels_up_to_four() -> Vec<ChannelSpec> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(ChannelSpec::z(n).unwrap());
        out.push(ChannelSpec::t(n).unwrap());
        if n >= 2 {
            out.push(ChannelSpec::zt(n - 1).unwrap());
        }
    }
    out
}

pub fn sec_matches_decoder_on_every_small_code() {
    let mut checked = 0usize;
    for channel in channels_up_to_four() {
        let kinds = channel.kinds().to_vec();
        let words = all_words(&kinds);
        if words.len() > 16 {
            continue;
        }
        let alphabet = alphabet_for(&kinds);
        for mask in 1u32..(1 << words.len()) {
            let code: Vec<Vec<u8>> = (0..words.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| words[i].clone())
                .collect();
            let verdict = verify_sec(&to_code(&code, alphabet), &channel).unwrap();
            assert_eq!(
                verdict.is_pass(),
                table_decoder_exists(&code, &kinds),
                "{channel} {code:?}"
            );
            checked += 1;
        }
    }
    assert!(checked > 60_000);
}

fn sampled_code() -> impl Strategy<Value = (ChannelSpec, Vec<Vec<u8>>)> {
    (0usize..channels_up_to_four().len()).prop_flat_map(|c| {
        let channel = channels_up_to_four()[c].clone();
        let words = all_words(channel.kinds());
        let n = words.len();
        (
            Just(channel),
            proptest::sample::subsequence(words, 1..=n.min(12)),
        )
    })
}

pub fn sec_matches_decoder_on_sampled_codes() {
    runner(256)
        .run(&sampled_code(), |(channel, code)| {
            let kinds = channel.kinds().to_vec();
            let verdict = verify_sec(&to_code(&code, alphabet_for(&kinds)), &channel).unwrap();
            prop_assert_eq!(verdict.is_pass(), table_decoder_exists(&code, &kinds));
            Ok(())
        })
        .unwrap();
}

/// Single 1 -> 0 decays on every codeword can be undone iff the code is a 1-code.
pub fn one_code_matches_decay_simulation() {
    let strategy = (2usize..=8, proptest::collection::vec(any::<u64>(), 1..12));
    runner(512)
        .run(&strategy, |(n, raw)| {
            let mask = (1u64 << n) - 1;
            let bits: BTreeSet<u64> = raw.iter().map(|b| b & mask).collect();
            let code = ClassicalCode::from_bits(n, bits.iter().copied()).unwrap();
            let mut sender: HashMap<u64, u64> = HashMap::new();
            let mut decodable = true;
            for &c in &bits {
                let received = std::iter::once(c)
                    .chain((0..n).filter(|i| c >> i & 1 == 1).map(|i| c & !(1 << i)));
                for r in received {
                    if *sender.entry(r).or_insert(c) != c {
                        decodable = false;
                    }
                }
            }
            prop_assert_eq!(code.is_one_code(), decodable);
            Ok(())
        })
        .unwrap();
}

pub fn one_code_matches_decay_simulation_on_construction_subsets() {
    // Subsets of 1-codes exercise the passing side, which random codes rarely hit.
    for n in 4..=8 {
        let code = self_complementary_construction(n).unwrap();
        let bits = code.bits().unwrap();
        for stride in 1..=3 {
            let subset: Vec<u64> = bits.iter().copied().step_by(stride).collect();
            let sub = ClassicalCode::from_bits(n, subset.iter().copied()).unwrap();
            assert!(sub.is_one_code());
            let mut with_neighbor = subset.clone();
            let victim = subset.iter().copied().find(|b| *b != 0).unwrap();
            with_neighbor.push(victim & (victim - 1));
            let bad = ClassicalCode::from_bits(n, with_neighbor).unwrap();
            assert!(!bad.is_one_code());
        }
    }
}

pub fn distance_two_pairs_over_t2() {
    let channel = ChannelSpec::t(2).unwrap();
    let words: Vec<Word> = all_words(channel.kinds())
        .iter()
        .map(|w| Word::ternary(w).unwrap())
        .collect();
    let mut found = BTreeSet::new();
    for a in &words {
        for b in &words {
            if a < b && a.hamming_distance(b) == 2 && compatible(a, b, &channel).unwrap() {
                found.insert((a.to_string(), b.to_string()));
            }
        }
    }
    let listed = [
        ("01", "22"),
        ("10", "22"),
        ("01", "12"),
        ("10", "21"),
        ("02", "11"),
        ("20", "11"),
        ("02", "21"),
        ("20", "12"),
        ("11", "22"),
        ("12", "21"),
    ];
    let expected: BTreeSet<(String, String)> = listed
        .iter()
        .map(|(a, b)| {
            let (a, b) = (a.to_string(), b.to_string());
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    assert_eq!(found, expected);
}

/// Maximal cliques of the compatibility graph, i.e. maximal SEC codes.
fn maximal_sec_codes(words: &[Word], channel: &ChannelSpec) -> Vec<Vec<usize>> {
    let n = words.len();
    let adj: Vec<Vec<bool>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && compatible(&words[i], &words[j], channel).unwrap())
                .collect()
        })
        .collect();
    fn expand(
        adj: &[Vec<bool>],
        r: &mut Vec<usize>,
        p: Vec<usize>,
        x: Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r.clone());
            return;
        }
        let pivot = p.iter().chain(&x).copied().next().unwrap();
        let mut p = p;
        let mut x = x;
        for v in p.clone() {
            if adj[pivot][v] {
                continue;
            }
            r.push(v);
            let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
            let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
            expand(adj, r, np, nx, out);
            r.pop();
            p.retain(|&u| u != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(
        &adj,
        &mut Vec::new(),
        (0..n).collect(),
        Vec::new(),
        &mut out,
    );
    out
}

/// Every SEC code over `T^m` or `Z x T^m` (m <= 3) binarizes to a 1-code.
/// Being a 1-code passes to subsets, so maximal codes cover all of them.
pub fn sec_codes_binarize_to_one_codes() {
    for m in 1..=3 {
        for with_bit in [false, true] {
            let n = 2 * m + usize::from(with_bit);
            let pairing = Pairing::canonical(n).unwrap();
            let alphabet = pairing.ternary_alphabet();
            let channel = if with_bit {
                ChannelSpec::zt(m).unwrap()
            } else {
                ChannelSpec::t(m).unwrap()
            };
            let words: Vec<Word> = all_words(channel.kinds())
                .iter()
                .map(|w| Word::new(alphabet, w).unwrap())
                .collect();
            let codes = maximal_sec_codes(&words, &channel);
            assert!(!codes.is_empty());
            for clique in codes {
                let code =
                    ClassicalCode::new(alphabet, words[0].len(), clique.iter().map(|&i| words[i]))
                        .unwrap();
                assert!(verify_sec(&code, &channel).unwrap().is_pass());
                let binary = code.binarize(&pairing).unwrap();
                let expected: u64 = clique.iter().map(|&i| 1u64 << words[i].zero_trits()).sum();
                assert_eq!(binary.size() as u64, expected);
                assert!(binary.is_one_code(), "{channel}: {:?}", code.words());
            }
        }
    }
}

/// Exact ternary search against all complement-closed SEC codes.
pub fn exact_search_matches_subset_enumeration() {
    for n in 4..=6 {
        let channel = if n % 2 == 0 {
            ChannelSpec::t(n / 2).unwrap()
        } else {
            ChannelSpec::zt(n / 2).unwrap()
        };
        let pairing = Pairing::canonical(n).unwrap();
        let alphabet = pairing.ternary_alphabet();
        let words: Vec<Word> = all_words(channel.kinds())
            .iter()
            .map(|w| Word::new(alphabet, w).unwrap())
            .collect();
        let mut orbits: Vec<Vec<Word>> = Vec::new();
        for w in &words {
            let c = w.complement();
            if *w <= c {
                orbits.push(if c == *w { vec![*w] } else { vec![*w, c] });
            }
        }
        let mut best = 0u64;
        for mask in 0u64..(1 << orbits.len()) {
            let chosen: Vec<Word> = (0..orbits.len())
                .filter(|i| mask >> i & 1 == 1)
                .flat_map(|i| orbits[i].clone())
                .collect();
            if chosen.is_empty() {
                continue;
            }
            let code =
                ClassicalCode::new(alphabet, chosen[0].len(), chosen.iter().copied()).unwrap();
            if verify_sec(&code, &channel).unwrap().is_pass() {
                best = best.max(code.binarize(&pairing).unwrap().size() as u64);
            }
        }
        let graph = build_conflict_graph(&channel, &pairing).unwrap();
        let result = exact_search(&graph, &SearchBudget::unlimited(), &[]).unwrap();
        assert!(result.clique.optimal);
        assert_eq!(result.code.size() as u64, best, "n={n}");
        assert!(verify_sec(&result.ternary, &channel).unwrap().is_pass());
    }
}

// ---------------------------------------------------------------------------
// Clique oracle: dynamic programming over all vertex subsets.

fn brute_force_clique(graph: &WeightedGraph) -> u64 {
    let n = graph.len();
    let adj: Vec<u32> = (0..n)
        .map(|v| {
            (0..n)
                .filter(|&u| graph.has_edge(v, u))
                .fold(0, |m, u| m | 1 << u)
        })
        .collect();
    let mut weight = vec![0u64; 1 << n];
    let mut clique = vec![false; 1 << n];
    clique[0] = true;
    let mut best = 0;
    for mask in 1usize..(1 << n) {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        if clique[rest] && (rest as u32) & !adj[low] == 0 {
            clique[mask] = true;
            weight[mask] = weight[rest] + graph.weight(low);
            best = best.max(weight[mask]);
        }
    }
    best
}

fn random_graph() -> impl Strategy<Value = (WeightedGraph, Vec<usize>)> {
    (1usize..=20, 1u32..=9).prop_flat_map(|(n, density)| {
        (
            proptest::collection::vec(1u64..=8, n),
            proptest::collection::vec(0u32..10, n * n),
            proptest::collection::vec(0usize..4, n),
        )
            .prop_map(move |(weights, coins, parts)| {
                let mut g = WeightedGraph::new(weights);
                for u in 0..n {
                    for v in u + 1..n {
                        if coins[u * n + v] < density {
                            g.add_edge(u, v);
                        }
                    }
                }
                (g, parts)
            })
    })
}

pub fn clique_solver_matches_subset_enumeration() {
    runner(64)
        .run(&random_graph(), |(graph, parts)| {
            let best = brute_force_clique(&graph);
            let plain = max_weight_clique(&graph, &SearchBudget::unlimited()).unwrap();
            prop_assert!(plain.optimal);
            prop_assert!(graph.is_clique(&plain.vertices));
            prop_assert_eq!(graph.total_weight(&plain.vertices), plain.weight);
            prop_assert_eq!(plain.weight, best);

            let options = CliqueOptions {
                parts: Some(parts),
                ..CliqueOptions::default()
            };
            let budget = SearchBudget::unlimited().with_workers(2).unwrap();
            let split = max_weight_clique_with(&graph, &budget, &options).unwrap();
            prop_assert!(graph.is_clique(&split.vertices));
            prop_assert_eq!(split.weight, best);
            Ok(())
        })
        .unwrap();
}

// ---------------------------------------------------------------------------
// Quantum oracles: basis-state action of Paulis and ladder operators.

/// `|psi_u>` unnormalized as (coefficient, basis state) terms.
fn states(code: &QuantumADCode) -> Vec<[u64; 2]> {
    let n = code.n();
    let mask = (1u64 << n) - 1;
    code.representatives()
        .iter()
        .map(|w| {
            let u = w.to_bits().unwrap();
            [u, u ^ mask]
        })
        .collect()
}

/// Gaussian integer `(re, im)` times `i^power`.
fn times_i(value: (i64, i64), power: u32) -> (i64, i64) {
    (0..power % 4).fold(value, |(re, im), _| (-im, re))
}

/// `<y| P |x>` for a Pauli given per qubit as 0=I, 1=X, 2=Y, 3=Z (qubit 0 is
/// the most significant bit).
fn pauli_element(pauli: &[u8], y: u64, x: u64) -> (i64, i64) {
    let n = pauli.len();
    let mut value = (1, 0);
    for (q, &p) in pauli.iter().enumerate() {
        let shift = n - 1 - q;
        let (xb, yb) = ((x >> shift) & 1, (y >> shift) & 1);
        let entry: Option<u32> = match p {
            0 => (xb == yb).then_some(0),
            1 => (xb != yb).then_some(0),
            // Y = [[0, -i], [i, 0]]
            2 => (xb != yb).then_some(if xb == 0 { 1 } else { 3 }),
            _ => (xb == yb).then_some(if xb == 0 { 0 } else { 2 }),
        };
        match entry {
            Some(power) => value = times_i(value, power),
            None => return (0, 0),
        }
    }
    value
}

fn dense_enumerator(code: &QuantumADCode) -> Vec<Rational> {
    let n = code.n();
    let psi = states(code);
    let k = psi.len() as i128;
    let mut sums = vec![0i128; n + 1];
    let mut pauli = vec![0u8; n];
    for index in 0..4usize.pow(n as u32) {
        let mut rest = index;
        for p in pauli.iter_mut() {
            *p = (rest % 4) as u8;
            rest /= 4;
        }
        let weight = pauli.iter().filter(|&&p| p != 0).count();
        // 2 Tr(P E) = sum_u sum_{x, y in psi_u} <y|E|x>.
        let (mut re, mut im) = (0i64, 0i64);
        for members in &psi {
            for &x in members {
                for &y in members {
                    let (a, b) = pauli_element(&pauli, y, x);
                    re += a;
                    im += b;
                }
            }
        }
        sums[weight] += (re as i128).pow(2) + (im as i128).pow(2);
    }
    sums.into_iter()
        .map(|s| Rational::new(s, 4 * k * k))
        .collect()
}

fn self_complementary(n: usize, reps: impl IntoIterator<Item = u64>) -> ClassicalCode {
    let mask = (1u64 << n) - 1;
    ClassicalCode::from_bits(n, reps.into_iter().flat_map(|u| [u, u ^ mask])).unwrap()
}

pub fn enumerator_matches_dense_oracle_exhaustively() {
    for n in 2..=4 {
        let half = 1u64 << (n - 1);
        for subset in 1u64..(1 << half) {
            let code = self_complementary(n, (0..half).filter(|u| subset >> u & 1 == 1));
            let q = QuantumADCode::assemble_unchecked(&code).unwrap();
            let fast = weight_enumerator(&q).unwrap();
            assert_eq!(
                fast.coefficients,
                dense_enumerator(&q),
                "{:?}",
                code.words()
            );
        }
    }
}

/// KL conditions evaluated term by term.
fn dense_kl(code: &QuantumADCode) -> bool {
    let n = code.n();
    let psi = states(code);
    let bit = |x: u64, k: usize| (x >> (n - 1 - k)) & 1;
    let flip = |x: u64, k: usize| x ^ (1 << (n - 1 - k));
    // Operators as maps from a basis state to (amplitude, basis state).
    let lower = |k: usize, x: u64| (bit(x, k) == 1).then(|| (2i64, flip(x, k)));
    let raise = |k: usize, x: u64| (bit(x, k) == 0).then(|| (2i64, flip(x, k)));
    let phase = |k: usize, x: u64| Some((1 - 2 * bit(x, k) as i64, x));
    let matrix = |op: &dyn Fn(u64) -> Option<(i64, u64)>| -> Vec<Vec<i64>> {
        psi.iter()
            .map(|left| {
                psi.iter()
                    .map(|right| {
                        right
                            .iter()
                            .filter_map(|&x| op(x))
                            .map(|(amp, y)| amp * left.iter().filter(|&&l| l == y).count() as i64)
                            .sum()
                    })
                    .collect()
            })
            .collect()
    };
    let proportional_to_identity = |m: Vec<Vec<i64>>| {
        (0..m.len()).all(|i| {
            (0..m.len()).all(|j| {
                if i == j {
                    m[i][i] == m[0][0]
                } else {
                    m[i][j] == 0
                }
            })
        })
    };
    for k in 0..n {
        if !proportional_to_identity(matrix(&|x| lower(k, x))) {
            return false;
        }
        if !proportional_to_identity(matrix(&|x| phase(k, x))) {
            return false;
        }
        for l in 0..n {
            let pair = |x: u64| lower(l, x).and_then(|(a, y)| raise(k, y).map(|(b, z)| (a * b, z)));
            if !proportional_to_identity(matrix(&pair)) {
                return false;
            }
        }
    }
    true
}

pub fn kl_matches_dense_oracle_exhaustively() {
    let mut passing = 0;
    for n in 2..=4 {
        let half = 1u64 << (n - 1);
        for subset in 1u64..(1 << half) {
            let code = self_complementary(n, (0..half).filter(|u| subset >> u & 1 == 1));
            let q = QuantumADCode::assemble_unchecked(&code).unwrap();
            let report = kl_verify(&q).unwrap();
            let oracle = dense_kl(&q);
            assert_eq!(report.pass, oracle, "{:?}", code.words());
            if code.is_one_code() {
                assert!(oracle);
            }
            passing += usize::from(oracle);
        }
    }
    assert_eq!(passing, 17);
}

pub fn quantum_checks_match_dense_oracles() {
    runner(48)
        .run(&(5usize..=6, 1u64..u64::from(u32::MAX)), |(n, subset)| {
            let half = 1u64 << (n - 1);
            let subset = subset & ((1u64 << half) - 1);
            prop_assume!(subset != 0);
            let code = self_complementary(n, (0..half).filter(|u| subset >> u & 1 == 1));
            let q = QuantumADCode::assemble_unchecked(&code).unwrap();
            prop_assert_eq!(kl_verify(&q).unwrap().pass, dense_kl(&q));
            prop_assert_eq!(
                weight_enumerator(&q).unwrap().coefficients,
                dense_enumerator(&q)
            );
            Ok(())
        })
        .unwrap();
}

// ---------------------------------------------------------------------------
// Group construction oracles.

/// Sizes of `C_g` for every `g`, by summing element labels in `Z_{f1} + ...`.
fn cr_sizes(group: &AbelianGroup) -> HashMap<Vec<u32>, u64> {
    let factors = group.factors().to_vec();
    let labels: Vec<Vec<u32>> = group
        .non_identity_elements()
        .into_iter()
        .map(|g| g.0)
        .collect();
    let n = labels.len();
    let mut sizes = HashMap::new();
    for x in 0u64..(1 << n) {
        let mut sum = vec![0u32; factors.len()];
        for (i, label) in labels.iter().enumerate() {
            if x >> (n - 1 - i) & 1 == 1 {
                for (c, (s, l)) in sum.iter_mut().zip(label).enumerate() {
                    *s = (*s + l) % factors[c];
                }
            }
        }
        *sizes.entry(sum).or_insert(0) += 1;
    }
    sizes
}

pub fn cr_codes_partition_the_cube() {
    for n in 2..=12usize {
        let group = AbelianGroup::canonical(n as u32 + 1).unwrap();
        let sizes = cr_sizes(&group);
        let identity = group.identity();
        let mut total = 0u64;
        for g in group.elements() {
            let code = cr_code(&group, &g).unwrap();
            let expected = sizes.get(&g.0).copied().unwrap_or(0);
            assert_eq!(code.size() as u64, expected, "n={n} g={:?}", g.0);
            assert!(code.is_one_code(), "n={n} g={:?}", g.0);
            total += expected;
            if n <= 10 {
                assert!(sizes[&identity.0] >= expected);
            }
        }
        assert_eq!(total, 1 << n);
    }
}

pub fn vt_codes_are_one_codes() {
    for n in 2..=12usize {
        let mut total = 0;
        for g in 0..=n as u32 {
            let code = vt_code(n, g).unwrap();
            assert!(code.is_one_code());
            // Oracle membership: sum of 1-based positions of ones.
            for w in code.words() {
                let bits = w.to_bits().unwrap();
                let s: u64 = (0..n)
                    .filter(|i| bits >> (n - 1 - i) & 1 == 1)
                    .map(|i| i as u64 + 1)
                    .sum();
                assert_eq!(s % (n as u64 + 1), g as u64);
            }
            total += code.size();
        }
        assert_eq!(total, 1 << n);
    }
}

pub fn shortened_vt_complement_identity() {
    for n in [5usize, 9, 13] {
        let modulus = n as u64 + 2;
        for r in (1..=n + 1).step_by(2) {
            let code = shortened_vt(n, r).unwrap();
            assert!(code.is_self_complementary() && code.is_one_code());
            let labels: Vec<u64> = (1..=n as u64 + 1).filter(|&i| i != r as u64).collect();
            let weighted = |bits: u64| -> u64 {
                (0..n)
                    .filter(|i| bits >> (n - 1 - i) & 1 == 1)
                    .map(|i| labels[i])
                    .sum::<u64>()
                    % modulus
            };
            let target = (n as u64 + 2 - r as u64) / 2;
            for w in code.words() {
                let x = w.to_bits().unwrap();
                let xbar = w.complement().to_bits().unwrap();
                assert_eq!(
                    (weighted(x) + weighted(xbar)) % modulus,
                    (modulus - r as u64) % modulus
                );
                assert_eq!(weighted(x), target);
                assert_eq!(weighted(xbar), target);
            }
        }
    }
}

pub fn constructed_codes_pass_kl_with_zero_phase_diagonal() {
    for n in 2..=12usize {
        let mut codes = vec![self_complementary_construction(n).unwrap()];
        let group = AbelianGroup::canonical(n as u32 + 1).unwrap();
        codes.push(cr_code(&group, &group.identity()).unwrap());
        for code in codes {
            if !code.is_self_complementary() || code.is_empty() {
                continue;
            }
            let q = adcodes::assemble(&code).unwrap();
            let report = kl_verify(&q).unwrap();
            assert!(report.pass, "n={n} {}", code.meta.construction);
            assert!(report.phase_diagonal_zero);
            assert!(report.ladder_identity_holds);
        }
    }
}
