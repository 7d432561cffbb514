mod common;

use proptest::prelude::*;
use sparsedc::estimators::{
    oracle_log2prob, redundancy_bound, BoundKind, OracleModel, SdcState, SequentialModel,
    SsaState, SsdState,
};
use sparsedc::{sequence_log2prob, AnyModel, ModelKind};

const KINDS: [ModelKind; 3] = [ModelKind::Sdc, ModelKind::Ssd, ModelKind::Ssa];

fn joint(kind: ModelKind, x: usize, seq: &[usize]) -> f64 {
    let mut m = AnyModel::new(kind, x).unwrap();
    sequence_log2prob(&mut m, seq).unwrap().value()
}

/// Alphabet size plus a sequence over it.
fn alphabet_and_sequence(max_x: usize, max_n: usize) -> impl Strategy<Value = (usize, Vec<usize>)> {
    (1..=max_x).prop_flat_map(move |x| (Just(x), prop::collection::vec(0..x, 0..=max_n)))
}

proptest! {
    #[test]
    fn chain_rule_at_every_split((x, seq) in alphabet_and_sequence(12, 40)) {
        for kind in KINDS {
            let whole = joint(kind, x, &seq);
            for split in 0..seq.len() {
                let mut m = AnyModel::new(kind, x).unwrap();
                let prefix = sequence_log2prob(&mut m, &seq[..split]).unwrap().value();
                let next = m.conditional(seq[split]).unwrap().value();
                m.update(seq[split]).unwrap();
                let rest = sequence_log2prob(&mut m, &seq[split + 1..]).unwrap().value();
                prop_assert!((prefix + next + rest - whole).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn sdc_and_ssa_are_exchangeable(
        (x, seq) in alphabet_and_sequence(10, 30),
        perm_seed in any::<u64>(),
    ) {
        let mut shuffled = seq.clone();
        // deterministic Fisher-Yates driven by the seed
        let mut state = perm_seed | 1;
        for i in (1..shuffled.len()).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            shuffled.swap(i, (state % (i as u64 + 1)) as usize);
        }
        for kind in [ModelKind::Sdc, ModelKind::Ssa] {
            prop_assert!((joint(kind, x, &seq) - joint(kind, x, &shuffled)).abs() < 1e-9);
        }
    }

    #[test]
    fn relabeling_preserves_joint_probability(
        (x, seq) in alphabet_and_sequence(9, 30),
        rotate in 0usize..9,
        flip in any::<bool>(),
    ) {
        let relabel = |s: usize| {
            let r = (s + rotate) % x;
            if flip { x - 1 - r } else { r }
        };
        let mapped: Vec<usize> = seq.iter().map(|&s| relabel(s)).collect();
        for kind in KINDS {
            prop_assert!((joint(kind, x, &seq) - joint(kind, x, &mapped)).abs() < 1e-9);
        }
        let theta: Vec<f64> = (0..x).map(|i| (i + 1) as f64).collect();
        let total: f64 = theta.iter().sum();
        let theta: Vec<f64> = theta.iter().map(|t| t / total).collect();
        let mut permuted = vec![0.0; x];
        for (s, p) in theta.iter().enumerate() {
            permuted[relabel(s)] = *p;
        }
        let permuted_sum: f64 = permuted.iter().sum();
        let permuted: Vec<f64> = permuted.iter().map(|p| p / permuted_sum).collect();
        let a = oracle_log2prob(&OracleModel::new(theta).unwrap(), &seq).unwrap().value();
        let b = oracle_log2prob(&OracleModel::new(permuted).unwrap(), &mapped).unwrap().value();
        prop_assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn full_alphabet_regret_against_ml((x, seq) in alphabet_and_sequence(40, 300)) {
        prop_assume!(!seq.is_empty());
        let regret = -joint(ModelKind::Sdc, x, &seq) + common::ml_log2(&seq);
        let bound = redundancy_bound(BoundKind::SdcFull, seq.len() as u64, 1, x as u64).unwrap();
        prop_assert!(regret <= bound + 1e-9, "regret {} > bound {}", regret, bound);
    }

    #[test]
    fn sdc_matches_direct_product((x, seq) in alphabet_and_sequence(30, 60)) {
        let direct = common::kt_joint(&seq, x).log2();
        prop_assert!((joint(ModelKind::Sdc, x, &seq) - direct).abs() < 1e-9);
    }
}

#[test]
fn ssa_conditionals_match_bruteforce_ratios() {
    for x in 1..=5 {
        for seq in common::all_sequences(x, 4) {
            let mut m = SsaState::new(x).unwrap();
            for (i, &s) in seq.iter().enumerate() {
                let expect = common::ssa_bruteforce_log2(&seq[..=i], x)
                    - common::ssa_bruteforce_log2(&seq[..i], x);
                let got = m.conditional(s).unwrap().value();
                assert!((got - expect).abs() < 1e-9, "x={x} seq={seq:?} step {i}");
                m.update(s).unwrap();
            }
        }
    }
}

#[test]
fn ssd_mass_is_lost_only_after_saturation() {
    for x in 1..=3usize {
        for n in 0..=6 {
            let total: f64 = common::all_sequences(x, n)
                .iter()
                .map(|s| joint(ModelKind::Ssd, x, s).exp2())
                .sum();
            if n <= x {
                assert!((total - 1.0).abs() < 1e-9, "x={x} n={n}: {total}");
            } else {
                assert!(total < 1.0 - 1e-6, "x={x} n={n}: {total}");
            }
        }
    }
}

#[test]
fn telescoping_product_is_one_over_n() {
    let mut acc = 0.0f64;
    for n in 2..=10_000u64 {
        acc += (1.0 - 1.0 / n as f64).log2();
        assert!((acc + (n as f64).log2()).abs() < 1e-9, "n={n}");
    }
}

#[test]
fn ssd_is_not_exchangeable() {
    // new symbols late cost more than new symbols early
    let early = joint(ModelKind::Ssd, 8, &[1, 2, 0, 0, 0, 0]);
    let late = joint(ModelKind::Ssd, 8, &[0, 0, 0, 0, 1, 2]);
    assert!((early - late).abs() > 1e-3);
}

#[test]
fn ssd_uses_sparse_memory() {
    let mut m = SsdState::new(1 << 20).unwrap();
    for i in 0..1000 {
        m.update((i * 7919) % 5).unwrap();
    }
    assert_eq!(m.counts().distinct(), 5);
    let mut sdc = SdcState::new(1 << 20).unwrap();
    sdc.update(12345).unwrap();
    assert_eq!(sdc.counts().distinct(), 1);
}
