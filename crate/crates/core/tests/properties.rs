use num_traits::Zero;
use proptest::prelude::*;

use conflict_games::game::{aggregate_social, CostWeights, Evaluator, GameKind, Instance, MixedProfile, State};
use conflict_games::instances::{parse_instance, write_instance, RandomSpec};
use conflict_games::oracle::{expected_player_value, Oracle};
use conflict_games::rational::{format_rational, frac, harmonic, int, parse_rational, Rational};
use conflict_games::smoothness::{semi_smooth_lhs, uniform_lhs_closed_form};

const KINDS: [GameKind; 6] = [
    GameKind::BwC,
    GameKind::BwF,
    GameKind::BwCF,
    GameKind::SwC,
    GameKind::SwF,
    GameKind::MaxCut,
];

fn kind() -> impl Strategy<Value = GameKind> {
    (0..KINDS.len()).prop_map(|i| KINDS[i])
}

fn weights() -> impl Strategy<Value = CostWeights> {
    (1..=6i64, 0..=6i64, 0..=6i64).prop_map(|(a, b, c)| CostWeights::new(frac(a, 2), frac(b, 2), frac(c, 2)))
}

prop_compose! {
    fn instance()(k in kind(), n in 1..=4usize, m in 1..=3usize, p in 0..=4i64,
                  seed in any::<u64>(), w in weights(), weighted in any::<bool>()) -> Instance {
        let mut spec = RandomSpec::new(n, m, k, frac(p, 4), seed);
        if k == GameKind::BwCF {
            spec = spec.with_weights(w);
        }
        if k.is_sharing() {
            spec = spec.with_weighted_edges(weighted);
        }
        spec.build().unwrap()
    }
}

prop_compose! {
    fn instance_and_state()(inst in instance())
                           (state in proptest::collection::vec(0..inst.m(), inst.n()), inst in Just(inst))
                           -> (Instance, State) {
        (inst, State::new(state))
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unilateral_moves_change_potential_by_value_change((inst, s) in instance_and_state()) {
        let before = Evaluator::new(&inst, &s);
        for i in 0..inst.n() {
            for k in 0..inst.m() {
                let t = s.with_move(i, k);
                let after = Evaluator::new(&inst, &t);
                prop_assert_eq!(after.potential() - before.potential(), after.value(i) - before.value(i));
            }
        }
    }

    #[test]
    fn social_matches_aggregate((inst, s) in instance_and_state()) {
        prop_assert_eq!(Evaluator::new(&inst, &s).social(), aggregate_social(&inst, &s));
    }

    #[test]
    fn values_are_nonnegative((inst, s) in instance_and_state()) {
        let ev = Evaluator::new(&inst, &s);
        for i in 0..inst.n() {
            for k in 0..inst.m() {
                prop_assert!(ev.value_at(i, k) >= Rational::zero());
            }
        }
        prop_assert!(ev.potential() >= Rational::zero());
    }

    #[test]
    fn combined_kind_reduces_to_pure_kinds(n in 1..=5usize, m in 1..=3usize, p in 0..=4i64,
                                           seed in any::<u64>(), idx in any::<u64>()) {
        let conf = RandomSpec::new(n, m, GameKind::BwC, frac(p, 4), seed).build().unwrap();
        let friend = RandomSpec::new(n, m, GameKind::BwF, frac(p, 4), seed).build().unwrap();
        let as_c = Instance::builder(GameKind::BwCF, n, m)
            .conflicts(conf.conflict_edges().iter().map(|e| e.endpoints()))
            .weights(CostWeights::conflicts_only())
            .build().unwrap();
        let as_f = Instance::builder(GameKind::BwCF, n, m)
            .friendships(friend.friendship_edges().iter().map(|e| e.endpoints()))
            .weights(CostWeights::friendship_only())
            .build().unwrap();
        let total = (m as u64).pow(n as u32);
        let s = State::from_index(idx % total, n, m);
        for (plain, combined) in [(&conf, &as_c), (&friend, &as_f)] {
            let a = Evaluator::new(plain, &s);
            let b = Evaluator::new(combined, &s);
            for i in 0..n {
                prop_assert_eq!(a.value(i), b.value(i));
            }
            prop_assert_eq!(a.potential(), b.potential());
        }
    }

    #[test]
    fn shares_split_the_machine_value(n in 1..=5usize, m in 1..=3usize, seed in any::<u64>(), idx in any::<u64>()) {
        let inst = RandomSpec::new(n, m, GameKind::SwC, int(0), seed).build().unwrap();
        let s = State::from_index(idx % (m as u64).pow(n as u32), n, m);
        let ev = Evaluator::new(&inst, &s);
        let values = inst.machine_values().unwrap();
        let loads = s.loads(m);
        let occupied: Rational = (0..m).filter(|&k| loads[k] > 0).map(|k| values[k].clone()).sum();
        prop_assert_eq!(ev.social(), occupied);
    }

    #[test]
    fn sharing_potential_sandwich(n in 1..=6usize, m in 1..=3usize, p in 0..=4i64, seed in any::<u64>(),
                                  weighted in any::<bool>(), idx in any::<u64>()) {
        let inst = RandomSpec::new(n, m, GameKind::SwC, frac(p, 4), seed)
            .with_weighted_edges(weighted)
            .build().unwrap();
        let s = State::from_index(idx % (m as u64).pow(n as u32), n, m);
        let ev = Evaluator::new(&inst, &s);
        let (phi, u) = (ev.potential(), ev.social());
        prop_assert!(phi <= harmonic(inst.n()) * &u);
        prop_assert!(u <= int(2) * phi);
    }

    #[test]
    fn point_mass_expectation_is_pure_value((inst, s) in instance_and_state()) {
        let profile = MixedProfile::point_mass(&s, inst.m());
        let ev = Evaluator::new(&inst, &s);
        for i in 0..inst.n() {
            for k in 0..inst.m() {
                prop_assert_eq!(expected_player_value(&inst, &profile, i, k).unwrap(), ev.value_at(i, k));
            }
        }
    }

    #[test]
    fn uniform_lhs_closed_form_agrees((inst, s) in instance_and_state()) {
        let sigma = MixedProfile::uniform(inst.n(), inst.m());
        prop_assert_eq!(semi_smooth_lhs(&inst, &s, &sigma).unwrap(), uniform_lhs_closed_form(&inst, &s).unwrap());
    }

    #[test]
    fn documents_round_trip(inst in instance()) {
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(write_instance(&back), text);
    }

    #[test]
    fn rationals_round_trip(num in -10_000i64..10_000, den in 1i64..10_000) {
        let r = frac(num, den);
        prop_assert_eq!(parse_rational(&format_rational(&r)), Some(r));
    }

    #[test]
    fn optimum_is_no_worse_than_any_ne(inst in instance()) {
        let oracle = Oracle::new(&inst);
        let (_, opt) = oracle.optimum().unwrap();
        let orient = inst.kind().orientation();
        for (_, v) in oracle.pure_nash_set().unwrap() {
            prop_assert!(!orient.better(&v, &opt));
        }
    }
}

#[test]
fn pure_nash_exists_on_small_pool() {
    for seed in 0..40u64 {
        let k = KINDS[seed as usize % KINDS.len()];
        let inst = RandomSpec::new(4, 3, k, frac(1, 2), seed).build().unwrap();
        assert!(!Oracle::new(&inst).pure_nash_set().unwrap().is_empty(), "{k} seed {seed}");
    }
}
