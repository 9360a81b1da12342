//! Randomized invariant checks. Each property draws small instances and
//! asserts a structural fact that must hold for every input, not just the
//! seeds the unit tests pin down.

use proptest::prelude::*;
use rand::Rng;
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

use imitation_lab::bc::{bc_counting, CountingMode};
use imitation_lab::datasets::{collect_expert, subsample, visitation, Dataset};
use imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};
use imitation_lab::mdp::{compute_occupancy, policy_value, Policy, TabularMdp};
use imitation_lab::valuedice::{gamma0_loss, SaddleState};

fn random_env(num_states: usize, num_actions: usize, horizon: usize, seed: u64) -> TabularMdp {
    build_env(&EnvSpec {
        family: EnvFamily::Random,
        num_states,
        num_actions,
        horizon,
        grid_width: None,
        slip: None,
        num_initial_states: 2.min(num_states),
        seed,
    })
    .expect("random environment builds")
}

/// Row-stochastic policy with full support, derived from a seed so proptest
/// shrinks over a single integer.
fn random_policy(mdp: &TabularMdp, seed: u64) -> Policy {
    let dims = mdp.dims();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probs = Policy::uniform(dims).probs().clone();
    for h in 0..dims.horizon {
        for s in 0..dims.num_states {
            let mut row: Vec<f64> = (0..dims.num_actions)
                .map(|_| -rng.random::<f64>().max(1e-300).ln())
                .collect();
            let total: f64 = row.iter().sum();
            for (a, v) in row.iter_mut().enumerate() {
                probs[[h, s, a]] = *v / total;
            }
        }
    }
    Policy::non_stationary(probs).unwrap()
}

fn expert_dataset(mdp: &TabularMdp, m: usize, seed: u64) -> Dataset {
    let expert = optimal_expert(mdp).unwrap().policy;
    collect_expert(mdp, &expert, m, seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Occupancy slices are probability distributions, the value computed
    /// from the occupancy matches the library's value routine, and values
    /// stay inside [0, H] for rewards in [0, 1].
    #[test]
    fn occupancy_normalized_and_value_consistent(
        ns in 2usize..=6, na in 2usize..=4, h in 2usize..=6,
        env_seed in 0u64..10_000, pol_seed in 0u64..10_000,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let policy = random_policy(&mdp, pol_seed);
        let occ = compute_occupancy(&mdp, &policy).unwrap();
        let mut from_occ = 0.0;
        for t in 0..h {
            let mut slice = 0.0;
            for s in 0..ns {
                for a in 0..na {
                    slice += occ.prob(t, s, a);
                    from_occ += occ.prob(t, s, a) * mdp.reward(s, a);
                }
            }
            prop_assert!((slice - 1.0).abs() <= 1e-9, "slice {t} sums to {slice}");
        }
        let v = policy_value(&mdp, &policy).unwrap();
        prop_assert!((v - from_occ).abs() <= 1e-9, "value {v} vs occupancy sum {from_occ}");
        prop_assert!((-1e-9..=h as f64 + 1e-9).contains(&v));
    }

    /// The first occupancy slice factors as initial distribution times the
    /// first policy slice.
    #[test]
    fn occupancy_base_case_factors(
        ns in 2usize..=6, na in 2usize..=4, h in 2usize..=5,
        env_seed in 0u64..10_000, pol_seed in 0u64..10_000,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let policy = random_policy(&mdp, pol_seed);
        let occ = compute_occupancy(&mdp, &policy).unwrap();
        let p0 = mdp.initial_dist();
        for s in 0..ns {
            for a in 0..na {
                let want = p0[s] * policy.prob(0, s, a);
                prop_assert!((occ.prob(0, s, a) - want).abs() <= 1e-12);
            }
        }
    }

    /// The solved expert is optimal: no randomly drawn policy achieves a
    /// higher value.
    #[test]
    fn solved_expert_dominates_random_policies(
        ns in 2usize..=6, na in 2usize..=4, h in 2usize..=6,
        env_seed in 0u64..10_000, pol_seed in 0u64..10_000,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let challenger = random_policy(&mdp, pol_seed);
        let ve = policy_value(&mdp, &expert).unwrap();
        let vc = policy_value(&mdp, &challenger).unwrap();
        prop_assert!(ve >= vc - 1e-9, "expert {ve} below challenger {vc}");
    }

    /// Every logged transition is possible: demonstrated actions have
    /// positive probability under the expert and demonstrated successors
    /// have positive probability under the kernel.
    #[test]
    fn demonstrations_are_dynamically_consistent(
        ns in 2usize..=6, na in 2usize..=4, h in 2usize..=6,
        env_seed in 0u64..10_000, m in 1usize..=4, data_seed in 0u64..10_000,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, m, data_seed).unwrap();
        prop_assert!(ds.complete());
        prop_assert_eq!(ds.num_trajectories(), m);
        for step in ds.steps() {
            prop_assert!(expert.prob(step.h, step.state, step.action) > 0.0);
            prop_assert!(mdp.transition(step.h, step.state, step.action)[step.next_state] > 0.0);
        }
    }

    /// Text serialization round-trips exactly, including metadata.
    #[test]
    fn dataset_text_round_trip(
        ns in 2usize..=6, na in 2usize..=4, h in 2usize..=6,
        env_seed in 0u64..10_000, m in 1usize..=4, data_seed in 0u64..10_000,
        rate in 1usize..=4, sub_seed in 0u64..1_000,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let ds = expert_dataset(&mdp, m, data_seed);
        let thinned = subsample(&ds, rate, sub_seed).unwrap();
        for dataset in [&ds, &thinned] {
            let back = Dataset::from_text(&dataset.to_text()).unwrap();
            prop_assert_eq!(&back, dataset);
        }
    }

    /// Thinning keeps a periodic subset: per-trajectory retention bounds
    /// hold, every kept step is carried over verbatim, and rate 1 is the
    /// identity.
    #[test]
    fn subsample_keeps_periodic_subset(
        ns in 2usize..=6, na in 2usize..=4, h in 2usize..=6,
        env_seed in 0u64..10_000, m in 1usize..=4, data_seed in 0u64..10_000,
        rate in 2usize..=6, sub_seed in 0u64..1_000,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let ds = expert_dataset(&mdp, m, data_seed);
        prop_assert_eq!(&subsample(&ds, 1, sub_seed).unwrap(), &ds);

        let sub = subsample(&ds, rate, sub_seed).unwrap();
        prop_assert!(!sub.complete());
        prop_assert_eq!(sub.subsample_rate(), Some(rate));
        prop_assert_eq!(sub.num_trajectories(), ds.num_trajectories());
        for (kept, orig) in sub.trajectories().iter().zip(ds.trajectories()) {
            let lo = h / rate;
            let hi = h.div_ceil(rate);
            prop_assert!(
                (lo..=hi).contains(&kept.steps.len()),
                "kept {} of {h} steps at rate {rate}", kept.steps.len()
            );
            for step in &kept.steps {
                prop_assert_eq!(&orig.steps[step.h], step);
            }
            for pair in kept.steps.windows(2) {
                prop_assert_eq!(pair[1].h - pair[0].h, rate);
            }
        }
    }

    /// Counting rows are distributions: demonstrated cells reproduce the
    /// count ratios exactly, everything else is uniform.
    #[test]
    fn counting_rows_stochastic_and_proportional(
        ns in 2usize..=6, na in 2usize..=4, h in 2usize..=6,
        env_seed in 0u64..10_000, m in 1usize..=4, data_seed in 0u64..10_000,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let ds = expert_dataset(&mdp, m, data_seed);
        let seen = visitation(&ds, mdp.dims()).unwrap();
        let per_step = bc_counting(&ds, mdp.dims(), CountingMode::PerTimeStep).unwrap();
        let aggregated = bc_counting(&ds, mdp.dims(), CountingMode::Aggregated).unwrap();
        for t in 0..h {
            for s in 0..ns {
                let row_sum: f64 = per_step.row(t, s).sum();
                prop_assert!((row_sum - 1.0).abs() <= 1e-9);
                let total = seen.state_count(t, s);
                for a in 0..na {
                    let want = if total > 0 {
                        seen.count(t, s, a) as f64 / total as f64
                    } else {
                        1.0 / na as f64
                    };
                    prop_assert!((per_step.prob(t, s, a) - want).abs() <= 1e-12);

                    let agg_total = seen.aggregated_state_count(s);
                    let agg_want = if agg_total > 0 {
                        seen.aggregated_count(s, a) as f64 / agg_total as f64
                    } else {
                        1.0 / na as f64
                    };
                    prop_assert!((aggregated.prob(t, s, a) - agg_want).abs() <= 1e-12);
                }
            }
        }
    }

    /// The γ = 0 saddle objective is invariant under adding a constant to
    /// every potential entry.
    #[test]
    fn gamma0_loss_shift_invariant(
        ns in 2usize..=5, na in 2usize..=3, h in 2usize..=5,
        env_seed in 0u64..10_000, data_seed in 0u64..10_000,
        state_seed in 0u64..10_000, shift in -2.0f64..2.0,
    ) {
        let mdp = random_env(ns, na, h, env_seed);
        let ds = expert_dataset(&mdp, 2, data_seed);
        let mut rng = ChaCha8Rng::seed_from_u64(state_seed);
        let mut state = SaddleState::new(mdp.dims(), false, false);
        let mut shifted = SaddleState::new(mdp.dims(), false, false);
        for t in 0..h {
            for s in 0..ns {
                for a in 0..na {
                    let nu = 2.0 * (rng.random::<f64>() - 0.5);
                    let logit = 2.0 * (rng.random::<f64>() - 0.5);
                    state.nu.set(t, s, a, nu);
                    state.logits.set(t, s, a, logit);
                    shifted.nu.set(t, s, a, nu + shift);
                    shifted.logits.set(t, s, a, logit);
                }
            }
        }
        let base = gamma0_loss(&ds, &state).unwrap();
        let moved = gamma0_loss(&ds, &shifted).unwrap();
        prop_assert!((base - moved).abs() <= 1e-9, "{base} vs {moved}");
    }
}
