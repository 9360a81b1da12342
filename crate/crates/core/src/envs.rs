//! Benchmark environment families and exactly optimal experts.
//!
//! Four families cover the regimes the experiments need:
//!
//! * `det_chain` — a saturating chain; each state has one seeded "good"
//!   action that advances and earns reward 1, every other action stays
//!   put and earns nothing. Fully deterministic.
//! * `det_grid` — a toroidal grid; the good action moves one column right
//!   (wrapping) for reward 1, wrong actions move vertically or left for
//!   nothing. Fully deterministic, and expert sweeps from different start
//!   states never overlap in time-aligned state space.
//! * `reset_cliff` — a chain of good states plus one absorbing bad state.
//!   Wrong actions fall off the cliff immediately; the good action earns
//!   reward 1 and advances, but with probability `slip` it teleports to a
//!   uniformly random good state instead. The expert's value is exactly
//!   the horizon for every slip level, while an imitator that leaves the
//!   demonstrated time-aligned states dies quickly — the family realizes
//!   the benign (deterministic) and compounding (stochastic) regimes with
//!   matched reward scales.
//! * `random` — dense seeded random dynamics and rewards, non-stationary
//!   across time steps; useful for generic correctness checks.
//!
//! In every family the initial distribution is uniform over the first
//! `num_initial_states` non-absorbing states.

use ndarray::{Array1, Array2, Array4};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mdp::{Dims, Policy, TabularMdp};

/// Environment family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnvFamily {
    DetChain,
    DetGrid,
    ResetCliff,
    Random,
}

impl std::fmt::Display for EnvFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            EnvFamily::DetChain => "det_chain",
            EnvFamily::DetGrid => "det_grid",
            EnvFamily::ResetCliff => "reset_cliff",
            EnvFamily::Random => "random",
        };
        f.write_str(name)
    }
}

/// Declarative description of a benchmark environment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnvSpec {
    pub family: EnvFamily,
    pub num_states: usize,
    pub num_actions: usize,
    pub horizon: usize,
    /// Column count for `det_grid`; must divide `num_states`.
    #[serde(default)]
    pub grid_width: Option<usize>,
    /// Teleport probability for `reset_cliff`.
    #[serde(default)]
    pub slip: Option<f64>,
    /// The initial distribution is uniform over this many states.
    pub num_initial_states: usize,
    pub seed: u64,
}

fn uniform_initial(num_states: usize, k: usize) -> Array1<f64> {
    let mut p0 = Array1::zeros(num_states);
    for s in 0..k {
        p0[s] = 1.0 / k as f64;
    }
    p0
}

fn expand_stationary(kernel: &ndarray::Array3<f64>, horizon: usize) -> Array4<f64> {
    let (s, a, s2) = kernel.dim();
    let mut t = Array4::zeros((horizon, s, a, s2));
    for h in 0..horizon {
        t.slice_mut(ndarray::s![h, .., .., ..]).assign(kernel);
    }
    t
}

/// Builds the MDP described by `spec`. Identical specs always produce
/// bitwise-identical MDPs.
pub fn build_env(spec: &EnvSpec) -> Result<TabularMdp> {
    let EnvSpec {
        family,
        num_states: ns,
        num_actions: na,
        horizon,
        num_initial_states: k,
        seed,
        ..
    } = *spec;
    if ns == 0 || na == 0 || horizon == 0 {
        return Err(Error::Argument(
            "states, actions, and horizon must all be nonzero".into(),
        ));
    }
    if na < 2 {
        return Err(Error::Argument(
            "environment families need at least two actions".into(),
        ));
    }
    let non_absorbing = match family {
        EnvFamily::ResetCliff => ns.checked_sub(1).filter(|&n| n > 0).ok_or_else(|| {
            Error::Argument("reset_cliff needs at least one good state plus the bad state".into())
        })?,
        _ => ns,
    };
    if k == 0 || k > non_absorbing {
        return Err(Error::Argument(format!(
            "num_initial_states {k} must lie in 1..={non_absorbing}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        EnvFamily::DetChain => {
            let good: Vec<usize> = (0..ns).map(|_| rng.random_range(0..na)).collect();
            let mut kernel = ndarray::Array3::zeros((ns, na, ns));
            let mut rewards = Array2::zeros((ns, na));
            for s in 0..ns {
                for a in 0..na {
                    if a == good[s] {
                        let next = (s + 1).min(ns - 1);
                        kernel[[s, a, next]] = 1.0;
                        rewards[[s, a]] = 1.0;
                    } else {
                        kernel[[s, a, s]] = 1.0;
                    }
                }
            }
            TabularMdp::new(
                expand_stationary(&kernel, horizon),
                rewards,
                uniform_initial(ns, k),
                None,
            )
        }
        EnvFamily::DetGrid => {
            let width = spec
                .grid_width
                .ok_or_else(|| Error::Config("det_grid requires grid_width".into()))?;
            if width == 0 || ns % width != 0 {
                return Err(Error::Config(format!(
                    "grid_width {width} must be nonzero and divide num_states {ns}"
                )));
            }
            let height = ns / width;
            let good: Vec<usize> = (0..ns).map(|_| rng.random_range(0..na)).collect();
            let mut kernel = ndarray::Array3::zeros((ns, na, ns));
            let mut rewards = Array2::zeros((ns, na));
            // Wrong actions cycle through vertical and leftward moves.
            let wrong_moves = [(0isize, -1isize), (0, 1), (-1, 0)];
            for s in 0..ns {
                let x = s % width;
                let y = s / width;
                let mut wrong_slot = 0usize;
                for a in 0..na {
                    if a == good[s] {
                        let next = y * width + (x + 1) % width;
                        kernel[[s, a, next]] = 1.0;
                        rewards[[s, a]] = 1.0;
                    } else {
                        let (dx, dy) = wrong_moves[wrong_slot % wrong_moves.len()];
                        wrong_slot += 1;
                        let nx = (x as isize + dx).rem_euclid(width as isize) as usize;
                        let ny = (y as isize + dy).rem_euclid(height as isize) as usize;
                        kernel[[s, a, ny * width + nx]] = 1.0;
                    }
                }
            }
            TabularMdp::new(
                expand_stationary(&kernel, horizon),
                rewards,
                uniform_initial(ns, k),
                None,
            )
        }
        EnvFamily::ResetCliff => {
            let slip = spec.slip.unwrap_or(0.0);
            if !(0.0..=1.0).contains(&slip) {
                return Err(Error::Argument(format!("slip {slip} must lie in [0, 1]")));
            }
            let n_good = ns - 1;
            let bad = n_good;
            let good_action: Vec<usize> = (0..n_good).map(|_| rng.random_range(0..na)).collect();
            let mut kernel = ndarray::Array3::zeros((ns, na, ns));
            let mut rewards = Array2::zeros((ns, na));
            for s in 0..n_good {
                for a in 0..na {
                    if a == good_action[s] {
                        // Advance with probability 1 - slip, teleport to a
                        // uniform good state with probability slip.
                        let next = (s + 1) % n_good;
                        kernel[[s, a, next]] += 1.0 - slip;
                        for s2 in 0..n_good {
                            kernel[[s, a, s2]] += slip / n_good as f64;
                        }
                        rewards[[s, a]] = 1.0;
                    } else {
                        kernel[[s, a, bad]] = 1.0;
                    }
                }
            }
            for a in 0..na {
                kernel[[bad, a, bad]] = 1.0;
            }
            TabularMdp::new(
                expand_stationary(&kernel, horizon),
                rewards,
                uniform_initial(ns, k),
                None,
            )
        }
        EnvFamily::Random => {
            let mut t = Array4::zeros((horizon, ns, na, ns));
            for h in 0..horizon {
                for s in 0..ns {
                    for a in 0..na {
                        let mut row: Vec<f64> = (0..ns).map(|_| rng.random::<f64>()).collect();
                        let total: f64 = row.iter().sum();
                        for v in &mut row {
                            *v /= total;
                        }
                        // Remove rounding drift so validation is exact.
                        let sum_after: f64 = row.iter().sum();
                        row[ns - 1] += 1.0 - sum_after;
                        for (s2, v) in row.iter().enumerate() {
                            t[[h, s, a, s2]] = *v;
                        }
                    }
                }
            }
            let mut rewards = Array2::zeros((ns, na));
            for s in 0..ns {
                for a in 0..na {
                    rewards[[s, a]] = rng.random::<f64>();
                }
            }
            TabularMdp::new(t, rewards, uniform_initial(ns, k), None)
        }
    }
}

/// Backward-induction artifacts of the optimal policy: the greedy policy
/// itself plus its state values `v[h][s]` and action values `q[h][s][a]`.
#[derive(Debug, Clone)]
pub struct OptimalSolution {
    pub policy: Policy,
    pub state_values: Array2<f64>,
    pub action_values: ndarray::Array3<f64>,
}

/// Computes an exactly optimal (deterministic, non-stationary) policy by
/// backward induction. Ties are broken toward the lowest action index.
pub fn optimal_expert(mdp: &TabularMdp) -> Result<OptimalSolution> {
    let Dims {
        num_states,
        num_actions,
        horizon,
    } = mdp.dims();
    let mut v = Array2::zeros((horizon, num_states));
    let mut q = ndarray::Array3::zeros((horizon, num_states, num_actions));
    let mut actions = Array2::zeros((horizon, num_states));
    for h in (0..horizon).rev() {
        for s in 0..num_states {
            let mut best_a = 0usize;
            let mut best_q = f64::NEG_INFINITY;
            for a in 0..num_actions {
                let mut qa = mdp.reward(s, a);
                if h + 1 < horizon {
                    for (s2, &p) in mdp.transition(h, s, a).iter().enumerate() {
                        if p != 0.0 {
                            qa += p * v[[h + 1, s2]];
                        }
                    }
                }
                q[[h, s, a]] = qa;
                if qa > best_q {
                    best_q = qa;
                    best_a = a;
                }
            }
            v[[h, s]] = best_q;
            actions[[h, s]] = best_a;
        }
    }
    let policy = Policy::from_actions(&actions, num_actions)?;
    Ok(OptimalSolution {
        policy,
        state_values: v,
        action_values: q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::{collect_expert, visitation};
    use crate::mdp::{compute_occupancy, policy_value, policy_value_backward};
    use approx::assert_abs_diff_eq;

    fn spec(family: EnvFamily, ns: usize, na: usize, h: usize, k: usize, seed: u64) -> EnvSpec {
        EnvSpec {
            family,
            num_states: ns,
            num_actions: na,
            horizon: h,
            grid_width: None,
            slip: None,
            num_initial_states: k,
            seed,
        }
    }

    #[test]
    fn deterministic_families_have_point_mass_transitions() {
        let chain = build_env(&spec(EnvFamily::DetChain, 6, 3, 5, 2, 11)).unwrap();
        let mut grid_spec = spec(EnvFamily::DetGrid, 12, 3, 5, 4, 11);
        grid_spec.grid_width = Some(4);
        let grid = build_env(&grid_spec).unwrap();
        for mdp in [&chain, &grid] {
            for h in 0..mdp.horizon() {
                for s in 0..mdp.num_states() {
                    for a in 0..mdp.num_actions() {
                        let row = mdp.transition(h, s, a);
                        assert!(row.iter().all(|&p| p == 0.0 || p == 1.0));
                    }
                }
            }
        }
    }

    #[test]
    fn chain_expert_earns_one_per_step() {
        let mdp = build_env(&spec(EnvFamily::DetChain, 6, 3, 7, 3, 5)).unwrap();
        let sol = optimal_expert(&mdp).unwrap();
        let v = policy_value(&mdp, &sol.policy).unwrap();
        assert_abs_diff_eq!(v, 7.0, epsilon = 1e-12);
    }

    #[test]
    fn reset_cliff_shapes_and_expert_value() {
        for slip in [0.0, 0.3] {
            let mut s = spec(EnvFamily::ResetCliff, 7, 3, 6, 2, 42);
            s.slip = Some(slip);
            let mdp = build_env(&s).unwrap();
            let n_good = 6;
            let bad = n_good;
            // The bad state is absorbing and unrewarded.
            for a in 0..3 {
                assert_eq!(mdp.transition(0, bad, a)[bad], 1.0);
                assert_eq!(mdp.reward(bad, a), 0.0);
            }
            // Each good state has exactly one rewarded action; the others
            // fall off the cliff with certainty.
            for g in 0..n_good {
                let rewarded: Vec<usize> = (0..3).filter(|&a| mdp.reward(g, a) == 1.0).collect();
                assert_eq!(rewarded.len(), 1);
                for a in 0..3 {
                    if a != rewarded[0] {
                        assert_eq!(mdp.transition(0, g, a)[bad], 1.0);
                    }
                }
                // The rewarded action stays on good states.
                assert_abs_diff_eq!(
                    mdp.transition(0, g, rewarded[0])
                        .iter()
                        .take(n_good)
                        .sum::<f64>(),
                    1.0,
                    epsilon = 1e-12
                );
            }
            // The optimal expert collects reward 1 at every step whatever
            // the slip level, because teleports stay on good states.
            let sol = optimal_expert(&mdp).unwrap();
            let v = policy_value(&mdp, &sol.policy).unwrap();
            assert_abs_diff_eq!(v, 6.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn grid_layout_moves_right_on_good_action() {
        let mut s = spec(EnvFamily::DetGrid, 12, 3, 4, 6, 3);
        s.grid_width = Some(4);
        let mdp = build_env(&s).unwrap();
        for state in 0..12 {
            let x = state % 4;
            let y = state / 4;
            let good: Vec<usize> = (0..3).filter(|&a| mdp.reward(state, a) == 1.0).collect();
            assert_eq!(good.len(), 1);
            let expected_next = y * 4 + (x + 1) % 4;
            assert_eq!(mdp.transition(0, state, good[0])[expected_next], 1.0);
        }
    }

    #[test]
    fn same_seed_builds_identical_env() {
        let a = build_env(&spec(EnvFamily::Random, 5, 3, 4, 5, 77)).unwrap();
        let b = build_env(&spec(EnvFamily::Random, 5, 3, 4, 5, 77)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        let c = build_env(&spec(EnvFamily::Random, 5, 3, 4, 5, 78)).unwrap();
        assert_ne!(a.to_json(), c.to_json());
    }

    #[test]
    fn optimal_expert_matches_exhaustive_enumeration() {
        // 3 states, 2 actions, horizon 3: 2^(3*3) = 512 deterministic
        // non-stationary policies, evaluated exactly.
        let mdp = build_env(&spec(EnvFamily::Random, 3, 2, 3, 3, 2024)).unwrap();
        let sol = optimal_expert(&mdp).unwrap();
        let v_star = policy_value(&mdp, &sol.policy).unwrap();
        let mut best = f64::NEG_INFINITY;
        let cells = 3 * 3; // (h, s) pairs
        for code in 0..(1u32 << cells) {
            let mut actions = Array2::zeros((3, 3));
            for cell in 0..cells {
                let h = cell / 3;
                let s = cell % 3;
                actions[[h, s]] = ((code >> cell) & 1) as usize;
            }
            let policy = Policy::from_actions(&actions, 2).unwrap();
            let v = policy_value_backward(&mdp, &policy).unwrap();
            if v > best {
                best = v;
            }
        }
        assert_abs_diff_eq!(v_star, best, epsilon = 1e-12);
    }

    #[test]
    fn optimal_expert_is_greedy_with_lowest_index_ties() {
        let mdp = build_env(&spec(EnvFamily::Random, 4, 3, 4, 4, 9)).unwrap();
        let sol = optimal_expert(&mdp).unwrap();
        for h in 0..4 {
            for s in 0..4 {
                let a_star = sol.policy.argmax(h, s);
                let q_row = sol.action_values.slice(ndarray::s![h, s, ..]);
                let max_q = q_row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                assert_abs_diff_eq!(q_row[a_star], max_q, epsilon = 0.0);
                for a in 0..a_star {
                    assert!(q_row[a] < max_q);
                }
            }
        }
        // Explicit tie: two actions with identical dynamics and rewards.
        let mut t = Array4::zeros((1, 2, 2, 2));
        t[[0, 0, 0, 1]] = 1.0;
        t[[0, 0, 1, 1]] = 1.0;
        t[[0, 1, 0, 1]] = 1.0;
        t[[0, 1, 1, 1]] = 1.0;
        let mdp = TabularMdp::new(
            t,
            ndarray::array![[0.5, 0.5], [0.0, 0.0]],
            ndarray::array![1.0, 0.0],
            None,
        )
        .unwrap();
        let sol = optimal_expert(&mdp).unwrap();
        assert_eq!(sol.policy.argmax(0, 0), 0);
        assert_eq!(sol.policy.prob(0, 0, 0), 1.0);
    }

    #[test]
    fn collected_state_frequencies_match_occupancy() {
        let mut s = spec(EnvFamily::ResetCliff, 7, 3, 5, 2, 13);
        s.slip = Some(0.3);
        let mdp = build_env(&s).unwrap();
        let sol = optimal_expert(&mdp).unwrap();
        let m = 1000;
        let ds = collect_expert(&mdp, &sol.policy, m, 314).unwrap();
        let occ = compute_occupancy(&mdp, &sol.policy).unwrap();
        let counts = visitation(&ds, mdp.dims()).unwrap();
        // Compare state-visit frequencies at the second step (h = 1)
        // against the exact marginal, within three standard errors.
        let marginals = occ.state_marginals();
        for state in 0..7 {
            let p = marginals[[1, state]];
            let emp = counts.state_count(1, state) as f64 / m as f64;
            let sigma = (p * (1.0 - p) / m as f64).sqrt();
            assert!(
                (emp - p).abs() <= 3.0 * sigma.max(1e-9),
                "state {state}: empirical {emp} vs exact {p}"
            );
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        // Too many initial states.
        assert!(build_env(&spec(EnvFamily::DetChain, 4, 2, 3, 5, 0)).is_err());
        // reset_cliff counts the bad state: k must fit the good states.
        let mut s = spec(EnvFamily::ResetCliff, 4, 2, 3, 4, 0);
        s.slip = Some(0.1);
        assert!(build_env(&s).is_err());
        // det_grid requires a width that divides the state count.
        let mut g = spec(EnvFamily::DetGrid, 10, 3, 3, 2, 0);
        g.grid_width = Some(4);
        assert!(build_env(&g).is_err());
        // Slip outside [0, 1].
        let mut c = spec(EnvFamily::ResetCliff, 4, 2, 3, 1, 0);
        c.slip = Some(1.5);
        assert!(build_env(&c).is_err());
    }
}
