//! Behavioral cloning: action-frequency counting and maximum-likelihood
//! training of a linear-softmax policy.
//!
//! The counting estimator is the exact maximum-likelihood tabular policy:
//! the empirical action frequency at each visited state, uniform where the
//! data says nothing. The gradient trainer fits the same objective through
//! a shared parameter matrix over state features, which is where
//! regularization and feature design start to matter: with noisy feature
//! columns and no weight decay, the trained policy can commit to arbitrary
//! actions at states the data never visited.

use ndarray::{Array1, Array2, Array3};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::datasets::{visitation, Dataset};
use crate::error::{Error, Result};
use crate::mdp::{policy_value, Dims, Policy, TabularMdp};

/// Whether counting pools data across time steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountingMode {
    /// Separate counts n_t(s, a) at every time step.
    PerTimeStep,
    /// One pooled table n(s, a); the result is a stationary policy.
    Aggregated,
}

/// Empirical action-frequency policy: π(a | s) = n(s, a) / n(s) at visited
/// states, uniform at unvisited ones.
pub fn bc_counting(ds: &Dataset, dims: Dims, mode: CountingMode) -> Result<Policy> {
    let counts = visitation(ds, dims)?;
    match mode {
        CountingMode::PerTimeStep => {
            let mut probs = Array3::zeros((dims.horizon, dims.num_states, dims.num_actions));
            for h in 0..dims.horizon {
                for s in 0..dims.num_states {
                    let total = counts.state_count(h, s);
                    for a in 0..dims.num_actions {
                        probs[[h, s, a]] = if total == 0 {
                            1.0 / dims.num_actions as f64
                        } else {
                            counts.count(h, s, a) as f64 / total as f64
                        };
                    }
                }
            }
            Policy::non_stationary(probs)
        }
        CountingMode::Aggregated => {
            let mut probs = Array2::zeros((dims.num_states, dims.num_actions));
            for s in 0..dims.num_states {
                let total = counts.aggregated_state_count(s);
                for a in 0..dims.num_actions {
                    probs[[s, a]] = if total == 0 {
                        1.0 / dims.num_actions as f64
                    } else {
                        counts.aggregated_count(s, a) as f64 / total as f64
                    };
                }
            }
            Policy::stationary(probs, dims.horizon)
        }
    }
}

/// Fixed state-feature map φ: one row of length `dim` per state.
#[derive(Debug, Clone)]
pub struct FeatureTable {
    matrix: Array2<f64>,
}

impl FeatureTable {
    /// Identity features: φ(s) = e_s.
    pub fn one_hot(num_states: usize) -> Self {
        FeatureTable {
            matrix: Array2::eye(num_states),
        }
    }

    /// One-hot features extended with `noise_dim` standard-normal columns
    /// drawn once from the seed. The noise columns are shared across
    /// states' rows only in distribution — every entry is independent — so
    /// they carry no information about identity, but a trained weight on
    /// them transfers spurious preferences to unvisited states.
    pub fn one_hot_with_noise(num_states: usize, noise_dim: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut matrix = Array2::zeros((num_states, num_states + noise_dim));
        for s in 0..num_states {
            matrix[[s, s]] = 1.0;
            for j in 0..noise_dim {
                matrix[[s, num_states + j]] = StandardNormal.sample(&mut rng);
            }
        }
        FeatureTable { matrix }
    }

    pub fn from_matrix(matrix: Array2<f64>) -> Result<Self> {
        if matrix.nrows() == 0 || matrix.ncols() == 0 {
            return Err(Error::Feature("feature matrix must be nonempty".into()));
        }
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::Feature(
                "feature matrix has non-finite entries".into(),
            ));
        }
        Ok(FeatureTable { matrix })
    }

    pub fn num_states(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn row(&self, s: usize) -> ndarray::ArrayView1<'_, f64> {
        self.matrix.row(s)
    }
}

/// Stationary softmax policy with logits φ(s)ᵀ θ over a shared parameter
/// matrix θ of shape `[feature_dim, num_actions]`.
#[derive(Debug, Clone)]
pub struct LinearSoftmaxPolicy {
    features: FeatureTable,
    theta: Array2<f64>,
}

impl LinearSoftmaxPolicy {
    /// Zero-initialized parameters (uniform policy).
    pub fn new(features: FeatureTable, num_actions: usize) -> Result<Self> {
        if num_actions == 0 {
            return Err(Error::Argument("need at least one action".into()));
        }
        let dim = features.dim();
        Ok(LinearSoftmaxPolicy {
            features,
            theta: Array2::zeros((dim, num_actions)),
        })
    }

    pub fn features(&self) -> &FeatureTable {
        &self.features
    }

    pub fn theta(&self) -> &Array2<f64> {
        &self.theta
    }

    pub fn theta_mut(&mut self) -> &mut Array2<f64> {
        &mut self.theta
    }

    pub fn num_actions(&self) -> usize {
        self.theta.ncols()
    }

    fn logits(&self, s: usize) -> Array1<f64> {
        self.features.row(s).dot(&self.theta)
    }

    /// Action distribution at one state (max-shifted softmax).
    pub fn probs(&self, s: usize) -> Array1<f64> {
        let logits = self.logits(s);
        let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut out = logits.mapv(|z| (z - max).exp());
        let total = out.sum();
        out.mapv_inplace(|v| v / total);
        out
    }

    /// Materializes the stationary tabular policy over all states.
    pub fn to_policy(&self, horizon: usize) -> Result<Policy> {
        let ns = self.features.num_states();
        let na = self.num_actions();
        let mut probs = Array2::zeros((ns, na));
        for s in 0..ns {
            probs.row_mut(s).assign(&self.probs(s));
        }
        Policy::stationary(probs, horizon)
    }

    /// Sum of per-sample negative log-likelihoods, without the penalty.
    pub fn nll(&self, ds: &Dataset) -> f64 {
        let mut total = 0.0;
        let mut cache: Vec<Option<Array1<f64>>> = vec![None; self.features.num_states()];
        for step in ds.steps() {
            let logp = cache[step.state].get_or_insert_with(|| {
                let logits = self.logits(step.state);
                let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let log_norm = max + logits.iter().map(|z| (z - max).exp()).sum::<f64>().ln();
                logits.mapv(|z| z - log_norm)
            });
            total -= logp[step.action];
        }
        total
    }

    /// Squared-norm penalty λ‖θ‖².
    pub fn penalty(&self, weight_decay: f64) -> f64 {
        weight_decay * self.theta.iter().map(|v| v * v).sum::<f64>()
    }
}

/// Full training objective: Σ_i −log π_θ(a_i | s_i) + λ‖θ‖².
pub fn mle_loss(ds: &Dataset, policy: &LinearSoftmaxPolicy, weight_decay: f64) -> f64 {
    policy.nll(ds) + policy.penalty(weight_decay)
}

/// Analytic gradient of [`mle_loss`] with respect to θ:
/// Σ_i φ(s_i) (π_θ(· | s_i) − e_{a_i})ᵀ + 2λθ.
pub fn mle_gradient(ds: &Dataset, policy: &LinearSoftmaxPolicy, weight_decay: f64) -> Array2<f64> {
    let dim = policy.features.dim();
    let na = policy.num_actions();
    let mut grad = Array2::zeros((dim, na));
    let mut cache: Vec<Option<Array1<f64>>> = vec![None; policy.features.num_states()];
    for step in ds.steps() {
        let probs = cache[step.state]
            .get_or_insert_with(|| policy.probs(step.state))
            .clone();
        let phi = policy.features.row(step.state);
        for b in 0..na {
            let coeff = probs[b] - if b == step.action { 1.0 } else { 0.0 };
            for (d, &f) in phi.iter().enumerate() {
                grad[[d, b]] += f * coeff;
            }
        }
    }
    grad.scaled_add(2.0 * weight_decay, policy.theta());
    grad
}

/// Gradient-descent schedule for [`bc_mle_train`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrainConfig {
    pub learning_rate: f64,
    pub steps: usize,
    /// Coefficient λ of the ‖θ‖² penalty inside the objective.
    pub weight_decay: f64,
    /// Trace cadence in steps (0: final row only).
    pub eval_every: usize,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            learning_rate: 0.5,
            steps: 5000,
            weight_decay: 0.0,
            eval_every: 0,
        }
    }
}

/// Exact-evaluation context for training traces.
pub struct BcEval<'a> {
    pub mdp: &'a TabularMdp,
    pub expert_value: f64,
}

/// One trace record from the maximum-likelihood trainer.
#[derive(Debug, Clone, Copy)]
pub struct BcTraceRow {
    pub step: u64,
    /// Negative log-likelihood term, penalty excluded.
    pub nll: f64,
    /// Penalty term λ‖θ‖².
    pub reg: f64,
    /// Expert value minus current policy value (NaN without a context).
    pub value_gap: f64,
}

/// Full-batch gradient descent on [`mle_loss`]. Deterministic: parameters
/// start at zero (the uniform policy) and the data order is fixed.
pub fn bc_mle_train(
    ds: &Dataset,
    features: FeatureTable,
    num_actions: usize,
    cfg: &TrainConfig,
    eval: Option<&BcEval<'_>>,
) -> Result<(LinearSoftmaxPolicy, Vec<BcTraceRow>)> {
    if cfg.learning_rate <= 0.0 {
        return Err(Error::Argument("learning rate must be positive".into()));
    }
    if cfg.weight_decay < 0.0 {
        return Err(Error::Argument("weight decay must be nonnegative".into()));
    }
    for step in ds.steps() {
        if step.state >= features.num_states() || step.action >= num_actions {
            return Err(Error::Shape(format!(
                "dataset step (s={}, a={}) outside feature table ({} states) \
                 or action space ({num_actions})",
                step.state,
                step.action,
                features.num_states()
            )));
        }
    }
    let mut policy = LinearSoftmaxPolicy::new(features, num_actions)?;
    let mut trace = Vec::new();
    for step in 0..cfg.steps {
        let grad = mle_gradient(ds, &policy, cfg.weight_decay);
        if grad.iter().any(|v| !v.is_finite()) {
            return Err(Error::Divergence {
                step,
                detail: "non-finite gradient in maximum-likelihood training".into(),
            });
        }
        policy.theta.scaled_add(-cfg.learning_rate, &grad);
        if policy.theta.iter().any(|v| !v.is_finite()) {
            return Err(Error::Divergence {
                step,
                detail: "non-finite parameters in maximum-likelihood training".into(),
            });
        }
        let record =
            (cfg.eval_every > 0 && (step + 1) % cfg.eval_every == 0) || step + 1 == cfg.steps;
        if record {
            let value_gap = match eval {
                Some(ctx) => {
                    let tabular = policy.to_policy(ctx.mdp.horizon())?;
                    ctx.expert_value - policy_value(ctx.mdp, &tabular)?
                }
                None => f64::NAN,
            };
            trace.push(BcTraceRow {
                step: (step + 1) as u64,
                nll: policy.nll(ds),
                reg: policy.penalty(cfg.weight_decay),
                value_gap,
            });
        }
    }
    Ok((policy, trace))
}

/// Exact value shortfall of `learner` against `expert` on `mdp`.
pub fn value_gap(mdp: &TabularMdp, expert: &Policy, learner: &Policy) -> Result<f64> {
    Ok(policy_value(mdp, expert)? - policy_value(mdp, learner)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datasets::{collect_expert, Step, Trajectory};
    use crate::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};
    use approx::assert_abs_diff_eq;
    use rand::Rng;

    fn dims(ns: usize, na: usize, h: usize) -> Dims {
        Dims {
            num_states: ns,
            num_actions: na,
            horizon: h,
        }
    }

    fn ds_from_steps(steps: Vec<Vec<Step>>, horizon: usize) -> Dataset {
        let trajs = steps
            .into_iter()
            .map(|steps| Trajectory { steps })
            .collect();
        Dataset::new(trajs, horizon, false, None).unwrap()
    }

    fn step(h: usize, state: usize, action: usize, next_state: usize) -> Step {
        Step {
            h,
            state,
            action,
            next_state,
        }
    }

    #[test]
    fn counting_point_mass_and_frequency_examples() {
        // State 0 at t=0 seen twice with action 2: point mass on 2.
        // State 1 at t=1 seen with actions (2, 2, 1): (0, 1/3, 2/3).
        let ds = ds_from_steps(
            vec![
                vec![step(0, 0, 2, 1), step(1, 1, 2, 2)],
                vec![step(0, 0, 2, 1), step(1, 1, 2, 2)],
                vec![step(1, 1, 1, 0)],
            ],
            2,
        );
        let policy = bc_counting(&ds, dims(3, 3, 2), CountingMode::PerTimeStep).unwrap();
        assert_abs_diff_eq!(policy.prob(0, 0, 2), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(policy.prob(0, 0, 0), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(policy.prob(1, 1, 2), 2.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(policy.prob(1, 1, 1), 1.0 / 3.0, epsilon = 1e-15);
        // Unvisited (t, s) cells fall back to uniform.
        for a in 0..3 {
            assert_abs_diff_eq!(policy.prob(1, 0, a), 1.0 / 3.0, epsilon = 1e-15);
            assert_abs_diff_eq!(policy.prob(0, 2, a), 1.0 / 3.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn counting_on_empty_dataset_is_uniform_everywhere() {
        let ds = Dataset::new(Vec::new(), 2, false, None).unwrap();
        for mode in [CountingMode::PerTimeStep, CountingMode::Aggregated] {
            let policy = bc_counting(&ds, dims(2, 4, 2), mode).unwrap();
            for h in 0..2 {
                for s in 0..2 {
                    for a in 0..4 {
                        assert_abs_diff_eq!(policy.prob(h, s, a), 0.25, epsilon = 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn aggregated_counting_pools_time_steps() {
        // Same state, different actions at different times: per-time-step
        // keeps them separate, aggregated pools to (1/2, 1/2).
        let ds = ds_from_steps(vec![vec![step(0, 0, 0, 0), step(1, 0, 1, 0)]], 2);
        let per = bc_counting(&ds, dims(1, 2, 2), CountingMode::PerTimeStep).unwrap();
        assert_abs_diff_eq!(per.prob(0, 0, 0), 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(per.prob(1, 0, 1), 1.0, epsilon = 1e-15);
        let agg = bc_counting(&ds, dims(1, 2, 2), CountingMode::Aggregated).unwrap();
        for h in 0..2 {
            assert_abs_diff_eq!(agg.prob(h, 0, 0), 0.5, epsilon = 1e-15);
            assert_abs_diff_eq!(agg.prob(h, 0, 1), 0.5, epsilon = 1e-15);
        }
    }

    #[test]
    fn mle_gradient_matches_finite_differences() {
        let mdp = build_env(&EnvSpec {
            family: EnvFamily::Random,
            num_states: 4,
            num_actions: 3,
            horizon: 3,
            grid_width: None,
            slip: None,
            num_initial_states: 4,
            seed: 7,
        })
        .unwrap();
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 5).unwrap();
        let features = FeatureTable::one_hot_with_noise(4, 5, 99);
        let mut policy = LinearSoftmaxPolicy::new(features, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for v in policy.theta_mut().iter_mut() {
            let z: f64 = StandardNormal.sample(&mut rng);
            *v = 0.7 * z;
        }
        let lambda = 0.05;
        let grad = mle_gradient(&ds, &policy, lambda);
        let h_step = 1e-6;
        for _ in 0..20 {
            let d = rng.random_range(0..policy.features().dim());
            let b = rng.random_range(0..3);
            let mut up = policy.clone();
            up.theta_mut()[[d, b]] += h_step;
            let mut down = policy.clone();
            down.theta_mut()[[d, b]] -= h_step;
            let fd = (mle_loss(&ds, &up, lambda) - mle_loss(&ds, &down, lambda)) / (2.0 * h_step);
            let an = grad[[d, b]];
            let scale = an.abs().max(fd.abs()).max(1e-6);
            assert!(
                (fd - an).abs() / scale <= 1e-4,
                "grad at ({d},{b}): analytic {an}, finite-diff {fd}"
            );
        }
    }

    #[test]
    fn one_hot_mle_recovers_counting_policy() {
        let mdp = build_env(&EnvSpec {
            family: EnvFamily::Random,
            num_states: 4,
            num_actions: 3,
            horizon: 4,
            grid_width: None,
            slip: None,
            num_initial_states: 4,
            seed: 20,
        })
        .unwrap();
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 6, 8).unwrap();
        let counting = bc_counting(&ds, mdp.dims(), CountingMode::Aggregated).unwrap();
        let cfg = TrainConfig {
            learning_rate: 0.05,
            steps: 50_000,
            weight_decay: 0.0,
            eval_every: 0,
        };
        let (policy, trace) = bc_mle_train(&ds, FeatureTable::one_hot(4), 3, &cfg, None).unwrap();
        let tabular = policy.to_policy(mdp.horizon()).unwrap();
        // With identity features the maximum-likelihood optimum is the
        // pooled counting policy; check total variation at visited states.
        let counts = visitation(&ds, mdp.dims()).unwrap();
        for s in 0..4 {
            if counts.aggregated_state_count(s) == 0 {
                continue;
            }
            let tv: f64 = (0..3)
                .map(|a| (tabular.prob(0, s, a) - counting.prob(0, s, a)).abs())
                .sum::<f64>()
                * 0.5;
            assert!(tv <= 1e-3, "state {s}: tv {tv}");
        }
        assert!(trace.last().unwrap().nll <= mle_loss(&ds, &policy, 0.0) + 1e-9);
    }

    #[test]
    fn single_demonstration_saturates_toward_point_mass() {
        let ds = ds_from_steps(vec![vec![step(0, 0, 1, 0)]], 1);
        let cfg = TrainConfig {
            learning_rate: 0.5,
            steps: 50_000,
            weight_decay: 0.0,
            eval_every: 0,
        };
        let (policy, _) = bc_mle_train(&ds, FeatureTable::one_hot(1), 3, &cfg, None).unwrap();
        assert!(policy.probs(0)[1] >= 0.999);
    }

    #[test]
    fn weight_decay_shrinks_parameters_monotonically() {
        let ds = ds_from_steps(
            vec![
                vec![step(0, 0, 1, 1), step(1, 1, 0, 0)],
                vec![step(0, 0, 1, 1)],
            ],
            2,
        );
        let norms: Vec<f64> = [0.0, 0.1, 1.0]
            .iter()
            .map(|&lambda| {
                let cfg = TrainConfig {
                    learning_rate: 0.1,
                    steps: 2000,
                    weight_decay: lambda,
                    eval_every: 0,
                };
                let (policy, _) =
                    bc_mle_train(&ds, FeatureTable::one_hot(2), 2, &cfg, None).unwrap();
                policy.theta().iter().map(|v| v * v).sum::<f64>().sqrt()
            })
            .collect();
        assert!(norms[1] < norms[0]);
        assert!(norms[2] < norms[1]);
    }

    #[test]
    fn huge_weight_decay_pins_the_uniform_policy() {
        let ds = ds_from_steps(vec![vec![step(0, 0, 1, 1)], vec![step(0, 1, 0, 0)]], 1);
        let cfg = TrainConfig {
            learning_rate: 1e-5,
            steps: 3000,
            weight_decay: 1e4,
            eval_every: 0,
        };
        let (policy, _) = bc_mle_train(&ds, FeatureTable::one_hot(2), 2, &cfg, None).unwrap();
        for s in 0..2 {
            let probs = policy.probs(s);
            for a in 0..2 {
                assert_abs_diff_eq!(probs[a], 0.5, epsilon = 1e-3);
            }
        }
    }

    #[test]
    fn noise_features_transfer_preferences_to_unvisited_states() {
        // Train on a dataset covering only state 0; with noise columns and
        // no penalty the unvisited state inherits a non-uniform policy.
        let ds = ds_from_steps(vec![vec![step(0, 0, 1, 1)]; 8], 1);
        let features = FeatureTable::one_hot_with_noise(2, 6, 5);
        let cfg = TrainConfig {
            learning_rate: 0.2,
            steps: 4000,
            weight_decay: 0.0,
            eval_every: 0,
        };
        let (unreg, _) = bc_mle_train(&ds, features.clone(), 2, &cfg, None).unwrap();
        let drift: f64 = (unreg.probs(1)[0] - 0.5).abs();
        assert!(drift > 0.05, "unvisited state stayed near uniform: {drift}");
        let reg_cfg = TrainConfig {
            weight_decay: 1e-1,
            ..cfg
        };
        let (reg, _) = bc_mle_train(&ds, features, 2, &reg_cfg, None).unwrap();
        let reg_drift: f64 = (reg.probs(1)[0] - 0.5).abs();
        assert!(
            reg_drift < drift,
            "penalty did not reduce drift: {reg_drift} vs {drift}"
        );
    }

    #[test]
    fn trainer_records_value_gap_against_expert() {
        let mdp = build_env(&EnvSpec {
            family: EnvFamily::DetChain,
            num_states: 5,
            num_actions: 2,
            horizon: 4,
            grid_width: None,
            slip: None,
            num_initial_states: 1,
            seed: 3,
        })
        .unwrap();
        let sol = optimal_expert(&mdp).unwrap();
        let expert_value = policy_value(&mdp, &sol.policy).unwrap();
        let ds = collect_expert(&mdp, &sol.policy, 3, 6).unwrap();
        let cfg = TrainConfig {
            learning_rate: 0.5,
            steps: 3000,
            weight_decay: 0.0,
            eval_every: 1000,
        };
        let eval = BcEval {
            mdp: &mdp,
            expert_value,
        };
        let (_, trace) = bc_mle_train(&ds, FeatureTable::one_hot(5), 2, &cfg, Some(&eval)).unwrap();
        assert_eq!(trace.len(), 3);
        let last = trace.last().unwrap();
        assert!(last.value_gap.abs() <= 0.05 * expert_value);
        assert!(last.value_gap >= -1e-9);
    }

    #[test]
    fn value_gap_is_zero_for_identical_policies() {
        let mdp = build_env(&EnvSpec {
            family: EnvFamily::Random,
            num_states: 3,
            num_actions: 2,
            horizon: 3,
            grid_width: None,
            slip: None,
            num_initial_states: 3,
            seed: 1,
        })
        .unwrap();
        let expert = optimal_expert(&mdp).unwrap().policy;
        assert_abs_diff_eq!(
            value_gap(&mdp, &expert, &expert).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }
}
