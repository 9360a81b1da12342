//! Saddle-point distribution matching over tabular MDPs.
//!
//! The objective family implemented here matches the learner's state-action
//! distribution to the expert's by optimizing a two-player objective: a dual
//! variable ν over state-action pairs is minimized while softmax policy
//! logits are maximized. The population form is the Donsker-Varadhan dual
//! of the reverse KL divergence between occupancy measures (see
//! [`dv_dual_value`]); the empirical forms here replace expectations with
//! dataset averages.
//!
//! Three empirical objectives are provided:
//!
//! * [`offline_loss`] — expert-data-only objective with discount γ; the
//!   Bellman backup for a sample uses the recorded successor state, so a
//!   discounted run needs temporally consecutive (complete) trajectories.
//! * [`gamma0_loss`] — the γ = 0 special case (same code path); needs no
//!   successor structure and works on subsampled data.
//! * [`mix_loss`] — the online variant mixing expert data with replay-buffer
//!   data at rate α, with Bellman backups computed exactly from the known
//!   transition kernel.
//!
//! All three normalize empirical sums to means. The printed forms of these
//! objectives are often written with bare sums over samples; a bare sum
//! makes the two terms scale differently with the sample count, which
//! destroys shift invariance (adding a constant to ν would change the loss
//! by `(1 − T)·c`) and unbalances the two players' gradients. With means,
//! adding a constant to every ν entry leaves the γ = 0 loss exactly
//! unchanged (`c − c = 0`), the saddle point sits at a finite value, and
//! gradient descent-ascent converges to the counting (behavioral-cloning)
//! policy on visited states — the reduction the experiments verify.
//!
//! Terminal convention: ν of the step after the last one is zero, so the
//! Bellman term vanishes at the final step of an episode.

use ndarray::{Array2, Array3, Axis};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::datasets::{Dataset, Visitation};
use crate::error::{Error, Result};
use crate::mdp::{bellman_nu_unchecked, policy_value, sample_index, Dims, Policy, TabularMdp};

/// Dual variable ν(s, a), optionally time-indexed.
///
/// Values are always stored with shape `[H, S, A]`. In stationary mode all
/// time slices are kept identical: updates aggregate gradients across time
/// and apply one shared change, so a single code path serves both modes.
#[derive(Debug, Clone)]
pub struct NuTable {
    values: Array3<f64>,
    stationary: bool,
}

fn apply_update(values: &mut Array3<f64>, stationary: bool, grad: &Array3<f64>, factor: f64) {
    if stationary {
        let shared = grad.sum_axis(Axis(0));
        let horizon = values.dim().0;
        for h in 0..horizon {
            values
                .slice_mut(ndarray::s![h, .., ..])
                .scaled_add(factor, &shared);
        }
    } else {
        values.scaled_add(factor, grad);
    }
}

impl NuTable {
    /// All-zero table.
    pub fn zeros(dims: Dims, stationary: bool) -> Self {
        NuTable {
            values: Array3::zeros((dims.horizon, dims.num_states, dims.num_actions)),
            stationary,
        }
    }

    /// Independent standard-normal entries scaled by `scale` (one shared
    /// slice in stationary mode).
    pub fn random<R: Rng>(dims: Dims, stationary: bool, scale: f64, rng: &mut R) -> Self {
        let mut table = NuTable::zeros(dims, stationary);
        if stationary {
            let shared = Array2::from_shape_fn((dims.num_states, dims.num_actions), |_| {
                let z: f64 = StandardNormal.sample(rng);
                scale * z
            });
            for h in 0..dims.horizon {
                table
                    .values
                    .slice_mut(ndarray::s![h, .., ..])
                    .assign(&shared);
            }
        } else {
            for v in table.values.iter_mut() {
                let z: f64 = StandardNormal.sample(rng);
                *v = scale * z;
            }
        }
        table
    }

    pub fn dims(&self) -> Dims {
        let (h, s, a) = self.values.dim();
        Dims {
            num_states: s,
            num_actions: a,
            horizon: h,
        }
    }

    pub fn stationary(&self) -> bool {
        self.stationary
    }

    pub fn value(&self, h: usize, s: usize, a: usize) -> f64 {
        self.values[[h, s, a]]
    }

    /// Sets one entry (every time slice in stationary mode).
    pub fn set(&mut self, h: usize, s: usize, a: usize, v: f64) {
        if self.stationary {
            let horizon = self.values.dim().0;
            for t in 0..horizon {
                self.values[[t, s, a]] = v;
            }
        } else {
            self.values[[h, s, a]] = v;
        }
    }

    pub fn values(&self) -> &Array3<f64> {
        &self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    fn step(&mut self, grad: &Array3<f64>, factor: f64) {
        apply_update(&mut self.values, self.stationary, grad, factor);
    }
}

/// Softmax policy logits, same storage scheme as [`NuTable`].
#[derive(Debug, Clone)]
pub struct PolicyLogits {
    values: Array3<f64>,
    stationary: bool,
}

impl PolicyLogits {
    pub fn zeros(dims: Dims, stationary: bool) -> Self {
        PolicyLogits {
            values: Array3::zeros((dims.horizon, dims.num_states, dims.num_actions)),
            stationary,
        }
    }

    pub fn dims(&self) -> Dims {
        let (h, s, a) = self.values.dim();
        Dims {
            num_states: s,
            num_actions: a,
            horizon: h,
        }
    }

    pub fn stationary(&self) -> bool {
        self.stationary
    }

    pub fn value(&self, h: usize, s: usize, a: usize) -> f64 {
        self.values[[h, s, a]]
    }

    /// Sets one entry (every time slice in stationary mode).
    pub fn set(&mut self, h: usize, s: usize, a: usize, v: f64) {
        if self.stationary {
            let horizon = self.values.dim().0;
            for t in 0..horizon {
                self.values[[t, s, a]] = v;
            }
        } else {
            self.values[[h, s, a]] = v;
        }
    }

    pub fn values(&self) -> &Array3<f64> {
        &self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Materializes the induced policy: row-wise max-shifted softmax.
    pub fn to_policy(&self) -> Result<Policy> {
        let (horizon, ns, na) = self.values.dim();
        let mut probs = Array3::zeros((horizon, ns, na));
        for h in 0..horizon {
            for s in 0..ns {
                let row = self.values.slice(ndarray::s![h, s, ..]);
                let max = row.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                if !max.is_finite() {
                    return Err(Error::Divergence {
                        step: 0,
                        detail: format!("non-finite logits at (h={h}, s={s})"),
                    });
                }
                let mut total = 0.0;
                for a in 0..na {
                    let e = (self.values[[h, s, a]] - max).exp();
                    probs[[h, s, a]] = e;
                    total += e;
                }
                for a in 0..na {
                    probs[[h, s, a]] /= total;
                }
            }
        }
        Policy::non_stationary(probs)
    }

    fn step(&mut self, grad: &Array3<f64>, factor: f64) {
        apply_update(&mut self.values, self.stationary, grad, factor);
    }
}

/// Full optimization state of the two-player objective.
#[derive(Debug, Clone)]
pub struct SaddleState {
    pub nu: NuTable,
    pub logits: PolicyLogits,
    /// Step size for the ν (descent) player.
    pub nu_lr: f64,
    /// Step size for the policy-logit (ascent) player.
    pub policy_lr: f64,
    /// Decoupled weight decay applied to ν each update:
    /// ν ← (1 − 2·lr·λ)·ν − lr·∇. The tabular stand-in for the network
    /// regularizers used by neural implementations of this objective.
    pub nu_weight_decay: f64,
    /// Number of optimizer steps taken so far.
    pub step: usize,
}

impl SaddleState {
    /// Zero-initialized state (uniform policy) with default step sizes 0.1.
    pub fn new(dims: Dims, nu_stationary: bool, policy_stationary: bool) -> Self {
        SaddleState {
            nu: NuTable::zeros(dims, nu_stationary),
            logits: PolicyLogits::zeros(dims, policy_stationary),
            nu_lr: 0.1,
            policy_lr: 0.1,
            nu_weight_decay: 0.0,
            step: 0,
        }
    }

    pub fn with_learning_rates(mut self, nu_lr: f64, policy_lr: f64) -> Self {
        self.nu_lr = nu_lr;
        self.policy_lr = policy_lr;
        self
    }

    /// The current policy induced by the logits.
    pub fn policy(&self) -> Result<Policy> {
        self.logits.to_policy()
    }
}

/// One environment transition kept for off-policy reuse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReplayTuple {
    pub h: usize,
    pub state: usize,
    pub action: usize,
    pub next_state: usize,
}

/// Fixed-capacity ring buffer of transitions with seeded uniform sampling.
#[derive(Debug, Clone)]
pub struct ReplayBuffer {
    data: Vec<ReplayTuple>,
    capacity: usize,
    inserted: u64,
}

impl ReplayBuffer {
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::Argument("replay capacity must be positive".into()));
        }
        Ok(ReplayBuffer {
            data: Vec::with_capacity(capacity.min(1024)),
            capacity,
            inserted: 0,
        })
    }

    pub fn push(&mut self, tuple: ReplayTuple) {
        if self.data.len() < self.capacity {
            self.data.push(tuple);
        } else {
            let slot = (self.inserted % self.capacity as u64) as usize;
            self.data[slot] = tuple;
        }
        self.inserted += 1;
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    /// Total number of pushes, including overwritten ones.
    pub fn inserted(&self) -> u64 {
        self.inserted
    }

    /// Uniform sample of `n` stored tuples, with replacement.
    pub fn sample<R: Rng>(&self, n: usize, rng: &mut R) -> Result<Vec<ReplayTuple>> {
        if self.data.is_empty() {
            return Err(Error::Argument(
                "cannot sample from an empty replay buffer".into(),
            ));
        }
        Ok((0..n)
            .map(|_| self.data[rng.random_range(0..self.data.len())])
            .collect())
    }
}

/// Configuration of the mixed expert/replay objective.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MixConfig {
    /// Replay share α of the mixture distribution; must lie in [0, 1).
    pub alpha: f64,
    /// Replay tuples sampled per loss evaluation.
    pub replay_batch: usize,
    /// Environment transitions collected between optimizer steps during
    /// online training.
    pub env_steps_per_update: usize,
    /// Ring-buffer capacity for online training.
    pub replay_capacity: usize,
}

impl MixConfig {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&alpha) {
            return Err(Error::Argument(format!("alpha {alpha} must lie in [0, 1)")));
        }
        Ok(MixConfig {
            alpha,
            replay_batch: 64,
            env_steps_per_update: 1,
            replay_capacity: 10_000,
        })
    }

    fn validate(&self) -> Result<()> {
        if !(0.0..1.0).contains(&self.alpha) {
            return Err(Error::Argument(format!(
                "alpha {} must lie in [0, 1)",
                self.alpha
            )));
        }
        if self.alpha > 0.0 && self.replay_batch == 0 {
            return Err(Error::Argument(
                "replay_batch must be positive when alpha > 0".into(),
            ));
        }
        Ok(())
    }
}

struct LossEval {
    loss: f64,
    grad_nu: Option<Array3<f64>>,
    grad_logits: Option<Array3<f64>>,
}

fn check_dataset_bounds(ds: &Dataset, dims: Dims) -> Result<()> {
    if ds.total_steps() == 0 {
        return Err(Error::Data("dataset has no steps".into()));
    }
    if ds.horizon() != dims.horizon {
        return Err(Error::Shape(format!(
            "dataset horizon {} does not match table horizon {}",
            ds.horizon(),
            dims.horizon
        )));
    }
    for step in ds.steps() {
        if step.state >= dims.num_states
            || step.next_state >= dims.num_states
            || step.action >= dims.num_actions
            || step.h >= dims.horizon
        {
            return Err(Error::Shape(format!(
                "dataset step (h={}, s={}, a={}, s'={}) outside dims {dims:?}",
                step.h, step.state, step.action, step.next_state
            )));
        }
    }
    Ok(())
}

/// Mean of `E_{a ~ π(·|h,s)}[ν(h, s, a)]` rows, precomputed per (h, s).
fn policy_nu_means(nu: &NuTable, policy: &Policy) -> Array2<f64> {
    (policy.probs() * nu.values()).sum_axis(Axis(2))
}

/// Expert-data-only objective with sampled Bellman backups, plus gradients.
fn offline_eval(
    ds: &Dataset,
    nu: &NuTable,
    policy: &Policy,
    gamma: f64,
    want_grads: bool,
) -> Result<LossEval> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::Argument(format!("gamma {gamma} must lie in [0, 1)")));
    }
    let dims = nu.dims();
    check_dataset_bounds(ds, dims)?;
    if gamma > 0.0 && !ds.complete() {
        return Err(Error::Data(
            "cannot form Bellman term: discounted objective needs complete \
             (temporally consecutive) trajectories, but the dataset is subsampled \
             or partial"
                .into(),
        ));
    }
    let n = ds.total_steps() as f64;
    let lin = policy_nu_means(nu, policy);
    let horizon = dims.horizon;

    // δ per sample: ν(h, s, a) − γ·E_{ã ~ π(·|h+1, s')}[ν(h+1, s', ã)],
    // zero Bellman term at the final step of an episode.
    let mut deltas = Vec::with_capacity(ds.total_steps());
    let mut max_delta = f64::NEG_INFINITY;
    for step in ds.steps() {
        let mut delta = nu.value(step.h, step.state, step.action);
        if gamma > 0.0 && step.h + 1 < horizon {
            delta -= gamma * lin[[step.h + 1, step.next_state]];
        }
        if delta > max_delta {
            max_delta = delta;
        }
        deltas.push(delta);
    }
    if !max_delta.is_finite() {
        return Ok(LossEval {
            loss: f64::NAN,
            grad_nu: None,
            grad_logits: None,
        });
    }

    // Max-shifted log of the mean of e^δ.
    let sum_exp: f64 = deltas.iter().map(|d| (d - max_delta).exp()).sum();
    let log_mean_exp = max_delta + (sum_exp / n).ln();

    let mut linear = 0.0;
    for step in ds.steps() {
        linear += lin[[step.h, step.state]];
    }
    let loss = log_mean_exp - (1.0 - gamma) * linear / n;

    if !want_grads {
        return Ok(LossEval {
            loss,
            grad_nu: None,
            grad_logits: None,
        });
    }

    let shape = (dims.horizon, dims.num_states, dims.num_actions);
    let mut grad_nu = Array3::zeros(shape);
    let mut grad_logits = Array3::zeros(shape);
    // d(log-mean-exp)/dδ_i: softmax weight of sample i.
    let weights: Vec<f64> = deltas
        .iter()
        .map(|d| (d - max_delta).exp() / sum_exp)
        .collect();

    for (i, step) in ds.steps().enumerate() {
        let w = weights[i];
        let (h, s, a) = (step.h, step.state, step.action);
        // Log term, ∂δ_i/∂ν.
        grad_nu[[h, s, a]] += w;
        if gamma > 0.0 && h + 1 < horizon {
            let hn = h + 1;
            let sn = step.next_state;
            for b in 0..dims.num_actions {
                let pb = policy.prob(hn, sn, b);
                grad_nu[[hn, sn, b]] -= w * gamma * pb;
                // ∂δ_i/∂logit(hn, sn, b) = −γ·π(b)(ν(b) − E_π ν).
                grad_logits[[hn, sn, b]] -= w * gamma * pb * (nu.value(hn, sn, b) - lin[[hn, sn]]);
            }
        }
        // Linear term: −(1−γ)/N · E_{π(·|h,s)}[ν].
        let scale = (1.0 - gamma) / n;
        for b in 0..dims.num_actions {
            let pb = policy.prob(h, s, b);
            grad_nu[[h, s, b]] -= scale * pb;
            grad_logits[[h, s, b]] -= scale * pb * (nu.value(h, s, b) - lin[[h, s]]);
        }
    }
    Ok(LossEval {
        loss,
        grad_nu: Some(grad_nu),
        grad_logits: Some(grad_logits),
    })
}

/// Mixed expert/replay objective with exact Bellman backups, plus gradients.
#[allow(clippy::too_many_arguments)]
fn mix_eval(
    mdp: &TabularMdp,
    ds: &Dataset,
    batch: &[ReplayTuple],
    nu: &NuTable,
    policy: &Policy,
    gamma: f64,
    alpha: f64,
    want_grads: bool,
) -> Result<LossEval> {
    if !(0.0..1.0).contains(&gamma) {
        return Err(Error::Argument(format!("gamma {gamma} must lie in [0, 1)")));
    }
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Argument(format!("alpha {alpha} must lie in [0, 1)")));
    }
    let dims = nu.dims();
    if mdp.dims() != dims {
        return Err(Error::Shape(format!(
            "mdp dims {:?} do not match table dims {:?}",
            mdp.dims(),
            dims
        )));
    }
    check_dataset_bounds(ds, dims)?;
    if alpha > 0.0 && batch.is_empty() {
        return Err(Error::Argument(
            "mixed objective with alpha > 0 needs a nonempty replay batch".into(),
        ));
    }
    let n = ds.total_steps() as f64;
    let m = batch.len() as f64;
    let lin = policy_nu_means(nu, policy);

    // Exact Bellman value δ(h,s,a) = ν(h,s,a) − γ Σ_{s'} p_h(s'|s,a) E_π[ν(h+1,s',·)].
    let delta_at = |h: usize, s: usize, a: usize| -> f64 {
        nu.value(h, s, a) - bellman_nu_unchecked(mdp, policy, nu, gamma, h, s, a)
    };

    let expert_deltas: Vec<f64> = ds
        .steps()
        .map(|st| delta_at(st.h, st.state, st.action))
        .collect();
    let replay_deltas: Vec<f64> = batch
        .iter()
        .map(|t| delta_at(t.h, t.state, t.action))
        .collect();
    let max_delta = expert_deltas
        .iter()
        .chain(replay_deltas.iter())
        .cloned()
        .fold(f64::NEG_INFINITY, f64::max);
    if !max_delta.is_finite() {
        return Ok(LossEval {
            loss: f64::NAN,
            grad_nu: None,
            grad_logits: None,
        });
    }

    // A = (1−α)·mean_E[e^δ] + α·mean_B[e^δ], max-shifted.
    let expert_exp: f64 = expert_deltas.iter().map(|d| (d - max_delta).exp()).sum();
    let replay_exp: f64 = replay_deltas.iter().map(|d| (d - max_delta).exp()).sum();
    let mixture =
        (1.0 - alpha) * expert_exp / n + if m > 0.0 { alpha * replay_exp / m } else { 0.0 };
    let log_term = max_delta + mixture.ln();

    let mut expert_linear = 0.0;
    for step in ds.steps() {
        expert_linear += lin[[step.h, step.state]];
    }
    let replay_linear: f64 = replay_deltas.iter().sum();
    let loss = log_term
        - (1.0 - alpha) * (1.0 - gamma) * expert_linear / n
        - if m > 0.0 {
            alpha * replay_linear / m
        } else {
            0.0
        };

    if !want_grads {
        return Ok(LossEval {
            loss,
            grad_nu: None,
            grad_logits: None,
        });
    }

    let shape = (dims.horizon, dims.num_states, dims.num_actions);
    let mut grad_nu = Array3::zeros(shape);
    let mut grad_logits = Array3::zeros(shape);

    // Accumulates c · ∂δ(h,s,a)/∂(ν, logits) into the gradient tables.
    let add_delta_grad = |h: usize,
                          s: usize,
                          a: usize,
                          c: f64,
                          grad_nu: &mut Array3<f64>,
                          grad_logits: &mut Array3<f64>| {
        grad_nu[[h, s, a]] += c;
        if gamma > 0.0 && h + 1 < dims.horizon {
            let hn = h + 1;
            for (s2, &p) in mdp.transition(h, s, a).iter().enumerate() {
                if p == 0.0 {
                    continue;
                }
                for b in 0..dims.num_actions {
                    let pb = policy.prob(hn, s2, b);
                    grad_nu[[hn, s2, b]] -= c * gamma * p * pb;
                    grad_logits[[hn, s2, b]] -=
                        c * gamma * p * pb * (nu.value(hn, s2, b) - lin[[hn, s2]]);
                }
            }
        }
    };

    // Log term: softmax weights over the union of both sample sets.
    for (i, step) in ds.steps().enumerate() {
        let u = (1.0 - alpha) / n * (expert_deltas[i] - max_delta).exp() / mixture;
        add_delta_grad(
            step.h,
            step.state,
            step.action,
            u,
            &mut grad_nu,
            &mut grad_logits,
        );
    }
    for (j, t) in batch.iter().enumerate() {
        let v = alpha / m * (replay_deltas[j] - max_delta).exp() / mixture;
        add_delta_grad(t.h, t.state, t.action, v, &mut grad_nu, &mut grad_logits);
    }
    // Replay linear term: −α·mean_B[δ].
    for t in batch.iter() {
        add_delta_grad(
            t.h,
            t.state,
            t.action,
            -alpha / m,
            &mut grad_nu,
            &mut grad_logits,
        );
    }
    // Expert linear term: −(1−α)(1−γ)·mean_E[E_π ν].
    let scale = (1.0 - alpha) * (1.0 - gamma) / n;
    for step in ds.steps() {
        let (h, s) = (step.h, step.state);
        for b in 0..dims.num_actions {
            let pb = policy.prob(h, s, b);
            grad_nu[[h, s, b]] -= scale * pb;
            grad_logits[[h, s, b]] -= scale * pb * (nu.value(h, s, b) - lin[[h, s]]);
        }
    }
    Ok(LossEval {
        loss,
        grad_nu: Some(grad_nu),
        grad_logits: Some(grad_logits),
    })
}

/// Expert-data objective value at the given state.
///
/// `log(mean_t e^{δ_t}) − (1−γ)·mean_t E_{ã∼π(·|s_t)}[ν(s_t, ã)]` where
/// `δ_t = ν(s_t, a_t) − γ·E_{ã∼π(·|s_{t+1})}[ν(s_{t+1}, ã)]` uses the
/// recorded successor and a zero Bellman term at episode ends. Discounted
/// evaluation (γ > 0) requires a complete dataset.
pub fn offline_loss(ds: &Dataset, state: &SaddleState, gamma: f64) -> Result<f64> {
    let policy = state.policy()?;
    Ok(offline_eval(ds, &state.nu, &policy, gamma, false)?.loss)
}

/// Analytic gradients (∂/∂ν, ∂/∂logits) of [`offline_loss`].
pub fn offline_gradients(
    ds: &Dataset,
    state: &SaddleState,
    gamma: f64,
) -> Result<(Array3<f64>, Array3<f64>)> {
    let policy = state.policy()?;
    let eval = offline_eval(ds, &state.nu, &policy, gamma, true)?;
    match (eval.grad_nu, eval.grad_logits) {
        (Some(gn), Some(gl)) => Ok((gn, gl)),
        _ => Err(Error::Divergence {
            step: state.step,
            detail: "non-finite loss while computing gradients".into(),
        }),
    }
}

/// The γ = 0 objective: same code path as [`offline_loss`] with γ fixed at
/// zero. Needs no successor states, so any dataset works.
pub fn gamma0_loss(ds: &Dataset, state: &SaddleState) -> Result<f64> {
    offline_loss(ds, state, 0.0)
}

/// Mixed expert/replay objective value. The replay batch is drawn uniformly
/// from the buffer with the given seed, so identical inputs give identical
/// values. Bellman backups come exactly from the transition kernel.
pub fn mix_loss(
    ds: &Dataset,
    replay: &ReplayBuffer,
    state: &SaddleState,
    gamma: f64,
    cfg: &MixConfig,
    mdp: &TabularMdp,
    seed: u64,
) -> Result<f64> {
    cfg.validate()?;
    let policy = state.policy()?;
    let batch = if cfg.alpha > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        replay.sample(cfg.replay_batch, &mut rng)?
    } else {
        Vec::new()
    };
    Ok(mix_eval(mdp, ds, &batch, &state.nu, &policy, gamma, cfg.alpha, false)?.loss)
}

/// Analytic gradients of [`mix_loss`] under the same seeded batch draw.
pub fn mix_gradients(
    ds: &Dataset,
    replay: &ReplayBuffer,
    state: &SaddleState,
    gamma: f64,
    cfg: &MixConfig,
    mdp: &TabularMdp,
    seed: u64,
) -> Result<(Array3<f64>, Array3<f64>)> {
    cfg.validate()?;
    let policy = state.policy()?;
    let batch = if cfg.alpha > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        replay.sample(cfg.replay_batch, &mut rng)?
    } else {
        Vec::new()
    };
    let eval = mix_eval(mdp, ds, &batch, &state.nu, &policy, gamma, cfg.alpha, true)?;
    match (eval.grad_nu, eval.grad_logits) {
        (Some(gn), Some(gl)) => Ok((gn, gl)),
        _ => Err(Error::Divergence {
            step: state.step,
            detail: "non-finite loss while computing gradients".into(),
        }),
    }
}

/// Which objective a solver run optimizes.
#[derive(Debug, Clone)]
pub enum LossKind {
    /// Expert-only objective with the given discount.
    Offline { gamma: f64 },
    /// Expert-only objective at γ = 0.
    Gamma0,
    /// Mixed expert/replay objective.
    Mix { gamma: f64, cfg: MixConfig },
}

/// Exact-evaluation context for optimizer traces.
pub struct EvalContext {
    /// Value of the demonstrating policy, for gap reporting.
    pub expert_value: f64,
    /// Per-time-step counting policy of the training data; the trace
    /// reports the mean total-variation distance to it on visited cells.
    pub bc: Policy,
}

/// One trace record emitted every `eval_every` optimizer steps.
#[derive(Debug, Clone, Copy)]
pub struct TraceRow {
    pub env_steps: u64,
    pub grad_steps: u64,
    pub loss: f64,
    pub value_gap: f64,
    pub tv_to_bc: f64,
    pub diverged: bool,
}

fn mean_tv_on_visited(policy: &Policy, bc: &Policy, counts: &Visitation) -> f64 {
    let dims = counts.dims();
    let mut total = 0.0;
    let mut cells = 0usize;
    for h in 0..dims.horizon {
        for s in counts.visited_states(h) {
            let mut tv = 0.0;
            for a in 0..dims.num_actions {
                tv += (policy.prob(h, s, a) - bc.prob(h, s, a)).abs();
            }
            total += 0.5 * tv;
            cells += 1;
        }
    }
    if cells == 0 {
        0.0
    } else {
        total / cells as f64
    }
}

fn grads_finite(g: &Array3<f64>) -> bool {
    g.iter().all(|v| v.is_finite())
}

/// Alternating gradient descent-ascent on the chosen objective: each step
/// first descends ν, then ascends the policy logits against the updated ν.
/// Deterministic given the seed (which only the mixed objective's batch
/// sampling consumes). Non-finite losses, gradients, or parameters abort
/// with a divergence error carrying the step index — a reportable outcome
/// for experiments that study optimization failure, not a crash.
#[allow(clippy::too_many_arguments)]
pub fn gda_optimize(
    kind: &LossKind,
    mdp: &TabularMdp,
    ds: &Dataset,
    replay: Option<&ReplayBuffer>,
    mut state: SaddleState,
    steps: usize,
    seed: u64,
    eval_every: usize,
    eval: Option<&EvalContext>,
) -> Result<(SaddleState, Vec<TraceRow>)> {
    if state.nu_lr <= 0.0 || state.policy_lr <= 0.0 {
        return Err(Error::Argument("learning rates must be positive".into()));
    }
    if let LossKind::Mix { cfg, .. } = kind {
        cfg.validate()?;
        if cfg.alpha > 0.0 && replay.is_none_or(|rb| rb.is_empty()) {
            return Err(Error::Argument(
                "mixed objective with alpha > 0 needs a nonempty replay buffer".into(),
            ));
        }
    }
    let counts = match eval {
        Some(_) => Some(crate::datasets::visitation(ds, state.nu.dims())?),
        None => None,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trace = Vec::new();

    let eval_one = |kind: &LossKind,
                    nu: &NuTable,
                    policy: &Policy,
                    batch: &[ReplayTuple],
                    want_grads: bool|
     -> Result<LossEval> {
        match kind {
            LossKind::Offline { gamma } => offline_eval(ds, nu, policy, *gamma, want_grads),
            LossKind::Gamma0 => offline_eval(ds, nu, policy, 0.0, want_grads),
            LossKind::Mix { gamma, cfg } => {
                mix_eval(mdp, ds, batch, nu, policy, *gamma, cfg.alpha, want_grads)
            }
        }
    };

    for step in 0..steps {
        let batch = match kind {
            LossKind::Mix { cfg, .. } if cfg.alpha > 0.0 => {
                replay.unwrap().sample(cfg.replay_batch, &mut rng)?
            }
            _ => Vec::new(),
        };
        let policy = state.policy()?;

        // ν player: descend.
        let nu_eval = eval_one(kind, &state.nu, &policy, &batch, true)?;
        let diverged = |step: usize, detail: &str| Error::Divergence {
            step,
            detail: detail.into(),
        };
        if !nu_eval.loss.is_finite() {
            return Err(diverged(step, "non-finite loss"));
        }
        let grad_nu = nu_eval.grad_nu.expect("gradients requested");
        if !grads_finite(&grad_nu) {
            return Err(diverged(step, "non-finite nu gradient"));
        }
        if state.nu_weight_decay > 0.0 {
            let shrink = 1.0 - 2.0 * state.nu_lr * state.nu_weight_decay;
            state.nu.values.mapv_inplace(|v| v * shrink);
        }
        state.nu.step(&grad_nu, -state.nu_lr);
        if !state.nu.is_finite() {
            return Err(diverged(step, "non-finite nu after update"));
        }

        // Policy player: ascend against the updated ν.
        let pol_eval = eval_one(kind, &state.nu, &policy, &batch, true)?;
        if !pol_eval.loss.is_finite() {
            return Err(diverged(step, "non-finite loss"));
        }
        let grad_logits = pol_eval.grad_logits.expect("gradients requested");
        if !grads_finite(&grad_logits) {
            return Err(diverged(step, "non-finite logit gradient"));
        }
        state.logits.step(&grad_logits, state.policy_lr);
        if !state.logits.is_finite() {
            return Err(diverged(step, "non-finite logits after update"));
        }
        state.step += 1;

        let record = (eval_every > 0 && (step + 1) % eval_every == 0) || step + 1 == steps;
        if record {
            let loss = pol_eval.loss;
            let (value_gap, tv) = match (eval, &counts) {
                (Some(ctx), Some(counts)) => {
                    let policy = state.policy()?;
                    let value = policy_value(mdp, &policy)?;
                    (
                        ctx.expert_value - value,
                        mean_tv_on_visited(&policy, &ctx.bc, counts),
                    )
                }
                _ => (f64::NAN, f64::NAN),
            };
            trace.push(TraceRow {
                env_steps: 0,
                grad_steps: state.step as u64,
                loss,
                value_gap,
                tv_to_bc: tv,
                diverged: false,
            });
        }
    }
    Ok((state, trace))
}

/// Online training schedule.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OnlineConfig {
    /// Number of optimizer steps.
    pub updates: usize,
    /// Trace cadence in optimizer steps (0: final row only).
    pub eval_every: usize,
    pub seed: u64,
}

/// Result of an online training run.
pub struct OnlineRun {
    pub state: SaddleState,
    pub replay: ReplayBuffer,
    pub trace: Vec<TraceRow>,
}

/// Interactive training on the mixed objective: repeatedly act in the MDP
/// with the current policy, store transitions in a replay buffer, and take
/// one descent-ascent step per round. The trace's `env_steps` column counts
/// environment transitions consumed, the interaction-efficiency axis.
/// With `env_steps_per_update = 0` and α = 0 the loop never touches the
/// environment and reproduces the offline optimizer exactly.
pub fn online_train(
    mdp: &TabularMdp,
    ds: &Dataset,
    gamma: f64,
    mix: &MixConfig,
    mut state: SaddleState,
    cfg: &OnlineConfig,
    eval: Option<&EvalContext>,
) -> Result<OnlineRun> {
    mix.validate()?;
    if state.nu_lr <= 0.0 || state.policy_lr <= 0.0 {
        return Err(Error::Argument("learning rates must be positive".into()));
    }
    let counts = match eval {
        Some(_) => Some(crate::datasets::visitation(ds, state.nu.dims())?),
        None => None,
    };
    let mut replay = ReplayBuffer::new(mix.replay_capacity)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let horizon = mdp.horizon();
    let mut env_steps = 0u64;
    // Episode cursor; reset on horizon end.
    let mut cur_h = 0usize;
    let mut cur_s = sample_index(mdp.initial_dist(), &mut rng);
    let mut trace = Vec::new();

    for step in 0..cfg.updates {
        // Interact.
        if mix.env_steps_per_update > 0 {
            let policy = state.policy()?;
            for _ in 0..mix.env_steps_per_update {
                let a = sample_index(policy.row(cur_h, cur_s), &mut rng);
                let s2 = sample_index(mdp.transition(cur_h, cur_s, a), &mut rng);
                replay.push(ReplayTuple {
                    h: cur_h,
                    state: cur_s,
                    action: a,
                    next_state: s2,
                });
                env_steps += 1;
                cur_h += 1;
                if cur_h == horizon {
                    cur_h = 0;
                    cur_s = sample_index(mdp.initial_dist(), &mut rng);
                } else {
                    cur_s = s2;
                }
            }
        }
        if mix.alpha > 0.0 && replay.is_empty() {
            return Err(Error::Argument(
                "mixed objective with alpha > 0 needs environment interaction \
                 (env_steps_per_update is 0 and the buffer is empty)"
                    .into(),
            ));
        }

        // One descent-ascent step on the mixed objective.
        let batch = if mix.alpha > 0.0 {
            replay.sample(mix.replay_batch, &mut rng)?
        } else {
            Vec::new()
        };
        let policy = state.policy()?;
        let diverged = |step: usize, detail: &str| Error::Divergence {
            step,
            detail: detail.into(),
        };
        let nu_eval = mix_eval(mdp, ds, &batch, &state.nu, &policy, gamma, mix.alpha, true)?;
        if !nu_eval.loss.is_finite() {
            return Err(diverged(step, "non-finite loss"));
        }
        let grad_nu = nu_eval.grad_nu.expect("gradients requested");
        if !grads_finite(&grad_nu) {
            return Err(diverged(step, "non-finite nu gradient"));
        }
        if state.nu_weight_decay > 0.0 {
            let shrink = 1.0 - 2.0 * state.nu_lr * state.nu_weight_decay;
            state.nu.values.mapv_inplace(|v| v * shrink);
        }
        state.nu.step(&grad_nu, -state.nu_lr);
        if !state.nu.is_finite() {
            return Err(diverged(step, "non-finite nu after update"));
        }
        let pol_eval = mix_eval(mdp, ds, &batch, &state.nu, &policy, gamma, mix.alpha, true)?;
        if !pol_eval.loss.is_finite() {
            return Err(diverged(step, "non-finite loss"));
        }
        let grad_logits = pol_eval.grad_logits.expect("gradients requested");
        if !grads_finite(&grad_logits) {
            return Err(diverged(step, "non-finite logit gradient"));
        }
        state.logits.step(&grad_logits, state.policy_lr);
        if !state.logits.is_finite() {
            return Err(diverged(step, "non-finite logits after update"));
        }
        state.step += 1;

        let record =
            (cfg.eval_every > 0 && (step + 1) % cfg.eval_every == 0) || step + 1 == cfg.updates;
        if record {
            let (value_gap, tv) = match (eval, &counts) {
                (Some(ctx), Some(counts)) => {
                    let policy = state.policy()?;
                    let value = policy_value(mdp, &policy)?;
                    (
                        ctx.expert_value - value,
                        mean_tv_on_visited(&policy, &ctx.bc, counts),
                    )
                }
                _ => (f64::NAN, f64::NAN),
            };
            trace.push(TraceRow {
                env_steps,
                grad_steps: state.step as u64,
                loss: pol_eval.loss,
                value_gap,
                tv_to_bc: tv,
                diverged: false,
            });
        }
    }
    Ok(OnlineRun {
        state,
        replay,
        trace,
    })
}

/// Dual value `min_x [log E_q[e^x] − E_p[x]]` for two distributions on a
/// common finite support, which equals −KL(p ‖ q). Computed in closed form
/// at the optimum `x* = log(p/q)` and cross-checked against the direct KL
/// sum within 1e-8. Returns `f64::NEG_INFINITY` when p puts mass where q
/// has none (the dual is unbounded below there).
pub fn dv_dual_value(p_exp: &[f64], p_pi: &[f64]) -> Result<f64> {
    if p_exp.len() != p_pi.len() || p_exp.is_empty() {
        return Err(Error::Shape(
            "distributions must share a nonempty support".into(),
        ));
    }
    for (name, dist) in [("expert", p_exp), ("policy", p_pi)] {
        if dist.iter().any(|&v| !(0.0..=1.0 + 1e-9).contains(&v)) {
            return Err(Error::Distribution(format!(
                "{name} distribution has entries outside [0, 1]"
            )));
        }
        let total: f64 = dist.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::Distribution(format!(
                "{name} distribution sums to {total}, not 1"
            )));
        }
    }
    if p_exp
        .iter()
        .zip(p_pi.iter())
        .any(|(&q, &p)| q == 0.0 && p > 0.0)
    {
        return Ok(f64::NEG_INFINITY);
    }
    // Optimal x* = log(p/q) on the support of p; off-support coordinates
    // contribute nothing in the limit. Evaluate both the dual expression
    // and −KL directly and require agreement.
    let mut log_mass = 0.0; // Σ_{p>0} q·e^{x*} = Σ_{p>0} p
    let mut linear = 0.0; // Σ p·x*
    let mut kl = 0.0;
    for (&q, &p) in p_exp.iter().zip(p_pi.iter()) {
        if p > 0.0 {
            let x = (p / q).ln();
            log_mass += q * (p / q);
            linear += p * x;
            kl += p * x;
        }
    }
    let dual = log_mass.ln() - linear;
    let neg_kl = -kl;
    if (dual - neg_kl).abs() > 1e-8 {
        return Err(Error::Inconsistent(format!(
            "dual value {dual} and −KL {neg_kl} disagree beyond 1e-8"
        )));
    }
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bc::{bc_counting, CountingMode};
    use crate::datasets::collect_expert;
    use crate::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};
    use crate::mdp::compute_occupancy;
    use approx::assert_abs_diff_eq;

    fn random_env(ns: usize, na: usize, h: usize, seed: u64) -> TabularMdp {
        build_env(&EnvSpec {
            family: EnvFamily::Random,
            num_states: ns,
            num_actions: na,
            horizon: h,
            grid_width: None,
            slip: None,
            num_initial_states: ns,
            seed,
        })
        .unwrap()
    }

    fn chain_env(ns: usize, na: usize, h: usize, k: usize, seed: u64) -> TabularMdp {
        build_env(&EnvSpec {
            family: EnvFamily::DetChain,
            num_states: ns,
            num_actions: na,
            horizon: h,
            grid_width: None,
            slip: None,
            num_initial_states: k,
            seed,
        })
        .unwrap()
    }

    fn random_state<R: Rng>(dims: Dims, scale: f64, rng: &mut R) -> SaddleState {
        let mut state = SaddleState::new(dims, false, false);
        state.nu = NuTable::random(dims, false, scale, rng);
        for h in 0..dims.horizon {
            for s in 0..dims.num_states {
                for a in 0..dims.num_actions {
                    let z: f64 = StandardNormal.sample(rng);
                    state.logits.set(h, s, a, z * scale);
                }
            }
        }
        state
    }

    #[test]
    fn stationary_tables_keep_slices_identical() {
        let dims = Dims {
            num_states: 3,
            num_actions: 2,
            horizon: 4,
        };
        let mut nu = NuTable::zeros(dims, true);
        let mut grad = Array3::zeros((4, 3, 2));
        grad[[0, 1, 1]] = 2.0;
        grad[[3, 1, 1]] = 1.0;
        nu.step(&grad, -0.5);
        for h in 0..4 {
            // Aggregated gradient 3.0 applied with factor −0.5 to all slices.
            assert_abs_diff_eq!(nu.value(h, 1, 1), -1.5, epsilon = 1e-15);
        }
        nu.set(0, 2, 0, 7.0);
        for h in 0..4 {
            assert_eq!(nu.value(h, 2, 0), 7.0);
        }
    }

    #[test]
    fn zero_nu_gives_zero_loss() {
        let mdp = random_env(4, 3, 5, 3);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 9).unwrap();
        let state = SaddleState::new(mdp.dims(), false, false);
        // Mean normalization: both terms vanish identically at ν ≡ 0.
        assert_abs_diff_eq!(gamma0_loss(&ds, &state).unwrap(), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(
            offline_loss(&ds, &state, 0.7).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn single_sample_deterministic_policy_loss_is_zero_for_any_nu() {
        // One sample, γ = 0, and a policy that is (numerically) a point
        // mass on the demonstrated action: the sample's ν cancels exactly.
        let mdp = chain_env(3, 2, 1, 1, 5);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 1, 1).unwrap();
        let step = *ds.steps().next().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let mut state = random_state(mdp.dims(), 2.0, &mut rng);
            state.logits.set(step.h, step.state, step.action, 60.0);
            let loss = gamma0_loss(&ds, &state).unwrap();
            assert_abs_diff_eq!(loss, 0.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn single_sample_uniform_policy_half_nu_gap() {
        // T = 1, two actions with ν = (1, 0) at the visited state, uniform
        // policy: loss = 1 − 0.5 = 0.5.
        let mdp = chain_env(3, 2, 1, 1, 5);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 1, 1).unwrap();
        let step = *ds.steps().next().unwrap();
        let mut state = SaddleState::new(mdp.dims(), false, false);
        state.nu.set(step.h, step.state, step.action, 1.0);
        let loss = gamma0_loss(&ds, &state).unwrap();
        assert_abs_diff_eq!(loss, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn bc_policy_with_equal_nu_sits_at_zero_loss() {
        // At the saddle's equilibrium configuration — counting policy and
        // all demonstrated ν entries equal — the loss is exactly zero.
        let mdp = chain_env(6, 3, 4, 2, 11);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 4, 17).unwrap();
        let bc = bc_counting(&ds, mdp.dims(), CountingMode::PerTimeStep).unwrap();
        let mut state = SaddleState::new(mdp.dims(), false, false);
        // Push logits to reproduce the counting policy's point masses.
        for h in 0..4 {
            for s in 0..6 {
                for a in 0..3 {
                    if bc.prob(h, s, a) > 0.99 {
                        state.logits.set(h, s, a, 60.0);
                    }
                }
            }
        }
        for step in ds.steps() {
            state.nu.set(step.h, step.state, step.action, 3.25);
        }
        let loss = gamma0_loss(&ds, &state).unwrap();
        assert_abs_diff_eq!(loss, 0.0, epsilon = 1e-9);
    }

    #[test]
    fn gamma0_matches_offline_at_zero_discount() {
        let mdp = random_env(5, 3, 4, 21);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10 {
            let state = random_state(mdp.dims(), 1.0, &mut rng);
            let a = gamma0_loss(&ds, &state).unwrap();
            let b = offline_loss(&ds, &state, 0.0).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-12);
        }
    }

    #[test]
    fn global_nu_shift_leaves_gamma0_loss_unchanged() {
        let mdp = random_env(5, 3, 4, 33);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 2, 7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for shift in [0.5, -3.0, 200.0] {
            let state = random_state(mdp.dims(), 1.0, &mut rng);
            let base = gamma0_loss(&ds, &state).unwrap();
            let mut shifted = state.clone();
            for h in 0..4 {
                for s in 0..5 {
                    for a in 0..3 {
                        shifted.nu.set(h, s, a, state.nu.value(h, s, a) + shift);
                    }
                }
            }
            let moved = gamma0_loss(&ds, &shifted).unwrap();
            assert_abs_diff_eq!(base, moved, epsilon = 1e-9);
        }
    }

    /// Straightforward re-summation of the expert-data objective, written
    /// independently of the optimized implementation (no max shift, direct
    /// probability lookups).
    fn offline_reference(ds: &Dataset, state: &SaddleState, gamma: f64) -> f64 {
        let policy = state.policy().unwrap();
        let dims = state.nu.dims();
        let n = ds.total_steps() as f64;
        let mut sum_exp = 0.0;
        let mut linear = 0.0;
        for step in ds.steps() {
            let mut delta = state.nu.value(step.h, step.state, step.action);
            if step.h + 1 < dims.horizon {
                let mut next = 0.0;
                for a in 0..dims.num_actions {
                    next += policy.prob(step.h + 1, step.next_state, a)
                        * state.nu.value(step.h + 1, step.next_state, a);
                }
                delta -= gamma * next;
            }
            sum_exp += delta.exp();
            let mut cur = 0.0;
            for a in 0..dims.num_actions {
                cur += policy.prob(step.h, step.state, a) * state.nu.value(step.h, step.state, a);
            }
            linear += cur;
        }
        (sum_exp / n).ln() - (1.0 - gamma) * linear / n
    }

    #[test]
    fn offline_loss_matches_independent_summation() {
        let mdp = random_env(4, 3, 5, 41);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 12).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for gamma in [0.0, 0.35, 0.9] {
            let state = random_state(mdp.dims(), 1.5, &mut rng);
            let fast = offline_loss(&ds, &state, gamma).unwrap();
            let slow = offline_reference(&ds, &state, gamma);
            assert_abs_diff_eq!(fast, slow, epsilon = 1e-10);
        }
    }

    #[test]
    fn discounted_offline_rejects_subsampled_data() {
        let mdp = chain_env(8, 3, 6, 2, 2);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 4, 3).unwrap();
        let sub = crate::datasets::subsample(&ds, 3, 0).unwrap();
        let state = SaddleState::new(mdp.dims(), false, false);
        let err = offline_loss(&sub, &state, 0.5).unwrap_err();
        assert!(matches!(err, Error::Data(_)), "got {err:?}");
        assert!(err.to_string().contains("Bellman"));
        // γ = 0 needs no successor structure.
        gamma0_loss(&sub, &state).unwrap();
    }

    /// Independent re-summation of the mixed objective.
    fn mix_reference(
        mdp: &TabularMdp,
        ds: &Dataset,
        batch: &[ReplayTuple],
        state: &SaddleState,
        gamma: f64,
        alpha: f64,
    ) -> f64 {
        let policy = state.policy().unwrap();
        let dims = state.nu.dims();
        let delta = |h: usize, s: usize, a: usize| -> f64 {
            let mut backup = 0.0;
            if h + 1 < dims.horizon {
                for (s2, &p) in mdp.transition(h, s, a).iter().enumerate() {
                    for b in 0..dims.num_actions {
                        backup += p * policy.prob(h + 1, s2, b) * state.nu.value(h + 1, s2, b);
                    }
                }
            }
            state.nu.value(h, s, a) - gamma * backup
        };
        let n = ds.total_steps() as f64;
        let m = batch.len() as f64;
        let expert_mean: f64 = ds
            .steps()
            .map(|s| delta(s.h, s.state, s.action).exp())
            .sum::<f64>()
            / n;
        let replay_mean: f64 = if batch.is_empty() {
            0.0
        } else {
            batch
                .iter()
                .map(|t| delta(t.h, t.state, t.action).exp())
                .sum::<f64>()
                / m
        };
        let mut expert_linear = 0.0;
        for step in ds.steps() {
            for a in 0..dims.num_actions {
                expert_linear +=
                    policy.prob(step.h, step.state, a) * state.nu.value(step.h, step.state, a);
            }
        }
        let replay_linear: f64 = if batch.is_empty() {
            0.0
        } else {
            batch
                .iter()
                .map(|t| delta(t.h, t.state, t.action))
                .sum::<f64>()
                / m
        };
        ((1.0 - alpha) * expert_mean + alpha * replay_mean).ln()
            - (1.0 - alpha) * (1.0 - gamma) * expert_linear / n
            - alpha * replay_linear
    }

    fn filled_buffer(mdp: &TabularMdp, seed: u64, n: usize) -> ReplayBuffer {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rb = ReplayBuffer::new(4096).unwrap();
        let uniform = Policy::uniform(mdp.dims());
        for i in 0..n {
            let traj = crate::mdp::sample_trajectory(mdp, &uniform, seed ^ (i as u64 + 1)).unwrap();
            for st in &traj.steps {
                rb.push(ReplayTuple {
                    h: st.h,
                    state: st.state,
                    action: st.action,
                    next_state: st.next_state,
                });
            }
            let _ = rng.random::<u64>();
        }
        rb
    }

    #[test]
    fn mix_loss_matches_independent_summation() {
        let mdp = random_env(4, 2, 4, 55);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 8).unwrap();
        let rb = filled_buffer(&mdp, 99, 6);
        let mut cfg = MixConfig::new(0.5).unwrap();
        cfg.replay_batch = 16;
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let state = random_state(mdp.dims(), 1.0, &mut rng);
        let fast = mix_loss(&ds, &rb, &state, 0.8, &cfg, &mdp, 777).unwrap();
        let mut batch_rng = ChaCha8Rng::seed_from_u64(777);
        let batch = rb.sample(16, &mut batch_rng).unwrap();
        let slow = mix_reference(&mdp, &ds, &batch, &state, 0.8, 0.5);
        assert_abs_diff_eq!(fast, slow, epsilon = 1e-10);
    }

    #[test]
    fn mix_alpha_zero_equals_offline() {
        // Exact and sampled Bellman backups coincide on deterministic
        // dynamics, and trivially at γ = 0.
        let det = chain_env(7, 3, 5, 3, 14);
        let expert = optimal_expert(&det).unwrap().policy;
        let ds = collect_expert(&det, &expert, 4, 20).unwrap();
        let rb = filled_buffer(&det, 1, 2);
        let cfg = MixConfig::new(0.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for gamma in [0.0, 0.6, 0.95] {
            let state = random_state(det.dims(), 1.2, &mut rng);
            let a = mix_loss(&ds, &rb, &state, gamma, &cfg, &det, 0).unwrap();
            let b = offline_loss(&ds, &state, gamma).unwrap();
            assert_abs_diff_eq!(a, b, epsilon = 1e-10);
        }
        // On stochastic dynamics the two agree at γ = 0.
        let sto = random_env(5, 3, 4, 6);
        let expert = optimal_expert(&sto).unwrap().policy;
        let ds = collect_expert(&sto, &expert, 3, 21).unwrap();
        let rb2 = filled_buffer(&sto, 2, 2);
        let state = random_state(sto.dims(), 1.0, &mut rng);
        let a = mix_loss(&ds, &rb2, &state, 0.0, &cfg, &sto, 0).unwrap();
        let b = gamma0_loss(&ds, &state).unwrap();
        assert_abs_diff_eq!(a, b, epsilon = 1e-10);
    }

    #[test]
    fn mix_zero_nu_gives_zero_loss() {
        let mdp = random_env(4, 2, 3, 77);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 2, 5).unwrap();
        let rb = filled_buffer(&mdp, 50, 4);
        let mut cfg = MixConfig::new(0.4).unwrap();
        cfg.replay_batch = 8;
        let state = SaddleState::new(mdp.dims(), false, false);
        let loss = mix_loss(&ds, &rb, &state, 0.9, &cfg, &mdp, 3).unwrap();
        assert_abs_diff_eq!(loss, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn mix_with_alpha_and_empty_buffer_errors() {
        let mdp = random_env(4, 2, 3, 78);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 2, 5).unwrap();
        let rb = ReplayBuffer::new(16).unwrap();
        let cfg = MixConfig::new(0.5).unwrap();
        let state = SaddleState::new(mdp.dims(), false, false);
        assert!(mix_loss(&ds, &rb, &state, 0.5, &cfg, &mdp, 0).is_err());
    }

    fn fd_check<F>(
        loss_at: F,
        state: &SaddleState,
        grad_nu: &Array3<f64>,
        grad_logits: &Array3<f64>,
        rng: &mut ChaCha8Rng,
    ) where
        F: Fn(&SaddleState) -> f64,
    {
        let dims = state.nu.dims();
        let h_step = 1e-5;
        for _ in 0..20 {
            let h = rng.random_range(0..dims.horizon);
            let s = rng.random_range(0..dims.num_states);
            let a = rng.random_range(0..dims.num_actions);
            // ν coordinate.
            let mut up = state.clone();
            up.nu.set(h, s, a, state.nu.value(h, s, a) + h_step);
            let mut down = state.clone();
            down.nu.set(h, s, a, state.nu.value(h, s, a) - h_step);
            let fd = (loss_at(&up) - loss_at(&down)) / (2.0 * h_step);
            let an = grad_nu[[h, s, a]];
            let scale = an.abs().max(fd.abs()).max(1e-6);
            assert!(
                (fd - an).abs() / scale <= 1e-4,
                "nu grad at ({h},{s},{a}): analytic {an}, finite-diff {fd}"
            );
            // Logit coordinate.
            let mut up = state.clone();
            up.logits.set(h, s, a, state.logits.value(h, s, a) + h_step);
            let mut down = state.clone();
            down.logits
                .set(h, s, a, state.logits.value(h, s, a) - h_step);
            let fd = (loss_at(&up) - loss_at(&down)) / (2.0 * h_step);
            let an = grad_logits[[h, s, a]];
            let scale = an.abs().max(fd.abs()).max(1e-6);
            assert!(
                (fd - an).abs() / scale <= 1e-4,
                "logit grad at ({h},{s},{a}): analytic {an}, finite-diff {fd}"
            );
        }
    }

    #[test]
    fn analytic_gradients_match_finite_differences() {
        let mdp = random_env(4, 3, 4, 91);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 2).unwrap();
        let rb = filled_buffer(&mdp, 5, 5);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        // Expert-only objective, γ = 0 and γ > 0.
        for gamma in [0.0, 0.65] {
            let state = random_state(mdp.dims(), 0.8, &mut rng);
            let (gn, gl) = offline_gradients(&ds, &state, gamma).unwrap();
            fd_check(
                |st| offline_loss(&ds, st, gamma).unwrap(),
                &state,
                &gn,
                &gl,
                &mut rng,
            );
        }
        // Mixed objective.
        let mut cfg = MixConfig::new(0.45).unwrap();
        cfg.replay_batch = 12;
        let state = random_state(mdp.dims(), 0.8, &mut rng);
        let (gn, gl) = mix_gradients(&ds, &rb, &state, 0.8, &cfg, &mdp, 4242).unwrap();
        fd_check(
            |st| mix_loss(&ds, &rb, st, 0.8, &cfg, &mdp, 4242).unwrap(),
            &state,
            &gn,
            &gl,
            &mut rng,
        );
    }

    #[test]
    fn equilibrium_gradients_vanish() {
        // Counting policy (via saturated logits) and equal demonstrated ν:
        // both players' gradients vanish — the equilibrium structure.
        let mdp = chain_env(6, 3, 5, 2, 23);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 40).unwrap();
        let mut state = SaddleState::new(mdp.dims(), false, false);
        for step in ds.steps() {
            state.logits.set(step.h, step.state, step.action, 60.0);
        }
        let (gn, gl) = offline_gradients(&ds, &state, 0.0).unwrap();
        let max_nu = gn.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let max_logit = gl.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(max_nu <= 1e-9, "nu gradient {max_nu}");
        assert!(max_logit <= 1e-9, "logit gradient {max_logit}");
    }

    #[test]
    fn gda_locks_counting_argmax_on_visited_cells() {
        // One complete trajectory, γ = 0: descent-ascent drives the policy
        // argmax to the demonstrated action at every visited cell.
        let mdp = random_env(4, 3, 4, 2024);
        let sol = optimal_expert(&mdp).unwrap();
        let ds = collect_expert(&mdp, &sol.policy, 1, 7).unwrap();
        let bc = bc_counting(&ds, mdp.dims(), CountingMode::PerTimeStep).unwrap();
        let expert_value = policy_value(&mdp, &sol.policy).unwrap();
        let state = SaddleState::new(mdp.dims(), false, false);
        let eval = EvalContext {
            expert_value,
            bc: bc.clone(),
        };
        let (final_state, trace) = gda_optimize(
            &LossKind::Gamma0,
            &mdp,
            &ds,
            None,
            state,
            3000,
            0,
            500,
            Some(&eval),
        )
        .unwrap();
        let policy = final_state.policy().unwrap();
        let counts = crate::datasets::visitation(&ds, mdp.dims()).unwrap();
        for h in 0..4 {
            for s in counts.visited_states(h) {
                assert_eq!(
                    policy.argmax(h, s),
                    bc.argmax(h, s),
                    "argmax mismatch at (t={h}, s={s})"
                );
            }
        }
        let last = trace.last().unwrap();
        assert!(last.tv_to_bc < 0.05, "tv {} too large", last.tv_to_bc);
        assert!(!last.diverged);
    }

    #[test]
    fn gda_is_deterministic_given_seed() {
        let mdp = chain_env(6, 3, 5, 2, 77);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 2, 3).unwrap();
        let run = |seed| {
            let state = SaddleState::new(mdp.dims(), false, false);
            gda_optimize(
                &LossKind::Offline { gamma: 0.5 },
                &mdp,
                &ds,
                None,
                state,
                200,
                seed,
                0,
                None,
            )
            .unwrap()
            .0
        };
        let a = run(5);
        let b = run(5);
        assert_eq!(a.nu.values(), b.nu.values());
        assert_eq!(a.logits.values(), b.logits.values());
    }

    #[test]
    fn gda_reports_divergence_with_absurd_learning_rates() {
        let mdp = random_env(4, 3, 4, 13);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 2, 2).unwrap();
        let state = SaddleState::new(mdp.dims(), false, false).with_learning_rates(1e305, 1e305);
        let err = gda_optimize(
            &LossKind::Offline { gamma: 0.9 },
            &mdp,
            &ds,
            None,
            state,
            50,
            0,
            0,
            None,
        )
        .unwrap_err();
        match err {
            Error::Divergence { step, .. } => assert!(step < 50),
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn stationary_saddle_state_stays_stationary_through_gda() {
        let mdp = chain_env(5, 2, 4, 2, 3);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 2, 6).unwrap();
        let state = SaddleState::new(mdp.dims(), true, true);
        let (state, _) =
            gda_optimize(&LossKind::Gamma0, &mdp, &ds, None, state, 100, 0, 0, None).unwrap();
        for h in 1..4 {
            for s in 0..5 {
                for a in 0..2 {
                    assert_eq!(state.nu.value(h, s, a), state.nu.value(0, s, a));
                    assert_eq!(state.logits.value(h, s, a), state.logits.value(0, s, a));
                }
            }
        }
    }

    #[test]
    fn replay_buffer_ring_semantics_and_seeded_sampling() {
        let mut rb = ReplayBuffer::new(3).unwrap();
        for i in 0..5 {
            rb.push(ReplayTuple {
                h: i,
                state: i,
                action: 0,
                next_state: 0,
            });
        }
        assert_eq!(rb.len(), 3);
        assert_eq!(rb.inserted(), 5);
        // Oldest two entries were overwritten (slots 0 and 1 hold items 3, 4).
        let kept: Vec<usize> = rb
            .sample(64, &mut ChaCha8Rng::seed_from_u64(0))
            .unwrap()
            .iter()
            .map(|t| t.h)
            .collect();
        assert!(kept.iter().all(|&h| h >= 2));
        let a = rb.sample(10, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = rb.sample(10, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn online_with_no_interaction_matches_offline_path() {
        let mdp = chain_env(6, 3, 5, 2, 8);
        let expert = optimal_expert(&mdp).unwrap().policy;
        let ds = collect_expert(&mdp, &expert, 3, 5).unwrap();
        let mut mix = MixConfig::new(0.0).unwrap();
        mix.env_steps_per_update = 0;
        let gamma = 0.5;
        let online = online_train(
            &mdp,
            &ds,
            gamma,
            &mix,
            SaddleState::new(mdp.dims(), false, false),
            &OnlineConfig {
                updates: 150,
                eval_every: 0,
                seed: 4,
            },
            None,
        )
        .unwrap();
        let (offline_state, _) = gda_optimize(
            &LossKind::Offline { gamma },
            &mdp,
            &ds,
            None,
            SaddleState::new(mdp.dims(), false, false),
            150,
            4,
            0,
            None,
        )
        .unwrap();
        // Deterministic dynamics make the exact and sampled Bellman
        // backups identical, so the two paths agree to the last bit.
        for ((a, b), (c, d)) in online
            .state
            .nu
            .values()
            .iter()
            .zip(offline_state.nu.values().iter())
            .zip(
                online
                    .state
                    .logits
                    .values()
                    .iter()
                    .zip(offline_state.logits.values().iter()),
            )
        {
            assert_abs_diff_eq!(*a, *b, epsilon = 1e-12);
            assert_abs_diff_eq!(*c, *d, epsilon = 1e-12);
        }
        assert_eq!(online.replay.len(), 0);
    }

    #[test]
    fn online_training_improves_value_on_chain() {
        let mdp = chain_env(6, 3, 6, 2, 19);
        let sol = optimal_expert(&mdp).unwrap();
        let expert_value = policy_value(&mdp, &sol.policy).unwrap();
        let ds = collect_expert(&mdp, &sol.policy, 5, 77).unwrap();
        let bc = bc_counting(&ds, mdp.dims(), CountingMode::PerTimeStep).unwrap();
        let mut mix = MixConfig::new(0.1).unwrap();
        mix.env_steps_per_update = 6;
        mix.replay_batch = 32;
        let run = online_train(
            &mdp,
            &ds,
            0.5,
            &mix,
            SaddleState::new(mdp.dims(), false, false),
            &OnlineConfig {
                updates: 6000,
                eval_every: 1000,
                seed: 11,
            },
            Some(&EvalContext { expert_value, bc }),
        )
        .unwrap();
        let last = run.trace.last().unwrap();
        assert_eq!(last.env_steps, 36_000);
        assert!(
            last.value_gap <= 0.05 * expert_value,
            "final gap {} vs expert value {}",
            last.value_gap,
            expert_value
        );
        assert!(!run.replay.is_empty());
    }

    #[test]
    fn dv_dual_matches_closed_forms() {
        assert_abs_diff_eq!(
            dv_dual_value(&[0.3, 0.7], &[0.3, 0.7]).unwrap(),
            0.0,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            dv_dual_value(&[0.5, 0.5], &[1.0, 0.0]).unwrap(),
            -(2.0f64.ln()),
            epsilon = 1e-12
        );
        // Support violation: policy mass where the expert has none.
        let v = dv_dual_value(&[1.0, 0.0], &[0.5, 0.5]).unwrap();
        assert_eq!(v, f64::NEG_INFINITY);
    }

    #[test]
    fn dv_dual_matches_gradient_descent_oracle() {
        // Minimize log Σ q·e^x − Σ p·x over x by plain gradient descent
        // and compare with the closed form.
        let mut rng = ChaCha8Rng::seed_from_u64(123);
        for _ in 0..5 {
            let draw = |rng: &mut ChaCha8Rng| {
                let mut v: Vec<f64> = (0..6).map(|_| rng.random::<f64>() + 0.05).collect();
                let s: f64 = v.iter().sum();
                v.iter_mut().for_each(|x| *x /= s);
                let fix: f64 = 1.0 - v.iter().sum::<f64>();
                v[5] += fix;
                v
            };
            let q = draw(&mut rng);
            let p = draw(&mut rng);
            let mut x = vec![0.0f64; 6];
            for _ in 0..10_000 {
                let mass: f64 = q.iter().zip(&x).map(|(qi, xi)| qi * xi.exp()).sum();
                for i in 0..6 {
                    let grad = q[i] * x[i].exp() / mass - p[i];
                    x[i] -= 0.5 * grad;
                }
            }
            let mass: f64 = q.iter().zip(&x).map(|(qi, xi)| qi * xi.exp()).sum();
            let linear: f64 = p.iter().zip(&x).map(|(pi, xi)| pi * xi).sum();
            let gd_value = mass.ln() - linear;
            let closed = dv_dual_value(&q, &p).unwrap();
            assert_abs_diff_eq!(gd_value, closed, epsilon = 1e-6);
        }
    }

    #[test]
    fn dv_dual_equals_negative_kl_on_many_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(2025);
        for _ in 0..100 {
            let n = rng.random_range(2..8);
            let draw = |rng: &mut ChaCha8Rng| {
                let mut v: Vec<f64> = (0..n).map(|_| rng.random::<f64>() + 0.01).collect();
                let s: f64 = v.iter().sum();
                v.iter_mut().for_each(|x| *x /= s);
                let fix: f64 = 1.0 - v.iter().sum::<f64>();
                v[n - 1] += fix;
                v
            };
            let q = draw(&mut rng);
            let p = draw(&mut rng);
            let kl: f64 = p
                .iter()
                .zip(q.iter())
                .filter(|(pi, _)| **pi > 0.0)
                .map(|(pi, qi)| pi * (pi / qi).ln())
                .sum();
            let dual = dv_dual_value(&q, &p).unwrap();
            assert_abs_diff_eq!(dual, -kl, epsilon = 1e-8);
        }
    }

    #[test]
    fn occupancy_kl_shrinks_as_gda_progresses() {
        // End-to-end sanity: the dual value of the *exact* occupancy pair
        // moves toward zero as the policy approaches the counting policy.
        // The forward direction KL(expert ‖ policy) is the finite one here:
        // a softmax policy covers the expert's support, while the reverse
        // direction is infinite whenever the policy leaks mass off it.
        let mdp = chain_env(5, 2, 4, 1, 42);
        let sol = optimal_expert(&mdp).unwrap();
        let ds = collect_expert(&mdp, &sol.policy, 1, 1).unwrap();
        let kl_to_expert = |policy: &Policy| -> f64 {
            let d_exp = compute_occupancy(&mdp, &sol.policy).unwrap();
            let d_pi = compute_occupancy(&mdp, policy).unwrap();
            // Flatten time-slice occupancies into one distribution over
            // (t, s, a) triples, weighting time steps equally.
            let horizon = mdp.horizon() as f64;
            let mut q = Vec::new();
            let mut p = Vec::new();
            for h in 0..mdp.horizon() {
                for s in 0..mdp.num_states() {
                    for a in 0..mdp.num_actions() {
                        q.push(d_pi.prob(h, s, a) / horizon);
                        p.push(d_exp.prob(h, s, a) / horizon);
                    }
                }
            }
            -dv_dual_value(&q, &p).unwrap()
        };
        let state = SaddleState::new(mdp.dims(), false, false);
        let start_kl = kl_to_expert(&state.policy().unwrap());
        let (state, _) =
            gda_optimize(&LossKind::Gamma0, &mdp, &ds, None, state, 2000, 0, 0, None).unwrap();
        let end_kl = kl_to_expert(&state.policy().unwrap());
        assert!(
            end_kl < 0.05 * start_kl,
            "KL barely moved: {start_kl} -> {end_kl}"
        );
    }
}
