//! Finite episodic MDPs with exact, closed-form evaluation.
//!
//! Everything in this crate is built on one canonical representation: an
//! episodic tabular MDP with a fixed horizon, time-indexed transition
//! kernels, bounded rewards, and an explicit initial-state distribution.
//! Because the state and action spaces are finite, occupancy measures and
//! policy values are computed exactly by dynamic programming — no sampling
//! error is involved anywhere except where sampling is the point
//! (trajectory collection).
//!
//! Conventions used throughout the crate:
//!
//! * Time steps are `0..horizon` in memory; serialized formats use 1-based
//!   time indices.
//! * Probabilities are `f64` and validated to sum to one within
//!   [`PROB_TOL`].
//! * Stationary policies are stored expanded to one slice per time step so
//!   that every consumer can iterate a single `[horizon, states, actions]`
//!   layout.

use ndarray::{Array1, Array2, Array3, Array4, ArrayView1, Axis};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::datasets::{Step, Trajectory};
use crate::error::{Error, Result};
use crate::valuedice::NuTable;

/// Tolerance for validating that a probability vector sums to one.
pub const PROB_TOL: f64 = 1e-9;

/// Tolerance for the internal cross-check between the occupancy-based and
/// backward-induction policy values.
pub const VALUE_CHECK_TOL: f64 = 1e-9;

/// State, action, and horizon counts of an MDP, carried around by code
/// that needs shapes but not dynamics (datasets, counting policies).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    pub num_states: usize,
    pub num_actions: usize,
    pub horizon: usize,
}

/// An episodic tabular MDP.
///
/// Transitions are time-indexed (`transitions[[h, s, a, s2]]` is the
/// probability of moving to `s2` when taking `a` in `s` at step `h`), so
/// non-stationary dynamics are representable directly. Rewards depend on
/// state and action only and live in `[0, 1]`. The optional `discount` is
/// used exclusively by the discounted-view operations ([`bellman_nu`] and
/// the saddle-point losses); episodic returns are undiscounted sums over
/// the horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct TabularMdp {
    num_states: usize,
    num_actions: usize,
    horizon: usize,
    transitions: Array4<f64>,
    rewards: Array2<f64>,
    initial_dist: Array1<f64>,
    discount: Option<f64>,
}

fn check_distribution(v: ArrayView1<f64>, what: &str) -> Result<()> {
    let mut sum = 0.0;
    for &p in v {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::Distribution(format!(
                "{what} has entry {p}, expected a finite nonnegative probability"
            )));
        }
        sum += p;
    }
    if (sum - 1.0).abs() > PROB_TOL {
        return Err(Error::Distribution(format!(
            "{what} sums to {sum}, expected 1 within {PROB_TOL}"
        )));
    }
    Ok(())
}

impl TabularMdp {
    /// Validates and assembles an MDP.
    ///
    /// `transitions` has shape `[horizon, states, actions, states]` with
    /// each `(h, s, a)` row a probability distribution; `rewards` has shape
    /// `[states, actions]` with entries in `[0, 1]`; `initial_dist` has
    /// length `states` and sums to one. `discount`, when present, must lie
    /// in `[0, 1)`.
    pub fn new(
        transitions: Array4<f64>,
        rewards: Array2<f64>,
        initial_dist: Array1<f64>,
        discount: Option<f64>,
    ) -> Result<Self> {
        let (horizon, num_states, num_actions, s2) = transitions.dim();
        if horizon == 0 || num_states == 0 || num_actions == 0 {
            return Err(Error::Shape(
                "horizon, states, and actions must all be nonzero".into(),
            ));
        }
        if s2 != num_states {
            return Err(Error::Shape(format!(
                "transition tensor maps {num_states} states onto {s2} states"
            )));
        }
        if rewards.dim() != (num_states, num_actions) {
            return Err(Error::Shape(format!(
                "rewards have shape {:?}, expected ({num_states}, {num_actions})",
                rewards.dim()
            )));
        }
        if initial_dist.len() != num_states {
            return Err(Error::Shape(format!(
                "initial distribution has length {}, expected {num_states}",
                initial_dist.len()
            )));
        }
        for h in 0..horizon {
            for s in 0..num_states {
                for a in 0..num_actions {
                    check_distribution(
                        transitions.slice(ndarray::s![h, s, a, ..]),
                        &format!("transition row (h={h}, s={s}, a={a})"),
                    )?;
                }
            }
        }
        for ((s, a), &r) in rewards.indexed_iter() {
            if !(0.0..=1.0).contains(&r) {
                return Err(Error::Argument(format!(
                    "reward r({s}, {a}) = {r} is outside [0, 1]"
                )));
            }
        }
        check_distribution(initial_dist.view(), "initial distribution")?;
        if let Some(g) = discount {
            if !(0.0..1.0).contains(&g) {
                return Err(Error::Argument(format!("discount {g} is outside [0, 1)")));
            }
        }
        Ok(Self {
            num_states,
            num_actions,
            horizon,
            transitions,
            rewards,
            initial_dist,
            discount,
        })
    }

    pub fn dims(&self) -> Dims {
        Dims {
            num_states: self.num_states,
            num_actions: self.num_actions,
            horizon: self.horizon,
        }
    }

    pub fn num_states(&self) -> usize {
        self.num_states
    }

    pub fn num_actions(&self) -> usize {
        self.num_actions
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn discount(&self) -> Option<f64> {
        self.discount
    }

    /// Returns a copy with the discount replaced.
    pub fn with_discount(mut self, discount: Option<f64>) -> Result<Self> {
        if let Some(g) = discount {
            if !(0.0..1.0).contains(&g) {
                return Err(Error::Argument(format!("discount {g} is outside [0, 1)")));
            }
        }
        self.discount = discount;
        Ok(self)
    }

    /// Transition row `p_h(· | s, a)`.
    pub fn transition(&self, h: usize, s: usize, a: usize) -> ArrayView1<'_, f64> {
        self.transitions.slice(ndarray::s![h, s, a, ..])
    }

    pub fn transitions(&self) -> &Array4<f64> {
        &self.transitions
    }

    pub fn reward(&self, s: usize, a: usize) -> f64 {
        self.rewards[[s, a]]
    }

    pub fn rewards(&self) -> &Array2<f64> {
        &self.rewards
    }

    pub fn initial_dist(&self) -> ArrayView1<'_, f64> {
        self.initial_dist.view()
    }

    /// Serializes to a JSON document with explicit dimensions and flattened
    /// row-major arrays. Finite floating-point values survive a round trip
    /// bit-exactly.
    pub fn to_json(&self) -> String {
        let mirror = MdpSerde {
            num_states: self.num_states,
            num_actions: self.num_actions,
            horizon: self.horizon,
            discount: self.discount,
            transitions: self.transitions.iter().copied().collect(),
            rewards: self.rewards.iter().copied().collect(),
            initial_dist: self.initial_dist.to_vec(),
        };
        serde_json::to_string_pretty(&mirror).expect("serializing plain arrays cannot fail")
    }

    /// Parses the format produced by [`TabularMdp::to_json`], re-running
    /// full validation.
    pub fn from_json(text: &str) -> Result<Self> {
        let mirror: MdpSerde =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let t = Array4::from_shape_vec(
            (
                mirror.horizon,
                mirror.num_states,
                mirror.num_actions,
                mirror.num_states,
            ),
            mirror.transitions,
        )
        .map_err(|e| Error::Shape(e.to_string()))?;
        let r = Array2::from_shape_vec((mirror.num_states, mirror.num_actions), mirror.rewards)
            .map_err(|e| Error::Shape(e.to_string()))?;
        let p0 = Array1::from_vec(mirror.initial_dist);
        Self::new(t, r, p0, mirror.discount)
    }
}

#[derive(Serialize, Deserialize)]
struct MdpSerde {
    num_states: usize,
    num_actions: usize,
    horizon: usize,
    discount: Option<f64>,
    transitions: Vec<f64>,
    rewards: Vec<f64>,
    initial_dist: Vec<f64>,
}

/// Whether a policy was built from one shared table or one table per step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolicyKind {
    Stationary,
    NonStationary,
}

/// A (possibly non-stationary) stochastic policy.
///
/// Action probabilities are stored as `probs[[h, s, a]]`; stationary
/// policies are expanded to identical slices so downstream code has a
/// single layout to handle. Every `(h, s)` row is validated to be a
/// probability distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct Policy {
    probs: Array3<f64>,
    kind: PolicyKind,
}

impl Policy {
    /// Builds a non-stationary policy from per-step tables.
    pub fn non_stationary(probs: Array3<f64>) -> Result<Self> {
        Self::validated(probs, PolicyKind::NonStationary)
    }

    /// Expands one `[states, actions]` table across `horizon` steps.
    pub fn stationary(table: Array2<f64>, horizon: usize) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::Shape("horizon must be nonzero".into()));
        }
        let (s, a) = table.dim();
        let mut probs = Array3::zeros((horizon, s, a));
        for h in 0..horizon {
            probs.slice_mut(ndarray::s![h, .., ..]).assign(&table);
        }
        Self::validated(probs, PolicyKind::Stationary)
    }

    /// The uniform random policy.
    pub fn uniform(dims: Dims) -> Self {
        let p = 1.0 / dims.num_actions as f64;
        Self {
            probs: Array3::from_elem((dims.horizon, dims.num_states, dims.num_actions), p),
            kind: PolicyKind::Stationary,
        }
    }

    /// A deterministic non-stationary policy from an action lookup table
    /// (`actions[[h, s]]` is the action taken in state `s` at step `h`).
    pub fn from_actions(actions: &Array2<usize>, num_actions: usize) -> Result<Self> {
        let (horizon, num_states) = actions.dim();
        let mut probs = Array3::zeros((horizon, num_states, num_actions));
        for ((h, s), &a) in actions.indexed_iter() {
            if a >= num_actions {
                return Err(Error::Argument(format!(
                    "action {a} at (h={h}, s={s}) is outside 0..{num_actions}"
                )));
            }
            probs[[h, s, a]] = 1.0;
        }
        Self::validated(probs, PolicyKind::NonStationary)
    }

    fn validated(probs: Array3<f64>, kind: PolicyKind) -> Result<Self> {
        let (horizon, num_states, _) = probs.dim();
        for h in 0..horizon {
            for s in 0..num_states {
                check_distribution(
                    probs.slice(ndarray::s![h, s, ..]),
                    &format!("policy row (h={h}, s={s})"),
                )?;
            }
        }
        Ok(Self { probs, kind })
    }

    pub fn kind(&self) -> PolicyKind {
        self.kind
    }

    pub fn dims(&self) -> Dims {
        let (horizon, num_states, num_actions) = self.probs.dim();
        Dims {
            num_states,
            num_actions,
            horizon,
        }
    }

    /// Action distribution at `(h, s)`.
    pub fn row(&self, h: usize, s: usize) -> ArrayView1<'_, f64> {
        self.probs.slice(ndarray::s![h, s, ..])
    }

    pub fn prob(&self, h: usize, s: usize, a: usize) -> f64 {
        self.probs[[h, s, a]]
    }

    pub fn probs(&self) -> &Array3<f64> {
        &self.probs
    }

    /// Index of the most probable action at `(h, s)` (lowest index wins
    /// ties).
    pub fn argmax(&self, h: usize, s: usize) -> usize {
        let row = self.row(h, s);
        let mut best = 0;
        for (a, &p) in row.iter().enumerate() {
            if p > row[best] {
                best = a;
            }
        }
        best
    }
}

fn check_policy_shape(mdp: &TabularMdp, policy: &Policy) -> Result<()> {
    if policy.dims() != mdp.dims() {
        return Err(Error::Shape(format!(
            "policy dims {:?} do not match MDP dims {:?}",
            policy.dims(),
            mdp.dims()
        )));
    }
    Ok(())
}

/// Per-step state–action distributions `d_h(s, a)` induced by a policy.
///
/// Each time slice sums to one: it is the exact probability distribution
/// of the state–action pair at that step under the policy and dynamics.
#[derive(Debug, Clone, PartialEq)]
pub struct OccupancyMeasure {
    d: Array3<f64>,
}

impl OccupancyMeasure {
    /// Validates that every slice is a probability distribution.
    pub fn new(d: Array3<f64>) -> Result<Self> {
        let (horizon, num_states, num_actions) = d.dim();
        for h in 0..horizon {
            let flat: Array1<f64> =
                Array1::from_iter(d.slice(ndarray::s![h, .., ..]).iter().copied());
            check_distribution(flat.view(), &format!("occupancy slice h={h}"))?;
            let _ = (num_states, num_actions);
        }
        Ok(Self { d })
    }

    pub fn probs(&self) -> &Array3<f64> {
        &self.d
    }

    pub fn prob(&self, h: usize, s: usize, a: usize) -> f64 {
        self.d[[h, s, a]]
    }

    /// Marginal state distribution per step, `d_h(s) = Σ_a d_h(s, a)`.
    pub fn state_marginals(&self) -> Array2<f64> {
        self.d.sum_axis(Axis(2))
    }
}

/// Exact occupancy measure of `policy` in `mdp` by forward recursion:
/// `d_0(s, a) = p_0(s) π_0(a|s)` and
/// `d_{h+1}(s', a') = Σ_{s,a} d_h(s, a) p_h(s'|s, a) π_{h+1}(a'|s')`.
pub fn compute_occupancy(mdp: &TabularMdp, policy: &Policy) -> Result<OccupancyMeasure> {
    check_policy_shape(mdp, policy)?;
    let Dims {
        num_states,
        num_actions,
        horizon,
    } = mdp.dims();
    let mut d = Array3::zeros((horizon, num_states, num_actions));
    let mut state_dist = mdp.initial_dist().to_owned();
    for h in 0..horizon {
        for s in 0..num_states {
            let w = state_dist[s];
            for a in 0..num_actions {
                d[[h, s, a]] = w * policy.prob(h, s, a);
            }
        }
        if h + 1 < horizon {
            let mut next = Array1::zeros(num_states);
            for s in 0..num_states {
                for a in 0..num_actions {
                    let mass = d[[h, s, a]];
                    if mass == 0.0 {
                        continue;
                    }
                    for (s2, &p) in mdp.transition(h, s, a).iter().enumerate() {
                        next[s2] += mass * p;
                    }
                }
            }
            state_dist = next;
        }
    }
    OccupancyMeasure::new(d)
}

/// Expected episodic return via the occupancy measure,
/// `Σ_h Σ_{s,a} d_h(s, a) r(s, a)`, cross-checked against the independent
/// backward-induction evaluation within [`VALUE_CHECK_TOL`].
pub fn policy_value(mdp: &TabularMdp, policy: &Policy) -> Result<f64> {
    let occ = compute_occupancy(mdp, policy)?;
    let mut value = 0.0;
    for h in 0..mdp.horizon() {
        for s in 0..mdp.num_states() {
            for a in 0..mdp.num_actions() {
                value += occ.prob(h, s, a) * mdp.reward(s, a);
            }
        }
    }
    let backward = policy_value_backward(mdp, policy)?;
    if (value - backward).abs() > VALUE_CHECK_TOL {
        return Err(Error::Inconsistent(format!(
            "occupancy value {value} vs backward-induction value {backward}"
        )));
    }
    Ok(value)
}

/// Per-step value function `v[h][s]` of a policy (expected remaining
/// return from state `s` at step `h`), computed by backward induction.
pub fn policy_state_values(mdp: &TabularMdp, policy: &Policy) -> Result<Array2<f64>> {
    check_policy_shape(mdp, policy)?;
    let Dims {
        num_states,
        num_actions,
        horizon,
    } = mdp.dims();
    let mut v = Array2::zeros((horizon, num_states));
    for h in (0..horizon).rev() {
        for s in 0..num_states {
            let mut vs = 0.0;
            for a in 0..num_actions {
                let pa = policy.prob(h, s, a);
                if pa == 0.0 {
                    continue;
                }
                let mut q = mdp.reward(s, a);
                if h + 1 < horizon {
                    for (s2, &p) in mdp.transition(h, s, a).iter().enumerate() {
                        q += p * v[[h + 1, s2]];
                    }
                }
                vs += pa * q;
            }
            v[[h, s]] = vs;
        }
    }
    Ok(v)
}

/// Expected episodic return via backward induction,
/// `Σ_s p_0(s) v_0(s)`. Independent of [`policy_value`]'s occupancy route.
pub fn policy_value_backward(mdp: &TabularMdp, policy: &Policy) -> Result<f64> {
    let v = policy_state_values(mdp, policy)?;
    Ok(mdp
        .initial_dist()
        .iter()
        .zip(v.row(0).iter())
        .map(|(&p, &val)| p * val)
        .sum())
}

pub(crate) fn sample_index<R: Rng>(probs: ArrayView1<'_, f64>, rng: &mut R) -> usize {
    let u: f64 = rng.random();
    let mut acc = 0.0;
    let mut last_positive = 0;
    for (i, &p) in probs.iter().enumerate() {
        if p > 0.0 {
            last_positive = i;
        }
        acc += p;
        if u < acc {
            return i;
        }
    }
    // Rounding can leave acc marginally below 1; fall back to the last
    // index that carries mass.
    last_positive
}

/// Samples one full-horizon trajectory. Identical seeds produce identical
/// trajectories.
pub fn sample_trajectory(mdp: &TabularMdp, policy: &Policy, seed: u64) -> Result<Trajectory> {
    check_policy_shape(mdp, policy)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_trajectory_with(mdp, policy, &mut rng)
}

/// Samples one trajectory from an externally managed generator (used when
/// many draws must come from a single stream).
pub fn sample_trajectory_with<R: Rng>(
    mdp: &TabularMdp,
    policy: &Policy,
    rng: &mut R,
) -> Result<Trajectory> {
    check_policy_shape(mdp, policy)?;
    let mut steps = Vec::with_capacity(mdp.horizon());
    let mut s = sample_index(mdp.initial_dist(), rng);
    for h in 0..mdp.horizon() {
        let a = sample_index(policy.row(h, s), rng);
        let s_next = sample_index(mdp.transition(h, s, a), rng);
        steps.push(Step {
            h,
            state: s,
            action: a,
            next_state: s_next,
        });
        s = s_next;
    }
    Ok(Trajectory { steps })
}

/// One application of the policy-coupled Bellman operator to a ν-table:
/// `(B^π ν)(h, s, a) = γ Σ_{s'} p_h(s'|s, a) Σ_{a'} π_{h+1}(a'|s') ν(h+1, s', a')`,
/// with ν of the step after the final one defined as zero.
///
/// Requires the MDP's `discount` to be set; episodic use passes the step
/// index `h` so the time-matched kernel and next-step policy are used.
pub fn bellman_nu(
    mdp: &TabularMdp,
    policy: &Policy,
    nu: &NuTable,
    h: usize,
    s: usize,
    a: usize,
) -> Result<f64> {
    let gamma = mdp
        .discount()
        .ok_or_else(|| Error::Config("bellman_nu requires the MDP discount to be set".into()))?;
    check_policy_shape(mdp, policy)?;
    let dims = mdp.dims();
    if h >= dims.horizon || s >= dims.num_states || a >= dims.num_actions {
        return Err(Error::Argument(format!(
            "(h={h}, s={s}, a={a}) outside dims {dims:?}"
        )));
    }
    Ok(bellman_nu_unchecked(mdp, policy, nu, gamma, h, s, a))
}

/// Shared Bellman kernel used by both [`bellman_nu`] and the saddle-point
/// losses (which carry γ explicitly).
pub(crate) fn bellman_nu_unchecked(
    mdp: &TabularMdp,
    policy: &Policy,
    nu: &NuTable,
    gamma: f64,
    h: usize,
    s: usize,
    a: usize,
) -> f64 {
    if gamma == 0.0 || h + 1 >= mdp.horizon() {
        return 0.0;
    }
    let hn = h + 1;
    let mut total = 0.0;
    for (s2, &p) in mdp.transition(h, s, a).iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let mut inner = 0.0;
        for (a2, &pa) in policy.row(hn, s2).iter().enumerate() {
            if pa != 0.0 {
                inner += pa * nu.value(hn, s2, a2);
            }
        }
        total += p * inner;
    }
    gamma * total
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    /// Small two-state MDP with non-stationary-friendly shapes used by
    /// several hand-checked tests.
    pub(crate) fn two_state_mdp() -> TabularMdp {
        let mut t = Array4::zeros((2, 2, 2, 2));
        // h = 0 and h = 1 share the same kernel here.
        for h in 0..2 {
            t.slice_mut(ndarray::s![h, 0, 0, ..])
                .assign(&array![0.9, 0.1]);
            t.slice_mut(ndarray::s![h, 0, 1, ..])
                .assign(&array![0.2, 0.8]);
            t.slice_mut(ndarray::s![h, 1, 0, ..])
                .assign(&array![0.5, 0.5]);
            t.slice_mut(ndarray::s![h, 1, 1, ..])
                .assign(&array![0.3, 0.7]);
        }
        let r = array![[1.0, 0.5], [0.25, 0.0]];
        let p0 = array![0.7, 0.3];
        TabularMdp::new(t, r, p0, None).unwrap()
    }

    pub(crate) fn two_state_policy() -> Policy {
        let probs = ndarray::stack![
            Axis(0),
            array![[0.6, 0.4], [0.5, 0.5]],
            array![[1.0, 0.0], [0.2, 0.8]]
        ];
        Policy::non_stationary(probs).unwrap()
    }

    #[test]
    fn occupancy_matches_hand_computation() {
        let mdp = two_state_mdp();
        let policy = two_state_policy();
        let occ = compute_occupancy(&mdp, &policy).unwrap();
        // Step 0: initial distribution times the first policy slice.
        assert_abs_diff_eq!(occ.prob(0, 0, 0), 0.42, epsilon = 1e-12);
        assert_abs_diff_eq!(occ.prob(0, 0, 1), 0.28, epsilon = 1e-12);
        assert_abs_diff_eq!(occ.prob(0, 1, 0), 0.15, epsilon = 1e-12);
        assert_abs_diff_eq!(occ.prob(0, 1, 1), 0.15, epsilon = 1e-12);
        // Step 1: propagate state mass, then apply the second slice.
        // P(s=0) = .42*.9 + .28*.2 + .15*.5 + .15*.3 = 0.554
        assert_abs_diff_eq!(occ.prob(1, 0, 0), 0.554, epsilon = 1e-12);
        assert_abs_diff_eq!(occ.prob(1, 0, 1), 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(occ.prob(1, 1, 0), 0.446 * 0.2, epsilon = 1e-12);
        assert_abs_diff_eq!(occ.prob(1, 1, 1), 0.446 * 0.8, epsilon = 1e-12);
    }

    #[test]
    fn value_routes_agree_and_match_hand_value() {
        let mdp = two_state_mdp();
        let policy = two_state_policy();
        let v = policy_value(&mdp, &policy).unwrap();
        let vb = policy_value_backward(&mdp, &policy).unwrap();
        // 0.42 + 0.14 + 0.0375 at step 0, 0.554 + 0.0892*0.25 at step 1.
        assert_abs_diff_eq!(v, 1.1738, epsilon = 1e-12);
        assert_abs_diff_eq!(v, vb, epsilon = 1e-12);
    }

    #[test]
    fn occupancy_slices_are_distributions() {
        let mdp = two_state_mdp();
        let policy = two_state_policy();
        let occ = compute_occupancy(&mdp, &policy).unwrap();
        for h in 0..2 {
            let total: f64 = occ.probs().slice(ndarray::s![h, .., ..]).sum();
            assert_abs_diff_eq!(total, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn monte_carlo_frequencies_match_occupancy() {
        let mdp = two_state_mdp();
        let policy = two_state_policy();
        let occ = compute_occupancy(&mdp, &policy).unwrap();
        let n = 200_000usize;
        let mut rng = ChaCha8Rng::seed_from_u64(12345);
        let mut counts = Array3::<f64>::zeros((2, 2, 2));
        for _ in 0..n {
            let traj = sample_trajectory_with(&mdp, &policy, &mut rng).unwrap();
            for step in &traj.steps {
                counts[[step.h, step.state, step.action]] += 1.0;
            }
        }
        for h in 0..2 {
            for s in 0..2 {
                for a in 0..2 {
                    let p = occ.prob(h, s, a);
                    let emp = counts[[h, s, a]] / n as f64;
                    let sigma = (p * (1.0 - p) / n as f64).sqrt();
                    assert!(
                        (emp - p).abs() <= 3.0 * sigma.max(1e-12),
                        "(h={h}, s={s}, a={a}): empirical {emp} vs exact {p}, 3σ = {}",
                        3.0 * sigma
                    );
                }
            }
        }
    }

    #[test]
    fn trajectory_sampling_is_seed_reproducible() {
        let mdp = two_state_mdp();
        let policy = two_state_policy();
        let t1 = sample_trajectory(&mdp, &policy, 99).unwrap();
        let t2 = sample_trajectory(&mdp, &policy, 99).unwrap();
        assert_eq!(t1.steps, t2.steps);
        // First state–action frequencies across many seeds match d_0.
        let occ = compute_occupancy(&mdp, &policy).unwrap();
        let n = 100_000u64;
        let mut hits = 0.0;
        for seed in 0..n {
            let t = sample_trajectory(&mdp, &policy, seed).unwrap();
            let s0 = &t.steps[0];
            if s0.state == 0 && s0.action == 0 {
                hits += 1.0;
            }
        }
        let p = occ.prob(0, 0, 0);
        let emp = hits / n as f64;
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        assert!(
            (emp - p).abs() <= 3.0 * sigma,
            "empirical {emp} vs exact {p}"
        );
    }

    #[test]
    fn bellman_nu_matches_hand_computation() {
        let mdp = two_state_mdp().with_discount(Some(0.5)).unwrap();
        let policy = two_state_policy();
        let mut nu = NuTable::zeros(mdp.dims(), false);
        // ν(1, s, a) laid out by hand.
        nu.set(1, 0, 0, 2.0);
        nu.set(1, 0, 1, -1.0);
        nu.set(1, 1, 0, 0.5);
        nu.set(1, 1, 1, 4.0);
        // Next-step policy rows: π_1(·|0) = (1, 0), π_1(·|1) = (.2, .8).
        // E_π ν(1, 0, ·) = 2.0; E_π ν(1, 1, ·) = 0.1 + 3.2 = 3.3.
        // p_0(·|0,0) = (.9, .1): B = .5 * (.9*2 + .1*3.3) = .5 * 2.13
        let b = bellman_nu(&mdp, &policy, &nu, 0, 0, 0).unwrap();
        assert_abs_diff_eq!(b, 0.5 * 2.13, epsilon = 1e-12);
        // Final step: ν of the post-terminal step is zero by definition.
        let b_last = bellman_nu(&mdp, &policy, &nu, 1, 0, 0).unwrap();
        assert_abs_diff_eq!(b_last, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn bellman_nu_requires_discount() {
        let mdp = two_state_mdp();
        let policy = two_state_policy();
        let nu = NuTable::zeros(mdp.dims(), false);
        let err = bellman_nu(&mdp, &policy, &nu, 0, 0, 0).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn json_round_trip_is_bit_exact() {
        let mdp = two_state_mdp().with_discount(Some(0.95)).unwrap();
        let text = mdp.to_json();
        let back = TabularMdp::from_json(&text).unwrap();
        for (x, y) in mdp.transitions().iter().zip(back.transitions().iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        for (x, y) in mdp.rewards().iter().zip(back.rewards().iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        for (x, y) in mdp.initial_dist().iter().zip(back.initial_dist().iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
        assert_eq!(mdp.discount(), back.discount());
        // Awkward but representable values also survive.
        let tricky = 0.1 + 0.2; // 0.30000000000000004
        let mdp2 = TabularMdp::new(
            {
                let mut t = Array4::zeros((1, 2, 1, 2));
                t.slice_mut(ndarray::s![0, 0, 0, ..])
                    .assign(&array![tricky, 1.0 - tricky]);
                t.slice_mut(ndarray::s![0, 1, 0, ..])
                    .assign(&array![0.0, 1.0]);
                t
            },
            array![[0.25], [1.0 / 3.0]],
            array![1.0, 0.0],
            None,
        )
        .unwrap();
        let back2 = TabularMdp::from_json(&mdp2.to_json()).unwrap();
        assert_eq!(
            mdp2.transition(0, 0, 0)[0].to_bits(),
            back2.transition(0, 0, 0)[0].to_bits()
        );
        assert_eq!(
            mdp2.rewards()[[1, 0]].to_bits(),
            back2.rewards()[[1, 0]].to_bits()
        );
    }

    #[test]
    fn validation_rejects_bad_inputs() {
        // Transition row that does not sum to one.
        let mut t = Array4::zeros((1, 2, 1, 2));
        t[[0, 0, 0, 0]] = 0.5;
        t[[0, 1, 0, 1]] = 1.0;
        let r = array![[0.0], [0.0]];
        let p0 = array![1.0, 0.0];
        assert!(matches!(
            TabularMdp::new(t.clone(), r.clone(), p0.clone(), None),
            Err(Error::Distribution(_))
        ));
        t[[0, 0, 0, 1]] = 0.5;
        // Reward outside [0, 1].
        let bad_r = array![[1.5], [0.0]];
        assert!(matches!(
            TabularMdp::new(t.clone(), bad_r, p0.clone(), None),
            Err(Error::Argument(_))
        ));
        // Discount outside [0, 1).
        assert!(matches!(
            TabularMdp::new(t.clone(), r.clone(), p0.clone(), Some(1.0)),
            Err(Error::Argument(_))
        ));
        // Policy row not normalized.
        let bad = Array3::from_elem((1, 2, 2), 0.4);
        assert!(matches!(
            Policy::non_stationary(bad),
            Err(Error::Distribution(_))
        ));
    }

    #[test]
    fn stationary_policy_expands_to_identical_slices() {
        let table = array![[0.3, 0.7], [1.0, 0.0]];
        let p = Policy::stationary(table.clone(), 3).unwrap();
        assert_eq!(p.kind(), PolicyKind::Stationary);
        for h in 0..3 {
            for s in 0..2 {
                for a in 0..2 {
                    assert_eq!(p.prob(h, s, a), table[[s, a]]);
                }
            }
        }
    }
}
