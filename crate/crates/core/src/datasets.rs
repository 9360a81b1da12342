//! Demonstration datasets: collection, subsampling, counting, and a
//! line-oriented text format.
//!
//! A dataset is an ordered list of trajectories plus provenance metadata
//! (whether trajectories are complete, and the subsampling rate that
//! produced them). Steps store the successor state even though counting
//! learners ignore it — the saddle-point losses need it to form their
//! transition terms.
//!
//! Time indices are 0-based in memory (`Step::h`) and 1-based in the
//! serialized format.

use ndarray::{Array2, Array3};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::mdp::{sample_trajectory_with, Dims, Policy, TabularMdp};

/// One transition record: at step `h` the agent was in `state`, took
/// `action`, and moved to `next_state`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub h: usize,
    pub state: usize,
    pub action: usize,
    pub next_state: usize,
}

/// An ordered sequence of steps from one episode (possibly with gaps, if
/// subsampled).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trajectory {
    pub steps: Vec<Step>,
}

impl Trajectory {
    /// True when the trajectory covers steps `0..horizon` consecutively
    /// and each step's successor equals the next step's state.
    pub fn is_complete(&self, horizon: usize) -> bool {
        if self.steps.len() != horizon {
            return false;
        }
        for (i, step) in self.steps.iter().enumerate() {
            if step.h != i {
                return false;
            }
            if i + 1 < self.steps.len() && step.next_state != self.steps[i + 1].state {
                return false;
            }
        }
        true
    }
}

/// A collection of trajectories with provenance metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    trajectories: Vec<Trajectory>,
    horizon: usize,
    complete: bool,
    subsample_rate: Option<usize>,
}

impl Dataset {
    /// Validates and assembles a dataset. When `complete` is set, every
    /// trajectory must cover the full horizon with chained successors.
    pub fn new(
        trajectories: Vec<Trajectory>,
        horizon: usize,
        complete: bool,
        subsample_rate: Option<usize>,
    ) -> Result<Self> {
        if horizon == 0 {
            return Err(Error::Argument("horizon must be nonzero".into()));
        }
        if let Some(rate) = subsample_rate {
            if rate == 0 {
                return Err(Error::Argument("subsample rate must be at least 1".into()));
            }
        }
        for (i, traj) in trajectories.iter().enumerate() {
            for step in &traj.steps {
                if step.h >= horizon {
                    return Err(Error::Data(format!(
                        "trajectory {i} has a step at h={} beyond horizon {horizon}",
                        step.h
                    )));
                }
            }
            let mut last_h: Option<usize> = None;
            for step in &traj.steps {
                if let Some(prev) = last_h {
                    if step.h <= prev {
                        return Err(Error::Data(format!(
                            "trajectory {i} has non-increasing time indices"
                        )));
                    }
                }
                last_h = Some(step.h);
            }
            if complete && !traj.is_complete(horizon) {
                return Err(Error::Data(format!(
                    "dataset marked complete but trajectory {i} does not cover \
                     steps 0..{horizon} with chained successors"
                )));
            }
        }
        Ok(Self {
            trajectories,
            horizon,
            complete,
            subsample_rate,
        })
    }

    pub fn trajectories(&self) -> &[Trajectory] {
        &self.trajectories
    }

    /// Number of trajectories.
    pub fn num_trajectories(&self) -> usize {
        self.trajectories.len()
    }

    /// Total number of state–action records across all trajectories.
    pub fn total_steps(&self) -> usize {
        self.trajectories.iter().map(|t| t.steps.len()).sum()
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn complete(&self) -> bool {
        self.complete
    }

    pub fn subsample_rate(&self) -> Option<usize> {
        self.subsample_rate
    }

    /// Iterates over every step in every trajectory, in order.
    pub fn steps(&self) -> impl Iterator<Item = &Step> {
        self.trajectories.iter().flat_map(|t| t.steps.iter())
    }

    /// Serializes to the line-oriented text format:
    /// a `key=value` header (`m`, `horizon`, `complete`, `subsample_rate`)
    /// followed by `traj_id,t,s,a,s_next` records with 1-based `t`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("m={}\n", self.num_trajectories()));
        out.push_str(&format!("horizon={}\n", self.horizon));
        out.push_str(&format!("complete={}\n", self.complete));
        match self.subsample_rate {
            Some(rate) => out.push_str(&format!("subsample_rate={rate}\n")),
            None => out.push_str("subsample_rate=none\n"),
        }
        out.push_str("traj_id,t,s,a,s_next\n");
        for (i, traj) in self.trajectories.iter().enumerate() {
            for step in &traj.steps {
                out.push_str(&format!(
                    "{i},{},{},{},{}\n",
                    step.h + 1,
                    step.state,
                    step.action,
                    step.next_state
                ));
            }
        }
        out
    }

    /// Parses the format produced by [`Dataset::to_text`], re-running full
    /// validation.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let mut header = std::collections::HashMap::new();
        for _ in 0..4 {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing header line".into()))?;
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("bad header line {line:?}")))?;
            header.insert(k.trim().to_string(), v.trim().to_string());
        }
        let get = |k: &str| -> Result<&String> {
            header
                .get(k)
                .ok_or_else(|| Error::Parse(format!("missing header key {k:?}")))
        };
        let m: usize = get("m")?
            .parse()
            .map_err(|_| Error::Parse("bad m value".into()))?;
        let horizon: usize = get("horizon")?
            .parse()
            .map_err(|_| Error::Parse("bad horizon value".into()))?;
        let complete: bool = get("complete")?
            .parse()
            .map_err(|_| Error::Parse("bad complete value".into()))?;
        let rate_text = get("subsample_rate")?;
        let subsample_rate = if rate_text == "none" {
            None
        } else {
            Some(
                rate_text
                    .parse()
                    .map_err(|_| Error::Parse("bad subsample_rate value".into()))?,
            )
        };
        let columns = lines
            .next()
            .ok_or_else(|| Error::Parse("missing column header".into()))?;
        if columns.trim() != "traj_id,t,s,a,s_next" {
            return Err(Error::Parse(format!("bad column header {columns:?}")));
        }
        let mut trajectories: Vec<Trajectory> =
            (0..m).map(|_| Trajectory { steps: Vec::new() }).collect();
        for line in lines {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 5 {
                return Err(Error::Parse(format!("bad record {line:?}")));
            }
            let parse = |i: usize| -> Result<usize> {
                fields[i]
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer in record {line:?}")))
            };
            let traj_id = parse(0)?;
            let t = parse(1)?;
            if traj_id >= m {
                return Err(Error::Parse(format!(
                    "trajectory id {traj_id} outside 0..{m}"
                )));
            }
            if t == 0 {
                return Err(Error::Parse("time indices are 1-based".into()));
            }
            trajectories[traj_id].steps.push(Step {
                h: t - 1,
                state: parse(2)?,
                action: parse(3)?,
                next_state: parse(4)?,
            });
        }
        Self::new(trajectories, horizon, complete, subsample_rate)
    }
}

/// Rolls out `m` complete expert trajectories. All randomness comes from
/// `seed`, so identical inputs reproduce the dataset exactly.
pub fn collect_expert(mdp: &TabularMdp, expert: &Policy, m: usize, seed: u64) -> Result<Dataset> {
    if m == 0 {
        return Err(Error::Argument(
            "at least one trajectory must be collected".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut trajectories = Vec::with_capacity(m);
    for _ in 0..m {
        trajectories.push(sample_trajectory_with(mdp, expert, &mut rng)?);
    }
    Dataset::new(trajectories, mdp.horizon(), true, None)
}

/// Keeps every `rate`-th step of each trajectory, with an independent
/// uniformly random starting offset in `[0, rate)` per trajectory.
///
/// `rate = 1` returns the input unchanged. Larger rates mark the result
/// incomplete; a trajectory whose offset exceeds its last time index
/// contributes no steps, which is valid.
pub fn subsample(ds: &Dataset, rate: usize, seed: u64) -> Result<Dataset> {
    if rate == 0 {
        return Err(Error::Argument("subsample rate must be at least 1".into()));
    }
    if rate == 1 {
        return Ok(ds.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(ds.num_trajectories());
    for traj in ds.trajectories() {
        let offset = rng.random_range(0..rate);
        let steps: Vec<Step> = traj
            .steps
            .iter()
            .filter(|step| step.h >= offset && (step.h - offset) % rate == 0)
            .copied()
            .collect();
        out.push(Trajectory { steps });
    }
    Dataset::new(out, ds.horizon(), false, Some(rate))
}

/// Per-step and aggregated visitation counts of a dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct Visitation {
    per_step: Array3<u64>,
    aggregated: Array2<u64>,
    dims: Dims,
}

impl Visitation {
    /// `n_h(s, a)`: number of records with this step, state, and action.
    pub fn count(&self, h: usize, s: usize, a: usize) -> u64 {
        self.per_step[[h, s, a]]
    }

    /// `n_h(s) = Σ_a n_h(s, a)`.
    pub fn state_count(&self, h: usize, s: usize) -> u64 {
        (0..self.dims.num_actions)
            .map(|a| self.per_step[[h, s, a]])
            .sum()
    }

    /// Whether state `s` appears at step `h`.
    pub fn visited(&self, h: usize, s: usize) -> bool {
        self.state_count(h, s) > 0
    }

    /// States visited at step `h`, ascending.
    pub fn visited_states(&self, h: usize) -> Vec<usize> {
        (0..self.dims.num_states)
            .filter(|&s| self.visited(h, s))
            .collect()
    }

    /// Time-aggregated count `n(s, a) = Σ_h n_h(s, a)`.
    pub fn aggregated_count(&self, s: usize, a: usize) -> u64 {
        self.aggregated[[s, a]]
    }

    /// Time-aggregated state count `n(s) = Σ_a n(s, a)`.
    pub fn aggregated_state_count(&self, s: usize) -> u64 {
        (0..self.dims.num_actions)
            .map(|a| self.aggregated[[s, a]])
            .sum()
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }
}

/// Tallies visitation counts, validating states and actions against the
/// given dimensions.
pub fn visitation(ds: &Dataset, dims: Dims) -> Result<Visitation> {
    if ds.horizon() != dims.horizon {
        return Err(Error::Shape(format!(
            "dataset horizon {} does not match dims horizon {}",
            ds.horizon(),
            dims.horizon
        )));
    }
    let mut per_step = Array3::zeros((dims.horizon, dims.num_states, dims.num_actions));
    let mut aggregated = Array2::zeros((dims.num_states, dims.num_actions));
    for step in ds.steps() {
        if step.state >= dims.num_states
            || step.action >= dims.num_actions
            || step.next_state >= dims.num_states
        {
            return Err(Error::Data(format!(
                "step {step:?} is outside dims {dims:?}"
            )));
        }
        per_step[[step.h, step.state, step.action]] += 1;
        aggregated[[step.state, step.action]] += 1;
    }
    Ok(Visitation {
        per_step,
        aggregated,
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::{array, Array4};

    fn tiny_mdp(horizon: usize) -> TabularMdp {
        // Two states; action 0 stays, action 1 swaps. Deterministic.
        let mut t = Array4::zeros((horizon, 2, 2, 2));
        for h in 0..horizon {
            t[[h, 0, 0, 0]] = 1.0;
            t[[h, 0, 1, 1]] = 1.0;
            t[[h, 1, 0, 1]] = 1.0;
            t[[h, 1, 1, 0]] = 1.0;
        }
        TabularMdp::new(t, array![[1.0, 0.0], [0.0, 1.0]], array![1.0, 0.0], None).unwrap()
    }

    #[test]
    fn collect_expert_is_reproducible_and_complete() {
        let mdp = tiny_mdp(4);
        let policy = Policy::uniform(mdp.dims());
        let d1 = collect_expert(&mdp, &policy, 5, 7).unwrap();
        let d2 = collect_expert(&mdp, &policy, 5, 7).unwrap();
        assert_eq!(d1, d2);
        assert!(d1.complete());
        assert_eq!(d1.num_trajectories(), 5);
        assert_eq!(d1.total_steps(), 20);
        for traj in d1.trajectories() {
            assert!(traj.is_complete(4));
        }
        let d3 = collect_expert(&mdp, &policy, 5, 8).unwrap();
        assert_ne!(d1, d3);
    }

    #[test]
    fn collect_expert_rejects_zero_trajectories() {
        let mdp = tiny_mdp(4);
        let policy = Policy::uniform(mdp.dims());
        assert!(matches!(
            collect_expert(&mdp, &policy, 0, 7),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn subsample_rate_one_is_identity() {
        let mdp = tiny_mdp(6);
        let policy = Policy::uniform(mdp.dims());
        let ds = collect_expert(&mdp, &policy, 3, 1).unwrap();
        let same = subsample(&ds, 1, 99).unwrap();
        assert_eq!(ds, same);
        assert!(same.complete());
    }

    #[test]
    fn subsample_keeps_strided_steps_per_trajectory() {
        let mdp = tiny_mdp(10);
        let policy = Policy::uniform(mdp.dims());
        let ds = collect_expert(&mdp, &policy, 8, 3).unwrap();
        let sub = subsample(&ds, 5, 11).unwrap();
        assert!(!sub.complete());
        assert_eq!(sub.subsample_rate(), Some(5));
        let mut seen_offsets = std::collections::HashSet::new();
        for traj in sub.trajectories() {
            // With horizon 10 and rate 5 every offset keeps exactly 2 steps.
            assert_eq!(traj.steps.len(), 2);
            let offset = traj.steps[0].h;
            assert!(offset < 5);
            seen_offsets.insert(offset);
            for step in &traj.steps {
                assert_eq!((step.h - offset) % 5, 0);
            }
            // Offset 0 keeps 0-based steps {0, 5}, i.e. 1-based {1, 6}.
            if offset == 0 {
                let hs: Vec<usize> = traj.steps.iter().map(|s| s.h).collect();
                assert_eq!(hs, vec![0, 5]);
            }
        }
        // Across 8 trajectories the offsets should not all coincide.
        assert!(seen_offsets.len() > 1);
    }

    #[test]
    fn subsample_rate_beyond_horizon_keeps_at_most_one_step() {
        let mdp = tiny_mdp(10);
        let policy = Policy::uniform(mdp.dims());
        let ds = collect_expert(&mdp, &policy, 10, 3).unwrap();
        let sub = subsample(&ds, 10, 5).unwrap();
        for traj in sub.trajectories() {
            assert_eq!(traj.steps.len(), 1);
        }
        let sparse = subsample(&ds, 25, 5).unwrap();
        for traj in sparse.trajectories() {
            assert!(traj.steps.len() <= 1);
        }
        let kept: usize = sparse.total_steps();
        // Offsets ≥ horizon produce empty trajectories, which are valid.
        assert!(kept <= 10);
    }

    #[test]
    fn visitation_counts_match_hand_tally() {
        let steps0 = vec![
            Step {
                h: 0,
                state: 0,
                action: 1,
                next_state: 1,
            },
            Step {
                h: 1,
                state: 1,
                action: 0,
                next_state: 1,
            },
        ];
        let steps1 = vec![
            Step {
                h: 0,
                state: 0,
                action: 1,
                next_state: 1,
            },
            Step {
                h: 1,
                state: 1,
                action: 1,
                next_state: 0,
            },
        ];
        let ds = Dataset::new(
            vec![Trajectory { steps: steps0 }, Trajectory { steps: steps1 }],
            2,
            true,
            None,
        )
        .unwrap();
        let dims = Dims {
            num_states: 2,
            num_actions: 2,
            horizon: 2,
        };
        let v = visitation(&ds, dims).unwrap();
        assert_eq!(v.count(0, 0, 1), 2);
        assert_eq!(v.count(1, 1, 0), 1);
        assert_eq!(v.count(1, 1, 1), 1);
        assert_eq!(v.state_count(0, 0), 2);
        assert_eq!(v.state_count(0, 1), 0);
        assert!(v.visited(1, 1));
        assert!(!v.visited(1, 0));
        assert_eq!(v.visited_states(0), vec![0]);
        assert_eq!(v.aggregated_count(0, 1), 2);
        assert_eq!(v.aggregated_state_count(1), 2);
    }

    #[test]
    fn text_round_trip_preserves_everything() {
        let mdp = tiny_mdp(5);
        let policy = Policy::uniform(mdp.dims());
        let ds = collect_expert(&mdp, &policy, 4, 21).unwrap();
        let text = ds.to_text();
        let back = Dataset::from_text(&text).unwrap();
        assert_eq!(ds, back);
        // Subsampled datasets round-trip too.
        let sub = subsample(&ds, 2, 3).unwrap();
        let back2 = Dataset::from_text(&sub.to_text()).unwrap();
        assert_eq!(sub, back2);
        // The serialized time indices are 1-based.
        let first_record = text.lines().nth(5).unwrap();
        assert!(first_record.starts_with("0,1,"));
    }

    #[test]
    fn complete_flag_is_enforced() {
        let steps = vec![Step {
            h: 0,
            state: 0,
            action: 0,
            next_state: 0,
        }];
        // Claims complete but covers one of two steps.
        assert!(matches!(
            Dataset::new(
                vec![Trajectory {
                    steps: steps.clone()
                }],
                2,
                true,
                None
            ),
            Err(Error::Data(_))
        ));
        // Broken successor chaining is rejected for complete datasets.
        let broken = vec![
            Step {
                h: 0,
                state: 0,
                action: 0,
                next_state: 1,
            },
            Step {
                h: 1,
                state: 0,
                action: 0,
                next_state: 0,
            },
        ];
        assert!(matches!(
            Dataset::new(vec![Trajectory { steps: broken }], 2, true, None),
            Err(Error::Data(_))
        ));
    }
}
