//! Practice-reward discovery for policy-gradient agents.
//!
//! An agent alternates between *matches*, where an extrinsic task reward is
//! available, and *practice*, where it is not. During practice the agent is
//! driven by a learned intrinsic reward whose parameters are adapted by a
//! meta-gradient: the gradient of match performance taken through the
//! practice-time policy update.
//!
//! The crate provides:
//! - [`diffmath`]: small fixed-topology MLPs with exact analytic gradients,
//!   the optimizers used by the agents, and a binary checkpoint format.
//! - [`envs`]: episodic environments with distinct practice and match
//!   configurations behind one interface.
//! - [`learner`]: trajectory collection, discounted returns, and the match
//!   and practice policy updates with a value baseline.
//! - [`metareward`]: the intrinsic-reward meta-update in three variants
//!   (next match, previous match with importance sampling, replay buffer),
//!   plus a finite-difference oracle for the whole chain-rule pipeline.
//! - [`baselines`]: comparison agents (fixed random practice reward,
//!   reward-prediction practice reward).
//! - [`harness`]: the outer experiment loop, configuration, artifacts, the
//!   pause-and-converge heatmap protocol, and curve aggregation.

pub mod baselines;
pub mod diffmath;
pub mod envs;
pub mod harness;
pub mod learner;
pub mod metareward;
pub mod rng;
