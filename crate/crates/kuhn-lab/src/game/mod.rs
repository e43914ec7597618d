//! Exact representation of deals, the betting tree, terminal payoffs and
//! ex-showdown expectations for the full game and for SKP.

mod cards;
mod expectation;
mod strategy;
mod tree;

pub use cards::{enumerate_deals, Card, Deal, DealSet, Seat};
pub use expectation::{
    ex_showdown_deltas, expectation_full, expectation_skp, exshowdown_oracle, oracle_deal_value,
    showdown_baseline, Variant,
};
pub use strategy::{ExpectationTriple, FullStrategy, SkpStrategy};
pub use tree::{
    playout, playout_forced, playout_skp, terminal_distribution, BettingSequence, ForcedPolicy,
    Playout, PolicyViolation, Terminal,
};
