//! 2-factors: Tutte's criterion, special Tutte pairs, the gadget/matching
//! construction, and basic U-paths.

mod basic_path;
mod gadget;
mod matching;
mod tutte;

pub use basic_path::{basic_u_path, is_basic_u_path};
pub use gadget::{build_gadget, find_two_factor, GadgetGraph, GadgetVertex, TwoFactor};
pub use matching::max_matching;
pub use tutte::{
    check_lemma5, eta_of, find_tutte_pair_exhaustive, find_tutte_pair_exhaustive_with, odd_components,
    special_tutte_pair, special_tutte_pair_with, ComponentEntry, Lemma5Report, OddComponentReport, Parity, Strength,
    TuttePair, EXHAUSTIVE_LIMIT,
};
