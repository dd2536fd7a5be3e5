//! Finite closure systems: element sets, closure operators, greedy maximal
//! closed-set separation and exhaustive reference checks.

mod laws;
mod operator;
mod oracle;
mod separation;
mod set;

pub use laws::{verify_closure_laws, LawReport, LawWitness};
pub use operator::{
    hss_decide_kakutani, is_closed, is_half_space, ClosureOperator, FnClosure, HalfSizeClosure,
    InstrumentedClosure, IntervalClosure, SingletonPairClosure,
};
pub use oracle::{
    brute_force_kakutani, brute_force_maximal_separations, check_partition_characterization,
    enumerate_closed_sets, BruteForce, KakutaniVerdict, PartitionReport, SizeError,
    DEFAULT_ENUMERATION_BOUND, DEFAULT_KAKUTANI_BOUND,
};
pub use separation::{
    is_maximal_pair, mcs_separate, separate, ExtensionOrder, SeparationError, SeparationOutcome,
    Side,
};
pub use set::{ElementSet, GroundSet, Iter};
