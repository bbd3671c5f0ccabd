//! Brute-force ground truth for small `n`: the group algebra of `S_n`,
//! exhaustive shuffle enumeration, and seeded simulation.

pub mod group_algebra;
pub mod shuffles;
pub mod simulate;

pub use group_algebra::{group_product, idempotent_group, ribbon_sum, s_word_to_group, GroupAlgebraElement};
pub use shuffles::{enumerate_b_shuffles, oracle_descent_polynomial, oracle_transition_matrix, ShuffleMultiset};
pub use simulate::{simulate_carries, simulate_shuffle_chain, EmpiricalMatrix, SimulationConfig};
