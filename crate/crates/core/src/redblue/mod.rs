//! Red/blue colored digraphs: the two sufficient conditions for a kernel,
//! the solvers that build one, and seeded instance generators.

pub mod campaign;
pub mod conditions;
pub mod generators;
pub mod poset;
pub mod solver;

pub use conditions::{check_prop2_conditions, check_thm1_conditions, ConditionReport, Rule, Violation};
pub use poset::{compare_antichains, max_chain_of_antichains, AntichainOrder, Poset};
pub use solver::{
    find_initial_independent, improve_step, solve_prop2, solve_thm1, BlueComponentPoset,
    SolveTrace, StepAction, TraceStep,
};
