//! Batch runs of the polynomial solver over seeded instances, checked
//! against the brute-force oracle. Instances are independent, so the batch
//! is spread over [`crate::parallel::map`].

use serde::Serialize;

use crate::colored::ColoredDigraph;
use crate::oracle::{find_kernel_bruteforce, OracleConfig};
use crate::parallel;
use crate::redblue::generators::{
    generate_comparability_instance, generate_ssw_instance, generate_thm1_instance,
};
use crate::redblue::solver::solve_thm1;
use crate::scc::reachability;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Generator {
    Ssw,
    Comparability,
    Thm1,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::Ssw, Generator::Comparability, Generator::Thm1];

    pub fn generate(self, seed: u64, n: usize) -> crate::Result<Option<ColoredDigraph>> {
        match self {
            Generator::Ssw => {
                // Vary the density with the seed so sparse and dense cases mix.
                let density = 0.1 + 0.8 * ((seed % 9) as f64 / 8.0);
                generate_ssw_instance(seed, n, density).map(Some)
            }
            Generator::Comparability => generate_comparability_instance(seed, n).map(Some),
            Generator::Thm1 => Ok(generate_thm1_instance(seed, n, 100_000)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceOutcome {
    pub generator: Generator,
    pub seed: u64,
    pub vertex_count: usize,
    /// False when the generator gave up; the other fields are then vacuous.
    pub generated: bool,
    pub kernel_valid: bool,
    pub oracle_confirms: bool,
    pub potentials_increase: bool,
    pub improve_steps: usize,
    pub blue_reachability: bool,
    pub init_vertex_exists: bool,
    pub error: Option<String>,
}

impl InstanceOutcome {
    pub fn passed(&self) -> bool {
        !self.generated
            || (self.error.is_none()
                && self.kernel_valid
                && self.oracle_confirms
                && self.potentials_increase
                && self.improve_steps <= self.vertex_count
                && self.blue_reachability
                && self.init_vertex_exists)
    }
}

/// A blue dipath from `u` to `v` always comes with `u b-> v` or `v r-> u`.
pub fn blue_reachability_holds(cd: &ColoredDigraph) -> bool {
    reachability(cd.blue()).iter().enumerate().all(|(u, targets)| {
        targets
            .iter()
            .all(|v| u == v || cd.blue_arc(u, v) || cd.red_arc(v, u))
    })
}

/// Some `v` has an arc back from every `w` with `v r-> w`.
pub fn init_vertex_exists(cd: &ColoredDigraph) -> bool {
    let n = cd.vertex_count();
    n == 0 || (0..n).any(|v| cd.red().out(v).iter().all(|w| cd.has_arc(w, v)))
}

pub fn check_instance(generator: Generator, seed: u64, n: usize) -> InstanceOutcome {
    let mut out = InstanceOutcome {
        generator,
        seed,
        vertex_count: n,
        generated: false,
        kernel_valid: false,
        oracle_confirms: false,
        potentials_increase: false,
        improve_steps: 0,
        blue_reachability: false,
        init_vertex_exists: false,
        error: None,
    };
    let cd = match generator.generate(seed, n) {
        Ok(Some(cd)) => cd,
        Ok(None) => return out,
        Err(e) => {
            out.generated = true;
            out.error = Some(e.to_string());
            return out;
        }
    };
    out.generated = true;
    out.blue_reachability = blue_reachability_holds(&cd);
    out.init_vertex_exists = init_vertex_exists(&cd);
    match solve_thm1(&cd) {
        Ok(trace) => {
            out.kernel_valid = cd.underlying().is_kernel(&trace.result);
            out.potentials_increase = trace.potentials_increase();
            out.improve_steps = trace.improve_steps();
        }
        Err(e) => out.error = Some(e.to_string()),
    }
    match find_kernel_bruteforce(cd.underlying(), &OracleConfig::default()) {
        Ok(report) => out.oracle_confirms = report.exists,
        Err(e) => out.error = Some(e.to_string()),
    }
    out
}

/// Runs `count` seeds starting at `first_seed`, cycling the vertex count
/// through `min_n..=max_n`.
pub fn run_campaign(
    generator: Generator,
    first_seed: u64,
    count: u64,
    min_n: usize,
    max_n: usize,
    jobs: usize,
) -> Vec<InstanceOutcome> {
    let span = (max_n.max(min_n) - min_n + 1) as u64;
    let seeds: Vec<u64> = (first_seed..first_seed + count).collect();
    parallel::map(&seeds, jobs, |&seed| {
        let n = min_n + (seed % span) as usize;
        check_instance(generator, seed, n)
    })
}
