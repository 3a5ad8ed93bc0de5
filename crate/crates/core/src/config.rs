//! Size caps and runtime configuration shared by the CLI and the library
//! entry points that can reject oversized requests.

use serde::{Deserialize, Serialize};
use std::path::PathBuf;

/// Hard size limits, enforced before any computation starts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Grid size for brute-force FPL enumeration (6 works but is slow).
    pub fpl_n_max: usize,
    /// Matching size for generic-q wheel polynomial construction.
    pub wheel_generic_n_max: usize,
    /// Matching size for wheel polynomials in the cyclotomic domain.
    pub wheel_cyclo_n_max: usize,
    /// Matching size for the Hamiltonian stationary-vector oracle.
    pub hamiltonian_n_max: usize,
    /// Matching size for the plaquette transition matrix.
    pub markov_n_max: usize,
    /// Largest Catalan number an enumeration is allowed to materialise.
    pub matchings_limit: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            fpl_n_max: 5,
            wheel_generic_n_max: 4,
            wheel_cyclo_n_max: 5,
            hamiltonian_n_max: 10,
            markov_n_max: 5,
            matchings_limit: 1_000_000,
        }
    }
}

/// Number of word-size primes the modular eigensolver starts with.
pub const DEFAULT_PRIME_COUNT: usize = 1;

/// Output formats for tabular CLI results.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Clone, Debug)]
pub struct Config {
    pub caps: Caps,
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<usize>,
    pub output: OutputFormat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            caps: Caps::default(),
            cache_dir: None,
            threads: None,
            output: OutputFormat::Json,
        }
    }
}

impl Config {
    /// Reads WHEELWORKS_CACHE and WHEELWORKS_THREADS from the environment.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Ok(dir) = std::env::var("WHEELWORKS_CACHE") {
            if !dir.is_empty() {
                cfg.cache_dir = Some(PathBuf::from(dir));
            }
        }
        if let Ok(t) = std::env::var("WHEELWORKS_THREADS") {
            if let Ok(v) = t.parse::<usize>() {
                cfg.threads = Some(v.max(1));
            }
        }
        cfg
    }
}
