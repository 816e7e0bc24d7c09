//! Desk-scale caps that guard against accidental combinatorial explosion.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const MAX_N_ENV: &str = "RANKMOMENTS_MAX_N";
pub const MAX_DURFEE_N_ENV: &str = "RANKMOMENTS_MAX_DURFEE_N";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for partition enumeration and rank distributions.
    pub max_n: u32,
    /// Largest number of marks for Durfee-symbol enumeration.
    pub max_marks: usize,
    /// Largest `n` for Durfee-symbol enumeration.
    pub max_durfee_n: u32,
    /// Largest `k` accepted by the multivariate generating functions.
    /// The positive-rank one uses `k + 1` variables, so 3 means at most 4.
    pub max_gf_k: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 60,
            max_marks: 3,
            max_durfee_n: 25,
            max_gf_k: 3,
        }
    }
}

impl Limits {
    /// Defaults, with the `n` caps overridable from the environment.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(v) = read_env(MAX_N_ENV) {
            limits.max_n = v;
        }
        if let Some(v) = read_env(MAX_DURFEE_N_ENV) {
            limits.max_durfee_n = v;
        }
        limits
    }

    /// Process-wide limits, read from the environment once.
    pub fn global() -> &'static Limits {
        static GLOBAL: OnceLock<Limits> = OnceLock::new();
        GLOBAL.get_or_init(Limits::from_env)
    }

    pub fn check_n(&self, n: u32) -> Result<()> {
        check("n", n as u64, self.max_n as u64)
    }

    pub fn check_durfee(&self, marks: usize, n: u32) -> Result<()> {
        check("marks", marks as u64, self.max_marks as u64)?;
        check("n", n as u64, self.max_durfee_n as u64)
    }

    pub fn check_gf_k(&self, k: usize) -> Result<()> {
        check("k", k as u64, self.max_gf_k as u64)
    }
}

fn check(what: &'static str, value: u64, cap: u64) -> Result<()> {
    if value > cap {
        Err(Error::CapExceeded { what, value, cap })
    } else {
        Ok(())
    }
}

fn read_env(name: &str) -> Option<u32> {
    std::env::var(name).ok()?.trim().parse().ok()
}
