use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Largest order a ring table may have before construction refuses.
pub const DEFAULT_MAX_ORDER: usize = 4096;
/// Largest top ring for which intermediate-algebra lattices are enumerated.
pub const DEFAULT_MAX_LATTICE_ORDER: usize = 1024;
/// Element indices are stored as `u16`.
pub const HARD_MAX_ORDER: usize = u16::MAX as usize;

pub const ORDER_ENV_VAR: &str = "RINGLAT_MAX_ORDER";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_lattice_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_lattice_order: DEFAULT_MAX_LATTICE_ORDER,
        }
    }
}

impl Limits {
    /// Process-wide limits. `RINGLAT_MAX_ORDER` overrides both bounds; it is
    /// read once.
    pub fn get() -> Limits {
        static LIMITS: OnceLock<Limits> = OnceLock::new();
        *LIMITS.get_or_init(|| {
            let mut limits = Limits::default();
            if let Some(v) = std::env::var(ORDER_ENV_VAR)
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
            {
                let v = v.clamp(2, HARD_MAX_ORDER);
                limits.max_order = v;
                limits.max_lattice_order = v;
            }
            limits
        })
    }

    pub(crate) fn check_order(what: &'static str, size: u128) -> Result<usize> {
        let limit = Limits::get().max_order;
        if size > limit as u128 {
            return Err(Error::SizeLimit { what, size, limit });
        }
        Ok(size as usize)
    }

    pub(crate) fn check_lattice(what: &'static str, size: usize) -> Result<()> {
        let limit = Limits::get().max_lattice_order;
        if size > limit {
            return Err(Error::SizeLimit {
                what,
                size: size as u128,
                limit,
            });
        }
        Ok(())
    }
}
