//! Size caps for the exponential oracles. `BCX_MAX_EDGES` overrides every
//! edge cap at once.

use std::sync::OnceLock;

pub const DEFAULT_CYCLE_EDGES: usize = 20;
pub const DEFAULT_BC_EDGES: usize = 20;
pub const DEFAULT_K4_ORACLE_EDGES: usize = 14;
pub const DEFAULT_SUBDIVISION_VERTICES: usize = 12;

fn env_override() -> Option<usize> {
    static CELL: OnceLock<Option<usize>> = OnceLock::new();
    *CELL.get_or_init(|| {
        std::env::var("BCX_MAX_EDGES")
            .ok()
            .and_then(|s| s.trim().parse().ok())
    })
}

pub fn cycle_edges() -> usize {
    env_override().unwrap_or(DEFAULT_CYCLE_EDGES)
}

pub fn bc_edges() -> usize {
    env_override().unwrap_or(DEFAULT_BC_EDGES)
}

pub fn k4_oracle_edges() -> usize {
    env_override().unwrap_or(DEFAULT_K4_ORACLE_EDGES)
}

pub fn subdivision_vertices() -> usize {
    DEFAULT_SUBDIVISION_VERTICES
}
