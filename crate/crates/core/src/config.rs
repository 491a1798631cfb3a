use std::sync::OnceLock;

/// Resource limits for enumeration-heavy operations.
///
/// Operations that would exceed a limit fail with [`crate::Error::Budget`]
/// instead of degrading silently.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of group elements enumerated explicitly.
    pub elements: u64,
    /// Maximum order of a group whose full multiplication table is built.
    pub table_order: usize,
    /// Maximum number of normal subgroups in a lattice.
    pub lattice_nodes: usize,
    /// Maximum number of subgroups produced by a subgroup enumeration.
    pub subgroups: usize,
    /// Maximum number of generator lifts tried by supplement searches.
    pub lifts: u64,
    /// Maximum order accepted by the isomorphism test.
    pub isomorphism_order: usize,
    /// Maximum number of vectors scanned when searching an intertwiner space.
    pub intertwiner_scan: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            elements: 1_000_000,
            table_order: 4096,
            lattice_nodes: 10_000,
            subgroups: 200_000,
            lifts: 1_000_000,
            isomorphism_order: 1000,
            intertwiner_scan: 1_000_000,
        }
    }
}

impl Budget {
    /// Default budget with `GT_BUDGET` applied to the element limit.
    pub fn from_env() -> Self {
        let mut b = Budget::default();
        if let Some(n) = std::env::var("GT_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
        {
            b.elements = n;
        }
        b
    }

    pub fn with_elements(mut self, n: u64) -> Self {
        self.elements = n;
        self
    }
}

static GLOBAL: OnceLock<Budget> = OnceLock::new();

/// Process-wide budget. Set once (CLI flag or environment), read everywhere.
pub fn budget() -> Budget {
    *GLOBAL.get_or_init(Budget::from_env)
}

/// Installs a process-wide budget. Returns false if one was already fixed.
pub fn set_budget(b: Budget) -> bool {
    GLOBAL.set(b).is_ok()
}
