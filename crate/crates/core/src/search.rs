use serde::{Deserialize, Serialize};

/// Largest group order handled by the exhaustive kernels (they track used
/// elements in a `u128`).
pub const EXACT_SEARCH_CEILING: usize = 128;

/// Default node budget used by the CLI and the free-function entry points.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// A search-tree node limit. Budgets count nodes rather than time so that
/// results are identical across machines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget(pub u64);

impl Budget {
    pub fn nodes(self) -> u64 {
        self.0
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl From<u64> for Budget {
    fn from(nodes: u64) -> Self {
        Budget(nodes)
    }
}

/// Outcome of an exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchVerdict<T> {
    /// A witness was found.
    Found(T),
    /// The search space was exhausted: no witness exists.
    Exhausted,
    /// The node budget ran out before the search completed.
    BudgetExceeded,
}

impl<T> SearchVerdict<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            SearchVerdict::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_found(self) -> Option<T> {
        match self {
            SearchVerdict::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchVerdict::Found(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self, SearchVerdict::Exhausted)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchVerdict<U> {
        match self {
            SearchVerdict::Found(t) => SearchVerdict::Found(f(t)),
            SearchVerdict::Exhausted => SearchVerdict::Exhausted,
            SearchVerdict::BudgetExceeded => SearchVerdict::BudgetExceeded,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            SearchVerdict::Found(_) => "found",
            SearchVerdict::Exhausted => "none",
            SearchVerdict::BudgetExceeded => "unknown",
        }
    }
}

/// Node counter shared by the backtracking kernels.
#[derive(Debug)]
pub(crate) struct NodeCounter {
    used: u64,
    limit: u64,
}

impl NodeCounter {
    pub(crate) fn new(budget: Budget) -> Self {
        NodeCounter {
            used: 0,
            limit: budget.nodes(),
        }
    }

    /// Counts one node; returns `false` once the budget is spent.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        self.used += 1;
        self.used <= self.limit
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

#[inline]
pub(crate) fn bit(i: usize) -> u128 {
    1u128 << i
}

/// Mask with every bit at index `>= from` set.
#[inline]
pub(crate) fn mask_from(from: usize) -> u128 {
    if from >= 128 {
        0
    } else {
        !0u128 << from
    }
}

/// Iterates set bits of a mask in increasing order.
pub(crate) fn bits(mut mask: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}
