use std::time::Duration;

/// Resource caps applied by the expensive operations.
///
/// Exceeding a cap is always reported as an error; no operation returns a
/// partial answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Largest order accepted by [`crate::group::Group::direct_product`].
    pub max_product_order: usize,
    /// Largest group whose automorphism group is found by generator-image search.
    pub max_group_aut_order: usize,
    /// Largest degree for the S-ring automorphism search.
    pub max_sring_order: usize,
    /// Largest group handled by exhaustive S-ring enumeration.
    pub max_enumeration_order: usize,
    /// Largest permutation group that may be listed element by element.
    pub max_listed_elements: u64,
    /// Wall-clock budget of a single automorphism search.
    pub time_budget: Duration,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_product_order: 4096,
            max_group_aut_order: 64,
            max_sring_order: 256,
            max_enumeration_order: 12,
            max_listed_elements: 1 << 20,
            time_budget: Duration::from_secs(300),
        }
    }
}
