//! Shared inputs for the benchmarks.

use powergraph_core::{FiniteGroup, Result};

/// Groups of increasing order used by the graph benchmarks.
pub fn sample_groups() -> Result<Vec<(String, FiniteGroup)>> {
    Ok(vec![
        ("Z60".into(), FiniteGroup::cyclic(60)?),
        ("A5".into(), FiniteGroup::alternating(5)?),
        ("S5".into(), FiniteGroup::symmetric(5)?),
        ("Z256".into(), FiniteGroup::cyclic(256)?),
        ("D128".into(), FiniteGroup::dihedral(128)?),
        ("Z504".into(), FiniteGroup::cyclic(504)?),
    ])
}

/// Highly composite inputs for the number-theory benchmarks.
pub const SAMPLE_N: [u64; 4] = [720_720, 997_920, 1 << 31, 2_095_133_040];
