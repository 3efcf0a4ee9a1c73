use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

/// Node type by the number of large spins meeting there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NodeClass {
    /// No large spin.
    Case03,
    /// Two large, one small.
    Case21,
    /// Three large.
    Case30,
    /// A lone large spin cannot close a triangle with two small ones.
    Inadmissible,
}

pub fn classify_node(large: [bool; 3]) -> NodeClass {
    match large.iter().filter(|&&x| x).count() {
        0 => NodeClass::Case03,
        1 => NodeClass::Inadmissible,
        2 => NodeClass::Case21,
        _ => NodeClass::Case30,
    }
}

pub fn classify_triad<L: Ord>(triad: &[L; 3], large: &BTreeSet<L>) -> NodeClass {
    classify_node([large.contains(&triad[0]), large.contains(&triad[1]), large.contains(&triad[2])])
}
