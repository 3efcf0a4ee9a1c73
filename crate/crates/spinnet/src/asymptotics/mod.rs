//! Semiclassical approximations of 9j symbols with some spins large.

mod formulas;
mod node;
mod pattern;
mod plan;

pub use formulas::{approx_9j_45, approx_9j_63, Asym45Params, Asym63Params, AsymError};
pub use node::{classify_node, classify_triad, NodeClass};
pub use pattern::{nine_j_images, to_pattern, LargePattern};
pub use plan::{disentangle_plan, DFactor, DisentanglePlan, NodeAudit, PlanError};
