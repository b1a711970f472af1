//! Bundle calculus on Grassmannians: partitions, Littlewood–Richardson
//! products, closed-form exterior powers and the label-to-weight dictionary.

mod label;
mod lr;
mod parse;
mod partition;

pub use label::{
    canonicalize, e_label_of, exterior_power, exterior_power_sum, label_to_weight, tensor, BundleLabel, BundleSum,
};
pub use lr::lr_coefficients;
pub use parse::parse_bundle;
pub use partition::Partition;
