//! The Segre cubic and the Igusa quartic in `P⁵`: exact evaluation,
//! singularities, the fifteen singular lines of the quartic, the ten nodes of
//! the cubic, and the Gauss map between them.

mod duality;
mod forms;
mod lines;
mod segre;

pub use duality::{duality_sample_check, gauss_image, gauss_image_f64, DualityReport};
pub use forms::{evaluate, evaluate_f64, gradient, is_singular_point, lies_on, HypersurfaceId, P5Point};
pub use lines::{line_incidence, pair_partition_lines, IntersectionPoint, LineIncidence, PairPartitionLine};
pub use segre::{
    is_segre_node, random_pair_pattern, random_segre_point, search_segre_singularities, segre_nodes,
    third_point, SingularSearch,
};
