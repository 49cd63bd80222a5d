//! GIT stability of weighted point configurations in `Pᵈ`, stabilizers,
//! the strictly semistable strata of `(P²)⁶`, and one-parameter subgroup
//! degenerations.

mod config;
mod conic;
mod ops;
mod stability;
mod stabilizer;
mod stratum;

pub use config::{parse_config, PointConfiguration, WeightVector};
pub use conic::lies_on_conic;
pub use ops::{
    adapted_limit, degeneration_target, ops_limit, polystable_degeneration, Degeneration,
    DegenerationStep, OneParameterSubgroup,
};
pub use stability::{
    is_strictly_semistable_pattern, stability_status, StabilityStatus, StabilityVerdict, Witness,
    WitnessKind,
};
pub use stabilizer::{orbit_dimension, stabilizer_dimension};
pub use stratum::{classify, match_table1, stratum_signature, LineRecord, Stratum, StratumSignature, Table1Label};
