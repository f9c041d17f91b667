//! From birth-death generating-function PDEs to Kovacic verdicts.
//!
//! The Laplace transform in `t` turns each PDE into a linear ODE in `z`
//! with parameter `s`. The (1,1) first-order ODE is lifted to a homogeneous
//! second-order one, both families are brought to `H'' = rH`, and the
//! verdicts are certified over exact rational samples of `s`.

mod appendix_c;
mod certificate;
mod ode;
mod samples;
mod table;

use serde::Serialize;
use thiserror::Error;

pub use appendix_c::{appendix_c_case, s_for_shat, AppendixCRecord, AppendixPattern, Convention};
pub use certificate::{
    displayed_omega, heun_label, proposition1_certificate, proposition1_certificate_with, proposition2_certificate,
    proposition2_certificate_with, singularity_inventory, FamilyVerdict, Parameters, Prop1Sample, Prop2Sample, SampleOutcomes,
    SingularityInfo,
};
pub use ode::{build_12_ode, build_first_order_11, family11, lift_to_second_order, normal_form, LaplaceODE, NormalForm, PsiFactor, RF};
pub use samples::{sample_s, DEFAULT_SAMPLE_COUNT, DEFAULT_SAMPLE_SEED};
pub use table::{
    alpha_table_symbolic, assignment_for, conjecture_check, conjecture_flags, AffineInS, MEntry, MRow, MTable, GOLDEN_11, GOLDEN_12,
};

pub use kovacic::Execution;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, PartialOrd, Ord)]
pub enum Family {
    #[serde(rename = "(1,1)-distinct")]
    Linear11Distinct,
    #[serde(rename = "(1,1)-equal")]
    Linear11Equal,
    #[serde(rename = "(1,2)")]
    Quadratic12,
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("lift undefined")]
    LiftUndefined,
    #[error("pattern requires integer ŝ")]
    PatternRequiresIntegerShat,
    #[error("ŝ undefined when β = δ")]
    ShatUndefined,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("table construction failed: {0}")]
    TableFit(String),
    #[error(transparent)]
    Exact(#[from] exactmath::ExactError),
}
