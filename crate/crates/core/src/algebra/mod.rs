//! Carrier sets, subsemigroup closure, and the exhaustive regularity oracle.

mod closure;
mod regular;
mod set;

pub use closure::{check_closed, closure, closure_with_workers, ClosedCertificate};
pub use regular::{
    find_witness, find_witness_linear, find_witness_with_workers, is_regular_element,
    is_regular_semigroup, is_regular_semigroup_with_workers, is_witness, Carrier, ElementVerdict,
    RegularityReport, ReportStats, SearchStats, WitnessSearch,
};
pub use set::ElementSet;
