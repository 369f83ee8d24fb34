//! Critical-line zeros of `W(t)`, zero counting, real zeros in `(1/2, 1)` and gap statistics.

mod gaps;
mod scan;
mod stark;
mod store;

pub use gaps::{gap_stats, GapTable};
pub use scan::{refine_bracket, scan_zeros, ScanConfig, ScanOutcome, ZeroRecord};
pub use stark::{real_zero_in_unit_interval, stark_error_weight, stark_prediction, RealZero, StarkEstimate};
pub use store::{
    merge_intervals, merge_zeros, read_zero_table, sidecar_path, write_zero_table, ZeroTableMeta, SCHEMA_VERSION,
};
