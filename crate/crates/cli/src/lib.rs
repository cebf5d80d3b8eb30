//! Batch driver over the `cdcrit` library: graph sources, the parallel scan
//! pipeline with ordered output, and the open-problem probe.

pub mod enumerate;
pub mod input;
pub mod scan;

pub use enumerate::{enumerate_connected_graphs, LabeledGraphs};
pub use input::{parse_order_range, Item, Payload, Source};
pub use scan::{probe_open_problem, scan, Filter, ScanError, ScanOptions, ScanRecord, SweepSummary};
