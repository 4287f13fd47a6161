//! Library side of the command-line front end: trace rendering, the JSON
//! record schema, the DOT emitter, and the batch verification harness.

pub mod record;
pub mod render;
pub mod verify;

pub use record::{pair_record, render_dot, KirbyRecord, LensRecord, PairRecord};
pub use render::render_trace;
pub use verify::{check_pair, verify_range, PropertyTally, VerificationReport, PROPERTIES};
