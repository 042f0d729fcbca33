//! Group enumeration by closure, classical target orders, generation
//! certificates and exhaustive non-generation scans.

mod certify;
mod closure;
mod groups;
pub mod pack;
mod scan;


pub use certify::{conditions_for_pair, verify_generation, verify_generation_capped};
pub use closure::{closure, closure_with, ClosureOptions, ClosureResult, ElementStore, DEFAULT_CAP};
pub use groups::{target_order, TargetGroup};
pub use scan::{classify_pair, nongeneration_scan, NonGenerationCertificate, ScanCase, ScanMode};
