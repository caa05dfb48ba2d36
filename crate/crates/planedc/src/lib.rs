//! Plane diameter completion toolkit.
//!
//! Decides whether a plane graph has a plane completion of diameter at most
//! `d` under a total edge budget `q` and a per-face budget `k` (the BBFPDC
//! problem), preserving the given embedding. The solver runs a dynamic
//! program over a sphere-cut decomposition of the cylindrical enhancement of
//! the input; a brute-force oracle, decomposition machinery, and the
//! SAT-based hardness instance generators round out the toolkit.

pub mod error;
pub mod annulus;
pub mod enhancement;
pub mod fixtures;
pub mod oracle;
pub mod params;
pub mod plane;

pub use error::{Error, Result};
