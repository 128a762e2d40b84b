//! Exact lattice-tetrahedron toolkit.
//!
//! Everything runs in checked integer / rational arithmetic: normalization of
//! a lattice tetrahedron with a clean face to the standard form
//! `conv(0, e1, e2, (a,b,n))`, unimodular equivalence and canonical
//! representatives, interior-point counting (closed formula plus brute-force
//! census), classification of tetrahedra by interior point count, exact
//! lattice widths with plane occupancy profiles, and bulk parameter sweeps.
//!
//! See the `examples/` directory for a runnable tour of each capability.

pub mod classify;
pub mod equiv;
pub mod error;
pub mod exact;
pub mod geom;
pub mod normalize;
pub mod pointcount;
pub mod survey;
pub mod width;

pub use classify::{classify, is_empty, InteriorPointInfo, RipeQuadruple, TetClass};
pub use equiv::{are_equivalent, canonical_pair, CanonicalPair, EquivalenceVerdict};
pub use error::{Error, Result};
pub use exact::Rational;
pub use geom::{
    BarycentricCoords, Direction, LatticePoint, LatticeTetrahedron, Mat3, PointLocation,
    StandardTet, UnimodularMap,
};
pub use normalize::{to_standard, NormalizationResult};
pub use pointcount::{census, interior_count_formula, interior_points_formula, Census};
pub use survey::{sweep, CatalogRecord, ConjectureReport};
pub use width::{lattice_width, lattice_width_general, WidthReport};
