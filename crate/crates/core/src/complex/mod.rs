//! Graded free chain complexes over F2 polynomial rings.

pub mod cancel;
pub mod cube;
pub mod f2;
pub mod fixtures;
pub mod free;
pub mod koszul;
pub mod poly;
pub mod resolution;

pub use cancel::{cancel_pair, change_basis, unit_cancel, unit_cancel_where};
pub use cube::{
    homfly_cube, homfly_cube_with, middle_homfly_homology, sl_minus1_closed_form,
    sl_minus1_homology, Resolution,
};
pub use fixtures::{appendix_fixtures, parse_fixture, FixtureReport};
pub use free::{graded_homology, iterated_homology, FreeComplex, GradedDims};
pub use koszul::koszul;
pub use poly::{LinearQuotient, PolyRingZ2, PolyZ2};
pub use resolution::{
    complement_homology, resolution_cycles, resolution_homology, resolved_cube_homology,
};
