pub mod braid;
pub mod complex;
pub mod composition;
pub mod corpus;
pub mod cycles;
pub mod diagram;
pub mod error;
pub mod gradings;
pub mod homfly;
pub mod laurent;

pub use braid::{parse_braid, BraidWord};
pub use composition::{Composer, CompositionTerm, JaegerConvention, SignConvention};
pub use cycles::{enumerate_cycles, LocalType, MultiCycle, TurnStats};
pub use diagram::{close_braid, Crossing, Diagram, SeifertData, Slot};
pub use error::{KnotError, ParseError};
pub use homfly::{Homfly, ZQuotient};
pub use laurent::{Coeff, Exps, Laurent, MonomialMap, Var};

pub type LaurentPoly = Laurent<num_bigint::BigInt>;
pub type HomflyValue = ZQuotient<num_bigint::BigInt>;
pub type HomflyEvaluator = Homfly<num_bigint::BigInt>;
