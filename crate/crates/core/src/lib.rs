//! Exact Hosoya indices of multigraph families.
//!
//! The index `Z(G)` (number of matchings, the empty one included) is computed
//! two independent ways: straight from the graph in [`oracle`], and as the
//! numerator of a continued fraction in [`contfrac`]. [`families`] builds the
//! graphs and the transforms between them, and [`verify`] checks that both
//! sides agree.

pub mod bigrat;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod families;
pub mod family_spec;
pub mod multigraph;
pub mod oracle;
pub mod verify;

pub use bigrat::FormalFraction;
pub use contfrac::{CfSpec, Convergent, GeneralCF, NegativeCF, TreeCFSpec};
pub use error::{Error, Result};
pub use families::{CaterpillarBondParams, RingParams};
pub use family_spec::FamilySpec;
pub use multigraph::Multigraph;
pub use oracle::{hosoya, hosoya_by_definition, matching_count};
