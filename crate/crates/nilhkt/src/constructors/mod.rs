//! Builders: the catalog of concrete algebras, quaternion multiplication
//! matrices, the correspondence between 2-step metric algebras with abelian
//! hypercomplex structure and tuples of commuting skew endomorphisms, and
//! the one- and two-parameter deformation families.

mod catalog;
mod families;
mod jmap;
mod quaternion;

pub use catalog::{catalog, catalog_names, CatalogError};
pub use families::{
    blockwise_right_reference, one_parameter_family, one_parameter_jmap, two_parameter_family,
    two_parameter_jmap, FamilyError,
};
pub use jmap::{from_jmap, to_jmap, JMap, JMapError};
pub use quaternion::{quaternion_mult_matrix, MulSide, QuaternionCoord};
