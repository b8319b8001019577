//! Kazhdan-Lusztig right-cell rims for symmetric groups.
pub mod diagram;
pub mod error;
pub mod families;
pub mod paths;
pub mod rs;
pub mod shape;
pub mod symmetric;

pub use diagram::{Diagram, DiagramTableau, Node};
pub use error::{Error, Result};
pub use families::{DeterminingTuple, FamilyParams, Guard};
pub use paths::{FormClass, KPath};
pub use shape::{Ordering3, StuShape};
pub use symmetric::{Composition, GeneratorSet, InversionSet, Partition, Permutation};
