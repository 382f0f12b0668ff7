//! Lower central series of free groups: Hall basic commutators, the Magnus
//! expansion, and extraction of graded classes.

pub mod graded;
pub mod hall;
pub mod series;

pub use graded::{collect, GradedClass};
pub use hall::{basics_with_content, enumerate_basic, witt_count, CommutatorTree, Leaf};
pub use series::{lcs_weight, magnus_expand, LcsWeight, TruncatedSeries};
