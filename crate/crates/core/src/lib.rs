pub mod closed_forms;
pub mod error;
pub mod exact;
pub mod families;
pub mod golden;
pub mod identities;
pub mod linalg;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{GaussianRational, Rational};
pub use series::TruncatedSeries;
