pub mod error;
pub mod exact;
pub mod instance;
pub mod poly;
pub mod closedform;
pub mod resultant;

pub use error::{Error, Result};
pub use exact::{GaussianRational, GaussianInteger};
pub use poly::{Family, Polynomial, QuadrinomialSpec};
pub use resultant::{DiscriminantResult, Method};
pub use closedform::dispatch;
