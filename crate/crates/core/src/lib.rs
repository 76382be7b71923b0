pub mod conductor;
pub mod error;
pub mod exact;
pub mod kummer;
pub mod monodromy;
pub mod padic;
pub mod poly;
pub mod ramification;
pub mod scenario;
pub mod special_fiber;

pub use error::{Error, Result};
