pub mod cancel;
pub mod error;
pub mod exactalg;
pub mod germ;
pub mod grobner;
pub mod oracle;
pub mod presentations;
pub mod semigroup;
pub mod sweep;
pub mod toric;

pub use cancel::CancelToken;
pub use error::{Error, Result};
