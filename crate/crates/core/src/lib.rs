pub mod analytic;
pub mod anchors;
pub mod classify;
pub mod cyclotomic;
pub mod error;
pub mod explicit;
pub mod goldbach;
pub mod newton;
pub mod polycore;
pub mod primes;
pub mod zetafact;

pub use classify::Classification;
pub use cyclotomic::CyclotomicVerdict;
pub use error::{Error, Result};
pub use polycore::{BivariateLocalFactor, FormalSeries2, MultiPoly, UniPoly};
pub use zetafact::{MultiZetaFactorization, ZetaFactorization};
