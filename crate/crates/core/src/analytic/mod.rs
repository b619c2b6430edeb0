//! Numerical layer: Riemann zeta, the zeros table, Euler products and the
//! additive-independence diagnostic for zero ordinates.

mod euler;
mod zeros;
mod zeta;

pub use euler::{
    abscissa, euler_product_blocked, euler_product_eval, multi_euler_decades, EulerProductValue,
    PRIME_BLOCK,
};
pub use zeros::{
    independence_margin, load_zeros, parse_zeros, IndependenceReport, ZetaZerosTable,
    MAX_INDEPENDENCE_COUNT, ZERO_TOL,
};
pub use zeta::zeta_eval;
