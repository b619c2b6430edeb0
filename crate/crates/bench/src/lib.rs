//! Shared inputs for the benchmarks.

use natbound_core::analytic::ZetaZerosTable;
use natbound_core::anchors;
use natbound_core::goldbach::VonMangoldtTable;
use natbound_core::polycore::{parse_uni, BivariateLocalFactor, MultiPoly, UniPoly};
use num_complex::Complex64;

/// Bivariate factors with a label, ordered roughly by cost.
pub fn local_factors() -> Vec<(&'static str, BivariateLocalFactor)> {
    vec![
        ("crossing", anchors::crossing_example()),
        ("zero_free", anchors::zero_free_example()),
        ("gsp6", anchors::gsp6()),
    ]
}

/// A degree-12 cyclotomic product and a Lehmer-type non-cyclotomic input.
pub fn univariate_inputs() -> Vec<(&'static str, UniPoly)> {
    vec![
        (
            "cyclotomic_deg12",
            parse_uni("(1 - X)*(1 + X)*(1 - X + X^2)*(1 + X + X^2 + X^3 + X^4)*(1 + X^4)")
                .expect("valid"),
        ),
        (
            "lehmer",
            parse_uni("1 + X - X^3 - X^4 - X^5 - X^6 - X^7 + X^9 + X^10").expect("valid"),
        ),
    ]
}

/// `1 + (X1 + X1 X2 + X2^2) X3 + X1^2 X2^2 X3^2`.
pub fn multivariate_input() -> MultiPoly {
    MultiPoly::from_i64(
        2,
        &[
            (&[0, 0, 0], 1),
            (&[1, 0, 1], 1),
            (&[1, 1, 1], 1),
            (&[0, 2, 1], 1),
            (&[2, 2, 2], 1),
        ],
    )
}

/// Evaluation points for ζ: on the real axis, the critical line and far up.
pub fn zeta_points() -> Vec<(&'static str, Complex64)> {
    vec![
        ("s=2", Complex64::new(2.0, 0.0)),
        ("first_zero", Complex64::new(0.5, 14.134725141734693)),
        ("t=1000", Complex64::new(0.5, 1000.0)),
    ]
}

pub fn zeros() -> ZetaZerosTable {
    ZetaZerosTable::bundled()
}

pub fn lambda_table(n: usize) -> VonMangoldtTable {
    VonMangoldtTable::new(n).expect("table size within limits")
}
