//! Named local factors used as reference inputs across the crate.

use crate::polycore::BivariateLocalFactor;

/// GSp6 local factor `1 + x y + x^2 y + x^3 y + x^4 y + x^5 y^2`.
pub fn gsp6() -> BivariateLocalFactor {
    BivariateLocalFactor::from_int_terms(&[
        (0, 0, 1),
        (1, 1, 1),
        (2, 1, 1),
        (3, 1, 1),
        (4, 1, 1),
        (5, 2, 1),
    ])
}

/// Cubic-surface local factor
/// `1 + (1 - X^3 Y)(X^6 Y^-2 + X^5 Y^-1 + X^4 + X^2 Y^2 + X Y^3 + Y^4) - X^9 Y^3`
/// with `X = p^(-1/4)`, `Y = p^(3/4) y`, i.e. `X^a Y^b = x^((3b - a)/4) y^b`.
///
/// Its `y^0` part is `1 + x^-1 - x^-2`, so it is not an Euler factor in the
/// strict sense; it is used for local-zero clustering only.
pub fn cubic_surface() -> BivariateLocalFactor {
    let xy: [(i64, i64, i64); 14] = [
        (0, 0, 1),
        (6, -2, 1),
        (5, -1, 1),
        (4, 0, 1),
        (2, 2, 1),
        (1, 3, 1),
        (0, 4, 1),
        (9, -1, -1),
        (8, 0, -1),
        (7, 1, -1),
        (5, 3, -1),
        (4, 4, -1),
        (3, 5, -1),
        (9, 3, -1),
    ];
    let terms: Vec<(i64, i64, i64)> = xy
        .iter()
        .map(|&(a, b, c)| {
            debug_assert_eq!((3 * b - a) % 4, 0);
            ((3 * b - a) / 4, b, c)
        })
        .collect();
    BivariateLocalFactor::from_int_terms(&terms)
}

/// `1 + y + x y^2`: boundary at `Re s = 1/2` with infinitely many crossing
/// zeta factors.
pub fn crossing_example() -> BivariateLocalFactor {
    BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (0, 1, 1), (1, 2, 1)])
}

/// `1 - x^2 y + y`: ghost `1 - x^2 y`, no local zeros right of `Re s = 2`.
pub fn zero_free_example() -> BivariateLocalFactor {
    BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (2, 1, -1), (0, 1, 1)])
}

/// `1 - x y`, the local factor of `1/ζ(s - 1)`.
pub fn shifted_zeta_inverse() -> BivariateLocalFactor {
    BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (1, 1, -1)])
}

/// `1 + 2 x y`, non-cyclotomic ghost.
pub fn non_cyclotomic_ghost() -> BivariateLocalFactor {
    BivariateLocalFactor::from_int_terms(&[(0, 0, 1), (1, 1, 2)])
}
