//! Extreme points of finite integer point sets, by exact LP feasibility.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Whether `target` lies in the convex hull of `points`. Phase-one simplex
/// with Bland's rule in exact arithmetic.
pub fn in_convex_hull(points: &[Vec<i64>], target: &[i64]) -> bool {
    if points.is_empty() {
        return false;
    }
    let n = target.len();
    let m = points.len();
    let rows = n + 1;
    let cols = m + rows;
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));

    // Σ λ_j P_j = target, Σ λ_j = 1, λ >= 0, artificial slack per row
    let mut tab: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row = vec![BigRational::zero(); cols + 1];
            for (j, pt) in points.iter().enumerate() {
                row[j] = if r < n { q(pt[r]) } else { q(1) };
            }
            row[m + r] = q(1);
            row[cols] = if r < n { q(target[r]) } else { q(1) };
            if row[cols].is_negative() {
                for (j, x) in row.iter_mut().enumerate() {
                    if j != m + r {
                        *x = -x.clone();
                    }
                }
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (m..cols).collect();
    let mut obj: Vec<BigRational> = (0..=cols)
        .map(|j| {
            if (m..cols).contains(&j) {
                BigRational::zero()
            } else {
                tab.iter().map(|row| row[j].clone()).sum()
            }
        })
        .collect();

    while let Some(enter) = (0..cols).find(|&j| obj[j].is_positive()) {
        let leave = (0..rows)
            .filter(|&r| tab[r][enter].is_positive())
            .map(|r| (tab[r][cols].clone() / tab[r][enter].clone(), basis[r], r))
            .min_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)))
            .map(|(_, _, r)| r);
        let Some(r) = leave else {
            // unbounded cannot happen: the objective is bounded below by 0
            unreachable!("phase one is bounded");
        };
        let piv = tab[r][enter].clone();
        for x in tab[r].iter_mut() {
            *x /= piv.clone();
        }
        let prow = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, p) in row.iter_mut().zip(&prow) {
                    *x -= f.clone() * p;
                }
            }
        }
        let f = obj[enter].clone();
        for (x, p) in obj.iter_mut().zip(&prow) {
            *x -= f.clone() * p;
        }
        basis[r] = enter;
    }
    obj[cols].is_zero()
}

/// Support points that are not interior to any segment of their convex
/// hull, i.e. its vertices. Duplicates are merged; output is sorted.
pub fn ext_points(support: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let Some(first) = support.first() else {
        return Err(Error::Precondition("empty support".into()));
    };
    let dim = first.len();
    if let Some(bad) = support.iter().find(|p| p.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: bad.len(),
        });
    }
    let mut pts = support.to_vec();
    pts.sort();
    pts.dedup();
    Ok((0..pts.len())
        .filter(|&i| {
            let others: Vec<Vec<i64>> = pts
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            !in_convex_hull(&others, &pts[i])
        })
        .map(|i| pts[i].clone())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn midpoint_dropped() {
        let ext = ext_points(&[vec![0, 0], vec![2, 0], vec![1, 0]]).unwrap();
        assert_eq!(ext, vec![vec![0, 0], vec![2, 0]]);
        let ext = ext_points(&[vec![1, 0], vec![1, 1]]).unwrap();
        assert_eq!(ext.len(), 2);
    }

    #[test]
    fn square_with_centre_and_edge_points() {
        let mut pts = vec![];
        for x in 0..=2 {
            for y in 0..=2 {
                pts.push(vec![x, y]);
            }
        }
        let ext = ext_points(&pts).unwrap();
        assert_eq!(ext, vec![vec![0, 0], vec![0, 2], vec![2, 0], vec![2, 2]]);
    }

    #[test]
    fn hull_membership() {
        let tri = [vec![0, 0, 0], vec![4, 0, 0], vec![0, 4, 0], vec![0, 0, 4]];
        assert!(in_convex_hull(&tri, &[1, 1, 1]));
        assert!(in_convex_hull(&tri, &[0, 2, 2]));
        assert!(!in_convex_hull(&tri, &[2, 2, 1]));
        assert!(!in_convex_hull(&tri, &[-1, 0, 0]));
    }

    #[test]
    fn errors() {
        assert!(ext_points(&[]).is_err());
        assert!(matches!(
            ext_points(&[vec![0, 0], vec![1]]),
            Err(Error::DimensionMismatch {
                expected: 2,
                got: 1
            })
        ));
    }
}
