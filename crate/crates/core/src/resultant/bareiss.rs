//! Fraction-free determinant over Z[i].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::exact::{GaussianInteger, GaussianRational};

/// Exact determinant of a square matrix over Q(i).
///
/// Each row is first scaled to Gaussian-integer entries by the lcm of its
/// denominators; Bareiss elimination then runs without fractions and the
/// accumulated scale is divided out once at the end. Pivoting takes the
/// first nonzero entry of the column.
pub fn determinant(rows: &[Vec<GaussianRational>]) -> GaussianRational {
    let dim = rows.len();
    assert!(rows.iter().all(|r| r.len() == dim), "matrix is not square");
    if dim == 0 {
        return GaussianRational::one();
    }

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<GaussianInteger>> = rows
        .iter()
        .map(|row| {
            let l = row
                .iter()
                .filter(|e| !e.is_zero())
                .fold(BigInt::one(), |l, e| l.lcm(e.den()));
            let out = row
                .iter()
                .map(|e| {
                    if e.is_zero() {
                        GaussianInteger::zero()
                    } else {
                        e.numerator().scale(&(&l / e.den()))
                    }
                })
                .collect();
            scale *= &l;
            out
        })
        .collect();

    let det = bareiss_in_place(&mut a);
    GaussianRational::from_gaussian_integer(det) / GaussianRational::from(scale)
}

/// Destroys `a`; returns its determinant.
pub(crate) fn bareiss_in_place(a: &mut [Vec<GaussianInteger>]) -> GaussianInteger {
    let dim = a.len();
    let mut negate = false;
    let mut prev = GaussianInteger::one();
    for k in 0..dim {
        let Some(p) = (k..dim).find(|&r| !a[r][k].is_zero()) else {
            return GaussianInteger::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        if k + 1 == dim {
            break;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..dim {
                let kept = &row[j];
                let lead = if kept.is_zero() {
                    None
                } else {
                    Some(pivot * kept)
                };
                let cross = if factor.is_zero() || pivot_row[j].is_zero() {
                    None
                } else {
                    Some(&factor * &pivot_row[j])
                };
                let num = match (lead, cross) {
                    (None, None) => continue,
                    (Some(x), None) => x,
                    (None, Some(y)) => -y,
                    (Some(x), Some(y)) => &x - &y,
                };
                row[j] = if prev.is_one() { num } else { num.div_exact(&prev) };
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[dim - 1][dim - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
