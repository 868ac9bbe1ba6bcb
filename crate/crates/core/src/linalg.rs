//! Small exact linear algebra over the integers and rationals.
//!
//! Matrices here are at most a few dozen rows of rank at most 8, so plain
//! Gaussian elimination over `Ratio<i128>` is both exact and fast enough.

use num_integer::Integer;
use num_rational::Ratio;

pub type Q = Ratio<i128>;

/// Determinant of a square integer matrix (Bareiss fraction-free elimination).
pub fn det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|r| {
            debug_assert_eq!(r.len(), n);
            r.iter().map(|&x| x as i128).collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(a: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| a[r][col] != Q::from_integer(0)) else {
            continue;
        };
        a.swap(row, p);
        let inv = Q::from_integer(1) / a[row][col];
        for x in a[row].iter_mut() {
            *x *= inv;
        }
        for r in 0..a.len() {
            if r != row && a[r][col] != Q::from_integer(0) {
                let f = a[r][col];
                for c in 0..a[r].len() {
                    let v = a[row][c];
                    a[r][c] -= f * v;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

fn to_q(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| {
            debug_assert_eq!(r.len(), ncols);
            r.iter().map(|&x| Q::from_integer(x as i128)).collect()
        })
        .collect()
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut a = to_q(rows, ncols);
    rref(&mut a, ncols).len()
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        return v;
    }
    v.into_iter().map(|x| x / g).collect()
}

/// Clears denominators of a rational vector, returning a primitive integer vector.
pub fn clear_denominators(v: &[Q]) -> Vec<i64> {
    let l = v.iter().fold(1i128, |l, x| l.lcm(x.denom()));
    let ints: Vec<i64> = v.iter().map(|x| (x.numer() * (l / x.denom())) as i64).collect();
    primitive(ints)
}

/// Integer basis (primitive vectors) of `{x : rows · x = 0}`.
pub fn nullspace(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut a = to_q(rows, ncols);
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::from_integer(0); ncols];
            v[f] = Q::from_integer(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -a[r][f];
            }
            clear_denominators(&v)
        })
        .collect()
}

/// Solves `m x = b` for a square nonsingular `m`.
pub fn solve(m: &[Vec<i64>], b: &[Q]) -> Option<Vec<Q>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .zip(b)
        .map(|(r, &bi)| {
            let mut row: Vec<Q> = r.iter().map(|&x| Q::from_integer(x as i128)).collect();
            row.push(bi);
            row
        })
        .collect();
    let pivots = rref(&mut a, n);
    if pivots.len() < n {
        return None;
    }
    Some(a.iter().map(|r| r[n]).collect())
}

/// Transpose of a rectangular matrix given as rows.
pub fn transpose(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let Some(first) = rows.first() else {
        return Vec::new();
    };
    (0..first.len()).map(|c| rows.iter().map(|r| r[c]).collect()).collect()
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
