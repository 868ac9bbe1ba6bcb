//! Brute-force convex hulls of small integer point sets.
//!
//! This is deliberately independent of the root-theoretic constructions: it
//! sees only coordinates. Points are lifted to `(1, x)` and a facet is a
//! linear functional that is nonnegative on every lifted point and vanishes
//! on an affinely spanning subset of one dimension less.

use std::collections::BTreeSet;

use crate::linalg::{det, nullspace, rank, Q};

/// A face of codimension one inside the affine hull of the point set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    /// Lifted functional `f` with `f · (1, x) >= 0` on every point.
    pub functional: Vec<i64>,
    /// Indices of the points with `f · (1, x) = 0`, ascending.
    pub points: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

fn lift(p: &[i64]) -> Vec<i64> {
    let mut v = Vec::with_capacity(p.len() + 1);
    v.push(1);
    v.extend_from_slice(p);
    v
}

fn eval(f: &[i64], y: &[i64]) -> i64 {
    f.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Dimension of the affine hull (−1 encoded as `None` for an empty set).
pub fn affine_dim(points: &[Vec<i64>]) -> Option<usize> {
    if points.is_empty() {
        return None;
    }
    let lifted: Vec<Vec<i64>> = points.iter().map(|p| lift(p)).collect();
    Some(rank(&lifted) - 1)
}

/// All facets of `conv(points)` relative to its affine hull.
pub fn facets(points: &[Vec<i64>]) -> Vec<Facet> {
    let lifted: Vec<Vec<i64>> = points.iter().map(|p| lift(p)).collect();
    if lifted.is_empty() {
        return Vec::new();
    }
    let r = rank(&lifted);
    if r <= 1 {
        return Vec::new();
    }
    let width = lifted[0].len();
    let mut found: Vec<Facet> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();

    fn search(
        lifted: &[Vec<i64>],
        width: usize,
        need: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        found: &mut Vec<Facet>,
    ) {
        if chosen.len() == need {
            // Skip spans already known to lie in a facet.
            if found
                .iter()
                .any(|f| chosen.iter().all(|c| f.points.binary_search(c).is_ok()))
            {
                return;
            }
            let rows: Vec<Vec<i64>> = chosen.iter().map(|&c| lifted[c].clone()).collect();
            let Some(f) = nullspace(&rows, width)
                .into_iter()
                .find(|f| lifted.iter().any(|y| eval(f, y) != 0))
            else {
                return;
            };
            let vals: Vec<i64> = lifted.iter().map(|y| eval(&f, y)).collect();
            let pos = vals.iter().any(|&v| v > 0);
            let neg = vals.iter().any(|&v| v < 0);
            if pos && neg {
                return;
            }
            let f = if neg { f.iter().map(|x| -x).collect() } else { f };
            let points = (0..lifted.len()).filter(|&k| vals[k] == 0).collect();
            found.push(Facet { functional: f, points });
            return;
        }
        for k in start..lifted.len() {
            if lifted.len() - k < need - chosen.len() {
                break;
            }
            chosen.push(k);
            let rows: Vec<Vec<i64>> = chosen.iter().map(|&c| lifted[c].clone()).collect();
            if rank(&rows) == chosen.len() {
                search(lifted, width, need, k + 1, chosen, found);
            }
            chosen.pop();
        }
    }

    search(&lifted, width, r - 1, 0, &mut chosen, &mut found);
    found.sort_by(|a, b| a.points.cmp(&b.points));
    found
}

/// Face counts `(f_0, …, f_{d−1})` of `conv(points)`, by descending through
/// facets of facets. Only the vertex sets of faces are tracked.
pub fn face_vector(points: &[Vec<i64>]) -> Vec<usize> {
    face_vector_with(points, &facets(points))
}

/// [`face_vector`] with the facets of `conv(points)` already at hand.
pub fn face_vector_with(points: &[Vec<i64>], top: &[Facet]) -> Vec<usize> {
    let Some(d) = affine_dim(points) else {
        return Vec::new();
    };
    let mut counts = vec![0usize; d];
    if d == 0 {
        return counts;
    }
    let mut level: BTreeSet<Vec<usize>> = top.iter().map(|f| f.points.clone()).collect();
    counts[d - 1] = level.len();
    for k in (0..d - 1).rev() {
        let mut next = BTreeSet::new();
        for face in &level {
            let sub: Vec<Vec<i64>> = face.iter().map(|&i| points[i].clone()).collect();
            for f in facets(&sub) {
                next.insert(f.points.iter().map(|&i| face[i]).collect::<Vec<_>>());
            }
        }
        counts[k] = next.len();
        level = next;
    }
    counts
}

/// Pulling triangulation: cone the lexicographically least point over a
/// triangulation of every facet that misses it. Returns maximal simplices as
/// ascending index lists into `points`.
pub fn pulling_triangulation(points: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (0..points.len()).collect();
    let mut out: Vec<Vec<usize>> = pull(points, &idx)
        .into_iter()
        .map(|mut s| {
            s.sort();
            s
        })
        .collect();
    out.sort();
    out
}

fn pull(all: &[Vec<i64>], idx: &[usize]) -> Vec<Vec<usize>> {
    let pts: Vec<Vec<i64>> = idx.iter().map(|&k| all[k].clone()).collect();
    let dim = affine_dim(&pts).unwrap_or(0);
    let apex = (0..pts.len()).min_by(|&a, &b| pts[a].cmp(&pts[b])).unwrap();
    if dim == 0 {
        return vec![vec![idx[apex]]];
    }
    let mut out = Vec::new();
    for f in facets(&pts) {
        if f.points.binary_search(&apex).is_ok() {
            continue;
        }
        let sub: Vec<usize> = f.points.iter().map(|&k| idx[k]).collect();
        for mut s in pull(all, &sub) {
            s.push(idx[apex]);
            out.push(s);
        }
    }
    out
}

/// Normalized volume of `conv(points)` for a full-dimensional set.
pub fn normalized_volume(points: &[Vec<i64>]) -> i128 {
    pulling_triangulation(points)
        .into_iter()
        .map(|s| {
            let base = &points[s[0]];
            let m: Vec<Vec<i64>> = s[1..]
                .iter()
                .map(|&k| points[k].iter().zip(base).map(|(a, b)| a - b).collect())
                .collect();
            det(&m).abs()
        })
        .sum()
}

/// Normalized volume of the cone from the origin over `conv(points)`, for a
/// set spanning an affine hyperplane that misses the origin.
pub fn cone_volume(points: &[Vec<i64>]) -> i128 {
    pulling_triangulation(points)
        .into_iter()
        .map(|s| {
            let m: Vec<Vec<i64>> = s.iter().map(|&k| points[k].clone()).collect();
            if m.len() == m[0].len() {
                det(&m).abs()
            } else {
                0
            }
        })
        .sum()
}

/// Fan volume: sum of cone volumes over the given facet point sets.
pub fn fan_volume(facet_points: &[Vec<Vec<i64>>]) -> i128 {
    facet_points.iter().map(|f| cone_volume(f)).sum()
}

/// Exact membership of a rational point in a full-dimensional hull.
pub fn membership(facets: &[Facet], x: &[Q]) -> Membership {
    let mut boundary = false;
    for f in facets {
        let mut v = Q::from_integer(f.functional[0] as i128);
        for (a, xi) in f.functional[1..].iter().zip(x) {
            v += Q::from_integer(*a as i128) * xi;
        }
        if v < Q::from_integer(0) {
            return Membership::Outside;
        }
        if v == Q::from_integer(0) {
            boundary = true;
        }
    }
    if boundary {
        Membership::Boundary
    } else {
        Membership::Interior
    }
}
