//! Classical root systems in simple-root coordinates.
//!
//! Simple roots follow Bourbaki numbering. Internally every index is 0-based,
//! so `alpha(0)` is the first simple root and, for type D, the fork sits on
//! nodes `n - 2` and `n - 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::dot;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(Error::BadSpec(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if rank < family.min_rank() {
            return Err(Error::InvalidRank { family, rank });
        }
        Ok(Self { family, rank })
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root of a specific root system, positive or negative.
///
/// Only [`RootSystem::root`] and the named constructors on [`RootSystem`]
/// produce values, so a `Root` is always a genuine element of Φ.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// Indices of simple roots with nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&i| self.coords[i] != 0).collect()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Edge of the root poset: `upper - lower` is the simple root `simple`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cover {
    pub lower: usize,
    pub upper: usize,
    pub simple: usize,
}

/// A set of positive roots, stored as a bitset over the canonical order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSet(pub u128);

impl RootSet {
    pub const EMPTY: RootSet = RootSet(0);

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = RootSet(0);
        for i in it {
            s.insert(i);
        }
        s
    }

    pub fn full(len: usize) -> Self {
        if len >= 128 {
            RootSet(u128::MAX)
        } else {
            RootSet((1u128 << len) - 1)
        }
    }

    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: RootSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: RootSet) -> RootSet {
        RootSet(self.0 | other.0)
    }

    pub fn intersection(self, other: RootSet) -> RootSet {
        RootSet(self.0 & other.0)
    }

    pub fn difference(self, other: RootSet) -> RootSet {
        RootSet(self.0 & !other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }

    pub fn from_hex(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches("0x");
        u128::from_str_radix(t, 16)
            .map(RootSet)
            .map_err(|_| Error::BadSpec(s.to_string()))
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    rstype: RootSystemType,
    cartan: Vec<Vec<i64>>,
    gram: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    theta: usize,
    marks: Vec<i64>,
    long_flags: Vec<bool>,
    extended_adjacency: Vec<Vec<bool>>,
    exponents: Vec<i64>,
    coxeter_number: i64,
    covers: Vec<Cover>,
    upper_covers: Vec<RootSet>,
    sums: Vec<Vec<Option<usize>>>,
    diagram: Option<Diagram>,
}

#[derive(Debug, Clone)]
struct Diagram {
    cells: Vec<Vec<Option<usize>>>,
    position: Vec<(usize, usize)>,
}

/// Scaled Gram matrix of the simple roots: twice the invariant form with
/// long roots of squared length 2, so long roots pair to 4 with themselves.
#[allow(clippy::needless_range_loop)]
fn gram_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; n]; n];
    for i in 0..n {
        g[i][i] = 4;
    }
    let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(&mut g, i, i + 1, -2);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                link(&mut g, i, i + 1, -2);
            }
            g[n - 1][n - 1] = 2;
        }
        Family::C => {
            for i in 0..n - 1 {
                g[i][i] = 2;
            }
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -1);
            }
            link(&mut g, n - 2, n - 1, -2);
        }
        Family::D => {
            for i in 0..n - 2 {
                link(&mut g, i, i + 1, -2);
            }
            link(&mut g, n - 3, n - 1, -2);
        }
    }
    g
}

pub fn build_root_system(rstype: RootSystemType) -> Result<RootSystem> {
    let RootSystemType { family, rank: n } = rstype;
    if n < family.min_rank() {
        return Err(Error::InvalidRank { family, rank: n });
    }
    let gram = gram_matrix(family, n);
    let cartan: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
        .collect();

    // Grow Φ⁺ height by height with root strings: for β and αᵢ, if p is the
    // largest k with β − kαᵢ a root, then β + αᵢ is a root iff p − ⟨β, αᵢ^∨⟩ > 0.
    let mut positive: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let mut known: std::collections::HashSet<Vec<i64>> = positive.iter().cloned().collect();
    let mut level: Vec<Vec<i64>> = positive.clone();
    while !level.is_empty() {
        let mut next = Vec::new();
        for beta in &level {
            for i in 0..n {
                let mut p = 0;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if known.contains(&probe) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        positive.extend(next.iter().cloned());
        level = next;
    }
    if positive.len() > 128 {
        return Err(Error::TooLarge { family, rank: n });
    }
    positive.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    let index: HashMap<Vec<i64>, usize> = positive.iter().enumerate().map(|(k, c)| (c.clone(), k)).collect();

    let theta = positive.len() - 1;
    let marks = positive[theta].clone();
    let norm = |c: &[i64]| -> i64 {
        (0..n)
            .map(|i| c[i] * (0..n).map(|j| gram[i][j] * c[j]).sum::<i64>())
            .sum()
    };
    let long_flags: Vec<bool> = positive.iter().map(|c| norm(c) == 4).collect();

    let theta_pair: Vec<i64> = (0..n).map(|i| dot(&gram[i], &marks)).collect();
    let mut extended_adjacency = vec![vec![false; n + 1]; n + 1];
    for i in 0..n {
        if theta_pair[i] != 0 {
            extended_adjacency[0][i + 1] = true;
            extended_adjacency[i + 1][0] = true;
        }
        for j in 0..n {
            if i != j && gram[i][j] != 0 {
                extended_adjacency[i + 1][j + 1] = true;
            }
        }
    }

    let max_height: i64 = marks.iter().sum();
    let mut by_height = vec![0i64; max_height as usize + 2];
    for c in &positive {
        by_height[c.iter().sum::<i64>() as usize] += 1;
    }
    let mut exponents = Vec::new();
    for k in 1..=max_height as usize {
        for _ in 0..(by_height[k] - by_height[k + 1]) {
            exponents.push(k as i64);
        }
    }
    let coxeter_number = max_height + 1;
    if exponents.len() != n || marks.iter().sum::<i64>() + 1 != coxeter_number {
        return Err(Error::Inconsistent(format!("exponents of {rstype}")));
    }

    let mut covers = Vec::new();
    let mut upper_covers = vec![RootSet::EMPTY; positive.len()];
    for (k, c) in positive.iter().enumerate() {
        for i in 0..n {
            let mut up = c.clone();
            up[i] += 1;
            if let Some(&u) = index.get(&up) {
                covers.push(Cover {
                    lower: k,
                    upper: u,
                    simple: i,
                });
                upper_covers[k].insert(u);
            }
        }
    }

    let sums: Vec<Vec<Option<usize>>> = positive
        .iter()
        .map(|a| {
            positive
                .iter()
                .map(|b| {
                    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                    index.get(&s).copied()
                })
                .collect()
        })
        .collect();

    let mut rs = RootSystem {
        rstype,
        cartan,
        gram,
        positive: positive.into_iter().map(|coords| Root { coords }).collect(),
        index,
        theta,
        marks,
        long_flags,
        extended_adjacency,
        exponents,
        coxeter_number,
        covers,
        upper_covers,
        sums,
        diagram: None,
    };
    rs.diagram = rs.build_diagram();
    Ok(rs)
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        build_root_system(RootSystemType::new(family, rank)?)
    }

    pub fn rstype(&self) -> RootSystemType {
        self.rstype
    }

    pub fn family(&self) -> Family {
        self.rstype.family
    }

    pub fn rank(&self) -> usize {
        self.rstype.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Scaled Gram matrix of Π (long roots have squared length 4).
    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    pub fn positive_root(&self, k: usize) -> &Root {
        &self.positive[k]
    }

    pub fn highest_root(&self) -> &Root {
        &self.positive[self.theta]
    }

    pub fn theta_index(&self) -> usize {
        self.theta
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn long_flags(&self) -> &[bool] {
        &self.long_flags
    }

    pub fn is_long(&self, k: usize) -> bool {
        self.long_flags[k]
    }

    /// Indices of long simple roots.
    pub fn long_simple(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.long_flags[i]).collect()
    }

    /// Adjacency of the extended Dynkin diagram on nodes `0..=n`, node 0 being α₀.
    pub fn extended_adjacency(&self) -> &[Vec<bool>] {
        &self.extended_adjacency
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    /// |W| as the product of (eᵢ + 1).
    pub fn weyl_order(&self) -> u128 {
        self.exponents.iter().map(|&e| (e + 1) as u128).product()
    }

    pub fn cover_relations(&self) -> &[Cover] {
        &self.covers
    }

    pub fn upper_covers(&self, k: usize) -> RootSet {
        self.upper_covers[k]
    }

    /// Index of `positive[a] + positive[b]` when that sum is a positive root.
    pub fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a][b]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn is_root(&self, coords: &[i64]) -> bool {
        if coords.len() != self.rank() {
            return false;
        }
        if self.index.contains_key(coords) {
            return true;
        }
        let neg: Vec<i64> = coords.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    /// Validating constructor.
    pub fn root(&self, coords: &[i64]) -> Result<Root> {
        if self.is_root(coords) {
            Ok(Root {
                coords: coords.to_vec(),
            })
        } else {
            Err(Error::NotARoot(coords.to_vec()))
        }
    }

    pub fn positive_index(&self, r: &Root) -> Result<usize> {
        self.index_of(&r.coords)
            .ok_or_else(|| Error::NotPositiveRoot(r.coords.clone()))
    }

    pub fn alpha(&self, i: usize) -> Root {
        Root {
            coords: unit(self.rank(), i),
        }
    }

    /// α_{i..=j}: sum of consecutive simple roots (always a root).
    pub fn alpha_range(&self, i: usize, j: usize) -> Root {
        let mut coords = vec![0; self.rank()];
        for c in coords.iter_mut().take(j + 1).skip(i) {
            *c = 1;
        }
        Root { coords }
    }

    /// The long root λᵢ of type C (0-based), 2(αᵢ + … + α_{n−2}) + α_{n−1}.
    pub fn lambda(&self, i: usize) -> Result<Root> {
        if self.family() != Family::C {
            return Err(Error::WrongType(self.family()));
        }
        let n = self.rank();
        if i >= n {
            return Err(Error::BadIndex(i));
        }
        let mut coords = vec![0; n];
        for c in coords.iter_mut().take(n - 1).skip(i) {
            *c = 2;
        }
        coords[n - 1] = 1;
        Ok(Root { coords })
    }

    /// Scaled inner product of two coordinate vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|i| a[i] * (0..n).map(|j| self.gram[i][j] * b[j]).sum::<i64>())
            .sum()
    }

    /// Whether the two roots are comparable in the root order, `a <= b`.
    pub fn le(&self, a: &[i64], b: &[i64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }

    pub fn roots_of(&self, set: RootSet) -> Vec<Root> {
        set.iter().map(|k| self.positive[k].clone()).collect()
    }

    pub fn set_of(&self, roots: &[Root]) -> Result<RootSet> {
        let mut s = RootSet::EMPTY;
        for r in roots {
            s.insert(self.positive_index(r)?);
        }
        Ok(s)
    }

    fn build_diagram(&self) -> Option<Diagram> {
        let n = self.rank();
        let shape: Vec<(usize, std::ops::RangeInclusive<usize>)> = match self.family() {
            Family::A => (0..n).map(|r| (r, 0..=n - 1 - r)).collect(),
            Family::C => (0..n).map(|r| (r, r..=2 * n - 2 - r)).collect(),
            _ => return None,
        };
        let width = match self.family() {
            Family::A => n,
            _ => 2 * n - 1,
        };
        let mut cells = vec![vec![None; width]; n];
        let mut position = vec![(usize::MAX, usize::MAX); self.num_positive()];
        for (r, cols) in shape {
            for c in cols {
                let root = self.diagram_root(r, c);
                let k = self.index[&root];
                cells[r][c] = Some(k);
                position[k] = (r, c);
            }
        }
        Some(Diagram { cells, position })
    }

    fn diagram_root(&self, r: usize, c: usize) -> Vec<i64> {
        let n = self.rank();
        let mut v = vec![0i64; n];
        match self.family() {
            Family::A => {
                for x in v.iter_mut().take(n - r).skip(c) {
                    *x = 1;
                }
            }
            _ => {
                if c < n - 1 {
                    for x in v.iter_mut().take(n - 1).skip(c) {
                        *x += 1;
                    }
                    for x in v.iter_mut().skip(r) {
                        *x += 1;
                    }
                } else {
                    // Column n - 1 holds α_{r..n-1}; further right the range shrinks.
                    let end = 2 * n - 2 - c;
                    for x in v.iter_mut().take(end + 1).skip(r) {
                        *x = 1;
                    }
                }
            }
        }
        v
    }

    /// Diagram shape as (rows, columns); `WrongType` outside A and C.
    pub fn diagram_dims(&self) -> Result<(usize, usize)> {
        let d = self.diagram.as_ref().ok_or(Error::WrongType(self.family()))?;
        Ok((d.cells.len(), d.cells[0].len()))
    }

    /// Root at 0-based diagram cell `(row, col)`.
    pub fn diagram_position(&self, row: usize, col: usize) -> Result<Root> {
        let d = self.diagram.as_ref().ok_or(Error::WrongType(self.family()))?;
        d.cells
            .get(row)
            .and_then(|r| r.get(col))
            .copied()
            .flatten()
            .map(|k| self.positive[k].clone())
            .ok_or(Error::OutOfShape { row, col })
    }

    pub fn diagram_cell(&self, row: usize, col: usize) -> Option<usize> {
        self.diagram.as_ref()?.cells.get(row)?.get(col).copied().flatten()
    }

    /// Inverse of [`diagram_position`](Self::diagram_position).
    pub fn diagram_of(&self, beta: &Root) -> Result<(usize, usize)> {
        let d = self.diagram.as_ref().ok_or(Error::WrongType(self.family()))?;
        let k = self.positive_index(beta)?;
        Ok(d.position[k])
    }

    pub fn diagram_of_index(&self, k: usize) -> Option<(usize, usize)> {
        self.diagram.as_ref().map(|d| d.position[k])
    }
}
