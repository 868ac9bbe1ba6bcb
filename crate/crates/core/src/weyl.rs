//! Weyl group elements as integer matrices on simple-root coordinates.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSet, RootSystem};

/// Linear functional given by its values on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Covector(pub Vec<i64>);

impl Covector {
    /// The fundamental coweight ω̌ᵢ, i.e. the i-th coordinate functional.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Covector(v)
    }

    pub fn eval(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn neg(&self) -> Self {
        Covector(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// Representative of `{f, -f}` whose first nonzero entry is positive.
    pub fn sign_canonical(&self) -> Self {
        match self.0.iter().find(|&&x| x != 0) {
            Some(&x) if x < 0 => self.neg(),
            _ => self.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeylElement {
    n: usize,
    mat: Vec<i64>,
    inv: Vec<i64>,
    word: Vec<usize>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mat.cmp(&other.mat)
    }
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for col in 0..n {
                c[r * n + col] += x * b[k * n + col];
            }
        }
    }
    c
}

fn matvec(n: usize, m: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n).map(|r| (0..n).map(|c| m[r * n + c] * v[c]).sum()).collect()
}

fn is_negative(v: &[i64]) -> bool {
    v.iter().any(|&x| x < 0)
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut mat = vec![0; n * n];
        for i in 0..n {
            mat[i * n + i] = 1;
        }
        WeylElement {
            n,
            inv: mat.clone(),
            mat,
            word: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Row-major matrix; column `j` is the image of the j-th simple root.
    pub fn matrix(&self) -> &[i64] {
        &self.mat
    }

    pub fn matrix_rows(&self) -> Vec<Vec<i64>> {
        self.mat.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Word in simple reflections (0-based) that produced this element.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn inverse(&self) -> Self {
        WeylElement {
            n: self.n,
            mat: self.inv.clone(),
            inv: self.mat.clone(),
            word: self.word.iter().rev().copied().collect(),
        }
    }

    /// Composition `self ∘ other`.
    pub fn mul(&self, other: &WeylElement) -> Self {
        let n = self.n;
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            n,
            mat: matmul(n, &self.mat, &other.mat),
            inv: matmul(n, &other.inv, &self.inv),
            word,
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == WeylElement::identity(self.n)
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        matvec(self.n, &self.mat, v)
    }

    pub fn apply_inverse(&self, v: &[i64]) -> Vec<i64> {
        matvec(self.n, &self.inv, v)
    }

    pub fn apply_root(&self, rs: &RootSystem, r: &Root) -> Root {
        rs.root(&self.apply(r.coords()))
            .expect("Weyl group preserves the root system")
    }

    /// Contragredient action: `(w·f)(v) = f(w⁻¹ v)`.
    pub fn apply_covector(&self, f: &Covector) -> Covector {
        let n = self.n;
        Covector(
            (0..n)
                .map(|c| (0..n).map(|r| f.0[r] * self.inv[r * n + c]).sum())
                .collect(),
        )
    }

    /// N(w) = {β > 0 : w⁻¹β < 0}.
    pub fn inversion_set(&self, rs: &RootSystem) -> RootSet {
        let mut s = RootSet::EMPTY;
        for (k, r) in rs.positive_roots().iter().enumerate() {
            if is_negative(&self.apply_inverse(r.coords())) {
                s.insert(k);
            }
        }
        s
    }

    /// N̄(w) = N(w⁻¹) = {β > 0 : wβ < 0}.
    pub fn co_inversion_set(&self, rs: &RootSystem) -> RootSet {
        let mut s = RootSet::EMPTY;
        for (k, r) in rs.positive_roots().iter().enumerate() {
            if is_negative(&self.apply(r.coords())) {
                s.insert(k);
            }
        }
        s
    }

    pub fn length(&self, rs: &RootSystem) -> usize {
        self.co_inversion_set(rs).len()
    }

    /// Simple roots sent to negative roots, as 0-based indices.
    pub fn right_descents(&self) -> Vec<usize> {
        let n = self.n;
        (0..n).filter(|&j| (0..n).any(|r| self.mat[r * n + j] < 0)).collect()
    }

    /// Whether `w(α_j) < 0`.
    pub fn sends_simple_negative(&self, j: usize) -> bool {
        let n = self.n;
        (0..n).any(|r| self.mat[r * n + j] < 0)
    }
}

pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<WeylElement> {
    let n = rs.rank();
    if i >= n {
        return Err(Error::BadIndex(i));
    }
    let mut w = WeylElement::identity(n);
    for j in 0..n {
        w.mat[i * n + j] -= rs.cartan()[i][j];
    }
    w.inv = w.mat.clone();
    w.word = vec![i];
    Ok(w)
}

pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(rs.rank());
    for &i in word {
        w = w.mul(&simple_reflection(rs, i)?);
    }
    Ok(w)
}

/// Reflection in an arbitrary root β: `x ↦ x − 2(x,β)/(β,β) β`.
pub fn reflection(rs: &RootSystem, beta: &Root) -> WeylElement {
    let n = rs.rank();
    let b = beta.coords();
    let bb = rs.inner(b, b);
    let mut mat = vec![0; n * n];
    for j in 0..n {
        let mut e = vec![0; n];
        e[j] = 1;
        let k = 2 * rs.inner(&e, b) / bb;
        for r in 0..n {
            mat[r * n + j] = e[r] - k * b[r];
        }
    }
    WeylElement {
        n,
        inv: mat.clone(),
        mat,
        word: Vec::new(),
    }
}

/// All of W by breadth-first search; words are reduced and shortlex-minimal in BFS order.
pub fn all_elements(rs: &RootSystem) -> Vec<WeylElement> {
    let gens: Vec<WeylElement> = (0..rs.rank()).map(|i| simple_reflection(rs, i).unwrap()).collect();
    let start = WeylElement::identity(rs.rank());
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(start.clone());
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for s in &gens {
            let x = w.mul(s);
            if seen.insert(x.clone()) {
                out.push(x.clone());
                queue.push_back(x);
            }
        }
    }
    out
}

/// W^i: minimal-length representatives of the left cosets `w W⟨Π∖{αᵢ}⟩`.
///
/// Grown by left multiplication: if `w ∈ W^i` and `s_j w` is longer, then
/// `s_j w ∈ W^i` exactly when it still keeps every `α_k`, `k ≠ i`, positive.
/// Sorted by length, then matrix.
pub fn minimal_coset_reps(rs: &RootSystem, i: usize) -> Result<Vec<WeylElement>> {
    let n = rs.rank();
    if i >= n {
        return Err(Error::BadIndex(i));
    }
    let gens: Vec<WeylElement> = (0..n).map(|j| simple_reflection(rs, j).unwrap()).collect();
    let start = WeylElement::identity(n);
    let mut seen: HashSet<WeylElement> = HashSet::from([start.clone()]);
    let mut out = vec![(0usize, start.clone())];
    let mut frontier = vec![start];
    let mut len = 0;
    while !frontier.is_empty() {
        len += 1;
        let mut next = Vec::new();
        for w in &frontier {
            for (j, s) in gens.iter().enumerate() {
                // ℓ(s_j w) > ℓ(w) iff w⁻¹(α_j) > 0.
                let mut e = vec![0; n];
                e[j] = 1;
                if is_negative(&w.apply_inverse(&e)) {
                    continue;
                }
                let x = s.mul(w);
                if (0..n).any(|k| k != i && x.sends_simple_negative(k)) {
                    continue;
                }
                if seen.insert(x.clone()) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned().map(|x| (len, x)));
        frontier = next;
    }
    out.sort();
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// W-orbit of a covector, sorted; with `up_to_sign` one representative per `{g, −g}`.
pub fn orbit_covector(rs: &RootSystem, f: &Covector, up_to_sign: bool) -> Vec<Covector> {
    let gens: Vec<WeylElement> = (0..rs.rank()).map(|i| simple_reflection(rs, i).unwrap()).collect();
    let mut seen: HashSet<Covector> = HashSet::from([f.clone()]);
    let mut queue = VecDeque::from([f.clone()]);
    while let Some(g) = queue.pop_front() {
        for s in &gens {
            let h = s.apply_covector(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    let mut out: Vec<Covector> = if up_to_sign {
        let set: HashSet<Covector> = seen.iter().map(|g| g.sign_canonical()).collect();
        set.into_iter().collect()
    } else {
        seen.into_iter().collect()
    };
    out.sort();
    out
}
