//! Filters and abelian ideals of the root poset, their apexes and borders.

use crate::error::{Error, Result};
use crate::rootsys::{Family, Root, RootSet, RootSystem};
use crate::weyl::{minimal_coset_reps, WeylElement};

/// Upward-closed set of positive roots.
pub type RootFilter = RootSet;

/// An abelian ideal together with the long simple root it is attached to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClass {
    pub ideal: RootFilter,
    pub apex: Option<usize>,
}

/// M_α = {β ∈ Φ⁺ : β ≥ α}.
pub fn principal_filter(rs: &RootSystem, alpha: &Root) -> Result<RootFilter> {
    rs.positive_index(alpha)?;
    Ok(up_closure(rs, std::slice::from_ref(alpha)))
}

/// M_i = {β : cᵢ(β) > 0}.
pub fn simple_filter(rs: &RootSystem, i: usize) -> Result<RootFilter> {
    if i >= rs.rank() {
        return Err(Error::BadIndex(i));
    }
    Ok(RootSet::from_indices(
        (0..rs.num_positive()).filter(|&k| rs.positive_root(k).coords()[i] > 0),
    ))
}

/// Smallest filter containing the given roots.
pub fn up_closure(rs: &RootSystem, gens: &[Root]) -> RootFilter {
    RootSet::from_indices((0..rs.num_positive()).filter(|&k| {
        let b = rs.positive_root(k).coords();
        gens.iter().any(|g| rs.le(g.coords(), b))
    }))
}

pub fn ideal_from_border(rs: &RootSystem, border: &[Root]) -> RootFilter {
    up_closure(rs, border)
}

pub fn is_filter(rs: &RootSystem, set: RootSet) -> bool {
    set.iter().all(|k| rs.upper_covers(k).is_subset(set))
}

fn is_commutative(rs: &RootSystem, set: RootSet) -> bool {
    set.iter().all(|a| set.iter().all(|b| rs.sum_index(a, b).is_none()))
}

pub fn is_abelian_ideal(rs: &RootSystem, set: RootSet) -> bool {
    set.is_subset(RootSet::full(rs.num_positive())) && is_filter(rs, set) && is_commutative(rs, set)
}

/// Every abelian ideal, sorted by size and then bitset.
///
/// Roots are decided from the top of the poset down, so the upper covers of
/// a root are settled before the root itself.
pub fn enumerate_abelian_ideals(rs: &RootSystem) -> Vec<RootFilter> {
    fn go(rs: &RootSystem, k: usize, cur: RootSet, out: &mut Vec<RootSet>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        let r = k - 1;
        go(rs, r, cur, out);
        if rs.upper_covers(r).is_subset(cur)
            && rs.sum_index(r, r).is_none()
            && cur.iter().all(|m| rs.sum_index(r, m).is_none())
        {
            let mut next = cur;
            next.insert(r);
            go(rs, r, next, out);
        }
    }
    let mut out = Vec::new();
    go(rs, rs.num_positive(), RootSet::EMPTY, &mut out);
    out.sort_by_key(|s| (s.len(), s.0));
    out
}

/// Unordered pairs {β, γ} of positive roots with β + γ = θ.
pub fn theta_pairs(rs: &RootSystem) -> Vec<(usize, usize)> {
    let t = rs.theta_index();
    let mut out = Vec::new();
    for a in 0..rs.num_positive() {
        for b in a..rs.num_positive() {
            if rs.sum_index(a, b) == Some(t) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Every θ-decomposition meets the set in exactly one root.
pub fn theta_criterion(rs: &RootSystem, set: RootSet) -> bool {
    theta_pairs(rs)
        .into_iter()
        .all(|(a, b)| set.contains(a) != set.contains(b))
}

fn apex_type_a(rs: &RootSystem, set: RootSet) -> Option<usize> {
    let n = rs.rank();
    (0..n).find(|&i| {
        let first = rs.index_of(rs.alpha_range(0, i).coords()).unwrap();
        let last = rs.index_of(rs.alpha_range(i, n - 1).coords()).unwrap();
        set.contains(first) && set.contains(last) && set.is_subset(simple_filter(rs, i).unwrap())
    })
}

fn apex_type_c(rs: &RootSystem, set: RootSet) -> Option<usize> {
    let n = rs.rank();
    let top_short = rs.index_of(rs.alpha_range(0, n - 1).coords()).unwrap();
    set.contains(top_short).then_some(n - 1)
}

/// The long simple root α with `set ∈ I_ab(α)`, if any.
///
/// Types A and C only. The type-specific rule is checked against the
/// θ-pair criterion and a disagreement is reported as `Inconsistent`.
pub fn classify_ideal(rs: &RootSystem, set: RootFilter) -> Result<Option<usize>> {
    if !is_abelian_ideal(rs, set) {
        return Err(Error::NotAbelian);
    }
    let apex = match rs.family() {
        Family::A => apex_type_a(rs, set),
        Family::C => apex_type_c(rs, set),
        f => return Err(Error::WrongType(f)),
    };
    if apex.is_some() != theta_criterion(rs, set) {
        return Err(Error::Inconsistent(format!(
            "apex rule and theta-pair criterion disagree on {}",
            set.to_hex()
        )));
    }
    Ok(apex)
}

pub fn classify(rs: &RootSystem, set: RootFilter) -> Result<IdealClass> {
    Ok(IdealClass {
        ideal: set,
        apex: classify_ideal(rs, set)?,
    })
}

fn check_long_simple(rs: &RootSystem, i: usize) -> Result<()> {
    if i >= rs.rank() {
        return Err(Error::BadIndex(i));
    }
    if !rs.is_long(i) {
        return Err(Error::NotLongSimple(i));
    }
    Ok(())
}

/// Lattice paths in the diagram from which the members of I_ab(αᵢ) are generated.
pub fn minimal_paths(rs: &RootSystem, i: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    check_long_simple(rs, i)?;
    let n = rs.rank();
    let (start, steps, moves): ((usize, usize), usize, [(isize, isize); 2]) = match rs.family() {
        // From α_{1,i} (bottom-left of M_i) to α_{i,n} (top-right): up or right.
        Family::A => ((n - 1 - i, 0), n - 1, [(-1, 0), (0, 1)]),
        // From α_{1,n}: left or down, ending on the diagonal of long roots.
        Family::C => ((0, n - 1), n - 1, [(0, -1), (1, 0)]),
        f => return Err(Error::WrongType(f)),
    };
    let (rows, cols) = match rs.family() {
        Family::A => (n - i, i + 1),
        _ => (n, n),
    };
    let mut out = Vec::new();
    let mut path = vec![start];
    fn go(
        path: &mut Vec<(usize, usize)>,
        left: usize,
        moves: &[(isize, isize); 2],
        fits: &dyn Fn(isize, isize) -> bool,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            out.push(path.clone());
            return;
        }
        let (r, c) = *path.last().unwrap();
        for &(dr, dc) in moves {
            let (nr, nc) = (r as isize + dr, c as isize + dc);
            if fits(nr, nc) {
                path.push((nr as usize, nc as usize));
                go(path, left - 1, moves, fits, out);
                path.pop();
            }
        }
    }
    let family = rs.family();
    let fits = move |r: isize, c: isize| -> bool {
        r >= 0 && c >= 0 && (r as usize) < rows && (c as usize) < cols && (family != Family::C || r <= c)
    };
    go(&mut path, steps, &moves, &fits, &mut out);
    Ok(out)
}

/// I_ab(αᵢ), generated from minimal paths; sorted by bitset.
pub fn members_of_i_ab(rs: &RootSystem, i: usize) -> Result<Vec<RootFilter>> {
    let mut out: Vec<RootFilter> = minimal_paths(rs, i)?
        .into_iter()
        .map(|p| {
            let gens: Vec<Root> = p
                .into_iter()
                .map(|(r, c)| rs.diagram_position(r, c).expect("path stays in the diagram"))
                .collect();
            up_closure(rs, &gens)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// B(I) by the defining rule: β ∈ I such that whenever β − γ₁ and β − γ₂ are
/// positive roots for simple γ₁, γ₂ (possibly equal), β − γ₁ − γ₂ ∉ I.
pub fn border_generic(rs: &RootSystem, set: RootFilter) -> RootSet {
    let n = rs.rank();
    RootSet::from_indices(set.iter().filter(|&k| {
        let b = rs.positive_root(k).coords();
        let down: Vec<usize> = (0..n)
            .filter(|&g| {
                let mut v = b.to_vec();
                v[g] -= 1;
                rs.index_of(&v).is_some()
            })
            .collect();
        down.iter().all(|&g1| {
            down.iter().all(|&g2| {
                let mut v = b.to_vec();
                v[g1] -= 1;
                v[g2] -= 1;
                rs.index_of(&v).is_none_or(|j| !set.contains(j))
            })
        })
    }))
}

/// Type A border: α_{s,t} ∈ I with α_{s+1,t−1} ∉ I (vacuous when t ≤ s + 1).
pub fn border_type_a(rs: &RootSystem, set: RootFilter) -> Result<RootSet> {
    if rs.family() != Family::A {
        return Err(Error::WrongType(rs.family()));
    }
    Ok(RootSet::from_indices(set.iter().filter(|&k| {
        let sup = rs.positive_root(k).support();
        let (s, t) = (sup[0], *sup.last().unwrap());
        t < s + 2 || !set.contains(rs.index_of(rs.alpha_range(s + 1, t - 1).coords()).unwrap())
    })))
}

/// B(I) for a member of some I_ab(α); `NoApex` otherwise.
pub fn border(rs: &RootSystem, set: RootFilter) -> Result<RootSet> {
    if classify_ideal(rs, set)?.is_none() {
        return Err(Error::NoApex);
    }
    let b = border_generic(rs, set);
    if rs.family() == Family::A && border_type_a(rs, set)? != b {
        return Err(Error::Inconsistent(format!("type A border rule on {}", set.to_hex())));
    }
    Ok(b)
}

/// Abelian ideals inside M_i, each as M_i ∖ N̄(w) for its w ∈ W^i.
pub fn abelian_ideals_below(rs: &RootSystem, i: usize) -> Result<Vec<(RootFilter, WeylElement)>> {
    let m = simple_filter(rs, i)?;
    let mark = rs.marks()[i];
    if mark != 1 {
        return Err(Error::MarkNotOne { index: i, mark });
    }
    Ok(minimal_coset_reps(rs, i)?
        .into_iter()
        .map(|w| (m.difference(w.co_inversion_set(rs)), w))
        .collect())
}

fn check_c(rs: &RootSystem) -> Result<()> {
    if rs.family() != Family::C {
        return Err(Error::WrongType(rs.family()));
    }
    Ok(())
}

/// The long roots in the row and in the column of β ∈ M (type C), whose sum is 2β.
pub fn hook_long_roots(rs: &RootSystem, beta: &Root) -> Result<(Root, Root)> {
    check_c(rs)?;
    let n = rs.rank();
    if rs.index_of(beta.coords()).is_none() || beta.coords()[n - 1] != 1 {
        return Err(Error::NotInM(beta.coords().to_vec()));
    }
    let (r, c) = rs.diagram_of(beta)?;
    Ok((rs.lambda(r)?, rs.lambda(c)?))
}

/// U_λ = {β ∈ Φ⁺ : β − λ ∈ Φ⁺}.
pub fn up_set(rs: &RootSystem, lambda: &Root) -> Result<RootSet> {
    check_c(rs)?;
    let l = lambda.coords();
    Ok(RootSet::from_indices((0..rs.num_positive()).filter(|&k| {
        let d: Vec<i64> = rs.positive_root(k).coords().iter().zip(l).map(|(a, b)| a - b).collect();
        rs.index_of(&d).is_some()
    })))
}

/// R_λ = {β ∈ Φ⁺ : λ − β ∈ Φ⁺}.
pub fn right_set(rs: &RootSystem, lambda: &Root) -> Result<RootSet> {
    check_c(rs)?;
    let l = lambda.coords();
    Ok(RootSet::from_indices((0..rs.num_positive()).filter(|&k| {
        let d: Vec<i64> = l.iter().zip(rs.positive_root(k).coords()).map(|(a, b)| a - b).collect();
        rs.index_of(&d).is_some()
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::new(f, n).unwrap()
    }

    fn set(rs: &RootSystem, roots: &[&[i64]]) -> RootSet {
        RootSet::from_indices(roots.iter().map(|c| rs.index_of(c).unwrap()))
    }

    /// Brute force over all subsets of Φ⁺ (small ranks only).
    fn brute_abelian(rs: &RootSystem) -> Vec<RootSet> {
        let np = rs.num_positive();
        let mut out: Vec<RootSet> = (0u128..(1 << np))
            .map(RootSet)
            .filter(|&s| {
                s.iter().all(|a| {
                    (0..np).all(|b| {
                        let big = rs.positive_root(b).coords();
                        !rs.le(rs.positive_root(a).coords(), big) || s.contains(b)
                    })
                }) && s.iter().all(|a| {
                    s.iter().all(|b| {
                        let sum: Vec<i64> = rs
                            .positive_root(a)
                            .coords()
                            .iter()
                            .zip(rs.positive_root(b).coords())
                            .map(|(x, y)| x + y)
                            .collect();
                        !rs.is_root(&sum)
                    })
                })
            })
            .collect();
        out.sort_by_key(|s| (s.len(), s.0));
        out
    }

    #[test]
    fn principal_filters() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            principal_filter(&a2, &a2.alpha(0)).unwrap(),
            set(&a2, &[&[1, 0], &[1, 1]])
        );
        let a4 = rs(Family::A, 4);
        assert_eq!(principal_filter(&a4, &a4.alpha(1)).unwrap().len(), 6);
        assert_eq!(
            principal_filter(&a4, &a4.alpha(1)).unwrap(),
            simple_filter(&a4, 1).unwrap()
        );
        let c2 = rs(Family::C, 2);
        assert_eq!(
            principal_filter(&c2, &c2.alpha(1)).unwrap(),
            set(&c2, &[&[0, 1], &[1, 1], &[2, 1]])
        );
        assert!(principal_filter(&c2, &c2.alpha(1).neg()).is_err());
    }

    #[test]
    fn abelian_checks() {
        let c2 = rs(Family::C, 2);
        assert!(!is_abelian_ideal(&c2, simple_filter(&c2, 0).unwrap()));
        assert!(is_abelian_ideal(&c2, simple_filter(&c2, 1).unwrap()));
        for n in 1..=5 {
            let a = rs(Family::A, n);
            assert!(is_abelian_ideal(&a, RootSet::EMPTY));
            assert!(is_abelian_ideal(&a, RootSet::from_indices([a.theta_index()])));
            for i in 0..n {
                assert!(is_abelian_ideal(&a, simple_filter(&a, i).unwrap()));
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (f, n) in [
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::C, 2),
            (Family::C, 3),
            (Family::B, 3),
            (Family::D, 4),
        ] {
            let r = rs(f, n);
            assert_eq!(enumerate_abelian_ideals(&r), brute_abelian(&r), "{f}{n}");
        }
        let a2 = rs(Family::A, 2);
        assert_eq!(enumerate_abelian_ideals(&a2).len(), 4);
        for n in 2..=6 {
            assert_eq!(enumerate_abelian_ideals(&rs(Family::A, n)).len(), 1 << n);
            assert_eq!(enumerate_abelian_ideals(&rs(Family::C, n)).len(), 1 << n);
        }
    }

    #[test]
    fn classification() {
        let a3 = rs(Family::A, 3);
        assert_eq!(classify_ideal(&a3, simple_filter(&a3, 1).unwrap()).unwrap(), Some(1));
        let a2 = rs(Family::A, 2);
        assert_eq!(
            classify_ideal(&a2, RootSet::from_indices([a2.theta_index()])).unwrap(),
            None
        );
        assert_eq!(classify_ideal(&a2, RootSet::EMPTY).unwrap(), None);
        let c2 = rs(Family::C, 2);
        assert_eq!(classify_ideal(&c2, set(&c2, &[&[1, 1], &[2, 1]])).unwrap(), Some(1));
        assert_eq!(
            classify_ideal(&c2, simple_filter(&c2, 0).unwrap()),
            Err(Error::NotAbelian)
        );
        let b3 = rs(Family::B, 3);
        assert!(matches!(
            classify_ideal(&b3, RootSet::EMPTY),
            Err(Error::WrongType(Family::B))
        ));
    }

    #[test]
    fn paths_generate_the_classified_ideals() {
        let binom = |n: usize, k: usize| -> usize { (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1)) };
        for n in 2..=6 {
            for f in [Family::A, Family::C] {
                let r = rs(f, n);
                let all = enumerate_abelian_ideals(&r);
                for i in r.long_simple() {
                    let members = members_of_i_ab(&r, i).unwrap();
                    let mut brute: Vec<RootSet> = all
                        .iter()
                        .copied()
                        .filter(|&s| classify_ideal(&r, s).unwrap() == Some(i))
                        .collect();
                    brute.sort();
                    assert_eq!(members, brute, "{f}{n} apex {i}");
                    let want = if f == Family::A { binom(n - 1, i) } else { 1 << (n - 1) };
                    assert_eq!(members.len(), want);
                    assert!(members.contains(&simple_filter(&r, i).unwrap()));
                }
            }
        }
        assert!(matches!(
            members_of_i_ab(&rs(Family::C, 3), 0),
            Err(Error::NotLongSimple(0))
        ));
        assert!(matches!(
            members_of_i_ab(&rs(Family::D, 4), 0),
            Err(Error::WrongType(Family::D))
        ));
    }

    #[test]
    fn borders() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            border(&a2, simple_filter(&a2, 0).unwrap()).unwrap(),
            set(&a2, &[&[1, 0], &[1, 1]])
        );
        let a3 = rs(Family::A, 3);
        assert_eq!(
            border(&a3, simple_filter(&a3, 1).unwrap()).unwrap(),
            set(&a3, &[&[1, 1, 0], &[0, 1, 0], &[0, 1, 1]])
        );
        let c2 = rs(Family::C, 2);
        assert_eq!(
            border(&c2, set(&c2, &[&[1, 1], &[2, 1]])).unwrap(),
            set(&c2, &[&[1, 1], &[2, 1]])
        );
        assert_eq!(
            border(&c2, simple_filter(&c2, 1).unwrap()).unwrap(),
            set(&c2, &[&[1, 1], &[0, 1]])
        );
        assert_eq!(border(&a2, RootSet::EMPTY), Err(Error::NoApex));

        for n in 2..=6 {
            for f in [Family::A, Family::C] {
                let r = rs(f, n);
                for i in r.long_simple() {
                    for ideal in members_of_i_ab(&r, i).unwrap() {
                        let b = border(&r, ideal).unwrap();
                        assert_eq!(b.len(), n);
                        assert_eq!(ideal_from_border(&r, &r.roots_of(b)), ideal);
                    }
                    for path in minimal_paths(&r, i).unwrap() {
                        let roots: Vec<Root> = path.iter().map(|&(a, c)| r.diagram_position(a, c).unwrap()).collect();
                        let ideal = ideal_from_border(&r, &roots);
                        assert_eq!(border(&r, ideal).unwrap(), r.set_of(&roots).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn ideals_below_simple_filters() {
        let a2 = rs(Family::A, 2);
        let below = abelian_ideals_below(&a2, 0).unwrap();
        let mut ideals: Vec<RootSet> = below.iter().map(|(s, _)| *s).collect();
        ideals.sort_by_key(|s| s.len());
        assert_eq!(
            ideals,
            vec![RootSet::EMPTY, set(&a2, &[&[1, 1]]), set(&a2, &[&[1, 0], &[1, 1]])]
        );
        assert!(below
            .iter()
            .any(|(s, w)| w.is_identity() && *s == simple_filter(&a2, 0).unwrap()));

        let c3 = rs(Family::C, 3);
        assert_eq!(
            abelian_ideals_below(&c3, 0).unwrap_err(),
            Error::MarkNotOne { index: 0, mark: 2 }
        );

        for (f, n) in [(Family::A, 3), (Family::A, 4), (Family::C, 3), (Family::C, 4)] {
            let r = rs(f, n);
            let all = enumerate_abelian_ideals(&r);
            for i in r.long_simple() {
                let m = simple_filter(&r, i).unwrap();
                let mut got: Vec<RootSet> = abelian_ideals_below(&r, i)
                    .unwrap()
                    .into_iter()
                    .map(|(s, _)| s)
                    .collect();
                got.sort();
                let mut want: Vec<RootSet> = all.iter().copied().filter(|s| s.is_subset(m)).collect();
                want.sort();
                assert_eq!(got, want);
            }
        }
    }

    #[test]
    fn hooks() {
        let c2 = rs(Family::C, 2);
        let (row, col) = hook_long_roots(&c2, &c2.root(&[1, 1]).unwrap()).unwrap();
        assert_eq!((row.coords(), col.coords()), (&[2, 1][..], &[0, 1][..]));
        let l1 = c2.root(&[2, 1]).unwrap();
        assert_eq!(hook_long_roots(&c2, &l1).unwrap(), (l1.clone(), l1));
        assert!(matches!(hook_long_roots(&c2, &c2.alpha(0)), Err(Error::NotInM(_))));

        let c4 = rs(Family::C, 4);
        let beta = c4.alpha_range(1, 3);
        assert_eq!(
            hook_long_roots(&c4, &beta).unwrap(),
            (c4.lambda(1).unwrap(), c4.lambda(3).unwrap())
        );
        for k in simple_filter(&c4, 3).unwrap().iter() {
            let b = c4.positive_root(k);
            let (x, y) = hook_long_roots(&c4, b).unwrap();
            let sum: Vec<i64> = x.coords().iter().zip(y.coords()).map(|(p, q)| p + q).collect();
            assert_eq!(sum, b.coords().iter().map(|v| 2 * v).collect::<Vec<_>>());
        }
        // Roots in U_λ and M ∩ R_λ are short with 2β − λ ∈ Φ⁺.
        let m = simple_filter(&c4, 3).unwrap();
        for i in 0..4 {
            let l = c4.lambda(i).unwrap();
            for k in up_set(&c4, &l)
                .unwrap()
                .iter()
                .chain(right_set(&c4, &l).unwrap().intersection(m).iter())
            {
                assert!(!c4.is_long(k));
                let v: Vec<i64> = c4
                    .positive_root(k)
                    .coords()
                    .iter()
                    .zip(l.coords())
                    .map(|(b, x)| 2 * b - x)
                    .collect();
                assert!(c4.index_of(&v).is_some());
            }
        }
    }
}
