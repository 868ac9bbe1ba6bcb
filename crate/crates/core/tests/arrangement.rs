use std::collections::BTreeSet;

use num_integer::Integer;
use rootpoly::arrangement::{
    build_arrangement, codim2_pairs, face_roots, generated_subsystem, intersection_poset, parabolic_closure,
    region_sign_vectors, Hyperplane,
};
use rootpoly::{Family, RootSystem};

fn systems(max: usize) -> Vec<RootSystem> {
    let mut out = Vec::new();
    for n in 1..=max {
        for f in [Family::A, Family::B, Family::C, Family::D] {
            if let Ok(rs) = RootSystem::new(f, n) {
                out.push(rs);
            }
        }
    }
    out
}

#[test]
fn gcd_of_marks_decides_parabolicity() {
    for rs in systems(5) {
        for (i, j) in codim2_pairs(&rs) {
            let v = face_roots(&rs, &[i, j]);
            let g = rs.marks()[i].gcd(&rs.marks()[j]);
            let closed = generated_subsystem(&rs, &v).len() == parabolic_closure(&rs, &v).roots.len();
            assert_eq!(closed, g == 1, "{} pair ({i}, {j})", rs.rstype());
        }
    }
}

#[test]
fn type_a_lines_are_root_lines() {
    for n in 2..=5 {
        let rs = RootSystem::new(Family::A, n).unwrap();
        let hs = build_arrangement(&rs).unwrap();
        let poset = intersection_poset(&hs, n);
        let lines: BTreeSet<Hyperplane> = poset.lines(&hs).iter().map(|l| Hyperplane::new(l)).collect();
        let roots: BTreeSet<Hyperplane> = rs
            .positive_roots()
            .iter()
            .map(|r| Hyperplane::new(r.coords()))
            .collect();
        assert_eq!(lines, roots, "A{n}");
    }
}

#[test]
fn type_a_vertices_meet_regions() {
    for n in 2..=5 {
        let rs = RootSystem::new(Family::A, n).unwrap();
        let hs = build_arrangement(&rs).unwrap();
        let regions = region_sign_vectors(&hs, n);
        for r in rs.positive_roots() {
            for v in [r.coords().to_vec(), r.neg().into_coords()] {
                let on = hs.iter().filter(|h| h.eval(&v) == 0).count();
                assert_eq!(on, n - 1);
                let closures = regions
                    .iter()
                    .filter(|s| {
                        hs.iter()
                            .zip(s.iter())
                            .all(|(h, &pos)| if pos { h.eval(&v) >= 0 } else { h.eval(&v) <= 0 })
                    })
                    .count();
                assert_eq!(closures, 1 << (n - 1));
            }
        }
    }
}

#[test]
fn moebius_recursion() {
    for rs in systems(4) {
        let hs = build_arrangement(&rs).unwrap();
        let p = intersection_poset(&hs, rs.rank());
        assert_eq!(p.flats[0].moebius, 1);
        assert!(p.flats[0].hyperplanes.is_empty());
        for (k, x) in p.flats.iter().enumerate().skip(1) {
            let sum: i64 = p.flats[..=k]
                .iter()
                .filter(|y| y.hyperplanes.iter().all(|h| x.hyperplanes.contains(h)))
                .map(|y| y.moebius)
                .sum();
            assert_eq!(sum, 0);
            // Hyperplanes sit at rank one with μ = −1.
            if x.rank == 1 {
                assert_eq!(x.moebius, -1);
            }
        }
    }
}
