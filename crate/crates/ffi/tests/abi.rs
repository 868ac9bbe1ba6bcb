use std::ffi::{c_char, CStr};
use std::process::Command;
use std::ptr;

use rootpoly_ffi::*;

fn system(family: u8, rank: usize) -> *mut RpRootSystem {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { rp_root_system_new(family as c_char, rank, &mut h) },
        RpStatus::Ok
    );
    h
}

#[test]
fn roots_and_ideals() {
    let h = system(b'C', 2);
    let mut n = 0usize;
    unsafe {
        assert_eq!(rp_positive_root_count(h, &mut n), RpStatus::Ok);
        assert_eq!(n, 4);
        let mut c = [0i64; 2];
        assert_eq!(rp_positive_root(h, 3, c.as_mut_ptr(), 2), RpStatus::Ok);
        assert_eq!(c, [2, 1]);
        assert_eq!(rp_positive_root(h, 4, c.as_mut_ptr(), 2), RpStatus::OutOfRange);
        assert_eq!(rp_positive_root(h, 0, c.as_mut_ptr(), 1), RpStatus::BufferTooSmall);
        assert!(!last_error_string().is_empty());
        assert_eq!(rp_abelian_ideal_count(h, &mut n), RpStatus::Ok);
        assert_eq!(n, 4);
        rp_root_system_free(h);
    }
}

#[test]
fn triangulations() {
    let h = system(b'A', 3);
    unsafe {
        let mut t = ptr::null_mut();
        assert_eq!(rp_triangulation_new(h, false, &mut t), RpStatus::Ok);
        let mut n = 0usize;
        assert_eq!(rp_triangulation_len(t, &mut n), RpStatus::Ok);
        assert_eq!(n, 20);
        let mut m = [0i64; 9];
        assert_eq!(rp_triangulation_simplex(t, 19, m.as_mut_ptr(), 9), RpStatus::Ok);
        assert!(m.iter().any(|&x| x != 0));
        assert_eq!(rp_triangulation_simplex(t, 20, m.as_mut_ptr(), 9), RpStatus::OutOfRange);
        rp_triangulation_free(t);

        assert_eq!(rp_triangulation_new(h, true, &mut t), RpStatus::Ok);
        assert_eq!(rp_triangulation_len(t, &mut n), RpStatus::Ok);
        assert_eq!(n, 5);
        rp_triangulation_free(t);
        rp_root_system_free(h);
    }
    let b = system(b'B', 3);
    let mut t = ptr::null_mut();
    assert_eq!(unsafe { rp_triangulation_new(b, false, &mut t) }, RpStatus::Unsupported);
    unsafe { rp_root_system_free(b) };
}

#[test]
fn report_and_polynomial() {
    let h = system(b'A', 2);
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(rp_report_json(h, &mut s), RpStatus::Ok);
        let text = CStr::from_ptr(s).to_str().unwrap().to_owned();
        rp_string_free(s);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["payload"]["T"], 6);

        let mut c = [0i64; 3];
        let mut regions = 0u64;
        assert_eq!(
            rp_characteristic_polynomial(h, c.as_mut_ptr(), 3, &mut regions),
            RpStatus::Ok
        );
        assert_eq!(c, [2, -3, 1]);
        assert_eq!(regions, 6);
        rp_root_system_free(h);
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/rootpoly.h");
    let text = std::fs::read_to_string(header).unwrap();
    for f in [
        "rp_root_system_new",
        "rp_triangulation_simplex",
        "rp_report_json",
        "rp_last_error",
    ] {
        assert!(text.contains(f), "{f}");
    }
    let dir = std::env::temp_dir().join(format!("rootpoly-abi-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let src = dir.join("probe.c");
    std::fs::write(
        &src,
        format!("#include \"{header}\"\nint main(void) {{ RpRootSystem *h = 0; return rp_root_system_new('A', 2, &h) == RP_STATUS_OK ? 0 : 1; }}\n"),
    )
    .unwrap();
    match Command::new("cc")
        .arg("-fsyntax-only")
        .arg("-Wall")
        .arg("-Werror")
        .arg(&src)
        .status()
    {
        Ok(st) => assert!(st.success()),
        Err(_) => eprintln!("no C compiler; header syntax not checked"),
    }
    std::fs::remove_dir_all(dir).unwrap();
}
