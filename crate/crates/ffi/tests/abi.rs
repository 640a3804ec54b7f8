use std::ffi::{CStr, CString};
use std::ptr;

use mixvol_ffi::*;

fn poly(json: &str) -> *mut MvPolytope {
    let c = CString::new(json).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { mv_polytope_from_json(c.as_ptr(), &mut out) }, MvStatus::Ok);
    out
}

fn take(s: *mut std::ffi::c_char) -> String {
    let v = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { mv_string_free(s) };
    v
}

const SQUARE: &str = r#"{"dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1","1"]]}"#;

#[test]
fn metrics_through_handles() {
    let g = poly(SQUARE);
    let k = poly(r#"{"dim":2,"vertices":[["0","0"]]}"#);
    let l = poly(r#"{"dim":2,"vertices":[["1","0"]]}"#);
    let (mut s, mut x) = (ptr::null_mut(), 0.0);
    unsafe {
        assert_eq!(mv_d_g(g, k, l, &mut s, &mut x), MvStatus::Ok);
        assert_eq!((take(s), x), ("1".to_string(), 1.0));
        assert_eq!(mv_rho_g(g, k, l, &mut s, ptr::null_mut()), MvStatus::Ok);
        assert_eq!(take(s), "2");
        assert_eq!(mv_hausdorff(g, k, &mut s, &mut x), MvStatus::Ok);
        assert_eq!(take(s), "2");
        assert!((x - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(mv_polytope_volume(g, &mut s, &mut x), MvStatus::Ok);
        assert_eq!(take(s), "1");
        assert_eq!(mv_report_json(g, k, l, &mut s), MvStatus::Ok);
        let r = take(s);
        assert!(r.contains("\"dG\":\"1\"") && r.contains("\"sandwich_ok\":true"), "{r}");
        let (mut dim, mut nv) = (0usize, 0usize);
        assert_eq!(mv_polytope_shape(g, &mut dim, &mut nv), MvStatus::Ok);
        assert_eq!((dim, nv), (2, 4));
        mv_polytope_free(g);
        mv_polytope_free(k);
        mv_polytope_free(l);
    }
}

#[test]
fn points_constructor_and_json_round_trip() {
    let num = [0i64, 0, 2, 0, 0, 2, 1, 1];
    let den = [1i64, 1, 2, 1, 1, 2, 3, 3];
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(mv_polytope_from_points(2, 4, num.as_ptr(), den.as_ptr(), &mut p), MvStatus::Ok);
        let mut s = ptr::null_mut();
        assert_eq!(mv_polytope_to_json(p, &mut s), MvStatus::Ok);
        assert_eq!(take(s), r#"{"dim":2,"vertices":[["0","0"],["0","1"],["1","0"]]}"#);
        mv_polytope_free(p);
        let bad_den = [1i64, 0];
        assert_eq!(mv_polytope_from_points(2, 1, num.as_ptr(), bad_den.as_ptr(), &mut p), MvStatus::Parse);
    }
}

#[test]
fn errors_carry_codes_and_messages() {
    let g = poly(SQUARE);
    let far = poly(r#"{"dim":2,"vertices":[["3","0"]]}"#);
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(mv_d_g(g, far, g, &mut s, ptr::null_mut()), MvStatus::Containment);
        let msg = CStr::from_ptr(mv_last_error()).to_str().unwrap();
        assert!(msg.contains("not contained"), "{msg}");
        assert_eq!(mv_d_g(g, ptr::null(), g, &mut s, ptr::null_mut()), MvStatus::NullArgument);
        let bad = CString::new("{\"dim\":2,").unwrap();
        let mut p = ptr::null_mut();
        assert_eq!(mv_polytope_from_json(bad.as_ptr(), &mut p), MvStatus::Parse);
        let four = CString::new(r#"{"dim":4,"vertices":[["0","0","0","0"]]}"#).unwrap();
        assert_eq!(mv_polytope_from_json(four.as_ptr(), &mut p), MvStatus::Config);
        assert_eq!(mv_polytope_from_json(ptr::null(), &mut p), MvStatus::NullArgument);
        mv_polytope_free(g);
        mv_polytope_free(far);
        mv_polytope_free(ptr::null_mut());
        mv_string_free(ptr::null_mut());
    }
}

#[test]
fn header_is_generated() {
    let h = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/mixvol.h")).unwrap();
    for name in ["MvPolytope", "mv_d_g", "mv_rho_g", "mv_last_error", "MV_STATUS_CONTAINMENT", "mv_string_free"] {
        assert!(h.contains(name), "{name} missing from header");
    }
}
