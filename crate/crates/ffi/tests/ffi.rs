use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use hvb_ffi::*;

const EULER_DUAL: &str = include_str!("../../core/tests/data/euler_dual_p2.json");
const EULER_SPLIT: &str = include_str!("../../core/tests/data/euler_dual_p2_split.json");

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = hvb_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

fn take(p: *mut libc::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { hvb_string_free(p) };
    s
}

fn space(text: &str) -> *mut HvbSpace {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hvb_space_parse(c(text).as_ptr(), &mut s) }, HvbStatus::Ok);
    s
}

fn rep(json: &str) -> *mut HvbRep {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { hvb_rep_from_json(c(json).as_ptr(), &mut r) }, HvbStatus::Ok);
    r
}

#[test]
fn space_parse_and_errors() {
    let s = space("gr:1,4");
    assert_eq!(unsafe { hvb_space_rank(s) }, 4);
    unsafe { hvb_space_free(s) };
    assert!(hvb_last_error().is_null());

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hvb_space_parse(c("gr:5,2").as_ptr(), &mut out) }, HvbStatus::ShapeError);
    assert!(out.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(unsafe { hvb_space_parse(c("q:3").as_ptr(), &mut out) }, HvbStatus::ParseError);
    assert_eq!(unsafe { hvb_space_parse(ptr::null(), &mut out) }, HvbStatus::NullPointer);
    assert_eq!(unsafe { hvb_space_parse(c("p:2").as_ptr(), ptr::null_mut()) }, HvbStatus::NullPointer);
    let bad = [0xffu8, 0];
    assert_eq!(unsafe { hvb_space_parse(bad.as_ptr().cast(), &mut out) }, HvbStatus::InvalidUtf8);
    unsafe { hvb_space_free(ptr::null_mut()) };
}

#[test]
fn bott_matches_core() {
    let s = space("p:2");
    let (mut singular, mut degree, mut nu) = (-1, 99usize, [0i64; 2]);
    let call = |w: &[i64], singular: &mut i32, degree: &mut usize, nu: &mut [i64; 2]| unsafe {
        hvb_bott(s, w.as_ptr(), w.len(), singular, degree, nu.as_mut_ptr())
    };
    assert_eq!(call(&[-1, 0], &mut singular, &mut degree, &mut nu), HvbStatus::Ok);
    assert_eq!(singular, 1);
    assert_eq!(call(&[-2, 1], &mut singular, &mut degree, &mut nu), HvbStatus::Ok);
    assert_eq!((singular, degree, nu), (0, 1, [0, 0]));
    assert_eq!(call(&[-3, 0], &mut singular, &mut degree, &mut nu), HvbStatus::Ok);
    assert_eq!((singular, degree, nu), (0, 2, [0, 0]));
    assert_eq!(call(&[0, 0], &mut singular, &mut degree, &mut nu), HvbStatus::Ok);
    assert_eq!((singular, degree, nu), (0, 0, [0, 0]));
    let short = [1i64];
    assert_eq!(
        unsafe { hvb_bott(s, short.as_ptr(), 1, &mut singular, &mut degree, nu.as_mut_ptr()) },
        HvbStatus::ShapeError
    );
    assert_eq!(
        unsafe { hvb_bott(ptr::null(), short.as_ptr(), 1, &mut singular, &mut degree, nu.as_mut_ptr()) },
        HvbStatus::NullPointer
    );
    unsafe { hvb_space_free(s) };
}

#[test]
fn components_by_type() {
    let mut out = 0u64;
    for (t, rank, want) in [("A", 4, 5), ("B", 3, 2), ("C", 5, 2), ("D", 4, 4), ("D", 5, 4), ("E", 6, 3), ("E", 7, 2)] {
        assert_eq!(unsafe { hvb_components(c(t).as_ptr(), rank, &mut out) }, HvbStatus::Ok, "{t}{rank}");
        assert_eq!(out, want, "{t}{rank}");
    }
    assert_eq!(unsafe { hvb_components(c("G").as_ptr(), 2, &mut out) }, HvbStatus::ParseError);
    assert_eq!(unsafe { hvb_components(c("E").as_ptr(), 9, &mut out) }, HvbStatus::DomainError);
}

#[test]
fn rep_round_trip_check_and_cohomology() {
    let r = rep(EULER_DUAL);
    let mut json = ptr::null_mut();
    assert_eq!(unsafe { hvb_rep_to_json(r, &mut json) }, HvbStatus::Ok);
    let text = take(json);
    assert_eq!(text, hvb::quiver::to_json(&hvb::quiver::from_json(EULER_DUAL).unwrap()));

    let mut violations = 7usize;
    assert_eq!(unsafe { hvb_rep_check(r, &mut violations) }, HvbStatus::Ok);
    assert_eq!(violations, 0);

    let mut out = ptr::null_mut();
    assert_eq!(unsafe { hvb_cohomology_json(r, &mut out) }, HvbStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 0);
    unsafe { hvb_rep_free(r) };

    let split = rep(EULER_SPLIT);
    assert_eq!(unsafe { hvb_cohomology_json(split, &mut out) }, HvbStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["degree"], 0);
    assert_eq!(rows[1]["degree"], 1);
    assert_eq!(rows[1]["dim"], "1");
    unsafe { hvb_rep_free(split) };
}

#[test]
fn rep_errors() {
    let mut r = ptr::null_mut();
    assert_eq!(unsafe { hvb_rep_from_json(c("{").as_ptr(), &mut r) }, HvbStatus::ParseError);
    assert!(last_error().contains("JSON"));
    let ragged = EULER_DUAL.replace("\"1/1\"", "\"1/1\", \"2\"");
    assert_eq!(unsafe { hvb_rep_from_json(c(&ragged).as_ptr(), &mut r) }, HvbStatus::ShapeError);
    let zero_den = EULER_DUAL.replace("\"1/1\"", "\"1/0\"");
    assert_eq!(unsafe { hvb_rep_from_json(c(&zero_den).as_ptr(), &mut r) }, HvbStatus::ParseError);
    assert!(r.is_null());
    let mut n = 0usize;
    assert_eq!(unsafe { hvb_rep_check(ptr::null(), &mut n) }, HvbStatus::NullPointer);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hvb_rep_to_json(ptr::null(), &mut s) }, HvbStatus::NullPointer);
}

#[test]
fn header_declares_every_entry_point() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/hvb.h")).unwrap();
    for name in [
        "hvb_last_error",
        "hvb_string_free",
        "hvb_space_parse",
        "hvb_space_free",
        "hvb_space_rank",
        "hvb_bott",
        "hvb_components",
        "hvb_rep_from_json",
        "hvb_rep_free",
        "hvb_rep_to_json",
        "hvb_rep_check",
        "hvb_cohomology_json",
        "typedef struct HvbSpace HvbSpace",
        "typedef struct HvbRep HvbRep",
        "HVB_STATUS_OK = 0",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; header compile check not run");
        return;
    };
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let tmp = std::env::temp_dir().join(format!("hvb_ffi_{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let src = tmp.join("use.c");
    std::fs::write(
        &src,
        r#"#include "hvb.h"
int probe(void) {
    HvbSpace *s = 0;
    int64_t w[2] = {0, 0}, nu[2];
    int32_t singular;
    size_t degree;
    if (hvb_space_parse("p:2", &s) != HVB_STATUS_OK) return 1;
    HvbStatus st = hvb_bott(s, w, 2, &singular, &degree, nu);
    hvb_space_free(s);
    return st == HVB_STATUS_OK ? 0 : 2;
}
"#,
    )
    .unwrap();
    let status = Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-c"])
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&src)
        .arg("-o")
        .arg(tmp.join("use.o"))
        .status()
        .unwrap();
    assert!(status.success());
    std::fs::remove_dir_all(&tmp).ok();
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| Command::new(c).arg("--version").output().is_ok_and(|o| o.status.success()))
        .ok_or(())
}
