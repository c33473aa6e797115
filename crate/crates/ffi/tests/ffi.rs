use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use hallgpd_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

/// Takes ownership of a returned string.
unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    hg_string_free(s);
    out
}

unsafe fn last_error() -> String {
    CStr::from_ptr(hg_last_error()).to_str().unwrap().to_string()
}

const A2: &str = "{\"vertices\":2,\"arrows\":[[0,1]]}";

unsafe fn a2(q: u64) -> *mut HgAlgebra {
    let mut alg = ptr::null_mut();
    assert_eq!(hg_algebra_new(c(A2).as_ptr(), q, 1 << 22, &mut alg), HgStatus::Ok);
    alg
}

#[test]
fn algebra_round_trip() {
    unsafe {
        let alg = a2(2);
        let mut n = 0usize;
        assert_eq!(hg_algebra_class_count(alg, 2, &mut n), HgStatus::Ok);
        assert_eq!(n, 1 + 2 + 4);

        let mut out = ptr::null_mut();
        let st = hg_algebra_product_json(alg, c("(1,0)#0").as_ptr(), c("(0,1)#0").as_ptr(), &mut out);
        assert_eq!(st, HgStatus::Ok);
        assert_eq!(take(out), r#"{"(1,1)#0":"1/1","(1,1)#1":"1/1"}"#);

        assert_eq!(hg_algebra_tables_json(alg, 1, &mut out), HgStatus::Ok);
        let tables: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(tables["max_dim"], 1);

        let mut passed = false;
        assert_eq!(
            hg_algebra_verify_json(alg, c("riedtmann").as_ptr(), 3, &mut out, &mut passed),
            HgStatus::Ok
        );
        assert!(passed);
        let report: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(report["checks"][0]["check"], "riedtmann");

        assert_eq!(
            hg_algebra_verify_json(alg, c("ext-bilinearity").as_ptr(), 3, &mut out, &mut passed),
            HgStatus::Ok
        );
        assert!(!passed);
        hg_string_free(out);
        hg_algebra_free(alg);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut alg = ptr::null_mut();
        assert_eq!(
            hg_algebra_new(c(A2).as_ptr(), 4, 1 << 22, &mut alg),
            HgStatus::InvalidInput
        );
        assert!(last_error().contains("not a prime"));
        assert_eq!(hg_algebra_new(c("{").as_ptr(), 2, 1, &mut alg), HgStatus::InvalidInput);
        assert_eq!(hg_algebra_new(c(A2).as_ptr(), 2, 0, &mut alg), HgStatus::InvalidInput);
        assert_eq!(hg_algebra_new(ptr::null(), 2, 1, &mut alg), HgStatus::NullArgument);
        assert_eq!(
            hg_algebra_new(c(A2).as_ptr(), 2, 1, ptr::null_mut()),
            HgStatus::NullArgument
        );
        assert!(alg.is_null());

        let alg = a2(2);
        let mut out = ptr::null_mut();
        let st = hg_algebra_product_json(alg, c("(1,0)#0").as_ptr(), c("nonsense").as_ptr(), &mut out);
        assert_eq!(st, HgStatus::InvalidInput);
        let mut passed = false;
        let st = hg_algebra_verify_json(alg, c("unknown").as_ptr(), 1, &mut out, &mut passed);
        assert_eq!(st, HgStatus::InvalidInput);
        assert!(last_error().contains("unknown suite"));
        hg_algebra_free(alg);

        let mut tiny = ptr::null_mut();
        assert_eq!(hg_algebra_new(c(A2).as_ptr(), 3, 10, &mut tiny), HgStatus::Ok);
        assert_eq!(hg_algebra_tables_json(tiny, 4, &mut out), HgStatus::BudgetExceeded);
        hg_algebra_free(tiny);

        let mut n = 0usize;
        assert_eq!(hg_algebra_class_count(ptr::null(), 1, &mut n), HgStatus::NullArgument);
        hg_algebra_free(ptr::null_mut());
        hg_string_free(ptr::null_mut());
    }
}

#[test]
fn groupoids() {
    unsafe {
        let mut g = ptr::null_mut();
        let doc = r#"{"objects":2,"morphisms":[{"src":0,"tgt":0},{"src":1,"tgt":1}],"compose":[[0,null],[null,1]]}"#;
        assert_eq!(hg_groupoid_from_json(c(doc).as_ptr(), &mut g), HgStatus::Ok);
        let mut n = 0usize;
        assert_eq!(hg_groupoid_object_count(g, &mut n), HgStatus::Ok);
        assert_eq!(n, 2);
        let mut out = ptr::null_mut();
        assert_eq!(hg_groupoid_cardinality(g, &mut out), HgStatus::Ok);
        assert_eq!(take(out), "2/1");
        hg_groupoid_free(g);

        assert_eq!(hg_groupoid_finite_sets(8, &mut g), HgStatus::Ok);
        assert_eq!(hg_groupoid_cardinality(g, &mut out), HgStatus::Ok);
        assert_eq!(take(out), "109601/40320");
        hg_groupoid_free(g);

        let bad = r#"{"objects":1,"morphisms":[],"compose":[]}"#;
        assert_eq!(hg_groupoid_from_json(c(bad).as_ptr(), &mut g), HgStatus::InvalidInput);
        assert_eq!(hg_groupoid_finite_sets(9, &mut g), HgStatus::InvalidInput);
    }
}

fn target_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

/// Compiles the C smoke program against the generated header and the static library.
#[test]
fn header_compiles_and_links_from_c() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(manifest.join("include/hallgpd.h")).unwrap();
    for name in [
        "hg_algebra_new",
        "hg_algebra_verify_json",
        "hg_groupoid_cardinality",
        "hg_last_error",
        "HG_STATUS_BUDGET_EXCEEDED",
    ] {
        assert!(header.contains(name), "{name} missing from the header");
    }
    let archive = target_dir().join("libhallgpd_ffi.a");
    assert!(archive.exists(), "static library not built at {}", archive.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&archive)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler is on PATH");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "{\"(1,1)#0\":\"1/1\",\"(1,1)#1\":\"1/1\"}\n163/60\n");
}
