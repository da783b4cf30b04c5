use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use restriction_lab_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    rl_string_free(s);
    out
}

fn last_error() -> String {
    let p = rl_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn classify_round_trip() {
    let mut v = ptr::null_mut();
    unsafe {
        let st = rl_classify_radial(c("1/4").as_ptr(), c("4/3").as_ptr(), c("4").as_ptr(), &mut v);
        assert_eq!(st, RlStatus::Ok);
        assert!(rl_last_error_message().is_null());
        assert_eq!(rl_verdict_is_bounded(v), 0);
        assert_eq!(take(rl_verdict_describe(v)), "UNBOUNDED violated=endpoint-q-equals-r-conjugate");
        rl_verdict_free(v);
    }
}

#[test]
fn error_codes() {
    let mut v = ptr::null_mut();
    unsafe {
        let st = rl_classify_separable(c("1/3").as_ptr(), ptr::null(), c("2").as_ptr(), c("2").as_ptr(), &mut v);
        assert_eq!(st, RlStatus::NullPointer);
        assert!(v.is_null());
        assert!(last_error().contains("beta"));

        let st = rl_classify_separable(c("1/3").as_ptr(), c("0.3").as_ptr(), c("2").as_ptr(), c("2").as_ptr(), &mut v);
        assert_eq!(st, RlStatus::Parse);

        let st = rl_classify_separable(c("1").as_ptr(), c("0").as_ptr(), c("1/2").as_ptr(), c("2").as_ptr(), &mut v);
        assert_eq!(st, RlStatus::Domain);
        assert!(v.is_null());

        let st = rl_classify_radial(c("1").as_ptr(), c("2").as_ptr(), c("2").as_ptr(), ptr::null_mut());
        assert_eq!(st, RlStatus::NullPointer);

        let mut t = ptr::null_mut();
        assert_eq!(rl_j0_extrema(0, &mut t), RlStatus::Domain);
        assert!(t.is_null());
    }
}

#[test]
fn certificates_are_exact() {
    let mut cert = ptr::null_mut();
    unsafe {
        let st = rl_solve_separable(c("1/5").as_ptr(), c("0").as_ptr(), c("2").as_ptr(), c("2").as_ptr(), &mut cert);
        assert_eq!(st, RlStatus::Ok);
        assert!(cert.is_null(), "infeasible tuple must yield no certificate");

        let st = rl_solve_radial(c("1").as_ptr(), c("1").as_ptr(), c("4").as_ptr(), &mut cert);
        assert_eq!(st, RlStatus::Ok);
        let text = take(rl_certificate_describe(cert));
        assert!(text.starts_with("theta=") && text.contains("gamma1="), "{text}");
        rl_certificate_free(cert);
    }
}

#[test]
fn null_handles_are_harmless() {
    unsafe {
        rl_verdict_free(ptr::null_mut());
        rl_certificate_free(ptr::null_mut());
        rl_extrema_free(ptr::null_mut());
        rl_string_free(ptr::null_mut());
        assert_eq!(rl_verdict_is_bounded(ptr::null()), -1);
        assert!(rl_verdict_describe(ptr::null()).is_null());
        assert!(rl_certificate_describe(ptr::null()).is_null());
        assert_eq!(rl_extrema_len(ptr::null()), 0);
        assert!(rl_extrema_envelope(ptr::null()).is_nan());
    }
}

#[test]
fn extrema_table() {
    let mut t = ptr::null_mut();
    unsafe {
        assert_eq!(rl_j0_extrema(1000, &mut t), RlStatus::Ok);
        assert_eq!(rl_extrema_len(t), 1000);
        let (mut z, mut v) = (0.0, 0.0);
        assert_eq!(rl_extrema_get(t, 999, &mut z, &mut v), RlStatus::Ok);
        assert!(rl_bessel_j0(z) == v);
        assert_eq!(rl_extrema_get(t, 0, ptr::null_mut(), &mut v), RlStatus::NullPointer);
        assert!(rl_extrema_envelope(t) >= 0.4);
        rl_extrema_free(t);
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().to_path_buf()
}

#[test]
fn header_compiles_and_links_from_c() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("librestriction_lab_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let dir = tempfile::tempdir().unwrap();
    let exe = dir.path().join("smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(out.stdout, b"ok\n");
}
