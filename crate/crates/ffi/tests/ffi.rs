use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use nkdetect_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn text(p: *const std::ffi::c_char) -> String {
    assert!(!p.is_null());
    CStr::from_ptr(p).to_str().unwrap().to_string()
}

unsafe fn parse(text: &str, vars: Option<&str>) -> (NkStatus, *mut NkPolynomial) {
    let vars = vars.map(cstr);
    let mut out = ptr::null_mut();
    let status = nk_polynomial_parse(
        cstr(text).as_ptr(),
        vars.as_ref().map_or(ptr::null(), |v| v.as_ptr()),
        &mut out,
    );
    (status, out)
}

#[test]
fn detects_through_handles() {
    unsafe {
        let (status, f) = parse("x + x^2*y", None);
        assert_eq!(status, NkStatus::Ok);
        let config = nk_config_new();
        assert_eq!(nk_config_set_seed(config, 8), NkStatus::Ok);
        assert_eq!(nk_config_set_runs(config, 2), NkStatus::Ok);
        let mut report = ptr::null_mut();
        assert_eq!(nk_detect(f, config, &mut report), NkStatus::Ok);
        assert!(nk_last_error().is_null());
        assert_eq!(nk_report_count(report), 1);
        let mut rho = ptr::null();
        assert_eq!(nk_report_s_final(report, 0, &mut rho), NkStatus::Ok);
        assert_eq!(text(rho), "z");
        let mut degree = 0usize;
        assert_eq!(
            nk_report_s_final_degree(report, 0, &mut degree),
            NkStatus::Ok
        );
        assert_eq!(degree, 1);
        let json = text(nk_report_json(report));
        assert!(json.contains("\"seed\": \"8\""), "{json}");
        assert!(text(nk_report_text(report)).contains("rational  {0}"));
        nk_report_free(report);
        nk_config_free(config);
        nk_polynomial_free(f);
    }
}

#[test]
fn errors_carry_status_and_message() {
    unsafe {
        let (status, f) = parse("x + w", Some("x,y"));
        assert_eq!(status, NkStatus::Parse);
        assert!(f.is_null());
        assert!(text(nk_last_error()).contains("undeclared variable `w`"));

        let (status, _) = parse("x", Some("x,x"));
        assert_eq!(status, NkStatus::Parse);

        let (_, f) = parse("x*y", None);
        let config = nk_config_new();
        assert_eq!(nk_config_set_runs(config, 0), NkStatus::Ok);
        let mut report = ptr::null_mut();
        assert_eq!(nk_detect(f, config, &mut report), NkStatus::Config);
        assert!(report.is_null());
        assert!(text(nk_last_error()).contains("--runs"));
        nk_config_free(config);
        nk_polynomial_free(f);

        let (_, f) = parse("5", Some("x,y"));
        let config = nk_config_new();
        assert_eq!(nk_detect(f, config, &mut report), NkStatus::Config);
        nk_config_free(config);
        nk_polynomial_free(f);
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(
            nk_polynomial_parse(ptr::null(), ptr::null(), &mut f),
            NkStatus::NullArgument
        );
        assert_eq!(
            nk_polynomial_parse(cstr("x").as_ptr(), ptr::null(), ptr::null_mut()),
            NkStatus::NullArgument
        );
        let mut report = ptr::null_mut();
        assert_eq!(
            nk_detect(ptr::null(), ptr::null(), &mut report),
            NkStatus::NullArgument
        );
        assert_eq!(
            nk_config_set_seed(ptr::null_mut(), 1),
            NkStatus::NullArgument
        );
        assert!(nk_report_json(ptr::null()).is_null());
        assert_eq!(nk_report_count(ptr::null()), 0);
        nk_report_free(ptr::null_mut());
        nk_config_free(ptr::null_mut());
        nk_polynomial_free(ptr::null_mut());
    }
}

#[test]
fn invalid_utf8_is_rejected() {
    unsafe {
        let bytes = CString::new(vec![b'x', 0xFF]).unwrap();
        let mut f = ptr::null_mut();
        assert_eq!(
            nk_polynomial_parse(bytes.as_ptr(), ptr::null(), &mut f),
            NkStatus::InvalidUtf8
        );
    }
}

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(manifest_dir().join("include/nkdetect.h")).unwrap();
    for name in [
        "typedef struct NkPolynomial NkPolynomial;",
        "typedef struct NkReport NkReport;",
        "NK_STATUS_GUARD_EXHAUSTED = 5",
        "nk_polynomial_parse(",
        "nk_detect(",
        "nk_report_free(",
        "nk_last_error(void)",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

/// Directory holding `libnkdetect_ffi.a`: the profile directory above the
/// test executable's `deps/`.
fn profile_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let lib = profile_dir().join("libnkdetect_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let out_dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let exe = out_dir.join("nkdetect_smoke");
    let status = Command::new("cc")
        .arg(manifest_dir().join("tests/c/smoke.c"))
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let run = Command::new(&exe).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}
