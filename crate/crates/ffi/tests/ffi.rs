use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use equitor_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(eqt_last_error_message()) }.to_str().unwrap().to_string()
}

fn take_string(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { eqt_string_free(s) };
    out
}

fn ideal(n: usize, gens: &[u32]) -> *mut EqtIdeal {
    let mut out = ptr::null_mut();
    let status = unsafe { eqt_ideal_new(n, gens.as_ptr(), gens.len() / n, &mut out) };
    assert_eq!(status, EqtStatus::Ok, "{}", last_error());
    out
}

fn example() -> *mut EqtIdeal {
    ideal(3, &[4, 1, 1, 5, 2, 0])
}

#[test]
fn example_betti_numbers() {
    let i = example();
    let mut tor = ptr::null_mut();
    assert_eq!(unsafe { eqt_tor_compute(i, 0, &mut tor) }, EqtStatus::Ok);
    let mut b = 0u64;
    for (row, col, want) in [(6u64, 0usize, 3u64), (7, 1, 6), (9, 2, 3), (10, 2, 1), (8, 0, 0)] {
        assert_eq!(unsafe { eqt_tor_betti(tor, col, row + col as u64, &mut b) }, EqtStatus::Ok);
        assert_eq!(b, want, "row {row} column {col}");
    }
    let mut text = ptr::null_mut();
    assert_eq!(unsafe { eqt_tor_betti_table_text(tor, &mut text) }, EqtStatus::Ok);
    assert!(take_string(text).contains("total: 9 12 4\n"));
    assert_eq!(unsafe { eqt_tor_components_text(tor, &mut text) }, EqtStatus::Ok);
    assert!(take_string(text).contains("Tor_2<(5,5,1)>: 1 x Ind[(1,1),(1)]\n"));

    let mut d = 0u64;
    assert_eq!(unsafe { eqt_tor_orbit_dim(tor, 1, [5, 2, 1].as_ptr(), 3, &mut d) }, EqtStatus::Ok);
    assert_eq!(d, 6);
    assert_eq!(unsafe { eqt_tor_multigraded_betti(tor, 1, [1, 5, 2].as_ptr(), 3, &mut d) }, EqtStatus::Ok);
    assert_eq!(d, 1);
    assert_eq!(
        unsafe { eqt_tor_orbit_dim(tor, 1, [1, 2, 5].as_ptr(), 3, &mut d) },
        EqtStatus::InvalidArgument
    );
    assert!(last_error().contains("weakly decreasing"));

    let (mut any, mut top) = (false, 0usize);
    assert_eq!(unsafe { eqt_tor_max_index(tor, &mut any, &mut top) }, EqtStatus::Ok);
    assert!(any);
    assert_eq!(top, 2);
    assert_eq!(unsafe { eqt_tor_to_quotient(tor) }, EqtStatus::Ok);
    assert_eq!(unsafe { eqt_tor_max_index(tor, &mut any, &mut top) }, EqtStatus::Ok);
    assert_eq!(top, 3);

    let (mut reg, mut pd) = (0u64, 0usize);
    assert_eq!(unsafe { eqt_regularity(i, &mut reg) }, EqtStatus::Ok);
    assert_eq!(unsafe { eqt_projective_dimension(i, &mut pd) }, EqtStatus::Ok);
    assert_eq!((reg, pd), (9, 3));

    unsafe {
        eqt_tor_free(tor);
        eqt_ideal_free(i);
    }
}

#[test]
fn membership_and_generators() {
    let i = ideal(3, &[1, 4, 1, 5, 2, 0, 5, 5, 5]);
    let mut count = 0usize;
    assert_eq!(unsafe { eqt_ideal_generator_count(i, &mut count) }, EqtStatus::Ok);
    assert_eq!(count, 2);
    let mut inside = false;
    assert_eq!(unsafe { eqt_ideal_contains(i, [1, 1, 4].as_ptr(), 3, &mut inside) }, EqtStatus::Ok);
    assert!(inside);
    assert_eq!(unsafe { eqt_ideal_contains(i, [3, 3, 3].as_ptr(), 3, &mut inside) }, EqtStatus::Ok);
    assert!(!inside);
    assert_eq!(unsafe { eqt_ideal_contains(i, [3, 3].as_ptr(), 2, &mut inside) }, EqtStatus::InvalidArgument);
    unsafe { eqt_ideal_free(i) };
}

#[test]
fn error_codes() {
    let zero = ideal(2, &[]);
    let mut tor = ptr::null_mut();
    assert_eq!(unsafe { eqt_tor_compute(zero, 0, &mut tor) }, EqtStatus::ZeroIdeal);
    assert!(tor.is_null());
    let mut reg = 0u64;
    let unit = ideal(2, &[0, 0]);
    assert_eq!(unsafe { eqt_regularity(unit, &mut reg) }, EqtStatus::UnitIdeal);
    let i = example();
    assert_eq!(unsafe { eqt_tor_compute(i, 6, &mut tor) }, EqtStatus::InvalidCharacteristic);
    assert_eq!(last_error(), "characteristic must be 0 or prime, got 6");
    assert_eq!(unsafe { eqt_tor_compute(ptr::null(), 0, &mut tor) }, EqtStatus::NullPointer);
    assert_eq!(unsafe { eqt_ideal_new(2, ptr::null(), 1, &mut ptr::null_mut()) }, EqtStatus::NullPointer);
    assert_eq!(unsafe { eqt_tor_compute(i, 0, ptr::null_mut()) }, EqtStatus::NullPointer);
    // success clears the message
    assert_eq!(unsafe { eqt_regularity(i, &mut reg) }, EqtStatus::Ok);
    assert_eq!(last_error(), "");
    unsafe {
        eqt_ideal_free(zero);
        eqt_ideal_free(unit);
        eqt_ideal_free(i);
        eqt_ideal_free(ptr::null_mut());
        eqt_tor_free(ptr::null_mut());
        eqt_string_free(ptr::null_mut());
    }
}

#[test]
fn json_jobs() {
    let job = CString::new(r#"{"n":3,"generators":[[4,1,1],[5,2,0]],"tasks":["reg-pdim","verify"]}"#).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { eqt_run_job_json(job.as_ptr(), &mut out) }, EqtStatus::Ok);
    let json = take_string(out);
    assert!(json.contains(r#""reg_quotient": 9"#), "{json}");
    assert!(json.contains(r#""all_pass": true"#));

    let bad = CString::new(r#"{"n":3,"generators":[[1,2]]}"#).unwrap();
    assert_eq!(unsafe { eqt_run_job_json(bad.as_ptr(), &mut out) }, EqtStatus::InvalidArgument);
    let bad = CString::new("{").unwrap();
    assert_eq!(unsafe { eqt_run_job_json(bad.as_ptr(), &mut out) }, EqtStatus::InvalidJob);
    let bytes = [0xffu8, 0];
    assert_eq!(unsafe { eqt_run_job_json(bytes.as_ptr().cast(), &mut out) }, EqtStatus::InvalidUtf8);
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(eqt_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn header_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include")
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(header_dir().join("equitor.h")).unwrap();
    for name in [
        "typedef struct EqtIdeal EqtIdeal;",
        "typedef struct EqtTor EqtTor;",
        "EQT_STATUS_VERIFY_FAILED = 9",
        "eqt_ideal_new(",
        "eqt_tor_compute(",
        "eqt_tor_betti_table_text(",
        "eqt_run_job_json(",
        "eqt_last_error_message(void)",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

/// The static library next to this test binary, if cargo produced one.
fn static_lib() -> Option<PathBuf> {
    let exe = std::env::current_exe().ok()?;
    let profile_dir = exe.parent()?.parent()?;
    let lib = profile_dir.join("libequitor_ffi.a");
    lib.exists().then_some(lib)
}

#[test]
fn c_program_links_and_runs() {
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler available; header check skipped");
        return;
    };
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/c/smoke.c");
    let status = Command::new(&cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header_dir())
        .arg(&src)
        .status()
        .unwrap();
    assert!(status.success(), "header does not compile as C99");

    let Some(lib) = static_lib() else {
        eprintln!("static library not built in this profile; link step skipped");
        return;
    };
    let out_dir = std::env::temp_dir().join(format!("equitor-ffi-{}", std::process::id()));
    std::fs::create_dir_all(&out_dir).unwrap();
    let exe = out_dir.join("smoke");
    let status = Command::new(&cc)
        .args(["-std=c99", "-I"])
        .arg(header_dir())
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "link failed");
    let run = Command::new(&exe).output().unwrap();
    std::fs::remove_dir_all(&out_dir).ok();
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout), "ok\n");
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc).arg("--version").output().is_ok_and(|o| o.status.success()) {
            return Ok(cc.to_string());
        }
    }
    Err(())
}
