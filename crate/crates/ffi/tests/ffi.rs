use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use domdist_ffi::*;

struct Owned(*mut DdGraph);

impl Drop for Owned {
    fn drop(&mut self) {
        unsafe { dd_graph_free(self.0) }
    }
}

fn graph6(s: &str) -> Result<Owned, DdStatus> {
    let text = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    match unsafe { dd_graph_from_graph6(text.as_ptr(), &mut g) } {
        DdStatus::Ok => Ok(Owned(g)),
        status => {
            assert!(g.is_null());
            Err(status)
        }
    }
}

fn last_error() -> String {
    let p = dd_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { dd_string_free(p) };
    s
}

#[test]
fn path_invariants() {
    let g = graph6("Ch").unwrap(); // P4
    let (mut n, mut m, mut diam, mut w, mut d) = (0usize, 0usize, 0u32, 0u64, 0u32);
    unsafe {
        assert_eq!(dd_graph_order(g.0, &mut n), DdStatus::Ok);
        assert_eq!(dd_graph_size(g.0, &mut m), DdStatus::Ok);
        assert_eq!(dd_graph_diameter(g.0, &mut diam), DdStatus::Ok);
        assert_eq!(dd_graph_wiener(g.0, &mut w), DdStatus::Ok);
        assert_eq!(dd_graph_distance(g.0, 0, 3, &mut d), DdStatus::Ok);
    }
    assert_eq!((n, m, diam, w, d), (4, 3, 3, 10, 3));
    assert!(dd_last_error_message().is_null());
}

#[test]
fn gamma_with_witness_buffer() {
    let g = graph6("Ch").unwrap();
    let mut gamma = 0;
    let mut witness = [usize::MAX; 4];
    unsafe {
        assert_eq!(
            dd_graph_gamma(g.0, &mut gamma, ptr::null_mut(), 0),
            DdStatus::BufferTooSmall
        );
        assert_eq!(gamma, 2);
        assert_eq!(
            dd_graph_gamma(g.0, &mut gamma, witness.as_mut_ptr(), witness.len()),
            DdStatus::Ok
        );
    }
    // the solver's witness; any sorted pair dominating P4 is acceptable
    assert!(matches!(witness[..2], [0, 2] | [1, 2] | [0, 3] | [1, 3]), "{witness:?}");
    assert_eq!(witness[2], usize::MAX);

    let mut dominates = false;
    unsafe {
        assert_eq!(
            dd_graph_is_dominating(g.0, witness.as_ptr(), 2, &mut dominates),
            DdStatus::Ok
        );
    }
    assert!(dominates);
}

#[test]
fn parse_errors_map_to_codes() {
    assert_eq!(graph6("A?").err(), Some(DdStatus::Disconnected));
    assert!(last_error().contains("disconnected"));
    assert_eq!(graph6("@").err(), Some(DdStatus::OrderOutOfRange));
    assert_eq!(graph6("B!").err(), Some(DdStatus::Parse));

    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { dd_graph_from_graph6(ptr::null(), &mut g) },
        DdStatus::NullPointer
    );
    let bad = [0xffu8, 0];
    assert_eq!(
        unsafe { dd_graph_from_graph6(bad.as_ptr().cast(), &mut g) },
        DdStatus::InvalidUtf8
    );
}

#[test]
fn edgelist_and_range_checks() {
    let text = CString::new("n 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let mut raw = ptr::null_mut();
    assert_eq!(unsafe { dd_graph_from_edgelist(text.as_ptr(), &mut raw) }, DdStatus::Ok);
    let g = Owned(raw);
    let mut d = 0;
    assert_eq!(
        unsafe { dd_graph_distance(g.0, 0, 4, &mut d) },
        DdStatus::VertexOutOfRange
    );
    let mut ok = false;
    let set = [0usize, 9];
    assert_eq!(
        unsafe { dd_graph_is_dominating(g.0, set.as_ptr(), 2, &mut ok) },
        DdStatus::VertexOutOfRange
    );
    assert_eq!(unsafe { dd_graph_order(ptr::null(), &mut 0) }, DdStatus::NullPointer);
}

#[test]
fn report_json() {
    let g = graph6("CF").unwrap(); // K_1,3
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { dd_graph_report_json(g.0, &mut out) }, DdStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["gamma"], 1);
    assert_eq!(v["boundary_ecc"]["equality"], true);
    assert_eq!(v["fatal"], false);
}

#[test]
fn lift_json() {
    let g = graph6("Cl").unwrap();
    let mut gamma = 0;
    let mut w = [0usize; 4];
    unsafe { dd_graph_gamma(g.0, &mut gamma, w.as_mut_ptr(), 4) };
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { dd_graph_lift_json(g.0, w.as_ptr(), gamma, &mut out) },
        DdStatus::Ok
    );
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["tree_edges"].as_array().unwrap().len(), 3);

    let not_minimum = [0usize, 1, 2];
    assert_eq!(
        unsafe { dd_graph_lift_json(g.0, not_minimum.as_ptr(), 3, &mut out) },
        DdStatus::NotAGammaSet
    );
}

#[test]
fn status_names() {
    let name = unsafe { CStr::from_ptr(dd_status_name(DdStatus::BufferTooSmall)) };
    assert_eq!(name.to_str().unwrap(), "buffer too small");
}

#[test]
fn header_declares_the_api() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/domdist.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in [
        "dd_graph_from_graph6",
        "dd_graph_from_edgelist",
        "dd_graph_free",
        "dd_graph_gamma",
        "dd_graph_report_json",
        "dd_string_free",
        "dd_last_error_message",
        "typedef struct DdGraph DdGraph",
        "DD_STATUS_BUFFER_TOO_SMALL = 7",
    ] {
        assert!(text.contains(f), "header lacks {f}");
    }
    // compile the header as C when a compiler is around
    if let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-Wall", "-Werror", "-x", "c"])
        .arg(&header)
        .output()
    {
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
