use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use strongedge_ffi::*;

unsafe fn last_error() -> String {
    CStr::from_ptr(se_last_error_message()).to_string_lossy().into_owned()
}

unsafe fn graph(n: usize, edges: &[(u32, u32)]) -> *mut SeGraph {
    let us: Vec<u32> = edges.iter().map(|e| e.0).collect();
    let vs: Vec<u32> = edges.iter().map(|e| e.1).collect();
    let mut g = ptr::null_mut();
    assert_eq!(se_graph_from_edges(n, us.as_ptr(), vs.as_ptr(), edges.len(), &mut g), SeStatus::Ok);
    g
}

const C5: [(u32, u32); 5] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];

#[test]
fn color_c5() {
    unsafe {
        let g = graph(5, &C5);
        assert_eq!((se_graph_vertex_count(g), se_graph_edge_count(g), se_graph_max_degree(g)), (5, 5, 2));
        let mut k = 0;
        assert_eq!(se_degeneracy(g, &mut k), SeStatus::Ok);
        assert_eq!(k, 2);

        let mut c = ptr::null_mut();
        assert_eq!(se_color(g, -1, &mut c), SeStatus::Ok);
        assert!(se_coloring_valid(c));
        assert_eq!(se_coloring_colors_used(c), 5);
        assert_eq!(se_coloring_edge_count(c), 5);
        assert_eq!(se_coloring_k(c), 2);
        let mut b = 0;
        assert_eq!(se_coloring_bound(c, &mut b), SeStatus::Ok);
        assert_eq!(b, 7);
        assert_eq!(b, se_bound(2, 2));

        let mut buf = [u32::MAX; 5];
        let mut written = 0;
        assert_eq!(se_coloring_copy(c, buf.as_mut_ptr(), buf.len(), &mut written), SeStatus::Ok);
        assert_eq!(written, 5);
        let mut one = 0;
        assert_eq!(se_coloring_color(c, 3, &mut one), SeStatus::Ok);
        assert_eq!(one, buf[3]);
        assert_eq!(se_coloring_color(c, 5, &mut one), SeStatus::OutOfRange);

        let mut valid = false;
        assert_eq!(se_verify_coloring(g, buf.as_ptr(), 5, &mut valid), SeStatus::Ok);
        assert!(valid);
        buf[1] = buf[0];
        assert_eq!(se_verify_coloring(g, buf.as_ptr(), 5, &mut valid), SeStatus::Ok);
        assert!(!valid);

        let mut s = ptr::null_mut();
        assert_eq!(se_coloring_to_json(c, &mut s), SeStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["colors_used"], 5);
        se_string_free(s);

        se_coloring_free(c);
        se_graph_free(g);
    }
}

#[test]
fn exact_and_audit() {
    unsafe {
        let g = graph(5, &C5);
        let (mut chi, mut timed_out) = (0, true);
        assert_eq!(se_exact(g, 1_000_000, &mut chi, &mut timed_out), SeStatus::Ok);
        assert_eq!((chi, timed_out), (5, false));
        let mut pass = false;
        assert_eq!(se_audit(g, -1, &mut pass), SeStatus::Ok);
        assert!(pass);
        assert_eq!(se_audit(g, 1, &mut pass), SeStatus::NotDegenerate);
        assert!(!last_error().is_empty());
        se_graph_free(g);
    }
}

#[test]
fn parse_and_errors() {
    unsafe {
        let text = CString::new("p edge 3 3\ne 1 2\ne 2 3\ne 1 2\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(se_graph_parse(text.as_ptr(), &mut g), SeStatus::Ok);
        assert_eq!(se_graph_edge_count(g), 3);
        assert_eq!(se_graph_max_degree(g), 3);
        se_graph_free(g);

        let bad = CString::new("3 2\n0 1\n").unwrap();
        let mut g = ptr::null_mut();
        assert_eq!(se_graph_parse(bad.as_ptr(), &mut g), SeStatus::Parse);
        assert!(g.is_null());
        assert!(!last_error().is_empty());

        let (us, vs) = ([0u32], [0u32]);
        assert_eq!(se_graph_from_edges(2, us.as_ptr(), vs.as_ptr(), 1, &mut g), SeStatus::InvalidArgument);
        let (us, vs) = ([0u32], [9u32]);
        assert_eq!(se_graph_from_edges(2, us.as_ptr(), vs.as_ptr(), 1, &mut g), SeStatus::OutOfRange);
    }
}

#[test]
fn null_pointers() {
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(se_color(ptr::null(), -1, &mut c), SeStatus::NullPointer);
        assert!(last_error().contains("null"));
        let mut k = 0;
        assert_eq!(se_degeneracy(ptr::null(), &mut k), SeStatus::NullPointer);
        assert_eq!(se_graph_parse(ptr::null(), ptr::null_mut()), SeStatus::NullPointer);
        let g = graph(2, &[(0, 1)]);
        assert_eq!(se_degeneracy(g, ptr::null_mut()), SeStatus::NullPointer);
        assert_eq!(se_graph_vertex_count(ptr::null()), 0);
        se_graph_free(g);
        se_graph_free(ptr::null_mut());
        se_coloring_free(ptr::null_mut());
        se_string_free(ptr::null_mut());
    }
}

#[test]
fn edgeless_graph_has_no_bound() {
    unsafe {
        let g = graph(3, &[]);
        let mut c = ptr::null_mut();
        assert_eq!(se_color(g, -1, &mut c), SeStatus::Ok);
        let mut b = 0;
        assert_eq!(se_coloring_bound(c, &mut b), SeStatus::NoValue);
        se_coloring_free(c);
        se_graph_free(g);
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(se_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn header_declares_api() {
    let h = std::fs::read_to_string(crate_dir().join("include/strongedge.h")).unwrap();
    for sym in [
        "typedef struct SeGraph SeGraph",
        "SE_STATUS_NOT_DEGENERATE",
        "se_graph_from_edges",
        "se_color",
        "se_coloring_to_json",
        "se_exact",
        "se_audit",
        "se_last_error_message",
    ] {
        assert!(h.contains(sym), "{sym}");
    }
}

#[test]
fn c_program_links_against_staticlib() {
    // target/<profile>/deps/capi-* -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libstrongedge_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no C compiler or static library");
        return;
    }
    let exe = profile_dir.join("strongedge_smoke");
    let st = Command::new("cc")
        .arg(crate_dir().join("examples/smoke.c"))
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(st.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "exit {:?}", out.status.code());
    assert!(String::from_utf8_lossy(&out.stdout).contains("C5 uses 5 colors"));
}
