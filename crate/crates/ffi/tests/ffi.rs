use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use pvclab_ffi::*;

fn graph6(text: &str) -> *mut PvcGraph {
    let text = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pvc_graph_from_graph6(text.as_ptr(), &mut out) }, PvcStatus::Ok);
    out
}

fn edges(order: usize, list: &[(usize, usize)]) -> *mut PvcGraph {
    let flat: Vec<usize> = list.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pvc_graph_from_edges(order, flat.as_ptr(), list.len(), &mut out) }, PvcStatus::Ok);
    out
}

fn coloring(colors: &[u32]) -> *mut PvcColoring {
    let mut out = ptr::null_mut();
    assert_eq!(unsafe { pvc_coloring_new(colors.as_ptr(), colors.len(), &mut out) }, PvcStatus::Ok);
    out
}

fn last_error() -> String {
    let msg = pvc_last_error_message();
    assert!(!msg.is_null());
    unsafe { CStr::from_ptr(msg) }.to_string_lossy().into_owned()
}

fn cycle(n: usize) -> *mut PvcGraph {
    let list: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    edges(n, &list)
}

#[test]
fn graph_handles_round_trip() {
    let g = graph6("D?{");
    unsafe {
        assert_eq!((pvc_graph_order(g), pvc_graph_edge_count(g)), (5, 4));
        let mut text = ptr::null_mut();
        assert_eq!(pvc_graph_to_graph6(g, &mut text), PvcStatus::Ok);
        assert_eq!(CStr::from_ptr(text).to_str().unwrap(), "D?{");
        pvc_string_free(text);
        let mut diameter = 0;
        assert_eq!(pvc_graph_diameter(g, &mut diameter), PvcStatus::Ok);
        assert_eq!(diameter, 2);
        let mut kappa = 0;
        assert_eq!(pvc_graph_connectivity(g, &mut kappa), PvcStatus::Ok);
        assert_eq!(kappa, 1);
        pvc_graph_free(g);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut out = ptr::null_mut();
        let bad = CString::new("A~~").unwrap();
        assert_eq!(pvc_graph_from_graph6(bad.as_ptr(), &mut out), PvcStatus::Parse);
        assert!(out.is_null());
        assert!(last_error().contains("graph6"));
        assert_eq!(pvc_graph_from_graph6(ptr::null(), &mut out), PvcStatus::NullPointer);
        assert_eq!(pvc_graph_from_edges(2, [0usize, 0].as_ptr(), 1, &mut out), PvcStatus::InvalidArgument);

        let split = edges(4, &[(0, 1), (2, 3)]);
        let mut d = 0;
        assert_eq!(pvc_graph_diameter(split, &mut d), PvcStatus::Disconnected);
        let big = cycle(30);
        let mut value = 0;
        assert_eq!(pvc_oracle_pvck(big, 1, 0, &mut value, ptr::null_mut()), PvcStatus::CapExceeded);
        let zero = 0u32;
        let mut c = ptr::null_mut();
        assert_eq!(pvc_coloring_new(&zero, 1, &mut c), PvcStatus::InvalidArgument);
        pvc_graph_free(split);
        pvc_graph_free(big);
    }
}

#[test]
fn verifiers_on_even_cycle() {
    let c6 = cycle(6);
    let alternating = coloring(&[1, 2, 1, 2, 1, 2]);
    let mono = coloring(&[1; 6]);
    unsafe {
        let mut ok = false;
        assert_eq!(pvc_verify_pvck(c6, alternating, 2, &mut ok), PvcStatus::Ok);
        assert!(ok);
        assert_eq!(pvc_verify_pvck(c6, mono, 2, &mut ok), PvcStatus::Ok);
        assert!(!ok);
        assert_eq!(pvc_verify_pvck(c6, mono, 3, &mut ok), PvcStatus::InvalidArgument);
        let short = coloring(&[1, 2]);
        assert_eq!(pvc_verify_spvc(c6, short, &mut ok), PvcStatus::InvalidArgument);
        pvc_coloring_free(short);
        pvc_coloring_free(alternating);
        pvc_coloring_free(mono);
        pvc_graph_free(c6);
    }
}

#[test]
fn oracle_and_theorem_agree_on_a_product() {
    let (c5, p4) = (cycle(5), edges(4, &[(0, 1), (1, 2), (2, 3)]));
    unsafe {
        let mut strong = ptr::null_mut();
        assert_eq!(pvc_product(PvcProductKind::Strong, c5, p4, &mut strong), PvcStatus::Ok);
        let mut value = 0;
        let mut optimal = ptr::null_mut();
        assert_eq!(pvc_oracle_spvc(strong, 20, &mut value, &mut optimal), PvcStatus::Ok);
        assert_eq!(value, 2);
        let mut colors = vec![0u32; 20];
        assert_eq!(pvc_coloring_colors(optimal, colors.as_mut_ptr(), colors.len()), 20);
        assert!(colors.iter().all(|&c| c == 1 || c == 2));
        let mut predicted = PvcPrediction::default();
        assert_eq!(pvc_theorem_value(PvcProductKind::Strong, c5, p4, 0, &mut predicted), PvcStatus::Ok);
        assert_eq!(predicted, PvcPrediction { lo: 2, hi: 2, verified: true });
        assert_eq!(pvc_theorem_value(PvcProductKind::Direct, c5, p4, 2, &mut predicted), PvcStatus::NoFormula);
        pvc_coloring_free(optimal);
        pvc_graph_free(strong);
        pvc_graph_free(c5);
        pvc_graph_free(p4);
    }
}

#[test]
fn header_declares_the_interface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/pvclab.h")).unwrap();
    for name in [
        "typedef struct PvcGraph PvcGraph;",
        "typedef struct PvcColoring PvcColoring;",
        "PVC_STATUS_NO_FORMULA = 7",
        "pvc_graph_from_graph6",
        "pvc_oracle_spvc",
        "pvc_theorem_value",
        "pvc_last_error_message",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Compiles the C smoke test against the static library built alongside this
/// test binary.
#[test]
fn c_program_links_and_runs() {
    let deps = std::env::current_exe().unwrap().parent().unwrap().to_path_buf();
    let lib = deps.join("libpvclab_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("pvclab_smoke");
    let status = Command::new("cc")
        .arg(manifest.join("tests/smoke.c"))
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("a C compiler named cc");
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
