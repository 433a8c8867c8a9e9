use std::ffi::{CStr, CString};
use std::ptr;

use surfdens_ffi::*;

const K5: &str = "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";
const P5: &str = "5 4\n0 1\n1 2\n2 3\n3 4\n";

fn parse(text: &str) -> *mut SdGraph {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { sd_graph_parse(c.as_ptr(), &mut g) }, SdStatus::Ok);
    g
}

unsafe fn take(s: *mut std::ffi::c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    sd_string_free(s);
    out
}

#[test]
fn graph_queries() {
    let k5 = parse(K5);
    let p5 = parse(P5);
    unsafe {
        let mut f = 99;
        assert_eq!(sd_flap_number(k5, &mut f), SdStatus::Ok);
        assert_eq!(f, 0);
        assert_eq!(sd_flap_number(p5, &mut f), SdStatus::Ok);
        assert_eq!(f, 3);
        let mut b = true;
        assert_eq!(sd_is_planar(k5, &mut b), SdStatus::Ok);
        assert!(!b);
        assert_eq!(sd_is_strongly_non_planar(k5, &mut b), SdStatus::Ok);
        assert!(b);
        let mut beta = 0;
        assert_eq!(sd_tree_beta(p5, &mut beta), SdStatus::Ok);
        assert_eq!(beta, 3);
        let mut n = 0;
        assert_eq!(sd_graph_order(k5, &mut n), SdStatus::Ok);
        assert_eq!(n, 5);
        assert_eq!(sd_graph_size(k5, &mut n), SdStatus::Ok);
        assert_eq!(n, 10);

        let mut s = ptr::null_mut();
        assert_eq!(sd_count_cliques(k5, 3, &mut s), SdStatus::Ok);
        assert_eq!(take(s), "10");
        assert_eq!(sd_count_copies(p5, k5, &mut s), SdStatus::Ok);
        assert_eq!(take(s), "60");
        assert_eq!(sd_graph_serialize(p5, &mut s), SdStatus::Ok);
        assert_eq!(take(s), P5);

        sd_graph_free(k5);
        sd_graph_free(p5);
    }
}

#[test]
fn errors_carry_status_and_message() {
    let bad = CString::new("3 1\n0 7\n").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(sd_graph_parse(bad.as_ptr(), &mut g), SdStatus::Parse);
        assert!(g.is_null());
        let msg = CStr::from_ptr(sd_last_error_message()).to_str().unwrap();
        assert!(msg.contains("line 2"), "{msg}");

        let k5 = parse(K5);
        let mut beta = 0;
        assert_eq!(sd_tree_beta(k5, &mut beta), SdStatus::NotATree);
        assert_eq!(sd_flap_number(ptr::null(), &mut beta), SdStatus::NullPointer);
        assert_eq!(sd_flap_number(k5, ptr::null_mut()), SdStatus::NullPointer);
        assert_eq!(sd_graph_order(k5, &mut beta), SdStatus::Ok);
        assert!(sd_last_error_message().is_null());
        sd_graph_free(k5);
    }
}

#[test]
fn embedding_queries() {
    let text = CString::new(include_str!("../../core/data/k6_projective.emb")).unwrap();
    let mut e = ptr::null_mut();
    unsafe {
        assert_eq!(sd_embedding_parse(text.as_ptr(), &mut e), SdStatus::Ok);
        let mut v = 0;
        assert_eq!(sd_embedding_genus(e, &mut v), SdStatus::Ok);
        assert_eq!(v, 1);
        assert_eq!(sd_embedding_face_count(e, &mut v), SdStatus::Ok);
        assert_eq!(v, 10);
        let mut tri = false;
        assert_eq!(sd_embedding_is_triangulation(e, &mut tri), SdStatus::Ok);
        assert!(tri);
        sd_embedding_free(e);
    }
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/surfdens.h");
    for name in [
        "sd_graph_parse",
        "sd_graph_free",
        "sd_flap_number",
        "sd_count_copies",
        "sd_embedding_genus",
        "sd_last_error_message",
        "typedef struct SdGraph SdGraph",
        "SD_STATUS_NOT_A_TREE = 9",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}

/// Compiles and runs a C program against the static library when a C
/// compiler is on PATH.
#[test]
fn c_program_links_against_header() {
    let Ok(cc) = which_cc() else { return };
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("main.c");
    std::fs::write(
        &src,
        r#"#include "surfdens.h"
#include <stdio.h>
int main(void) {
    SdGraph *g = NULL;
    if (sd_graph_parse("5 4\n0 1\n1 2\n2 3\n3 4\n", &g) != SD_STATUS_OK) return 2;
    size_t f = 0;
    if (sd_flap_number(g, &f) != SD_STATUS_OK) return 3;
    sd_graph_free(g);
    printf("%zu\n", f);
    return 0;
}
"#,
    )
    .unwrap();
    let target = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../target/debug");
    let lib = target.join("libsurfdens_ffi.a");
    if !lib.exists() {
        eprintln!("skipping C link check: {} not built", lib.display());
        return;
    }
    let exe = dir.path().join("main");
    let status = std::process::Command::new(cc)
        .arg(&src)
        .arg("-I")
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = std::process::Command::new(&exe).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "3\n");
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
        .ok_or(())
}
