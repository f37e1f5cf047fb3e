//! Compile a C program against the generated header and link it with the
//! static library. Skipped when no C compiler is on the path.

use std::path::{Path, PathBuf};
use std::process::Command;

fn target_dir() -> PathBuf {
    // target/<profile>/deps/<this test> -> target/<profile>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libskewdet_ffi.a");
    if Command::new("cc").arg("--version").output().is_err() || !lib.exists() {
        eprintln!("skipping: no C compiler or no static library at {}", lib.display());
        return;
    }
    let exe = std::env::temp_dir().join(format!("skewdet-smoke-{}", std::process::id()));
    let status = Command::new("cc")
        .args(["-std=c11", "-Wall", "-Werror", "-I"])
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile or link failed");
    let out = Command::new(&exe).output().unwrap();
    std::fs::remove_file(&exe).ok();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let printed = String::from_utf8(out.stdout).unwrap();
    let expected =
        skewdet::tableaux::count_syt_aitken(&skewdet::shapes::SkewShape::from_parts(&[6, 6, 6, 4], &[3, 1]).unwrap())
            .unwrap();
    assert_eq!(printed.trim(), expected.to_string());
}
