//! Regenerates `theories/` and the embedded file table from the stdlib
//! definitions. Run from anywhere inside the workspace.

use std::fmt::Write as _;
use std::path::PathBuf;

use pvk_cert::layout::file_digest;

fn main() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..");
    let theories = root.join("theories");
    let registry = pvk_theory::stdlib::build();
    let files = pvk_theory::stdlib::render(&registry);

    if theories.exists() {
        std::fs::remove_dir_all(&theories).expect("clear theories/");
    }
    let mut table = String::from("// Generated by pvk-gen-stdlib; do not edit.\n\n");
    for (rel, text) in &files {
        let p = theories.join(rel);
        std::fs::create_dir_all(p.parent().unwrap()).expect("create package dir");
        std::fs::write(&p, text).expect("write theory file");
        if rel == "index.json" {
            writeln!(table, "pub const INDEX_DIGEST: &str = \"{}\";\n", file_digest(text.as_bytes())).unwrap();
        }
    }
    table.push_str("pub const FILES: &[(&str, &str)] = &[\n");
    for (rel, _) in &files {
        writeln!(table, "    (\"{rel}\", include_str!(\"../../../../theories/{rel}\")),").unwrap();
    }
    table.push_str("];\n");
    let out = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("src/stdlib/files.rs");
    std::fs::write(&out, table).expect("write files.rs");
    println!("wrote {} files", files.len());
}
