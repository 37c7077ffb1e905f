//! The committed fixture files under fixtures/ must stay byte-identical to
//! the built-in constructors. Regenerate with
//! `NILGRAPH_WRITE_FIXTURES=1 cargo test -p nilgraph --test fixture_files`.

use std::path::PathBuf;

use nilgraph::constructions::{fixture_by_name, fixture_names};
use nilgraph::io::{emit_cayley_table, parse_cayley_table};

fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../..")
        .join("fixtures")
}

#[test]
fn fixture_files_match_builders() {
    let dir = fixtures_dir();
    let write = std::env::var_os("NILGRAPH_WRITE_FIXTURES").is_some();
    for name in fixture_names() {
        let s = fixture_by_name(name).unwrap();
        let expected = emit_cayley_table(&s);
        let path = dir.join(format!("{name}.txt"));
        if write {
            std::fs::create_dir_all(&dir).unwrap();
            std::fs::write(&path, &expected).unwrap();
        }
        let on_disk = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("cannot read {}: {e}", path.display()));
        assert_eq!(on_disk, expected, "fixture file {name}.txt is stale");
        let parsed = parse_cayley_table(&on_disk).unwrap();
        assert_eq!(parsed.flat_table(), s.flat_table());
        assert_eq!(parsed.labels(), s.labels());
    }
}
