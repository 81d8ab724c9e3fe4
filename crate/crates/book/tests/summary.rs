//! Every chapter listed in SUMMARY.md is compiled as a doc-test module.

#[test]
fn every_chapter_is_tested() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../book/src/");
    let summary = std::fs::read_to_string(format!("{root}SUMMARY.md")).unwrap();
    let lib = include_str!("../src/lib.rs");
    let chapters: Vec<&str> = summary
        .lines()
        .filter_map(|l| {
            l.split_once("](")
                .map(|(_, rest)| rest.trim_end_matches(')'))
        })
        .collect();
    assert!(chapters.len() >= 8);
    for ch in chapters {
        assert!(
            std::path::Path::new(&format!("{root}{ch}")).exists(),
            "{ch} missing"
        );
        assert!(
            lib.contains(&format!("book/src/{ch}\")")),
            "{ch} is not included in lib.rs"
        );
    }
}
