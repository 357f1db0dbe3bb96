//! Every fixture in the shipped manifest enumerates to its declared order and
//! produces its declared link indices. The expectations are the published table rows.

use std::path::PathBuf;

use regmap_core::presentations::{EnumerationOptions, Strategy, DEFAULT_BUDGET};
use regmap_core::surface_families::{fixture_map, genus_from_order, load_manifest};

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

#[test]
fn shipped_manifest_rows_agree() {
    let dir = fixture_dir();
    let entries = load_manifest(&dir).unwrap();
    assert!(
        entries.len() >= 10,
        "manifest not found under {}",
        dir.display()
    );
    for e in &entries {
        let options = EnumerationOptions {
            budget: DEFAULT_BUDGET,
            strategy: e.strategy.unwrap_or(Strategy::Hlt),
        };
        let r = fixture_map(&e.path(&dir), e.map_type, options)
            .unwrap_or_else(|err| panic!("{}: {err}", e.name));
        assert_eq!(r.order, e.order, "{}", e.name);
        genus_from_order(e.map_type, r.order).unwrap();
        for &(link, index) in &e.expected {
            assert!(
                r.reports
                    .iter()
                    .any(|p| p.link == link && p.index.finite() == Some(index)),
                "{}: expected {}^{index}, got {:?}",
                e.name,
                link.as_str(),
                r.reports
            );
        }
        // no report outside the declared set
        for p in &r.reports {
            assert!(
                e.expected
                    .iter()
                    .any(|&(l, k)| l == p.link && p.index.finite() == Some(k)),
                "{}: unexpected {:?}",
                e.name,
                p
            );
        }
    }
}

#[test]
fn hurwitz_genus_fourteen_and_one_forty_six() {
    let dir = fixture_dir();
    let entries = load_manifest(&dir).unwrap();
    let genus = |name: &str| {
        let e = entries.iter().find(|e| e.name == name).unwrap();
        genus_from_order(e.map_type, e.order).unwrap()
    };
    assert_eq!(genus("h3"), 14);
    assert_eq!(genus("h5"), 14);
    assert_eq!(genus("h8"), 146);
    assert_eq!(genus("m.2.3"), 2);
    assert_eq!(genus("m.3.12"), 3);
}
