use univsum::identities::{check_dissection_counts, psi_product_record, verify_identity};
use univsum::ternary::default_rules;
use univsum::{verify_dickson, Catalog};

#[test]
fn every_identity_verifies() {
    let catalog = Catalog::bundled();
    assert!(catalog.records().len() >= 40);
    for (id, check) in catalog.verify_all(2000) {
        let check = check.unwrap();
        assert!(check.ok(), "{id}: {:?}", check.first_mismatch);
    }
}

#[test]
fn psi_product_records_match_catalog() {
    let catalog = Catalog::bundled();
    for (a, b) in [(1, 1), (2, 4), (3, 1), (1, 2)] {
        let rec = psi_product_record(a, b).unwrap();
        let stored = catalog.get(&rec.id).unwrap();
        assert_eq!(stored.lhs, rec.lhs);
        assert_eq!(stored.rhs, rec.rhs);
    }
}

#[test]
fn dissection_counts_hold() {
    let catalog = Catalog::bundled();
    let mut seen = 0;
    for rec in catalog.dissections() {
        let check = check_dissection_counts(rec, 1500).unwrap();
        assert!(check.ok(), "{}: {:?}", rec.id, check.first_failure);
        seen += 1;
    }
    assert!(seen >= 25, "only {seen} dissections");
}

#[test]
fn dickson_rules_match_scans() {
    let rules = default_rules();
    assert_eq!(rules.len(), 20);
    for r in &rules {
        let check = verify_dickson(&r.form, &r.rule, 20_000).unwrap();
        assert!(check.ok(), "{}: {:?}", r.form, check.disagreement);
    }
}

#[test]
fn a_corrupted_record_is_caught() {
    let catalog = Catalog::bundled();
    let mut rec = catalog.get("x-split3").unwrap().clone();
    rec.rhs[1].m = 2;
    assert!(!verify_identity::<i64>(&rec, 100).unwrap().ok());
}
