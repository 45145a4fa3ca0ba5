//! Full sweep: every claimed (catalog example, family) pair is built,
//! verified, and compared against the closed-form tables and parameter lists.

use bentschemes_core::analysis::Analysis;
use bentschemes_core::catalog;
use bentschemes_core::compare::{check_family, claimed_classes, claimed_families};

#[test]
fn every_claimed_pair_matches_closed_forms() {
    let mut failures = Vec::new();
    for entry in catalog::catalog() {
        let families = claimed_families(entry.name);
        if families.is_empty() {
            continue;
        }
        let f = entry.function().unwrap();
        let analysis = Analysis::new(&f).unwrap();
        for &family in families {
            let check = match check_family(&analysis, family) {
                Ok(check) => check,
                Err(err) => {
                    failures.push(format!("{} {family}: {err}", entry.name));
                    continue;
                }
            };
            if let Some(expected) = claimed_classes(family, entry.p) {
                if check.classes != expected {
                    failures.push(format!(
                        "{} {family}: {} classes, expected {expected}",
                        entry.name, check.classes
                    ));
                }
            }
            if !check.aligned && matches!(family, bentschemes_core::partition::Family::Uk(_)) {
                failures.push(format!("{} {family}: dual not aligned", entry.name));
            }
            for (label, result) in [
                ("table P", check.table_p.as_ref().map(|(_, c)| c)),
                ("table Q", check.table_q.as_ref().map(|(_, c)| c)),
                ("closed p", check.closed_p.as_ref()),
                ("closed q", check.closed_q.as_ref()),
            ] {
                if let Some(result) = result {
                    if !result.ok() {
                        failures.push(format!("{} {family} {label}: {result}", entry.name));
                    }
                }
            }
            println!("checked {} {family}: {} classes", entry.name, check.classes);
        }
    }
    assert!(
        failures.is_empty(),
        "closed-form mismatches:\n{}",
        failures.join("\n")
    );
}
