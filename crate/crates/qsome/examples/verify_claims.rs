//! Drive the claim registry from code: run a selection of congruence claims
//! at a chosen order and inspect the structured reports.
//!
//! ```bash
//! cargo run -p qsome --example verify_claims
//! ```

use qsome::verify::{self, Claim, ClaimKind, Status, Subject, VerifyContext};

fn main() {
    let order = 1024;
    let selection: Vec<String> = [
        "eq2",
        "eq3",
        "eq4",
        "eq6-k1",
        "eq7-k1",
        "eq22",
        "pbar-4n3",
        "eq02-odd",
        "eq23-as-stated",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();

    println!("running {} claims at order {order}:\n", selection.len());
    let reports = verify::run_all(order, Some(&selection), 2).expect("known ids");
    for r in &reports {
        println!(
            "{:<4} {:<16} kind={:<15} instances={:<5} violations={}",
            r.status.to_string(),
            r.claim_id,
            r.kind.name(),
            r.instances,
            r.violations.len()
        );
    }

    // a deliberately false claim produces a Fail report with the offending n
    let bogus = Claim {
        id: "demo-false",
        title: "SOME-bar(4n+1) ≡ 0 (mod 8) — false on purpose",
        anchor: "demo",
        kind: ClaimKind::Progression {
            subject: Subject::SomeBar,
            step: 4,
            residue: 1,
            modulus: 8,
        },
    };
    let ctx = VerifyContext::new(256);
    let report = verify::evaluate(&bogus, &ctx);
    println!(
        "\nnegative control '{}': status={}, first violation at n={} (value {})",
        bogus.id, report.status, report.violations[0].n, report.violations[0].value
    );
    assert_eq!(report.status, Status::Fail);

    // machine-readable form of any report
    println!("\nfirst report as JSON:");
    println!("{}", serde_json::to_string_pretty(&reports[0]).unwrap());
}
