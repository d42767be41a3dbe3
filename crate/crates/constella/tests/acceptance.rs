use std::io::Write;
use std::time::Duration;

use constella::theorems::{run, Limits};

const BUDGETS: [(u8, u64); 9] = [(1, 1), (2, 1), (3, 300), (4, 600), (5, 60), (6, 600), (7, 300), (8, 300), (9, 60)];

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for (id, secs) in BUDGETS {
        let o = run(id, 3, Limits::default());
        let in_budget = o.elapsed <= Duration::from_secs(secs);
        let line = format!("{}{}\n", o.line(), if in_budget { "" } else { " [over budget]" });
        std::io::stdout().write_all(line.as_bytes()).unwrap();
        if !o.passed || !in_budget {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
#[ignore = "slow in debug builds; run with --release -- --ignored"]
fn census_bijectivity_at_four() {
    let o = run(8, 4, Limits::default());
    println!("{}", o.line());
    assert!(o.passed, "{}", o.detail);
}
