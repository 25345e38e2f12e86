//! The acceptance suite: one line per criterion, with its time limit.
//! Criterion 11 runs `pairops verify` twice and compares the bytes.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use pairops::verify::{run_criterion, TIME_LIMITS};

fn limit(id: u32) -> Duration {
    let secs = TIME_LIMITS
        .iter()
        .find(|(i, _)| *i == id)
        .expect("every criterion has a limit")
        .1;
    Duration::from_secs(secs)
}

fn report(id: u32, title: &str, passed: bool, elapsed: Duration, summary: &str) -> bool {
    let in_time = elapsed <= limit(id);
    let ok = passed && in_time;
    println!(
        "[{}] {:>2} {} ({:.2}s, limit {}s{}): {}",
        if ok { "PASS" } else { "FAIL" },
        id,
        title,
        elapsed.as_secs_f64(),
        limit(id).as_secs(),
        if in_time { "" } else { ", over time" },
        summary
    );
    ok
}

fn verify_json() -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_pairops"))
        .arg("verify")
        .output()
        .expect("pairops binary runs");
    out.stdout
}

fn main() -> ExitCode {
    let mut all = true;
    for id in 1..=10 {
        let start = Instant::now();
        let c = run_criterion(id);
        all &= report(id, &c.title, c.passed, start.elapsed(), &c.summary);
    }

    let start = Instant::now();
    let (a, b) = (verify_json(), verify_json());
    let same = !a.is_empty() && a == b;
    all &= report(
        11,
        "determinism",
        same,
        start.elapsed(),
        &format!(
            "two `pairops verify` runs, {} and {} bytes, identical: {same}",
            a.len(),
            b.len()
        ),
    );

    if all {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: some criteria failed");
        ExitCode::FAILURE
    }
}
