//! Runs every acceptance criterion and prints one line per criterion.

use std::process::ExitCode;

use commvar::acceptance::run_all;
use commvar::config::SuiteConfig;

fn main() -> ExitCode {
    let cfg = SuiteConfig::default();
    let criteria = match run_all(&cfg) {
        Ok(c) => c,
        Err(e) => {
            println!("FAIL acceptance run aborted: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut failed = 0;
    for c in &criteria {
        let verdict = if c.passed() { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {:>2}: {} [{:.2}s, bound {}s]",
            c.id,
            c.title,
            c.elapsed.as_secs_f64(),
            c.bound.as_secs()
        );
        if !c.passed() {
            failed += 1;
            for d in c.docs.iter().filter(|d| !d.passed()) {
                println!("     {} {} {:?}: {}", d.suite, d.case, d.status, d.witness);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
