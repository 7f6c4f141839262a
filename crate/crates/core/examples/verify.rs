//! Runs every verification suite at small rank.

use geocrystal::harness::{run_suite, Suite, VerifyConfig};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(2);
    let reports = run_suite(Suite::All, n, &VerifyConfig::default()).unwrap();
    for r in &reports {
        println!("{r}");
    }
    let failed = reports.iter().filter(|r| !r.holds).count();
    println!("{} checks, {failed} failed", reports.len());
}
