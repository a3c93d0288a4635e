//! Runs the acceptance battery and prints one line per criterion.

use std::time::Instant;

fn main() {
    let start = Instant::now();
    let results = gvdkit::suite::run(&[]);
    for c in &results {
        println!("{}", gvdkit::suite::render(c));
    }
    let failed = results.iter().filter(|c| !c.passed).count();
    println!("acceptance: {} passed, {} failed in {:.1}s", results.len() - failed, failed, start.elapsed().as_secs_f64());
    assert_eq!(results.len(), 9);
    if failed > 0 {
        std::process::exit(1);
    }
}
