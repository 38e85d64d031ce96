//! Runs the full identity battery over the named corpus.

use ihara_sectors::corpus;
use ihara_sectors::verify::verify_all;

fn main() {
    for e in corpus() {
        let list = verify_all(&e.graph);
        let fails: Vec<_> = list.failures().map(|c| c.name.clone()).collect();
        println!("{:<10} {:<14} {} checks, {}", e.name, list.graph6, list.checks.len(), if fails.is_empty() { "all pass".into() } else { fails.join(", ") });
    }
}
