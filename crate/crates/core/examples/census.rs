//! Prints the connected cubic graph counts for n = 4..14 with timings.

use specgap_core::generators::{enumerate_regular, EnumerateOptions};
fn main() {
    for n in [4, 6, 8, 10, 12, 14] {
        let t = std::time::Instant::now();
        let gs = enumerate_regular(n, 3, EnumerateOptions::default()).unwrap();
        println!("{n}: {} in {:?}", gs.len(), t.elapsed());
    }
}
