//! Reruns the searches behind the frozen data and prints the results.
//!
//! `cargo run --release --example regenerate -- gadgets|catalog`

use spectope_core::builders::search_catalog;
use spectope_core::gadgets::{search_template, GadgetKind, DEFAULT_BUDGET};

fn main() {
    let what = std::env::args().nth(1).unwrap_or_default();
    if what != "catalog" {
        for kind in GadgetKind::ALL {
            let t = std::time::Instant::now();
            let r = search_template(kind, DEFAULT_BUDGET);
            eprintln!("{} in {:.1?}", kind.name(), t.elapsed());
            println!("{r:?}");
        }
    }
    if what != "gadgets" {
        let t = std::time::Instant::now();
        match search_catalog() {
            Ok(entries) => {
                for e in entries {
                    println!("{} {:?}", e.name, e.graph.rotations());
                }
            }
            Err(e) => println!("catalog search failed: {e}"),
        }
        eprintln!("catalog in {:.1?}", t.elapsed());
    }
}
