//! Möbius symmetries of the marked configurations in the catalog.

use twistfm::catalog::catalog_list;
use twistfm::partners::{rigidity_check, Symmetries};

fn main() {
    for entry in catalog_list() {
        let report = rigidity_check(&entry.config);
        println!("{:<20} {}", entry.name, entry.config);
        match &report.symmetries {
            Symmetries::Continuous => {
                println!("    fewer than three marked points: continuous stabilizer")
            }
            Symmetries::Finite(maps) => {
                println!("    rigid: {}  (|G| = {})", report.rigid, maps.len());
                for m in maps.iter().skip(1) {
                    println!("      {m}");
                }
            }
        }
    }
}
