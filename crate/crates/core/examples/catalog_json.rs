//! Export a catalog entry to JSON, edit it, and read it back through the
//! validation gate.

use twistfm::catalog::{catalog_get, validate_entry, CatalogEntry};

fn main() -> twistfm::Result<()> {
    let entry = catalog_get("I9-I2-I1")?;
    let json = entry.to_json()?;
    println!("exported: {json}");

    let back = CatalogEntry::from_json(&json)?;
    println!(
        "re-imported `{}`: valid = {}",
        back.name,
        validate_entry(&back)
    );

    let broken = json.replace("I(9)", "I(8)");
    match CatalogEntry::from_json(&broken) {
        Err(e) => println!("edited copy rejected: {e} [{}]", e.code()),
        Ok(_) => unreachable!("Euler sum 11 cannot pass"),
    }
    Ok(())
}
