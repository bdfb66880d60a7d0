//! Fourier-Mukai partners J^b(S(p)) and their candidate classes.
//!
//!     cargo run --example partners -- 13

use twistfm::catalog::s_of_p;
use twistfm::partners::{classify_partners, enumerate_partners, AutBound, ClassificationMode};

fn main() -> twistfm::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(11);
    let s = s_of_p(p)?;

    println!("partners of S({p}):");
    for (b, t) in (1..).zip(enumerate_partners(&s)?) {
        let surface = t.surface();
        println!(
            "  J^{b:<3} class {:<22} e={} kappa={} rational={}",
            t.class().to_string(),
            surface.euler_number(),
            surface.kodaira_dimension()?,
            surface.is_rational()?
        );
    }

    for mode in [
        ClassificationMode::InversionOrbits,
        ClassificationMode::PaperBound,
    ] {
        let c = classify_partners(&s, mode, AutBound::WORST_CASE)?;
        println!(
            "{mode}: {} classes {:?}, certified M >= {}",
            c.classes.len(),
            c.classes,
            c.certified_lower_bound
        );
    }
    Ok(())
}
