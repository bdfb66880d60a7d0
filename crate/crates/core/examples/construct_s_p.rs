//! Build S(p) from the default base and print its invariants.
//!
//!     cargo run --example construct_s_p -- 11

use twistfm::catalog::s_of_p;
use twistfm::surface::format_rational;

fn main() -> twistfm::Result<()> {
    let p: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(11);
    let s = s_of_p(p)?;
    let surface = s.surface();

    println!("base            {}", s.base().name());
    println!("class           {}", s.class());
    println!("fibers          {}", surface.config());
    println!("euler number    {}", surface.euler_number());
    println!("chi(O)          {}", surface.chi()?);
    println!(
        "K degree        {}",
        format_rational(&surface.canonical_degree()?)
    );
    println!("kodaira dim     {}", surface.kodaira_dimension()?);
    println!("rational        {}", surface.is_rational()?);
    println!("lambda          {}", surface.lambda()?);
    Ok(())
}
