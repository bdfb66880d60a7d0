//! For which (p, N) does the S(p) family certify N pairwise non-isomorphic
//! D-equivalent surfaces?

use twistfm::partners::{is_prime, verify_main_theorem};

fn main() -> twistfm::Result<()> {
    println!("{:>5} {:>4} {:>6} {:>13}", "p", "N", "M_min", "verdict");
    for p in (2..=61).filter(|&p| is_prime(p)) {
        for n in [2, 3, 5, 10] {
            let v = verify_main_theorem(p, n)?;
            println!(
                "{p:>5} {n:>4} {:>6} {:>13}",
                v.m_min,
                format!("{:?}", v.verdict).to_lowercase()
            );
        }
    }
    // smallest p giving a non-isomorphic partner
    let first = (2..).find(|&p| is_prime(p) && verify_main_theorem(p, 2).unwrap().is_certified());
    println!("smallest certified prime for N = 2: {}", first.unwrap());
    Ok(())
}
