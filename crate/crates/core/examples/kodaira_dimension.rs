//! How multiple fibers move an elliptic surface between Kodaira dimensions,
//! and where the partner classification stops applying.

use twistfm::catalog::default_base;
use twistfm::partners::enumerate_partners;
use twistfm::surface::format_rational;
use twistfm::wc::{twist, wc_make};
use twistfm::{BasePoint, TwistDatum, QZ};

fn main() -> twistfm::Result<()> {
    let b = default_base();
    for orders in [
        vec![],
        vec![7],
        vec![2, 2],
        vec![2, 3],
        vec![2, 2, 2],
        vec![5, 5],
    ] {
        let xi = wc_make(
            &b,
            orders.iter().enumerate().map(|(k, &m)| {
                (
                    BasePoint::integer(2 + k as i64),
                    TwistDatum::pair(QZ::new(1, m), QZ::ZERO),
                )
            }),
        )?;
        let t = twist(&b, &xi)?;
        let s = t.surface();
        let partners = match enumerate_partners(&t) {
            Ok(list) => list.len().to_string(),
            Err(e) => format!("n/a ({})", e.code()),
        };
        println!(
            "multiplicities {:<10} K = {:<6} kappa = {:<4} rational = {:<5} partners: {partners}",
            format!("{orders:?}"),
            format_rational(&s.canonical_degree()?),
            s.kodaira_dimension()?.to_string(),
            s.is_rational()?
        );
    }
    Ok(())
}
