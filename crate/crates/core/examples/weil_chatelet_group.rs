//! Arithmetic in WC(B) and the twists it produces.

use twistfm::catalog::default_base;
use twistfm::wc::{jacobian, relative_jacobian_power, twist, wc_add, wc_make, wc_order, wc_scalar};
use twistfm::{BasePoint, TwistDatum, QZ};

fn main() -> twistfm::Result<()> {
    let b = default_base();
    println!("B = {} {}", b.name(), b.config());

    // order 2 at t = 2 and order 3 at t = 3
    let xi = wc_make(
        &b,
        [
            (
                BasePoint::integer(2),
                TwistDatum::pair("1/2".parse()?, QZ::ZERO),
            ),
            (
                BasePoint::integer(3),
                TwistDatum::pair(QZ::ZERO, "1/3".parse()?),
            ),
        ],
    )?;
    // the I(2) fiber at t = 1 carries a Q/Z component
    let eta = wc_make(
        &b,
        [(BasePoint::integer(1), TwistDatum::Nodal("1/4".parse()?))],
    )?;

    println!("xi          = {xi}   (order {})", wc_order(&xi));
    println!("eta         = {eta}   (order {})", wc_order(&eta));
    println!("xi + eta    = {}", wc_add(&xi, &eta)?);
    for i in [2, 3, 5, 6] {
        let m = wc_scalar(i, &xi);
        println!("{i} * xi      = {m}   (order {})", wc_order(&m));
    }

    let t = twist(&b, &xi)?;
    let s = t.surface();
    println!();
    println!("twist(B, xi)  {}", s.config());
    println!(
        "  euler {}  lambda {}  kappa {}",
        s.euler_number(),
        s.lambda()?,
        s.kodaira_dimension()?
    );
    println!("  jacobian is B: {}", jacobian(&t) == b);

    let j5 = relative_jacobian_power(&t, 5)?;
    println!("J^5           {}", j5.class());
    match relative_jacobian_power(&t, 4) {
        Err(e) => println!("J^4           refused: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
