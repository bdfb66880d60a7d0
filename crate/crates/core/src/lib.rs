//! Exact symbolic engine for twisted rational elliptic surfaces.
//!
//! Starting from a rational elliptic surface `B` with a section, a class
//! `xi` in the Weil-Chatelet group `WC(B)` produces a surface `S` with
//! multiple fibers ([`wc::twist`]). The Fourier-Mukai partners of `S` are the
//! surfaces `J^b(S)` with `b` coprime to `lambda_{S/C}`, and
//! [`partners::verify_main_theorem`] bounds how many of them are pairwise
//! non-isomorphic.
//!
//! ```
//! use twistfm::catalog::s_of_p;
//! use twistfm::partners::verify_main_theorem;
//!
//! let s = s_of_p(11).unwrap();
//! assert!(s.surface().is_rational().unwrap());
//! assert_eq!(s.surface().lambda().unwrap().value(), 11);
//!
//! let verdict = verify_main_theorem(11, 2).unwrap();
//! assert!(verdict.is_certified());
//! ```

pub mod catalog;
pub mod cli;
pub mod error;
pub mod fiber;
pub mod mobius;
pub mod partners;
pub mod surface;
pub mod wc;

pub use error::{Error, Result};
pub use fiber::{FiberKind, KodairaFiber, LocalTwistGroup, QZPair, QZ};
pub use surface::{BasePoint, EllipticSurface, KodairaDimension, Lambda, MarkedConfig};
pub use wc::{TwistDatum, TwistedSurface, WCElement};
