//! Exact intersection-theory calculator for divisor classes on the moduli
//! space of Prym curves.
//!
//! The pieces compose into one pipeline: Brill–Noether counts fix the ranks,
//! a truncated Grothendieck–Riemann–Roch engine produces first Chern classes
//! over the space of linear series, Porteous pushes the degeneracy class down,
//! and a two-divisor combination certifies that the canonical class is big.
//! A Hilbert-polynomial module checks the Pfaffian surface independently.
//!
//! ```
//! use prymcalc::certificate::{d15_2_class, verify_general_type};
//! use prymcalc::porteous::virtual_divisor_class;
//!
//! let d2 = virtual_divisor_class().unwrap().numeric_part;
//! let cert = verify_general_type(15, &d15_2_class(), &d2).unwrap();
//! assert_eq!(cert.epsilon.to_string(), "10288/793");
//! assert!(cert.verdict);
//! ```

pub mod brill_noether;
pub mod certificate;
pub mod cli;
pub mod error;
pub mod exact;
pub mod expected;
pub mod grr;
pub mod hilbert;
pub mod picard;
pub mod porteous;
pub mod report;

pub use error::{Error, Result};
pub use exact::{ExactRational, RationalPolynomial};
