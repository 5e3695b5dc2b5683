//! Weil polynomials of abelian varieties over finite fields, their
//! isogeny-class invariants, and the unramified GSpin/Spin packet data
//! attached to them.
//!
//! The pipeline is: [`weil::validate`] a candidate characteristic
//! polynomial of Frobenius, read off [`weil::invariants`], then
//! [`lpacket::analyze`] it, which computes the Satake parameter and the
//! component group three ways (exact evenness test, alcove/Ω fixed point,
//! brute-force Knapp–Stein enumeration).

pub mod corpus;
pub mod lpacket;
pub mod polycore;
pub mod rootdata;
pub mod satake;
pub mod weil;

pub use corpus::{Expected, InputRecord};
pub use lpacket::PacketReport;
pub use polycore::{IntPolynomial, PolyError, QuadraticSurd};
pub use rootdata::{AlcovePoint, SpinRootDatum};
pub use satake::{ComponentGroupResult, Route, SatakeError, SatakeParameter};
pub use weil::{IsogenyClassInvariants, WeilError, WeilPolynomial};
