//! Exact characteristic polynomials of rational hyperplane arrangements and
//! independent-set counts of the graphs they induce.
//!
//! Everything is exact: big integers and big rationals throughout, no
//! floating point anywhere. Polynomial identities asserted by this crate are
//! checked coefficient by coefficient.

pub mod arrangement;
pub mod charpoly;
pub mod exactmath;
pub mod finitefield;
pub mod graphcount;
