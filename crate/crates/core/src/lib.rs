//! Minimum crosscap numbers of non-orientable surfaces in lens spaces.
//!
//! For `p` even, `L(p, q)` contains non-orientable closed surfaces, and the
//! smallest crosscap number among them can be read off the continued
//! fraction of `p/q` in three ways:
//!
//! * the classical Bredon–Wood sum ([`crosscap::crosscap_bw`]),
//! * a halving formula over the reversed expansion ([`crosscap::crosscap_new`]),
//! * the length of the path from `0/1` to `p/q` in the tree of even slopes
//!   joined at distance 2 ([`d2tree::slope_path`]).
//!
//! [`oracle`] rebuilds finite pieces of that tree by brute force to check all
//! three against each other.
//!
//! ```
//! use crosscap_core::{crosscap, d2tree::slope_path, frac};
//!
//! assert_eq!(crosscap(10, 3).unwrap(), 3.into());
//! let path = slope_path(8, 3).unwrap();
//! assert_eq!(path.slopes, [frac(0, 1), frac(2, 1), frac(8, 3)]);
//! assert_eq!(path.euler_char, 0);
//! ```
#![no_std]

extern crate alloc;

pub mod contfrac;
pub mod crosscap;
pub mod d2tree;
mod error;
pub mod exactfrac;
pub mod oracle;

pub use contfrac::{apply_mobius, eval, mobius_of, std_expand, ContFrac, UniModMatrix};
pub use crosscap::{crosscap, crosscap_bw, crosscap_new, BWTrace, NewTrace};
pub use error::Error;
pub use exactfrac::{frac, normalize_lens, ExtRational, LensParams};
