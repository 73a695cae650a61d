//! Exact desk-scale simulation of Boson Sampling devices.
//!
//! The library models two families of linear-optical sampling machines:
//!
//! - a number-state Boson sampler: `n` single photons enter an `m`-mode
//!   unitary network and the output photon-count distribution is computed
//!   exactly from matrix permanents of sub-matrices of the network;
//! - a Gaussian Boson sampler: every input mode is fed by one half of a
//!   two-mode squeezed vacuum source, the other halves are photon-counted,
//!   and collision-free `n`-photon herald patterns project the network input
//!   into a number state, turning each accepted run into a Boson Sampling
//!   instance with a known (random) input.
//!
//! Everything is computed in double precision with explicit tolerances, and
//! all randomness flows through [`linalg::RngStream`], a counter-based
//! generator that is bit-reproducible across platforms and worker counts.
//!
//! The [`oracle`] module holds independent brute-force reference
//! implementations (dense Fock-basis state evolution, herald projection)
//! that the test suites use to arbitrate the permanent-based production
//! paths. It shares no code with them.

pub mod boson_sampling;
pub mod error;
pub mod fock;
pub mod gaussian;
pub mod linalg;
pub mod oracle;
pub mod permanent;
pub mod pipeline;

pub use error::{Error, Result};
