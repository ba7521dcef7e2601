#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![deny(clippy::float_arithmetic)]

//! Command-line companion to `exlie-core`.
//!
//! This crate hosts everything that needs the standard library: argument
//! handling, JSON/table/CSV rendering, the seeded verification battery and
//! the `exlie` binary itself.  All mathematics lives in `exlie-core`; this
//! layer only parses descriptors, dispatches, and serializes.
//!
//! The library surface exists so integration tests can drive the exact same
//! code paths as the binary:
//!
//! * [`desc`] — Jordan-algebra descriptors (`J3^O_s`, `R+Gamma_{4,4}`, …)
//!   and exact element literals;
//! * [`output`] — the versioned JSON envelope, the registry hash, and the
//!   `table`/`csv` renderers;
//! * [`commands`] — one payload builder per subcommand;
//! * [`verify`] — the eight-suite verification battery behind `verify-all`.

pub mod commands;
pub mod desc;
pub mod output;
pub mod verify;
