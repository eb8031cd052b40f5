//! Library side of the `rainbow` binary.
//!
//! Everything the command-line front end does beyond argument parsing lives
//! here so that integration tests can drive sweeps and audits in-process and
//! compare the results against the binary's output byte for byte.

pub mod sweep;
