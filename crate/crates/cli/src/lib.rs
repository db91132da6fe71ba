//! Library surface of the certificate runner: configuration ingestion and
//! suite orchestration. The `verify` binary is a thin wrapper around these.

pub mod config;
pub mod runner;
