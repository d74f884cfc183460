//! Test oracles that do not go through the OI machinery.

#![allow(dead_code)]

pub mod classical;
