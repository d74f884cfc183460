//! The guide's chapters as doc modules, so `cargo test` runs every snippet.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/maps.md")]
pub mod maps {}
#[doc = include_str!("../../../book/src/free-modules.md")]
pub mod free_modules {}
#[doc = include_str!("../../../book/src/groebner.md")]
pub mod groebner {}
#[doc = include_str!("../../../book/src/syzygies.md")]
pub mod syzygies {}
#[doc = include_str!("../../../book/src/resolutions.md")]
pub mod resolutions {}
#[doc = include_str!("../../../book/src/widthwise.md")]
pub mod widthwise {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
