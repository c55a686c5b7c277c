pub mod bench;
pub mod format;
