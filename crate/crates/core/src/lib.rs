pub mod charts;
pub mod gyt;
pub mod harness;
pub mod ratfun;
pub mod slgroup;
pub mod ud;
