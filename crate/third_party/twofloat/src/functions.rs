pub mod fraction;
pub mod sign;

#[macro_use]
mod function_utils;

pub mod explog;
pub mod hyperbolic;
pub mod power;
pub mod trigonometry;
