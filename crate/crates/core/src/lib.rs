pub mod charring;
pub mod chern;
pub mod cli;
pub mod exactmath;
pub mod ktheory;
pub mod poly;
pub mod zgb;
