pub mod categories;
pub mod cli;
pub mod exactlin;
pub mod functors;
pub mod genrand;
