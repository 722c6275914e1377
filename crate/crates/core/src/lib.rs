pub mod aut_h3;
pub mod connections;
pub mod gradings;
pub mod lie;
pub mod linalg;
pub mod metrics;
pub mod sampling;
