pub mod bitset;
pub mod cascade;
pub mod dichotomy;
pub mod exact;
pub mod flow;
pub mod graph;
pub mod logbound;
pub mod lp;
pub mod orientation;
pub mod rational;

pub use exact::{ExactSolver, Optimum, SolverError, VertexSet};
pub use graph::{Distance, Graph, GraphError};
pub use rational::Rational;
