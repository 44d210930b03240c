//! Reverse-mode automatic differentiation over dense tensors, plus ADAM.
//!
//! The design is a classic eager tape: [`Graph`] records every operation
//! as it evaluates, [`Graph::backward`] replays the tape in reverse. All
//! arithmetic is `f64`; the networks here are small enough that the
//! headroom is worth far more than the speed of `f32`.

mod adam;
mod graph;
mod tensor;

pub use adam::AdamState;
pub use graph::{sigmoid_scalar, Gradients, Graph, NodeId, LOG_EPS};
pub use tensor::Tensor;
