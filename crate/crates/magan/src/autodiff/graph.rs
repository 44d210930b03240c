//! Reverse-mode automatic differentiation over a tape of tensor operations.
//!
//! A [`Graph`] is a Wengert list: every operation evaluates eagerly and
//! records itself as a node, so creation order is already a topological
//! order. [`Graph::backward`] walks the tape in reverse, applying each
//! node's vector-Jacobian product and summing gradients over every path,
//! which is what makes weight tying work: binding the same parameter
//! tensor into two places of the forward pass yields the sum of both
//! path gradients.
//!
//! Leaves are either parameters (gradients wanted) or constants. A node
//! needs a gradient buffer iff a parameter is reachable below it; the
//! backward pass skips everything else.

use super::tensor::Tensor;
use crate::error::{MaganError, Result};

/// Floor applied to discriminator scores before taking logs, keeping early
/// training away from `ln 0`.
pub const LOG_EPS: f64 = 1e-7;

/// Clamp keeping sigmoid outputs strictly inside (0, 1) even where `f64`
/// would round them to exactly 0 or 1.
const SIGMOID_EPS: f64 = 1e-12;

/// Handle to a node in a [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeId(usize);

#[derive(Debug, Clone)]
enum Op {
    /// Leaf; `trainable` marks parameters.
    Leaf { trainable: bool },
    MatMul(NodeId, NodeId),
    Add(NodeId, NodeId),
    Sub(NodeId, NodeId),
    Mul(NodeId, NodeId),
    Scale(NodeId, f64),
    /// `bxn` plus a `1xn` row broadcast down the rows.
    AddRow(NodeId, NodeId),
    LeakyRelu(NodeId, f64),
    Sigmoid(NodeId),
    MeanAll(NodeId),
    ColMean(NodeId),
    SelectCols(NodeId, Vec<usize>),
    ConcatCols(NodeId, NodeId),
    BroadcastRows(NodeId),
    /// `ln(clamp(x, LOG_EPS, 1 - LOG_EPS))`.
    LogClamp(NodeId),
}

#[derive(Debug)]
struct Node {
    op: Op,
    value: Tensor,
    /// True when a trainable leaf is reachable from this node.
    needs_grad: bool,
}

/// An eager tape of tensor operations supporting one backward pass.
#[derive(Debug, Default)]
pub struct Graph {
    nodes: Vec<Node>,
}

impl Graph {
    pub fn new() -> Self {
        Graph { nodes: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The forward value of a node.
    pub fn value(&self, id: NodeId) -> &Tensor {
        &self.nodes[id.0].value
    }

    /// Scalar forward value, for loss nodes.
    pub fn scalar(&self, id: NodeId) -> Result<f64> {
        self.value(id).scalar_value()
    }

    fn push(&mut self, op: Op, value: Tensor, needs_grad: bool) -> NodeId {
        let id = NodeId(self.nodes.len());
        self.nodes.push(Node {
            op,
            value,
            needs_grad,
        });
        id
    }

    fn needs(&self, id: NodeId) -> bool {
        self.nodes[id.0].needs_grad
    }

    /// Inserts a trainable leaf.
    pub fn param(&mut self, value: Tensor) -> NodeId {
        self.push(Op::Leaf { trainable: true }, value, true)
    }

    /// Inserts a constant leaf; no gradient flows into it.
    pub fn constant(&mut self, value: Tensor) -> NodeId {
        self.push(Op::Leaf { trainable: false }, value, false)
    }

    // ----- primitives ---------------------------------------------------

    pub fn matmul(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        let value = self.value(a).matmul(self.value(b))?;
        let needs = self.needs(a) || self.needs(b);
        Ok(self.push(Op::MatMul(a, b), value, needs))
    }

    pub fn add(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        let value = self.value(a).zip_map(self.value(b), "add", |x, y| x + y)?;
        let needs = self.needs(a) || self.needs(b);
        Ok(self.push(Op::Add(a, b), value, needs))
    }

    pub fn sub(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        let value = self.value(a).zip_map(self.value(b), "sub", |x, y| x - y)?;
        let needs = self.needs(a) || self.needs(b);
        Ok(self.push(Op::Sub(a, b), value, needs))
    }

    pub fn mul(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        let value = self.value(a).zip_map(self.value(b), "mul", |x, y| x * y)?;
        let needs = self.needs(a) || self.needs(b);
        Ok(self.push(Op::Mul(a, b), value, needs))
    }

    pub fn scale(&mut self, a: NodeId, factor: f64) -> NodeId {
        let value = self.value(a).map(|x| x * factor);
        let needs = self.needs(a);
        self.push(Op::Scale(a, factor), value, needs)
    }

    /// Adds a `1xn` row vector to every row of a `bxn` matrix.
    pub fn add_row(&mut self, x: NodeId, row: NodeId) -> Result<NodeId> {
        let xv = self.value(x);
        let rv = self.value(row);
        if rv.rows() != 1 || rv.cols() != xv.cols() {
            return Err(MaganError::shape(
                "add_row",
                xv.shape_string(),
                rv.shape_string(),
            ));
        }
        let mut value = xv.clone();
        for i in 0..value.rows() {
            let off = i * value.cols();
            for (j, &r) in rv.data().iter().enumerate() {
                value.data_mut()[off + j] += r;
            }
        }
        let needs = self.needs(x) || self.needs(row);
        Ok(self.push(Op::AddRow(x, row), value, needs))
    }

    /// Elementwise `max(x, slope * x)`; `slope` must lie in (0, 1).
    pub fn leaky_relu(&mut self, a: NodeId, slope: f64) -> Result<NodeId> {
        if !(0.0 < slope && slope < 1.0) {
            return Err(MaganError::Config(format!(
                "leaky_relu slope must be in (0,1), got {slope}"
            )));
        }
        let value = self.value(a).map(|x| if x > 0.0 { x } else { slope * x });
        let needs = self.needs(a);
        Ok(self.push(Op::LeakyRelu(a, slope), value, needs))
    }

    /// Elementwise logistic function, output strictly inside (0, 1).
    pub fn sigmoid(&mut self, a: NodeId) -> NodeId {
        let value = self.value(a).map(sigmoid_scalar);
        let needs = self.needs(a);
        self.push(Op::Sigmoid(a), value, needs)
    }

    /// Mean over all elements, producing a scalar node.
    pub fn mean_all(&mut self, a: NodeId) -> NodeId {
        let v = self.value(a);
        let mean = v.data().iter().sum::<f64>() / v.len() as f64;
        let needs = self.needs(a);
        self.push(Op::MeanAll(a), Tensor::scalar(mean), needs)
    }

    /// Per-column mean: `bxn -> 1xn`.
    pub fn col_mean(&mut self, a: NodeId) -> NodeId {
        let value = self.value(a).col_mean();
        let needs = self.needs(a);
        self.push(Op::ColMean(a), value, needs)
    }

    /// Copies the listed columns, in order.
    pub fn select_cols(&mut self, a: NodeId, indices: &[usize]) -> Result<NodeId> {
        let value = self.value(a).select_cols(indices)?;
        let needs = self.needs(a);
        Ok(self.push(Op::SelectCols(a, indices.to_vec()), value, needs))
    }

    /// Concatenates two matrices with equal row counts along columns.
    pub fn concat_cols(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        let av = self.value(a);
        let bv = self.value(b);
        if av.rows() != bv.rows() {
            return Err(MaganError::shape(
                "concat_cols",
                av.shape_string(),
                bv.shape_string(),
            ));
        }
        let (rows, ac, bc) = (av.rows(), av.cols(), bv.cols());
        let mut data = Vec::with_capacity(rows * (ac + bc));
        for i in 0..rows {
            data.extend_from_slice(av.row_slice(i));
            data.extend_from_slice(bv.row_slice(i));
        }
        let value = Tensor::new(rows, ac + bc, data)?;
        let needs = self.needs(a) || self.needs(b);
        Ok(self.push(Op::ConcatCols(a, b), value, needs))
    }

    /// Repeats a `1xn` row `rows` times: `1xn -> rows x n`.
    pub fn broadcast_rows(&mut self, a: NodeId, rows: usize) -> Result<NodeId> {
        let av = self.value(a);
        if av.rows() != 1 {
            return Err(MaganError::shape(
                "broadcast_rows",
                "1xn".to_string(),
                av.shape_string(),
            ));
        }
        if rows == 0 {
            return Err(MaganError::Contract("broadcast_rows: zero rows".into()));
        }
        let mut data = Vec::with_capacity(rows * av.cols());
        for _ in 0..rows {
            data.extend_from_slice(av.data());
        }
        let value = Tensor::new(rows, av.cols(), data)?;
        let needs = self.needs(a);
        Ok(self.push(Op::BroadcastRows(a), value, needs))
    }

    /// `ln` of the input clamped into `[LOG_EPS, 1 - LOG_EPS]`.
    pub fn log_clamp(&mut self, a: NodeId) -> NodeId {
        let value = self
            .value(a)
            .map(|x| x.clamp(LOG_EPS, 1.0 - LOG_EPS).ln());
        let needs = self.needs(a);
        self.push(Op::LogClamp(a), value, needs)
    }

    // ----- composites ---------------------------------------------------

    /// Mean squared error between two same-shaped nodes, as a scalar node.
    pub fn mse(&mut self, a: NodeId, b: NodeId) -> Result<NodeId> {
        let diff = self.sub(a, b)?;
        let sq = self.mul(diff, diff)?;
        Ok(self.mean_all(sq))
    }

    /// `-mean(log d)`: the log-likelihood loss for scores that should be 1.
    ///
    /// Errors if any entry lies outside `[0, 1]`.
    pub fn bce_real(&mut self, d: NodeId) -> Result<NodeId> {
        self.check_unit_range("bce_real", d)?;
        let logs = self.log_clamp(d);
        let mean = self.mean_all(logs);
        Ok(self.scale(mean, -1.0))
    }

    /// `-mean(log(1 - d))`: the loss for scores that should be 0.
    pub fn bce_fake(&mut self, d: NodeId) -> Result<NodeId> {
        self.check_unit_range("bce_fake", d)?;
        let dv = self.value(d);
        let ones = self.constant(Tensor::filled(dv.rows(), dv.cols(), 1.0));
        let one_minus = self.sub(ones, d)?;
        let logs = self.log_clamp(one_minus);
        let mean = self.mean_all(logs);
        Ok(self.scale(mean, -1.0))
    }

    fn check_unit_range(&self, op: &'static str, d: NodeId) -> Result<()> {
        let v = self.value(d);
        if let Some(bad) = v.data().iter().find(|x| !(0.0..=1.0).contains(*x)) {
            return Err(MaganError::domain(
                op,
                format!("score {bad} outside [0, 1]"),
            ));
        }
        Ok(())
    }

    // ----- backward -----------------------------------------------------

    /// Runs the reverse pass from a scalar loss node.
    ///
    /// Returns one gradient per node that needed one; gradients over
    /// multiple uses of a node accumulate by summation.
    pub fn backward(&self, loss: NodeId) -> Result<Gradients> {
        if !self.value(loss).is_scalar() {
            return Err(MaganError::Contract(format!(
                "backward requires a scalar loss, got {}",
                self.value(loss).shape_string()
            )));
        }
        let mut grads: Vec<Option<Tensor>> = vec![None; self.nodes.len()];
        if !self.needs(loss) {
            // Loss does not depend on any parameter; nothing to do.
            return Ok(Gradients { grads });
        }
        grads[loss.0] = Some(Tensor::scalar(1.0));

        for idx in (0..=loss.0).rev() {
            if grads[idx].is_none() || !self.nodes[idx].needs_grad {
                continue;
            }
            let g = grads[idx].take().unwrap();
            self.apply_vjp(idx, &g, &mut grads)?;
            grads[idx] = Some(g);
        }
        Ok(Gradients { grads })
    }

    fn apply_vjp(&self, idx: usize, g: &Tensor, grads: &mut [Option<Tensor>]) -> Result<()> {
        let node = &self.nodes[idx];
        match &node.op {
            Op::Leaf { .. } => {}
            Op::MatMul(a, b) => {
                if self.needs(*a) {
                    // dA = dC * B^T
                    let da = g.matmul_opts(self.value(*b), false, true)?;
                    accumulate(grads, *a, &da);
                }
                if self.needs(*b) {
                    // dB = A^T * dC
                    let db = self.value(*a).matmul_opts(g, true, false)?;
                    accumulate(grads, *b, &db);
                }
            }
            Op::Add(a, b) => {
                if self.needs(*a) {
                    accumulate(grads, *a, g);
                }
                if self.needs(*b) {
                    accumulate(grads, *b, g);
                }
            }
            Op::Sub(a, b) => {
                if self.needs(*a) {
                    accumulate(grads, *a, g);
                }
                if self.needs(*b) {
                    accumulate_scaled(grads, *b, g, -1.0);
                }
            }
            Op::Mul(a, b) => {
                if self.needs(*a) {
                    let da = g.zip_map(self.value(*b), "mul-vjp", |gv, bv| gv * bv)?;
                    accumulate(grads, *a, &da);
                }
                if self.needs(*b) {
                    let db = g.zip_map(self.value(*a), "mul-vjp", |gv, av| gv * av)?;
                    accumulate(grads, *b, &db);
                }
            }
            Op::Scale(a, c) => {
                if self.needs(*a) {
                    accumulate_scaled(grads, *a, g, *c);
                }
            }
            Op::AddRow(x, row) => {
                if self.needs(*x) {
                    accumulate(grads, *x, g);
                }
                if self.needs(*row) {
                    // Row gradient is the column sum of the upstream gradient.
                    let mut dr = Tensor::zeros(1, g.cols());
                    for i in 0..g.rows() {
                        for (j, &v) in g.row_slice(i).iter().enumerate() {
                            dr.data_mut()[j] += v;
                        }
                    }
                    accumulate(grads, *row, &dr);
                }
            }
            Op::LeakyRelu(a, slope) => {
                if self.needs(*a) {
                    let da = self
                        .value(*a)
                        .zip_map(g, "leaky-vjp", |x, gv| if x > 0.0 { gv } else { slope * gv })?;
                    accumulate(grads, *a, &da);
                }
            }
            Op::Sigmoid(a) => {
                if self.needs(*a) {
                    let da = node
                        .value
                        .zip_map(g, "sigmoid-vjp", |y, gv| gv * y * (1.0 - y))?;
                    accumulate(grads, *a, &da);
                }
            }
            Op::MeanAll(a) => {
                if self.needs(*a) {
                    let av = self.value(*a);
                    let gv = g.scalar_value()? / av.len() as f64;
                    let da = Tensor::filled(av.rows(), av.cols(), gv);
                    accumulate(grads, *a, &da);
                }
            }
            Op::ColMean(a) => {
                if self.needs(*a) {
                    let av = self.value(*a);
                    let inv = 1.0 / av.rows() as f64;
                    let da = Tensor::from_fn(av.rows(), av.cols(), |_, j| g.get(0, j) * inv);
                    accumulate(grads, *a, &da);
                }
            }
            Op::SelectCols(a, indices) => {
                if self.needs(*a) {
                    let av = self.value(*a);
                    let mut da = Tensor::zeros(av.rows(), av.cols());
                    for i in 0..g.rows() {
                        for (k, &j) in indices.iter().enumerate() {
                            let v = g.get(i, k);
                            da.data_mut()[i * av.cols() + j] += v;
                        }
                    }
                    accumulate(grads, *a, &da);
                }
            }
            Op::ConcatCols(a, b) => {
                let ac = self.value(*a).cols();
                if self.needs(*a) {
                    let da = Tensor::from_fn(g.rows(), ac, |i, j| g.get(i, j));
                    accumulate(grads, *a, &da);
                }
                if self.needs(*b) {
                    let bc = g.cols() - ac;
                    let db = Tensor::from_fn(g.rows(), bc, |i, j| g.get(i, ac + j));
                    accumulate(grads, *b, &db);
                }
            }
            Op::BroadcastRows(a) => {
                if self.needs(*a) {
                    let mut da = Tensor::zeros(1, g.cols());
                    for i in 0..g.rows() {
                        for (j, &v) in g.row_slice(i).iter().enumerate() {
                            da.data_mut()[j] += v;
                        }
                    }
                    accumulate(grads, *a, &da);
                }
            }
            Op::LogClamp(a) => {
                if self.needs(*a) {
                    let da = self.value(*a).zip_map(g, "log-vjp", |x, gv| {
                        if (LOG_EPS..=1.0 - LOG_EPS).contains(&x) {
                            gv / x
                        } else {
                            0.0
                        }
                    })?;
                    accumulate(grads, *a, &da);
                }
            }
        }
        Ok(())
    }
}

fn accumulate(grads: &mut [Option<Tensor>], id: NodeId, delta: &Tensor) {
    match &mut grads[id.0] {
        Some(g) => g.add_scaled(delta, 1.0),
        slot => *slot = Some(delta.clone()),
    }
}

fn accumulate_scaled(grads: &mut [Option<Tensor>], id: NodeId, delta: &Tensor, scale: f64) {
    match &mut grads[id.0] {
        Some(g) => g.add_scaled(delta, scale),
        slot => {
            let mut t = Tensor::zeros(delta.rows(), delta.cols());
            t.add_scaled(delta, scale);
            *slot = Some(t);
        }
    }
}

/// Numerically stable logistic function with outputs kept strictly in (0, 1).
pub fn sigmoid_scalar(x: f64) -> f64 {
    let y = if x >= 0.0 {
        1.0 / (1.0 + (-x).exp())
    } else {
        let e = x.exp();
        e / (1.0 + e)
    };
    y.clamp(SIGMOID_EPS, 1.0 - SIGMOID_EPS)
}

/// Gradients produced by one backward pass, indexed by [`NodeId`].
#[derive(Debug)]
pub struct Gradients {
    grads: Vec<Option<Tensor>>,
}

impl Gradients {
    /// Gradient of the loss with respect to a node, if one was computed.
    pub fn get(&self, id: NodeId) -> Option<&Tensor> {
        self.grads.get(id.0).and_then(|g| g.as_ref())
    }

    /// Gradient of a parameter node; zero tensor if the loss never touched it.
    pub fn of_param(&self, id: NodeId, like: &Tensor) -> Tensor {
        match self.get(id) {
            Some(g) => g.clone(),
            None => Tensor::zeros(like.rows(), like.cols()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaky_relu_branches() {
        let mut g = Graph::new();
        let x = g.constant(Tensor::row(&[3.0, -1.0, 0.0]).unwrap());
        let y = g.leaky_relu(x, 0.2).unwrap();
        assert_eq!(g.value(y).data(), &[3.0, -0.2, 0.0]);
    }

    #[test]
    fn leaky_relu_rejects_bad_slope() {
        let mut g = Graph::new();
        let x = g.constant(Tensor::scalar(1.0));
        assert!(g.leaky_relu(x, 1.5).is_err());
        assert!(g.leaky_relu(x, 0.0).is_err());
    }

    #[test]
    fn sigmoid_reference_points() {
        let mut g = Graph::new();
        let x = g.constant(Tensor::row(&[0.0, 50.0, -2.0]).unwrap());
        let y = g.sigmoid(x);
        let v = g.value(y).data().to_vec();
        assert_eq!(v[0], 0.5);
        assert!(v[1] > 1.0 - 1e-9 && v[1] < 1.0, "saturated but inside (0,1)");
        // 1 / (1 + e^2)
        let expected = 1.0 / (1.0 + 2.0_f64.exp());
        assert!((v[2] - expected).abs() < 1e-12);
        assert!((v[2] - 0.1192).abs() < 1e-4);
    }

    #[test]
    fn sigmoid_strictly_inside_unit_interval() {
        let mut g = Graph::new();
        let x = g.constant(Tensor::row(&[-1e6, -40.0, 0.0, 40.0, 1e6]).unwrap());
        let y = g.sigmoid(x);
        for &v in g.value(y).data() {
            assert!(v > 0.0 && v < 1.0);
        }
    }

    #[test]
    fn bce_reference_points() {
        let ln2 = std::f64::consts::LN_2;
        let mut g = Graph::new();
        let half = g.constant(Tensor::row(&[0.5]).unwrap());
        let real = g.bce_real(half).unwrap();
        assert!((g.scalar(real).unwrap() - ln2).abs() < 1e-12);

        let near_one = g.constant(Tensor::row(&[1.0 - 1e-9]).unwrap());
        let almost_zero = g.bce_real(near_one).unwrap();
        assert!(g.scalar(almost_zero).unwrap().abs() < 1e-6);

        let pnine = g.constant(Tensor::row(&[0.9]).unwrap());
        let fake = g.bce_fake(pnine).unwrap();
        assert!((g.scalar(fake).unwrap() - (-(0.1f64.ln()))).abs() < 1e-12);
        assert!((g.scalar(fake).unwrap() - 2.3026).abs() < 1e-4);
    }

    #[test]
    fn bce_rejects_out_of_range_scores() {
        let mut g = Graph::new();
        let bad = g.constant(Tensor::row(&[1.5]).unwrap());
        assert!(matches!(g.bce_real(bad), Err(MaganError::Domain { .. })));
        assert!(matches!(g.bce_fake(bad), Err(MaganError::Domain { .. })));
    }

    #[test]
    fn mse_gradient_simple_quadratic() {
        // loss = mse(p, 0) with p = [3] has gradient 2 * 3 / 1 = 6.
        let mut g = Graph::new();
        let p = g.param(Tensor::scalar(3.0));
        let zero = g.constant(Tensor::scalar(0.0));
        let loss = g.mse(p, zero).unwrap();
        let grads = g.backward(loss).unwrap();
        assert_eq!(grads.get(p).unwrap().scalar_value().unwrap(), 6.0);
    }

    #[test]
    fn backward_rejects_non_scalar_loss() {
        let mut g = Graph::new();
        let p = g.param(Tensor::row(&[1.0, 2.0]).unwrap());
        assert!(matches!(
            g.backward(p),
            Err(MaganError::Contract(_))
        ));
    }

    #[test]
    fn gradient_accumulates_over_reuse() {
        // loss = mean(p * p) with scalar p: two paths through Mul,
        // gradient = 2p. Then use p again: loss2 = p*p + p => d = 2p + 1.
        let mut g = Graph::new();
        let p = g.param(Tensor::scalar(1.5));
        let sq = g.mul(p, p).unwrap();
        let sum = g.add(sq, p).unwrap();
        let loss = g.mean_all(sum);
        let grads = g.backward(loss).unwrap();
        assert_eq!(grads.get(p).unwrap().scalar_value().unwrap(), 4.0);
    }

    #[test]
    fn matmul_identity_forward() {
        let mut g = Graph::new();
        let eye = g.constant(Tensor::from_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap());
        let a = g.constant(Tensor::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap());
        let prod = g.matmul(eye, a).unwrap();
        assert_eq!(g.value(prod).data(), &[1.0, 2.0, 3.0, 4.0]);
    }

    #[test]
    fn forward_is_bitwise_deterministic() {
        let build = || {
            let mut g = Graph::new();
            let x = g.constant(Tensor::from_fn(4, 3, |i, j| (i as f64 + 1.3) * (j as f64 - 0.7)));
            let w = g.param(Tensor::from_fn(3, 2, |i, j| ((i * 2 + j) as f64).sin()));
            let h = g.matmul(x, w).unwrap();
            let a = g.leaky_relu(h, 0.2).unwrap();
            let s = g.sigmoid(a);
            let loss = g.mean_all(s);
            g.scalar(loss).unwrap()
        };
        let a = build();
        let b = build();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn bce_pair_bounded_below_by_two_ln_two() {
        // bce_real(d) + bce_fake(d) >= 2 ln 2, equality iff d = 0.5.
        let ln2 = std::f64::consts::LN_2;
        let mut g = Graph::new();
        let half = g.constant(Tensor::row(&[0.5, 0.5]).unwrap());
        let r = g.bce_real(half).unwrap();
        let f = g.bce_fake(half).unwrap();
        let total = g.scalar(r).unwrap() + g.scalar(f).unwrap();
        assert!((total - 2.0 * ln2).abs() < 1e-12);
    }
}
