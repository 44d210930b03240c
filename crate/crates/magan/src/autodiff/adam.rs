//! ADAM optimizer with bias correction.

use super::tensor::Tensor;
use crate::error::{MaganError, Result};

/// Moment accumulators and step counter for one group of parameters.
#[derive(Debug, Clone)]
pub struct AdamState {
    step: u64,
    m: Vec<Tensor>,
    v: Vec<Tensor>,
    beta1: f64,
    beta2: f64,
    epsilon: f64,
    skipped: u64,
}

impl AdamState {
    /// Fresh state with zeroed moments shaped like `params`.
    pub fn new(params: &[Tensor], beta1: f64, beta2: f64, epsilon: f64) -> Self {
        let m = params
            .iter()
            .map(|p| Tensor::zeros(p.rows(), p.cols()))
            .collect::<Vec<_>>();
        let v = m.clone();
        AdamState {
            step: 0,
            m,
            v,
            beta1,
            beta2,
            epsilon,
            skipped: 0,
        }
    }

    /// Original defaults: beta1 = 0.9, beta2 = 0.999, epsilon = 1e-8.
    pub fn with_defaults(params: &[Tensor]) -> Self {
        AdamState::new(params, 0.9, 0.999, 1e-8)
    }

    pub fn step_count(&self) -> u64 {
        self.step
    }

    /// Number of updates skipped because a gradient was non-finite.
    pub fn skipped_steps(&self) -> u64 {
        self.skipped
    }

    /// Second-moment accumulators are non-negative by construction.
    pub fn moments_valid(&self) -> bool {
        self.v.iter().all(|t| t.data().iter().all(|&x| x >= 0.0))
    }

    /// Applies one ADAM update in place.
    ///
    /// If any gradient entry is non-finite the whole update is skipped and
    /// the skip counter incremented; parameters and moments are untouched.
    pub fn step(&mut self, params: &mut [&mut Tensor], grads: &[Tensor], lr: f64) -> Result<()> {
        if params.len() != self.m.len() || grads.len() != self.m.len() {
            return Err(MaganError::Contract(format!(
                "adam_step: {} params, {} grads, state tracks {}",
                params.len(),
                grads.len(),
                self.m.len()
            )));
        }
        for ((p, g), m) in params.iter().zip(grads).zip(&self.m) {
            if !p.same_shape(m) || !g.same_shape(m) {
                return Err(MaganError::shape(
                    "adam_step",
                    m.shape_string(),
                    format!("param {} / grad {}", p.shape_string(), g.shape_string()),
                ));
            }
        }
        if grads.iter().any(|g| !g.is_finite()) {
            self.skipped += 1;
            return Ok(());
        }

        self.step += 1;
        let t = self.step as i32;
        let bc1 = 1.0 - self.beta1.powi(t);
        let bc2 = 1.0 - self.beta2.powi(t);
        for ((p, g), (m, v)) in params
            .iter_mut()
            .zip(grads)
            .zip(self.m.iter_mut().zip(self.v.iter_mut()))
        {
            let pd = p.data_mut();
            let md = m.data_mut();
            let vd = v.data_mut();
            for k in 0..pd.len() {
                let gk = g.data()[k];
                md[k] = self.beta1 * md[k] + (1.0 - self.beta1) * gk;
                vd[k] = self.beta2 * vd[k] + (1.0 - self.beta2) * gk * gk;
                let m_hat = md[k] / bc1;
                let v_hat = vd[k] / bc2;
                pd[k] -= lr * m_hat / (v_hat.sqrt() + self.epsilon);
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_gradient_leaves_params_unchanged() {
        let mut p = Tensor::row(&[0.5, -0.25]).unwrap();
        let before = p.clone();
        let mut state = AdamState::with_defaults(std::slice::from_ref(&p));
        let g = Tensor::zeros(1, 2);
        state.step(&mut [&mut p], &[g], 0.001).unwrap();
        assert_eq!(p, before);
    }

    #[test]
    fn first_step_moves_by_roughly_lr() {
        // With bias correction the first update is lr * g / (|g| + eps).
        let mut p = Tensor::scalar(0.5);
        let mut state = AdamState::with_defaults(std::slice::from_ref(&p));
        let g = Tensor::scalar(1.0);
        state.step(&mut [&mut p], &[g], 0.001).unwrap();
        let got = p.scalar_value().unwrap();
        assert!((got - 0.499).abs() < 1e-6, "got {got}");
    }

    #[test]
    fn identical_calls_are_bitwise_identical() {
        let run = || {
            let mut p = Tensor::row(&[0.5, -1.0, 2.0]).unwrap();
            let mut state = AdamState::with_defaults(std::slice::from_ref(&p));
            for i in 0..10 {
                let g = Tensor::row(&[0.1 * i as f64, -0.2, 0.3]).unwrap();
                state.step(&mut [&mut p], &[g], 0.01).unwrap();
            }
            p.data().iter().map(|v| v.to_bits()).collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn non_finite_gradient_skips_update() {
        let mut p = Tensor::scalar(1.0);
        let before = p.clone();
        let mut state = AdamState::with_defaults(std::slice::from_ref(&p));
        let g = Tensor::scalar(f64::NAN);
        state.step(&mut [&mut p], &[g], 0.01).unwrap();
        assert_eq!(p, before);
        assert_eq!(state.skipped_steps(), 1);
        assert_eq!(state.step_count(), 0);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let mut p = Tensor::scalar(1.0);
        let mut state = AdamState::with_defaults(std::slice::from_ref(&p));
        let g = Tensor::row(&[1.0, 2.0]).unwrap();
        assert!(state.step(&mut [&mut p], &[g], 0.01).is_err());
    }

    #[test]
    fn second_moments_stay_non_negative() {
        let mut p = Tensor::row(&[1.0, -1.0]).unwrap();
        let mut state = AdamState::with_defaults(std::slice::from_ref(&p));
        for i in 0..50 {
            let g = Tensor::row(&[(-1.0f64).powi(i), 0.5]).unwrap();
            state.step(&mut [&mut p], &[g], 0.01).unwrap();
        }
        assert!(state.moments_valid());
    }
}
