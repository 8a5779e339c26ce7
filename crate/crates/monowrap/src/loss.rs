//! The two zero/one loss functionals everything else is defined against.
//!
//! Population losses are accumulated in double precision; empirical
//! losses are exact rationals so that tie-breaking downstream (ERM sets,
//! the update rule) is reproducible.

use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::distribution::{DiscreteDistribution, Mixture};
use crate::error::{Error, Result};
use crate::types::{Hypothesis, Sample};

/// Exact empirical loss: error count over sample size.
pub type EmpiricalLoss = Ratio<u64>;

/// `Err(h) = sum over support of D(x,y) * 1[h(x) != y]`.
pub fn population_loss(h: &Hypothesis, d: &DiscreteDistribution) -> Result<f64> {
    let mut loss = 0.0;
    for (example, p) in d.support() {
        if !h.is_correct(example)? {
            loss += p;
        }
    }
    Ok(loss)
}

/// Expected population loss of a mixture: linear in the atom weights.
pub fn mixture_loss(m: &Mixture, d: &DiscreteDistribution) -> Result<f64> {
    let mut loss = 0.0;
    for (h, w) in m.atoms() {
        loss += w * population_loss(h, d)?;
    }
    Ok(loss)
}

/// Exact fraction of `sample` misclassified by `h`. Errors on the empty
/// sample; callers that allow it must special-case first.
pub fn empirical_loss(h: &Hypothesis, sample: &Sample) -> Result<EmpiricalLoss> {
    if sample.is_empty() {
        return Err(Error::EmptySample);
    }
    let mut errors = 0u64;
    for example in sample.iter() {
        if !h.is_correct(example)? {
            errors += 1;
        }
    }
    Ok(Ratio::new(errors, sample.len() as u64))
}

/// Lossless `f64` view of an empirical loss (numerator and denominator
/// both fit well below 2^53, so the division is correctly rounded).
pub fn empirical_to_f64(loss: &EmpiricalLoss) -> f64 {
    loss.to_f64().expect("ratio of u64 always converts")
}
