//! Small numeric helpers shared across modules.

/// Kahan compensated summation. Long exact-enumeration sums go through
/// this so accumulation noise stays far below the 1e-12 tolerances.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct KahanSum {
    sum: f64,
    compensation: f64,
}

impl KahanSum {
    pub fn add(&mut self, value: f64) {
        let y = value - self.compensation;
        let t = self.sum + y;
        self.compensation = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum
    }
}

/// Exact binomial coefficient, `None` on u128 overflow.
pub(crate) fn binomial_u128(n: u64, k: u64) -> Option<u128> {
    let k = k.min(n - k.min(n));
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.checked_mul((n - i) as u128)?;
        result /= (i + 1) as u128;
    }
    Some(result)
}

/// Number of count vectors of `cells` nonnegative integers summing to
/// `n`, i.e. `C(n + cells - 1, cells - 1)`. `None` on overflow.
pub(crate) fn composition_count(n: u64, cells: u64) -> Option<u128> {
    binomial_u128(n + cells - 1, cells - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_handles_many_tiny_terms() {
        let mut sum = KahanSum::default();
        for _ in 0..1_000_000 {
            sum.add(1e-6);
        }
        assert!((sum.value() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial_u128(5, 2), Some(10));
        assert_eq!(binomial_u128(0, 0), Some(1));
        assert_eq!(binomial_u128(110, 3), Some(215_820));
        assert_eq!(composition_count(4, 2), Some(5));
        assert_eq!(composition_count(0, 3), Some(1));
    }
}
