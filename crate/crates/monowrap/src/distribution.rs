//! Finitely supported distributions: the data source `D` over examples
//! and mixtures of hypotheses (the exact-computation twin of randomized
//! outputs).

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{Example, Hypothesis, Label, Point, Sample};

/// Validation slack on probability sums.
pub const PROB_TOLERANCE: f64 = 1e-12;

/// A finitely supported joint distribution over `(point, label)` pairs.
#[derive(Clone, Debug, PartialEq)]
pub struct DiscreteDistribution {
    k: u32,
    support: Vec<(Example, f64)>,
}

impl DiscreteDistribution {
    /// Build and validate: probabilities strictly positive, summing to 1
    /// within `1e-12`, support entries distinct, labels in range.
    pub fn new(k: u32, support: Vec<(Example, f64)>) -> Result<DiscreteDistribution> {
        if k < 2 {
            return Err(Error::InvalidArity { k });
        }
        let mut total = 0.0;
        for (example, p) in &support {
            example.label.check_range(k)?;
            if !(*p > 0.0) {
                return Err(Error::InvalidProbabilities {
                    reason: format!("probability {p} of {} is not strictly positive", example.point),
                });
            }
            total += p;
        }
        if (total - 1.0).abs() > PROB_TOLERANCE {
            return Err(Error::InvalidProbabilities {
                reason: format!("support probabilities sum to {total}, not 1"),
            });
        }
        let mut seen: Vec<&Example> = support.iter().map(|(e, _)| e).collect();
        seen.sort();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidProbabilities {
                reason: "duplicate support entry".to_string(),
            });
        }
        Ok(DiscreteDistribution { k, support })
    }

    pub fn label_count(&self) -> u32 {
        self.k
    }

    pub fn support(&self) -> &[(Example, f64)] {
        &self.support
    }

    /// Draw `n` i.i.d. examples. One uniform draw in `[0,1)` is consumed
    /// per example and resolved against the cumulative support weights in
    /// stored order, so a fixed seed reproduces the sample bit for bit.
    pub fn sample_iid<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Sample {
        let mut examples = Vec::with_capacity(n);
        for _ in 0..n {
            let u: f64 = rng.random();
            let mut acc = 0.0;
            let mut chosen = &self.support[self.support.len() - 1].0;
            for (example, p) in &self.support {
                acc += p;
                if u < acc {
                    chosen = example;
                    break;
                }
            }
            examples.push(chosen.clone());
        }
        Sample::new(examples)
    }

    /// The empirical distribution of a sample (duplicate examples
    /// aggregate their counts).
    pub fn empirical(k: u32, sample: &Sample) -> Result<DiscreteDistribution> {
        if sample.is_empty() {
            return Err(Error::EmptySample);
        }
        let m = sample.len() as f64;
        let mut counts: std::collections::BTreeMap<&Example, usize> = Default::default();
        for example in sample.iter() {
            *counts.entry(example).or_insert(0) += 1;
        }
        let support = counts
            .into_iter()
            .map(|(e, c)| (e.clone(), c as f64 / m))
            .collect();
        DiscreteDistribution::new(k, support)
    }

    /// Reinterpret every named point as comma-separated Euclidean
    /// coordinates. Used when a JSON distribution feeds a geometric
    /// learner.
    pub fn with_euclidean_points(&self) -> Result<DiscreteDistribution> {
        let support = self
            .support
            .iter()
            .map(|(e, p)| {
                let point = match &e.point {
                    Point::Named(s) => Point::parse_euclidean(s)?,
                    Point::Euclidean(_) => e.point.clone(),
                };
                Ok((Example::new(point, e.label), *p))
            })
            .collect::<Result<Vec<_>>>()?;
        DiscreteDistribution::new(self.k, support)
    }

    pub fn from_json(json: &str) -> Result<DiscreteDistribution> {
        let doc: DistributionDoc = serde_json::from_str(json)?;
        doc.try_into()
    }

    pub fn to_json(&self) -> String {
        let doc = DistributionDoc {
            k: self.k,
            support: self
                .support
                .iter()
                .map(|(e, p)| SupportEntry {
                    point: e.point.to_string(),
                    label: e.label.0,
                    p: *p,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("distribution serialization cannot fail")
    }
}

/// Wire format: `{"k": int, "support": [{"point": string, "label": int, "p": float}]}`.
#[derive(Serialize, Deserialize)]
struct DistributionDoc {
    k: u32,
    support: Vec<SupportEntry>,
}

#[derive(Serialize, Deserialize)]
struct SupportEntry {
    point: String,
    label: u32,
    p: f64,
}

impl TryFrom<DistributionDoc> for DiscreteDistribution {
    type Error = Error;

    fn try_from(doc: DistributionDoc) -> Result<DiscreteDistribution> {
        let support = doc
            .support
            .into_iter()
            .map(|e| (Example::new(Point::named(e.point), Label(e.label)), e.p))
            .collect();
        DiscreteDistribution::new(doc.k, support)
    }
}

/// A finitely supported probability distribution over hypotheses.
/// Atoms may repeat a hypothesis; weights are strictly positive and sum
/// to 1 within `1e-12`.
#[derive(Clone, Debug)]
pub struct Mixture {
    atoms: Vec<(Hypothesis, f64)>,
}

impl Mixture {
    pub fn new(atoms: Vec<(Hypothesis, f64)>) -> Result<Mixture> {
        if atoms.is_empty() {
            return Err(Error::InvalidProbabilities { reason: "mixture has no atoms".into() });
        }
        let mut total = 0.0;
        for (_, w) in &atoms {
            if !(*w > 0.0) {
                return Err(Error::InvalidProbabilities {
                    reason: format!("atom weight {w} is not strictly positive"),
                });
            }
            total += w;
        }
        if (total - 1.0).abs() > PROB_TOLERANCE {
            return Err(Error::InvalidProbabilities {
                reason: format!("atom weights sum to {total}, not 1"),
            });
        }
        Ok(Mixture { atoms })
    }

    pub fn singleton(hypothesis: Hypothesis) -> Mixture {
        Mixture { atoms: vec![(hypothesis, 1.0)] }
    }

    pub fn uniform(hypotheses: impl IntoIterator<Item = Hypothesis>) -> Result<Mixture> {
        let hyps: Vec<Hypothesis> = hypotheses.into_iter().collect();
        let w = 1.0 / hyps.len() as f64;
        Mixture::new(hyps.into_iter().map(|h| (h, w)).collect())
    }

    /// The convex combination `weight * first + (1 - weight) * second`,
    /// concatenating atom lists. Degenerate weights collapse to the
    /// surviving side so no zero-weight atom is ever produced.
    pub fn blend(weight: f64, first: &Mixture, second: &Mixture) -> Result<Mixture> {
        if !(0.0..=1.0).contains(&weight) {
            return Err(Error::InvalidProbabilities {
                reason: format!("blend weight {weight} outside [0, 1]"),
            });
        }
        if weight == 1.0 {
            return Ok(first.clone());
        }
        if weight == 0.0 {
            return Ok(second.clone());
        }
        let mut atoms = Vec::with_capacity(first.atoms.len() + second.atoms.len());
        atoms.extend(first.atoms.iter().map(|(h, w)| (h.clone(), w * weight)));
        atoms.extend(second.atoms.iter().map(|(h, w)| (h.clone(), w * (1.0 - weight))));
        Mixture::new(atoms)
    }

    pub fn atoms(&self) -> &[(Hypothesis, f64)] {
        &self.atoms
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ex(name: &str, label: u32) -> Example {
        Example::new(Point::named(name), Label(label))
    }

    fn two_point() -> DiscreteDistribution {
        DiscreteDistribution::new(2, vec![(ex("a", 0), 0.75), (ex("b", 1), 0.25)]).unwrap()
    }

    #[test]
    fn validation_rejects_bad_supports() {
        assert!(DiscreteDistribution::new(2, vec![(ex("a", 0), 0.5)]).is_err());
        assert!(DiscreteDistribution::new(2, vec![(ex("a", 0), 1.0), (ex("a", 0), 0.0)]).is_err());
        assert!(
            DiscreteDistribution::new(2, vec![(ex("a", 0), 0.5), (ex("a", 0), 0.5)]).is_err(),
            "duplicate entries must be rejected"
        );
        assert!(DiscreteDistribution::new(2, vec![(ex("a", 7), 1.0)]).is_err());
    }

    #[test]
    fn sample_iid_empty_and_point_mass() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let d = two_point();
        assert!(d.sample_iid(0, &mut rng).is_empty());

        let pm = DiscreteDistribution::new(2, vec![(ex("only", 1), 1.0)]).unwrap();
        let s = pm.sample_iid(5, &mut rng);
        assert_eq!(s.len(), 5);
        assert!(s.iter().all(|e| *e == ex("only", 1)));
    }

    #[test]
    fn sample_iid_is_seed_deterministic() {
        let d = two_point();
        let s1 = d.sample_iid(64, &mut ChaCha8Rng::seed_from_u64(42));
        let s2 = d.sample_iid(64, &mut ChaCha8Rng::seed_from_u64(42));
        assert_eq!(s1, s2);
        let s3 = d.sample_iid(64, &mut ChaCha8Rng::seed_from_u64(43));
        assert_ne!(s1, s3);
    }

    #[test]
    fn json_round_trip() {
        let d = two_point();
        let restored = DiscreteDistribution::from_json(&d.to_json()).unwrap();
        assert_eq!(d, restored);
    }

    #[test]
    fn json_rejects_malformed() {
        assert!(DiscreteDistribution::from_json("{").is_err());
        let bad_sum = r#"{"k": 2, "support": [{"point": "a", "label": 0, "p": 0.5}]}"#;
        assert!(DiscreteDistribution::from_json(bad_sum).is_err());
    }

    #[test]
    fn mixture_validation() {
        let h = Hypothesis::constant(Label(0), 2).unwrap();
        assert!(Mixture::new(vec![]).is_err());
        assert!(Mixture::new(vec![(h.clone(), 0.5)]).is_err());
        assert!(Mixture::new(vec![(h.clone(), 0.5), (h.clone(), -0.5), (h, 1.0)]).is_err());
    }

    #[test]
    fn blend_handles_degenerate_weights() {
        let h0 = Hypothesis::constant(Label(0), 2).unwrap();
        let h1 = Hypothesis::constant(Label(1), 2).unwrap();
        let a = Mixture::singleton(h0);
        let b = Mixture::singleton(h1);
        assert_eq!(Mixture::blend(1.0, &a, &b).unwrap().atoms().len(), 1);
        assert_eq!(Mixture::blend(0.0, &a, &b).unwrap().atoms()[0].0, b.atoms()[0].0);
        let half = Mixture::blend(0.5, &a, &b).unwrap();
        assert_eq!(half.atoms().len(), 2);
    }
}
