//! Domain types: labels, points, examples, samples, hypotheses, learners.
//!
//! Everything here is immutable after construction and cheap to clone
//! (hypotheses share their payload behind an `Arc`), so values can be
//! handed to concurrent workers freely.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use ordered_float::OrderedFloat;

use crate::error::{Error, Result};

/// A class label in `[0, k)`. The arity `k` is fixed per experiment and
/// carried by hypotheses and distributions, not by the label itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub u32);

impl Label {
    pub fn check_range(self, k: u32) -> Result<()> {
        if self.0 < k {
            Ok(())
        } else {
            Err(Error::LabelOutOfRange { label: self.0, k })
        }
    }

    /// Cyclic shift by `i` modulo `k`.
    pub fn shifted(self, i: u32, k: u32) -> Label {
        Label((self.0 + i) % k)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A domain point. Finite-domain experiments use opaque named points;
/// the k-NN learner needs real coordinates, so a Euclidean variant is
/// provided as well. Ordering and hashing are total (coordinates are
/// kept as `OrderedFloat`), which the deterministic tie rules rely on.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Point {
    Named(Arc<str>),
    Euclidean(Arc<[OrderedFloat<f64>]>),
}

impl Point {
    pub fn named(name: impl Into<Arc<str>>) -> Point {
        Point::Named(name.into())
    }

    pub fn euclidean(coords: impl IntoIterator<Item = f64>) -> Point {
        Point::Euclidean(coords.into_iter().map(OrderedFloat).collect())
    }

    /// Parse `"0.5,-1.25"` into a Euclidean point.
    pub fn parse_euclidean(s: &str) -> Result<Point> {
        let coords: std::result::Result<Vec<f64>, _> =
            s.split(',').map(|c| c.trim().parse::<f64>()).collect();
        match coords {
            Ok(c) if !c.is_empty() => Ok(Point::euclidean(c)),
            _ => Err(Error::InvalidConfig {
                reason: format!("cannot parse '{s}' as comma-separated coordinates"),
            }),
        }
    }

    pub fn coords(&self) -> Option<&[OrderedFloat<f64>]> {
        match self {
            Point::Euclidean(c) => Some(c),
            Point::Named(_) => None,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Named(s) => write!(f, "{s}"),
            Point::Euclidean(c) => {
                let parts: Vec<String> = c.iter().map(|x| x.0.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    }
}

/// A labelled example.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Example {
    pub point: Point,
    pub label: Label,
}

impl Example {
    pub fn new(point: Point, label: Label) -> Example {
        Example { point, label }
    }
}

/// An ordered sequence of examples. Prefix extraction preserves order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Sample {
    examples: Vec<Example>,
}

impl Sample {
    pub fn new(examples: Vec<Example>) -> Sample {
        Sample { examples }
    }

    pub fn empty() -> Sample {
        Sample { examples: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn examples(&self) -> &[Example] {
        &self.examples
    }

    /// The first `len` examples, in order.
    pub fn prefix(&self, len: usize) -> Sample {
        Sample { examples: self.examples[..len.min(self.examples.len())].to_vec() }
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Example> {
        self.examples.iter()
    }
}

impl From<Vec<Example>> for Sample {
    fn from(examples: Vec<Example>) -> Sample {
        Sample { examples }
    }
}

impl From<&[Example]> for Sample {
    fn from(examples: &[Example]) -> Sample {
        Sample { examples: examples.to_vec() }
    }
}

impl FromIterator<Example> for Sample {
    fn from_iter<I: IntoIterator<Item = Example>>(iter: I) -> Sample {
        Sample { examples: iter.into_iter().collect() }
    }
}

/// An opaque total classifier, used for hypotheses that cannot be
/// represented as a finite table (the k-NN rule, for instance).
pub trait Classify: Send + Sync {
    fn classify(&self, point: &Point) -> Result<Label>;
}

#[derive(Clone)]
enum Repr {
    /// Maps every point to the same label.
    Const(Label),
    /// Finite table over named or Euclidean points; total only on its keys.
    Table(Arc<BTreeMap<Point, Label>>),
    /// `x -> (base(x) + shift) mod k`. Nested shifts are flattened on
    /// construction, so `base` is never itself a `Shift`.
    Shift { base: Arc<Hypothesis>, shift: u32 },
    Opaque(Arc<dyn Classify>),
}

/// A deterministic total map from domain points to labels in `[0, k)`.
///
/// Hypotheses are deterministic by construction; randomized outputs are
/// represented explicitly as a [`crate::distribution::Mixture`] so exact
/// oracles can integrate over internal coins.
#[derive(Clone)]
pub struct Hypothesis {
    k: u32,
    repr: Repr,
}

impl Hypothesis {
    /// The constant hypothesis mapping everything to `label`.
    pub fn constant(label: Label, k: u32) -> Result<Hypothesis> {
        if k < 2 {
            return Err(Error::InvalidArity { k });
        }
        label.check_range(k)?;
        Ok(Hypothesis { k, repr: Repr::Const(label) })
    }

    /// A table-backed hypothesis over a finite domain.
    pub fn table(entries: impl IntoIterator<Item = (Point, Label)>, k: u32) -> Result<Hypothesis> {
        if k < 2 {
            return Err(Error::InvalidArity { k });
        }
        let map: BTreeMap<Point, Label> = entries.into_iter().collect();
        for label in map.values() {
            label.check_range(k)?;
        }
        Ok(Hypothesis { k, repr: Repr::Table(Arc::new(map)) })
    }

    /// Wrap an opaque classifier.
    pub fn opaque(classifier: Arc<dyn Classify>, k: u32) -> Result<Hypothesis> {
        if k < 2 {
            return Err(Error::InvalidArity { k });
        }
        Ok(Hypothesis { k, repr: Repr::Opaque(classifier) })
    }

    pub fn label_count(&self) -> u32 {
        self.k
    }

    /// Compose with the cyclic label shift `x -> (self(x) + i) mod k`.
    /// Shifting a shifted hypothesis folds the offsets together; a total
    /// shift of zero returns the base unchanged.
    pub fn shifted(&self, i: u32) -> Hypothesis {
        let (base, offset) = match &self.repr {
            Repr::Shift { base, shift } => (base.as_ref().clone(), *shift),
            _ => (self.clone(), 0),
        };
        let total = (offset + i) % self.k;
        if total == 0 {
            base
        } else {
            Hypothesis { k: self.k, repr: Repr::Shift { base: Arc::new(base), shift: total } }
        }
    }

    pub fn evaluate(&self, point: &Point) -> Result<Label> {
        match &self.repr {
            Repr::Const(label) => Ok(*label),
            Repr::Table(map) => map.get(point).copied().ok_or_else(|| Error::DomainMismatch {
                point: point.to_string(),
            }),
            Repr::Shift { base, shift } => Ok(base.evaluate(point)?.shifted(*shift, self.k)),
            Repr::Opaque(f) => f.classify(point),
        }
    }

    /// True iff this hypothesis labels the example correctly.
    pub fn is_correct(&self, example: &Example) -> Result<bool> {
        Ok(self.evaluate(&example.point)? == example.label)
    }
}

/// Structural equality: tables and shifts compare by content, opaque
/// classifiers by pointer identity. Extensionally equal hypotheses with
/// different representations compare unequal.
impl PartialEq for Hypothesis {
    fn eq(&self, other: &Hypothesis) -> bool {
        if self.k != other.k {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::Const(a), Repr::Const(b)) => a == b,
            (Repr::Table(a), Repr::Table(b)) => a == b,
            (Repr::Shift { base: a, shift: i }, Repr::Shift { base: b, shift: j }) => {
                i == j && a == b
            }
            (Repr::Opaque(a), Repr::Opaque(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

impl fmt::Debug for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Const(label) => write!(f, "Hypothesis::Const({label}, k={})", self.k),
            Repr::Table(map) => write!(f, "Hypothesis::Table({} entries, k={})", map.len(), self.k),
            Repr::Shift { base, shift } => write!(f, "Hypothesis::Shift({base:?} + {shift})"),
            Repr::Opaque(_) => write!(f, "Hypothesis::Opaque(k={})", self.k),
        }
    }
}

/// A black-box learning rule: sample in, hypothesis out.
///
/// Implementations must be defined on the empty sample and deterministic
/// given the sample (and any internal seed fixed at construction).
pub trait Learner: Send + Sync {
    fn train(&self, sample: &Sample) -> Result<Hypothesis>;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(name: &str) -> Point {
        Point::named(name)
    }

    #[test]
    fn label_range_check() {
        assert!(Label(1).check_range(2).is_ok());
        assert!(matches!(
            Label(2).check_range(2),
            Err(Error::LabelOutOfRange { label: 2, k: 2 })
        ));
    }

    #[test]
    fn table_lookup_and_domain_mismatch() {
        let h = Hypothesis::table([(pt("a"), Label(0)), (pt("b"), Label(1))], 2).unwrap();
        assert_eq!(h.evaluate(&pt("a")).unwrap(), Label(0));
        assert!(matches!(h.evaluate(&pt("c")), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn zero_shift_is_identity() {
        let h = Hypothesis::table([(pt("a"), Label(2))], 3).unwrap();
        let s0 = h.shifted(0);
        assert_eq!(s0, h);
        assert_eq!(s0.evaluate(&pt("a")).unwrap(), h.evaluate(&pt("a")).unwrap());
    }

    #[test]
    fn shifts_fold_together() {
        let h = Hypothesis::constant(Label(1), 3).unwrap();
        let twice = h.shifted(2).shifted(2); // total shift 4 = 1 mod 3
        assert_eq!(twice, h.shifted(1));
        assert_eq!(twice.evaluate(&pt("x")).unwrap(), Label(2));
        // full cycle returns the base representation
        assert_eq!(h.shifted(1).shifted(2), h);
    }

    #[test]
    fn sample_prefix_preserves_order() {
        let s: Sample = (0..5)
            .map(|i| Example::new(pt(&format!("x{i}")), Label(0)))
            .collect();
        let p = s.prefix(3);
        assert_eq!(p.len(), 3);
        assert_eq!(p.examples(), &s.examples()[..3]);
        assert_eq!(s.prefix(99).len(), 5);
    }

    #[test]
    fn euclidean_point_parsing() {
        let p = Point::parse_euclidean("0.5, -1.25").unwrap();
        assert_eq!(p, Point::euclidean([0.5, -1.25]));
        assert!(Point::parse_euclidean("a,b").is_err());
        assert!(Point::parse_euclidean("").is_err());
    }

    #[test]
    fn arity_validation() {
        assert!(matches!(
            Hypothesis::constant(Label(0), 1),
            Err(Error::InvalidArity { k: 1 })
        ));
        assert!(Hypothesis::table([(pt("a"), Label(5))], 3).is_err());
    }
}
