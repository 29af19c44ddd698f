//! Score and accuracy functionals and the two-level value comparator.
//!
//! The score is the primary ranking key: it rewards truth and penalizes
//! indeterminacy twice as heavily as falsity, mapping every value into
//! `[-1, 1]` with the absolute value `(1,0,0)` at `1` and the null value
//! `(0,1,1)` at `-1`. The accuracy functional is a second `[-1, 1]`-valued
//! key used only to break score ties. Both are monotone under containment,
//! and both negate under complement.
//!
//! With a zero indeterminacy degree the single-valued score collapses (up
//! to an affine rescaling) to the classical truth-minus-falsity score used
//! for intuitionistic fuzzy values; the interval accuracy collapses the
//! same way when the indeterminacy interval is `[0, 0]`.

use std::fmt;

use crate::value::{InValue, SvnValue, EQ_EPSILON};

/// A score or accuracy value in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Score(f64);

impl Score {
    pub(crate) fn new(value: f64) -> Self {
        // rounding may excurse past the closed range by a few ulps
        debug_assert!(value.abs() <= 1.0 + 1e-9, "score {value} outside [-1, 1]");
        Self(value)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl fmt::Display for Score {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `(1 + t - 2i - f) / 2`.
pub fn score_svn(v: SvnValue) -> Score {
    Score::new((1.0 + v.truth() - 2.0 * v.indeterminacy() - v.falsity()) / 2.0)
}

/// `(2 + t.lo + t.hi - 2 i.lo - 2 i.hi - f.lo - f.hi) / 4`.
///
/// Symmetric in each pair's bounds, so lenient (descending) values score
/// the same as their sorted counterparts.
pub fn score_interval(v: InValue) -> Score {
    Score::new(
        (2.0 + v.truth().lo() + v.truth().hi()
            - 2.0 * v.indeterminacy().lo()
            - 2.0 * v.indeterminacy().hi()
            - v.falsity().lo()
            - v.falsity().hi())
            / 4.0,
    )
}

/// `t - i (1 - t) - f (1 - i)`.
pub fn accuracy_svn(v: SvnValue) -> Score {
    let (t, i, f) = (v.truth(), v.indeterminacy(), v.falsity());
    Score::new(t - i * (1.0 - t) - f * (1.0 - i))
}

/// `(t.lo + t.hi - i.hi (1 - t.hi) - i.lo (1 - t.lo) - f.hi (1 - i.lo) - f.lo (1 - i.hi)) / 2`.
///
/// Not symmetric in the bounds; lenient values are evaluated verbatim.
pub fn accuracy_interval(v: InValue) -> Score {
    let (tl, th) = (v.truth().lo(), v.truth().hi());
    let (il, ih) = (v.indeterminacy().lo(), v.indeterminacy().hi());
    let (fl, fh) = (v.falsity().lo(), v.falsity().hi());
    Score::new((tl + th - ih * (1.0 - th) - il * (1.0 - tl) - fh * (1.0 - il) - fl * (1.0 - ih)) / 2.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Greater,
    Less,
    Equal,
}

impl Relation {
    pub fn reversed(self) -> Self {
        match self {
            Relation::Greater => Relation::Less,
            Relation::Less => Relation::Greater,
            Relation::Equal => Relation::Equal,
        }
    }
}

/// Which level of the two-level comparator decided the outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecidedBy {
    Score,
    Accuracy,
    /// Score and accuracy both tie; callers fall back to a fixed total
    /// order (the ranking pipeline keeps input order).
    TiePolicy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Comparison {
    pub relation: Relation,
    pub decided_by: DecidedBy,
}

fn level(a: f64, b: f64) -> Option<Relation> {
    if (a - b).abs() <= EQ_EPSILON {
        None
    } else if a > b {
        Some(Relation::Greater)
    } else {
        Some(Relation::Less)
    }
}

fn two_level(score_a: f64, score_b: f64, accuracy_a: impl FnOnce() -> f64, accuracy_b: impl FnOnce() -> f64) -> Comparison {
    if let Some(relation) = level(score_a, score_b) {
        return Comparison { relation, decided_by: DecidedBy::Score };
    }
    match level(accuracy_a(), accuracy_b()) {
        Some(relation) => Comparison { relation, decided_by: DecidedBy::Accuracy },
        None => Comparison {
            relation: Relation::Equal,
            decided_by: DecidedBy::TiePolicy,
        },
    }
}

/// Orders by score; scores equal within [`EQ_EPSILON`] fall through to
/// accuracy; a double tie reports [`Relation::Equal`].
pub fn compare_svn(a: SvnValue, b: SvnValue) -> Comparison {
    two_level(
        score_svn(a).value(),
        score_svn(b).value(),
        || accuracy_svn(a).value(),
        || accuracy_svn(b).value(),
    )
}

pub fn compare_interval(a: InValue, b: InValue) -> Comparison {
    two_level(
        score_interval(a).value(),
        score_interval(b).value(),
        || accuracy_interval(a).value(),
        || accuracy_interval(b).value(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ValidationPolicy;
    use proptest::prelude::*;

    fn svn(t: f64, i: f64, f: f64) -> SvnValue {
        SvnValue::new(t, i, f).unwrap()
    }

    fn iv(t: [f64; 2], i: [f64; 2], f: [f64; 2]) -> InValue {
        InValue::new(t, i, f).unwrap()
    }

    fn lenient(t: [f64; 2], i: [f64; 2], f: [f64; 2]) -> InValue {
        InValue::with_policy(t, i, f, ValidationPolicy::Lenient).unwrap()
    }

    fn assert_close(got: f64, want: f64, tol: f64) {
        assert!((got - want).abs() <= tol, "got {got}, want {want} within {tol}");
    }

    #[test]
    fn svn_score_reference_values() {
        assert_close(score_svn(svn(0.5, 0.2, 0.6)).value(), 0.25, 1e-15);
        assert_close(score_svn(svn(0.6, 0.4, 0.2)).value(), 0.3, 1e-15);
        assert_eq!(score_svn(SvnValue::absolute()).value(), 1.0);
        assert_eq!(score_svn(SvnValue::null()).value(), -1.0);
    }

    #[test]
    fn interval_score_reference_values() {
        assert_close(score_interval(lenient([0.6, 0.4], [0.3, 0.1], [0.1, 0.3])).value(), 0.45, 1e-15);
        // the second reference value as its computation substitutes it
        // (falsity [0.1, 0.3]); the table's 0.32 is that 0.325 truncated
        assert_close(score_interval(iv([0.1, 0.6], [0.2, 0.3], [0.1, 0.3])).value(), 0.325, 1e-15);
        // ... and as declared (falsity [0.1, 0.4]), which scores lower
        assert_close(score_interval(iv([0.1, 0.6], [0.2, 0.3], [0.1, 0.4])).value(), 0.30, 1e-12);
        assert_eq!(score_interval(InValue::absolute()).value(), 1.0);
        assert_eq!(score_interval(InValue::null()).value(), -1.0);
    }

    #[test]
    fn svn_accuracy_reference_values() {
        assert!((accuracy_svn(svn(0.5, 0.2, 0.6)).value() - (-0.08)).abs() < 1e-12);
        assert!((accuracy_svn(svn(0.6, 0.4, 0.2)).value() - 0.32).abs() < 1e-12);
        assert_eq!(accuracy_svn(SvnValue::absolute()).value(), 1.0);
    }

    #[test]
    fn interval_accuracy_reference_values() {
        // reproduces only with the bounds consumed verbatim
        assert!((accuracy_interval(lenient([0.6, 0.4], [0.3, 0.1], [0.1, 0.3])).value() - 0.26).abs() < 1e-12);
        let second = accuracy_interval(iv([0.1, 0.6], [0.2, 0.3], [0.1, 0.4])).value();
        assert!((second - 0.005).abs() < 1e-12);
        // the reference table's 0.34 for this value is not reproducible
        assert!((second - 0.34).abs() > 0.1);
        assert_eq!(accuracy_interval(InValue::absolute()).value(), 1.0);
    }

    #[test]
    fn compare_decides_by_score_first() {
        let cmp = compare_svn(svn(0.5, 0.2, 0.6), svn(0.6, 0.4, 0.2));
        assert_eq!(cmp, Comparison { relation: Relation::Less, decided_by: DecidedBy::Score });

        let cmp = compare_interval(
            lenient([0.6, 0.4], [0.3, 0.1], [0.1, 0.3]),
            iv([0.1, 0.6], [0.2, 0.3], [0.1, 0.3]),
        );
        assert_eq!(cmp, Comparison { relation: Relation::Greater, decided_by: DecidedBy::Score });

        // equal truth-minus-noise scores are NOT a tie when beyond epsilon
        let cmp = compare_svn(svn(0.4, 0.1, 0.4), svn(0.2, 0.0, 0.2));
        assert_eq!(cmp, Comparison { relation: Relation::Less, decided_by: DecidedBy::Score });
    }

    #[test]
    fn equal_scores_fall_through_to_accuracy() {
        // both score 0.4; accuracies -0.02 vs 0.0
        let cmp = compare_svn(svn(0.4, 0.1, 0.4), svn(0.5, 0.1, 0.5));
        assert_eq!(cmp, Comparison { relation: Relation::Less, decided_by: DecidedBy::Accuracy });

        let cmp = compare_interval(
            iv([0.4, 0.4], [0.1, 0.1], [0.4, 0.4]),
            iv([0.5, 0.5], [0.1, 0.1], [0.5, 0.5]),
        );
        assert_eq!(cmp, Comparison { relation: Relation::Less, decided_by: DecidedBy::Accuracy });
    }

    #[test]
    fn double_ties_report_equal() {
        let v = svn(0.3, 0.3, 0.3);
        assert_eq!(
            compare_svn(v, v),
            Comparison { relation: Relation::Equal, decided_by: DecidedBy::TiePolicy }
        );
        // distinct values with equal score 0.4 and equal accuracy -0.02
        assert_eq!(
            compare_svn(svn(0.4, 0.1, 0.4), svn(0.15, 0.15, 0.05)),
            Comparison { relation: Relation::Equal, decided_by: DecidedBy::TiePolicy }
        );
        let w = iv([0.2, 0.5], [0.1, 0.4], [0.3, 0.3]);
        assert_eq!(
            compare_interval(w, w),
            Comparison { relation: Relation::Equal, decided_by: DecidedBy::TiePolicy }
        );
        assert_eq!(
            compare_interval(
                iv([0.4, 0.4], [0.1, 0.1], [0.4, 0.4]),
                iv([0.15, 0.15], [0.15, 0.15], [0.05, 0.05]),
            ),
            Comparison { relation: Relation::Equal, decided_by: DecidedBy::TiePolicy }
        );
    }

    #[test]
    fn score_level_sets_match_their_algebraic_conditions() {
        // over a full 0.1-step grid: score 0 exactly on t = 2i + f - 1,
        // score 1 on t = 2i + f + 1, score -1 on t = 2i + f - 3
        let steps: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
        for &t in &steps {
            for &i in &steps {
                for &f in &steps {
                    let s = score_svn(svn(t, i, f)).value();
                    assert_eq!(s.abs() <= 1e-12, (t - (2.0 * i + f - 1.0)).abs() <= 1e-12);
                    assert_eq!((s - 1.0).abs() <= 1e-12, (t - (2.0 * i + f + 1.0)).abs() <= 1e-12);
                    assert_eq!((s + 1.0).abs() <= 1e-12, (t - (2.0 * i + f - 3.0)).abs() <= 1e-12);
                }
            }
        }
    }

    prop_compose! {
        fn arb_svn()(t in 0.0..=1.0f64, i in 0.0..=1.0f64, f in 0.0..=1.0f64) -> SvnValue {
            SvnValue::new(t, i, f).unwrap()
        }
    }

    prop_compose! {
        fn arb_interval()(a in 0.0..=1.0f64, b in 0.0..=1.0f64) -> crate::value::UnitInterval {
            crate::value::UnitInterval::new(a.min(b), a.max(b)).unwrap()
        }
    }

    prop_compose! {
        fn arb_in()(t in arb_interval(), i in arb_interval(), f in arb_interval()) -> InValue {
            InValue::from_intervals(t, i, f)
        }
    }

    proptest! {
        #[test]
        fn scores_and_accuracies_stay_in_range(v in arb_svn(), w in arb_in()) {
            for s in [score_svn(v), accuracy_svn(v), score_interval(w), accuracy_interval(w)] {
                prop_assert!((-1.0..=1.0).contains(&s.value()));
            }
        }

        #[test]
        fn score_is_monotone_under_containment(outer in arb_svn(), st in 0.0..=1.0f64, si in 0.0..=1.0f64, sf in 0.0..=1.0f64) {
            let inner = SvnValue::new(
                outer.truth() * st,
                outer.indeterminacy() + (1.0 - outer.indeterminacy()) * si,
                outer.falsity() + (1.0 - outer.falsity()) * sf,
            ).unwrap();
            prop_assert!(inner.is_contained_in(&outer));
            prop_assert!(score_svn(inner).value() <= score_svn(outer).value() + 1e-12);
        }

        #[test]
        fn interval_score_is_monotone_under_containment(outer in arb_in(), s in prop::array::uniform6(0.0..=1.0f64)) {
            let tl = outer.truth().lo() * s[0];
            let th = tl.max(outer.truth().hi() * s[1]);
            let il = outer.indeterminacy().lo() + (1.0 - outer.indeterminacy().lo()) * s[2];
            let ih = il.max(outer.indeterminacy().hi() + (1.0 - outer.indeterminacy().hi()) * s[3]);
            let fl = outer.falsity().lo() + (1.0 - outer.falsity().lo()) * s[4];
            let fh = fl.max(outer.falsity().hi() + (1.0 - outer.falsity().hi()) * s[5]);
            let inner = InValue::new([tl, th], [il, ih], [fl, fh]).unwrap();
            prop_assert!(inner.is_contained_in(&outer));
            prop_assert!(score_interval(inner).value() <= score_interval(outer).value() + 1e-12);
        }

        #[test]
        fn score_negates_under_complement(v in arb_svn(), w in arb_in()) {
            prop_assert!((score_svn(v.complement()).value() + score_svn(v).value()).abs() <= 1e-12);
            let wc = w.complement().unwrap();
            prop_assert!((score_interval(wc).value() + score_interval(w).value()).abs() <= 1e-12);
        }

        #[test]
        fn comparator_is_antisymmetric(a in arb_svn(), b in arb_svn()) {
            let ab = compare_svn(a, b);
            let ba = compare_svn(b, a);
            prop_assert_eq!(ab.relation, ba.relation.reversed());
            prop_assert_eq!(ab.decided_by, ba.decided_by);
        }

        #[test]
        fn accuracy_never_decides_distinct_scores(a in arb_svn(), b in arb_svn()) {
            let cmp = compare_svn(a, b);
            if (score_svn(a).value() - score_svn(b).value()).abs() > EQ_EPSILON {
                prop_assert_eq!(cmp.decided_by, DecidedBy::Score);
            } else {
                prop_assert!(cmp.decided_by != DecidedBy::Score);
            }
        }
    }
}
