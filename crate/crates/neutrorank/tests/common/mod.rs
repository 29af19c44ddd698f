//! Shared fixtures: the two investment-panel reference matrices used by the
//! golden tests (four alternatives, three criteria, weights 0.35/0.25/0.40).

use neutrorank::{DecisionMatrix, InValue, RankedRow, RankingReport, SvnValue, WeightVector};

pub fn svn(t: f64, i: f64, f: f64) -> SvnValue {
    SvnValue::new(t, i, f).unwrap()
}

pub fn iv(t: [f64; 2], i: [f64; 2], f: [f64; 2]) -> InValue {
    InValue::new(t, i, f).unwrap()
}

pub fn investment_weights() -> WeightVector {
    WeightVector::new(vec![0.35, 0.25, 0.40]).unwrap()
}

fn names(n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("A{k}")).collect()
}

fn criteria() -> Vec<String> {
    vec!["growth".into(), "risk".into(), "environment".into()]
}

pub fn svn_investment_matrix() -> DecisionMatrix<SvnValue> {
    DecisionMatrix::new(
        names(4),
        criteria(),
        investment_weights(),
        vec![
            vec![svn(0.4, 0.2, 0.3), svn(0.4, 0.2, 0.3), svn(0.2, 0.2, 0.5)],
            vec![svn(0.6, 0.1, 0.2), svn(0.6, 0.1, 0.2), svn(0.5, 0.2, 0.2)],
            vec![svn(0.3, 0.2, 0.3), svn(0.5, 0.2, 0.3), svn(0.5, 0.3, 0.2)],
            vec![svn(0.7, 0.0, 0.1), svn(0.6, 0.1, 0.2), svn(0.4, 0.3, 0.2)],
        ],
    )
    .unwrap()
}

pub fn interval_investment_matrix() -> DecisionMatrix<InValue> {
    DecisionMatrix::new(
        names(4),
        criteria(),
        investment_weights(),
        vec![
            vec![
                iv([0.4, 0.5], [0.2, 0.3], [0.3, 0.4]),
                iv([0.4, 0.6], [0.1, 0.3], [0.2, 0.4]),
                iv([0.7, 0.9], [0.2, 0.3], [0.4, 0.5]),
            ],
            vec![
                iv([0.6, 0.7], [0.1, 0.2], [0.2, 0.3]),
                iv([0.6, 0.7], [0.1, 0.2], [0.2, 0.3]),
                iv([0.3, 0.6], [0.3, 0.5], [0.8, 0.9]),
            ],
            vec![
                iv([0.3, 0.6], [0.2, 0.3], [0.3, 0.4]),
                iv([0.5, 0.6], [0.2, 0.3], [0.3, 0.4]),
                iv([0.4, 0.5], [0.2, 0.4], [0.7, 0.9]),
            ],
            vec![
                iv([0.7, 0.8], [0.0, 0.1], [0.1, 0.2]),
                iv([0.6, 0.7], [0.1, 0.2], [0.1, 0.3]),
                iv([0.6, 0.7], [0.3, 0.4], [0.8, 0.9]),
            ],
        ],
    )
    .unwrap()
}

pub fn report_row<'a, V>(report: &'a RankingReport<V>, name: &str) -> &'a RankedRow<V> {
    report
        .rows
        .iter()
        .find(|row| row.alternative == name)
        .unwrap_or_else(|| panic!("no row for {name}"))
}

pub fn assert_close(got: f64, want: f64, tol: f64, what: &str) {
    assert!(
        (got - want).abs() <= tol,
        "{what}: got {got}, want {want} within {tol}"
    );
}
