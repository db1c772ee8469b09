use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

/// Non-increasing sequence of vertex degrees, length at least one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidDegreeSequence("empty sequence".into()));
        }
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDegreeSequence(format!(
                "{values:?} is not non-increasing"
            )));
        }
        Ok(Self(values))
    }

    /// Sorts `values` into non-increasing order first.
    pub fn from_unsorted(mut values: Vec<usize>) -> Result<Self> {
        values.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Prefix up to (and excluding) the first zero entry.
    pub fn nonzero_prefix(&self) -> &[usize] {
        let end = self.0.iter().position(|&d| d == 0).unwrap_or(self.0.len());
        &self.0[..end]
    }
}

pub fn degree_sequence(g: &Graph) -> DegreeSequence {
    DegreeSequence::from_unsorted(g.degrees()).expect("graphs have at least one vertex")
}

/// `d*_i = |{j : d_j ≥ i}|` for `i = 1..=len`.
pub fn conjugate(d: &DegreeSequence) -> DegreeSequence {
    let values = (1..=d.len())
        .map(|i| d.values().iter().filter(|&&dj| dj >= i).count())
        .collect();
    DegreeSequence::new(values).expect("conjugate is non-increasing")
}

/// Number of indices `j` (1-based) with `d_j ≥ j`.
pub fn trace_of(d: &DegreeSequence) -> usize {
    d.values()
        .iter()
        .enumerate()
        .filter(|&(j, &dj)| dj > j)
        .count()
}

/// Outcome of the conjugate-sequence graphicality test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphicalReport {
    pub graphical: bool,
    pub even_sum: bool,
    /// `Σ_{i≤j} d*_i − Σ_{i≤j} (d_i + 1)` for `j = 1..=τ_d`.
    pub slacks: Vec<i64>,
}

impl GraphicalReport {
    pub fn all_tight(&self) -> bool {
        self.slacks.iter().all(|&s| s == 0)
    }
}

pub fn is_graphical(d: &DegreeSequence) -> GraphicalReport {
    let conj = conjugate(d);
    let tau = trace_of(d);
    let mut lhs = 0i64;
    let mut rhs = 0i64;
    let slacks: Vec<i64> = (0..tau)
        .map(|j| {
            lhs += d.values()[j] as i64 + 1;
            rhs += conj.values()[j] as i64;
            rhs - lhs
        })
        .collect();
    let even_sum = d.sum() % 2 == 0;
    GraphicalReport {
        graphical: even_sum && slacks.iter().all(|&s| s >= 0),
        even_sum,
        slacks,
    }
}

/// Threshold sequences are the graphical ones with every slack equal to zero.
pub fn is_threshold(d: &DegreeSequence) -> Result<bool> {
    let report = is_graphical(d);
    if !report.graphical {
        return Err(Error::NotGraphical(d.values().to_vec()));
    }
    Ok(report.all_tight())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_antiregular, build_path};

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn rejects_unsorted_and_empty() {
        assert!(DegreeSequence::new(vec![]).is_err());
        assert!(DegreeSequence::new(vec![1, 2]).is_err());
    }

    #[test]
    fn degree_sequences_of_builders() {
        assert_eq!(
            degree_sequence(&build_antiregular(4).unwrap()),
            seq(&[3, 2, 2, 1])
        );
        assert_eq!(degree_sequence(&build_path(3).unwrap()), seq(&[2, 1, 1]));
        assert_eq!(degree_sequence(&build_path(2).unwrap()), seq(&[1, 1]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(conjugate(&seq(&[3, 2, 2, 1])), seq(&[4, 3, 1, 0]));
        assert_eq!(conjugate(&seq(&[1, 1])), seq(&[2, 0]));
        assert_eq!(conjugate(&seq(&[0])), seq(&[0]));
    }

    #[test]
    fn traces() {
        assert_eq!(trace_of(&seq(&[3, 2, 2, 1])), 2);
        assert_eq!(trace_of(&seq(&[1, 1])), 1);
        assert_eq!(trace_of(&seq(&[0, 0])), 0);
    }

    #[test]
    fn graphicality() {
        let r = is_graphical(&seq(&[3, 2, 2, 1]));
        assert!(r.graphical);
        assert_eq!(r.slacks, vec![0, 0]);

        let r = is_graphical(&seq(&[3, 3, 1, 1]));
        assert!(!r.graphical);
        assert_eq!(r.slacks, vec![0, -2]);

        assert!(is_graphical(&seq(&[1, 1])).graphical);
        // odd degree sum
        assert!(!is_graphical(&seq(&[1, 0])).graphical);
    }

    #[test]
    fn threshold_sequences() {
        assert!(is_threshold(&seq(&[3, 2, 2, 1])).unwrap());
        // P4
        assert!(!is_threshold(&seq(&[2, 2, 1, 1])).unwrap());
        assert_eq!(is_graphical(&seq(&[2, 2, 1, 1])).slacks, vec![1, 0]);
        assert!(is_threshold(&seq(&[1, 1])).unwrap());
        assert!(matches!(
            is_threshold(&seq(&[3, 3, 1, 1])),
            Err(Error::NotGraphical(_))
        ));
    }

    #[test]
    fn antiregular_graphs_are_threshold() {
        for k in 2..=20 {
            let d = degree_sequence(&build_antiregular(k).unwrap());
            assert!(is_threshold(&d).unwrap(), "k = {k}");
        }
    }
}
