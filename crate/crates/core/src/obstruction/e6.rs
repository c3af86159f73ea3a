//! Incidence structure of the 27 weights of E6 and the case analysis
//! ruling out two or three distinct eigenvalues.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Facts, HullSummary, ObstructionCertificate, ObstructionKind};
use crate::error::{Error, Result};
use crate::exact::{dot, rational_rank, RatMatrix, Rational};
use crate::rootsys::{TypeLabel, Weight, WeightSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IncidenceCheck {
    pub diagonal_ok: bool,
    pub off_diagonal_ok: bool,
    pub degrees_ok: bool,
    pub incident_pair_count: usize,
    pub skew_pair_count: usize,
}

impl IncidenceCheck {
    pub fn all(&self) -> bool {
        self.diagonal_ok
            && self.off_diagonal_ok
            && self.degrees_ok
            && self.incident_pair_count == 135
    }
}

/// Weights are incident when their inner product is `-2/3` and skew when
/// it is `1/3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceGraph {
    pub weights: Vec<Weight>,
    pub gram: Vec<Vec<Rational>>,
    pub incident_pairs: Vec<(usize, usize)>,
    pub skew_pairs: Vec<(usize, usize)>,
    pub check: IncidenceCheck,
    incident: Vec<Vec<bool>>,
}

impl IncidenceGraph {
    /// Builds the graph from arbitrary points; invariants are recorded in
    /// `check` rather than enforced.
    pub fn from_weights(weights: Vec<Weight>) -> Self {
        let n = weights.len();
        let gram: Vec<Vec<Rational>> = weights
            .iter()
            .map(|a| weights.iter().map(|b| dot(&a.0, &b.0)).collect())
            .collect();
        let inc_val = Rational::new(-2, 3);
        let skew_val = Rational::new(1, 3);
        let mut incident = vec![vec![false; n]; n];
        let mut incident_pairs = Vec::new();
        let mut skew_pairs = Vec::new();
        let mut off_diagonal_ok = true;
        for i in 0..n {
            for j in i + 1..n {
                if gram[i][j] == inc_val {
                    incident_pairs.push((i, j));
                    incident[i][j] = true;
                    incident[j][i] = true;
                } else if gram[i][j] == skew_val {
                    skew_pairs.push((i, j));
                } else {
                    off_diagonal_ok = false;
                }
            }
        }
        let norm = Rational::new(4, 3);
        let check = IncidenceCheck {
            diagonal_ok: (0..n).all(|i| gram[i][i] == norm),
            off_diagonal_ok,
            degrees_ok: n == 27
                && incident
                    .iter()
                    .all(|row| row.iter().filter(|&&b| b).count() == 10),
            incident_pair_count: incident_pairs.len(),
            skew_pair_count: skew_pairs.len(),
        };
        IncidenceGraph {
            weights,
            gram,
            incident_pairs,
            skew_pairs,
            check,
            incident,
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_incident(&self, i: usize, j: usize) -> bool {
        self.incident[i][j]
    }

    pub fn is_skew(&self, i: usize, j: usize) -> bool {
        i != j && self.gram[i][j] == Rational::new(1, 3)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.incident[i].iter().filter(|&&b| b).count()
    }

    fn lookup(&self, w: &Weight) -> Option<usize> {
        self.weights.iter().position(|x| x == w)
    }
}

/// The incidence graph of an E6 minuscule weight system.
pub fn e6_incidence(ws: &WeightSystem) -> Result<IncidenceGraph> {
    let rs = &ws.root_system;
    if rs.type_label != TypeLabel::E || rs.rank != 6 {
        return Err(Error::InvalidInput(format!(
            "expected E6, got {}",
            rs.name()
        )));
    }
    let g = IncidenceGraph::from_weights(ws.weights.clone());
    if !g.check.all() {
        return Err(Error::Inconsistent(format!(
            "E6 incidence invariants fail: {:?}",
            g.check
        )));
    }
    Ok(g)
}

/// One triple of the case analysis.
///
/// `witness` holds auxiliary weight indices:
/// * 0 incident pairs: `w` incident to all three, then the indices of
///   `-w - t_a` for each `a` in the triple;
/// * 1: the index of `t_i + t_j - t_k` with `(i, j)` the incident pair;
/// * 2: a weight skew to all three;
/// * 3: a weight incident to at most one of the three.
///
/// `counts` holds the bookkeeping numbers of the case, see
/// [`E6Facts::count_profiles`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub triple: [usize; 3],
    pub incident_pairs: usize,
    pub witness: Vec<usize>,
    pub counts: Vec<usize>,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E6Facts {
    pub weights: Vec<Weight>,
    pub incidence: IncidenceCheck,
    /// Rank of `{t_i - t_0}`; 6 means the weights cannot all take one value.
    pub difference_rank: usize,
    pub one_value_impossible: bool,
    pub triple_count: usize,
    /// Number of triples with 0, 1, 2 and 3 incident pairs.
    pub case_counts: [usize; 4],
    /// Distinct `counts` vectors seen in each case, keyed by incident
    /// pair count:
    /// * 0: number of valid `w`;
    /// * 2: incident to both `i` and `j` (with `k`), incident to at least
    ///   one of them, skew to both outside the triple, incident to `k`
    ///   outside the triple, incident to `k` among those skew to both,
    ///   skew to all three;
    /// * 3: incident pairs with one end in the triple and one outside.
    pub count_profiles: BTreeMap<usize, Vec<Vec<usize>>>,
    pub failures: Vec<TripleRecord>,
    pub three_values_impossible: bool,
    pub hull: HullSummary,
    pub two_values_impossible: bool,
    pub triples: Vec<TripleRecord>,
}

fn check_triple(g: &IncidenceGraph, t: [usize; 3]) -> TripleRecord {
    let [a, b, c] = t;
    let n = g.len();
    let pairs = [(a, b), (a, c), (b, c)];
    let p = pairs.iter().filter(|&&(x, y)| g.is_incident(x, y)).count();
    let outside = |m: usize| m != a && m != b && m != c;
    let (witness, counts, ok) = match p {
        0 => {
            let mut found = Vec::new();
            let mut first: Option<Vec<usize>> = None;
            for w in 0..n {
                if !t.iter().all(|&x| g.is_incident(w, x)) {
                    continue;
                }
                let neg_w = -&g.weights[w];
                let others: Option<Vec<usize>> = t
                    .iter()
                    .map(|&x| g.lookup(&(&neg_w - &g.weights[x])))
                    .collect();
                if let Some(o) = others {
                    found.push(w);
                    if first.is_none() {
                        first = Some(std::iter::once(w).chain(o).collect());
                    }
                }
            }
            let ok = first.is_some();
            (first.unwrap_or_default(), vec![found.len()], ok)
        }
        1 => {
            let &(i, j) = pairs
                .iter()
                .find(|&&(x, y)| g.is_incident(x, y))
                .expect("one pair");
            let k = a + b + c - i - j;
            let target = &(&g.weights[i] + &g.weights[j]) - &g.weights[k];
            match g.lookup(&target) {
                Some(l) => (vec![l], vec![], true),
                None => (vec![], vec![], false),
            }
        }
        2 => {
            let &(i, j) = pairs
                .iter()
                .find(|&&(x, y)| !g.is_incident(x, y))
                .expect("one skew pair");
            let k = a + b + c - i - j;
            let both = (0..n)
                .filter(|&m| g.is_incident(m, i) && g.is_incident(m, j))
                .count();
            let either = (0..n)
                .filter(|&m| g.is_incident(m, i) || g.is_incident(m, j))
                .count();
            let skew_both: Vec<usize> = (0..n)
                .filter(|&m| outside(m) && g.is_skew(m, i) && g.is_skew(m, j))
                .collect();
            let k_outside = (0..n)
                .filter(|&m| outside(m) && g.is_incident(m, k))
                .count();
            let k_among = skew_both.iter().filter(|&&m| g.is_incident(m, k)).count();
            let skew_all: Vec<usize> = skew_both
                .iter()
                .copied()
                .filter(|&m| g.is_skew(m, k))
                .collect();
            let ok = both == 5
                && either == 15
                && skew_both.len() == 10
                && k_outside == 8
                && !skew_all.is_empty();
            let counts = vec![
                both,
                either,
                skew_both.len(),
                k_outside,
                k_among,
                skew_all.len(),
            ];
            (skew_all.first().copied().into_iter().collect(), counts, ok)
        }
        _ => {
            let crossing: usize = t
                .iter()
                .map(|&x| {
                    (0..n)
                        .filter(|&m| outside(m) && g.is_incident(m, x))
                        .count()
                })
                .sum();
            let m = (0..n)
                .filter(|&m| outside(m))
                .find(|&m| t.iter().filter(|&&x| g.is_incident(m, x)).count() <= 1);
            let ok = crossing == 24 && m.is_some();
            (m.into_iter().collect(), vec![crossing], ok)
        }
    };
    TripleRecord {
        triple: t,
        incident_pairs: p,
        witness,
        counts,
        ok,
    }
}

/// Runs every sub-claim of the E6 case analysis; failing triples are
/// listed in the certificate.
pub fn e6_case_checks(g: &IncidenceGraph) -> ObstructionCertificate {
    let n = g.len();
    let mut triples = Vec::new();
    let mut case_counts = [0usize; 4];
    let mut profiles: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let rec = check_triple(g, [a, b, c]);
                case_counts[rec.incident_pairs] += 1;
                if !rec.counts.is_empty() {
                    let seen = profiles.entry(rec.incident_pairs).or_default();
                    if !seen.contains(&rec.counts) {
                        seen.push(rec.counts.clone());
                    }
                }
                triples.push(rec);
            }
        }
    }
    for v in profiles.values_mut() {
        v.sort();
    }
    let failures: Vec<TripleRecord> = triples.iter().filter(|r| !r.ok).cloned().collect();

    let difference_rank = if n == 0 {
        0
    } else {
        let rows: Vec<Vec<Rational>> = g.weights[1..]
            .iter()
            .map(|w| (w - &g.weights[0]).0)
            .collect();
        let cols = g.weights[0].dim();
        rational_rank(&RatMatrix::from_rows(&rows, cols))
    };

    let points: Vec<Vec<Rational>> = g.weights.iter().map(|w| w.0.clone()).collect();
    let hull = HullSummary::from_points(&points).unwrap_or_else(|_| HullSummary {
        vertex_count: n,
        dim: 0,
        facet_count: 0,
        histogram: BTreeMap::new(),
        max_facet_size: n,
        two_hyperplanes_impossible: false,
        check: super::HullCheck::default(),
        facets: Vec::new(),
    });
    let two_values_impossible = hull.check.all()
        && hull.support().iter().all(|s| *s == 6 || *s == 10)
        && hull.two_hyperplanes_impossible;

    let facts = E6Facts {
        weights: g.weights.clone(),
        incidence: g.check,
        one_value_impossible: difference_rank == 6,
        difference_rank,
        triple_count: triples.len(),
        case_counts,
        count_profiles: profiles,
        three_values_impossible: failures.is_empty() && triples.len() == 2925,
        failures,
        hull,
        two_values_impossible,
        triples,
    };
    let verified = facts.incidence.all()
        && facts.one_value_impossible
        && facts.three_values_impossible
        && facts.two_values_impossible;
    ObstructionCertificate {
        case: "E6 λ=ϖ1 (27)".into(),
        kind: ObstructionKind::E6CaseAnalysis,
        facts: Facts::E6CaseAnalysis(Box::new(facts)),
        verified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootSystem;

    fn e6_graph(i: usize) -> IncidenceGraph {
        let rs = RootSystem::build(TypeLabel::E, 6).unwrap();
        let ws = rs
            .weight_system(&rs.fundamental_weight(i).unwrap())
            .unwrap();
        e6_incidence(&ws).unwrap()
    }

    #[test]
    fn incidence_invariants() {
        let g = e6_graph(1);
        assert!(g.check.all());
        assert_eq!(g.incident_pairs.len(), 135);
        assert_eq!(g.skew_pairs.len(), 216);
        assert!((0..27).all(|i| g.degree(i) == 10));
    }

    #[test]
    fn dual_representation_has_same_structure() {
        assert!(e6_graph(6).check.all());
    }

    #[test]
    fn case_checks_pass_on_every_triple() {
        let cert = e6_case_checks(&e6_graph(1));
        assert!(cert.verified);
        let Facts::E6CaseAnalysis(f) = &cert.facts else {
            panic!()
        };
        assert_eq!(f.case_counts, [720, 1080, 1080, 45]);
        assert_eq!(f.count_profiles[&2], vec![vec![5, 15, 10, 8, 6, 4]]);
        assert_eq!(f.count_profiles[&3], vec![vec![24]]);
        assert_eq!(f.hull.histogram, BTreeMap::from([(6, 72), (10, 27)]));
    }

    #[test]
    fn corrupted_point_breaks_invariants() {
        let mut w = e6_graph(1).weights;
        w[3].0[0] = &w[3].0[0] + &Rational::new(1, 2);
        let g = IncidenceGraph::from_weights(w);
        assert!(!g.check.all());
    }

    #[test]
    fn rejects_other_types() {
        let rs = RootSystem::build(TypeLabel::A, 3).unwrap();
        let ws = rs
            .weight_system(&rs.fundamental_weight(1).unwrap())
            .unwrap();
        assert!(e6_incidence(&ws).is_err());
    }
}
