//! Certificates that `G ∩ 𝔤` is empty.
//!
//! * Non-minuscule `V`: the highest dual root string through `λ` has length
//!   at least 3, which forces `ρ(g)` to be scalar; a scalar invertible
//!   matrix cannot be trace-free.
//! * E6 on its 27-dimensional representations: the incidence structure of
//!   the weights rules out three distinct eigenvalues, and the facets of
//!   `2_21` rule out two.
//! * E7 on the 56-dimensional representation: self-duality forces the
//!   eigenvalues into `{±i}`, so the weights would lie on two parallel
//!   hyperplanes, which the facets of `3_21` rule out.

mod e6;
mod hull;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, RingScalar};
use crate::rootsys::{RootSystem, ShortRootCertificate, TypeLabel, Weight, WeightSystem};

pub use e6::{e6_case_checks, e6_incidence, E6Facts, IncidenceCheck, IncidenceGraph, TripleRecord};
pub use hull::{affine_dim, hull_facets, Facet, HullCheck, Polytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    RootString,
    E6CaseAnalysis,
    E7Hyperplane,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Facts {
    RootString(Box<RootStringFacts>),
    E6CaseAnalysis(Box<E6Facts>),
    E7Hyperplane(Box<E7Facts>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionCertificate {
    pub case: String,
    pub kind: ObstructionKind,
    pub facts: Facts,
    pub verified: bool,
}

impl ObstructionCertificate {
    /// Recomputes the certificate from the data it embeds and compares.
    pub fn recheck(&self) -> Result<bool> {
        let fresh = match &self.facts {
            Facts::RootString(f) => {
                let rs = RootSystem::build(f.type_label, f.rank)?;
                root_string_obstruction(&rs, &f.highest_weight)?
            }
            Facts::E6CaseAnalysis(f) => {
                let g = IncidenceGraph::from_weights(f.weights.clone());
                e6_case_checks(&g)
            }
            Facts::E7Hyperplane(f) => e7_obstruction_from_weights(f.weights.clone())?,
        };
        Ok(fresh.verified && fresh.facts == self.facts && fresh.kind == self.kind && self.verified)
    }
}

/// Facet statistics of a hull, with the full facet list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullSummary {
    pub vertex_count: usize,
    pub dim: usize,
    pub facet_count: usize,
    pub histogram: BTreeMap<usize, usize>,
    pub max_facet_size: usize,
    /// `2 · max_facet_size < vertex_count`: two parallel supporting
    /// hyperplanes cannot cover every vertex.
    pub two_hyperplanes_impossible: bool,
    pub check: HullCheck,
    pub facets: Vec<Facet>,
}

impl HullSummary {
    pub fn from_points(points: &[Vec<Rational>]) -> Result<Self> {
        let poly = hull_facets(points)?;
        let max = poly.max_facet_size();
        Ok(HullSummary {
            vertex_count: points.len(),
            dim: poly.dim,
            facet_count: poly.facets.len(),
            histogram: poly.histogram(),
            max_facet_size: max,
            two_hyperplanes_impossible: 2 * max < points.len(),
            check: poly.verify(),
            facets: poly.facets,
        })
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.histogram.keys().copied().collect()
    }
}

/// Whether `μ` is a weight of the irreducible representation with
/// highest weight `λ`: `μ` is conjugate to a dominant `ν` with `λ - ν` a
/// nonnegative integer combination of simple roots.
pub fn is_weight_of(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    let mut nu = mu.clone();
    'outer: loop {
        for (i, label) in rs.dynkin_labels(&nu).iter().enumerate() {
            if !label.is_integer() {
                return false;
            }
            if label.is_negative() {
                nu = rs.reflect(i, &nu);
                continue 'outer;
            }
        }
        break;
    }
    // coefficients of λ - ν in the simple roots: ⟨λ - ν, ϖ_i∨⟩ via the
    // fundamental coweights is avoided by solving directly
    let diff = lambda - &nu;
    let cols: Vec<Vec<Rational>> = rs.simple_roots.iter().map(|a| a.0.clone()).collect();
    let m = crate::exact::RatMatrix::from_fn(rs.ambient_dim, rs.rank, |r, c| cols[c][r].clone());
    match m.solve(&diff.0) {
        Some(c) => m.mul_vec(&c) == diff.0 && c.iter().all(|x| x.is_integer() && !x.is_negative()),
        None => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootStringFacts {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub highest_weight: Weight,
    /// `λ = Σ a_i ϖ_i`.
    pub labels: Vec<i64>,
    pub highest_dual_coroot: Weight,
    /// `s = ⟨λ, α∨⟩`.
    pub s: i64,
    pub s_at_least_two: bool,
    /// `s ≥ Σ a_i`, from `⟨ϖ_i, α∨⟩ ≥ 1`.
    pub label_sum: i64,
    pub label_sum_bound: bool,
    /// `(λ, λ - α, λ - 2α)`.
    pub ap_triple: [Weight; 3],
    /// `λ + (λ - 2α) = 2(λ - α)`.
    pub ap_identity: bool,
    /// All three members of the triple are weights of `V`.
    pub ap_triple_in_v: bool,
    pub short_roots: ShortRootCertificate,
    /// `dim V`; a scalar `c·I` with `c ≠ 0` has trace `c·dim V ≠ 0`.
    pub dim_v: Rational,
    pub scalar_trace_nonzero: bool,
}

/// Certificate for a non-minuscule dominant `λ ≠ 0`.
pub fn root_string_obstruction(rs: &RootSystem, lambda: &Weight) -> Result<ObstructionCertificate> {
    let labels = rs.dominant_labels(lambda)?;
    if lambda.is_zero() {
        return Err(Error::InvalidInput(
            "the trivial representation is excluded".into(),
        ));
    }
    if rs.is_minuscule(lambda)? {
        return Err(Error::Minuscule(format!("{} λ={lambda}", rs.name())));
    }
    let coroot = rs.highest_root_dual();
    let s = rs.string_length(lambda)?;
    let alpha = rs.highest_short_root();
    let l1 = lambda - &alpha;
    let l2 = &l1 - &alpha;
    let ap_identity = lambda + &l2 == &l1 + &l1;
    let ap_triple_in_v = [lambda, &l1, &l2]
        .iter()
        .all(|mu| is_weight_of(rs, lambda, mu));
    let label_sum: i64 = labels.iter().sum();
    let short_roots = rs.short_roots_generate()?;
    let dim_v = rs.weyl_dimension(lambda);
    let facts = RootStringFacts {
        type_label: rs.type_label,
        rank: rs.rank,
        highest_weight: lambda.clone(),
        labels,
        highest_dual_coroot: coroot,
        s,
        s_at_least_two: s >= 2,
        label_sum,
        label_sum_bound: s >= label_sum,
        ap_triple: [lambda.clone(), l1, l2],
        ap_identity,
        ap_triple_in_v,
        scalar_trace_nonzero: dim_v.is_positive(),
        dim_v,
        short_roots,
    };
    let verified = facts.s_at_least_two
        && facts.label_sum_bound
        && facts.ap_identity
        && facts.ap_triple_in_v
        && facts.short_roots.verified
        && facts.scalar_trace_nonzero;
    Ok(ObstructionCertificate {
        case: format!("{} λ={lambda}", rs.name()),
        kind: ObstructionKind::RootString,
        facts: Facts::RootString(Box::new(facts)),
        verified,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct E7Facts {
    pub weights: Vec<Weight>,
    /// The weight set is closed under negation.
    pub self_dual: bool,
    pub hull: HullSummary,
}

/// Certificate for E7 acting on its 56-dimensional representation.
pub fn e7_obstruction(rs: &RootSystem) -> Result<ObstructionCertificate> {
    if rs.type_label != TypeLabel::E || rs.rank != 7 {
        return Err(Error::InvalidInput(format!(
            "expected E7, got {}",
            rs.name()
        )));
    }
    let lambda = rs.fundamental_weight(7)?;
    let ws = rs.weight_system(&lambda)?;
    e7_obstruction_from_weights(ws.weights)
}

fn e7_obstruction_from_weights(weights: Vec<Weight>) -> Result<ObstructionCertificate> {
    let set: BTreeSet<&Weight> = weights.iter().collect();
    let self_dual = weights.iter().all(|w| set.contains(&-w));
    let points: Vec<Vec<Rational>> = weights.iter().map(|w| w.0.clone()).collect();
    let hull = HullSummary::from_points(&points)?;
    let verified = self_dual && hull.check.all() && hull.two_hyperplanes_impossible;
    Ok(ObstructionCertificate {
        case: "E7 λ=ϖ7 (56)".into(),
        kind: ObstructionKind::E7Hyperplane,
        facts: Facts::E7Hyperplane(Box::new(E7Facts {
            weights,
            self_dual,
            hull,
        })),
        verified,
    })
}

/// Certificate for an E6 minuscule weight system (either 27).
pub fn e6_obstruction(ws: &WeightSystem) -> Result<ObstructionCertificate> {
    let g = e6_incidence(ws)?;
    Ok(e6_case_checks(&g))
}

/// `s_i + s_j = s_k + s_l` and `s_i s_j = s_k s_l`, for a quadruple with
/// `w_i + w_j = w_k + w_l`.
pub fn quadrangle_holds<S: RingScalar>(
    weights: &[Weight],
    values: &[S],
    quad: [usize; 4],
) -> Result<bool> {
    let [i, j, k, l] = quad;
    if quad
        .iter()
        .any(|&x| x >= weights.len() || x >= values.len())
    {
        return Err(Error::InvalidInput(format!(
            "quadruple {quad:?} out of range"
        )));
    }
    if &weights[i] + &weights[j] != &weights[k] + &weights[l] {
        return Err(Error::InvalidInput(format!(
            "w_{i} + w_{j} ≠ w_{k} + w_{l}"
        )));
    }
    let sums = values[i].add(&values[j]) == values[k].add(&values[l]);
    let prods = values[i].mul(&values[j]) == values[k].mul(&values[l]);
    Ok(sums && prods)
}

/// All `(i, j, k, l)` with `i < j`, `k < l`, `(i, j) < (k, l)` and
/// `w_i + w_j = w_k + w_l`.
pub fn equal_sum_quadruples(weights: &[Weight]) -> Vec<[usize; 4]> {
    let mut by_sum: HashMap<Weight, Vec<(usize, usize)>> = HashMap::new();
    for i in 0..weights.len() {
        for j in i + 1..weights.len() {
            by_sum
                .entry(&weights[i] + &weights[j])
                .or_default()
                .push((i, j));
        }
    }
    let mut out = Vec::new();
    for pairs in by_sum.values() {
        for (a, &(i, j)) in pairs.iter().enumerate() {
            for &(k, l) in &pairs[a + 1..] {
                out.push([i, j, k, l]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Over a field of characteristic 0, `a + c = 2b` and `ac = b²` force
/// `a = b = c`, since `(a - c)² = (a + c)² - 4ac = 4b² - 4b² = 0`.
/// Returns whether the hypotheses hold and, if so, whether the values
/// are equal.
pub fn ap_consequence<S: RingScalar>(a: &S, b: &S, c: &S) -> (bool, bool) {
    let two_b = b.add(b);
    let hyp = a.add(c) == two_b && a.mul(c) == b.mul(b);
    (hyp, a == b && b == c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational;
    use crate::witness::slm_wedge_witness;

    fn rs(t: TypeLabel, r: usize) -> RootSystem {
        RootSystem::build(t, r).unwrap()
    }

    #[test]
    fn root_string_a1_adjoint() {
        let a1 = rs(TypeLabel::A, 1);
        let cert = root_string_obstruction(&a1, &a1.weight_from_labels(&[2]).unwrap()).unwrap();
        assert!(cert.verified);
        let Facts::RootString(f) = &cert.facts else {
            panic!()
        };
        assert_eq!(f.s, 2);
        assert_eq!(f.dim_v, Rational::integer(3));
        assert!(cert.recheck().unwrap());
    }

    #[test]
    fn root_string_c3_w3_and_a2_adjoint() {
        let c3 = rs(TypeLabel::C, 3);
        let cert = root_string_obstruction(&c3, &c3.fundamental_weights[2]).unwrap();
        let Facts::RootString(f) = &cert.facts else {
            panic!()
        };
        assert_eq!(f.s, 2);
        assert!(cert.verified);

        let a2 = rs(TypeLabel::A, 2);
        let cert = root_string_obstruction(&a2, &a2.weight_from_labels(&[1, 1]).unwrap()).unwrap();
        let Facts::RootString(f) = &cert.facts else {
            panic!()
        };
        assert!(f.s >= 2 && f.label_sum == 2 && f.label_sum_bound);
        assert!(cert.verified);
    }

    #[test]
    fn root_string_rejects_minuscule_and_zero() {
        let a2 = rs(TypeLabel::A, 2);
        assert!(matches!(
            root_string_obstruction(&a2, &a2.fundamental_weights[0]),
            Err(Error::Minuscule(_))
        ));
        assert!(root_string_obstruction(&a2, &Weight::zero(3)).is_err());
    }

    #[test]
    fn weight_membership() {
        let a1 = rs(TypeLabel::A, 1);
        let adj = a1.weight_from_labels(&[2]).unwrap();
        assert!(is_weight_of(&a1, &adj, &Weight::zero(2)));
        assert!(!is_weight_of(&a1, &adj, &a1.fundamental_weights[0]));
        let four = a1.weight_from_labels(&[4]).unwrap();
        assert!(!is_weight_of(&a1, &adj, &four));
    }

    #[test]
    fn quadrangle_contract() {
        let ws: Vec<Weight> = [[1, 0], [0, 1], [1, 1], [0, 0]]
            .iter()
            .map(|v| Weight::from_i64(v))
            .collect();
        let i = GaussianRational::i();
        let mi = -&i;
        // w0 + w1 = w2 + w3
        let good = vec![i.clone(), mi.clone(), i.clone(), mi.clone()];
        assert!(quadrangle_holds(&ws, &good, [0, 1, 2, 3]).unwrap());
        let q = |n| GaussianRational::real(Rational::integer(n));
        let bad = vec![q(1), q(2), q(3), q(0)];
        assert!(!quadrangle_holds(&ws, &bad, [0, 1, 2, 3]).unwrap());
        assert!(quadrangle_holds(&ws, &bad, [0, 2, 1, 3]).is_err());
    }

    #[test]
    fn witness_values_satisfy_quadrangle() {
        let w = slm_wedge_witness(4, 2).unwrap();
        let crate::witness::Diagonal::Quotient { group, .. } = &w.diag else {
            panic!()
        };
        let quads = equal_sum_quadruples(&w.weights);
        assert!(!quads.is_empty());
        for q in quads {
            assert!(quadrangle_holds(&w.weights, group, q).unwrap());
        }
    }

    #[test]
    fn ap_consequence_on_rationals() {
        let q = |n| GaussianRational::real(Rational::integer(n));
        assert_eq!(ap_consequence(&q(3), &q(3), &q(3)), (true, true));
        assert!(!ap_consequence(&q(1), &q(2), &q(3)).0);
    }
}
