//! Explicit elements of `G ∩ 𝔤` for classical minuscule representations.
//!
//! Two constructions are provided:
//!
//! * `∧^j C^m` of `SL_m`: `g = diag(a, …, a, a^{1-m})` with `a^m = j/(j-m)`.
//!   The witness is computed in `Q[t]/(t^m - j/(j-m))`, so the identity
//!   `ρ(g) = ρ∗(x)` is proved for every choice of `a` at once.
//! * Self-dual minuscule representations of types B, C, D: any torus
//!   element `x` with every weight value in `{±i}` lies in `ρ(T)`. Membership
//!   is certified on a Hermite basis of the integer relation lattice of the
//!   weights.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    dot, hnf_kernel, GaussianRational, IntMatrix, Modulus, QuotientRingElement, Rational,
    RingScalar,
};
use crate::rootsys::{RootSystem, TypeLabel, Weight, WeightSystem};

/// Which exact ring the diagonal entries live in.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingTag {
    GaussianRational,
    Quotient { modulus: Modulus },
}

/// Eigenvalues of `ρ(g)` and of `ρ∗(x)` on the weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "ring", rename_all = "snake_case")]
pub enum Diagonal {
    Gaussian {
        group: Vec<GaussianRational>,
        algebra: Vec<GaussianRational>,
    },
    Quotient {
        group: Vec<QuotientRingElement>,
        algebra: Vec<QuotientRingElement>,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessChecks {
    pub entrywise_equal: bool,
    pub trace_zero: bool,
    pub relations_ok: bool,
}

impl WitnessChecks {
    pub fn all(&self) -> bool {
        self.entrywise_equal && self.trace_zero && self.relations_ok
    }
}

/// Data specific to the exterior-power construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeData {
    pub m: usize,
    pub j: usize,
    /// Index tuples `i_1 > … > i_j` of the basis, in lexicographic order.
    pub basis: Vec<Vec<usize>>,
    /// `diag(a, …, a, a^{1-m})` in `SL_m`.
    pub g: Vec<QuotientRingElement>,
    /// The trace-free diagonal `x` in `sl_m`.
    pub x: Vec<QuotientRingElement>,
    /// `det g = 1` and `tr x = 0`.
    pub g_in_sl: bool,
    pub x_in_sl: bool,
    /// The closed form `(a^j / j)·(j, …, j, j-m, …, j-m)` matches the
    /// algebra diagonal.
    pub closed_form_matches: bool,
}

/// Recomputes `ρ(g)` and `ρ∗(x)` from `g`, `x` and the basis tuples.
fn wedge_consistent(
    w: &WedgeData,
    group: &[QuotientRingElement],
    algebra: &[QuotientRingElement],
) -> Result<bool> {
    let (m, j) = (w.m, w.j);
    if m < 2 || j == 0 || j >= m || w.g.len() != m || w.x.len() != m || w.basis != wedge_basis(m, j)
    {
        return Ok(false);
    }
    if group.len() != w.basis.len() || algebra.len() != w.basis.len() {
        return Ok(false);
    }
    let modulus = w.g[0].modulus().clone();
    let (mi, ji) = (m as i64, j as i64);
    if modulus != Modulus::new(m, Rational::new(ji, ji - mi))? {
        return Ok(false);
    }
    let t = QuotientRingElement::t(&modulus);
    let g_ok = w.g[..m - 1].iter().all(|e| *e == t)
        && w.g
            .iter()
            .fold(QuotientRingElement::one(&modulus), |acc, e| &acc * e)
            .is_one();
    let c = t.pow(ji)?.scale(&Rational::new(1, ji));
    let x_ok = w.x[..m - 1].iter().all(|e| *e == c) && sum(&w.x).is_zero();
    let mut entries_ok = true;
    for (k, tuple) in w.basis.iter().enumerate() {
        let ge = tuple
            .iter()
            .fold(QuotientRingElement::one(&modulus), |acc, &i| {
                &acc * &w.g[i - 1]
            });
        let xe = tuple
            .iter()
            .fold(QuotientRingElement::zero(&modulus), |acc, &i| {
                &acc + &w.x[i - 1]
            });
        let factor = if tuple.contains(&m) { ji - mi } else { ji };
        entries_ok &=
            ge == group[k] && xe == algebra[k] && c.scale(&Rational::integer(factor)) == xe;
    }
    Ok(g_ok && x_ok && entries_ok && w.g_in_sl && w.x_in_sl && w.closed_form_matches)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub case: String,
    pub ring: RingTag,
    /// Weights aligned with the diagonal entries.
    pub weights: Vec<Weight>,
    pub diag: Diagonal,
    /// Hermite basis of `{a ∈ Z^n : Σ a_j w_j = 0}`.
    pub relations: Vec<Vec<i64>>,
    /// Per relation: `Π group_j^{a_j} = 1`.
    pub relation_flags: Vec<bool>,
    /// For the `±i` construction: the vector `v` with `⟨w_j, v⟩ = ±1`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_vector: Option<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedge: Option<WedgeData>,
    pub checks: WitnessChecks,
}

fn relation_product_is_one<S: RingScalar>(values: &[S], relation: &[i64]) -> Result<bool> {
    let mut acc = values[0].one_like();
    for (s, &a) in values.iter().zip(relation) {
        if a != 0 {
            acc = acc.mul(&s.pow(a)?);
        }
    }
    Ok(acc.is_one())
}

fn sum<S: RingScalar>(values: &[S]) -> S {
    values
        .iter()
        .fold(values[0].zero_like(), |acc, s| acc.add(s))
}

/// Integer relation lattice of a list of weights, as small integers.
pub fn relation_lattice(weights: &[Weight]) -> Result<Vec<Vec<i64>>> {
    let dim = weights.first().map_or(0, Weight::dim);
    // column j of A is the weight w_j
    let rows: Vec<Vec<Rational>> = (0..dim)
        .map(|k| weights.iter().map(|w| w.0[k].clone()).collect())
        .collect();
    let a = IntMatrix::from_rational_cleared(&rows, weights.len());
    hnf_kernel(&a)
        .into_iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    x.to_i64()
                        .ok_or_else(|| Error::Inconsistent(format!("relation entry {x} overflows")))
                })
                .collect()
        })
        .collect()
}

fn relation_in_kernel(weights: &[Weight], relation: &[i64]) -> bool {
    let dim = weights.first().map_or(0, Weight::dim);
    (0..dim).all(|k| {
        weights
            .iter()
            .zip(relation)
            .filter(|(_, &a)| a != 0)
            .map(|(w, &a)| &w.0[k] * &Rational::integer(a))
            .sum::<Rational>()
            .is_zero()
    })
}

impl Witness {
    pub fn group_len(&self) -> usize {
        match &self.diag {
            Diagonal::Gaussian { group, .. } => group.len(),
            Diagonal::Quotient { group, .. } => group.len(),
        }
    }

    fn compute_checks_generic<S: RingScalar>(
        &self,
        group: &[S],
        algebra: &[S],
    ) -> Result<(WitnessChecks, Vec<bool>)> {
        let n = self.weights.len();
        if group.len() != n || algebra.len() != n || n == 0 {
            return Ok((WitnessChecks::default(), vec![false; self.relations.len()]));
        }
        let entrywise_equal = group == algebra;
        let trace_zero = sum(algebra).is_zero();
        let mut flags = Vec::with_capacity(self.relations.len());
        for r in &self.relations {
            let ok = r.len() == n
                && relation_in_kernel(&self.weights, r)
                && relation_product_is_one(group, r)?;
            flags.push(ok);
        }
        let canonical = relation_lattice(&self.weights)? == self.relations;
        let relations_ok = canonical && flags.iter().all(|&f| f);
        Ok((
            WitnessChecks {
                entrywise_equal,
                trace_zero,
                relations_ok,
            },
            flags,
        ))
    }

    /// Recomputes every check from the stored data alone.
    pub fn recheck(&self) -> Result<(WitnessChecks, Vec<bool>)> {
        let (mut checks, flags) = match &self.diag {
            Diagonal::Gaussian { group, algebra } => self.compute_checks_generic(group, algebra)?,
            Diagonal::Quotient { group, algebra } => self.compute_checks_generic(group, algebra)?,
        };
        if let Some(v) = &self.sign_vector {
            let signs_ok = self.weights.iter().all(|w| {
                let p = dot(&w.0, v);
                p == Rational::one() || p == -Rational::one()
            });
            checks.relations_ok &= signs_ok;
        }
        if let Some(w) = &self.wedge {
            checks.entrywise_equal &= match &self.diag {
                Diagonal::Quotient { group, algebra } => wedge_consistent(w, group, algebra)?,
                Diagonal::Gaussian { .. } => false,
            };
        }
        Ok((checks, flags))
    }

    /// All checks pass and the stored flags agree with a fresh recheck.
    pub fn verified(&self) -> bool {
        match self.recheck() {
            Ok((checks, flags)) => {
                checks.all() && checks == self.checks && flags == self.relation_flags
            }
            Err(_) => false,
        }
    }

    fn finalize(mut self) -> Result<Self> {
        let (checks, flags) = self.recheck()?;
        self.checks = checks;
        self.relation_flags = flags;
        Ok(self)
    }
}

/// Index tuples `i_1 > … > i_j` drawn from `1..=m`, in lexicographic order.
pub fn wedge_basis(m: usize, j: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, j: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == j {
            let mut t = cur.clone();
            t.reverse();
            out.push(t);
            return;
        }
        for i in start..=m {
            cur.push(i);
            rec(i + 1, m, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, m, j, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// The witness for `SL_m` acting on `∧^j C^m`.
pub fn slm_wedge_witness(m: usize, j: usize) -> Result<Witness> {
    if m < 2 || j == 0 || j >= m {
        return Err(Error::InvalidInput(format!(
            "∧^{j} C^{m} needs m ≥ 2 and 1 ≤ j ≤ m-1"
        )));
    }
    let (mi, ji) = (m as i64, j as i64);
    let modulus = Modulus::new(m, Rational::new(ji, ji - mi))?;
    let t = QuotientRingElement::t(&modulus);

    let a_top = t.pow(1 - mi)?;
    let g: Vec<QuotientRingElement> = (1..=m)
        .map(|i| if i < m { t.clone() } else { a_top.clone() })
        .collect();
    let c = t.pow(ji)?.scale(&Rational::new(1, ji));
    let x: Vec<QuotientRingElement> = (1..=m)
        .map(|i| {
            if i < m {
                c.clone()
            } else {
                c.scale(&Rational::integer(1 - mi))
            }
        })
        .collect();
    let g_in_sl = g
        .iter()
        .fold(QuotientRingElement::one(&modulus), |acc, e| &acc * e)
        .is_one();
    let x_in_sl = sum(&x).is_zero();

    let basis = wedge_basis(m, j);
    let shift = Rational::new(ji, mi);
    let mut weights = Vec::with_capacity(basis.len());
    let mut group = Vec::with_capacity(basis.len());
    let mut algebra = Vec::with_capacity(basis.len());
    let mut closed_form_matches = true;
    let scale = t.pow(ji)?.scale(&Rational::new(1, ji));
    for tuple in &basis {
        let mut w = vec![-&shift; m];
        for &i in tuple {
            w[i - 1] += Rational::one();
        }
        weights.push(Weight(w));
        let ge = tuple
            .iter()
            .fold(QuotientRingElement::one(&modulus), |acc, &i| {
                &acc * &g[i - 1]
            });
        let xe = tuple
            .iter()
            .fold(QuotientRingElement::zero(&modulus), |acc, &i| {
                &acc + &x[i - 1]
            });
        let factor = if tuple.contains(&m) { ji - mi } else { ji };
        closed_form_matches &= scale.scale(&Rational::integer(factor)) == xe;
        group.push(ge);
        algebra.push(xe);
    }

    let relations = relation_lattice(&weights)?;
    Witness {
        case: format!("A{} ∧^{j} C^{m}", m - 1),
        ring: RingTag::Quotient { modulus },
        weights,
        diag: Diagonal::Quotient { group, algebra },
        relations,
        relation_flags: Vec::new(),
        sign_vector: None,
        wedge: Some(WedgeData {
            m,
            j,
            basis,
            g,
            x,
            g_in_sl,
            x_in_sl,
            closed_form_matches,
        }),
        checks: WitnessChecks::default(),
    }
    .finalize()
}

/// Incremental echelon form of the linear system `⟨w_k, v⟩ = ε_k`.
struct SignSystem {
    dim: usize,
    /// (coefficients, pivot column, rhs)
    rows: Vec<(Vec<Rational>, usize, Rational)>,
}

enum Reduced {
    /// The equation is implied by earlier ones; its right side must be this.
    Forced(Rational),
    /// Independent: reduced coefficients, pivot, and the rhs offset to add
    /// to the chosen sign.
    Free(Vec<Rational>, usize, Rational),
}

impl SignSystem {
    fn reduce(&self, w: &Weight) -> Reduced {
        let mut coeffs = w.0.clone();
        let mut offset = Rational::zero();
        for (row, p, rhs) in &self.rows {
            if coeffs[*p].is_zero() {
                continue;
            }
            let f = &coeffs[*p] / &row[*p];
            for (c, r) in coeffs.iter_mut().zip(row) {
                if !r.is_zero() {
                    *c -= &f * r;
                }
            }
            offset -= &f * rhs;
        }
        match coeffs.iter().position(|c| !c.is_zero()) {
            None => Reduced::Forced(-offset),
            Some(p) => Reduced::Free(coeffs, p, offset),
        }
    }

    /// Back substitution with free variables set to zero.
    fn solution(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim];
        for (row, p, rhs) in self.rows.iter().rev() {
            let rest: Rational = row
                .iter()
                .enumerate()
                .filter(|(k, _)| k != p)
                .map(|(k, c)| c * &v[k])
                .sum();
            v[*p] = (rhs - &rest) / &row[*p];
        }
        v
    }
}

fn sign_dfs(weights: &[Weight], k: usize, sys: &mut SignSystem) -> bool {
    if k == weights.len() {
        return true;
    }
    match sys.reduce(&weights[k]) {
        Reduced::Forced(value) => {
            (value == Rational::one() || value == -Rational::one()) && sign_dfs(weights, k + 1, sys)
        }
        Reduced::Free(coeffs, pivot, offset) => {
            for eps in [1, -1] {
                let rhs = Rational::integer(eps) + &offset;
                sys.rows.push((coeffs.clone(), pivot, rhs));
                if sign_dfs(weights, k + 1, sys) {
                    return true;
                }
                sys.rows.pop();
            }
            false
        }
    }
}

/// A vector `v` with `⟨w, v⟩ ∈ {±1}` for every weight `w` of `ws`.
///
/// Depth-first search over sign assignments in weight order, trying `+1`
/// before `-1`, pruning as soon as the linear system becomes inconsistent.
pub fn pm_one_vector(ws: &WeightSystem) -> Result<Vec<Rational>> {
    let dim = ws.root_system.ambient_dim;
    let mut sys = SignSystem {
        dim,
        rows: Vec::new(),
    };
    if !sign_dfs(&ws.weights, 0, &mut sys) {
        return Err(Error::NoSignVector(format!(
            "{} λ={}",
            ws.root_system.name(),
            ws.highest_weight
        )));
    }
    let v = sys.solution();
    let ok = ws.weights.iter().all(|w| {
        let p = dot(&w.0, &v);
        p == Rational::one() || p == -Rational::one()
    });
    if !ok {
        return Err(Error::Inconsistent(
            "sign search returned an invalid vector".into(),
        ));
    }
    Ok(v)
}

/// The torus element with `t∗_j(x) = ⟨w_j, v⟩·i`, certified to lie in `ρ(T)`.
pub fn pm_i_torus_witness(ws: &WeightSystem, v: &[Rational]) -> Result<Witness> {
    let one = Rational::one();
    let mut signs = Vec::with_capacity(ws.len());
    for w in &ws.weights {
        let p = dot(&w.0, v);
        if p == one {
            signs.push(1i64);
        } else if p == -&one {
            signs.push(-1);
        } else {
            return Err(Error::InvalidInput(format!("⟨{w}, v⟩ = {p} is not ±1")));
        }
    }
    let i = GaussianRational::i();
    let algebra: Vec<GaussianRational> = signs
        .iter()
        .map(|&e| if e == 1 { i.clone() } else { -&i })
        .collect();
    let relations = relation_lattice(&ws.weights)?;
    for r in &relations {
        let s: i64 = r.iter().zip(&signs).map(|(a, e)| a * e).sum();
        if s != 0 {
            return Err(Error::RelationViolated {
                relation: r.clone(),
                sum: s,
            });
        }
    }
    Witness {
        case: format!(
            "{} λ={} ±i torus element",
            ws.root_system.name(),
            ws.highest_weight
        ),
        ring: RingTag::GaussianRational,
        weights: ws.weights.clone(),
        diag: Diagonal::Gaussian {
            group: algebra.clone(),
            algebra,
        },
        relations,
        relation_flags: Vec::new(),
        sign_vector: Some(v.to_vec()),
        wedge: None,
        checks: WitnessChecks::default(),
    }
    .finalize()
}

/// Builds and verifies a witness for a classical minuscule `(type, λ)`.
pub fn classical_minuscule_witness(
    type_label: TypeLabel,
    rank: usize,
    lambda: &Weight,
) -> Result<Witness> {
    let rs = RootSystem::build(type_label, rank)?;
    let minuscule = rs.is_minuscule(lambda)?;
    let name = format!("{} λ={lambda}", rs.name());
    if !minuscule {
        return Err(Error::NotMinuscule(name));
    }
    if !type_label.is_classical() {
        return Err(Error::ObstructionCase(name));
    }
    let witness = match type_label {
        TypeLabel::A => {
            let labels = rs.dominant_labels(lambda)?;
            let j = labels
                .iter()
                .position(|&a| a == 1)
                .expect("minuscule weight is fundamental")
                + 1;
            let w = slm_wedge_witness(rank + 1, j)?;
            let orbit: BTreeSet<Weight> = rs.weyl_orbit(lambda).into_iter().collect();
            let wedge: BTreeSet<Weight> = w.weights.iter().cloned().collect();
            if orbit != wedge {
                return Err(Error::Inconsistent(format!(
                    "{name}: wedge weights differ from the orbit"
                )));
            }
            w
        }
        _ => {
            let ws = rs.weight_system(lambda)?;
            let v = pm_one_vector(&ws)?;
            pm_i_torus_witness(&ws, &v)?
        }
    };
    if !witness.checks.all() {
        return Err(Error::Inconsistent(format!(
            "{name}: witness failed its checks"
        )));
    }
    Ok(witness)
}

/// The `±1` vectors listed for types B, C, D with highest weight `λ`
/// (1-based fundamental index), for comparison with the solver.
pub fn listed_sign_vector(
    type_label: TypeLabel,
    rank: usize,
    index: usize,
) -> Option<Vec<Rational>> {
    let lead = match (type_label, index) {
        (TypeLabel::B, i) if i == rank => Rational::one(),
        (TypeLabel::C, 1) => Rational::new(1, 2),
        (TypeLabel::D, 1) => Rational::new(1, 2),
        (TypeLabel::D, i) if i + 1 == rank || i == rank => Rational::one(),
        _ => return None,
    };
    let mut v = vec![Rational::zero(); rank];
    v[0] = lead;
    Some(v)
}

/// Whether `v` pairs to `±1` with every weight.
pub fn is_sign_vector(weights: &[Weight], v: &[Rational]) -> bool {
    weights.iter().all(|w| {
        let p = dot(&w.0, v);
        p.abs().is_one()
    })
}

/// Converts a relation to `BigInt`s.
pub fn relation_to_big(r: &[i64]) -> Vec<BigInt> {
    r.iter().map(|&x| BigInt::from(x)).collect()
}
