//! Root systems in Bourbaki coordinates, Weyl orbits and minuscule weights.
//!
//! Coordinates follow the Bourbaki tables: `A_r` lives in the sum-zero
//! hyperplane of `Q^{r+1}`, `B_r`, `C_r`, `D_r` and `F_4` in `Q^r`, `G_2`
//! in the sum-zero hyperplane of `Q^3`, and `E_6`, `E_7`, `E_8` in `Q^8`.
//! Fundamental weights are taken inside the span of the roots.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{dot, RatMatrix, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl TypeLabel {
    pub const ALL: [TypeLabel; 7] = [
        TypeLabel::A,
        TypeLabel::B,
        TypeLabel::C,
        TypeLabel::D,
        TypeLabel::E,
        TypeLabel::F,
        TypeLabel::G,
    ];

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            TypeLabel::A | TypeLabel::B | TypeLabel::C | TypeLabel::D
        )
    }

    pub fn letter(self) -> char {
        match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        TypeLabel::ALL
            .into_iter()
            .find(|t| t.letter() == c.to_ascii_uppercase())
    }

    /// Whether `(self, rank)` names a root system.
    pub fn is_legal(self, rank: usize) -> bool {
        match self {
            TypeLabel::A => rank >= 1,
            TypeLabel::B | TypeLabel::C => rank >= 2,
            TypeLabel::D => rank >= 3,
            TypeLabel::E => (6..=8).contains(&rank),
            TypeLabel::F => rank == 4,
            TypeLabel::G => rank == 2,
        }
    }

    /// Legal ranks up to `max_rank`, in increasing order.
    pub fn legal_ranks(self, max_rank: usize) -> Vec<usize> {
        (1..=max_rank).filter(|&r| self.is_legal(r)).collect()
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A vector of the ambient space, read as a weight (or root) through the
/// normalized inner product of its root system.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<Rational>);

impl Weight {
    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, k: &Rational) -> Weight {
        Weight(self.0.iter().map(|x| x * k).collect())
    }

    pub fn from_i64(v: &[i64]) -> Weight {
        Weight(v.iter().map(|&x| Rational::integer(x)).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Sorts weights into the canonical order: lexicographically descending.
pub fn canonical_sort(weights: &mut [Weight]) {
    weights.sort_by(|a, b| b.cmp(a));
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub type_label: TypeLabel,
    pub rank: usize,
    pub ambient_dim: usize,
    pub simple_roots: Vec<Weight>,
    /// Positive roots ordered by height, then by discovery.
    pub positive_roots: Vec<Weight>,
    /// Coefficients of each positive root in the simple roots.
    pub positive_root_coeffs: Vec<Vec<i64>>,
    pub fundamental_weights: Vec<Weight>,
    /// Global factor applied to the standard dot product.
    pub gram_scale: Rational,
}

fn unit(dim: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::one();
    v
}

fn eps_diff(dim: usize, i: usize, j: usize) -> Weight {
    let mut v = unit(dim, i);
    v[j] = Rational::integer(-1);
    Weight(v)
}

fn half_vec(signs: &[i64]) -> Weight {
    Weight(signs.iter().map(|&s| Rational::new(s, 2)).collect())
}

fn simple_roots(t: TypeLabel, r: usize) -> (usize, Vec<Weight>) {
    match t {
        TypeLabel::A => (r + 1, (0..r).map(|i| eps_diff(r + 1, i, i + 1)).collect()),
        TypeLabel::B => {
            let mut s: Vec<Weight> = (0..r - 1).map(|i| eps_diff(r, i, i + 1)).collect();
            s.push(Weight(unit(r, r - 1)));
            (r, s)
        }
        TypeLabel::C => {
            let mut s: Vec<Weight> = (0..r - 1).map(|i| eps_diff(r, i, i + 1)).collect();
            let mut last = vec![Rational::zero(); r];
            last[r - 1] = Rational::integer(2);
            s.push(Weight(last));
            (r, s)
        }
        TypeLabel::D => {
            let mut s: Vec<Weight> = (0..r - 1).map(|i| eps_diff(r, i, i + 1)).collect();
            let mut last = vec![Rational::zero(); r];
            last[r - 2] = Rational::one();
            last[r - 1] = Rational::one();
            s.push(Weight(last));
            (r, s)
        }
        TypeLabel::E => {
            let mut s = vec![half_vec(&[1, -1, -1, -1, -1, -1, -1, 1])];
            let mut a2 = unit(8, 0);
            a2[1] = Rational::one();
            s.push(Weight(a2));
            for k in 0..6 {
                s.push(eps_diff(8, k + 1, k));
            }
            s.truncate(r);
            (8, s)
        }
        TypeLabel::F => (
            4,
            vec![
                eps_diff(4, 1, 2),
                eps_diff(4, 2, 3),
                Weight(unit(4, 3)),
                half_vec(&[1, -1, -1, -1]),
            ],
        ),
        TypeLabel::G => (3, vec![eps_diff(3, 0, 1), Weight::from_i64(&[-2, 1, 1])]),
    }
}

impl RootSystem {
    pub fn build(type_label: TypeLabel, rank: usize) -> Result<Self> {
        if !type_label.is_legal(rank) {
            return Err(Error::IllegalRootSystem(type_label.letter(), rank));
        }
        let (ambient_dim, simple_roots) = simple_roots(type_label, rank);
        let mut rs = RootSystem {
            type_label,
            rank,
            ambient_dim,
            simple_roots,
            positive_roots: Vec::new(),
            positive_root_coeffs: Vec::new(),
            fundamental_weights: Vec::new(),
            gram_scale: Rational::one(),
        };
        rs.positive_root_coeffs = rs.close_positive_roots();
        rs.positive_roots = rs
            .positive_root_coeffs
            .iter()
            .map(|c| rs.combine(c))
            .collect();
        rs.fundamental_weights = rs.solve_fundamental_weights()?;
        Ok(rs)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.type_label, self.rank)
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> Rational {
        &self.gram_scale * dot(&a.0, &b.0)
    }

    /// `2β / (β, β)`.
    pub fn coroot(&self, beta: &Weight) -> Weight {
        let n = self.inner(beta, beta);
        beta.scale(&(Rational::integer(2) / n))
    }

    /// `⟨λ, β∨⟩ = 2(λ, β)/(β, β)`.
    pub fn pairing(&self, lambda: &Weight, beta: &Weight) -> Rational {
        Rational::integer(2) * self.inner(lambda, beta) / self.inner(beta, beta)
    }

    /// Cartan integers `⟨α_i, α_j∨⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.simple_roots
            .iter()
            .map(|ai| {
                self.simple_roots
                    .iter()
                    .map(|aj| {
                        self.pairing(ai, aj)
                            .to_i64()
                            .expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect()
    }

    fn combine(&self, coeffs: &[i64]) -> Weight {
        let mut v = vec![Rational::zero(); self.ambient_dim];
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            if *c == 0 {
                continue;
            }
            let c = Rational::integer(*c);
            for (x, y) in v.iter_mut().zip(&a.0) {
                *x += &c * y;
            }
        }
        Weight(v)
    }

    /// Closure from the simple roots using root strings: for a positive
    /// root `β ≠ α_i`, `β + α_i` is a root iff `p - ⟨β, α_i∨⟩ > 0`, where
    /// `p` is the largest `k` with `β - kα_i` a root.
    fn close_positive_roots(&self) -> Vec<Vec<i64>> {
        let cartan = self.cartan_matrix();
        let r = self.rank;
        let mut roots: Vec<Vec<i64>> = (0..r)
            .map(|i| (0..r).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut known: BTreeSet<Vec<i64>> = roots.iter().cloned().collect();
        let mut queue: VecDeque<usize> = (0..r).collect();
        while let Some(idx) = queue.pop_front() {
            let beta = roots[idx].clone();
            for i in 0..r {
                if beta
                    .iter()
                    .enumerate()
                    .all(|(j, &c)| c == i64::from(i == j))
                {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pair: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pair > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        roots.push(up);
                        queue.push_back(roots.len() - 1);
                    }
                }
            }
        }
        roots.sort_by_key(|c| c.iter().sum::<i64>());
        roots
    }

    fn solve_fundamental_weights(&self) -> Result<Vec<Weight>> {
        let r = self.rank;
        // Σ_k c_k ⟨α_k, α_j∨⟩ = δ_ij
        let cartan = self.cartan_matrix();
        let system = RatMatrix::from_fn(r, r, |j, k| Rational::integer(cartan[k][j]));
        (0..r)
            .map(|i| {
                let rhs: Vec<Rational> = (0..r)
                    .map(|j| Rational::integer(i64::from(i == j)))
                    .collect();
                let c = system
                    .solve(&rhs)
                    .ok_or_else(|| Error::Inconsistent("singular Cartan matrix".into()))?;
                let mut v = vec![Rational::zero(); self.ambient_dim];
                for (ck, a) in c.iter().zip(&self.simple_roots) {
                    for (x, y) in v.iter_mut().zip(&a.0) {
                        *x += ck * y;
                    }
                }
                Ok(Weight(v))
            })
            .collect()
    }

    /// All roots, positive then negative.
    pub fn roots(&self) -> Vec<Weight> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|b| -b));
        all
    }

    pub fn highest_root(&self) -> &Weight {
        self.positive_roots.last().expect("nonempty root system")
    }

    /// The weight `Σ a_i ϖ_i`.
    pub fn weight_from_labels(&self, labels: &[i64]) -> Result<Weight> {
        if labels.len() != self.rank {
            return Err(Error::InvalidInput(format!(
                "{} expects {} coefficients, got {}",
                self.name(),
                self.rank,
                labels.len()
            )));
        }
        let mut v = Weight::zero(self.ambient_dim);
        for (a, w) in labels.iter().zip(&self.fundamental_weights) {
            v = &v + &w.scale(&Rational::integer(*a));
        }
        Ok(v)
    }

    pub fn fundamental_weight(&self, i: usize) -> Result<Weight> {
        if i == 0 || i > self.rank {
            return Err(Error::InvalidInput(format!(
                "{} has fundamental weights 1..={}, got {i}",
                self.name(),
                self.rank
            )));
        }
        Ok(self.fundamental_weights[i - 1].clone())
    }

    /// `⟨λ, α_i∨⟩` for every simple root.
    pub fn dynkin_labels(&self, lambda: &Weight) -> Vec<Rational> {
        self.simple_roots
            .iter()
            .map(|a| self.pairing(lambda, a))
            .collect()
    }

    /// Dynkin labels of a dominant integral weight, or an error.
    pub fn dominant_labels(&self, lambda: &Weight) -> Result<Vec<i64>> {
        self.dynkin_labels(lambda)
            .into_iter()
            .map(|x| match x.to_i64() {
                Some(v) if v >= 0 => Ok(v),
                _ => Err(Error::NotDominant(lambda.to_string())),
            })
            .collect()
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let a = &self.simple_roots[i];
        let k = self.pairing(w, a);
        if k.is_zero() {
            return w.clone();
        }
        w - &a.scale(&k)
    }

    /// Weyl orbit of `w` by breadth-first closure under simple
    /// reflections, in canonical order.
    pub fn weyl_orbit(&self, w: &Weight) -> Vec<Weight> {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                let y = self.reflect(i, &x);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().rev().collect()
    }

    /// The coroot `α∨` of the highest root of the dual root system, i.e.
    /// the positive coroot of greatest height in the simple coroots.
    pub fn highest_root_dual(&self) -> Weight {
        let height = |b: &Weight| -> Rational {
            let cb = self.coroot(b);
            self.fundamental_weights
                .iter()
                .map(|w| self.inner(w, &cb))
                .sum()
        };
        let best = self
            .positive_roots
            .iter()
            .max_by(|x, y| height(x).cmp(&height(y)))
            .expect("nonempty root system");
        self.coroot(best)
    }

    /// The root `α` whose coroot is [`Self::highest_root_dual`].
    pub fn highest_short_root(&self) -> Weight {
        let c = self.highest_root_dual();
        let n = self.inner(&c, &c);
        c.scale(&(Rational::integer(2) / n))
    }

    /// `s = ⟨λ, α∨⟩` for the highest dual root; the `α∨`-string of weights
    /// through a dominant `λ` has length `s + 1`.
    pub fn string_length(&self, lambda: &Weight) -> Result<i64> {
        self.dominant_labels(lambda)?;
        let s = self.inner(lambda, &self.highest_root_dual());
        s.to_i64()
            .ok_or_else(|| Error::Inconsistent(format!("non-integral pairing {s}")))
    }

    /// Weyl dimension formula `Π_{β>0} (λ+ρ, β)/(ρ, β)`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Rational {
        let rho = self
            .fundamental_weights
            .iter()
            .fold(Weight::zero(self.ambient_dim), |a, w| &a + w);
        let shifted = lambda + &rho;
        self.positive_roots
            .iter()
            .map(|b| self.inner(&shifted, b) / self.inner(&rho, b))
            .product()
    }

    /// `λ ≠ 0` and `⟨λ, α∨⟩ = 1`. A positive answer is cross-checked:
    /// the Weyl orbit of `λ` must have exactly `dim V` elements.
    pub fn is_minuscule(&self, lambda: &Weight) -> Result<bool> {
        if self.string_length(lambda)? != 1 {
            return Ok(false);
        }
        let orbit = self.weyl_orbit(lambda).len();
        let dim = self.weyl_dimension(lambda);
        if Rational::integer(orbit as i64) != dim {
            return Err(Error::Inconsistent(format!(
                "{} λ={lambda}: orbit has {orbit} weights but dim V = {dim}",
                self.name()
            )));
        }
        Ok(true)
    }

    pub fn short_root_norm(&self) -> Rational {
        self.roots()
            .iter()
            .map(|b| self.inner(b, b))
            .min()
            .expect("nonempty")
    }

    /// Writes each simple root as an integer combination of short roots.
    pub fn short_roots_generate(&self) -> Result<ShortRootCertificate> {
        let short_norm = self.short_root_norm();
        let short: Vec<Weight> = self
            .roots()
            .into_iter()
            .filter(|b| self.inner(b, b) == short_norm)
            .collect();
        let mut expressions = Vec::with_capacity(self.rank);
        for (i, alpha) in self.simple_roots.iter().enumerate() {
            let terms = if self.inner(alpha, alpha) == short_norm {
                vec![(1, alpha.clone())]
            } else {
                let lookup: BTreeSet<&Weight> = short.iter().collect();
                let pair = short.iter().find_map(|b| {
                    let rest = alpha - b;
                    lookup
                        .contains(&rest)
                        .then(|| vec![(1, b.clone()), (1, rest)])
                });
                pair.ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "simple root {alpha} is not a sum of two short roots"
                    ))
                })?
            };
            expressions.push(ShortRootExpression {
                simple_index: i + 1,
                root: alpha.clone(),
                terms,
            });
        }
        let mut cert = ShortRootCertificate {
            short_norm,
            expressions,
            verified: false,
        };
        cert.verified = cert.check(self);
        Ok(cert)
    }

    /// The weight system of a minuscule representation.
    pub fn weight_system(&self, lambda: &Weight) -> Result<WeightSystem> {
        if !self.is_minuscule(lambda)? {
            return Err(Error::NotMinuscule(format!("{} λ={lambda}", self.name())));
        }
        let weights = self.weyl_orbit(lambda);
        Ok(WeightSystem {
            root_system: self.clone(),
            highest_weight: lambda.clone(),
            weights,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortRootExpression {
    /// 1-based index of the simple root.
    pub simple_index: usize,
    pub root: Weight,
    pub terms: Vec<(i64, Weight)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortRootCertificate {
    pub short_norm: Rational,
    pub expressions: Vec<ShortRootExpression>,
    pub verified: bool,
}

impl ShortRootCertificate {
    /// Re-checks every expression by vector arithmetic.
    pub fn check(&self, rs: &RootSystem) -> bool {
        let roots: BTreeSet<Weight> = rs.roots().into_iter().collect();
        self.expressions.len() == rs.rank
            && self.expressions.iter().all(|e| {
                let sum = e
                    .terms
                    .iter()
                    .fold(Weight::zero(rs.ambient_dim), |acc, (c, b)| {
                        &acc + &b.scale(&Rational::integer(*c))
                    });
                e.simple_index >= 1
                    && e.simple_index <= rs.rank
                    && e.root == rs.simple_roots[e.simple_index - 1]
                    && sum == e.root
                    && e.terms
                        .iter()
                        .all(|(_, b)| roots.contains(b) && rs.inner(b, b) == self.short_norm)
            })
    }
}

/// The distinct weights of a minuscule representation, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub root_system: RootSystem,
    pub highest_weight: Weight,
    pub weights: Vec<Weight>,
}

impl WeightSystem {
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn index(&self) -> HashMap<&Weight, usize> {
        self.weights
            .iter()
            .enumerate()
            .map(|(i, w)| (w, i))
            .collect()
    }

    pub fn is_self_dual(&self) -> bool {
        let set: BTreeSet<&Weight> = self.weights.iter().collect();
        self.weights.iter().all(|w| set.contains(&-w))
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.weights.iter().map(|w| w.0.clone()).collect()
    }
}
