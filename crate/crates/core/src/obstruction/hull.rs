//! Exact facet enumeration by gift wrapping over the ridge graph.
//!
//! Points are first expressed in an affine frame of their hull, so the
//! search always runs full-dimensional. A seed facet is found by starting
//! from the supporting hyperplane `x_1 = min` and repeatedly rotating about
//! a codimension-2 flat through the current face until the face is a
//! facet. Each facet's ridges come from a recursive hull of its vertices;
//! rotating about a ridge away from its facet gives the neighbouring facet.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{common_denominator, dot, RatMatrix, Rational};

/// A facet `normal·p ≤ offset`, tight exactly on `vertices`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polytope {
    pub vertices: Vec<Vec<Rational>>,
    /// Affine dimension.
    pub dim: usize,
    /// Sorted by vertex index set.
    pub facets: Vec<Facet>,
}

/// Outcome of re-checking a [`Polytope`] against its input points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HullCheck {
    /// Every point satisfies every facet inequality, with equality exactly
    /// on the facet's vertex set.
    pub inequalities_ok: bool,
    /// Every facet's vertex set has affine dimension `dim - 1`.
    pub facet_dims_ok: bool,
    /// Every ridge lies in exactly two facets and has dimension `dim - 2`.
    pub ridges_ok: bool,
    pub ridge_count: usize,
}

impl HullCheck {
    pub fn all(&self) -> bool {
        self.inequalities_ok && self.facet_dims_ok && self.ridges_ok
    }
}

impl Polytope {
    /// Facet vertex count → number of facets.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for f in &self.facets {
            *h.entry(f.vertices.len()).or_insert(0) += 1;
        }
        h
    }

    pub fn max_facet_size(&self) -> usize {
        self.facets
            .iter()
            .map(|f| f.vertices.len())
            .max()
            .unwrap_or(0)
    }

    pub fn facet_sets(&self) -> BTreeSet<Vec<usize>> {
        self.facets.iter().map(|f| f.vertices.clone()).collect()
    }

    pub fn verify(&self) -> HullCheck {
        let inequalities_ok = !self.facets.is_empty()
            && self.facets.iter().all(|f| {
                let on: BTreeSet<usize> = f.vertices.iter().copied().collect();
                f.normal.len() == self.vertices.first().map_or(0, Vec::len)
                    && self.vertices.iter().enumerate().all(|(i, p)| {
                        let v = dot(&f.normal, p);
                        if on.contains(&i) {
                            v == f.offset
                        } else {
                            v < f.offset
                        }
                    })
            });
        let facet_dims_ok = self
            .facets
            .iter()
            .all(|f| affine_dim(&self.pick(&f.vertices)) + 1 == self.dim);

        // ridges: maximal intersections of two facets of dimension dim - 2
        let mut ridges: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut ridge_dims_ok = true;
        for (a, fa) in self.facets.iter().enumerate() {
            let sa: BTreeSet<usize> = fa.vertices.iter().copied().collect();
            for fb in &self.facets[a + 1..] {
                let common: Vec<usize> = fb
                    .vertices
                    .iter()
                    .copied()
                    .filter(|v| sa.contains(v))
                    .collect();
                if common.len() + 1 < self.dim {
                    continue;
                }
                let d = affine_dim(&self.pick(&common));
                if d + 2 == self.dim {
                    *ridges.entry(common).or_insert(0) += 1;
                } else if d + 2 > self.dim {
                    ridge_dims_ok = false;
                }
            }
        }
        // each facet's boundary must be covered by ridges shared with others
        let boundary_ok = self.facets.iter().all(|f| {
            let s: BTreeSet<usize> = f.vertices.iter().copied().collect();
            ridges
                .keys()
                .filter(|r| r.iter().all(|v| s.contains(v)))
                .count()
                >= self.dim
        });
        let ridges_ok = ridge_dims_ok && boundary_ok && ridges.values().all(|&c| c == 1);
        HullCheck {
            inequalities_ok,
            facet_dims_ok,
            ridges_ok,
            ridge_count: ridges.len(),
        }
    }

    fn pick(&self, idx: &[usize]) -> Vec<Vec<Rational>> {
        idx.iter().map(|&i| self.vertices[i].clone()).collect()
    }
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn axpy(y: &mut [Rational], k: &Rational, x: &[Rational]) {
    if k.is_zero() {
        return;
    }
    for (a, b) in y.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += k * b;
        }
    }
}

/// Affine dimension of a point set (`-1` is reported as 0 for empty sets).
pub fn affine_dim(points: &[Vec<Rational>]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let diffs: Vec<Vec<Rational>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    RatMatrix::from_rows(&diffs, points[0].len()).rank()
}

/// An affine frame `p = origin + Σ c_k basis_k` of a point set.
struct Frame {
    width: usize,
    basis: Vec<Vec<Rational>>,
    coords: Vec<Vec<Rational>>,
}

impl Frame {
    fn new(points: &[Vec<Rational>]) -> Frame {
        let origin = points[0].clone();
        let dim = origin.len();
        let diffs: Vec<Vec<Rational>> = points.iter().map(|p| sub(p, &origin)).collect();
        // columns are the differences; the reduced form expresses every
        // column in the pivot columns
        let m = RatMatrix::from_fn(dim, diffs.len(), |r, c| diffs[c][r].clone());
        let ech = m.rref();
        let rank = ech.pivots.len();
        let basis = ech.pivots.iter().map(|&c| diffs[c].clone()).collect();
        let coords = (0..diffs.len())
            .map(|c| (0..rank).map(|r| ech.matrix.get(r, c).clone()).collect())
            .collect();
        Frame {
            width: dim,
            basis,
            coords,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The ambient vector `N` in the span of the basis with
    /// `N·(p - origin) = local·coords(p)`.
    fn lift_functional(&self, local: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let gram = RatMatrix::from_fn(d, d, |i, j| dot(&self.basis[i], &self.basis[j]));
        let y = gram.solve(local).expect("frame basis is independent");
        let mut n = vec![Rational::zero(); self.width];
        for (yk, b) in y.iter().zip(&self.basis) {
            axpy(&mut n, yk, b);
        }
        n
    }
}

/// `w` minus its orthogonal projection onto the span of `basis`.
fn project_out(w: &[Rational], basis: &[Vec<Rational>]) -> Vec<Rational> {
    if basis.is_empty() {
        return w.to_vec();
    }
    let k = basis.len();
    let gram = RatMatrix::from_fn(k, k, |i, j| dot(&basis[i], &basis[j]));
    let rhs: Vec<Rational> = basis.iter().map(|b| dot(b, w)).collect();
    let y = gram.solve(&rhs).expect("independent basis");
    let mut out = w.to_vec();
    for (yk, b) in y.iter().zip(basis) {
        axpy(&mut out, &-yk, b);
    }
    out
}

/// A facet of a full-dimensional point set in local coordinates.
#[derive(Clone, Debug)]
struct LocalFacet {
    normal: Vec<Rational>,
    vertices: Vec<usize>,
}

fn tight(points: &[Vec<Rational>], normal: &[Rational], offset: &Rational) -> Vec<usize> {
    points
        .iter()
        .enumerate()
        .filter(|(_, p)| dot(normal, p) == *offset)
        .map(|(i, _)| i)
        .collect()
}

/// Rotates the supporting hyperplane with normal `n` about the flat
/// `r0 + span(flat)` in the direction away from `u`, stopping at the first
/// point hit. `n` and `u` must both be orthogonal to the flat.
fn rotate(
    points: &[Vec<Rational>],
    r0: &[Rational],
    n: &[Rational],
    u: &[Rational],
) -> Result<(Vec<Rational>, Rational)> {
    let mut best: Option<(Rational, Rational)> = None;
    for p in points {
        let rel = sub(p, r0);
        let a = dot(&rel, n);
        if !a.is_negative() {
            continue;
        }
        let b = dot(&rel, u);
        // keep the candidate with the largest angle from +u
        let better = match &best {
            None => true,
            Some((ab, bb)) => (ab * &b - &a * bb).is_positive(),
        };
        if better {
            best = Some((a, b));
        }
    }
    let (a, b) =
        best.ok_or_else(|| Error::Degenerate("no point off the supporting hyperplane".into()))?;
    let normal: Vec<Rational> = u.iter().zip(n).map(|(ui, ni)| &a * ui - &b * ni).collect();
    let offset = dot(&normal, r0);
    Ok((normal, offset))
}

fn seed_facet(points: &[Vec<Rational>], d: usize) -> Result<LocalFacet> {
    let mut normal = vec![Rational::zero(); d];
    normal[0] = -Rational::one();
    let mut offset = points.iter().map(|p| -&p[0]).max().expect("nonempty");
    loop {
        let face = tight(points, &normal, &offset);
        let face_pts: Vec<Vec<Rational>> = face.iter().map(|&i| points[i].clone()).collect();
        let frame = Frame::new(&face_pts);
        if frame.dim() + 1 == d {
            return Ok(LocalFacet {
                normal,
                vertices: face,
            });
        }
        // a basis of normal⊥ that starts with the face directions
        let nn = dot(&normal, &normal);
        let mut span = frame.basis.clone();
        for k in 0..d {
            if span.len() + 1 == d {
                break;
            }
            let mut e = vec![Rational::zero(); d];
            e[k] = Rational::one();
            axpy(&mut e, &(-(&normal[k] / &nn)), &normal);
            let mut trial = span.clone();
            trial.push(e);
            if RatMatrix::from_rows(&trial, d).rank() == trial.len() {
                span = trial;
            }
        }
        let last = span.pop().expect("codimension at least two");
        let u = project_out(&last, &span);
        let (n2, o2) = rotate(points, &face_pts[0], &normal, &u)?;
        normal = n2;
        offset = o2;
    }
}

/// Ridges of a facet as sorted vertex index sets of `points`.
fn facet_ridges(points: &[Vec<Rational>], facet: &[usize], d: usize) -> Result<Vec<Vec<usize>>> {
    if facet.len() == d {
        return Ok((0..d)
            .map(|skip| {
                facet
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != skip)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect());
    }
    let pts: Vec<Vec<Rational>> = facet.iter().map(|&i| points[i].clone()).collect();
    let frame = Frame::new(&pts);
    let sub_facets = full_dim_facets(&frame.coords, frame.dim())?;
    Ok(sub_facets
        .into_iter()
        .map(|f| {
            let mut r: Vec<usize> = f.vertices.iter().map(|&k| facet[k]).collect();
            r.sort_unstable();
            r
        })
        .collect())
}

fn full_dim_facets(points: &[Vec<Rational>], d: usize) -> Result<Vec<LocalFacet>> {
    if d == 1 {
        let lo = points.iter().map(|p| p[0].clone()).min().expect("nonempty");
        let hi = points.iter().map(|p| p[0].clone()).max().expect("nonempty");
        let low = LocalFacet {
            normal: vec![-Rational::one()],
            vertices: tight(points, &[-Rational::one()], &-&lo),
        };
        let high = LocalFacet {
            normal: vec![Rational::one()],
            vertices: tight(points, &[Rational::one()], &hi),
        };
        return Ok(vec![low, high]);
    }

    let seed = seed_facet(points, d)?;
    let mut facets = vec![seed.clone()];
    let mut known: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    known.insert(seed.vertices.clone(), 0);
    let mut done_ridges: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);

    while let Some(fi) = queue.pop_front() {
        let facet = facets[fi].clone();
        for ridge in facet_ridges(points, &facet.vertices, d)? {
            if !done_ridges.insert(ridge.clone()) {
                continue;
            }
            let ridge_set: BTreeSet<usize> = ridge.iter().copied().collect();
            let q = facet
                .vertices
                .iter()
                .copied()
                .find(|v| !ridge_set.contains(v))
                .expect("facet has a vertex off each ridge");
            let r0 = &points[ridge[0]];
            let flat =
                Frame::new(&ridge.iter().map(|&k| points[k].clone()).collect::<Vec<_>>()).basis;
            debug_assert_eq!(
                flat.len() + 2,
                d,
                "ridge {ridge:?} is not of codimension two"
            );
            let u = project_out(&sub(&points[q], r0), &flat);
            let (normal, offset) = rotate(points, r0, &facet.normal, &u)?;
            let vertices = tight(points, &normal, &offset);
            if !known.contains_key(&vertices) {
                known.insert(vertices.clone(), facets.len());
                facets.push(LocalFacet { normal, vertices });
                queue.push_back(facets.len() - 1);
            }
        }
    }
    Ok(facets)
}

/// Primitive integer representative of a rational direction.
fn primitive(v: &[Rational]) -> Vec<Rational> {
    let l = common_denominator(v.iter());
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * &Rational::from_bigint(l.clone())).numer().clone())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        return ints.into_iter().map(Rational::from_bigint).collect();
    }
    ints.into_iter()
        .map(|x| Rational::from_bigint(x / &g))
        .collect()
}

/// Complete, irredundant facet list of the convex hull of `points`.
///
/// The points must be distinct and span an affine space of dimension at
/// least 2. Facets are canonical: sorted by vertex set, with primitive
/// integer normals lying in the direction space of the hull.
pub fn hull_facets(points: &[Vec<Rational>]) -> Result<Polytope> {
    if points.is_empty() {
        return Err(Error::Degenerate("no points".into()));
    }
    let width = points[0].len();
    if points.iter().any(|p| p.len() != width) {
        return Err(Error::InvalidInput(
            "points have different dimensions".into(),
        ));
    }
    let distinct: BTreeSet<&Vec<Rational>> = points.iter().collect();
    if distinct.len() != points.len() {
        return Err(Error::InvalidInput("duplicate points".into()));
    }
    let frame = Frame::new(points);
    let dim = frame.dim();
    if dim < 2 {
        return Err(Error::Degenerate(format!(
            "points span an affine space of dimension {dim}"
        )));
    }
    let local = full_dim_facets(&frame.coords, dim)?;
    let mut facets: Vec<Facet> = local
        .into_iter()
        .map(|f| {
            let normal = primitive(&frame.lift_functional(&f.normal));
            let offset = dot(&normal, &points[f.vertices[0]]);
            Facet {
                vertices: f.vertices,
                normal,
                offset,
            }
        })
        .collect();
    facets.sort();
    Ok(Polytope {
        vertices: points.to_vec(),
        dim,
        facets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter()
            .map(|p| p.iter().map(|&x| Rational::integer(x)).collect())
            .collect()
    }

    #[test]
    fn square() {
        let p = hull_facets(&pts(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.histogram(), BTreeMap::from([(2, 4)]));
        assert!(p.verify().all());
    }

    #[test]
    fn cube_and_octahedron() {
        let mut cube = Vec::new();
        for x in [0, 1] {
            for y in [0, 1] {
                for z in [0, 1] {
                    cube.push(vec![x, y, z]);
                }
            }
        }
        let cube: Vec<Vec<Rational>> = cube
            .iter()
            .map(|p| p.iter().map(|&x| Rational::integer(x)).collect())
            .collect();
        let p = hull_facets(&cube).unwrap();
        assert_eq!(p.histogram(), BTreeMap::from([(4, 6)]));
        assert!(p.verify().all());

        let oct = pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        let p = hull_facets(&oct).unwrap();
        assert_eq!(p.histogram(), BTreeMap::from([(3, 8)]));
        assert!(p.verify().all());
    }

    #[test]
    fn embedded_triangle() {
        // a triangle in a plane of Q^4
        let p = hull_facets(&pts(&[&[1, 0, 0, 5], &[0, 1, 0, 5], &[0, 0, 1, 5]])).unwrap();
        assert_eq!(p.dim, 2);
        assert_eq!(p.facets.len(), 3);
        assert!(p.verify().all());
        for f in &p.facets {
            // normals live in the direction space, orthogonal to (1,1,1,0)
            let s: Rational = f.normal[..3].iter().sum();
            assert!(s.is_zero());
            assert!(f.normal[3].is_zero());
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert!(matches!(
            hull_facets(&pts(&[&[0, 0], &[1, 1], &[2, 2]])),
            Err(Error::Degenerate(_))
        ));
        assert!(hull_facets(&pts(&[&[0, 0], &[0, 0], &[1, 0]])).is_err());
        assert!(hull_facets(&[]).is_err());
    }

    #[test]
    fn order_independent() {
        let a = pts(&[&[0, 0, 0], &[2, 0, 0], &[0, 3, 0], &[0, 0, 1], &[1, 1, 1]]);
        let mut b = a.clone();
        b.reverse();
        let pa = hull_facets(&a).unwrap();
        let pb = hull_facets(&b).unwrap();
        let n = a.len();
        let remap: BTreeSet<Vec<usize>> = pb
            .facet_sets()
            .into_iter()
            .map(|s| {
                let mut r: Vec<usize> = s.iter().map(|&i| n - 1 - i).collect();
                r.sort_unstable();
                r
            })
            .collect();
        assert_eq!(pa.facet_sets(), remap);
    }
}
