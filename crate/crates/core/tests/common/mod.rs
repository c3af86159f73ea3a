//! Independent oracles used by the integration tests. They share no code
//! with the library beyond its public types.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lie_meet::exact::Rational;
use lie_meet::rootsys::Weight;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Multiplies every point by the lcm of all denominators.
pub fn to_integer_points(points: &[Vec<Rational>]) -> Vec<Vec<i128>> {
    let mut l = num_bigint::BigInt::from(1);
    for x in points.iter().flatten() {
        l = l.lcm(x.denom());
    }
    points
        .iter()
        .map(|p| {
            p.iter()
                .map(|x| {
                    (x.numer() * (&l / x.denom()))
                        .to_i128()
                        .expect("small coordinates")
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free Gaussian elimination.
pub fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rank over Q, by fraction-free elimination.
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - p * b;
                }
                let g = m[i].iter().fold(0i128, |g, x| g.gcd(x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

/// Projects onto the first set of coordinates (in lexicographic order)
/// that keeps the affine dimension. Such a projection is injective on the
/// affine hull, so faces are preserved.
pub fn full_dimensional(points: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = points[0].len();
    let diffs: Vec<Vec<i128>> = points
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    let d = rank(&diffs);
    let mut chosen = Vec::new();
    for c in 0..n {
        let mut trial = chosen.clone();
        trial.push(c);
        let proj: Vec<Vec<i128>> = diffs
            .iter()
            .map(|v| trial.iter().map(|&k| v[k]).collect())
            .collect();
        if rank(&proj) == trial.len() {
            chosen = trial;
        }
        if chosen.len() == d {
            break;
        }
    }
    points
        .iter()
        .map(|p| chosen.iter().map(|&k| p[k]).collect())
        .collect()
}

fn subsets(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    go(0, n, k, &mut Vec::new(), f);
}

/// Facet vertex sets by trying every `d`-subset as a hyperplane.
pub fn brute_force_facets(points: &[Vec<Rational>]) -> BTreeSet<Vec<usize>> {
    let pts = full_dimensional(&to_integer_points(points));
    let d = pts[0].len();
    let mut out = BTreeSet::new();
    subsets(pts.len(), d, &mut |s| {
        let base = &pts[s[0]];
        let mut m: Vec<Vec<i128>> = s[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        m.push(vec![0; d]);
        let (mut pos, mut neg) = (false, false);
        let mut on = Vec::new();
        for (q, p) in pts.iter().enumerate() {
            m[d - 1] = p.iter().zip(base).map(|(a, b)| a - b).collect();
            match det(m.clone()).signum() {
                0 => on.push(q),
                1 => pos = true,
                _ => neg = true,
            }
            if pos && neg {
                return;
            }
        }
        if pos || neg {
            out.insert(on);
        }
    });
    out
}

fn gcd_normalize(v: &mut [i128]) {
    let g = v.iter().fold(0i128, |g, x| g.gcd(x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Facet vertex sets by the double description method on the cone
/// `{y : y·(p, 1) ≤ 0 for every point p}`, whose extreme rays are the
/// facets.
pub fn double_description_facets(points: &[Vec<Rational>]) -> BTreeSet<Vec<usize>> {
    let pts = full_dimensional(&to_integer_points(points));
    let d = pts[0].len();
    let q: Vec<Vec<i128>> = pts
        .iter()
        .map(|p| p.iter().copied().chain([1]).collect())
        .collect();
    // initial simplex from greedily chosen independent rows
    let mut basis: Vec<usize> = Vec::new();
    for i in 0..q.len() {
        let mut trial: Vec<Vec<i128>> = basis.iter().map(|&k| q[k].clone()).collect();
        trial.push(q[i].clone());
        if rank(&trial) == trial.len() {
            basis.push(i);
        }
        if basis.len() == d + 1 {
            break;
        }
    }
    // rays of {y : B y ≤ 0}: columns of -adj(B)
    let b: Vec<Vec<i128>> = basis.iter().map(|&k| q[k].clone()).collect();
    let mut rays: Vec<Vec<i128>> = Vec::new();
    for j in 0..=d {
        // y with b_k·y = 0 for k ≠ j and b_j·y < 0, by cofactors
        let mut y = vec![0i128; d + 1];
        for (c, yc) in y.iter_mut().enumerate() {
            let minor: Vec<Vec<i128>> = (0..=d)
                .filter(|&k| k != j)
                .map(|k| (0..=d).filter(|&cc| cc != c).map(|cc| b[k][cc]).collect())
                .collect();
            let s = if (c + j) % 2 == 0 { 1 } else { -1 };
            *yc = s * det(minor);
        }
        if dot(&b[j], &y) > 0 {
            y.iter_mut().for_each(|x| *x = -*x);
        }
        gcd_normalize(&mut y);
        rays.push(y);
    }
    let mut added: Vec<usize> = basis.clone();
    for i in 0..q.len() {
        if basis.contains(&i) {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|y| dot(y, &q[i])).collect();
        let mut next: Vec<Vec<i128>> = Vec::new();
        for (k, y) in rays.iter().enumerate() {
            if vals[k] <= 0 {
                next.push(y.clone());
            }
        }
        let zero_sets: Vec<BTreeSet<usize>> = rays
            .iter()
            .map(|y| {
                added
                    .iter()
                    .copied()
                    .filter(|&r| dot(y, &q[r]) == 0)
                    .collect()
            })
            .collect();
        for a in 0..rays.len() {
            if vals[a] <= 0 {
                continue;
            }
            for c in 0..rays.len() {
                if vals[c] >= 0 {
                    continue;
                }
                let common: BTreeSet<usize> =
                    zero_sets[a].intersection(&zero_sets[c]).copied().collect();
                if common.len() + 2 < d + 1 {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .filter(|&e| e != a && e != c)
                    .all(|e| !common.is_subset(&zero_sets[e]));
                if !adjacent {
                    continue;
                }
                let mut y: Vec<i128> = rays[a]
                    .iter()
                    .zip(&rays[c])
                    .map(|(ya, yc)| vals[a] * yc - vals[c] * ya)
                    .collect();
                gcd_normalize(&mut y);
                next.push(y);
            }
        }
        rays = next;
        added.push(i);
    }
    rays.iter()
        .map(|y| (0..q.len()).filter(|&i| dot(y, &q[i]) == 0).collect())
        .collect()
}

/// Every sign pattern `ε ∈ {±1}^n` for which `⟨w_j, v⟩ = ε_j` has a
/// rational solution `v`, by trying all `2^n` patterns. Patterns are in
/// lexicographic order with `+1` before `-1`.
pub fn sign_patterns(weights: &[Weight]) -> Vec<Vec<i64>> {
    let n = weights.len();
    assert!(n <= 16, "exhaustive oracle is exponential");
    let mut l = num_bigint::BigInt::from(1);
    for x in weights.iter().flat_map(|w| w.0.iter()) {
        l = l.lcm(x.denom());
    }
    let scale = l.to_i128().expect("small denominators");
    let rows = to_integer_points(&weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>());
    let base_rank = rank(&rows);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        // bit n-1-j set means ε_j = -1, so counting order is lexicographic
        let eps: Vec<i64> = (0..n)
            .map(|j| if mask >> (n - 1 - j) & 1 == 1 { -1 } else { 1 })
            .collect();
        let aug: Vec<Vec<i128>> = rows
            .iter()
            .zip(&eps)
            .map(|(r, &e)| r.iter().copied().chain([e as i128 * scale]).collect())
            .collect();
        if rank(&aug) == base_rank {
            out.push(eps);
        }
    }
    out
}

/// Random full-dimensional rational point sets in dimension 3 or 4.
pub fn random_point_sets(seed: u64, count: usize) -> Vec<Vec<Vec<Rational>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let d = rng.gen_range(3..=4);
        let n = rng.gen_range(d + 2..=12);
        let mut pts: Vec<Vec<Rational>> = Vec::new();
        while pts.len() < n {
            let p: Vec<Rational> = (0..d)
                .map(|_| Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
                .collect();
            if !pts.contains(&p) {
                pts.push(p);
            }
        }
        if lie_meet::obstruction::affine_dim(&pts) == d {
            out.push(pts);
        }
    }
    out
}
