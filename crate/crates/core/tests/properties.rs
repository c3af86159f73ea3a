mod common;

use lie_meet::exact::{
    hnf_kernel, GaussianRational, IntMatrix, Modulus, QuotientRingElement, Rational,
};
use lie_meet::obstruction::{equal_sum_quadruples, quadrangle_holds};
use lie_meet::rootsys::{RootSystem, TypeLabel};
use lie_meet::verify::expected_minuscule;
use lie_meet::witness::{pm_one_vector, slm_wedge_witness, Diagonal};
use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=12).prop_map(|(p, q)| Rational::new(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=3, 2usize..=5)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

/// gcd of the maximal minors of the kernel basis; 1 iff the lattice is
/// saturated.
fn minor_gcd(rows: &[Vec<i128>]) -> i128 {
    let k = rows.len();
    let n = rows[0].len();
    let mut g = 0i128;
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let m: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| idx.iter().map(|&c| r[c]).collect())
            .collect();
        g = num_integer::gcd(g, common::det(m));
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return g;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Rational::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&json).unwrap(), a);
    }

    #[test]
    fn gaussian_norm_is_multiplicative(a in gaussian(), b in gaussian()) {
        prop_assert_eq!((&a * &b).norm(), &a.norm() * &b.norm());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inverse().unwrap(), GaussianRational::one());
        }
    }

    #[test]
    fn quotient_inverse_and_powers(
        m in 1usize..=4,
        c in nonzero_rational(),
        coeffs in prop::collection::vec(rational(), 4),
        k1 in -3i64..=3,
        k2 in -3i64..=3,
    ) {
        let modulus = Modulus::new(m, c).unwrap();
        let x = QuotientRingElement::from_coeffs(&modulus, coeffs[..m].to_vec());
        let t = QuotientRingElement::t(&modulus);
        // t is a unit since c ≠ 0
        prop_assert_eq!(&t.pow(k1).unwrap() * &t.pow(k2).unwrap(), t.pow(k1 + k2).unwrap());
        prop_assert_eq!(t.pow(m as i64).unwrap(), QuotientRingElement::constant(&modulus, modulus.c.clone()));
        if let Ok(inv) = x.inverse() {
            prop_assert!((&x * &inv).is_one());
        }
    }

    #[test]
    fn kernel_basis_is_a_saturated_kernel(a in small_matrix()) {
        let cols = a[0].len();
        let m = IntMatrix::from_i64(&a, cols);
        let kernel = hnf_kernel(&m);
        let rank = lie_meet::exact::rational_rank(&lie_meet::exact::RatMatrix::from_rows(
            &a.iter().map(|r| r.iter().map(|&x| Rational::integer(x)).collect()).collect::<Vec<_>>(),
            cols,
        ));
        prop_assert_eq!(kernel.len(), cols - rank);
        for k in &kernel {
            prop_assert!(m.mul_vec(k).iter().all(BigInt::is_zero));
        }
        if !kernel.is_empty() {
            let small: Vec<Vec<i128>> =
                kernel.iter().map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect()).collect();
            prop_assert_eq!(minor_gcd(&small), 1);
            prop_assert_eq!(hnf_kernel(&m), kernel);
        }
    }

    #[test]
    fn wedge_witness_values_satisfy_quadrangles(m in 2usize..=6, j in 1usize..=5) {
        prop_assume!(j < m);
        let w = slm_wedge_witness(m, j).unwrap();
        prop_assert!(w.verified());
        let Diagonal::Quotient { group, .. } = &w.diag else { unreachable!() };
        for q in equal_sum_quadruples(&w.weights) {
            prop_assert!(quadrangle_holds(&w.weights, group, q).unwrap());
        }
    }
}

fn small_root_systems() -> Vec<(TypeLabel, usize)> {
    TypeLabel::ALL
        .iter()
        .flat_map(|&t| t.legal_ranks(5).into_iter().map(move |r| (t, r)))
        .collect()
}

#[test]
fn orbits_are_norm_preserving_and_reflection_closed() {
    for (t, r) in small_root_systems() {
        let rs = RootSystem::build(t, r).unwrap();
        for i in 1..=r {
            let w = rs.fundamental_weight(i).unwrap();
            let orbit = rs.weyl_orbit(&w);
            let norm = rs.inner(&w, &w);
            assert!(orbit.iter().all(|v| rs.inner(v, v) == norm));
            let set: std::collections::BTreeSet<_> = orbit.iter().collect();
            for v in &orbit {
                for k in 0..r {
                    assert!(set.contains(&rs.reflect(k, v)));
                }
            }
            let minuscule = rs.is_minuscule(&w).unwrap();
            assert_eq!(minuscule, expected_minuscule(t, r, i), "{t}{r} ϖ{i}");
            if minuscule {
                assert_eq!(Rational::integer(orbit.len() as i64), rs.weyl_dimension(&w));
            }
        }
    }
}

#[test]
fn sign_solver_agrees_with_exhaustive_patterns() {
    for (t, r, i) in lie_meet::verify::classical_minuscule_cases(4) {
        if t == TypeLabel::A {
            continue;
        }
        let rs = RootSystem::build(t, r).unwrap();
        let ws = rs
            .weight_system(&rs.fundamental_weight(i).unwrap())
            .unwrap();
        let patterns = common::sign_patterns(&ws.weights);
        let solved = pm_one_vector(&ws);
        assert_eq!(solved.is_ok(), !patterns.is_empty(), "{t}{r} ϖ{i}");
        let v = solved.unwrap();
        let eps: Vec<i64> = ws
            .weights
            .iter()
            .map(|w| lie_meet::exact::dot(&w.0, &v).to_i64().unwrap())
            .collect();
        assert_eq!(eps, patterns[0], "{t}{r} ϖ{i}");
    }
}

#[test]
fn weyl_group_of_e6_is_transitive_on_skew_triples() {
    let rs = RootSystem::build(TypeLabel::E, 6).unwrap();
    let ws = rs
        .weight_system(&rs.fundamental_weight(1).unwrap())
        .unwrap();
    let g = lie_meet::obstruction::e6_incidence(&ws).unwrap();
    let index = ws.index();
    let gens: Vec<Vec<usize>> = (0..6)
        .map(|k| {
            ws.weights
                .iter()
                .map(|w| index[&rs.reflect(k, w)])
                .collect()
        })
        .collect();
    let n = ws.len();
    let skew_triples: Vec<[usize; 3]> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| [a, b, c])))
        .filter(|&[a, b, c]| g.is_skew(a, b) && g.is_skew(a, c) && g.is_skew(b, c))
        .collect();
    let start = skew_triples[0];
    let mut seen = std::collections::BTreeSet::from([start]);
    let mut queue = vec![start];
    while let Some(t) = queue.pop() {
        for p in &gens {
            let next = t.map(|i| p[i]);
            if seen.insert(next) {
                queue.push(next);
            }
        }
    }
    println!(
        "ordered skew triples: {}, orbit size: {}",
        skew_triples.len(),
        seen.len()
    );
    assert_eq!(seen.len(), skew_triples.len());
}
