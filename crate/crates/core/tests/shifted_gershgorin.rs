mod common;

use common::{grid_sup, naive_dominance, rng, uniform_matrix};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use shiftbound::shifted::{certify_definiteness, Definiteness, Grid, HalfPlane};
use shiftbound::{
    closed_form_lower, eigen_oracle, gershgorin_bounds, local_improvement_lower, lower_lines,
    pd_certify, pd_window, profile_lower, region_halfplanes_3x3, region_raster,
    shifted_gersh_lower, shifted_gersh_upper, spread_extremes, spread_sup, upper_lines,
    SymmetricMatrix,
};

#[test]
fn envelope_identity() {
    let mut r = rng(11);
    for _ in 0..500 {
        let n = r.gen_range(1..=8);
        let a = uniform_matrix(n, -10.0, 10.0, &mut r);
        let lo = lower_lines(&a);
        let hi = upper_lines(&a);
        let mut slopes: Vec<f64> = lo.lines().iter().map(|l| l.slope).collect();
        slopes.sort_by(f64::total_cmp);
        let expected: Vec<f64> = (1..=n).rev().map(|k| n as f64 - 2.0 * k as f64).collect();
        assert_eq!(slopes, expected);
        for _ in 0..50 {
            let x = r.gen_range(0.0..25.0);
            assert!((lo.eval(x) - naive_dominance(&a, x)).abs() < 1e-9);
            let direct = (0..n)
                .map(|i| shiftbound::d_upper(&a, i, x).unwrap())
                .fold(f64::NEG_INFINITY, f64::max);
            assert!((hi.eval(x) - direct).abs() < 1e-9);
        }
    }
}

#[test]
fn concavity() {
    let mut r = rng(12);
    for _ in 0..500 {
        let n = r.gen_range(2..=8);
        let a = uniform_matrix(n, -10.0, 10.0, &mut r);
        let mut xs = [r.gen_range(0.0..20.0), r.gen_range(0.0..20.0), r.gen_range(0.0..20.0)];
        xs.sort_by(f64::total_cmp);
        let [x1, x2, x3] = xs;
        if x3 - x1 < 1e-9 {
            continue;
        }
        let g = |x| naive_dominance(&a, x);
        let chord = ((x3 - x2) * g(x1) + (x2 - x1) * g(x3)) / (x3 - x1);
        assert!(g(x2) >= chord - 1e-9);
    }
}

#[test]
fn closed_form_soundness_and_dominance() {
    let mut r = rng(13);
    for _ in 0..1000 {
        let n = r.gen_range(2..=10);
        let a = uniform_matrix(n, -10.0, 10.0, &mut r);
        let s = shifted_gersh_lower(&a);
        let cf = closed_form_lower(&a);
        assert!((cf.value - s.value).abs() < 1e-9);

        let spectrum = eigen_oracle(&a).unwrap();
        assert!(s.value <= spectrum.min() + 1e-7);
        let u = shifted_gersh_upper(&a);
        assert!(u.value >= spectrum.max() - 1e-7);
        assert!(s.x_star >= 0.0 && u.x_star <= 0.0);

        let g = gershgorin_bounds(&a);
        assert!(s.value >= g.lower);
        assert!(u.value <= g.upper);
        let strictly = s.value > g.lower + 1e-9;
        assert_eq!(strictly, local_improvement_lower(&a));

        assert_eq!(u.value, -shifted_gersh_lower(&a.negate()).value);
        assert!((u.value - upper_lines(&a).optimize().value).abs() < 1e-9);

        // exact optimum beats any point of a brute-force grid
        let hi = common::largest_abs(&a) * 2.0 + 1.0;
        let (gv, _) = grid_sup(|x| naive_dominance(&a, x), hi, 2000);
        assert!(s.value >= gv - 1e-9);
    }
}

#[test]
fn permutation_invariance() {
    let mut r = rng(14);
    for _ in 0..300 {
        let n = r.gen_range(2..=8);
        let a = uniform_matrix(n, -10.0, 10.0, &mut r);
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut r);
        let b = a.permute(&p).unwrap();
        let (va, vb) = (shifted_gersh_lower(&a).value, shifted_gersh_lower(&b).value);
        // row sums are accumulated in a different order after permuting
        assert!((va - vb).abs() <= 1e-12 * va.abs().max(1.0));

        let ai = common::int_matrix(n, -10, 10, &mut r);
        let bi = ai.permute(&p).unwrap();
        assert_eq!(shifted_gersh_lower(&ai).value, shifted_gersh_lower(&bi).value);
    }
}

#[test]
fn pd_window_matches_profile() {
    let mut r = rng(15);
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let mut a = common::to_rows(&uniform_matrix(n, -3.0, 5.0, &mut r));
        for (i, row) in a.iter_mut().enumerate() {
            row[i] += r.gen_range(0.0..20.0);
        }
        let a = SymmetricMatrix::from_rows(&a).unwrap();
        let w = pd_window(&a);
        let xs: Vec<f64> = (0..400).map(|k| k as f64 * 0.05).collect();
        for (x, v) in profile_lower(&a, &xs) {
            let inside = w.is_some_and(|w| w.contains(x));
            // skip points within rounding of the window edges
            if v.abs() > 1e-9 {
                assert_eq!(inside, v > 0.0, "x={x} v={v} w={w:?}");
            }
        }
        match certify_definiteness(&a) {
            Definiteness::PositiveDefinite => assert!(w.is_some()),
            _ => assert!(w.is_none()),
        }
    }
}

fn worked_region_rows(y: f64, z: f64) -> SymmetricMatrix {
    SymmetricMatrix::from_rows(&[[y, 2.0, 1.0], [2.0, z, 2.0], [1.0, 2.0, 4.0]]).unwrap()
}

#[test]
fn region_matches_direct_test_on_grids() {
    let mut r = rng(16);
    let mut cases = vec![(2.0, 1.0, 2.0, 4.0), (2.0, 0.0, 2.0, 4.0), (0.0, 0.0, 0.0, 1.0)];
    for _ in 0..12 {
        cases.push((
            r.gen_range(-3.0..3.0),
            r.gen_range(-3.0..3.0),
            r.gen_range(-3.0..3.0),
            r.gen_range(0.0..8.0),
        ));
    }
    for (a, b, c, d) in cases {
        let region = region_halfplanes_3x3((a, b, c), d);
        for h in &region.inequalities {
            assert!(h.coeffs.iter().all(|&v| v >= 0.0));
        }
        let pts = region_raster(&[a, b, c], (0, 1), &[d], Grid::square(-2.0, 10.0, 100)).unwrap();
        let mut mismatches = 0;
        for p in &pts {
            let m = SymmetricMatrix::from_rows(&[[p.y, a, b], [a, p.z, c], [b, c, d]]).unwrap();
            assert_eq!(p.member_shifted, pd_certify(&m));
            // exact boundary points can fall on either side in floating point
            let margin = region.inequalities.iter().map(|h| h.value([p.y, p.z]).abs()).fold(f64::INFINITY, f64::min);
            if region.contains(p.y, p.z) != p.member_shifted && margin > 1e-9 {
                mismatches += 1;
            }
        }
        assert_eq!(mismatches, 0, "case {:?}", (a, b, c, d));
    }
}

#[test]
fn worked_region_grid() {
    let region = region_halfplanes_3x3((2.0, 1.0, 2.0), 4.0);
    assert_eq!(
        region.inequalities,
        vec![
            HalfPlane { coeffs: [1.0, 0.0], offset: 2.0 },
            HalfPlane { coeffs: [0.0, 1.0], offset: 2.0 },
            HalfPlane { coeffs: [1.0, 1.0], offset: 5.0 },
        ]
    );
    assert!(pd_certify(&worked_region_rows(3.0, 3.0)));
    assert!(!pd_certify(&worked_region_rows(2.0 - 1e-9, 3.0)));
    let d = region_halfplanes_3x3((0.0, 0.0, 0.0), 2.0);
    assert_eq!(
        d.inequalities,
        vec![HalfPlane { coeffs: [1.0, 0.0], offset: 0.0 }, HalfPlane { coeffs: [0.0, 1.0], offset: 0.0 }]
    );
}

// Grid of step 1e-4 on [0, max y]. Entries are drawn on the same lattice so
// every breakpoint is a grid point.
fn spread_brute(y: &[f64]) -> f64 {
    let rho: f64 = y.iter().sum();
    let top = y.iter().copied().fold(0.0, f64::max);
    let steps = (top * 1e4).round() as usize;
    (0..=steps)
        .map(|k| k as f64 * 1e-4)
        .map(|x| rho - x - y.iter().map(|v| (v - x).abs()).sum::<f64>())
        .fold(f64::NEG_INFINITY, f64::max)
}

fn lattice_vector(r: &mut impl Rng) -> Vec<f64> {
    let m = r.gen_range(1..=8);
    (0..m).map(|_| r.gen_range(0..=20_000) as f64 * 1e-4).collect()
}

#[test]
fn spread_properties() {
    let mut r = rng(17);
    for _ in 0..1000 {
        let m = r.gen_range(1..=8);
        let y: Vec<f64> = (0..m).map(|_| r.gen_range(0.0..3.0)).collect();
        let rho: f64 = y.iter().sum();
        let s = spread_sup(&y).unwrap();
        let (worst, best) = spread_extremes(m + 1, rho).unwrap();
        assert!(s <= best + 1e-12 && s >= worst - 1e-12);
    }
    for m in 1..=9 {
        let y = vec![1.7; m];
        let rho = 1.7 * m as f64;
        assert!((spread_sup(&y).unwrap() - spread_extremes(m + 1, rho).unwrap().1).abs() < 1e-12);
    }
}

#[test]
fn spread_matches_brute_force() {
    let mut r = rng(18);
    for _ in 0..1000 {
        let y = lattice_vector(&mut r);
        assert!((spread_sup(&y).unwrap() - spread_brute(&y)).abs() < 1e-6, "{y:?}");
    }
}

#[test]
fn concentrated_spread_is_zero() {
    let mut r = rng(19);
    for _ in 0..200 {
        let m = r.gen_range(1..=9);
        let zeros = m / 2 + 1;
        let mut y: Vec<f64> = (0..m).map(|k| if k < zeros { 0.0 } else { r.gen_range(0.0..5.0) }).collect();
        y.shuffle(&mut r);
        assert_eq!(spread_sup(&y).unwrap(), 0.0);
    }
}

// Multiples of 1/1024 are exact in binary, so every candidate formula
// evaluates them without rounding.
fn is_dyadic(x: f64) -> bool {
    (x * 1024.0).fract() == 0.0
}

fn within_ulps(a: f64, b: f64, k: f64) -> bool {
    (a - b).abs() <= k * f64::EPSILON * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn non_dyadic_optimum_rounds_by_an_ulp() {
    let rows = [
        [0, -10, 0, 0, 0, 0, 0],
        [-10, 4, 10, -8, 8, 4, 10],
        [0, 10, 0, 0, 0, -2, 0],
        [0, -8, 0, 6, 0, 3, 0],
        [0, 8, 0, 0, 0, -9, 0],
        [0, 4, -2, 3, -9, -5, -6],
        [0, 10, 0, 0, 0, -6, 0],
    ];
    let a = SymmetricMatrix::from_upper_fn(7, |i, j| rows[i][j] as f64).unwrap();
    let s = shifted_gersh_lower(&a);
    let cf = closed_form_lower(&a);
    assert_eq!(s.value, -42.16666666666667);
    assert!(!is_dyadic(s.x_star));
    assert!(within_ulps(s.value, cf.value, 4.0));
    assert!((s.x_star - cf.x_star).abs() < 1e-12);
}

fn signed_matrix() -> impl Strategy<Value = SymmetricMatrix> {
    (1usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(-10i32..=10, n * n).prop_map(move |v| {
            SymmetricMatrix::from_upper_fn(n, |i, j| v[i * n + j] as f64).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn integer_matrices_reproduce_exactly(a in signed_matrix()) {
        let s = shifted_gersh_lower(&a);
        let cf = closed_form_lower(&a);
        if is_dyadic(s.x_star) {
            prop_assert_eq!(s.value, cf.value);
        } else {
            prop_assert!(within_ulps(s.value, cf.value, 4.0), "{} vs {}", s.value, cf.value);
        }
        prop_assert!((naive_dominance(&a, s.x_star) - s.value).abs() < 1e-9);
        prop_assert!(s.active.iter().all(|&k| (lower_lines(&a).lines()[k].eval(s.x_star) - s.value).abs() <= 1e-9));
    }

    #[test]
    fn shifting_never_hurts(a in signed_matrix()) {
        prop_assert!(shifted_gersh_lower(&a).value >= gershgorin_bounds(&a).lower);
        prop_assert!(shifted_gersh_upper(&a).value <= gershgorin_bounds(&a).upper);
    }
}
