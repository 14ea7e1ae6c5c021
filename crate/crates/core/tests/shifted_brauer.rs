mod common;

use common::{equal_diagonal, grid_sup, naive_brauer, naive_dominance, rng, to_rows, uniform_matrix};
use rand::Rng;
use shiftbound::{
    brauer_bounds, d_lower, eigen_oracle, f_pair, pair_min, shifted_brauer_lower,
    shifted_brauer_upper, tilde_lines, tilde_shifted_lower, SymmetricMatrix,
};

fn random_equal_diagonal(r: &mut impl Rng) -> SymmetricMatrix {
    let n = r.gen_range(2..=7);
    let q = r.gen_range(-5.0..10.0);
    equal_diagonal(to_rows(&uniform_matrix(n, -10.0, 10.0, r)), q)
}

#[test]
fn pair_function_matches_quadratic_roots() {
    let mut r = rng(31);
    for _ in 0..300 {
        let n = r.gen_range(2..=7);
        let a = uniform_matrix(n, -10.0, 10.0, &mut r);
        let x = r.gen_range(0.0..10.0);
        assert!((pair_min(&a, x).0 - naive_brauer(&a, x)).abs() < 1e-9);
        assert_eq!(f_pair(&a, 0, 1, 0.0).unwrap(), shiftbound::classic::brauer_pair_lower(
            a.get(0, 0), a.get(1, 1), a.row_radius(0).unwrap(), a.row_radius(1).unwrap()));
    }
}

#[test]
fn averaging_inequality() {
    let mut r = rng(32);
    for _ in 0..300 {
        let a = random_equal_diagonal(&mut r);
        let n = a.dim();
        for _ in 0..10 {
            let x = r.gen_range(0.0..12.0);
            let (i, j) = (r.gen_range(0..n), r.gen_range(0..n));
            if i == j {
                continue;
            }
            let avg = 0.5 * (d_lower(&a, i, x).unwrap() + d_lower(&a, j, x).unwrap());
            assert!(f_pair(&a, i, j, x).unwrap() >= avg - 1e-9);
        }
    }
}

#[test]
fn tilde_envelope_identity() {
    let mut r = rng(33);
    for _ in 0..300 {
        let a = random_equal_diagonal(&mut r);
        let n = a.dim();
        let env = tilde_lines(&a).unwrap();
        assert_eq!(env.lines().len(), 2 * n - 1);
        for _ in 0..20 {
            let x = r.gen_range(0.0..15.0);
            let mut direct = f64::INFINITY;
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        direct = direct.min(0.5 * (d_lower(&a, i, x).unwrap() + d_lower(&a, j, x).unwrap()));
                    }
                }
            }
            assert!((env.eval(x) - direct).abs() < 1e-9);
        }
    }
}

#[test]
fn ordering_and_soundness() {
    let mut r = rng(34);
    for _ in 0..300 {
        let a = random_equal_diagonal(&mut r);
        let t = tilde_shifted_lower(&a).unwrap();
        let b = shifted_brauer_lower(&a);
        let l1 = eigen_oracle(&a).unwrap().min();
        assert!(t.value <= b.value + 1e-7);
        assert!(b.value <= l1 + 1e-7);
        assert!(t.exact && !b.exact);
    }
}

#[test]
fn general_matrices() {
    let mut r = rng(35);
    for _ in 0..300 {
        let n = r.gen_range(2..=8);
        let a = uniform_matrix(n, -10.0, 10.0, &mut r);
        let b = shifted_brauer_lower(&a);
        let spectrum = eigen_oracle(&a).unwrap();
        assert!(b.value >= brauer_bounds(&a).lower - 1e-9);
        assert!(b.value <= spectrum.min() + 1e-7);
        assert!(b.x_star >= 0.0);
        assert!((pair_min(&a, b.x_star).0 - b.value).abs() < 1e-9);
        let (i, j) = b.pair;
        assert!((f_pair(&a, i, j, b.x_star).unwrap() - b.value).abs() < 1e-9);

        let u = shifted_brauer_upper(&a);
        assert!(u.value >= spectrum.max() - 1e-7);
        assert!(u.value <= brauer_bounds(&a).upper + 1e-9);
        assert!(u.x_star <= 0.0);
    }
}

#[test]
fn candidate_search_is_near_grid_optimum() {
    // the search must do at least as well as a fine brute-force grid
    let mut r = rng(36);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let n = r.gen_range(2..=6);
        let a = common::int_matrix(n, 0, 10, &mut r);
        let b = shifted_brauer_lower(&a);
        let (gv, _) = grid_sup(|x| naive_brauer(&a, x), 10.0, 20_000);
        worst = worst.max(gv - b.value);
    }
    assert!(worst <= 1e-6, "grid beat the candidate search by {worst}");
}

#[test]
fn worked_optima() {
    let a56 = SymmetricMatrix::from_rows(&[[6.0, 5.0, 5.0], [5.0, 6.0, 5.0], [5.0, 5.0, 6.0]]).unwrap();
    let b = shifted_brauer_lower(&a56);
    assert!((b.value - 1.0).abs() < 1e-12 && (b.x_star - 5.0).abs() < 1e-9);
    assert_eq!(tilde_shifted_lower(&a56).unwrap().value, 1.0);
    assert_eq!(naive_dominance(&a56, 5.0), 1.0);
}
