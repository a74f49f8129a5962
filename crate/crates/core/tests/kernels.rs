use std::f64::consts::PI;

use disct::kernels::*;
use disct::numerics::{integrate_halfspace, HalfSpaceDomain};
use disct::poisson::{c_d, poisson_p_at, HalfSpacePoint};
use disct::{ConstantMatrix, LatticePoint, PeriodicPoissonEvaluator, QuadConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn lp(v: &[i64]) -> LatticePoint {
    LatticePoint::new(v.to_vec())
}

fn zeta3() -> f64 {
    (1..200_000).map(|k| 1.0 / (k as f64).powi(3)).sum::<f64>()
}

// Composite Simpson on [0, 40] for the correction integral of the d = 1 kernel.
fn correction_simpson(z: f64) -> f64 {
    let f = |y: f64| if y == 0.0 { 0.0 } else { 2.0 * y.powi(3) / ((y * y + PI * PI * z * z) * y.sinh().powi(2)) };
    let n = 40_000;
    let h = 40.0 / n as f64;
    let mut s = f(0.0) + f(40.0);
    for i in 1..n {
        s += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

// Largest singular value by power iteration on AᵀA.
fn power_norm(a: &ConstantMatrix) -> f64 {
    let n = a.dim();
    let mut v = vec![1.0; n];
    for _ in 0..5000 {
        let av = a.apply(&v);
        let mut w = vec![0.0; n];
        for i in 0..n {
            for j in 0..n {
                w[j] += a.get(i, j) * av[i];
            }
        }
        let norm = w.iter().map(|x| x * x).sum::<f64>().sqrt();
        v = w.iter().map(|x| x / norm).collect();
    }
    a.apply(&v).iter().map(|x| x * x).sum::<f64>().sqrt()
}

#[test]
fn cz_values() {
    assert!((cz_riesz_kernel(&lp(&[1]), 1, 1).unwrap() - 1.0 / PI).abs() < 1e-15);
    assert!((cz_riesz_kernel(&lp(&[1, 0]), 1, 2).unwrap() - 0.5 / PI).abs() < 1e-15);
    let v = cz_riesz_kernel(&lp(&[1, 1]), 1, 2).unwrap();
    assert!((v - 2f64.powf(-1.5) / (2.0 * PI)).abs() < 1e-15);
    assert!((v - 0.0563).abs() < 5e-5);
    assert_eq!(cz_riesz_kernel(&lp(&[0, 0]), 1, 2).unwrap(), 0.0);
    assert_eq!(cz_riesz_kernel(&lp(&[0, 3]), 1, 2).unwrap(), 0.0);
    assert_eq!(cz_riesz_kernel(&lp(&[3, -2]), 1, 2).unwrap(), -cz_riesz_kernel(&lp(&[-3, 2]), 1, 2).unwrap());
    assert!(cz_riesz_kernel(&lp(&[1, 0]), 3, 2).is_err());
    assert_eq!(hilbert_dis_kernel(4), 1.0 / (4.0 * PI));
}

#[test]
fn hmatrix_entries() {
    let h = hmatrix(1, 1).unwrap();
    assert_eq!(h.rows(), vec![vec![0.0, -1.0], vec![1.0, 0.0]]);
    let h = hmatrix(1, 2).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            let want = match (i, j) {
                (0, 2) => -1.0,
                (2, 0) => 1.0,
                _ => 0.0,
            };
            assert_eq!(h.get(i, j), want);
        }
    }
    assert!(h.is_orthogonal());
    assert_eq!(h.op_norm(), 1.0);
    assert!(hmatrix(0, 2).is_err());
    assert!(hmatrix(3, 2).is_err());
}

#[test]
fn hmatrix_antisymmetric_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for d in 1..=4 {
        for k in 1..=d {
            let h = hmatrix(k, d).unwrap();
            for _ in 0..20 {
                let v: Vec<f64> = (0..=d).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let w: Vec<f64> = (0..=d).map(|_| rng.gen_range(-1.0..1.0)).collect();
                assert!((h.bilinear(&v, &w) + h.bilinear(&w, &v)).abs() < 1e-15);
                assert!(h.bilinear(&v, &v).abs() < 1e-15);
            }
            let generic = ConstantMatrix::new(d + 1, h.entries().to_vec()).unwrap();
            assert!((generic.op_norm() - 1.0).abs() < 1e-12);
            assert!(generic.is_orthogonal());
        }
    }
}

#[test]
fn matrix_norm_and_orthogonality() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for dim in 2..=5 {
        let e: Vec<f64> = (0..dim * dim).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let a = ConstantMatrix::new(dim, e.clone()).unwrap();
        assert!((a.op_norm() - power_norm(&a)).abs() < 1e-8, "{} vs {}", a.op_norm(), power_norm(&a));
        assert!(!a.is_orthogonal());
        let mut anti = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                anti[i * dim + j] = e[i * dim + j] - e[j * dim + i];
            }
        }
        assert!(ConstantMatrix::new(dim, anti).unwrap().is_orthogonal());
    }
    assert_eq!(ConstantMatrix::identity(3).op_norm(), 1.0);
    assert!(!ConstantMatrix::identity(3).is_orthogonal());
    assert!(ConstantMatrix::new(2, vec![1.0; 3]).is_err());
    assert!(ConstantMatrix::new(2, vec![1.0, f64::NAN, 0.0, 0.0]).is_err());
}

#[test]
fn integrands_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for d in 1..=3 {
        for _ in 0..50 {
            let n: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
            let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let y = rng.gen_range(0.05..3.0);
            let k = rng.gen_range(1..=d);
            let r = prob_integrands(&lp(&n), k, d, &HalfSpacePoint::new(x.clone(), y).unwrap()).unwrap();
            assert!((r.u - (4.0 * r.s - 3.0 * r.t)).abs() <= 1e-14 * (r.s.abs() + r.t.abs()));
            // reflecting x_k and n_k flips the sign
            let mut xr = x.clone();
            xr[k - 1] = -xr[k - 1];
            let mut nr = n.clone();
            nr[k - 1] = -nr[k - 1];
            let m = prob_integrands(&lp(&nr), k, d, &HalfSpacePoint::new(xr, y).unwrap()).unwrap();
            assert!((m.s + r.s).abs() <= 1e-15 * r.s.abs().max(1e-300));
            assert!((m.t + r.t).abs() <= 1e-15 * r.t.abs().max(1e-300));
        }
    }
}

#[test]
fn integrands_d1_spot_value() {
    // 2c²(d+1) = 4/π² and (4/3)c²(d+1)² = 16/(3π²) for d = 1
    let (x, y, n) = (0.7, 0.4, 2.0);
    let a = x * x + y * y;
    let b = (x - n) * (x - n) + y * y;
    let s = 4.0 / (PI * PI) * x * y * y / (a * a * b);
    let t = 16.0 / (3.0 * PI * PI) * x * y.powi(4) / (a * a * b * b);
    let r = prob_integrands(&lp(&[2]), 1, 1, &HalfSpacePoint::new(vec![x], y).unwrap()).unwrap();
    assert!((r.s - s).abs() < 1e-14 * s);
    assert!((r.t - t).abs() < 1e-14 * t);
}

#[test]
fn integrals_equal_cz_value_d1() {
    let cfg = QuadConfig::new(1e-9, 1e-11, 2_000_000);
    for n in [1i64, 2, -3] {
        let want = cz_riesz_kernel(&lp(&[n]), 1, 1).unwrap();
        for r in prob_integrals(&lp(&[n]), 1, 1, &cfg).unwrap() {
            assert!((r.value - want).abs() < 1e-6 * want.abs(), "n = {n}: {} vs {want}", r.value);
        }
    }
}

#[test]
fn integrals_equal_cz_value_d2() {
    let cfg = QuadConfig::new(1e-7, 1e-10, 20_000_000);
    for n in [[1i64, 0], [1, 1], [2, 1]] {
        let want = cz_riesz_kernel(&lp(&n), 1, 2).unwrap();
        for r in prob_integrals(&lp(&n), 1, 2, &cfg).unwrap() {
            assert!((r.value - want).abs() < 1e-6, "n = {n:?}: {} vs {want}", r.value);
        }
    }
}

#[test]
fn u_tail_matches_truncated_integral() {
    let cfg = QuadConfig::new(1e-10, 1e-12, 2_000_000);
    for d in [1usize, 2] {
        let n: Vec<i64> = if d == 1 { vec![2] } else { vec![1, 1] };
        let nf: Vec<f64> = n.iter().map(|&v| v as f64).collect();
        let want = cz_riesz_kernel(&lp(&n), 1, d).unwrap();
        for y_cut in [0.5, 2.0, 6.0] {
            let dom = HalfSpaceDomain::new(d).with_y_max(y_cut);
            let cfg = if d == 1 { cfg } else { QuadConfig::new(1e-7, 1e-10, 20_000_000) };
            let body = integrate_halfspace(
                |x, y| prob_integrands(&lp(&n), 1, d, &HalfSpacePoint { x: x.to_vec(), y }).unwrap().u,
                &dom,
                &cfg,
            )
            .unwrap();
            let got = body.value + u_tail(&nf, 1, y_cut);
            assert!((got - want).abs() < 1e-6, "d = {d}, Y = {y_cut}: {got} vs {want}");
        }
    }
}

#[test]
fn general_integral_matches_closed_form_d1() {
    let cfg = QuadConfig::default();
    for n in [1i64, 2, 3, -2, 10] {
        let r = prob_riesz_kernel(&lp(&[n]), 1, 1, &cfg).unwrap();
        let want = prob_hilbert_kernel_1d(n);
        assert!((r.value - want).abs() < 1e-6 * want.abs().max(1e-2), "n = {n}: {} vs {want}", r.value);
    }
}

#[test]
fn prob_kernel_d2_table_values() {
    let cfg = QuadConfig::relaxed();
    for (n, want) in [([1i64, 0], 0.2051), ([2, 1], 0.0315), ([1, 1], 0.0698)] {
        let r = prob_riesz_kernel(&lp(&n), 1, 2, &cfg).unwrap();
        assert!((r.value - want).abs() < 6e-5, "{n:?}: {} vs {want}", r.value);
    }
}

#[test]
fn prob_kernel_d2_symmetries() {
    let cfg = QuadConfig::relaxed();
    let ev = PeriodicPoissonEvaluator::new(2);
    assert_eq!(prob_riesz_kernel(&lp(&[0, 3]), 1, 2, &cfg).unwrap().value, 0.0);
    let a = prob_riesz_kernel_with(&ev, &lp(&[1, 1]), 1, &cfg).unwrap().value;
    let b = prob_riesz_kernel_with(&ev, &lp(&[-1, 1]), 1, &cfg).unwrap().value;
    let c = prob_riesz_kernel_with(&ev, &lp(&[1, 1]), 2, &cfg).unwrap().value;
    assert!((a + b).abs() < 1e-6, "{a} {b}");
    // (1,1) is fixed by swapping the axes
    assert!((a - c).abs() < 1e-6, "{a} {c}");
}

#[test]
fn prob_kernel_approaches_cz_kernel() {
    // |n|^d |K_H − K_CZ| shrinks along the first axis
    let cfg = QuadConfig::relaxed();
    let ev = PeriodicPoissonEvaluator::new(2);
    let mut last = f64::INFINITY;
    for m in [2i64, 4, 8, 16] {
        let n = lp(&[m, 0]);
        let k = prob_riesz_kernel_with(&ev, &n, 1, &cfg).unwrap().value;
        let gap = n.norm2() * (k - cz_riesz_kernel(&n, 1, 2).unwrap()).abs();
        assert!(gap < last, "m = {m}: {gap} ≥ {last}");
        last = gap;
    }
}

#[test]
fn closed_form_d1_against_simpson() {
    for n in [1i64, 2, 5] {
        let want = (1.0 + correction_simpson(n as f64)) / (PI * n as f64);
        assert!((prob_hilbert_kernel_1d(n) - want).abs() < 1e-10);
    }
    assert!((hilbert_correction(1.0) - correction_simpson(1.0)).abs() < 1e-11);
}

#[test]
fn closed_form_d1_properties() {
    assert_eq!(prob_hilbert_kernel_1d(0), 0.0);
    let bound = 3.0 * zeta3() / PI.powi(3);
    for n in 1..=50i64 {
        let k = prob_hilbert_kernel_1d(n);
        assert_eq!(prob_hilbert_kernel_1d(-n), -k);
        assert!(k >= 1.0 / (PI * n as f64));
    }
    for n in [10i64, 100] {
        let gap = n as f64 * prob_hilbert_kernel_1d(n) - 1.0 / PI;
        assert!(gap > 0.0 && gap <= bound / (n * n) as f64, "n = {n}: {gap}");
    }
}

#[test]
fn finite_w_converges_to_limit_d1() {
    let cfg = QuadConfig::relaxed();
    let h = hmatrix(1, 1).unwrap();
    for n in [1i64, 2] {
        let want = prob_hilbert_kernel_1d(n);
        let mut last = f64::INFINITY;
        for w in [10.0, 100.0, 1000.0] {
            let r = finite_w_kernel(&lp(&[n]), &lp(&[0]), &h, w, 1, &cfg).unwrap();
            let gap = (r.value - want).abs();
            assert!(gap < last, "n = {n}, w = {w}: {gap}");
            last = gap;
        }
        assert!(last < 1e-3);
    }
}

#[test]
fn finite_w_identity_diagonal() {
    let cfg = QuadConfig::relaxed();
    for d in [1usize, 2] {
        let id = ConstantMatrix::identity(d + 1);
        let ev = PeriodicPoissonEvaluator::new(d);
        for w in [1.0, 10.0] {
            let n = LatticePoint::unit(1, d);
            let neg: Vec<f64> = n.as_f64().iter().map(|v| -v).collect();
            let want = 1.0 - poisson_p_at(&neg, w) / ev.h(&vec![0.0; d], w);
            let r = finite_w_kernel(&n, &n, &id, w, d, &cfg).unwrap();
            assert!((r.value - want).abs() < 1e-4, "d = {d}, w = {w}: {} vs {want}", r.value);
        }
    }
}

#[test]
fn finite_w_zero_matrix() {
    let r = finite_w_kernel(&lp(&[1]), &lp(&[0]), &ConstantMatrix::zero(2), 10.0, 1, &QuadConfig::default()).unwrap();
    assert_eq!(r.value, 0.0);
    assert!(finite_w_kernel(&lp(&[1]), &lp(&[0]), &ConstantMatrix::zero(2), 0.0, 1, &QuadConfig::default()).is_err());
    assert!(finite_w_kernel(&lp(&[1, 0]), &lp(&[0, 0]), &ConstantMatrix::zero(2), 1.0, 2, &QuadConfig::default()).is_err());
}

#[test]
fn limit_kernel_d1_translation_invariant() {
    let cfg = QuadConfig::default();
    let h = hmatrix(1, 1).unwrap();
    for (n, m) in [(1i64, 0i64), (3, 2), (-1, -2), (0, 2)] {
        let r = limit_kernel(&lp(&[n]), &lp(&[m]), &h, 1, &cfg).unwrap();
        let want = prob_hilbert_kernel_1d(n - m);
        assert!((r.value - want).abs() < 1e-6, "({n},{m}): {} vs {want}", r.value);
    }
}

#[test]
fn limit_kernel_d2_matches_table() {
    let r = limit_kernel(&lp(&[1, 0]), &lp(&[0, 0]), &hmatrix(1, 2).unwrap(), 2, &QuadConfig::new(1e-4, 1e-6, 10_000_000)).unwrap();
    assert!((r.value - 0.2051).abs() < 1e-3, "{}", r.value);
}

#[test]
fn limit_kernel_identity_matches_large_w() {
    let cfg = QuadConfig::relaxed();
    let id = ConstantMatrix::identity(2);
    for (n, m) in [(1i64, 0i64), (2, 0)] {
        let lim = limit_kernel(&lp(&[n]), &lp(&[m]), &id, 1, &cfg).unwrap().value;
        let fw = finite_w_kernel(&lp(&[n]), &lp(&[m]), &id, 1000.0, 1, &cfg).unwrap().value;
        assert!((lim - fw).abs() < 1e-3, "({n},{m}): {lim} vs {fw}");
    }
    let diag = limit_kernel(&lp(&[0]), &lp(&[0]), &id, 1, &cfg).unwrap().value;
    assert!((diag - 1.0).abs() < 1e-4, "{diag}");
}

#[test]
fn rotation_2d_values() {
    let v = rotation_kernel_2d(&lp(&[1, 0]), 1).unwrap();
    assert!((v - (2.0 * 2f64.sqrt() - 2.0) / (2.0 * PI)).abs() < 1e-15);
    assert!((v - 0.1318).abs() < 5e-5);
    assert!((rotation_kernel_2d(&lp(&[1, 1]), 1).unwrap() - 0.0649).abs() < 5e-5);
    assert!((rotation_kernel_2d(&lp(&[2, 1]), 1).unwrap() - 0.0284).abs() < 5e-5);
    assert!((rotation_kernel_2d(&lp(&[3, 0]), 1).unwrap() - 0.0172).abs() < 5e-5);
    assert_eq!(rotation_kernel_2d(&lp(&[0, 4]), 1).unwrap(), 0.0);
    for n in LatticePoint::cube(2, 4) {
        let a = rotation_kernel_2d(&n, 1).unwrap();
        let b = rotation_kernel_2d(&lp(&[-n.coords()[0], n.coords()[1]]), 1).unwrap();
        assert!((a + b).abs() < 1e-15);
        // axis 2 is axis 1 with the coordinates swapped
        assert!((rotation_kernel_2d(&n.swapped(0, 1), 2).unwrap() - a).abs() < 1e-15);
    }
}

#[test]
fn rotation_integral_matches_closed_form() {
    let cfg = QuadConfig::new(1e-11, 1e-13, 100_000);
    for n in LatticePoint::cube(2, 5) {
        if n.norm() > 5.0 {
            continue;
        }
        for k in [1, 2] {
            let r = rotation_kernel(&n, k, 2, &cfg).unwrap().value;
            let want = rotation_kernel_2d(&n, k).unwrap();
            assert!((r - want).abs() < 1e-8, "{n} k={k}: {r} vs {want}");
        }
    }
}

#[test]
fn rotation_prefactor_d2() {
    // the normalizing constant of the rotation average is π c_d
    assert!((PI * c_d(2) - 0.5).abs() < 1e-15);
}

#[test]
fn rotation_approaches_cz_kernel() {
    let cfg = QuadConfig::new(1e-10, 1e-14, 200_000);
    for d in [2usize, 3] {
        let mut last = f64::INFINITY;
        for m in [2i64, 4, 5, 8, 10, 16, 20] {
            let mut c = vec![0; d];
            c[0] = m;
            let n = lp(&c);
            let k = rotation_kernel(&n, 1, d, &cfg).unwrap().value;
            let gap = n.norm().powi(d as i32) * (k - cz_riesz_kernel(&n, 1, d).unwrap()).abs();
            assert!(gap < last, "d = {d}, m = {m}: {gap}");
            last = gap;
        }
        assert!(last < 1e-2);
    }
}

#[test]
fn rotation_higher_d_symmetries() {
    let cfg = QuadConfig::new(1e-9, 1e-12, 200_000);
    let a = rotation_kernel(&lp(&[2, 1, 0]), 1, 3, &cfg).unwrap().value;
    let b = rotation_kernel(&lp(&[-2, 1, 0]), 1, 3, &cfg).unwrap().value;
    let c = rotation_kernel(&lp(&[1, 2, 0]), 2, 3, &cfg).unwrap().value;
    let e = rotation_kernel(&lp(&[2, 0, 1]), 1, 3, &cfg).unwrap().value;
    assert!(a > 0.0);
    assert!((a + b).abs() < 1e-12);
    assert!((a - c).abs() < 1e-12);
    assert!((a - e).abs() < 1e-12);
    assert_eq!(rotation_kernel(&lp(&[0, 2, 1]), 1, 3, &cfg).unwrap().value, 0.0);
    assert!(rotation_kernel(&lp(&[1]), 1, 1, &cfg).is_err());
}

#[test]
fn continuous_hilbert_kernel() {
    assert!(continuous_prob_hilbert(0.0).is_err());
    let inside = continuous_prob_hilbert(1.0 - 1e-12).unwrap();
    let at = continuous_prob_hilbert(1.0).unwrap();
    assert!((at - inside - hilbert_correction(1.0) / PI).abs() < 1e-9);
    for n in [1i64, 2, -3, 7] {
        let k = prob_hilbert_kernel_1d(n);
        assert!((continuous_prob_hilbert(n as f64).unwrap() - k).abs() < 1e-15 * k.abs());
    }
    // the correction integrand carries 2y³, so the ζ(3) estimate doubles
    let bound = (1.0 + 3.0 * zeta3() / (PI * PI)) / PI;
    for i in 0..400 {
        let z = 0.05 + i as f64 * 0.05;
        for s in [z, -z] {
            assert!((s * continuous_prob_hilbert(s).unwrap()).abs() <= bound);
        }
    }
}

#[test]
fn tail_norm_and_fourier_bound() {
    let j = j_tail_l1_norm(&QuadConfig::default()).unwrap().value;
    assert!((j - 0.09956).abs() < 5e-5, "{j}");
    let f = fourier_bound_const();
    assert!((f - 1.09956).abs() < 5e-5, "{f}");
    assert!(f > 1.0);
    assert!((fourier_bound_half_term() - 0.0497822).abs() < 5e-7);
    // the nested and the single-integral routes agree
    assert!((j - (f - 1.0)).abs() < 1e-9, "{j} vs {}", f - 1.0);
    let i1 = hilbert_correction(1.0);
    assert!(i1 > 0.0 && i1 < 3.0 * zeta3() / (PI * PI));
}

#[test]
fn continuous_riesz_at_lattice_points() {
    let cfg = QuadConfig::relaxed();
    let ev = PeriodicPoissonEvaluator::new(2);
    for n in [[1i64, 0], [2, 1], [3, 0]] {
        let direct = prob_riesz_kernel_with(&ev, &lp(&n), 1, &cfg).unwrap().value;
        let z = [n[0] as f64, n[1] as f64];
        let cont = continuous_prob_riesz(&z, 1, 2, &cfg).unwrap().value;
        assert!((direct - cont).abs() < 1e-3 * direct.abs().max(1e-2), "{n:?}: {direct} vs {cont}");
    }
}

#[test]
fn continuous_riesz_shape() {
    let cfg = QuadConfig::new(1e-4, 1e-7, 5_000_000);
    assert!(continuous_prob_riesz(&[0.0, 0.0], 1, 2, &cfg).is_err());
    let inner = continuous_prob_riesz(&[0.5, 0.3], 1, 2, &cfg).unwrap().value;
    assert!((inner - c_d(2) * 0.5 / (0.34f64).powf(1.5)).abs() < 1e-15);
    for z in [[1.3, 0.4], [4.5, -2.0], [0.0, 7.0], [12.0, 9.5]] {
        let r = continuous_prob_riesz(&z, 1, 2, &cfg).unwrap().value;
        let norm2 = z[0] * z[0] + z[1] * z[1];
        assert!(norm2 * r.abs() <= 0.5, "{z:?}: {r}");
    }
    let a = continuous_prob_riesz(&[1.7, 0.6], 1, 2, &cfg).unwrap().value;
    let b = continuous_prob_riesz(&[-1.7, 0.6], 1, 2, &cfg).unwrap().value;
    assert!((a + b).abs() < 1e-5, "{a} {b}");
}

#[test]
fn kernel_kind_dispatch() {
    let cfg = QuadConfig::relaxed();
    assert_eq!(KernelKind::parse("cz", 1).unwrap(), KernelKind::CzRiesz(1));
    assert!(KernelKind::parse("nope", 1).is_err());
    let n = lp(&[3]);
    assert_eq!(KernelKind::HilbertDis.eval(&n, &cfg).unwrap().value, 1.0 / (3.0 * PI));
    assert_eq!(KernelKind::ProbHilbert.eval(&n, &cfg).unwrap().value, prob_hilbert_kernel_1d(3));
    assert_eq!(KernelKind::ProbRiesz(1).eval(&n, &cfg).unwrap().value, prob_hilbert_kernel_1d(3));
    assert!(KernelKind::HilbertDis.eval(&lp(&[1, 0]), &cfg).is_err());
    let r = KernelKind::Rotation(1).eval(&lp(&[1, 1]), &cfg).unwrap().value;
    assert_eq!(r, rotation_kernel_2d(&lp(&[1, 1]), 1).unwrap());
    assert_eq!(KernelKind::CzRiesz(2).to_string(), "cz2");
}
