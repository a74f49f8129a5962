use std::f64::consts::PI;

use disct::numerics::{integrate_halfspace, Decay, HalfSpaceDomain, QuadConfig};
use disct::poisson::*;
use disct::{LatticePoint, Sequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pt(x: &[f64], y: f64) -> HalfSpacePoint {
    HalfSpacePoint::new(x.to_vec(), y).unwrap()
}

// Oracle: h for d = 1 straight from sinh/cosh.
fn h_sinh(x: f64, y: f64) -> f64 {
    // cosh a − cos b written as 2 sinh²(a/2) + 2 sin²(b/2) to avoid cancellation
    let (a, b) = (2.0 * PI * y, 2.0 * PI * x);
    a.sinh() / (2.0 * (a / 2.0).sinh().powi(2) + 2.0 * (b / 2.0).sin().powi(2))
}

// Oracle: symbolic derivatives of the sinh/cosh form.
fn h_sinh_grad(x: f64, y: f64) -> [f64; 2] {
    let a = 2.0 * PI * y;
    let b = 2.0 * PI * x;
    let den = a.cosh() - b.cos();
    let hx = -a.sinh() * 2.0 * PI * b.sin() / (den * den);
    let hy = 2.0 * PI * (a.cosh() * den - a.sinh() * a.sinh()) / (den * den);
    [hx, hy]
}

fn random_points(rng: &mut ChaCha8Rng, d: usize, count: usize) -> Vec<(Vec<f64>, f64)> {
    (0..count)
        .map(|_| {
            let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-3.0..3.0)).collect();
            let y = 10f64.powf(rng.gen_range(-2.5..1.0));
            (x, y)
        })
        .collect()
}

#[test]
fn poisson_values() {
    assert!((poisson_p(&pt(&[0.0], 1.0), &LatticePoint::zero(1)) - 1.0 / PI).abs() < 1e-15);
    assert!((poisson_p(&pt(&[0.0, 0.0], 1.0), &LatticePoint::zero(2)) - 0.5 / PI).abs() < 1e-15);
    assert!((c_d(3) - 1.0 / (PI * PI)).abs() < 1e-15);
    // generic branch against the Γ formula by hand: Γ(5/2) = 3√π/4
    assert!((c_d(4) - 0.75 * PI.sqrt() * PI.powf(-2.5)).abs() < 1e-15);
    assert!(HalfSpacePoint::new(vec![0.0], 0.0).is_err());
}

#[test]
fn poisson_integrates_to_one() {
    for d in 1..=2 {
        let f = |x: &[f64], y: f64| poisson_p_at(x, y) * (-y).exp();
        let dom = HalfSpaceDomain::new(d).with_decay(Decay::Exponential, 1.0);
        let r = integrate_halfspace(f, &dom, &QuadConfig::new(1e-9, 1e-11, 1_000_000)).unwrap();
        assert!((r.value - 1.0).abs() < 1e-7, "d = {d}: {}", r.value);
    }
}

#[test]
fn poisson_gradient() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for d in 1..=3 {
        let n = LatticePoint::new((0..d as i64).collect());
        for (x, y) in random_points(&mut rng, d, 20) {
            let p0 = pt(&x, y);
            let g = poisson_grad(&p0, &n);
            let p = poisson_p(&p0, &n);
            let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!(norm / p <= d as f64 / y * (1.0 + 1e-12));
            for i in 0..=d {
                let eps = 1e-5 * y.min(1.0);
                let mut xp = x.clone();
                let mut yp = y;
                let mut xm = x.clone();
                let mut ym = y;
                if i < d {
                    xp[i] += eps;
                    xm[i] -= eps;
                } else {
                    yp += eps;
                    ym -= eps;
                }
                let fd = (poisson_p(&pt(&xp, yp), &n) - poisson_p(&pt(&xm, ym), &n)) / (2.0 * eps);
                assert!((fd - g[i]).abs() <= 1e-6 * norm.max(1e-300), "d={d} i={i}: {fd} vs {}", g[i]);
            }
        }
    }
    let g = poisson_grad(&pt(&[0.0], 1.0), &LatticePoint::zero(1));
    assert_eq!(g[0], 0.0);
}

#[test]
fn h_three_strategies_agree_in_d1() {
    let ev = PeriodicPoissonEvaluator::new(1);
    let (x, y) = (0.3, 0.7);
    let want = h_sinh(x, y);
    assert!((ev.h_direct(&[x], y).h - want).abs() < 1e-10);
    assert!((ev.h_fourier(&[x], y).h - want).abs() < 1e-10);
    assert!((h_closed_form_d1(x, y) - want).abs() < 1e-10);
}

#[test]
fn h_direct_matches_closed_form_over_many_scales() {
    let ev = PeriodicPoissonEvaluator::new(1);
    for &y in &[1e-4, 1e-3, 0.01, 0.05, 0.1, 0.25, 0.5, 1.0, 2.0, 4.0] {
        for i in 0..21 {
            let x = -1.3 + 0.13 * i as f64;
            let want = h_sinh(x, y);
            let got = ev.h_direct(&[x], y).h;
            assert!((got - want).abs() < 1e-12 * want.max(1.0), "x={x} y={y}: {got} vs {want}");
            let got = ev.h(&[x], y);
            assert!((got - want).abs() < 1e-12 * want.max(1.0));
        }
    }
}

#[test]
fn h_strategies_agree_around_quarter() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for d in 1..=3 {
        let ev = PeriodicPoissonEvaluator::with_switch(d, 0.25, 10.0);
        for &y in &[0.2, 0.24, 0.25, 0.26, 0.3, 0.5, 1.0, 2.0] {
            for _ in 0..5 {
                let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let a = ev.h_direct(&x, y);
                let b = ev.h_fourier(&x, y);
                assert!((a.h - b.h).abs() < 1e-10 * a.h, "d={d} y={y}: {} vs {}", a.h, b.h);
                for i in 0..=d {
                    assert!((a.grad[i] - b.grad[i]).abs() < 1e-9 * (1.0 + a.grad[i].abs()), "grad d={d} y={y} i={i}");
                }
            }
        }
    }
}

#[test]
fn h_periodic_and_flat_at_height() {
    for d in 1..=3 {
        let ev = PeriodicPoissonEvaluator::new(d);
        let x: Vec<f64> = (0..d).map(|i| 0.17 + 0.1 * i as f64).collect();
        for &y in &[0.01, 0.3, 3.0] {
            let h0 = ev.h(&x, y);
            let shifted: Vec<f64> = x.iter().enumerate().map(|(i, v)| v + (i as f64 * 2.0 - 3.0)).collect();
            assert!((ev.h(&shifted, y) - h0).abs() < 1e-10 * h0);
        }
        assert!((ev.h(&x, 20.0) - 1.0).abs() < 1e-10);
        assert!((ev.h_fourier(&x, 20.0).h - 1.0).abs() < 1e-10);
    }
}

#[test]
fn h_gradient_d1_closed_form() {
    let ev = PeriodicPoissonEvaluator::new(1);
    for &y in &[0.003, 0.05, 0.2, 0.7, 1.5, 4.0] {
        for i in 0..15 {
            let x = -0.7 + 0.1 * i as f64;
            let want = h_sinh_grad(x, y);
            let got = ev.h_grad(&[x], y);
            let (_, cf) = h_closed_form_d1_grad(x, y);
            let scale = 1.0 + want[0].abs() + want[1].abs();
            for k in 0..2 {
                assert!((got.grad[k] - want[k]).abs() < 1e-8 * scale, "x={x} y={y} k={k}");
                assert!((cf[k] - want[k]).abs() < 1e-8 * scale);
            }
        }
    }
}

#[test]
fn h_gradient_finite_differences() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for d in 2..=3 {
        let ev = PeriodicPoissonEvaluator::new(d);
        for (x, y) in random_points(&mut rng, d, 20) {
            let g = ev.h_grad(&x, y);
            let scale: f64 = 1.0 + g.grad[..=d].iter().map(|v| v.abs()).sum::<f64>();
            for i in 0..=d {
                let eps = 1e-5 * y.min(1.0);
                let (mut xp, mut xm) = (x.clone(), x.clone());
                let (mut yp, mut ym) = (y, y);
                if i < d {
                    xp[i] += eps;
                    xm[i] -= eps;
                } else {
                    yp += eps;
                    ym -= eps;
                }
                let fd = (ev.h(&xp, yp) - ev.h(&xm, ym)) / (2.0 * eps);
                assert!((fd - g.grad[i]).abs() < 1e-6 * scale, "d={d} i={i} y={y}: {fd} vs {}", g.grad[i]);
            }
        }
    }
}

#[test]
fn h_gradient_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for d in 1..=3 {
        let ev = PeriodicPoissonEvaluator::new(d);
        for (x, y) in random_points(&mut rng, d, 50) {
            let p = pt(&x, y);
            let g = periodic_h_grad(&p, &ev);
            let h = periodic_h(&p, &ev);
            let norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
            assert!(norm / h <= d as f64 / y * (1.0 + 1e-9), "d={d}");
        }
        let zero = vec![0.0; d];
        for &y in &[0.01, 0.5, 2.0] {
            assert!(ev.h_grad(&zero, y).grad[0].abs() < 1e-12);
        }
    }
}

#[test]
fn h_dominates_p_and_min_one_y() {
    for d in 1..=3 {
        let ev = PeriodicPoissonEvaluator::new(d);
        let mut c_min = f64::INFINITY;
        for i in 0..12 {
            for j in 0..12 {
                let x: Vec<f64> = (0..d).map(|k| if k == 0 { i as f64 / 11.0 } else { 0.5 }).collect();
                let y = 10f64.powf(-3.0 + 4.0 * j as f64 / 11.0);
                let h = ev.h(&x, y);
                assert!(h >= poisson_p_at(&x, y) * (1.0 - 1e-12));
                c_min = c_min.min(h / y.min(1.0));
            }
        }
        assert!(c_min > 0.05, "d={d}: measured C = {c_min}");
    }
}

#[test]
fn green_function() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for d in 1..=3 {
        for (x, y) in random_points(&mut rng, d, 30) {
            let g = green_w(&pt(&x, y), 2.0).unwrap();
            assert!(g > 0.0);
        }
        let p = pt(&vec![0.3; d], 0.7);
        let n = LatticePoint::unit(1, d);
        let mut prev = f64::INFINITY;
        for &w in &[10.0, 100.0, 1000.0] {
            let ratio = green_w(&p, w).unwrap() / poisson_p(&pt(&vec![0.0; d], w), &n);
            let dev = (ratio - 2.0 * p.y).abs();
            assert!(dev < prev);
            prev = dev;
            assert!(ratio <= 2.0 * p.y * g_bound(p.y / w, d).unwrap() * (1.0 + 1e-12));
        }
        assert!(prev < 2e-2);
        assert!(green_w(&pt(&vec![0.0; d], 2.0), 2.0).is_err());
    }
}

#[test]
fn green_ratio_bound_sampled() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for d in 1..=3 {
        for _ in 0..200 {
            let n = LatticePoint::new((0..d).map(|_| rng.gen_range(-2..=2)).collect());
            let w = n.norm().max(0.5) * rng.gen_range(1.0..20.0);
            let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let y = rng.gen_range(0.01..3.0 * w);
            if (y / w - 1.0).abs() < 1e-3 {
                continue;
            }
            let ratio = green_w(&pt(&x, y), w).unwrap() / poisson_p(&pt(&vec![0.0; d], w), &n);
            assert!(ratio <= 2.0 * y * g_bound(y / w, d).unwrap() * (1.0 + 1e-10), "d={d}");
        }
    }
}

#[test]
fn g_bound_values() {
    assert!((g_bound(0.0, 2).unwrap() - 2f64.powf(1.5)).abs() < 1e-14);
    assert!((g_bound(0.5, 1).unwrap() - 9f64.ln()).abs() < 1e-14);
    assert!(g_bound(1.0, 1).is_err());
    let mut prev = 0.0;
    for i in 1..50 {
        let t = 1.0 - 0.5f64.powi(i);
        let v = g_bound(t, 1).unwrap();
        assert!(v > prev);
        prev = v;
    }
}

#[test]
fn psi_values() {
    assert!((psi_boundary(&[0.5]) - 4.0 / (PI * PI)).abs() < 1e-15);
    for d in 1..=2 {
        let ev = PeriodicPoissonEvaluator::new(d);
        for n in LatticePoint::cube(d, 2) {
            let want = if n.is_zero() { 1.0 } else { 0.0 };
            assert!((psi_boundary(&n.as_f64()) - want).abs() < 1e-15);
            assert!((ev.psi(&n.as_f64()) - want).abs() < 1e-15);
        }
    }
    // d = 1 general path against the sinc² fast path
    let ev = PeriodicPoissonEvaluator::new(1);
    for i in 1..40 {
        let x = -2.0 + 0.1037 * i as f64;
        assert!((ev.psi(&[x]) - psi_boundary(&[x])).abs() < 1e-12);
    }
}

#[test]
fn psi_partition_bound() {
    for d in 1..=2 {
        let ev = PeriodicPoissonEvaluator::new(d);
        for s in [0.13, 0.37, 0.5] {
            let x: Vec<f64> = (0..d).map(|i| s + 0.21 * i as f64).collect();
            let r = if d == 1 { 2000 } else { 60 };
            let total: f64 = LatticePoint::cube(d, r)
                .iter()
                .map(|n| {
                    let z: Vec<f64> = x.iter().zip(n.coords()).map(|(a, &b)| a - b as f64).collect();
                    ev.psi(&z)
                })
                .sum();
            assert!(total <= 1.0 + 1e-8, "d={d}: {total}");
            assert!(total > 0.99);
        }
    }
}

#[test]
fn psi_is_boundary_limit() {
    for d in 1..=2 {
        let ev = PeriodicPoissonEvaluator::new(d);
        for s in [0.13, 0.37, 0.5, 1.7] {
            let x: Vec<f64> = (0..d).map(|i| s - 0.29 * i as f64).collect();
            let y = 1e-7;
            let limit = poisson_p_at(&x, y) / ev.h(&x, y);
            assert!((ev.psi(&x) - limit).abs() < 1e-6, "d={d} x={x:?}");
        }
    }
}

#[test]
fn harmonic_extension_properties() {
    let ev = PeriodicPoissonEvaluator::new(1);
    let delta = Sequence::delta(LatticePoint::zero(1));
    for &(x, y) in &[(0.0, 0.01), (0.3, 0.5), (2.0, 3.0)] {
        let p = pt(&[x], y);
        let u = harmonic_extension(&delta, &p, &ev);
        assert!(u > 0.0 && u <= 1.0);
        let direct = poisson_p(&p, &LatticePoint::zero(1)) / periodic_h(&p, &ev);
        assert_eq!(u, direct);
    }
    let ones = Sequence::from_slice_1d(-20_000, &vec![1.0; 40_001]);
    let u = harmonic_extension(&ones, &pt(&[0.4], 0.5), &ev);
    assert!((u - 1.0).abs() < 1e-4);

    // boundary values follow f_ext = Σ f(n) Ψ(x − n)
    let f = Sequence::from_pairs(1, vec![(LatticePoint::new(vec![0]), 1.0), (LatticePoint::new(vec![1]), -2.0), (LatticePoint::new(vec![3]), 0.5)]).unwrap();
    for &x in &[0.25, 0.5, 1.4, 2.2] {
        let u = harmonic_extension(&f, &pt(&[x], 1e-6), &ev);
        let ext: f64 = f.iter().map(|(n, v)| v * psi_boundary(&[x - n.coords()[0] as f64])).sum();
        assert!((u - ext).abs() < 1e-4, "x={x}: {u} vs {ext}");
    }
}
