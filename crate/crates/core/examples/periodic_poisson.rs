//! The periodized Poisson kernel h and its gradient.
use disct::poisson::{c_d, h_closed_form_d1};
use disct::PeriodicPoissonEvaluator;

fn main() {
    let ev = PeriodicPoissonEvaluator::new(1);
    println!("d = 1: evaluator vs sinh(2πy)/(cosh 2πy − cos 2πx)");
    for (x, y) in [(0.0, 0.01), (0.3, 0.1), (0.5, 0.7), (0.1, 3.0)] {
        println!("  h({x}, {y}) = {:.15}  closed {:.15}", ev.h(&[x], y), h_closed_form_d1(x, y));
    }
    for d in 2..=3 {
        let ev = PeriodicPoissonEvaluator::new(d);
        let x = vec![0.25; d];
        let v = ev.h_grad(&x, 0.2);
        println!("d = {d}: c_d = {:.6}, h(¼…, 0.2) = {:.10}, ∂_y h = {:.6e}", c_d(d), v.h, v.grad[d]);
    }
}
