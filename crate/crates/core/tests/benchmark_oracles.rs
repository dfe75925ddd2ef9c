//! Random-point cross-check of every benchmark against independently
//! written closed-form expressions, plus domain sanity.
//!
//! The oracle expressions below are deliberately written in a different
//! shape from the library implementations (explicit loops, expanded powers,
//! no iterator combinators) so a transcription slip on either side shows up.

use tornado_core::benchmarks;
use tornado_core::rng::RandomStream;

fn egg_oracle(x: &[f64]) -> f64 {
    let x1 = x[0];
    let x2 = x[1];
    let r1 = x2 + x1 / 2.0 + 47.0;
    let r2 = x1 - (x2 + 47.0);
    -(x2 + 47.0) * f64::sin(f64::sqrt(f64::abs(r1))) - x1 * f64::sin(f64::sqrt(f64::abs(r2)))
}

fn ripple_oracle(x: &[f64]) -> f64 {
    let ln2 = 2.0_f64.ln();
    let mut total = 0.0;
    for idx in 0..2 {
        let xi = x[idx];
        let z = (xi - 0.1) / 0.8;
        let envelope = f64::exp(-2.0 * ln2 * z * z);
        let s = f64::sin(5.0 * std::f64::consts::PI * xi);
        let s6 = s * s * s * s * s * s;
        total += -envelope * s6;
    }
    total
}

fn beale_oracle(x: &[f64]) -> f64 {
    let x1 = x[0];
    let x2 = x[1];
    let t1 = 1.5 - x1 + x1 * x2;
    let t2 = 2.25 - x1 + x1 * (x2 * x2);
    let t3 = 2.625 - x1 + x1 * (x2 * x2 * x2);
    t1 * t1 + t2 * t2 + t3 * t3
}

fn rosmod_oracle(x: &[f64]) -> f64 {
    let x1 = x[0];
    let x2 = x[1];
    let a = x2 - x1 * x1;
    let b = 1.0 - x1;
    let e1 = x1 + 1.0;
    let e2 = x2 + 1.0;
    74.0 + 100.0 * a * a + b * b - 400.0 * f64::exp(-(e1 * e1 + e2 * e2) / 0.1)
}

fn styblinski_oracle(x: &[f64]) -> f64 {
    let mut sum = 0.0;
    for &xi in x {
        sum += xi * xi * xi * xi - 16.0 * xi * xi + 5.0 * xi;
    }
    0.5 * sum
}

fn rastrigin_oracle(x: &[f64]) -> f64 {
    let mut sum = 0.0;
    for &xi in x {
        sum += xi * xi - 10.0 * f64::cos(2.0 * std::f64::consts::PI * xi) + 10.0;
    }
    0.5 * sum
}

fn relative_gap(a: f64, b: f64) -> f64 {
    (a - b).abs() / 1.0_f64.max(a.abs().max(b.abs()))
}

#[test]
fn implementations_match_the_oracles_on_random_points() {
    let cases: [(_, fn(&[f64]) -> f64); 6] = [
        (benchmarks::eggholder(), egg_oracle as fn(&[f64]) -> f64),
        (benchmarks::ripple25(), ripple_oracle),
        (benchmarks::beale(), beale_oracle),
        (benchmarks::rosenbrock_modified(), rosmod_oracle),
        (benchmarks::styblinski_tang(6), styblinski_oracle),
        (benchmarks::rastrigin(6), rastrigin_oracle),
    ];
    let mut rng = RandomStream::new(0xBE9C);
    for (f, oracle) in &cases {
        for _ in 0..1000 {
            let x = f.bounds().sample(&mut rng);
            let got = f.evaluate(&x);
            let want = oracle(&x);
            assert!(got.is_finite(), "{} at {x:?}", f.name());
            assert!(
                relative_gap(got, want) < 1e-10,
                "{} at {x:?}: {got} vs oracle {want}",
                f.name()
            );
        }
    }
}

#[test]
fn scalable_functions_match_oracles_in_every_dimension() {
    let mut rng = RandomStream::new(0x57AB);
    for n in [1, 2, 3, 5, 9, 12] {
        let st = benchmarks::styblinski_tang(n);
        let ra = benchmarks::rastrigin(n);
        for _ in 0..200 {
            let x = st.bounds().sample(&mut rng);
            assert!(relative_gap(st.evaluate(&x), styblinski_oracle(&x)) < 1e-10);
            let x = ra.bounds().sample(&mut rng);
            assert!(relative_gap(ra.evaluate(&x), rastrigin_oracle(&x)) < 1e-10);
        }
    }
}
