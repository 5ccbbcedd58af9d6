mod common;

use sierpinski_core::closed::{agrees, randic_oracle, randic_polymeric, randic_sierpinski, Variant, REL_TOL};
use sierpinski_core::index::{randic_direct, IndexParams, IndexValue};
use sierpinski_core::sierpinski::{build_polymeric, build_sierpinski, DEFAULT_VERTEX_BUDGET};

fn params(alpha: f64) -> IndexParams {
    IndexParams::new(alpha).unwrap()
}

#[test]
fn sierpinski_matches_oracle() {
    for (name, g) in common::corpus() {
        for t in 1..=3 {
            let s = build_sierpinski(&g, t, DEFAULT_VERTEX_BUDGET).unwrap();
            for alpha in common::ALPHAS {
                let closed = randic_sierpinski(&g, t, &params(alpha)).unwrap().value.to_f64();
                let direct = randic_direct(&s, &params(alpha)).unwrap().to_f64();
                assert!(agrees(closed, direct, REL_TOL), "{name} t={t} a={alpha}: {closed} vs {direct}");
            }
        }
    }
}

#[test]
fn polymeric_matches_oracle() {
    for (name, g) in common::corpus() {
        for t in 1..=3 {
            let p = build_polymeric(&g, t, DEFAULT_VERTEX_BUDGET).unwrap();
            for alpha in common::ALPHAS {
                let closed = randic_polymeric(&g, t, &params(alpha)).unwrap().value.to_f64();
                let direct = randic_direct(&p.graph, &params(alpha)).unwrap().to_f64();
                assert!(agrees(closed, direct, REL_TOL), "{name} t={t} a={alpha}: {closed} vs {direct}");
            }
        }
    }
}

#[test]
fn exact_zagreb_matches_oracle() {
    let exact = IndexParams::exact(1.0).unwrap();
    for (name, g) in common::corpus() {
        for t in 1..=3 {
            for variant in [Variant::Sierpinski, Variant::Polymeric] {
                let closed = sierpinski_core::closed::randic_closed(variant, &g, t, &exact).unwrap().value;
                let oracle = randic_oracle(variant, &g, t, &exact, DEFAULT_VERTEX_BUDGET).unwrap().value;
                assert!(matches!(closed, IndexValue::Exact(_)));
                assert_eq!(closed, oracle, "{name} {variant:?} t={t}");
            }
        }
    }
}

#[test]
fn higher_integer_exponents_are_exact() {
    let cube = IndexParams::exact(3.0).unwrap();
    for (name, g) in common::corpus() {
        let closed = randic_sierpinski(&g, 3, &cube).unwrap().value;
        let oracle = randic_oracle(Variant::Sierpinski, &g, 3, &cube, DEFAULT_VERTEX_BUDGET).unwrap().value;
        assert_eq!(closed, oracle, "{name}");
    }
}

#[test]
fn ratio_to_order_converges_monotonically() {
    for (name, g) in common::corpus() {
        let n = g.order() as f64;
        for alpha in [-0.5, 1.0] {
            let ratios: Vec<f64> = (2..=20)
                .map(|t| randic_sierpinski(&g, t, &params(alpha)).unwrap().value.to_f64() / n.powi(t as i32))
                .collect();
            let steps: Vec<f64> = ratios.windows(2).map(|w| w[1] - w[0]).collect();
            let slack = 1e-14 * ratios[0].abs();
            let sign = steps[0].signum();
            for (k, pair) in steps.windows(2).enumerate() {
                assert!(pair[1] * sign >= -slack, "{name} a={alpha} step {k} changes direction");
                assert!(pair[1].abs() <= pair[0].abs() + slack, "{name} a={alpha} step {k} grows");
            }
            assert!(steps.last().unwrap().abs() <= steps[0].abs() / n.powi(10), "{name} a={alpha}");
        }
    }
}
