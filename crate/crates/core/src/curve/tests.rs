use super::*;
use crate::algebra::rat;

fn ex1() -> ConfigCurve {
    ConfigCurve::from_strings(Some("ex1"), None, &["t-1", "t", "t-1", "-t"]).unwrap()
}

fn ex2() -> ConfigCurve {
    ConfigCurve::from_strings(
        None,
        Some("25t^4-14t^2+25"),
        &["(5-5t^2+w)/(6t)", "(-5t^2-5+w)/(8t)", "(25t^2-7-5w)/24", "t"],
    )
    .unwrap()
}

fn ex3() -> ConfigCurve {
    ConfigCurve::from_strings(
        None,
        Some("t^4-8t^3+2t^2+56t-47"),
        &["(-t^2+2t+5-w)/(2*(t+3))", "(t^2+1+w)/(4*(2-t))", "(t^2-4t+1+w)/(4*(t-1))", "t"],
    )
    .unwrap()
}

fn s(x: &str) -> Scalar {
    Scalar::parse(x).unwrap()
}

fn fin(x: &str) -> CoordValue {
    CoordValue::Finite(s(x))
}

#[test]
fn rational_evaluation() {
    let c = ex1();
    let p = CurvePoint::standard(s("i"), None);
    assert_eq!(c.eval_all(&p, 8, 256).unwrap(), vec![fin("-1+i"), fin("i"), fin("-1+i"), fin("-i")]);
    let inf = CurvePoint::at_infinity(None);
    assert_eq!(c.eval_coord(1, &inf, 8, 256).unwrap(), CoordValue::Infinite);
}

#[test]
fn double_cover_evaluation() {
    let c = ex2();
    let p = CurvePoint::standard(s("i"), Some(s("8")));
    assert_eq!(c.eval_coord(0, &p, 8, 256).unwrap(), fin("-3i"));
}

#[test]
fn removable_singularity_resolved_by_series() {
    // q(1) = 4; on w = 2 the third coordinate is 0/0, on w = −2 a pole.
    let c = ex3();
    let p = CurvePoint::standard(s("1"), Some(s("2")));
    assert!(matches!(c.eval_coord(2, &p, 8, 256).unwrap(), CoordValue::Finite(_)));
    let p = CurvePoint::standard(s("1"), Some(s("-2")));
    assert_eq!(c.eval_coord(2, &p, 8, 256).unwrap(), CoordValue::Infinite);
}

#[test]
fn points_on_both_branches() {
    let c = ex3();
    let pts = c.find_points_where(3, &Gaussian::new(rat(0, 1), rat(-1, 1)), 8, 256).unwrap();
    assert_eq!(pts.len(), 2);
    for p in &pts {
        assert_eq!(p.param, s("-i"));
        let w = p.branch.clone().unwrap();
        assert!(w == s("-4+8i") || w == s("4-8i"), "{w}");
    }
}

#[test]
fn constant_coordinate_rejected() {
    let c = ConfigCurve::from_strings(None, None, &["3", "t", "t", "t"]).unwrap();
    assert!(matches!(c.find_points_where(0, &Gaussian::i(), 8, 256), Err(Error::Precondition(_))));
}

#[test]
fn chart_consistency() {
    let c = ex2();
    let p = CurvePoint::standard(s("2"), Some(s("sqrt(369)")));
    let q = c.to_other_chart(&p).unwrap();
    for k in 0..4 {
        assert_eq!(c.eval_coord(k, &p, 8, 256).unwrap(), c.eval_coord(k, &q, 8, 256).unwrap());
    }
}

#[test]
fn w_series_squares_to_radicand() {
    struct Check;
    impl AtPoint for Check {
        type Out = bool;
        fn run<F: ComplexField>(self, local: Local<'_, F>) -> Result<bool> {
            let w = local.w.clone().unwrap();
            let q = local.chart.radicand.clone().unwrap();
            let qs = Local::<F>::poly_at(&q, &local.t0);
            let diff = w.clone() * w - qs;
            Ok(diff.valuation().is_none())
        }
    }
    let c = ex3();
    for (t, w) in [("i", "4+8i"), ("0", "sqrt(-47)"), ("1/2", "sqrt(-311/16)")] {
        let p = CurvePoint::standard(s(t), Some(s(w)));
        assert!(c.at_point(&p, 8, 256, Check).unwrap(), "at {t}");
    }
}

#[test]
fn radicand_must_be_squarefree() {
    assert!(ConfigCurve::from_strings(None, Some("(t-1)^2*(t+1)"), &["w", "t"]).is_err());
}

#[test]
fn parse_errors_point_into_the_file() {
    let src = "{\n  \"kind\": \"rational\",\n  \"coords\": [\"t\", \"t+*1\"]\n}";
    match ConfigCurve::from_json(src) {
        Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (3, 22)),
        other => panic!("{other:?}"),
    }
}
