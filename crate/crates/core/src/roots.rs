//! Roots of polynomials over ℚ(i).
//!
//! Roots are located numerically (Aberth iteration in `f64`, then Newton
//! polishing at high precision) and then recognised exactly: Gaussian
//! rational roots are recovered by continued fractions, conjugate pairs of
//! a quadratic factor over ℚ(i) become elements of ℚ(i)(√d). Every exact
//! root is verified by exact evaluation or exact division; anything else
//! is returned as a high-precision approximation with an isolation radius.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{BigComplex, Field, Gaussian, QuadExt, Rational, Ring, Scalar};
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug)]
pub enum Root {
    Gaussian(Gaussian),
    Quad(QuadExt),
    /// Certified: a root lies within `radius` of `value`.
    Approx { value: BigComplex, radius: f64 },
}

impl Root {
    pub fn approx(&self) -> Complex64 {
        match self {
            Root::Gaussian(g) => g.to_complex64(),
            Root::Quad(q) => q.to_complex64(),
            Root::Approx { value, .. } => value.to_complex64(),
        }
    }

    pub fn to_scalar(&self) -> Scalar {
        match self {
            Root::Gaussian(g) => Scalar::from_gaussian(g.clone()),
            Root::Quad(q) => Scalar::from_quad(q.clone()),
            Root::Approx { value, .. } => Scalar::Complex(value.clone()),
        }
    }
}

fn to_c64(p: &Poly<Gaussian>) -> Vec<Complex64> {
    p.coeffs().iter().map(|c| c.to_complex64()).collect()
}

fn horner_c64(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut v = Complex64::new(0.0, 0.0);
    let mut d = Complex64::new(0.0, 0.0);
    for a in c.iter().rev() {
        d = d * z + v;
        v = v * z + a;
    }
    (v, d)
}

/// Simultaneous Aberth–Ehrlich iteration on a squarefree polynomial.
fn aberth(c: &[Complex64]) -> Vec<Complex64> {
    let n = c.len() - 1;
    let lead = c[n];
    let bound = 1.0 + c[..n].iter().map(|a| (a / lead).norm()).fold(0.0, f64::max);
    let r = bound.min(1e6) * 0.7;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4))
        .collect();
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (v, d) = horner_c64(c, z[k]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[k] -= w;
                moved = moved.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

fn big_poly(p: &Poly<Gaussian>, prec: u32) -> Vec<BigComplex> {
    p.coeffs().iter().map(|c| BigComplex::from_gaussian(c, prec)).collect()
}

fn horner_big(c: &[BigComplex], z: &BigComplex, prec: u32) -> (BigComplex, BigComplex) {
    let mut v = BigComplex::zero_with(prec);
    let mut d = BigComplex::zero_with(prec);
    for a in c.iter().rev() {
        d = d * z.clone() + v.clone();
        v = v * z.clone() + a.clone();
    }
    (v, d)
}

fn newton_polish(c: &[BigComplex], z0: Complex64, prec: u32) -> BigComplex {
    let mut z = BigComplex::from_complex64(z0, prec);
    for _ in 0..(prec.ilog2() + 6) {
        let (v, d) = horner_big(c, &z, prec);
        match d.try_inv() {
            Some(di) => z = z - v * di,
            None => break,
        }
    }
    z
}

/// Best rational approximation of `x` whose error is below `2^-tol_bits`.
fn recognise_rational(x: &Rational, tol_bits: u32, max_den_bits: u64) -> Option<Rational> {
    let tol = Rational::new(BigInt::one(), BigInt::one() << tol_bits);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rem = x.clone();
    for _ in 0..400 {
        let a = rem.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2.bits() > max_den_bits {
            return None;
        }
        let cand = Rational::new(h2.clone(), k2.clone());
        if (&cand - x).abs() < tol {
            return Some(cand);
        }
        let frac = &rem - Rational::from_integer(a);
        if Zero::is_zero(&frac) {
            return Some(cand);
        }
        rem = frac.recip();
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
    }
    None
}

fn recognise_gaussian(z: &BigComplex) -> Option<Gaussian> {
    let prec = z.precision();
    let (re, im) = z.parts_exact();
    let tol = prec.saturating_sub(prec / 4 + 8);
    let maxd = (prec / 3) as u64;
    Some(Gaussian::new(recognise_rational(&re, tol, maxd)?, recognise_rational(&im, tol, maxd)?))
}

/// Removes square integer factors from a radicand so that equal
/// extensions get equal radicands as often as possible.
pub fn normalize_radicand(d: &Gaussian) -> (Gaussian, Gaussian) {
    // d = (1/den²)·(den²·d); the square factor moves into the coefficient.
    let den = d.re.denom().lcm(d.im.denom());
    let scaled_re = (&d.re * Rational::from_integer(&den * &den)).to_integer();
    let scaled_im = (&d.im * Rational::from_integer(&den * &den)).to_integer();
    let content = scaled_re.gcd(&scaled_im);
    let mut square = BigInt::one();
    let mut rest = content.clone();
    let mut f = BigInt::from(2);
    while &f * &f <= rest && f < BigInt::from(10_000) {
        while (&rest % (&f * &f)).is_zero() {
            rest /= &f * &f;
            square *= &f;
        }
        f += 1;
    }
    let reduced = Gaussian::new(
        Rational::from_integer(&scaled_re / (&square * &square)),
        Rational::from_integer(&scaled_im / (&square * &square)),
    );
    let coeff = Gaussian::real(Rational::new(square, den));
    (reduced, coeff)
}

fn sqrt_element(d: &Gaussian) -> Result<QuadExt> {
    let (red, coeff) = normalize_radicand(d);
    // √d = coeff·√red for principal branches since coeff > 0.
    QuadExt::new(Gaussian::zero(), coeff, red)
}

/// All distinct roots of a nonzero polynomial.
pub fn find_roots(p: &Poly<Gaussian>, prec: u32) -> Result<Vec<Root>> {
    if p.is_zero() {
        return Err(Error::Precondition("roots of the zero polynomial".into()));
    }
    let mut rest = p.squarefree_part();
    let Some(n) = rest.degree() else { return Ok(vec![]) };
    if n == 0 {
        return Ok(vec![]);
    }
    let work = prec.max(64) + 64;
    let guesses = aberth(&to_c64(&rest));
    let bigc = big_poly(&rest, work);
    let polished: Vec<BigComplex> = guesses.iter().map(|&z| newton_polish(&bigc, z, work)).collect();

    let mut roots = Vec::new();
    let mut pending = Vec::new();
    for z in polished {
        match recognise_gaussian(&z) {
            Some(g) if rest.eval(&g).is_zero() => {
                rest = rest.exact_div(&Poly::new(vec![-g.clone(), Gaussian::one()])).expect("root divides");
                roots.push(Root::Gaussian(g));
            }
            _ => pending.push(z),
        }
    }

    // Quadratic factors over ℚ(i).
    let mut used = vec![false; pending.len()];
    for a in 0..pending.len() {
        if used[a] {
            continue;
        }
        for b in a + 1..pending.len() {
            if used[b] {
                continue;
            }
            let s = recognise_gaussian(&(pending[a].clone() + pending[b].clone()));
            let pr = recognise_gaussian(&(pending[a].clone() * pending[b].clone()));
            let (Some(s), Some(pr)) = (s, pr) else { continue };
            let quad = Poly::new(vec![pr.clone(), -s.clone(), Gaussian::one()]);
            let Some(q) = rest.exact_div(&quad) else { continue };
            rest = q;
            used[a] = true;
            used[b] = true;
            let disc = s.clone() * s.clone() - Gaussian::from_ints(4, 0) * pr;
            let half = Gaussian::real(Rational::new(1.into(), 2.into()));
            let root = sqrt_element(&disc)?;
            let centre = QuadExt::from_gaussian(s * half.clone());
            let off = root.checked_mul(&QuadExt::from_gaussian(half))?;
            let r1 = centre.checked_add(&off)?;
            let r2 = centre.checked_add(&-off)?;
            roots.push(Root::Quad(r1));
            roots.push(Root::Quad(r2));
            break;
        }
    }

    let deriv = rest.derivative();
    let cpoly = big_poly(&rest, work);
    let cder = big_poly(&deriv, work);
    let m = rest.degree().unwrap_or(0).max(1) as f64;
    for (k, z) in pending.into_iter().enumerate() {
        if used[k] {
            continue;
        }
        let (v, _) = horner_big(&cpoly, &z, work);
        let (d, _) = horner_big(&cder, &z, work);
        let floor = 2f64.powi(-(prec as i32) / 2 - 16);
        let radius = (m * v.modulus_f64() / d.modulus_f64().max(f64::MIN_POSITIVE)).max(floor);
        roots.push(Root::Approx { value: z.rescaled_to(prec), radius });
    }

    roots.sort_by(|a, b| {
        let (x, y) = (a.approx(), b.approx());
        x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im))
    });
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Level;

    fn gp(c: &[(i64, i64)]) -> Poly<Gaussian> {
        Poly::new(c.iter().map(|&(a, b)| Gaussian::from_ints(a, b)).collect())
    }

    #[test]
    fn gaussian_roots() {
        // (t² + 1)(t² − 2t + 2)
        let p = gp(&[(1, 0), (0, 0), (1, 0)]) * gp(&[(2, 0), (-2, 0), (1, 0)]);
        let r = find_roots(&p, 256).unwrap();
        let got: Vec<String> = r.iter().map(|x| x.to_scalar().to_string()).collect();
        assert_eq!(got, vec!["-i", "i", "1-i", "1+i"]);
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        let p = gp(&[(-1, 0), (3, 0)]) * gp(&[(-1, 0), (3, 0)]) * gp(&[(5, 0), (7, 0)]);
        let r = find_roots(&p, 256).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| matches!(x, Root::Gaussian(_))));
    }

    #[test]
    fn quadratic_irrationals() {
        // t² − 2 and t² − t − 1 (the latter with root (1 ± √5)/2)
        let p = gp(&[(-2, 0), (0, 0), (1, 0)]) * gp(&[(-1, 0), (-1, 0), (1, 0)]);
        let r = find_roots(&p, 256).unwrap();
        assert_eq!(r.len(), 4);
        for root in &r {
            let s = root.to_scalar();
            assert_eq!(s.level(), Level::Quad);
            let v = p.map(|c| Scalar::from_gaussian(c.clone())).eval(&s);
            assert!(v.is_zero(), "{s} is not a root");
        }
    }

    #[test]
    fn cubic_irrational_is_approximate() {
        let p = gp(&[(-2, 0), (0, 0), (0, 0), (1, 0)]);
        let r = find_roots(&p, 256).unwrap();
        assert_eq!(r.len(), 3);
        for root in &r {
            match root {
                Root::Approx { value, radius } => {
                    assert!(*radius < 1e-30);
                    let z = value.to_complex64();
                    assert!((z.powi(3) - 2.0).norm() < 1e-12);
                }
                other => panic!("expected approximation, got {other:?}"),
            }
        }
    }

    #[test]
    fn radicand_normalisation() {
        let (d, c) = normalize_radicand(&Gaussian::new(Rational::new(8.into(), 9.into()), Rational::from_integer(0.into())));
        assert_eq!(d, Gaussian::from_ints(2, 0));
        assert_eq!(c, Gaussian::real(Rational::new(2.into(), 3.into())));
    }
}
