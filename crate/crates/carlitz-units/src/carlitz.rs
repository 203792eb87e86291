//! The Carlitz module: C_m(x) as an additive polynomial, its dense
//! expansion in A[x], and cyclotomic polynomials of prime powers.
//!
//! C is determined by C_T(x) = Tx + x^q together with F_q-linearity in the
//! index. C_m is stored sparsely by its coefficients at x^(q^i); the dense
//! expansion of degree q^deg(m) is produced only on demand.

use crate::error::{Error, Result};
use crate::fq::FieldSpec;
use crate::poly::{self, PolyA};
use crate::xpoly::{self, XPoly};

/// An F_q-linear (additive) polynomial sum_i c_i x^(q^i), tagged with the
/// Carlitz index it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdditivePoly {
    index: PolyA,
    coeffs: Vec<PolyA>,
}

impl AdditivePoly {
    pub fn index(&self) -> &PolyA {
        &self.index
    }

    /// Coefficients [m, 0], [m, 1], ..., lowest twist first.
    pub fn coeffs(&self) -> &[PolyA] {
        &self.coeffs
    }

    fn trimmed(index: PolyA, mut coeffs: Vec<PolyA>) -> AdditivePoly {
        while coeffs.last().map_or(false, PolyA::is_zero) {
            coeffs.pop();
        }
        AdditivePoly { index, coeffs }
    }
}

/// m raised to the q^i-th power: coefficients of F_q are Frobenius-fixed,
/// so exponents simply spread by a factor of q^i.
fn frobenius(m: &PolyA, i: usize, f: &FieldSpec) -> PolyA {
    if m.is_zero() || i == 0 {
        return m.clone();
    }
    let stride = (f.q() as usize)
        .checked_pow(i as u32)
        .expect("Frobenius stride overflows");
    let deg = m.deg().unwrap();
    let mut out = vec![f.zero(); deg * stride + 1];
    for (t, c) in m.coeffs().iter().enumerate() {
        out[t * stride] = c.clone();
    }
    PolyA::from_coeffs(out)
}

/// Composition of additive polynomials: the coefficient passing a twist is
/// raised to the matching q-power.
pub fn compose(a: &AdditivePoly, b: &AdditivePoly, f: &FieldSpec) -> AdditivePoly {
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        return AdditivePoly::trimmed(poly::mul(&a.index, &b.index, f), Vec::new());
    }
    let mut out = vec![PolyA::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, ai) in a.coeffs.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs.iter().enumerate() {
            let term = poly::mul(ai, &frobenius(bj, i, f), f);
            out[i + j] = poly::add(&out[i + j], &term, f);
        }
    }
    AdditivePoly::trimmed(poly::mul(&a.index, &b.index, f), out)
}

fn add_additive(a: &AdditivePoly, b: &AdditivePoly, f: &FieldSpec) -> AdditivePoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.coeffs.get(i).cloned().unwrap_or_else(PolyA::zero);
        let y = b.coeffs.get(i).cloned().unwrap_or_else(PolyA::zero);
        out.push(poly::add(&x, &y, f));
    }
    AdditivePoly::trimmed(poly::add(&a.index, &b.index, f), out)
}

/// The coefficients of C_m, by Horner over the digits of m in T:
/// repeated composition with C_T plus scalar additions.
pub fn carlitz_coeffs(m: &PolyA, f: &FieldSpec) -> Result<AdditivePoly> {
    if m.is_zero() {
        return Err(Error::ZeroIndex);
    }
    let c_t = AdditivePoly {
        index: PolyA::var(f),
        coeffs: vec![PolyA::var(f), PolyA::one(f)],
    };
    let digits = m.coeffs();
    let top = PolyA::constant(digits.last().unwrap().clone());
    let mut acc = AdditivePoly {
        index: top.clone(),
        coeffs: vec![top],
    };
    for digit in digits.iter().rev().skip(1) {
        acc = compose(&c_t, &acc, f);
        let scalar = AdditivePoly::trimmed(
            PolyA::constant(digit.clone()),
            vec![PolyA::constant(digit.clone())],
        );
        acc = add_additive(&acc, &scalar, f);
    }
    debug_assert_eq!(acc.index, *m);
    Ok(acc)
}

/// The dense A[x] form, with monomials exactly at the exponents q^i.
pub fn carlitz_expand(ap: &AdditivePoly, f: &FieldSpec) -> XPoly {
    let mut out = XPoly::zero();
    let q = f.q() as usize;
    let mut exp = 1usize;
    for (i, c) in ap.coeffs.iter().enumerate() {
        if i > 0 {
            exp = exp.checked_mul(q).expect("expansion degree overflows");
        }
        if !c.is_zero() {
            out = xpoly::add(&out, &XPoly::monomial(c.clone(), exp), f);
        }
    }
    out
}

/// The cyclotomic polynomial of a prime power: C_{p^s}(x) / C_{p^(s-1)}(x),
/// an exact division in A[x]. For s = 1 the divisor is x itself. Monic with
/// constant term equal to the prime; both facts are asserted.
pub fn cyclotomic_poly(prime: &PolyA, s: u32, f: &FieldSpec) -> Result<XPoly> {
    if !prime.is_monic() || !poly::is_irreducible(prime, f)? {
        return Err(Error::NotPrime("cyclotomic index must be a monic prime".into()));
    }
    assert!(s >= 1, "prime-power exponent must be at least 1");
    let numerator = carlitz_expand(&carlitz_coeffs(&poly::pow(prime, s as u64, f), f)?, f);
    let denominator = if s == 1 {
        XPoly::x(f)
    } else {
        carlitz_expand(&carlitz_coeffs(&poly::pow(prime, (s - 1) as u64, f), f)?, f)
    };
    let psi = xpoly::exact_div(&numerator, &denominator, f);
    assert!(psi.is_monic(), "cyclotomic polynomial must be monic");
    assert_eq!(
        psi.constant_term(),
        *prime,
        "cyclotomic polynomial must have the prime as constant term"
    );
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f2() -> FieldSpec {
        FieldSpec::new(2, 1, None).unwrap()
    }

    fn f3() -> FieldSpec {
        FieldSpec::new(3, 1, None).unwrap()
    }

    #[test]
    fn coeffs_examples() {
        let f = f3();
        // C_1 = x
        let c1 = carlitz_coeffs(&PolyA::one(&f), &f).unwrap();
        assert_eq!(c1.coeffs(), &[PolyA::one(&f)]);

        // C_T = Tx + x^q
        let ct = carlitz_coeffs(&PolyA::var(&f), &f).unwrap();
        assert_eq!(ct.coeffs(), &[PolyA::var(&f), PolyA::one(&f)]);

        // C_{T^2} = T^2 x + (T^q + T) x^q + x^{q^2}
        let t2 = PolyA::from_u64_coeffs(&[0, 0, 1], &f);
        let c = carlitz_coeffs(&t2, &f).unwrap();
        let mid = {
            let mut v = vec![0u64; 4];
            v[1] = 1;
            v[3] = 1; // T + T^3 for q = 3
            PolyA::from_u64_coeffs(&v, &f)
        };
        assert_eq!(c.coeffs(), &[t2, mid, PolyA::one(&f)]);

        assert_eq!(carlitz_coeffs(&PolyA::zero(), &f), Err(Error::ZeroIndex));
    }

    #[test]
    fn coeffs_shape_invariants() {
        let f = f2();
        for m in poly::monic_of_degree(3, &f) {
            let c = carlitz_coeffs(&m, &f).unwrap();
            assert_eq!(c.coeffs().len(), 4);
            assert_eq!(c.coeffs()[0], m);
            assert_eq!(c.coeffs()[3], PolyA::one(&f));
        }
    }

    #[test]
    fn expand_examples() {
        let f = f2();
        let c1 = carlitz_coeffs(&PolyA::one(&f), &f).unwrap();
        assert_eq!(carlitz_expand(&c1, &f), XPoly::x(&f));

        // C_T over F_2 is Tx + x^2
        let ct = carlitz_coeffs(&PolyA::var(&f), &f).unwrap();
        let expanded = carlitz_expand(&ct, &f);
        assert_eq!(
            expanded,
            XPoly::from_coeffs(vec![PolyA::zero(), PolyA::var(&f), PolyA::one(&f)])
        );

        // C_{T^2+T+1} over F_2 = px + px^2 + x^4 with p = T^2+T+1
        let p = PolyA::from_u64_coeffs(&[1, 1, 1], &f);
        let c = carlitz_coeffs(&p, &f).unwrap();
        let expanded = carlitz_expand(&c, &f);
        assert_eq!(
            expanded,
            XPoly::from_coeffs(vec![
                PolyA::zero(),
                p.clone(),
                p.clone(),
                PolyA::zero(),
                PolyA::one(&f)
            ])
        );
    }

    #[test]
    fn module_law_on_random_indices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for f in [f2(), f3()] {
            for _ in 0..12 {
                let a = random_nonzero(&mut rng, 2, &f);
                let b = random_nonzero(&mut rng, 2, &f);
                let ca = carlitz_coeffs(&a, &f).unwrap();
                let cb = carlitz_coeffs(&b, &f).unwrap();
                let cab = carlitz_coeffs(&poly::mul(&a, &b, &f), &f).unwrap();
                assert_eq!(compose(&ca, &cb, &f), cab);
                assert_eq!(compose(&cb, &ca, &f), cab);
            }
        }
    }

    fn random_nonzero(rng: &mut ChaCha8Rng, max_deg: usize, f: &FieldSpec) -> PolyA {
        loop {
            let len = rng.gen_range(1..=max_deg + 1);
            let coeffs: Vec<u64> = (0..len).map(|_| rng.gen_range(0..f.p())).collect();
            let p = PolyA::from_u64_coeffs(&coeffs, f);
            if !p.is_zero() {
                return p;
            }
        }
    }

    #[test]
    fn cyclotomic_examples() {
        let f = f3();
        // psi_T = x^2 + T over F_3
        let psi = cyclotomic_poly(&PolyA::var(&f), 1, &f).unwrap();
        assert_eq!(
            psi,
            XPoly::from_coeffs(vec![PolyA::var(&f), PolyA::zero(), PolyA::one(&f)])
        );

        let f = f2();
        let p = PolyA::from_u64_coeffs(&[1, 1, 1], &f);
        let psi = cyclotomic_poly(&p, 1, &f).unwrap();
        assert_eq!(
            psi,
            XPoly::from_coeffs(vec![p.clone(), p.clone(), PolyA::zero(), PolyA::one(&f)])
        );

        // reducible or non-monic index is rejected
        assert!(cyclotomic_poly(&PolyA::from_u64_coeffs(&[1, 0, 1], &f), 1, &f).is_err());
    }

    #[test]
    fn cyclotomic_prime_powers() {
        for (f, prime) in [
            (f2(), PolyA::from_u64_coeffs(&[1, 1, 1], &f2())),
            (f3(), PolyA::var(&f3())),
        ] {
            for s in 1..=2u32 {
                let psi = cyclotomic_poly(&prime, s, &f).unwrap();
                let phi = poly::euler_phi(&poly::pow(&prime, s as u64, &f), &f).unwrap();
                assert_eq!(psi.deg().unwrap() as u64, phi);
                assert_eq!(psi.constant_term(), prime);
                // psi * C_{p^(s-1)} = C_{p^s} exactly
                let lower = if s == 1 {
                    XPoly::x(&f)
                } else {
                    carlitz_expand(
                        &carlitz_coeffs(&poly::pow(&prime, (s - 1) as u64, &f), &f).unwrap(),
                        &f,
                    )
                };
                let upper = carlitz_expand(
                    &carlitz_coeffs(&poly::pow(&prime, s as u64, &f), &f).unwrap(),
                    &f,
                );
                assert_eq!(xpoly::mul(&psi, &lower, &f), upper);
            }
        }
    }
}
