//! Arithmetic in the coefficient field F_q, q = p^k.
//!
//! Elements are held fully reduced at all times: an [`FqElem`] is a vector of
//! exactly `k` residues mod `p`, the coordinates in the basis 1, t, ..., t^(k-1).
//! Canonical form makes equality a plain comparison, which every layer above
//! relies on.

use crate::error::{Error, Result};

/// The finite field F_q with q = p^k, validated at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    k: usize,
    /// Monic irreducible polynomial over F_p defining the extension,
    /// coefficients lowest degree first, length k+1. Empty when k = 1.
    modulus: Vec<u64>,
    q: u64,
}

/// An element of F_q: exactly `k` coordinates, each in [0, p).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    coeffs: Vec<u64>,
}

impl FqElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// True for the multiplicative identity.
    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- tiny F_p[t] helpers, used only to validate the extension modulus ----

fn fp_trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r: Vec<u64> = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = fp_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = (r[dr] * lead_inv) % p;
        for i in 0..=db {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p * p - (c * b[i]) % p) % p;
        }
        fp_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // a^(p-2) mod p
    let mut base = a % p;
    let mut e = p - 2;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Irreducibility over F_p by trial division with every monic polynomial of
/// degree up to deg/2. Exact; the degrees here never exceed single digits.
fn fp_is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = m.len() - 1;
    for d in 1..=deg / 2 {
        // enumerate monic divisor candidates of degree d
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                cand.push(rest % p);
                rest /= p;
            }
            cand.push(1);
            if fp_rem(m, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// Build and validate F_q for q = p^k.
    ///
    /// `modulus` (coefficients over F_p, lowest degree first) is required and
    /// must be irreducible of degree k when k > 1, and must be absent when
    /// k = 1. A non-monic modulus is scaled monic; the quotient ring is the
    /// same.
    pub fn new(p: u64, k: usize, modulus: Option<&[u64]>) -> Result<FieldSpec> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if k == 0 {
            return Err(Error::DegreeMismatch("extension degree must be >= 1".into()));
        }
        let modulus = match (k, modulus) {
            (1, None) => Vec::new(),
            (1, Some(_)) => {
                return Err(Error::DegreeMismatch(
                    "modulus must be absent for a prime field".into(),
                ))
            }
            (_, None) => {
                return Err(Error::DegreeMismatch(
                    "modulus required for an extension field".into(),
                ))
            }
            (_, Some(m)) => {
                let mut m: Vec<u64> = m.iter().map(|&c| c % p).collect();
                fp_trim(&mut m);
                if m.len() != k + 1 {
                    return Err(Error::DegreeMismatch(format!(
                        "modulus degree {} but extension degree {}",
                        m.len().max(1) - 1,
                        k
                    )));
                }
                if m[k] != 1 {
                    let inv = fp_inv(m[k], p);
                    for c in m.iter_mut() {
                        *c = *c * inv % p;
                    }
                }
                if !fp_is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
        };
        let q = p
            .checked_pow(k as u32)
            .ok_or_else(|| Error::Config("field size overflows".into()))?;
        Ok(FieldSpec { p, k, modulus, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FqElem {
        FqElem {
            coeffs: vec![0; self.k],
        }
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    /// The integer c embedded as a constant of F_q.
    pub fn from_u64(&self, c: u64) -> FqElem {
        let mut coeffs = vec![0; self.k];
        coeffs[0] = c % self.p;
        FqElem { coeffs }
    }

    /// An element from at most k coordinates (lowest first); shorter inputs
    /// are zero-padded, each entry reduced mod p.
    pub fn from_coeffs(&self, coords: &[u64]) -> Result<FqElem> {
        if coords.len() > self.k {
            return Err(Error::DegreeMismatch(format!(
                "{} coordinates for an extension of degree {}",
                coords.len(),
                self.k
            )));
        }
        let mut coeffs = vec![0; self.k];
        for (i, &c) in coords.iter().enumerate() {
            coeffs[i] = c % self.p;
        }
        Ok(FqElem { coeffs })
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FqElem { coeffs }
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + self.p - y) % self.p)
            .collect();
        FqElem { coeffs }
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FqElem { coeffs }
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        if self.k == 1 {
            return FqElem {
                coeffs: vec![a.coeffs[0] * b.coeffs[0] % self.p],
            };
        }
        // schoolbook product, then fold down by the monic modulus
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for i in (self.k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (j, &m) in self.modulus.iter().take(self.k).enumerate() {
                let idx = i - self.k + j;
                prod[idx] = (prod[idx] + self.p * self.p - c * m % self.p) % self.p;
            }
        }
        prod.truncate(self.k);
        FqElem { coeffs: prod }
    }

    /// Multiplicative inverse by exponentiation a^(q-2).
    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow_unsigned(a, self.q - 2))
    }

    /// a^e with a^0 = 1; negative exponents require a nonzero base.
    pub fn pow(&self, a: &FqElem, e: i64) -> Result<FqElem> {
        if e >= 0 {
            Ok(self.pow_unsigned(a, e as u64))
        } else {
            let inv = self.inv(a)?;
            Ok(self.pow_unsigned(&inv, e.unsigned_abs()))
        }
    }

    fn pow_unsigned(&self, a: &FqElem, mut e: u64) -> FqElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// All q elements, ordered lexicographically on the coordinate vector
    /// with the constant coordinate most significant. This is the fixed
    /// enumeration order every deterministic search in the crate uses.
    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.q).map(move |idx| {
            let mut coeffs = vec![0u64; self.k];
            let mut rest = idx;
            for i in (0..self.k).rev() {
                coeffs[i] = rest % self.p;
                rest /= self.p;
            }
            FqElem { coeffs }
        })
    }

    /// The q - 1 nonzero elements, in the same order as [`Self::elements`].
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        self.elements().filter(|e| !e.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldSpec {
        FieldSpec::new(3, 1, None).unwrap()
    }

    fn f4() -> FieldSpec {
        // t^2 + t + 1 has no root in F_2
        FieldSpec::new(2, 2, Some(&[1, 1, 1])).unwrap()
    }

    #[test]
    fn make_field_validates() {
        assert!(FieldSpec::new(2, 1, None).is_ok());
        assert!(FieldSpec::new(3, 1, None).is_ok());
        assert!(f4().q() == 4);
        assert_eq!(
            FieldSpec::new(4, 1, None),
            Err(Error::NotPrime("4".into()))
        );
        // (t+1)^2 = t^2 + 1 over F_2
        assert_eq!(
            FieldSpec::new(2, 2, Some(&[1, 0, 1])),
            Err(Error::ReducibleModulus)
        );
        assert!(matches!(
            FieldSpec::new(2, 2, Some(&[1, 1])),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 2, None),
            Err(Error::DegreeMismatch(_))
        ));
        assert!(matches!(
            FieldSpec::new(3, 1, Some(&[1, 1])),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        let f = f3();
        assert_eq!(f.inv(&f.one()).unwrap(), f.one());
        // 2 * 2 = 4 = 1 mod 3
        assert_eq!(f.inv(&f.from_u64(2)).unwrap(), f.from_u64(2));
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));

        // t * (t + 1) = t^2 + t = 1 in F_4
        let f = f4();
        let t = f.from_coeffs(&[0, 1]).unwrap();
        let t1 = f.from_coeffs(&[1, 1]).unwrap();
        assert_eq!(f.inv(&t).unwrap(), t1);
        assert!(f.mul(&t, &t1).is_one());
    }

    #[test]
    fn pow_examples() {
        let f = f3();
        let two = f.from_u64(2);
        assert_eq!(f.pow(&two, 0).unwrap(), f.one());
        assert_eq!(f.pow(&two, 2).unwrap(), f.one());
        assert_eq!(f.pow(&two, -1).unwrap(), two);
        assert_eq!(f.pow(&f.zero(), -1), Err(Error::DivisionByZero));
    }

    #[test]
    fn group_order_annihilates() {
        for f in [f3(), f4(), FieldSpec::new(3, 2, Some(&[1, 0, 1])).unwrap()] {
            for a in f.nonzero_elements() {
                assert!(f.pow(&a, (f.q() - 1) as i64).unwrap().is_one());
                assert!(f.mul(&a, &f.inv(&a).unwrap()).is_one());
            }
            // Frobenius fixed point: a^q = a for every a
            for a in f.elements() {
                assert_eq!(f.pow(&a, f.q() as i64).unwrap(), a);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_f4() {
        let f = f4();
        let all: Vec<FqElem> = f.elements().collect();
        for a in &all {
            for b in &all {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in &all {
                    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
                    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
                    assert_eq!(
                        f.mul(a, &f.add(b, c)),
                        f.add(&f.mul(a, b), &f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn element_enumeration_order() {
        let f = f3();
        let order: Vec<u64> = f.elements().map(|e| e.coeffs()[0]).collect();
        assert_eq!(order, vec![0, 1, 2]);

        let f = f4();
        let order: Vec<Vec<u64>> = f.elements().map(|e| e.coeffs().to_vec()).collect();
        assert_eq!(
            order,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
    }
}
