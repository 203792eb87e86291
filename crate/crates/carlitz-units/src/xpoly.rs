//! Polynomials over A in the variable x, the carrier for Carlitz expansions,
//! cyclotomic polynomials, and representing polynomials of ring elements.
//!
//! Division is implemented only for divisors whose leading coefficient is a
//! unit of A; every divisor in this crate is monic. The resultant uses the
//! Sylvester matrix with fraction-free (Bareiss) elimination, fully
//! independent of the conjugate-product norm it serves as an oracle for.

use crate::error::{Error, Result};
use crate::fq::{FieldSpec, FqElem};
use crate::poly::{self, PolyA};

/// A dense polynomial in A[x], coefficients lowest x-degree first with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<PolyA>,
}

impl XPoly {
    pub fn zero() -> XPoly {
        XPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[PolyA] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> PolyA {
        self.coeffs.get(i).cloned().unwrap_or_else(PolyA::zero)
    }

    pub fn leading(&self) -> Option<&PolyA> {
        self.coeffs.last()
    }

    pub fn from_coeffs(mut coeffs: Vec<PolyA>) -> XPoly {
        while coeffs.last().map_or(false, PolyA::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn constant(c: PolyA) -> XPoly {
        XPoly::from_coeffs(vec![c])
    }

    pub fn one(f: &FieldSpec) -> XPoly {
        XPoly::constant(PolyA::one(f))
    }

    /// The variable x.
    pub fn x(f: &FieldSpec) -> XPoly {
        XPoly::from_coeffs(vec![PolyA::zero(), PolyA::one(f)])
    }

    pub fn monomial(c: PolyA, deg: usize) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![PolyA::zero(); deg + 1];
        coeffs[deg] = c;
        XPoly { coeffs }
    }

    /// True when the leading coefficient is 1 in A.
    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, PolyA::is_one)
    }

    /// The value at x = 0.
    pub fn constant_term(&self) -> PolyA {
        self.coeff(0)
    }
}

pub fn add(a: &XPoly, b: &XPoly, f: &FieldSpec) -> XPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(poly::add(&a.coeff(i), &b.coeff(i), f));
    }
    XPoly::from_coeffs(out)
}

pub fn sub(a: &XPoly, b: &XPoly, f: &FieldSpec) -> XPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(poly::sub(&a.coeff(i), &b.coeff(i), f));
    }
    XPoly::from_coeffs(out)
}

pub fn neg(a: &XPoly, f: &FieldSpec) -> XPoly {
    XPoly::from_coeffs(a.coeffs.iter().map(|c| poly::neg(c, f)).collect())
}

pub fn mul(a: &XPoly, b: &XPoly, f: &FieldSpec) -> XPoly {
    if a.is_zero() || b.is_zero() {
        return XPoly::zero();
    }
    let mut out = vec![PolyA::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = poly::add(&out[i + j], &poly::mul(x, y, f), f);
        }
    }
    XPoly::from_coeffs(out)
}

/// Multiply every coefficient by an element of A.
pub fn scale(a: &XPoly, c: &PolyA, f: &FieldSpec) -> XPoly {
    XPoly::from_coeffs(a.coeffs.iter().map(|x| poly::mul(x, c, f)).collect())
}

/// Euclidean division by a divisor whose leading coefficient is a unit of A.
pub fn divmod(a: &XPoly, b: &XPoly, f: &FieldSpec) -> Result<(XPoly, XPoly)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let lead = b.leading().unwrap();
    assert!(
        lead.is_unit(),
        "division in A[x] requires a unit leading coefficient"
    );
    let lead_inv = PolyA::constant(f.inv(&lead.coeff(0, f)).unwrap());
    let db = b.deg().unwrap();
    let mut r = a.coeffs.clone();
    let mut q = vec![PolyA::zero(); a.coeffs.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = poly::mul(&r[dr], &lead_inv, f);
        if !c.is_zero() {
            q[dr - db] = c.clone();
            for (i, bc) in b.coeffs.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = poly::sub(&r[idx], &poly::mul(&c, bc, f), f);
            }
        }
        r.pop();
        while r.last().map_or(false, PolyA::is_zero) {
            r.pop();
        }
    }
    Ok((XPoly::from_coeffs(q), XPoly::from_coeffs(r)))
}

/// Division known to be exact; a nonzero remainder is a logic fault.
pub fn exact_div(a: &XPoly, b: &XPoly, f: &FieldSpec) -> XPoly {
    let (q, r) = divmod(a, b, f).expect("exact division by zero");
    assert!(r.is_zero(), "non-exact division in A[x]");
    q
}

/// The content: monic gcd in A of all nonzero coefficients.
pub fn content(p: &XPoly, f: &FieldSpec) -> Result<PolyA> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut acc = PolyA::zero();
    for c in &p.coeffs {
        if c.is_zero() {
            continue;
        }
        acc = poly::gcd(&acc, c, f)?;
        if acc.is_one() {
            break;
        }
    }
    Ok(acc)
}

/// Res_x(a, b) with the convention Res(a, b) = lc(a)^deg(b) * prod b(alpha_i)
/// over the roots alpha_i of a. For monic a this is exactly the product of
/// the values of b at the roots of a.
///
/// Computed as the Sylvester determinant by fraction-free elimination over
/// A, with exact divisions only.
pub fn resultant(a: &XPoly, b: &XPoly, f: &FieldSpec) -> PolyA {
    let (da, db) = match (a.deg(), b.deg()) {
        (None, _) | (_, None) => return PolyA::zero(),
        (Some(da), Some(db)) => (da, db),
    };
    if da == 0 && db == 0 {
        return PolyA::one(f);
    }
    let size = da + db;
    // Sylvester matrix: db shifted rows of a, then da shifted rows of b,
    // highest coefficients first.
    let mut m = vec![vec![PolyA::zero(); size]; size];
    for row in 0..db {
        for (i, c) in a.coeffs.iter().rev().enumerate() {
            m[row][row + i] = c.clone();
        }
    }
    for row in 0..da {
        for (i, c) in b.coeffs.iter().rev().enumerate() {
            m[db + row][row + i] = c.clone();
        }
    }
    bareiss_determinant(m, f)
}

/// Exact determinant of a matrix over A by Bareiss one-step elimination.
fn bareiss_determinant(mut m: Vec<Vec<PolyA>>, f: &FieldSpec) -> PolyA {
    let n = m.len();
    let mut sign = false;
    let mut prev = PolyA::one(f);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return PolyA::zero();
            };
            m.swap(k, swap);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = poly::sub(
                    &poly::mul(&m[k][k], &m[i][j], f),
                    &poly::mul(&m[i][k], &m[k][j], f),
                    f,
                );
                m[i][j] = poly::exact_div(&t, &prev, f);
            }
            m[i][k] = PolyA::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign {
        poly::neg(&det, f)
    } else {
        det
    }
}
