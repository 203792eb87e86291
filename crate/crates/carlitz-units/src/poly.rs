//! The base ring A = F_q[T]: exact polynomial arithmetic, residue arithmetic
//! modulo a monic prime, the Euler Phi function, primitive roots, and
//! discrete logarithms.
//!
//! Polynomials are canonical: coefficients lowest degree first with no
//! trailing zeros, so the zero polynomial is the empty vector and equality
//! is structural. Factoring and irreducibility use exhaustive trial
//! division; nothing here is probabilistic.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fq::{FieldSpec, FqElem};

/// An element of A = F_q[T].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyA {
    coeffs: Vec<FqElem>,
}

impl PolyA {
    pub fn zero() -> PolyA {
        PolyA { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[FqElem] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&FqElem> {
        self.coeffs.last()
    }

    /// Coefficient of T^i (zero beyond the degree).
    pub fn coeff(&self, i: usize, f: &FieldSpec) -> FqElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| f.zero())
    }

    /// The constant term, i.e. the value at T = 0.
    pub fn constant_term(&self, f: &FieldSpec) -> FqElem {
        self.coeff(0, f)
    }

    pub fn from_coeffs(mut coeffs: Vec<FqElem>) -> PolyA {
        while coeffs.last().map_or(false, FqElem::is_zero) {
            coeffs.pop();
        }
        PolyA { coeffs }
    }

    pub fn constant(c: FqElem) -> PolyA {
        PolyA::from_coeffs(vec![c])
    }

    pub fn one(f: &FieldSpec) -> PolyA {
        PolyA::constant(f.one())
    }

    /// The variable T.
    pub fn var(f: &FieldSpec) -> PolyA {
        PolyA::from_coeffs(vec![f.zero(), f.one()])
    }

    /// Convenience for prime fields and tests: integer coefficients,
    /// lowest degree first.
    pub fn from_u64_coeffs(coeffs: &[u64], f: &FieldSpec) -> PolyA {
        PolyA::from_coeffs(coeffs.iter().map(|&c| f.from_u64(c)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, FqElem::is_one)
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }
}

pub fn add(a: &PolyA, b: &PolyA, f: &FieldSpec) -> PolyA {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(f.add(&a.coeff(i, f), &b.coeff(i, f)));
    }
    PolyA::from_coeffs(out)
}

pub fn sub(a: &PolyA, b: &PolyA, f: &FieldSpec) -> PolyA {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(f.sub(&a.coeff(i, f), &b.coeff(i, f)));
    }
    PolyA::from_coeffs(out)
}

pub fn neg(a: &PolyA, f: &FieldSpec) -> PolyA {
    PolyA::from_coeffs(a.coeffs.iter().map(|c| f.neg(c)).collect())
}

pub fn mul(a: &PolyA, b: &PolyA, f: &FieldSpec) -> PolyA {
    if a.is_zero() || b.is_zero() {
        return PolyA::zero();
    }
    let mut out = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    PolyA::from_coeffs(out)
}

pub fn scale(a: &PolyA, c: &FqElem, f: &FieldSpec) -> PolyA {
    PolyA::from_coeffs(a.coeffs.iter().map(|x| f.mul(x, c)).collect())
}

pub fn pow(a: &PolyA, mut e: u64, f: &FieldSpec) -> PolyA {
    let mut acc = PolyA::one(f);
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base, f);
        }
        base = mul(&base, &base, f);
        e >>= 1;
    }
    acc
}

/// Exact Euclidean division: a = q*b + r with deg r < deg b.
pub fn divmod(a: &PolyA, b: &PolyA, f: &FieldSpec) -> Result<(PolyA, PolyA)> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let db = b.deg().unwrap();
    let lead_inv = f.inv(b.leading().unwrap())?;
    let mut r = a.coeffs.clone();
    let mut q = vec![f.zero(); a.coeffs.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = f.mul(&r[dr], &lead_inv);
        if !c.is_zero() {
            q[dr - db] = c.clone();
            for (i, bc) in b.coeffs.iter().enumerate() {
                let idx = dr - db + i;
                r[idx] = f.sub(&r[idx], &f.mul(&c, bc));
            }
        }
        r.pop();
        while r.last().map_or(false, FqElem::is_zero) {
            r.pop();
        }
    }
    Ok((PolyA::from_coeffs(q), PolyA::from_coeffs(r)))
}

pub fn rem(a: &PolyA, b: &PolyA, f: &FieldSpec) -> Result<PolyA> {
    Ok(divmod(a, b, f)?.1)
}

/// Division known to be exact; a nonzero remainder is a logic fault.
pub fn exact_div(a: &PolyA, b: &PolyA, f: &FieldSpec) -> PolyA {
    let (q, r) = divmod(a, b, f).expect("exact division by zero");
    assert!(r.is_zero(), "non-exact division in A");
    q
}

pub fn make_monic(a: &PolyA, f: &FieldSpec) -> PolyA {
    match a.leading() {
        None => PolyA::zero(),
        Some(l) if l.is_one() => a.clone(),
        Some(l) => scale(a, &f.inv(l).expect("nonzero leading coefficient"), f),
    }
}

/// Monic greatest common divisor.
pub fn gcd(a: &PolyA, b: &PolyA, f: &FieldSpec) -> Result<PolyA> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = rem(&x, &y, f)?;
        x = y;
        y = r;
    }
    Ok(make_monic(&x, f))
}

/// Evaluate at a point of F_q.
pub fn eval(a: &PolyA, at: &FqElem, f: &FieldSpec) -> FqElem {
    let mut acc = f.zero();
    for c in a.coeffs.iter().rev() {
        acc = f.add(&f.mul(&acc, at), c);
    }
    acc
}

/// All monic polynomials of exactly the given degree, in the fixed
/// enumeration order: coordinates run through [`FieldSpec::elements`] with
/// the constant coefficient most significant.
pub fn monic_of_degree(degree: usize, f: &FieldSpec) -> Vec<PolyA> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<FqElem>> = vec![Vec::new()];
    for _ in 0..degree {
        let mut next = Vec::new();
        for prefix in stack {
            for c in f.elements() {
                let mut p = prefix.clone();
                p.push(c);
                next.push(p);
            }
        }
        stack = next;
    }
    for mut coeffs in stack {
        coeffs.push(f.one());
        out.push(PolyA { coeffs });
    }
    out
}

/// All nonzero polynomials of degree < `bound`, ordered by degree and then
/// lexicographically on the coefficient sequence (constant coefficient most
/// significant). This is the candidate order for primitive-root search.
pub fn nonzero_below_degree(bound: usize, f: &FieldSpec) -> Vec<PolyA> {
    let mut out = Vec::new();
    for d in 0..bound {
        for m in monic_of_degree(d, f) {
            for c in f.nonzero_elements() {
                out.push(scale(&m, &c, f));
            }
        }
    }
    // within a degree, sort by the full coefficient sequence, constant first
    out.sort_by(|a, b| {
        a.coeffs
            .len()
            .cmp(&b.coeffs.len())
            .then_with(|| a.coeffs.cmp(&b.coeffs))
    });
    out
}

/// True iff `m` is irreducible over F_q, by trial division with all monic
/// polynomials of degree at most deg(m)/2.
pub fn is_irreducible(m: &PolyA, f: &FieldSpec) -> Result<bool> {
    match m.deg() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let deg = m.deg().unwrap();
    for d in 1..=deg / 2 {
        for cand in monic_of_degree(d, f) {
            if rem(m, &cand, f)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Complete factorization: the unit in F_q^x and the monic irreducible
/// factors with multiplicities, smallest factors first.
pub fn factor(m: &PolyA, f: &FieldSpec) -> Result<(FqElem, Vec<(PolyA, u32)>)> {
    if m.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = m.leading().unwrap().clone();
    let mut rest = make_monic(m, f);
    let mut factors: Vec<(PolyA, u32)> = Vec::new();
    // increasing-degree trial division: any degree-d divisor surviving to
    // round d is irreducible, since smaller factors were already removed
    let mut d = 1;
    while rest.deg() != Some(0) {
        let deg_rest = rest.deg().unwrap();
        if d > deg_rest / 2 {
            factors.push((rest, 1));
            break;
        }
        for cand in monic_of_degree(d, f) {
            let mut mult = 0;
            loop {
                let (q, r) = divmod(&rest, &cand, f)?;
                if r.is_zero() {
                    mult += 1;
                    rest = q;
                } else {
                    break;
                }
            }
            if mult > 0 {
                factors.push((cand, mult));
                if rest.deg() == Some(0) {
                    break;
                }
            }
        }
        if rest.deg() == Some(0) {
            break;
        }
        d += 1;
    }
    factors.sort_by(|a, b| {
        a.0.coeffs
            .len()
            .cmp(&b.0.coeffs.len())
            .then_with(|| a.0.coeffs.cmp(&b.0.coeffs))
    });
    Ok((unit, factors))
}

/// The function-field Euler function: the number of nonzero residues of
/// degree < deg(m) coprime to m, via the product over prime powers
/// q^deg(P^s) - q^deg(P^(s-1)).
pub fn euler_phi(m: &PolyA, f: &FieldSpec) -> Result<u64> {
    match m.deg() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        _ => {}
    }
    let (_, factors) = factor(m, f)?;
    let mut phi = 1u64;
    for (p, s) in factors {
        let d = p.deg().unwrap() as u32;
        phi *= f.q().pow(d * s) - f.q().pow(d * (s - 1));
    }
    Ok(phi)
}

fn factor_integer(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The residue ring A/pA for a monic prime p, with the factored order of
/// its unit group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueCtx {
    modulus: PolyA,
    group_order: u64,
    order_factors: Vec<(u64, u32)>,
}

impl ResidueCtx {
    pub fn new(modulus: PolyA, f: &FieldSpec) -> Result<ResidueCtx> {
        if !modulus.is_monic() || !is_irreducible(&modulus, f)? {
            return Err(Error::NotPrime(format!("{:?}", modulus.deg())));
        }
        let d = modulus.deg().unwrap() as u32;
        let group_order = f
            .q()
            .checked_pow(d)
            .ok_or_else(|| Error::Config("residue group too large".into()))?
            - 1;
        let order_factors = factor_integer(group_order);
        Ok(ResidueCtx {
            modulus,
            group_order,
            order_factors,
        })
    }

    pub fn modulus(&self) -> &PolyA {
        &self.modulus
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn order_factors(&self) -> &[(u64, u32)] {
        &self.order_factors
    }

    pub fn reduce(&self, a: &PolyA, f: &FieldSpec) -> PolyA {
        rem(a, &self.modulus, f).expect("modulus is nonzero")
    }

    pub fn mod_mul(&self, a: &PolyA, b: &PolyA, f: &FieldSpec) -> PolyA {
        self.reduce(&mul(a, b, f), f)
    }

    pub fn mod_pow(&self, a: &PolyA, mut e: u64, f: &FieldSpec) -> PolyA {
        let mut acc = PolyA::one(f);
        let mut base = self.reduce(a, f);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mod_mul(&acc, &base, f);
            }
            base = self.mod_mul(&base, &base, f);
            e >>= 1;
        }
        acc
    }

    /// True iff the residue of g generates the full unit group, by checking
    /// g^(n/r) != 1 for every prime r dividing n.
    pub fn is_generator(&self, g: &PolyA, f: &FieldSpec) -> Result<bool> {
        let g = self.reduce(g, f);
        if g.is_zero() {
            return Err(Error::NotCoprime);
        }
        for &(r, _) in &self.order_factors {
            if self.mod_pow(&g, self.group_order / r, f).is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The first generator of (A/pA)^x in the fixed candidate order.
pub fn find_primitive_root(ctx: &ResidueCtx, f: &FieldSpec) -> PolyA {
    let d = ctx.modulus().deg().unwrap();
    for cand in nonzero_below_degree(d, f) {
        if ctx.is_generator(&cand, f).unwrap_or(false) {
            return cand;
        }
    }
    unreachable!("the unit group of a residue field is cyclic");
}

/// Baby-step/giant-step discrete logarithm: the unique h in [0, n) with
/// g^h = a mod p. The generator is re-verified so a bad call fails loudly
/// rather than looping.
pub fn discrete_log(ctx: &ResidueCtx, g: &PolyA, a: &PolyA, f: &FieldSpec) -> Result<u64> {
    let a = ctx.reduce(a, f);
    if gcd(&a, ctx.modulus(), f)? != PolyA::one(f) {
        return Err(Error::NotCoprime);
    }
    if !ctx.is_generator(g, f)? {
        return Err(Error::NotGenerator);
    }
    let g = ctx.reduce(g, f);
    let n = ctx.group_order();
    let m = (n as f64).sqrt().ceil() as u64;
    let mut table: HashMap<PolyA, u64> = HashMap::with_capacity(m as usize);
    let mut cur = PolyA::one(f);
    for j in 0..m {
        table.entry(cur.clone()).or_insert(j);
        cur = ctx.mod_mul(&cur, &g, f);
    }
    // g^(-m) via the group order
    let giant = ctx.mod_pow(&g, n - (m % n), f);
    let mut gamma = a;
    for i in 0..=m {
        if let Some(&j) = table.get(&gamma) {
            return Ok((i * m + j) % n);
        }
        gamma = ctx.mod_mul(&gamma, &giant, f);
    }
    unreachable!("generator verified, so the logarithm exists");
}
