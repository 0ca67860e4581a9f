//! Table-backed finite fields GF(p^e).
//!
//! Elements are encoded as integers in `[0, q)`: the base-p digits of the
//! encoding are the polynomial-basis coordinates (constant term first).
//! Multiplication goes through log/antilog tables built on a generator of
//! the multiplicative group; a direct polynomial-multiplication path is
//! kept alongside and the two are cross-tested.

use crate::{Error, Result};

/// An element of a finite field, as its integer encoding in `[0, q)`.
///
/// The encoding's base-p digits are the coefficients of the element in the
/// polynomial basis, constant term first. `0` is the additive identity and
/// `1` the multiplicative identity in every field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field GF(p^e), with its modulus polynomial and multiplication tables.
#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    e: u32,
    q: u64,
    /// Monic irreducible modulus of degree e over GF(p), constant term first
    /// (length e+1, last coefficient 1).
    modulus: Vec<u64>,
    /// Antilog table: `exp[i]` is the encoding of g^i, for i in 0..q-1.
    exp: Vec<u32>,
    /// Log table: `log[a]` is the discrete log of encoding a (unused at 0).
    log: Vec<u32>,
    generator: FieldElement,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}
impl Eq for FiniteField {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- polynomial helpers over GF(p); coefficient lists, constant term first ---

fn poly_trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = mod_inv(b[db], p);
    while r.len() > db || (r.len() == db + 1 && db == 0) {
        if r.iter().all(|&c| c == 0) {
            break;
        }
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        if factor != 0 {
            for i in 0..=db {
                let idx = dr - db + i;
                r[idx] = (r[idx] + p - factor * b[i] % p) % p;
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() == 1 && r[0] == 0 {
            break;
        }
    }
    poly_trim(&mut r);
    r
}

fn mod_inv(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and a nonzero mod p.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut ex: u64, m: u64) -> u64 {
    if m == 2 {
        return b % 2;
    }
    let mut acc = 1u64;
    b %= m;
    while ex > 0 {
        if ex & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        ex >>= 1;
    }
    acc
}

/// A monic degree-e polynomial is irreducible iff no monic polynomial of
/// degree 1..=e/2 divides it. Exhaustive trial division; fine for q <= 2^16.
fn poly_irreducible(f: &[u64], p: u64) -> bool {
    let e = f.len() - 1;
    if e == 1 {
        return true;
    }
    for d in 1..=e / 2 {
        // all monic polynomials of degree d: p^d choices of lower coefficients
        let count = p.pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                g.push(t % p);
                t /= p;
            }
            g.push(1);
            let r = poly_rem(f, &g, p);
            if r.iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    /// GF(p^e) with the default modulus: the first irreducible monic
    /// polynomial of degree e in lexicographic order (non-leading
    /// coefficients read highest degree first).
    pub fn new(p: u64, e: u32) -> Result<FiniteField> {
        Self::make(p, e, None)
    }

    /// GF(p^e) with an explicit monic modulus (constant term first,
    /// length e+1). The modulus is verified irreducible.
    pub fn with_modulus(p: u64, e: u32, modulus: Vec<u64>) -> Result<FiniteField> {
        Self::make(p, e, Some(modulus))
    }

    /// Prime field shorthand.
    pub fn prime(p: u64) -> Result<FiniteField> {
        Self::new(p, 1)
    }

    fn make(p: u64, e: u32, modulus: Option<Vec<u64>>) -> Result<FiniteField> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e < 1 {
            return Err(Error::OutOfRange("extension degree must be >= 1".into()));
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= 1 << 16)
            .ok_or_else(|| Error::OutOfRange("field order exceeds 2^16".into()))?;
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1
                    || *m.last().unwrap() != 1
                    || m.iter().any(|&c| c >= p)
                {
                    return Err(Error::ReducibleModulus);
                }
                if !poly_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => Self::default_modulus(p, e),
        };
        let mut field = FiniteField {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            generator: FieldElement::ZERO,
        };
        field.build_tables();
        Ok(field)
    }

    fn default_modulus(p: u64, e: u32) -> Vec<u64> {
        // search non-leading coefficients as a base-p counter, most
        // significant digit = coefficient of x^(e-1)
        let count = p.pow(e);
        for idx in 0..count {
            let mut coeffs = vec![0u64; e as usize + 1];
            coeffs[e as usize] = 1;
            let mut t = idx;
            for d in 0..e as usize {
                coeffs[d] = t % p;
                t /= p;
            }
            if poly_irreducible(&coeffs, p) {
                return coeffs;
            }
        }
        unreachable!("an irreducible polynomial of every degree exists");
    }

    fn build_tables(&mut self) {
        let q = self.q;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            self.generator = FieldElement::ONE;
            return;
        }
        // prefer the class of x when it generates the multiplicative group
        let x_class = FieldElement(if self.e > 1 { self.p as u32 } else { 0 });
        let generator = if !x_class.is_zero() && self.element_order(x_class) == q - 1 {
            x_class
        } else {
            self.find_generator()
        };
        let ord = (q - 1) as usize;
        let mut exp = vec![0u32; ord];
        let mut log = vec![0u32; q as usize];
        let mut acc = FieldElement::ONE;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = acc.0;
            log[acc.0 as usize] = i as u32;
            acc = self.mul_poly(acc, generator);
        }
        debug_assert_eq!(acc, FieldElement::ONE);
        self.exp = exp;
        self.log = log;
        self.generator = generator;
    }

    fn element_order(&self, a: FieldElement) -> u64 {
        let mut acc = a;
        let mut ord = 1;
        while acc != FieldElement::ONE {
            acc = self.mul_poly(acc, a);
            ord += 1;
        }
        ord
    }

    fn find_generator(&self) -> FieldElement {
        let group = self.q - 1;
        let mut primes = Vec::new();
        let mut m = group;
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                primes.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        'cand: for enc in 1..self.q {
            let a = FieldElement(enc as u32);
            for &ell in &primes {
                if self.pow_poly(a, group / ell) == FieldElement::ONE {
                    continue 'cand;
                }
            }
            return a;
        }
        unreachable!("the multiplicative group of a finite field is cyclic");
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn e(&self) -> u32 {
        self.e
    }
    pub fn q(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }
    pub fn generator(&self) -> FieldElement {
        self.generator
    }

    /// Checked constructor for an element from its integer encoding.
    pub fn elem(&self, enc: u64) -> FieldElement {
        assert!(enc < self.q, "encoding {} out of range for GF({})", enc, self.q);
        FieldElement(enc as u32)
    }

    /// All elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q as u32).map(FieldElement)
    }

    fn digits(&self, a: FieldElement) -> Vec<u64> {
        let mut v = vec![0u64; self.e as usize];
        let mut t = a.0 as u64;
        for slot in v.iter_mut() {
            *slot = t % self.p;
            t /= self.p;
        }
        v
    }

    fn from_digits(&self, d: &[u64]) -> FieldElement {
        let mut enc = 0u64;
        for &c in d.iter().rev() {
            enc = enc * self.p + c;
        }
        FieldElement(enc as u32)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.from_digits(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let d: Vec<u64> = self.digits(a).iter().map(|&c| (self.p - c) % self.p).collect();
        self.from_digits(&d)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Table-backed multiplication.
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let ord = (self.q - 1) as usize;
        let idx = (self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize) % ord;
        FieldElement(self.exp[idx])
    }

    /// Reference multiplication: polynomial product reduced mod the modulus.
    /// Kept independent of the tables so the two paths can be cross-tested.
    pub fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let da = self.digits(a);
        let db = self.digits(b);
        let e = self.e as usize;
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce degree >= e terms using x^e = -(lower part of modulus)
        for d in (e..2 * e - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..e {
                let m = self.modulus[i];
                if m != 0 {
                    prod[d - e + i] = (prod[d - e + i] + self.p - c * m % self.p) % self.p;
                }
            }
        }
        self.from_digits(&prod[..e])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ord = self.q - 1;
        let l = self.log[a.0 as usize] as u64;
        Ok(FieldElement(self.exp[((ord - l) % ord) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, n: u64) -> FieldElement {
        if a.is_zero() {
            return if n == 0 { FieldElement::ONE } else { FieldElement::ZERO };
        }
        let ord = self.q - 1;
        let l = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((l % ord) * (n % ord) % ord) as usize])
    }

    fn pow_poly(&self, a: FieldElement, mut n: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            n >>= 1;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime_powers_up_to(limit: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        for p in 2..=limit {
            if !is_prime(p) {
                continue;
            }
            let mut e = 1;
            while p.pow(e) <= limit {
                out.push((p, e));
                e += 1;
            }
        }
        out
    }

    #[test]
    fn gf2_basics() {
        let f = FiniteField::new(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.add(FieldElement(1), FieldElement(1)), FieldElement(0));
    }

    #[test]
    fn gf3_inverse() {
        let f = FiniteField::new(3, 1).unwrap();
        assert_eq!(f.inv(FieldElement(2)).unwrap(), FieldElement(2));
    }

    #[test]
    fn gf4_default_modulus_and_generator_relations() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // g = class of x, encoding 2
        let g = FieldElement(2);
        let g2 = f.mul(g, g);
        assert_eq!(g2, f.add(g, FieldElement::ONE)); // g^2 = g + 1
        assert_eq!(f.mul(g, g2), FieldElement::ONE); // g^3 = 1
    }

    #[test]
    fn default_moduli_are_the_expected_ones() {
        // smallest irreducible with higher-degree coefficients more significant
        assert_eq!(FiniteField::new(2, 3).unwrap().modulus(), &[1, 1, 0, 1]); // x^3+x+1
        assert_eq!(FiniteField::new(3, 2).unwrap().modulus(), &[1, 0, 1]); // x^2+1
        assert_eq!(FiniteField::new(5, 1).unwrap().modulus(), &[0, 1]); // x
    }

    #[test]
    fn not_prime_rejected() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert_eq!(
            FiniteField::with_modulus(2, 2, vec![1, 0, 1]).unwrap_err(),
            Error::ReducibleModulus
        );
    }

    #[test]
    fn inv_zero_is_error() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.inv(FieldElement::ZERO).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn field_axioms_exhaustive_small_fields() {
        for (p, e) in prime_powers_up_to(64) {
            let f = FiniteField::new(p, e).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, FieldElement::ZERO), a);
                assert_eq!(f.mul(a, FieldElement::ONE), a);
                assert_eq!(f.add(a, f.neg(a)), FieldElement::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn table_and_polynomial_multiplication_agree() {
        for (p, e) in prime_powers_up_to(64) {
            let f = FiniteField::new(p, e).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_poly(a, b), "GF({}) {}*{}", f.q(), a, b);
                }
            }
        }
    }

    #[test]
    fn inverses_in_larger_fields() {
        for (p, e) in [(2u64, 10u32), (3, 6), (5, 4), (31, 2)] {
            let f = FiniteField::new(p, e).unwrap();
            assert!(f.q() <= 1024);
            for a in f.elements().skip(1) {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in f.elements() {
            let mut acc = FieldElement::ONE;
            for n in 0..20 {
                assert_eq!(f.pow(a, n), acc);
                acc = f.mul(acc, a);
            }
        }
    }
}
