//! Constructors for the code families and projective systems that exercise
//! the Betti machinery: generalized Reed-Muller codes, simplex and
//! Reed-Solomon codes, and the geometric two-weight families (hyperovals
//! and their duals, Denniston maximal arcs, ovoids, Hermitian varieties,
//! subfield systems), plus hyperplane/subspace section counting.
//!
//! Geometric constructions are validated post hoc by their advertised
//! section spectra rather than trusted.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::field::{FieldElement, FiniteField};
use crate::algebra::matrix::MatrixGF;
use crate::algebra::subspaces::{binomial, gaussian_binomial, SubspaceIter};
use crate::code::LinearCode;
use crate::{Budgets, Error, Result};

/// Factor a prime power; errors with NotPrime when q is not one.
pub fn factor_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrime(q));
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Ok((q, 1));
    }
    let mut t = q;
    let mut e = 0;
    while t % p == 0 {
        t /= p;
        e += 1;
    }
    if t != 1 {
        return Err(Error::NotPrime(q));
    }
    Ok((p, e))
}

/// The field of order q (q a prime power), with the default modulus.
pub fn field_of_order(q: u64) -> Result<Arc<FiniteField>> {
    let (p, e) = factor_prime_power(q)?;
    Ok(Arc::new(FiniteField::new(p, e)?))
}

/// p_j(q) = |P^j(F_q)| = q^j + ... + q + 1, with p_j = 0 for j < 0.
pub fn projective_space_size(j: i64, q: u64) -> usize {
    if j < 0 {
        return 0;
    }
    (0..=j).map(|i| (q as usize).pow(i as u32)).sum()
}

/// All q^m points of F_q^m in lexicographic order, first coordinate most
/// significant.
pub fn affine_points(field: &Arc<FiniteField>, m: usize) -> Vec<Vec<FieldElement>> {
    let q = field.q();
    let total = q.pow(m as u32);
    (0..total)
        .map(|idx| {
            let mut point = vec![FieldElement::ZERO; m];
            let mut t = idx;
            for slot in point.iter_mut().rev() {
                *slot = FieldElement((t % q) as u32);
                t /= q;
            }
            point
        })
        .collect()
}

/// Canonical representatives of the points of P^(k-1)(F_q): vectors whose
/// first nonzero coordinate is 1, in lexicographic order.
pub fn projective_points(field: &Arc<FiniteField>, k: usize) -> Vec<Vec<FieldElement>> {
    affine_points(field, k)
        .into_iter()
        .filter(|v| {
            v.iter()
                .find(|e| !e.is_zero())
                .is_some_and(|e| *e == FieldElement::ONE)
        })
        .collect()
}

/// A multiset of points in P^(k-1)(F_q), stored as canonical
/// representatives (first nonzero coordinate scaled to 1), sorted.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectiveSystem {
    field: Arc<FiniteField>,
    k: usize,
    points: Vec<Vec<FieldElement>>,
}

impl ProjectiveSystem {
    pub fn new(field: Arc<FiniteField>, k: usize, points: Vec<Vec<FieldElement>>) -> Result<ProjectiveSystem> {
        let mut canon = Vec::with_capacity(points.len());
        for p in points {
            assert_eq!(p.len(), k);
            if p.iter().all(|e| e.is_zero()) {
                return Err(Error::Degenerate);
            }
            canon.push(canonicalize(&field, p)?);
        }
        canon.sort();
        Ok(ProjectiveSystem { field, k, points: canon })
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn n(&self) -> usize {
        self.points.len()
    }
    pub fn points(&self) -> &[Vec<FieldElement>] {
        &self.points
    }

    /// The associated nondegenerate [n, k]_q code: point vectors become the
    /// columns of the generator matrix.
    pub fn code(&self) -> Result<LinearCode> {
        let mut gen = MatrixGF::zeros(self.field.clone(), self.k, self.n());
        for (c, point) in self.points.iter().enumerate() {
            for (r, &e) in point.iter().enumerate() {
                gen.set(r, c, e);
            }
        }
        if gen.rank() < self.k {
            return Err(Error::Degenerate);
        }
        LinearCode::new(self.field.clone(), &gen)
    }

    /// Section sizes |P meet Pi| over all codimension-r subspaces Pi, as a
    /// map size -> number of subspaces.
    pub fn section_size_spectrum(&self, codim: usize, budgets: &Budgets) -> Result<BTreeMap<usize, usize>> {
        assert!(codim >= 1 && codim <= self.k);
        let dim = self.k - codim;
        let count = gaussian_binomial(self.k, dim, self.field.q());
        if count > BigInt::from(budgets.max_subcodes) {
            return Err(Error::BudgetExceeded {
                what: "subspace enumeration",
                needed: count,
                limit: BigInt::from(budgets.max_subcodes),
            });
        }
        let mut spectrum = BTreeMap::new();
        for basis in SubspaceIter::new(self.field.clone(), self.k, dim) {
            let size = self
                .points
                .iter()
                .filter(|p| in_row_space(&self.field, &basis, p))
                .count();
            *spectrum.entry(size).or_insert(0) += 1;
        }
        Ok(spectrum)
    }

    /// The r-th higher weight d_r(P) = n - max |P meet Pi| over
    /// codimension-r subspaces.
    pub fn higher_weight(&self, r: usize, budgets: &Budgets) -> Result<usize> {
        assert!(r >= 1 && r <= self.k);
        if r == self.k {
            // the only codimension-k subspace is empty
            return Ok(self.n());
        }
        let spectrum = self.section_size_spectrum(r, budgets)?;
        let max = spectrum.keys().max().copied().unwrap_or(0);
        Ok(self.n() - max)
    }

    /// Hyperplane section counts nu: size -> count (codimension 1).
    pub fn hyperplane_spectrum(&self, budgets: &Budgets) -> Result<BTreeMap<usize, usize>> {
        self.section_size_spectrum(1, budgets)
    }
}

fn canonicalize(field: &Arc<FiniteField>, mut v: Vec<FieldElement>) -> Result<Vec<FieldElement>> {
    let lead = v.iter().position(|e| !e.is_zero()).ok_or(Error::Degenerate)?;
    let inv = field.inv(v[lead])?;
    for e in v.iter_mut() {
        *e = field.mul(*e, inv);
    }
    Ok(v)
}

/// Membership of a vector in the row space of an RREF basis.
fn in_row_space(field: &Arc<FiniteField>, basis: &MatrixGF, v: &[FieldElement]) -> bool {
    let mut residue = v.to_vec();
    for r in 0..basis.rows() {
        let Some(pivot) = (0..basis.cols()).find(|&c| !basis.get(r, c).is_zero()) else {
            continue;
        };
        let c = residue[pivot];
        if !c.is_zero() {
            for (x, j) in residue.iter_mut().zip(0..basis.cols()) {
                *x = field.sub(*x, field.mul(c, basis.get(r, j)));
            }
        }
    }
    residue.iter().all(|e| e.is_zero())
}

// ---------------------------------------------------------------------------
// Reed-Muller codes
// ---------------------------------------------------------------------------

/// Parameters of the generalized Reed-Muller code RM_q(r, m).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RMParameters {
    pub q: u64,
    pub r: usize,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub t: usize,
    pub s: usize,
}

/// Exact [n, k, d] parameters of RM_q(r, m) from the alternating binomial
/// sum, with the decomposition r = t(q-1) + s, 0 <= s <= q-2.
pub fn rm_parameters(q: u64, r: usize, m: usize) -> Result<RMParameters> {
    if m < 1 || r > m * (q as usize - 1) {
        return Err(Error::OutOfRange(format!("rm(q={}, r={}, m={})", q, r, m)));
    }
    let n = (q as usize).pow(m as u32);
    let mut k = BigInt::zero();
    for i in 0..=m {
        let top = m as i64 + r as i64 - (i as i64) * q as i64;
        let term = binomial(m as i64, i as i64) * binomial(top, m as i64);
        if i % 2 == 0 {
            k += term;
        } else {
            k -= term;
        }
    }
    let k = k.to_usize().expect("dimension fits usize");
    // r = t(q-1) + s with 0 <= s <= q-2
    let qm1 = (q - 1) as usize;
    let (t, s) = (r / qm1, r % qm1);
    let d = if t == m {
        1
    } else {
        (q as usize - s) * (q as usize).pow((m - t - 1) as u32)
    };
    Ok(RMParameters { q, r, m, n, k, d, t, s })
}

/// Exponent vectors of the monomial basis of V_q(r, m): per-variable
/// degree < q, total degree <= r, lexicographic order.
fn rm_monomials(q: u64, r: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = vec![0u8; m];
    loop {
        let total: usize = current.iter().map(|&e| e as usize).sum();
        if total <= r {
            out.push(current.clone());
        }
        // odometer over [0, q-1]^m, last variable fastest
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if (current[i] as u64) + 1 < q {
                current[i] += 1;
                for v in &mut current[i + 1..] {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// The generalized Reed-Muller code RM_q(r, m): evaluations of the
/// monomial basis of V_q(r, m) at all q^m points in fixed lexicographic
/// point order.
pub fn reed_muller(q: u64, r: usize, m: usize) -> Result<LinearCode> {
    let params = rm_parameters(q, r, m)?;
    if params.n > 64 {
        return Err(Error::BudgetExceeded {
            what: "evaluation points",
            needed: BigInt::from(params.n),
            limit: BigInt::from(64),
        });
    }
    if params.k == 0 {
        return Err(Error::ZeroCode);
    }
    let field = field_of_order(q)?;
    let points = affine_points(&field, m);
    let monomials = rm_monomials(q, r, m);
    let mut gen = MatrixGF::zeros(field.clone(), monomials.len(), params.n);
    for (row, mono) in monomials.iter().enumerate() {
        for (col, point) in points.iter().enumerate() {
            let mut val = FieldElement::ONE;
            for (x, &e) in point.iter().zip(mono) {
                if e > 0 {
                    val = field.mul(val, field.pow(*x, e as u64));
                }
            }
            gen.set(row, col, val);
        }
    }
    let code = LinearCode::new(field, &gen)?;
    debug_assert_eq!(code.k(), params.k);
    Ok(code)
}

/// A sparse multivariate polynomial over a finite field, for building
/// explicit witness codewords.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPoly {
    field: Arc<FiniteField>,
    m: usize,
    terms: BTreeMap<Vec<u8>, FieldElement>,
}

impl MultiPoly {
    pub fn zero(field: Arc<FiniteField>, m: usize) -> MultiPoly {
        MultiPoly { field, m, terms: BTreeMap::new() }
    }

    pub fn constant(field: Arc<FiniteField>, m: usize, c: FieldElement) -> MultiPoly {
        let mut p = Self::zero(field, m);
        if !c.is_zero() {
            p.terms.insert(vec![0; m], c);
        }
        p
    }

    /// The variable X_i (0-based).
    pub fn var(field: Arc<FiniteField>, m: usize, i: usize) -> MultiPoly {
        assert!(i < m);
        let mut exp = vec![0u8; m];
        exp[i] = 1;
        let mut p = Self::zero(field, m);
        p.terms.insert(exp, FieldElement::ONE);
        p
    }

    /// X_i - omega.
    pub fn var_minus(field: Arc<FiniteField>, m: usize, i: usize, omega: FieldElement) -> MultiPoly {
        let mut p = Self::var(field.clone(), m, i);
        let neg = field.neg(omega);
        if !neg.is_zero() {
            p.terms.insert(vec![0; m], neg);
        }
        p
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exp, &c) in &other.terms {
            let entry = out.terms.entry(exp.clone()).or_insert(FieldElement::ZERO);
            *entry = self.field.add(*entry, c);
            if entry.is_zero() {
                out.terms.remove(exp);
            }
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = Self::zero(self.field.clone(), self.m);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exp: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let c = self.field.mul(ca, cb);
                let entry = out.terms.entry(exp.clone()).or_insert(FieldElement::ZERO);
                *entry = self.field.add(*entry, c);
                if entry.is_zero() {
                    out.terms.remove(&exp);
                }
            }
        }
        out
    }

    pub fn max_var_degree(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|e| e.iter())
            .map(|&d| d as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&d| d as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for (exp, &c) in &self.terms {
            let mut term = c;
            for (x, &e) in point.iter().zip(exp) {
                if e > 0 {
                    term = self.field.mul(term, self.field.pow(*x, e as u64));
                }
            }
            acc = self.field.add(acc, term);
        }
        acc
    }
}

/// Evaluation vector of a polynomial with per-variable degree < q, in the
/// same point order used by the Reed-Muller constructor.
pub fn poly_codeword(q: u64, m: usize, f: &MultiPoly) -> Result<Vec<FieldElement>> {
    if f.max_var_degree() >= q as usize {
        return Err(Error::DegreeTooHigh);
    }
    let field = field_of_order(q)?;
    assert_eq!(*f.field, *field, "polynomial field must match q");
    Ok(affine_points(&field, m).iter().map(|p| f.evaluate(p)).collect())
}

// ---------------------------------------------------------------------------
// Simplex and Reed-Solomon codes
// ---------------------------------------------------------------------------

/// The simplex code: one generator column per point of P^(k-1)(F_q);
/// constant weight q^(k-1).
pub fn simplex(q: u64, k: usize) -> Result<LinearCode> {
    assert!(k >= 1);
    let field = field_of_order(q)?;
    let system = ProjectiveSystem::new(field, k, projective_points_owned(q, k)?)?;
    system.code()
}

fn projective_points_owned(q: u64, k: usize) -> Result<Vec<Vec<FieldElement>>> {
    let field = field_of_order(q)?;
    Ok(projective_points(&field, k))
}

/// Reed-Solomon code: evaluations of polynomials of degree < k at n
/// distinct points; n = q + 1 appends the point at infinity. MDS.
pub fn mds_rs(q: u64, n: usize, k: usize) -> Result<LinearCode> {
    if n > q as usize + 1 {
        return Err(Error::LengthTooLong);
    }
    if k < 1 || k > n {
        return Err(Error::InvalidParameters(format!("rs(q={}, n={}, k={})", q, n, k)));
    }
    let field = field_of_order(q)?;
    let finite_points = n.min(q as usize);
    let mut gen = MatrixGF::zeros(field.clone(), k, n);
    for row in 0..k {
        for (col, x) in field.elements().take(finite_points).enumerate() {
            gen.set(row, col, field.pow(x, row as u64));
        }
    }
    if n == q as usize + 1 {
        gen.set(k - 1, n - 1, FieldElement::ONE);
    }
    let code = LinearCode::new(field, &gen)?;
    // Vandermonde-plus-infinity is MDS; confirm the minimum distance when
    // enumeration is cheap.
    if code.codeword_count() <= BigInt::from(1u64 << 16) {
        let wd = code.weight_distribution(&Budgets::default())?;
        let d1 = *wd.nonzero_weights().first().expect("nonzero code");
        assert_eq!(d1, n - k + 1, "Reed-Solomon code must be MDS");
    }
    Ok(code)
}

// ---------------------------------------------------------------------------
// Geometric two-weight families
// ---------------------------------------------------------------------------

fn require_even_characteristic(q: u64) -> Result<(u64, u32)> {
    let (p, e) = factor_prime_power(q)?;
    if p != 2 {
        return Err(Error::OddCharacteristic);
    }
    Ok((p, e))
}

/// Regular hyperoval in PG(2, q), q even: the conic (1, t, t^2) plus
/// (0,1,0) and (0,0,1); q+2 points, every line meets it in 0 or 2.
pub fn hyperoval(q: u64) -> Result<ProjectiveSystem> {
    require_even_characteristic(q)?;
    let field = field_of_order(q)?;
    let mut points: Vec<Vec<FieldElement>> = field
        .elements()
        .map(|t| vec![FieldElement::ONE, t, field.mul(t, t)])
        .collect();
    points.push(vec![FieldElement::ZERO, FieldElement::ONE, FieldElement::ZERO]);
    points.push(vec![FieldElement::ZERO, FieldElement::ZERO, FieldElement::ONE]);
    let system = ProjectiveSystem::new(field, 3, points)?;
    verify_spectrum(&system, &[0, 2], "hyperoval line spectrum")?;
    Ok(system)
}

/// The secant lines of the hyperoval, as points of the dual plane.
pub fn dual_hyperoval(q: u64) -> Result<ProjectiveSystem> {
    let oval = hyperoval(q)?;
    let field = oval.field().clone();
    let pts = oval.points();
    let mut lines = Vec::new();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            lines.push(cross_product(&field, &pts[i], &pts[j]));
        }
    }
    let system = ProjectiveSystem::new(field, 3, lines)?;
    let expected = [(q as usize + 2) / 2, q as usize + 1];
    verify_spectrum(&system, &expected, "dual hyperoval section spectrum")?;
    if system.n() != (q as usize + 2) * (q as usize + 1) / 2 {
        return Err(Error::InvalidParameters("secant count mismatch".into()));
    }
    Ok(system)
}

fn cross_product(field: &Arc<FiniteField>, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mul = |x, y| field.mul(x, y);
    vec![
        field.sub(mul(a[1], b[2]), mul(a[2], b[1])),
        field.sub(mul(a[2], b[0]), mul(a[0], b[2])),
        field.sub(mul(a[0], b[1]), mul(a[1], b[0])),
    ]
}

/// Denniston maximal arc in PG(2, q): 1 + (q+1)(h-1) points meeting every
/// line in 0 or h points. Built from an anisotropic quadratic form
/// x^2 + xy + c y^2 and the additive subgroup H of the first log2(h)
/// polynomial-basis vectors; validated by its line spectrum.
pub fn denniston_arc(q: u64, h: u64) -> Result<ProjectiveSystem> {
    require_even_characteristic(q)?;
    if !(h > 1 && h < q && h.is_power_of_two() && q % h == 0) {
        return Err(Error::InvalidDivisor);
    }
    let field = field_of_order(q)?;
    // c with x^2 + x + c irreducible: no t has t^2 + t = c
    let reachable: std::collections::HashSet<u32> = field
        .elements()
        .map(|t| field.add(field.mul(t, t), t).0)
        .collect();
    let c = field
        .elements()
        .find(|e| !reachable.contains(&e.0))
        .expect("the trace-one coset is nonempty");
    let anisotropic = |x: FieldElement, y: FieldElement| {
        field.add(
            field.add(field.mul(x, x), field.mul(x, y)),
            field.mul(c, field.mul(y, y)),
        )
    };
    let mut points = Vec::new();
    for x in field.elements() {
        for y in field.elements() {
            if (anisotropic(x, y).0 as u64) < h {
                points.push(vec![x, y, FieldElement::ONE]);
            }
        }
    }
    let system = ProjectiveSystem::new(field, 3, points)?;
    if system.n() != 1 + (q as usize + 1) * (h as usize - 1) {
        return Err(Error::InvalidParameters("maximal arc point count mismatch".into()));
    }
    verify_spectrum(&system, &[0, h as usize], "maximal arc line spectrum")?;
    Ok(system)
}

/// Elliptic-quadric ovoid in PG(3, q), q > 2: x0 x1 = g(x2, x3) for an
/// irreducible binary quadratic form g; q^2 + 1 points, no three collinear.
pub fn ovoid(q: u64) -> Result<ProjectiveSystem> {
    if q <= 2 {
        return Err(Error::UnsupportedQ);
    }
    let field = field_of_order(q)?;
    // g(u, v) = u^2 + b uv + c v^2 anisotropic: u^2 + b u + c has no root
    let (b, c) = find_anisotropic_form(&field);
    let g = |u: FieldElement, v: FieldElement| {
        field.add(
            field.add(field.mul(u, u), field.mul(b, field.mul(u, v))),
            field.mul(c, field.mul(v, v)),
        )
    };
    let points: Vec<Vec<FieldElement>> = projective_points(&field, 4)
        .into_iter()
        .filter(|p| field.mul(p[0], p[1]) == g(p[2], p[3]))
        .collect();
    let system = ProjectiveSystem::new(field, 4, points)?;
    if system.n() != (q * q + 1) as usize {
        return Err(Error::InvalidParameters("ovoid point count mismatch".into()));
    }
    verify_spectrum(&system, &[1, q as usize + 1], "ovoid hyperplane spectrum")?;
    Ok(system)
}

fn find_anisotropic_form(field: &Arc<FiniteField>) -> (FieldElement, FieldElement) {
    for b in field.elements() {
        'c: for c in field.elements() {
            for u in field.elements() {
                let val = field.add(field.add(field.mul(u, u), field.mul(b, u)), c);
                if val.is_zero() {
                    continue 'c;
                }
            }
            return (b, c);
        }
    }
    unreachable!("irreducible quadratics exist over every finite field");
}

/// Count n_k of points of the Hermitian variety of dimension k-2 in
/// P^(k-1)(F_{q^2}).
pub fn hermitian_point_count(q: u64, k: usize) -> BigInt {
    let qb = BigInt::from(q);
    let sign = |j: usize| if j % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
    (qb.pow(k as u32) - sign(k)) * (qb.pow(k as u32 - 1) - sign(k - 1)) / (qb.pow(2) - 1)
}

/// Hermitian variety X_1^(q+1) + ... + X_k^(q+1) = 0 in P^(k-1)(F_{q^2}).
pub fn hermitian(q: u64, k: usize, budgets: &Budgets) -> Result<ProjectiveSystem> {
    if k < 3 {
        return Err(Error::OutOfRange("hermitian needs k >= 3".into()));
    }
    let (p, e) = factor_prime_power(q)?;
    let field = Arc::new(FiniteField::new(p, 2 * e)?);
    let scan = BigInt::from(field.q()).pow(k as u32);
    if scan > BigInt::from(budgets.max_codewords) {
        return Err(Error::BudgetExceeded {
            what: "projective point scan",
            needed: scan,
            limit: BigInt::from(budgets.max_codewords),
        });
    }
    let points: Vec<Vec<FieldElement>> = projective_points(&field, k)
        .into_iter()
        .filter(|pt| {
            let mut acc = FieldElement::ZERO;
            for &x in pt {
                acc = field.add(acc, field.pow(x, q + 1));
            }
            acc.is_zero()
        })
        .collect();
    let system = ProjectiveSystem::new(field, k, points)?;
    if BigInt::from(system.n()) != hermitian_point_count(q, k) {
        return Err(Error::InvalidParameters("Hermitian point count mismatch".into()));
    }
    let tangent = 1 + (q * q) as usize
        * hermitian_point_count(q, k - 2).to_usize().expect("small");
    let non_tangent = hermitian_point_count(q, k - 1).to_usize().expect("small");
    verify_spectrum(&system, &[non_tangent.min(tangent), non_tangent.max(tangent)], "Hermitian hyperplane spectrum")?;
    Ok(system)
}

/// P^(k-1)(F_q) embedded as a projective system in P^(k-1)(F_{q^2}).
pub fn subfield_system(q: u64, k: usize) -> Result<ProjectiveSystem> {
    if k < 2 {
        return Err(Error::OutOfRange("subfield system needs k >= 2".into()));
    }
    let (p, e) = factor_prime_power(q)?;
    let field = Arc::new(FiniteField::new(p, 2 * e)?);
    let subfield: Vec<FieldElement> = field
        .elements()
        .filter(|&z| field.pow(z, q) == z)
        .collect();
    assert_eq!(subfield.len() as u64, q);
    // canonical representatives over the subfield: first nonzero = 1
    let mut points = Vec::new();
    let mut stack = vec![Vec::<FieldElement>::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == k {
            if prefix.iter().any(|e| !e.is_zero()) {
                points.push(prefix);
            }
            continue;
        }
        // depth-first, reversed push keeps lexicographic output order
        for &z in subfield.iter().rev() {
            let mut next = prefix.clone();
            next.push(z);
            stack.push(next);
        }
    }
    let points: Vec<Vec<FieldElement>> = points
        .into_iter()
        .filter(|v| {
            v.iter()
                .find(|e| !e.is_zero())
                .is_some_and(|e| *e == FieldElement::ONE)
        })
        .collect();
    let system = ProjectiveSystem::new(field, k, points)?;
    if system.n() != projective_space_size(k as i64 - 1, q) {
        return Err(Error::InvalidParameters("subfield point count mismatch".into()));
    }
    let expected = [
        projective_space_size(k as i64 - 3, q),
        projective_space_size(k as i64 - 2, q),
    ];
    verify_spectrum(&system, &expected, "subfield section spectrum")?;
    Ok(system)
}

/// Check that every hyperplane section size lies in the expected set and
/// every expected size occurs.
fn verify_spectrum(system: &ProjectiveSystem, expected: &[usize], what: &str) -> Result<()> {
    let spectrum = system.hyperplane_spectrum(&Budgets::default())?;
    let sizes: Vec<usize> = spectrum.keys().copied().collect();
    let ok = sizes.iter().all(|s| expected.contains(s))
        && expected.iter().all(|s| sizes.contains(s));
    if !ok {
        return Err(Error::InvalidParameters(format!(
            "{} is {:?}, expected {:?}",
            what, sizes, expected
        )));
    }
    Ok(())
}
