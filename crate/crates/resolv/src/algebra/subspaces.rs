//! Gaussian binomial coefficients and enumeration of the Grassmannian of
//! i-dimensional subspaces of F_q^k as canonical RREF basis matrices.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::field::{FieldElement, FiniteField};
use crate::algebra::matrix::MatrixGF;

/// Ordinary binomial coefficient as a big integer (0 when out of range).
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Gaussian binomial coefficient: the number of i-dimensional subspaces of
/// F_q^k, from the exact product formula.
pub fn gaussian_binomial(k: usize, i: usize, q: u64) -> BigInt {
    assert!(i <= k, "need 0 <= i <= k");
    assert!(q >= 2);
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..i {
        num *= q.pow(k as u32 - j as u32) - 1;
        den *= q.pow(j as u32 + 1) - 1;
    }
    let (quot, rem) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(rem.is_zero());
    quot
}

/// Iterator over all i-dimensional subspaces of F_q^k, yielded as their
/// unique i x k RREF basis matrices. Pivot-column profiles run in
/// lexicographic order, and for a fixed profile the free entries run as a
/// base-q odometer with the last free cell fastest.
pub struct SubspaceIter {
    field: Arc<FiniteField>,
    k: usize,
    dim: usize,
    profile: Option<Vec<usize>>, // current pivot columns, None when exhausted
    free_cells: Vec<(usize, usize)>,
    free_vals: Vec<u32>,
    done_profile: bool,
}

impl SubspaceIter {
    pub fn new(field: Arc<FiniteField>, ambient: usize, dim: usize) -> Self {
        assert!(dim <= ambient);
        let profile = Some((0..dim).collect::<Vec<_>>());
        let mut it = SubspaceIter {
            field,
            k: ambient,
            dim,
            profile,
            free_cells: Vec::new(),
            free_vals: Vec::new(),
            done_profile: false,
        };
        it.reset_cells();
        it
    }

    fn reset_cells(&mut self) {
        let Some(profile) = &self.profile else { return };
        // free cells of an RREF matrix: (r, c) with c > pivot[r], c not a pivot
        self.free_cells.clear();
        for (r, &p) in profile.iter().enumerate() {
            for c in p + 1..self.k {
                if !profile.contains(&c) {
                    self.free_cells.push((r, c));
                }
            }
        }
        self.free_vals = vec![0; self.free_cells.len()];
        self.done_profile = false;
    }

    fn advance_profile(&mut self) {
        // next k-choose-dim combination in lexicographic order
        let Some(profile) = &mut self.profile else { return };
        if self.dim == 0 {
            self.profile = None;
            return;
        }
        let mut i = self.dim;
        loop {
            if i == 0 {
                self.profile = None;
                return;
            }
            i -= 1;
            if profile[i] < self.k - (self.dim - i) {
                profile[i] += 1;
                for j in i + 1..self.dim {
                    profile[j] = profile[j - 1] + 1;
                }
                break;
            }
        }
        self.reset_cells();
    }

    fn current_matrix(&self) -> MatrixGF {
        let profile = self.profile.as_ref().unwrap();
        let mut m = MatrixGF::zeros(self.field.clone(), self.dim, self.k);
        for (r, &p) in profile.iter().enumerate() {
            m.set(r, p, FieldElement::ONE);
        }
        for (idx, &(r, c)) in self.free_cells.iter().enumerate() {
            m.set(r, c, FieldElement(self.free_vals[idx]));
        }
        m
    }
}

impl Iterator for SubspaceIter {
    type Item = MatrixGF;

    fn next(&mut self) -> Option<MatrixGF> {
        loop {
            self.profile.as_ref()?;
            if self.done_profile {
                self.advance_profile();
                continue;
            }
            let out = self.current_matrix();
            // odometer: last cell fastest
            let q = self.field.q() as u32;
            let mut i = self.free_vals.len();
            loop {
                if i == 0 {
                    self.done_profile = true;
                    break;
                }
                i -= 1;
                if self.free_vals[i] + 1 < q {
                    self.free_vals[i] += 1;
                    for v in &mut self.free_vals[i + 1..] {
                        *v = 0;
                    }
                    break;
                }
            }
            return Some(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn gf(p: u64, e: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, e).unwrap())
    }

    #[test]
    fn gaussian_binomial_examples() {
        assert_eq!(gaussian_binomial(3, 0, 2), BigInt::from(1));
        assert_eq!(gaussian_binomial(2, 1, 2), BigInt::from(3));
        assert_eq!(gaussian_binomial(4, 2, 4), BigInt::from(357));
        assert_eq!(gaussian_binomial(3, 1, 2), BigInt::from(7));
    }

    #[test]
    fn gaussian_binomial_symmetry() {
        for q in [2u64, 3, 4, 5] {
            for k in 0..=5usize {
                for i in 0..=k {
                    assert_eq!(
                        gaussian_binomial(k, i, q),
                        gaussian_binomial(k, k - i, q)
                    );
                }
            }
        }
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(6, 2), BigInt::from(15));
        assert_eq!(binomial(4, 0), BigInt::from(1));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(-1, 0), BigInt::from(0));
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)] {
            let f = gf(p, e);
            for k in 0..=4usize {
                for i in 0..=k {
                    let got = SubspaceIter::new(f.clone(), k, i).count();
                    let want = gaussian_binomial(k, i, f.q());
                    assert_eq!(BigInt::from(got), want, "q={} k={} i={}", f.q(), k, i);
                }
            }
        }
    }

    #[test]
    fn subspaces_are_distinct_rref_of_full_rank() {
        let f = gf(2, 1);
        let mut seen = HashSet::new();
        for m in SubspaceIter::new(f, 4, 2) {
            assert_eq!(m.rank(), 2);
            let (r, _, _) = m.rref();
            assert_eq!(r, m, "bases are already in RREF");
            let key: Vec<u32> = m.entries().iter().map(|e| e.0).collect();
            assert!(seen.insert(key), "duplicate subspace basis");
        }
        assert_eq!(BigInt::from(seen.len()), gaussian_binomial(4, 2, 2));
    }

    #[test]
    fn full_dimension_yields_identity() {
        let f = gf(3, 1);
        let all: Vec<_> = SubspaceIter::new(f.clone(), 3, 3).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0], MatrixGF::identity(f, 3));
    }

    #[test]
    fn dimension_zero_yields_single_empty_basis() {
        let f = gf(2, 1);
        let all: Vec<_> = SubspaceIter::new(f, 3, 0).collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].rows(), 0);
    }

    #[test]
    fn line_count_in_gf2_cubed() {
        let f = gf(2, 1);
        assert_eq!(SubspaceIter::new(f, 3, 1).count(), 7);
    }
}
