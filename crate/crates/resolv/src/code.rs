//! Linear codes as row spaces: construction, duality, weight
//! distributions, subcode (Grassmannian) enumeration, supports,
//! i-minimal subcodes, generalized Hamming weights, and h-MDS tests.
//!
//! Coordinate subsets are bit-packed into u64 masks, which caps code
//! length at 64; that is plenty for everything this crate constructs.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::algebra::field::{FieldElement, FiniteField};
use crate::algebra::matrix::MatrixGF;
use crate::algebra::subspaces::{gaussian_binomial, SubspaceIter};
use crate::{Budgets, Error, Result};

/// Indices of the set bits of a support mask, ascending.
pub fn mask_indices(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// Pack a list of coordinate indices into a mask.
pub fn indices_mask(indices: &[usize]) -> u64 {
    indices.iter().fold(0u64, |m, &i| m | 1 << i)
}

/// An [n, k]_q linear code with canonical RREF generator and a matching
/// parity-check matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearCode {
    field: Arc<FiniteField>,
    n: usize,
    k: usize,
    gen: MatrixGF,   // k x n, RREF
    check: MatrixGF, // (n-k) x n, gen * check^T = 0
    nondegenerate: bool,
}

/// An i-dimensional subcode, with its canonical ambient RREF basis and
/// bit-packed support.
#[derive(Debug, Clone, PartialEq)]
pub struct Subcode {
    pub dim: usize,
    pub basis: MatrixGF,
    pub support: u64,
}

impl Subcode {
    pub fn weight(&self) -> usize {
        self.support.count_ones() as usize
    }
}

/// Exact codeword counts per Hamming weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// The distinct nonzero weights, ascending.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }
}

impl LinearCode {
    /// Build the code spanned by the given rows. The generator is the RREF
    /// of the rows with zero rows dropped, so k is their rank.
    pub fn new(field: Arc<FiniteField>, rows: &MatrixGF) -> Result<LinearCode> {
        let n = rows.cols();
        if n > 64 {
            return Err(Error::OutOfRange(format!("code length {} exceeds 64", n)));
        }
        let gen = rows.row_space_basis();
        let k = gen.rows();
        if k == 0 {
            return Err(Error::ZeroCode);
        }
        let check = gen.kernel_basis();
        debug_assert!(gen.mul(&check.transpose()).is_zero());
        let nondegenerate = (0..n).all(|c| (0..k).any(|r| !gen.get(r, c).is_zero()));
        Ok(LinearCode { field, n, k, gen, check, nondegenerate })
    }

    pub fn from_rows(field: Arc<FiniteField>, rows: &[Vec<u64>]) -> Result<LinearCode> {
        let m = MatrixGF::from_rows(field.clone(), rows);
        Self::new(field, &m)
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn q(&self) -> u64 {
        self.field.q()
    }
    pub fn generator(&self) -> &MatrixGF {
        &self.gen
    }
    pub fn parity_check(&self) -> &MatrixGF {
        &self.check
    }
    pub fn is_nondegenerate(&self) -> bool {
        self.nondegenerate
    }

    /// The [n, n-k] code generated by the parity-check matrix.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k == self.n {
            return Err(Error::ZeroCode);
        }
        LinearCode::new(self.field.clone(), &self.check)
    }

    /// Number of codewords q^k as a big integer.
    pub fn codeword_count(&self) -> BigInt {
        BigInt::from(self.q()).pow(self.k as u32)
    }

    /// The codeword for a message index in [0, q^k): base-q digits of the
    /// index are the message symbols, first generator row least significant.
    pub fn codeword(&self, index: u64) -> Vec<FieldElement> {
        let f = &self.field;
        let q = self.q();
        let mut word = vec![FieldElement::ZERO; self.n];
        let mut t = index;
        for r in 0..self.k {
            let m = FieldElement((t % q) as u32);
            t /= q;
            if !m.is_zero() {
                for c in 0..self.n {
                    let g = self.gen.get(r, c);
                    if !g.is_zero() {
                        word[c] = f.add(word[c], f.mul(m, g));
                    }
                }
            }
        }
        word
    }

    /// Exact weight distribution by full codeword enumeration.
    pub fn weight_distribution(&self, budgets: &Budgets) -> Result<WeightDistribution> {
        let count = self.codeword_count();
        if count > BigInt::from(budgets.max_codewords) {
            return Err(Error::BudgetExceeded {
                what: "codeword enumeration",
                needed: count,
                limit: BigInt::from(budgets.max_codewords),
            });
        }
        let total = count.to_u64().expect("within budget");
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for idx in 0..total {
            let w = self
                .codeword(idx)
                .iter()
                .filter(|e| !e.is_zero())
                .count();
            *counts.entry(w).or_insert(0) += 1;
        }
        Ok(WeightDistribution { counts })
    }

    fn subcode_budget_check(&self, dim: usize, budgets: &Budgets) -> Result<()> {
        let needed = gaussian_binomial(self.k, dim, self.q());
        if needed > BigInt::from(budgets.max_subcodes) {
            return Err(Error::BudgetExceeded {
                what: "subcode enumeration",
                needed,
                limit: BigInt::from(budgets.max_subcodes),
            });
        }
        Ok(())
    }

    /// Stream of all i-dimensional subcodes, each exactly once, in the
    /// deterministic order of their coefficient-space RREF bases.
    pub fn subcodes(
        &self,
        dim: usize,
        budgets: &Budgets,
    ) -> Result<impl Iterator<Item = Subcode> + '_> {
        assert!(dim <= self.k);
        self.subcode_budget_check(dim, budgets)?;
        let iter = SubspaceIter::new(self.field.clone(), self.k, dim);
        Ok(iter.map(move |coeffs| {
            let basis = coeffs.mul(&self.gen);
            let support = row_support(&basis);
            Subcode { dim, basis, support }
        }))
    }

    /// Supports of all i-dimensional subcodes, in enumeration order.
    /// Cheaper than materializing every basis.
    pub fn subcode_supports(&self, dim: usize, budgets: &Budgets) -> Result<Vec<u64>> {
        assert!(dim <= self.k);
        self.subcode_budget_check(dim, budgets)?;
        let iter = SubspaceIter::new(self.field.clone(), self.k, dim);
        Ok(iter
            .map(|coeffs| row_support(&coeffs.mul(&self.gen)))
            .collect())
    }

    /// The subcode of all codewords supported inside the coordinate set
    /// sigma; its dimension is |sigma| minus the rank of the parity-check
    /// columns indexed by sigma.
    pub fn s_hat(&self, sigma: u64) -> Subcode {
        let idx: Vec<usize> = mask_indices(sigma).into_iter().filter(|&i| i < self.n).collect();
        let sub = self.check.select_cols(&idx);
        let kernel = sub.kernel_basis();
        let dim = kernel.rows();
        let mut basis = MatrixGF::zeros(self.field.clone(), dim, self.n);
        for r in 0..dim {
            for (j, &c) in idx.iter().enumerate() {
                basis.set(r, c, kernel.get(r, j));
            }
        }
        basis.rref_in_place();
        let support = row_support(&basis);
        Subcode { dim, basis, support }
    }

    /// All i-minimal subcodes: subcodes whose support is inclusion-minimal
    /// among i-subcode supports and is spanned by a unique i-subcode.
    /// Output is ordered by support mask.
    pub fn minimal_subcodes(&self, dim: usize, budgets: &Budgets) -> Result<Vec<Subcode>> {
        assert!(dim >= 1 && dim <= self.k, "need 1 <= i <= k");
        let supports = self.subcode_supports(dim, budgets)?;
        let minimal = minimal_masks(&supports);
        Ok(minimal
            .into_iter()
            .filter_map(|mask| {
                let cand = self.s_hat(mask);
                (cand.dim == dim).then_some(cand)
            })
            .collect())
    }

    /// The i-th generalized Hamming weight: minimum support weight over
    /// all i-dimensional subcodes.
    pub fn ghw(&self, dim: usize, budgets: &Budgets) -> Result<usize> {
        assert!(dim >= 1 && dim <= self.k, "need 1 <= i <= k");
        let min = self
            .subcode_supports(dim, budgets)?
            .into_iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .expect("Grassmannian is nonempty");
        Ok(min)
    }

    /// The full weight hierarchy (d_1, ..., d_k).
    pub fn ghw_vector(&self, budgets: &Budgets) -> Result<Vec<usize>> {
        (1..=self.k).map(|i| self.ghw(i, budgets)).collect()
    }

    /// Whether d_h attains the Singleton-type bound n - k + h.
    pub fn is_h_mds(&self, h: usize, budgets: &Budgets) -> Result<bool> {
        Ok(self.ghw(h, budgets)? == self.n - self.k + h)
    }

    /// Sizes of the projective-equality classes of the generator columns
    /// (columns that are scalar multiples of each other share a class).
    /// Zero columns form their own classes. A code comes from a simple
    /// (multiplicity-free) projective system iff all sizes are 1.
    pub fn projective_column_multiplicities(&self) -> Vec<usize> {
        let f = &self.field;
        let mut canon: Vec<Option<Vec<FieldElement>>> = Vec::with_capacity(self.n);
        for c in 0..self.n {
            let col: Vec<FieldElement> = (0..self.k).map(|r| self.gen.get(r, c)).collect();
            match col.iter().position(|e| !e.is_zero()) {
                Some(lead) => {
                    let inv = f.inv(col[lead]).expect("nonzero lead");
                    canon.push(Some(col.iter().map(|&e| f.mul(e, inv)).collect()));
                }
                None => canon.push(None),
            }
        }
        let mut counts: BTreeMap<Option<Vec<FieldElement>>, usize> = BTreeMap::new();
        let mut zero_classes = 0;
        for c in canon {
            match c {
                Some(v) => *counts.entry(Some(v)).or_insert(0) += 1,
                None => zero_classes += 1,
            }
        }
        let mut out: Vec<usize> = counts.values().copied().collect();
        out.extend(std::iter::repeat(1).take(zero_classes));
        out.sort_unstable();
        out
    }
}

/// Union of the row supports of a basis matrix.
pub fn row_support(basis: &MatrixGF) -> u64 {
    let mut mask = 0u64;
    for r in 0..basis.rows() {
        for (c, e) in basis.row(r).iter().enumerate() {
            if !e.is_zero() {
                mask |= 1 << c;
            }
        }
    }
    mask
}

/// Inclusion-minimal masks of a collection, deduplicated and ordered by
/// mask value. Sorting by popcount first means a mask only needs testing
/// against already-kept smaller ones.
pub fn minimal_masks(masks: &[u64]) -> Vec<u64> {
    let mut sorted: Vec<u64> = masks.to_vec();
    sorted.sort_by_key(|&m| (m.count_ones(), m));
    sorted.dedup();
    let mut kept: Vec<u64> = Vec::new();
    'outer: for &m in &sorted {
        for &small in &kept {
            if small & m == small && small != m {
                continue 'outer;
            }
        }
        kept.push(m);
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, e: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::new(p, e).unwrap())
    }

    fn simplex_2_3() -> LinearCode {
        LinearCode::from_rows(
            gf(2, 1),
            &[
                vec![0, 0, 0, 1, 1, 1, 1],
                vec![0, 1, 1, 0, 0, 1, 1],
                vec![1, 0, 1, 0, 1, 0, 1],
            ],
        )
        .unwrap()
    }

    #[test]
    fn repetition_code() {
        let c = LinearCode::from_rows(gf(2, 1), &[vec![1, 1, 1]]).unwrap();
        assert_eq!((c.n(), c.k()), (3, 1));
        assert_eq!(c.parity_check().rank(), 2);
        let wd = c.weight_distribution(&Budgets::default()).unwrap();
        assert_eq!(wd.counts, BTreeMap::from([(0, 1), (3, 1)]));
    }

    #[test]
    fn dependent_rows_collapse() {
        let c = LinearCode::from_rows(gf(2, 1), &[vec![1, 0], vec![1, 0]]).unwrap();
        assert_eq!(c.k(), 1);
        assert!(!c.is_nondegenerate());
    }

    #[test]
    fn zero_code_is_error() {
        let err = LinearCode::from_rows(gf(2, 1), &[vec![0, 0, 0]]).unwrap_err();
        assert_eq!(err, Error::ZeroCode);
    }

    #[test]
    fn simplex_construction_and_weights() {
        let c = simplex_2_3();
        assert_eq!((c.n(), c.k()), (7, 3));
        assert!(c.generator().mul(&c.parity_check().transpose()).is_zero());
        let wd = c.weight_distribution(&Budgets::default()).unwrap();
        assert_eq!(wd.counts, BTreeMap::from([(0, 1), (4, 7)]));
        assert_eq!(wd.total(), 8);
    }

    #[test]
    fn dual_is_involution() {
        let c = simplex_2_3();
        let d = c.dual().unwrap();
        assert_eq!((d.n(), d.k()), (7, 4));
        assert_eq!(d.dual().unwrap(), c);
    }

    #[test]
    fn hamming_dual_is_simplex() {
        // [7,4] Hamming: parity-check columns are all nonzero triples,
        // which is exactly the simplex generator.
        let simplex = simplex_2_3();
        let hamming = LinearCode::new(gf(2, 1), &simplex.generator().kernel_basis()).unwrap();
        assert_eq!((hamming.n(), hamming.k()), (7, 4));
        assert_eq!(hamming.dual().unwrap(), simplex);
    }

    #[test]
    fn full_space_dual_is_error() {
        let c = LinearCode::new(gf(2, 1), &MatrixGF::identity(gf(2, 1), 3)).unwrap();
        assert_eq!(c.dual().unwrap_err(), Error::ZeroCode);
    }

    #[test]
    fn subcode_counts() {
        let b = Budgets::default();
        let c = simplex_2_3();
        assert_eq!(c.subcodes(1, &b).unwrap().count(), 7);
        let all: Vec<_> = c.subcodes(3, &b).unwrap().collect();
        assert_eq!(all.len(), 1);
        assert_eq!(&all[0].basis, c.generator());
    }

    #[test]
    fn s_hat_of_full_and_empty_sets() {
        let c = simplex_2_3();
        let full = c.s_hat((1 << 7) - 1);
        assert_eq!(full.dim, 3);
        assert_eq!(&full.basis, c.generator());
        let empty = c.s_hat(0);
        assert_eq!(empty.dim, 0);
        assert_eq!(empty.support, 0);
    }

    #[test]
    fn s_hat_of_codeword_support_in_simplex() {
        let c = simplex_2_3();
        let b = Budgets::default();
        for sub in c.subcodes(1, &b).unwrap() {
            let back = c.s_hat(sub.support);
            assert_eq!(back.dim, 1);
            assert_eq!(back.basis, sub.basis);
        }
    }

    #[test]
    fn s_hat_rank_nullity_identity_on_random_subsets() {
        // dim S(sigma) = |sigma| - dim s_hat(sigma), 200 draws per field
        for (p, e) in [(2u64, 1u32), (3, 1), (2, 2)] {
            let f = gf(p, e);
            let mut state = 0x9e3779b97f4a7c15u64 ^ (p << 8) ^ e as u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            let rows: Vec<Vec<u64>> = (0..3)
                .map(|_| (0..8).map(|_| next() % f.q()).collect())
                .collect();
            let Ok(c) = LinearCode::from_rows(f, &rows) else { continue };
            for _ in 0..200 {
                let sigma = next() & ((1 << c.n()) - 1);
                let idx = mask_indices(sigma);
                let rank = c.parity_check().select_cols(&idx).rank();
                let dim = c.s_hat(sigma).dim;
                assert_eq!(rank, idx.len() - dim);
            }
        }
    }

    #[test]
    fn simplex_minimal_subcodes_and_hierarchy() {
        let b = Budgets::default();
        let c = simplex_2_3();
        let min1 = c.minimal_subcodes(1, &b).unwrap();
        assert_eq!(min1.len(), 7);
        assert!(min1.iter().all(|s| s.weight() == 4));
        assert_eq!(c.ghw_vector(&b).unwrap(), vec![4, 6, 7]);
        assert!(!c.is_h_mds(1, &b).unwrap());
        let mink = c.minimal_subcodes(3, &b).unwrap();
        assert_eq!(mink.len(), 1);
        assert_eq!(mink[0].weight(), 7);
    }

    #[test]
    fn ghw_strictly_increasing_on_test_codes() {
        let b = Budgets::default();
        for code in [
            simplex_2_3(),
            LinearCode::from_rows(gf(3, 1), &[vec![1, 0, 1, 2], vec![0, 1, 1, 1]]).unwrap(),
        ] {
            let ds = code.ghw_vector(&b).unwrap();
            assert!(ds.windows(2).all(|w| w[0] < w[1]), "{:?}", ds);
            if code.is_nondegenerate() {
                assert_eq!(*ds.last().unwrap(), code.n());
            }
        }
    }

    #[test]
    fn binary_codewords_below_twice_min_distance_are_minimal() {
        let b = Budgets::default();
        let codes = [
            simplex_2_3(),
            LinearCode::from_rows(
                gf(2, 1),
                &[vec![1, 0, 1, 1, 0, 0], vec![0, 1, 1, 0, 1, 0], vec![0, 0, 0, 1, 1, 1]],
            )
            .unwrap(),
        ];
        for c in codes {
            let d1 = c.ghw(1, &b).unwrap();
            let minimal_supports: Vec<u64> = c
                .minimal_subcodes(1, &b)
                .unwrap()
                .iter()
                .map(|s| s.support)
                .collect();
            for sub in c.subcodes(1, &b).unwrap() {
                if sub.weight() < 2 * d1 {
                    assert!(minimal_supports.contains(&sub.support));
                }
            }
        }
    }

    #[test]
    fn budgets_are_enforced() {
        let c = simplex_2_3();
        let tight = Budgets { max_codewords: 4, ..Budgets::default() };
        assert!(matches!(
            c.weight_distribution(&tight).unwrap_err(),
            Error::BudgetExceeded { .. }
        ));
        let tight2 = Budgets { max_subcodes: 2, ..Budgets::default() };
        assert!(matches!(
            c.minimal_subcodes(1, &tight2).unwrap_err(),
            Error::BudgetExceeded { .. }
        ));
    }

    #[test]
    fn weight_distribution_matches_shuffled_recount() {
        let c = simplex_2_3();
        let wd = c.weight_distribution(&Budgets::default()).unwrap();
        // independent recount in a scrambled enumeration order
        let total = 8u64;
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        let mut order: Vec<u64> = (0..total).collect();
        // fixed Fisher-Yates with a hand-rolled generator
        let mut s = 0xdeadbeefu64;
        for i in (1..order.len()).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            order.swap(i, (s % (i as u64 + 1)) as usize);
        }
        for idx in order {
            let w = c.codeword(idx).iter().filter(|e| !e.is_zero()).count();
            *counts.entry(w).or_insert(0) += 1;
        }
        assert_eq!(counts, wd.counts);
    }

    #[test]
    fn minimal_masks_filters_supersets() {
        let masks = vec![0b0111, 0b1111, 0b0011, 0b1100, 0b0011];
        assert_eq!(minimal_masks(&masks), vec![0b0011, 0b1100]);
    }
}
