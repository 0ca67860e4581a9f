//! The vector matroid of the parity-check columns: rank/nullity oracle,
//! minimal elements of the nullity strata N_i, and the homological values
//! behind the graded Betti numbers.
//!
//! Restrictions of the independence complex are shellable matroid
//! complexes, so reduced homology is concentrated in the top dimension and
//! a signed count of independent subsets (the reduced Euler characteristic)
//! already carries the Betti value; an explicit boundary-matrix homology
//! computation over the prime subfield is kept as an independent oracle.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::algebra::field::{FieldElement, FiniteField};
use crate::algebra::matrix::MatrixGF;
use crate::code::{mask_indices, minimal_masks, LinearCode};
use crate::{Budgets, Error, Result};

/// Rank/nullity oracle over column subsets of a parity-check matrix.
#[derive(Debug)]
pub struct MatroidView {
    check: MatrixGF,
    n: usize,
    rank_full: usize,
    cols: Vec<Vec<FieldElement>>,
    memo: Mutex<HashMap<u64, usize>>,
}

/// The inclusion-minimal subsets of nullity exactly `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NullityStratum {
    pub i: usize,
    pub minimal_sets: Vec<u64>,
}

impl NullityStratum {
    /// Sets as sorted index lists, for debug dumps.
    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.minimal_sets.iter().map(|&m| mask_indices(m)).collect()
    }
}

/// Row-reduces `col` against an echelon basis of (vector, lead) pairs.
/// Returns the residue, or None when col lies in the span.
fn reduce_column(
    field: &FiniteField,
    basis: &[(Vec<FieldElement>, usize)],
    col: &[FieldElement],
) -> Option<(Vec<FieldElement>, usize)> {
    let mut v = col.to_vec();
    for (b, lead) in basis {
        let c = v[*lead];
        if !c.is_zero() {
            for (x, y) in v.iter_mut().zip(b) {
                *x = field.sub(*x, field.mul(c, *y));
            }
        }
    }
    let lead = v.iter().position(|e| !e.is_zero())?;
    let inv = field.inv(v[lead]).expect("nonzero lead");
    for x in v.iter_mut() {
        *x = field.mul(*x, inv);
    }
    Some((v, lead))
}

impl MatroidView {
    pub fn new(check: MatrixGF) -> MatroidView {
        let n = check.cols();
        let rank_full = check.rank();
        let cols = (0..n)
            .map(|c| (0..check.rows()).map(|r| check.get(r, c)).collect())
            .collect();
        MatroidView {
            check,
            n,
            rank_full,
            cols,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn from_code(code: &LinearCode) -> MatroidView {
        MatroidView::new(code.parity_check().clone())
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn rank_full(&self) -> usize {
        self.rank_full
    }
    pub fn check(&self) -> &MatrixGF {
        &self.check
    }

    /// Rank and nullity of the columns indexed by sigma, memoized.
    pub fn rank_nullity(&self, sigma: u64) -> (usize, usize) {
        let size = sigma.count_ones() as usize;
        if let Some(&r) = self.memo.lock().unwrap().get(&sigma) {
            return (r, size - r);
        }
        let field = self.check.field().clone();
        let mut basis: Vec<(Vec<FieldElement>, usize)> = Vec::new();
        for i in mask_indices(sigma) {
            if let Some(row) = reduce_column(&field, &basis, &self.cols[i]) {
                basis.push(row);
            }
        }
        let r = basis.len();
        self.memo.lock().unwrap().insert(sigma, r);
        (r, size - r)
    }

    /// Inclusion-minimal subsets of nullity exactly `i`, by a pruned DFS
    /// over all subsets: a branch dies as soon as its nullity reaches `i`,
    /// since every strict superset of a nullity-i set is non-minimal.
    pub fn minimal_nullity_sets_scan(&self, i: usize, budgets: &Budgets) -> Result<NullityStratum> {
        if self.n > budgets.scan_limit {
            return Err(Error::BudgetExceeded {
                what: "subset scan",
                needed: BigInt::from(self.n),
                limit: BigInt::from(budgets.scan_limit as u64),
            });
        }
        if i == 0 {
            return Ok(NullityStratum { i, minimal_sets: vec![0] });
        }
        let field = self.check.field().clone();
        let mut basis: Vec<(Vec<FieldElement>, usize)> = Vec::new();
        let mut candidates: Vec<u64> = Vec::new();
        self.scan_rec(&field, 0, 0, 0, i, &mut basis, &mut candidates);
        Ok(NullityStratum {
            i,
            minimal_sets: minimal_masks(&candidates),
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn scan_rec(
        &self,
        field: &FiniteField,
        pos: usize,
        mask: u64,
        nullity: usize,
        target: usize,
        basis: &mut Vec<(Vec<FieldElement>, usize)>,
        out: &mut Vec<u64>,
    ) {
        if pos == self.n {
            return;
        }
        self.scan_rec(field, pos + 1, mask, nullity, target, basis, out);
        match reduce_column(field, basis, &self.cols[pos]) {
            Some(row) => {
                basis.push(row);
                self.scan_rec(field, pos + 1, mask | 1 << pos, nullity, target, basis, out);
                basis.pop();
            }
            None => {
                if nullity + 1 == target {
                    out.push(mask | 1 << pos);
                } else {
                    self.scan_rec(field, pos + 1, mask | 1 << pos, nullity + 1, target, basis, out);
                }
            }
        }
    }

    /// Reduced Euler characteristic of the restricted independence complex:
    /// the signed count over independent subsets of sigma, empty face
    /// included at dimension -1.
    pub fn reduced_euler_char(&self, sigma: u64, budgets: &Budgets) -> Result<i64> {
        let size = sigma.count_ones() as usize;
        if size > budgets.scan_limit {
            return Err(Error::BudgetExceeded {
                what: "independent subset scan",
                needed: BigInt::from(size),
                limit: BigInt::from(budgets.scan_limit as u64),
            });
        }
        let field = self.check.field().clone();
        let indices = mask_indices(sigma);
        let mut basis: Vec<(Vec<FieldElement>, usize)> = Vec::new();
        let mut signed_total = 0i64;
        self.euler_rec(&field, &indices, 0, 1, &mut basis, &mut signed_total);
        Ok(-signed_total)
    }

    fn euler_rec(
        &self,
        field: &FiniteField,
        indices: &[usize],
        pos: usize,
        sign: i64,
        basis: &mut Vec<(Vec<FieldElement>, usize)>,
        total: &mut i64,
    ) {
        if pos == indices.len() {
            *total += sign;
            return;
        }
        self.euler_rec(field, indices, pos + 1, sign, basis, total);
        if let Some(row) = reduce_column(field, basis, &self.cols[indices[pos]]) {
            basis.push(row);
            self.euler_rec(field, indices, pos + 1, -sign, basis, total);
            basis.pop();
        }
    }

    /// Whether sigma is a minimal element of its nullity stratum: removing
    /// any single element must drop the nullity.
    pub fn is_minimal_in_stratum(&self, sigma: u64) -> bool {
        let (_, eta) = self.rank_nullity(sigma);
        if eta == 0 {
            return sigma == 0;
        }
        mask_indices(sigma)
            .into_iter()
            .all(|e| self.rank_nullity(sigma & !(1 << e)).1 < eta)
    }

    /// The N^n-graded Betti number at sigma (at homological step
    /// eta(sigma)): the absolute reduced Euler characteristic of the
    /// restricted complex, which is its top homology dimension.
    pub fn betti_value(&self, sigma: u64, budgets: &Budgets) -> Result<BigInt> {
        if !self.is_minimal_in_stratum(sigma) {
            return Err(Error::NotMinimal);
        }
        Ok(BigInt::from(self.reduced_euler_char(sigma, budgets)?).abs())
    }

    /// Explicit simplicial homology of the restricted complex over the
    /// prime subfield: degree -> dim of reduced homology, for degrees
    /// -1 ..= rank(sigma) - 1.
    pub fn homology_dims(&self, sigma: u64, budgets: &Budgets) -> Result<BTreeMap<i64, usize>> {
        let size = sigma.count_ones() as usize;
        if size > budgets.homology_limit {
            return Err(Error::BudgetExceeded {
                what: "homology face enumeration",
                needed: BigInt::from(size),
                limit: BigInt::from(budgets.homology_limit as u64),
            });
        }
        let prime = std::sync::Arc::new(
            FiniteField::prime(self.check.field().p()).expect("p is prime"),
        );
        // faces of the restricted complex, grouped by dimension
        let (rank, _) = self.rank_nullity(sigma);
        let mut faces: Vec<Vec<u64>> = vec![Vec::new(); rank + 1]; // faces[d+1] = dim-d faces
        let field = self.check.field().clone();
        let indices = mask_indices(sigma);
        let mut basis: Vec<(Vec<FieldElement>, usize)> = Vec::new();
        collect_faces(self, &field, &indices, 0, 0, &mut basis, &mut faces);
        for level in faces.iter_mut() {
            level.sort_unstable();
        }

        // boundary matrices over the prime subfield
        let one = FieldElement::ONE;
        let minus_one = prime.neg(one);
        let mut boundary: Vec<MatrixGF> = Vec::new(); // boundary[d+1]: C_d -> C_(d-1)
        for d in 0..=rank as i64 - 1 {
            let lower = &faces[d as usize];
            let upper = &faces[(d + 1) as usize];
            let pos: HashMap<u64, usize> =
                lower.iter().enumerate().map(|(i, &m)| (m, i)).collect();
            let mut m = MatrixGF::zeros(prime.clone(), lower.len(), upper.len());
            for (col, &face) in upper.iter().enumerate() {
                for (j, v) in mask_indices(face).into_iter().enumerate() {
                    let sub = face & !(1 << v);
                    let row = pos[&sub];
                    m.set(row, col, if j % 2 == 0 { one } else { minus_one });
                }
            }
            boundary.push(m);
        }

        let mut out = BTreeMap::new();
        for j in -1..=rank as i64 - 1 {
            let dim_cj = faces[(j + 1) as usize].len();
            // nullity of boundary_j (boundary_(-1) is the zero map)
            let null_j = if j == -1 {
                1
            } else {
                dim_cj - boundary[j as usize].rank()
            };
            let rank_next = if (j + 1) < rank as i64 {
                boundary[(j + 1) as usize].rank()
            } else {
                0
            };
            out.insert(j, null_j - rank_next);
        }
        Ok(out)
    }
}

#[allow(clippy::too_many_arguments)]
fn collect_faces(
    _view: &MatroidView,
    field: &FiniteField,
    indices: &[usize],
    pos: usize,
    mask: u64,
    basis: &mut Vec<(Vec<FieldElement>, usize)>,
    faces: &mut [Vec<u64>],
) {
    faces[basis.len()].push(mask);
    for (offset, &i) in indices.iter().enumerate().skip(pos) {
        if let Some(row) = reduce_column(field, basis, &_view.cols[i]) {
            basis.push(row);
            collect_faces(_view, field, indices, offset + 1, mask | 1 << i, basis, faces);
            basis.pop();
        }
    }
}

/// The subcode route to the same strata: supports of the i-minimal
/// subcodes. Must agree with the scan wherever both are feasible.
pub fn minimal_nullity_sets_subcode(
    code: &LinearCode,
    i: usize,
    budgets: &Budgets,
) -> Result<NullityStratum> {
    if i == 0 {
        return Ok(NullityStratum { i, minimal_sets: vec![0] });
    }
    let minimal_sets = code
        .minimal_subcodes(i, budgets)?
        .into_iter()
        .map(|s| s.support)
        .collect();
    Ok(NullityStratum { i, minimal_sets })
}
