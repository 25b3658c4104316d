//! Dense exact matrices and the canonical solvers everything else sits on.
//!
//! Reduced row echelon form uses the first nonzero column and the smallest
//! row index as pivot, so every quotient, nullspace and particular solution
//! produced here is canonical: the same subspace always yields bit-identical
//! output.

use crate::field::{Field, Scalar};
use rand::Rng;

/// A linear map `k^cols -> k^rows`, stored row-major.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct LinMap {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Scalar>,
}

impl LinMap {
    pub fn zero(field: Field, rows: usize, cols: usize) -> LinMap {
        LinMap {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        let mut m = LinMap::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> LinMap {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        LinMap { field, rows, cols, entries }
    }

    /// Builds a matrix from integer rows; test and fixture helper.
    pub fn from_rows_i64(field: Field, rows: &[Vec<i64>]) -> LinMap {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        LinMap::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    /// Matrix product `self * rhs`, i.e. the composite `self ∘ rhs` of maps.
    pub fn mul(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(self.field, rhs.field, "field mismatch");
        assert_eq!(self.cols, rhs.rows, "shape mismatch in composition");
        let f = self.field;
        let mut out = LinMap::zero(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, f.add(&cur, &f.mul(a, b)));
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        LinMap {
            field: f,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &LinMap) -> LinMap {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        LinMap {
            field: f,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn neg(&self) -> LinMap {
        let f = self.field;
        LinMap {
            field: f,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| f.neg(a)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        let f = self.field;
        LinMap {
            field: f,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| f.mul(a, s)).collect(),
        }
    }

    pub fn transpose(&self) -> LinMap {
        LinMap::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Kronecker product with row-major index flattening:
    /// `(f ⊗ g)[(i1*r2+i2),(j1*c2+j2)] = f[i1,j1]*g[i2,j2]`.
    pub fn kron(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(self.field, rhs.field);
        let f = self.field;
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = LinMap::zero(f, rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if f.is_zero(a) {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.get(i2, j2);
                        if f.is_zero(b) {
                            continue;
                        }
                        out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(self.field, rhs.field);
        let f = self.field;
        let mut out = LinMap::zero(f, self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                out.set(self.rows + i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        out
    }

    /// Horizontal stack `[self | rhs]`.
    pub fn hstack(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(self.rows, rhs.rows);
        LinMap::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical stack.
    pub fn vstack(&self, rhs: &LinMap) -> LinMap {
        assert_eq!(self.cols, rhs.cols);
        LinMap::from_fn(self.field, self.rows + rhs.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j).clone()
            } else {
                rhs.get(i - self.rows, j).clone()
            }
        })
    }

    /// The symmetry `x ⊗ y -> y ⊗ x` on `k^m ⊗ k^n`.
    pub fn braid(field: Field, m: usize, n: usize) -> LinMap {
        let mut out = LinMap::zero(field, m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                out.set(j * m + i, i * n + j, field.one());
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !f.is_zero(a) && !f.is_zero(&v[j]) {
                    out[i] = f.add(&out[i], &f.mul(a, &v[j]));
                }
            }
        }
        out
    }

    /// Row-major vectorization.
    pub fn vec_entries(&self) -> Vec<Scalar> {
        self.entries.clone()
    }

    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 0..m.cols {
            // first nonzero entry at or below `rank`, smallest row index
            let mut piv = None;
            for r in rank..m.rows {
                if !f.is_zero(m.get(r, col)) {
                    piv = Some(r);
                    break;
                }
            }
            let Some(piv) = piv else { continue };
            if piv != rank {
                for j in 0..m.cols {
                    let a = m.get(rank, j).clone();
                    let b = m.get(piv, j).clone();
                    m.set(rank, j, b);
                    m.set(piv, j, a);
                }
            }
            let inv = f.inv(m.get(rank, col)).unwrap();
            for j in 0..m.cols {
                let v = f.mul(m.get(rank, j), &inv);
                m.set(rank, j, v);
            }
            for r in 0..m.rows {
                if r == rank {
                    continue;
                }
                let c = m.get(r, col).clone();
                if f.is_zero(&c) {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&c, m.get(rank, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        Rref { mat: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Canonical basis of `ker(self)`, one vector per free column, ordered
    /// by ascending free column index.
    pub fn nullspace_basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field;
        let r = self.rref();
        let pivot_set: std::collections::BTreeMap<usize, usize> =
            r.pivots.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains_key(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (&pc, &prow) in &pivot_set {
                v[pc] = f.neg(r.mat.get(prow, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * x = b` for a single column. Returns the canonical
    /// particular solution (free variables zero) or `None` if infeasible.
    pub fn solve_column(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let f = self.field;
        let mut aug = LinMap::from_fn(f, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        aug = aug.rref().mat;
        // reconstruct: any pivot in the last column means infeasible
        let mut x = vec![f.zero(); self.cols];
        for i in 0..self.rows {
            let mut lead = None;
            for j in 0..=self.cols {
                if !f.is_zero(aug.get(i, j)) {
                    lead = Some(j);
                    break;
                }
            }
            match lead {
                None => {}
                Some(j) if j == self.cols => return None,
                Some(j) => {
                    x[j] = aug.get(i, self.cols).clone();
                }
            }
        }
        Some(x)
    }

    /// Solves `self * X = B`, canonical particular solution columnwise.
    pub fn solve_matrix(&self, b: &LinMap) -> Option<LinMap> {
        assert_eq!(self.rows, b.rows);
        let f = self.field;
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            let col: Vec<Scalar> = (0..b.rows).map(|i| b.get(i, j).clone()).collect();
            cols.push(self.solve_column(&col)?);
        }
        Some(LinMap::from_fn(f, self.cols, b.cols, |i, j| cols[j][i].clone()))
    }

    /// Right inverse of a surjection (canonical section through the RREF solve).
    pub fn right_inverse(&self) -> Option<LinMap> {
        self.solve_matrix(&LinMap::identity(self.field, self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<LinMap> {
        if self.rows != self.cols {
            return None;
        }
        let inv = self.solve_matrix(&LinMap::identity(self.field, self.rows))?;
        if inv.mul(self) == LinMap::identity(self.field, self.rows) {
            Some(inv)
        } else {
            None
        }
    }

    /// Canonical basis of the column space: pivot columns of `self` in the
    /// order RREF discovers them, returned as the columns of a matrix.
    pub fn column_space_basis(&self) -> LinMap {
        let r = self.rref();
        LinMap::from_fn(self.field, self.rows, r.pivots.len(), |i, j| {
            self.get(i, r.pivots[j]).clone()
        })
    }

    pub fn random<R: Rng>(field: Field, rows: usize, cols: usize, rng: &mut R) -> LinMap {
        LinMap::from_fn(field, rows, cols, |_, _| field.sample(rng))
    }

    pub fn render(&self) -> String {
        let f = self.field;
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| f.render(self.get(i, j))).collect();
            rows.push(format!("[{}]", row.join(", ")));
        }
        format!("[{}]", rows.join(", "))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let f = self.field;
        let rows: Vec<serde_json::Value> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| serde_json::Value::String(f.render(self.get(i, j))))
                    .collect()
            })
            .collect();
        serde_json::json!({ "rows": self.rows, "cols": self.cols, "entries": rows })
    }
}

pub struct Rref {
    pub mat: LinMap,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Outcome of an affine solve `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum AffineSolution {
    Infeasible,
    Feasible {
        particular: Vec<Scalar>,
        nullspace: Vec<Vec<Scalar>>,
    },
}

/// Exact feasibility kernel: particular solution plus nullspace basis.
pub fn solve_affine(a: &LinMap, b: &[Scalar]) -> AffineSolution {
    match a.solve_column(b) {
        None => AffineSolution::Infeasible,
        Some(particular) => AffineSolution::Feasible {
            particular,
            nullspace: a.nullspace_basis(),
        },
    }
}

/// Canonical quotient of `k^dim` by the row space of `relations`.
/// Returns the projection and its canonical section.
pub struct Quotient {
    pub dim: usize,
    pub proj: LinMap,
    pub section: LinMap,
}

pub fn canonical_quotient(field: Field, dim: usize, relations: &[Vec<Scalar>]) -> Quotient {
    let rel = if relations.is_empty() {
        LinMap::zero(field, 0, dim)
    } else {
        LinMap::from_fn(field, relations.len(), dim, |i, j| relations[i][j].clone())
    };
    let r = rel.rref();
    let pivot_index: std::collections::BTreeMap<usize, usize> =
        r.pivots.iter().enumerate().map(|(k, &c)| (c, k)).collect();
    let free: Vec<usize> = (0..dim).filter(|c| !pivot_index.contains_key(c)).collect();
    let qdim = free.len();
    let mut proj = LinMap::zero(field, qdim, dim);
    for (qi, &c) in free.iter().enumerate() {
        proj.set(qi, c, field.one());
    }
    // pivot column p of RREF row k: e_p == -sum over free c of rref[k,c] e_c
    for (&p, &k) in &pivot_index {
        for (qi, &c) in free.iter().enumerate() {
            let v = field.neg(r.mat.get(k, c));
            proj.set(qi, p, v);
        }
    }
    let mut section = LinMap::zero(field, dim, qdim);
    for (qi, &c) in free.iter().enumerate() {
        section.set(c, qi, field.one());
    }
    Quotient { dim: qdim, proj, section }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    #[test]
    fn solve_identity_unique() {
        let a = LinMap::identity(q(), 2);
        let b = vec![q().from_i64(1), q().from_i64(0)];
        match solve_affine(&a, &b) {
            AffineSolution::Feasible { particular, nullspace } => {
                assert_eq!(particular, b);
                assert!(nullspace.is_empty());
            }
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn solve_zero_matrix() {
        let a = LinMap::zero(q(), 2, 2);
        let b = vec![q().zero(), q().zero()];
        match solve_affine(&a, &b) {
            AffineSolution::Feasible { particular, nullspace } => {
                assert!(particular.iter().all(|e| q().is_zero(e)));
                assert_eq!(nullspace.len(), 2);
            }
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn solve_f2_row_matches_enumeration() {
        // A = [[1,1]] over F_2, b = (1). Enumerate all four vectors to get
        // the expected solution set, then check the solver reproduces it.
        let f = Field::Fp(2);
        let a = LinMap::from_rows_i64(f, &[vec![1, 1]]);
        let b = vec![f.one()];
        let mut expected = Vec::new();
        for x0 in 0..2i64 {
            for x1 in 0..2i64 {
                if (x0 + x1) % 2 == 1 {
                    expected.push(vec![f.from_i64(x0), f.from_i64(x1)]);
                }
            }
        }
        match solve_affine(&a, &b) {
            AffineSolution::Feasible { particular, nullspace } => {
                assert_eq!(particular, vec![f.one(), f.zero()]);
                assert_eq!(nullspace, vec![vec![f.one(), f.one()]]);
                assert!(expected.contains(&particular));
                assert_eq!(expected.len(), 2);
            }
            _ => panic!("expected feasible"),
        }
    }

    #[test]
    fn kron_of_identities() {
        let a = LinMap::identity(q(), 2);
        let b = LinMap::identity(q(), 3);
        assert_eq!(a.kron(&b), LinMap::identity(q(), 6));
    }

    #[test]
    fn direct_sum_with_empty() {
        let f = LinMap::from_rows_i64(q(), &[vec![1, 2], vec![3, 4]]);
        let empty = LinMap::zero(q(), 0, 0);
        assert_eq!(f.direct_sum(&empty), f);
    }

    #[test]
    fn braid_is_involutive() {
        let b23 = LinMap::braid(q(), 2, 3);
        let b32 = LinMap::braid(q(), 3, 2);
        assert_eq!(b32.mul(&b23), LinMap::identity(q(), 6));
    }

    #[test]
    fn quotient_canonical_and_repeatable() {
        let rels = vec![
            vec![q().from_i64(1), q().from_i64(-1), q().zero()],
            vec![q().from_i64(2), q().from_i64(-2), q().zero()],
        ];
        let a = canonical_quotient(q(), 3, &rels);
        let b = canonical_quotient(q(), 3, &rels);
        assert_eq!(a.dim, 2);
        assert_eq!(a.proj, b.proj);
        assert_eq!(a.proj.mul(&a.section), LinMap::identity(q(), 2));
        // reordered generators span the same row space -> identical quotient
        let rels2 = vec![rels[1].clone(), rels[0].clone()];
        let c = canonical_quotient(q(), 3, &rels2);
        assert_eq!(a.proj, c.proj);
    }

    #[test]
    fn rank_nullity() {
        let a = LinMap::from_rows_i64(q(), &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(a.rank(), 1);
        assert_eq!(a.nullspace_basis().len(), 2);
    }
}
