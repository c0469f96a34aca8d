//! Exact rational linear algebra: dense matrices with reduced row echelon
//! form, solving, nullspaces, and characteristic/minimal polynomials, plus
//! an incremental sparse echelon over the integers used by the spanning
//! certificates (clearing denominators keeps the elimination cheap).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Dense matrix over Q, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Scalar> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = QMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += t;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self[(i, j)].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).map(|i| self[(i, i)].clone()).sum()
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let v = &self[(r, j)] * &inv;
                self[(r, j)] = v;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let factor = self[(i, c)].clone();
                    for j in c..self.cols {
                        let v = &self[(i, j)] - &factor * &self[(r, j)];
                        self[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solve `self * x = b`. Returns `None` when inconsistent. When the
    /// system is underdetermined the free variables are set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.rows, b.len());
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse, or `None` if singular.
    pub fn inverse(&self) -> Option<QMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = QMatrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = QMatrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = aug[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Basis of the right nullspace, one vector per row of the result.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -m[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Characteristic polynomial coefficients `[c_0, ..., c_n]` with
    /// `p(t) = c_0 + c_1 t + ... + c_n t^n`, `c_n = 1` (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut mk = QMatrix::identity(n);
        for k in 1..=n {
            let am = self.mul(&mk);
            let c = -am.trace() / Scalar::from_integer(BigInt::from(k as i64));
            coeffs[n - k] = c.clone();
            if k < n {
                mk = am;
                for i in 0..n {
                    let v = &mk[(i, i)] + &c;
                    mk[(i, i)] = v;
                }
            }
        }
        coeffs
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

/// Minimal polynomial of a square matrix, monic, as `[c_0, ..., c_m]`.
pub fn min_poly(a: &QMatrix) -> Vec<Scalar> {
    assert_eq!(a.rows, a.cols);
    let n = a.rows;
    // Stack flattened powers I, A, A^2, ... until linearly dependent.
    let mut ech = EchelonQ::new(n * n);
    let mut power = QMatrix::identity(n);
    let mut history: Vec<Vec<Scalar>> = Vec::new();
    loop {
        let flat: Vec<Scalar> = power.data.clone();
        match ech.insert_with_combo(&flat) {
            InsertOutcome::Independent => {
                history.push(flat);
                power = a.mul(&power);
            }
            InsertOutcome::Dependent(combo) => {
                // flat = sum combo_i * history_i, so the minimal polynomial is
                // t^m - sum combo_i t^i.
                let m = history.len();
                let mut coeffs = vec![Scalar::zero(); m + 1];
                coeffs[m] = Scalar::one();
                for (i, c) in combo.into_iter().enumerate() {
                    coeffs[i] = -c;
                }
                return coeffs;
            }
        }
    }
}

/// Evaluate a polynomial (coefficients low to high) at a matrix.
pub fn poly_at_matrix(coeffs: &[Scalar], a: &QMatrix) -> QMatrix {
    let n = a.rows;
    let mut acc = QMatrix::zero(n, n);
    for c in coeffs.iter().rev() {
        acc = a.mul(&acc);
        for i in 0..n {
            let v = &acc[(i, i)] + c;
            acc[(i, i)] = v;
        }
    }
    acc
}

/// Outcome of inserting a row into an echelon that tracks combinations.
pub enum InsertOutcome {
    Independent,
    /// Coefficients expressing the inserted row over the previously
    /// inserted independent rows, in insertion order.
    Dependent(Vec<Scalar>),
}

/// Incremental row echelon over Q with history tracking: each stored row
/// remembers how it was formed from the inserted rows. Supports exact
/// membership tests with certificates.
pub struct EchelonQ {
    width: usize,
    /// (pivot column, row, combination over inserted independent rows)
    rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)>,
    inserted: usize,
}

impl EchelonQ {
    pub fn new(width: usize) -> Self {
        EchelonQ {
            width,
            rows: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    fn reduce(&self, row: &mut [Scalar], combo: &mut [Scalar]) {
        for (pivot, base, base_combo) in &self.rows {
            if !row[*pivot].is_zero() {
                let factor = row[*pivot].clone();
                for j in *pivot..self.width {
                    if !base[j].is_zero() {
                        let v = &row[j] - &factor * &base[j];
                        row[j] = v;
                    }
                }
                for (c, bc) in combo.iter_mut().zip(base_combo.iter()) {
                    if !bc.is_zero() {
                        *c -= &factor * bc;
                    }
                }
            }
        }
    }

    /// Insert a row; report whether it was independent, and if not, the
    /// combination of earlier independent rows it equals.
    pub fn insert_with_combo(&mut self, row: &[Scalar]) -> InsertOutcome {
        assert_eq!(row.len(), self.width);
        let mut r = row.to_vec();
        let mut combo = vec![Scalar::zero(); self.inserted + 1];
        combo[self.inserted] = Scalar::one();
        self.reduce(&mut r, &mut combo);
        match r.iter().position(|x| !x.is_zero()) {
            None => {
                // row = -sum_{i<inserted} combo_i * inserted_i
                let deps = combo[..self.inserted]
                    .iter()
                    .map(|c| -c.clone())
                    .collect();
                InsertOutcome::Dependent(deps)
            }
            Some(pivot) => {
                let inv = r[pivot].recip();
                for x in r.iter_mut() {
                    *x = &*x * &inv;
                }
                for c in combo.iter_mut() {
                    *c = &*c * &inv;
                }
                self.inserted += 1;
                for (_, _, bc) in self.rows.iter_mut() {
                    bc.push(Scalar::zero());
                }
                combo.resize(self.inserted, Scalar::zero());
                self.rows.push((pivot, r, combo));
                self.rows.sort_by_key(|(p, _, _)| *p);
                InsertOutcome::Independent
            }
        }
    }

    /// True if the row lies in the current span.
    pub fn contains(&self, row: &[Scalar]) -> bool {
        self.membership(row).is_some()
    }

    /// If `row` is in the span, return its combination over the inserted
    /// independent rows (in insertion order).
    pub fn membership(&self, row: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(row.len(), self.width);
        let mut r = row.to_vec();
        let mut combo = vec![Scalar::zero(); self.inserted];
        for (pivot, base, base_combo) in &self.rows {
            if !r[*pivot].is_zero() {
                let factor = r[*pivot].clone();
                for j in *pivot..self.width {
                    if !base[j].is_zero() {
                        let v = &r[j] - &factor * &base[j];
                        r[j] = v;
                    }
                }
                for (c, bc) in combo.iter_mut().zip(base_combo.iter()) {
                    *c += &factor * bc;
                }
            }
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(combo)
        } else {
            None
        }
    }
}

/// Sparse integer row: strictly increasing column indices.
pub type IntRow = Vec<(usize, BigInt)>;

/// Incremental echelon over Z for rank and membership computations on
/// larger sparse systems. Rows are kept primitive (content divided out);
/// elimination is fraction free.
#[derive(Clone)]
pub struct IntEchelon {
    /// Sorted by pivot column.
    rows: Vec<IntRow>,
}

impl Default for IntEchelon {
    fn default() -> Self {
        Self::new()
    }
}

impl IntEchelon {
    pub fn new() -> Self {
        IntEchelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn normalize(row: &mut IntRow) {
        row.retain(|(_, v)| !v.is_zero());
        if row.is_empty() {
            return;
        }
        let mut g = BigInt::zero();
        for (_, v) in row.iter() {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        let negate = row[0].1.is_negative();
        if g.is_one() && !negate {
            return;
        }
        if negate {
            g = -g;
        }
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }

    /// a*row - b*other, merged.
    fn combine(row: &IntRow, a: &BigInt, other: &IntRow, b: &BigInt) -> IntRow {
        let mut out = Vec::with_capacity(row.len() + other.len());
        let mut i = 0;
        let mut j = 0;
        while i < row.len() || j < other.len() {
            if j == other.len() || (i < row.len() && row[i].0 < other[j].0) {
                out.push((row[i].0, a * &row[i].1));
                i += 1;
            } else if i == row.len() || other[j].0 < row[i].0 {
                out.push((other[j].0, -(b * &other[j].1)));
                j += 1;
            } else {
                let v = a * &row[i].1 - b * &other[j].1;
                if !v.is_zero() {
                    out.push((row[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    fn reduce(&self, row: &mut IntRow) {
        let mut idx = 0;
        while idx < self.rows.len() {
            let Some((pivot, lead)) = row.first().map(|(c, v)| (*c, v.clone())) else {
                return;
            };
            // rows are sorted by pivot; skip past rows with smaller pivots
            let base = &self.rows[idx];
            let bp = base[0].0;
            if bp < pivot {
                idx += 1;
                continue;
            }
            if bp > pivot {
                return;
            }
            let bl = base[0].1.clone();
            let g = lead.gcd(&bl);
            *row = Self::combine(row, &(&bl / &g), base, &(&lead / &g));
            Self::normalize(row);
            idx += 1;
        }
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, mut row: IntRow) -> bool {
        Self::normalize(&mut row);
        self.reduce(&mut row);
        if row.is_empty() {
            return false;
        }
        let pivot = row[0].0;
        let pos = self
            .rows
            .binary_search_by_key(&pivot, |r| r[0].0)
            .unwrap_err();
        self.rows.insert(pos, row);
        true
    }

    /// True when the row lies in the current span.
    pub fn contains(&self, row: &IntRow) -> bool {
        let mut r = row.clone();
        Self::normalize(&mut r);
        self.reduce(&mut r);
        r.is_empty()
    }
}

/// Clear denominators of a sparse rational row, producing a primitive
/// integer row.
pub fn clear_denominators(row: &[(usize, Scalar)]) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, v) in row {
        lcm = lcm.lcm(v.denom());
    }
    row.iter()
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect()
}
