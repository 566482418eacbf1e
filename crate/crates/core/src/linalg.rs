//! Dense coordinate vectors, the anti-diagonal pairing of the index grid,
//! and the classical `l_p` norms used as building blocks.

use crate::{Error, Result};

/// A finite real coordinate vector. All entries are finite by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordVector {
    coords: Vec<f64>,
}

impl CoordVector {
    /// Wraps a coordinate list, rejecting NaN and infinities.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        for (index, c) in coords.iter().enumerate() {
            if !c.is_finite() {
                return Err(Error::NonFiniteEntry { index });
            }
        }
        Ok(Self { coords })
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            coords: vec![0.0; dim],
        }
    }

    /// The canonical basis vector `e_i` (0-based index).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut coords = vec![0.0; dim];
        coords[i] = 1.0;
        Self { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> f64 {
        self.coords[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.coords.iter()
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            coords: self.coords.iter().map(|a| a * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    /// Index of the first coordinate of maximal absolute value.
    pub fn argmax_abs(&self) -> usize {
        let mut best = 0;
        let mut best_val = f64::NEG_INFINITY;
        for (i, &c) in self.coords.iter().enumerate() {
            if c.abs() > best_val {
                best_val = c.abs();
                best = i;
            }
        }
        best
    }
}

impl From<CoordVector> for Vec<f64> {
    fn from(v: CoordVector) -> Self {
        v.coords
    }
}

/// A grid position `(n, m)`, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridIndex {
    pub n: usize,
    pub m: usize,
}

impl GridIndex {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidGridIndex);
        }
        Ok(Self { n, m })
    }
}

/// Anti-diagonal (Cantor-style) bijection of the grid onto `{1, 2, ...}`:
/// `sigma(n, m) = (n+m-2)(n+m-1)/2 + n`.
///
/// The enumeration walks anti-diagonals `n + m = const`, so the image decays
/// compatibly with the dyadic weights used elsewhere.
pub fn pair_index(idx: GridIndex) -> usize {
    let s = idx.n + idx.m;
    (s - 2) * (s - 1) / 2 + idx.n
}

/// Supported classical exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpExponent {
    One,
    Two,
    Inf,
}

/// The exact `l_p` norm of the coordinates, `p` in `{1, 2, inf}`.
pub fn lp_norm(x: &CoordVector, p: LpExponent) -> f64 {
    match p {
        LpExponent::One => x.iter().map(|c| c.abs()).sum(),
        LpExponent::Two => x.iter().map(|c| c * c).sum::<f64>().sqrt(),
        LpExponent::Inf => x.iter().fold(0.0, |acc, c| acc.max(c.abs())),
    }
}

/// Row-major dense matrix helpers for the small systems that come up when
/// handling subspaces (rank checks, nullspaces, least squares). Dimensions
/// stay in the dozens, so plain Gaussian elimination with partial pivoting
/// is adequate.
#[derive(Debug, Clone)]
pub struct DenseMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_rows(vectors: &[CoordVector]) -> Self {
        let rows = vectors.len();
        let cols = vectors.first().map_or(0, |v| v.dim());
        let mut m = Self::zeros(rows, cols);
        for (i, v) in vectors.iter().enumerate() {
            for j in 0..cols {
                m.set(i, j, v.get(j));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.cols + j] = v;
    }

    /// Numerical rank via row echelon with partial pivoting.
    pub fn rank(&self, tol: f64) -> usize {
        let mut a = self.clone();
        let scale = a.data.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if scale == 0.0 {
            return 0;
        }
        let threshold = tol * scale;
        let mut rank = 0;
        let mut row = 0;
        for col in 0..a.cols {
            // pivot search
            let mut pivot = row;
            for r in row..a.rows {
                if a.get(r, col).abs() > a.get(pivot, col).abs() {
                    pivot = r;
                }
            }
            if row >= a.rows || a.get(pivot, col).abs() <= threshold {
                continue;
            }
            if pivot != row {
                for j in 0..a.cols {
                    let tmp = a.get(row, j);
                    a.set(row, j, a.get(pivot, j));
                    a.set(pivot, j, tmp);
                }
            }
            for r in (row + 1)..a.rows {
                let factor = a.get(r, col) / a.get(row, col);
                for j in col..a.cols {
                    let v = a.get(r, j) - factor * a.get(row, j);
                    a.set(r, j, v);
                }
            }
            rank += 1;
            row += 1;
            if row == a.rows {
                break;
            }
        }
        rank
    }

    /// Orthonormal basis of the nullspace `{ v : A v = 0 }`, computed by
    /// Gram-Schmidt on the free-variable solutions of the echelon form.
    pub fn nullspace(&self, tol: f64) -> Vec<CoordVector> {
        let mut a = self.clone();
        let scale = a.data.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let threshold = if scale == 0.0 { tol } else { tol * scale };
        let mut pivots: Vec<(usize, usize)> = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            let mut pivot = row;
            for r in row..a.rows {
                if a.get(r, col).abs() > a.get(pivot, col).abs() {
                    pivot = r;
                }
            }
            if row >= a.rows || a.get(pivot, col).abs() <= threshold {
                continue;
            }
            if pivot != row {
                for j in 0..a.cols {
                    let tmp = a.get(row, j);
                    a.set(row, j, a.get(pivot, j));
                    a.set(pivot, j, tmp);
                }
            }
            let lead = a.get(row, col);
            for j in 0..a.cols {
                a.set(row, j, a.get(row, j) / lead);
            }
            for r in 0..a.rows {
                if r != row {
                    let factor = a.get(r, col);
                    if factor != 0.0 {
                        for j in 0..a.cols {
                            let v = a.get(r, j) - factor * a.get(row, j);
                            a.set(r, j, v);
                        }
                    }
                }
            }
            pivots.push((row, col));
            row += 1;
            if row == a.rows {
                break;
            }
        }
        let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0.0; self.cols];
            v[free] = 1.0;
            for &(r, c) in &pivots {
                v[c] = -a.get(r, free);
            }
            basis.push(v);
        }
        // Gram-Schmidt for a well-conditioned basis.
        let mut ortho: Vec<Vec<f64>> = Vec::new();
        for mut v in basis {
            for u in &ortho {
                let proj: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
                for (vi, ui) in v.iter_mut().zip(u) {
                    *vi -= proj * ui;
                }
            }
            let norm: f64 = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            if norm > threshold {
                for vi in v.iter_mut() {
                    *vi /= norm;
                }
                ortho.push(v);
            }
        }
        ortho
            .into_iter()
            .map(|v| CoordVector { coords: v })
            .collect()
    }

    /// Least-squares solution of `A c = b` via normal equations (adequate at
    /// these sizes and conditioning). Returns the coefficient vector.
    pub fn least_squares(&self, b: &[f64]) -> Vec<f64> {
        let k = self.cols;
        let mut ata = vec![0.0; k * k];
        let mut atb = vec![0.0; k];
        for i in 0..k {
            for j in 0..k {
                let mut s = 0.0;
                for r in 0..self.rows {
                    s += self.get(r, i) * self.get(r, j);
                }
                ata[i * k + j] = s;
            }
            let mut s = 0.0;
            for r in 0..self.rows {
                s += self.get(r, i) * b[r];
            }
            atb[i] = s;
        }
        solve_dense(&mut ata, &mut atb, k);
        atb
    }
}

/// In-place Gaussian elimination on a `k x k` system, solution left in `b`.
fn solve_dense(a: &mut [f64], b: &mut [f64], k: usize) {
    for col in 0..k {
        let mut pivot = col;
        for r in col..k {
            if a[r * k + col].abs() > a[pivot * k + col].abs() {
                pivot = r;
            }
        }
        if a[pivot * k + col].abs() < 1e-300 {
            continue; // singular direction; leave component as-is
        }
        if pivot != col {
            for j in 0..k {
                a.swap(col * k + j, pivot * k + j);
            }
            b.swap(col, pivot);
        }
        for r in (col + 1)..k {
            let f = a[r * k + col] / a[col * k + col];
            for j in col..k {
                a[r * k + j] -= f * a[col * k + j];
            }
            b[r] -= f * b[col];
        }
    }
    for col in (0..k).rev() {
        if a[col * k + col].abs() < 1e-300 {
            b[col] = 0.0;
            continue;
        }
        let mut s = b[col];
        for j in (col + 1)..k {
            s -= a[col * k + j] * b[j];
        }
        b[col] = s / a[col * k + col];
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn pair_index_first_antidiagonals() {
        assert_eq!(pair_index(GridIndex::new(1, 1).unwrap()), 1);
        assert_eq!(pair_index(GridIndex::new(1, 2).unwrap()), 2);
        assert_eq!(pair_index(GridIndex::new(2, 1).unwrap()), 3);
    }

    #[test]
    fn pair_index_bijective_on_prefix() {
        // Exhaustive: sigma restricted to n+m <= 30 hits 1..=K injectively
        // and the first anti-diagonals surjectively.
        let mut seen = std::collections::BTreeSet::new();
        for n in 1..=29usize {
            for m in 1..=29usize {
                if n + m <= 30 {
                    let s = pair_index(GridIndex::new(n, m).unwrap());
                    assert!(seen.insert(s), "collision at ({n},{m})");
                }
            }
        }
        let count = seen.len();
        let expect: Vec<usize> = (1..=count).collect();
        let got: Vec<usize> = seen.into_iter().collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn grid_index_rejects_zero() {
        assert!(GridIndex::new(0, 1).is_err());
        assert!(GridIndex::new(1, 0).is_err());
    }

    #[test]
    fn lp_norm_hand_values() {
        let x = CoordVector::new(vec![3.0, 4.0]).unwrap();
        assert_eq!(lp_norm(&x, LpExponent::Two), 5.0);
        let y = CoordVector::new(vec![1.0, -1.0, 1.0]).unwrap();
        assert_eq!(lp_norm(&y, LpExponent::One), 3.0);
        let z = CoordVector::new(vec![1.0, -2.0]).unwrap();
        assert_eq!(lp_norm(&z, LpExponent::Inf), 2.0);
    }

    #[test]
    fn coord_vector_rejects_non_finite() {
        assert!(CoordVector::new(vec![1.0, f64::NAN]).is_err());
        assert!(CoordVector::new(vec![f64::INFINITY]).is_err());
    }

    #[test]
    fn lp_norm_homogeneity_and_triangle_seeded() {
        use rand::Rng;
        let mut rng = crate::rng::stream(99, 1);
        for p in [LpExponent::One, LpExponent::Two, LpExponent::Inf] {
            for _ in 0..1000 {
                let d = rng.gen_range(1..6);
                let x = CoordVector::new(
                    (0..d).map(|_| rng.gen_range(-3.0..3.0)).collect(),
                )
                .unwrap();
                let y = CoordVector::new(
                    (0..d).map(|_| rng.gen_range(-3.0..3.0)).collect(),
                )
                .unwrap();
                let c: f64 = rng.gen_range(0.0..5.0);
                let hom = (lp_norm(&x.scale(c), p) - c * lp_norm(&x, p)).abs();
                assert!(hom <= 1e-12 * (1.0 + lp_norm(&x, p)));
                let tri = lp_norm(&x.add(&y), p) - lp_norm(&x, p) - lp_norm(&y, p);
                assert!(tri <= 1e-12);
            }
        }
    }

    #[test]
    fn nullspace_of_two_annihilators() {
        // rows e3*, e4* in R^4 -> nullspace spans e1, e2
        let rows = vec![CoordVector::basis(4, 2), CoordVector::basis(4, 3)];
        let m = DenseMatrix::from_rows(&rows);
        assert_eq!(m.rank(1e-10), 2);
        let ns = m.nullspace(1e-10);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(v.get(2).abs() < 1e-12 && v.get(3).abs() < 1e-12);
        }
    }

    proptest! {
        #[test]
        fn lp_norms_scale_homogeneously(
            coords in proptest::collection::vec(-10.0f64..10.0, 1..8),
            c in 0.0f64..4.0,
        ) {
            let x = CoordVector::new(coords).unwrap();
            for p in [LpExponent::One, LpExponent::Two, LpExponent::Inf] {
                let lhs = lp_norm(&x.scale(c), p);
                let rhs = c * lp_norm(&x, p);
                prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()));
            }
        }
    }
}
