//! Thin wrappers over `sprs` used by the assembly and inference code:
//! deterministic LDL^T factorization with fill-reducing ordering,
//! log-determinants, constrained solves, and a few matrix helpers.

use sprs::linalg::ordering::reverse_cuthill_mckee;
use sprs::{CsMat, PermOwned, TriMat};
use sprs_ldl::LdlNumeric;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SparseError {
    #[error("matrix is not positive definite (pivot {pivot} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },
    #[error("factorization failed: {0}")]
    Factorization(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub fn diag_csr(d: &[f64]) -> CsMat<f64> {
    let n = d.len();
    let mut t = TriMat::new((n, n));
    for (i, &v) in d.iter().enumerate() {
        t.add_triplet(i, i, v);
    }
    t.to_csr()
}

pub fn scale(m: &CsMat<f64>, s: f64) -> CsMat<f64> {
    m.map(|v| v * s)
}

/// Dense matrix-vector product `m * x` for CSR input.
pub fn mat_vec(m: &CsMat<f64>, x: &[f64]) -> Vec<f64> {
    assert_eq!(m.cols(), x.len());
    let mut out = vec![0.0; m.rows()];
    for (row, vec) in m.outer_iterator().enumerate() {
        let mut acc = 0.0;
        for (col, &v) in vec.iter() {
            acc += v * x[col];
        }
        out[row] = acc;
    }
    out
}

/// `m^T * x` without materializing the transpose.
pub fn mat_t_vec(m: &CsMat<f64>, x: &[f64]) -> Vec<f64> {
    assert_eq!(m.rows(), x.len());
    let mut out = vec![0.0; m.cols()];
    for (row, vec) in m.outer_iterator().enumerate() {
        let xr = x[row];
        if xr != 0.0 {
            for (col, &v) in vec.iter() {
                out[col] += v * xr;
            }
        }
    }
    out
}

/// `a^T * diag(w) * a` for CSR `a`; the workhorse behind likelihood
/// curvature blocks.
pub fn at_diag_a(a: &CsMat<f64>, w: &[f64]) -> CsMat<f64> {
    assert_eq!(a.rows(), w.len());
    let mut scaled = a.clone();
    for (row, mut vec) in scaled.outer_iterator_mut().enumerate() {
        for (_, v) in vec.iter_mut() {
            *v *= w[row];
        }
    }
    &a.transpose_view().to_csr() * &scaled
}

/// Sparse LDL^T factorization of a symmetric positive definite matrix with
/// reverse Cuthill-McKee ordering. The ordering is computed once per
/// sparsity pattern; refactorizations for new values reuse the symbolic
/// analysis.
pub struct SparseChol {
    ldl: LdlNumeric<f64, usize>,
    perm: PermOwned,
    n: usize,
    nnz_pattern: usize,
}

impl SparseChol {
    pub fn factor(mat: &CsMat<f64>) -> Result<Self, SparseError> {
        let n = mat.rows();
        if n != mat.cols() {
            return Err(SparseError::Dimension("matrix not square".into()));
        }
        let perm = reverse_cuthill_mckee(mat.view()).perm;
        let ldl = LdlNumeric::new_perm(mat.view(), perm.owned_clone(), sprs::DontCheckSymmetry)
            .map_err(|e| SparseError::Factorization(format!("{e:?}")))?;
        let chol = SparseChol {
            ldl,
            perm,
            n,
            nnz_pattern: mat.nnz(),
        };
        chol.check_spd()?;
        Ok(chol)
    }

    /// Refactorizes with new values on the same sparsity pattern.
    pub fn refactor(&mut self, mat: &CsMat<f64>) -> Result<(), SparseError> {
        if mat.nnz() != self.nnz_pattern || mat.rows() != self.n {
            *self = SparseChol::factor(mat)?;
            return Ok(());
        }
        self.ldl
            .update(mat.view())
            .map_err(|e| SparseError::Factorization(format!("{e:?}")))?;
        self.check_spd()
    }

    fn check_spd(&self) -> Result<(), SparseError> {
        for (i, &d) in self.ldl.d().iter().enumerate() {
            if !(d > 0.0) {
                return Err(SparseError::NotPositiveDefinite { index: i, pivot: d });
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn log_det(&self) -> f64 {
        self.ldl.d().iter().map(|d| d.ln()).sum()
    }

    pub fn solve(&self, rhs: &[f64]) -> Vec<f64> {
        self.ldl.solve(rhs)
    }

    /// Draws `v` with covariance `A^{-1}` from standard normals `z`:
    /// `v = P^T L^{-T} D^{-1/2} z`.
    pub fn sample_from_standard(&self, z: &[f64]) -> Vec<f64> {
        assert_eq!(z.len(), self.n);
        let mut w: Vec<f64> = z
            .iter()
            .zip(self.ldl.d())
            .map(|(zi, di)| zi / di.sqrt())
            .collect();
        let l = self.ldl.l();
        sprs_ldl::ldl_ltsolve(&l, &mut w[..]);
        let pinv = self.perm.inv();
        (&pinv * &w[..]).to_vec()
    }
}
