//! Sparse Gaussian Markov random field representation of Matérn fields.
//!
//! A smoothness-1 Matérn field on the mesh is approximated by the finite
//! element discretization of the governing SPDE; the result is a sparse
//! precision matrix Q = tau^2 (kappa^4 C + 2 kappa^2 G + G C^{-1} G) built
//! from the lumped mass matrix C and the stiffness matrix G.

use sprs::CsMat;
use thiserror::Error;

use crate::geom::signed_area2;
use crate::mesh::Mesh;
use crate::sparse::{diag_csr, scale};

#[derive(Debug, Error)]
pub enum SpdeError {
    #[error("triangle {0} is degenerate (area {1:.3e})")]
    DegenerateTriangle(usize, f64),
    #[error("invalid Matérn parameters: {0}")]
    InvalidParams(String),
}

/// Matérn parameters in the (range, marginal standard deviation)
/// parameterization, smoothness fixed at 1 on a 2-D domain. The range is the
/// distance at which correlation drops to about 0.13.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaternParams {
    pub range: f64,
    pub sd: f64,
}

impl MaternParams {
    pub fn new(range: f64, sd: f64) -> Result<Self, SpdeError> {
        if !(range > 0.0) || !(sd > 0.0) {
            return Err(SpdeError::InvalidParams(format!(
                "range {range} and sd {sd} must be positive"
            )));
        }
        Ok(MaternParams { range, sd })
    }

    /// kappa = sqrt(8 nu) / range with nu = 1.
    pub fn kappa(&self) -> f64 {
        (8.0f64).sqrt() / self.range
    }

    /// tau from the nu = 1, d = 2 marginal-variance identity
    /// sigma^2 = 1 / (4 pi kappa^2 tau^2).
    pub fn tau(&self) -> f64 {
        1.0 / ((4.0 * std::f64::consts::PI).sqrt() * self.kappa() * self.sd)
    }
}

/// Lumped mass matrix diagonal and stiffness matrix of the mesh.
#[derive(Debug, Clone)]
pub struct FemMatrices {
    pub c_diag: Vec<f64>,
    pub g: CsMat<f64>,
}

impl FemMatrices {
    pub fn n(&self) -> usize {
        self.c_diag.len()
    }
}

/// Assembles the piecewise-linear FEM matrices over all mesh triangles.
pub fn fem_matrices(mesh: &Mesh) -> Result<FemMatrices, SpdeError> {
    let n = mesh.n_vertices();
    let mut c_diag = vec![0.0; n];
    let mut g_tri = sprs::TriMat::new((n, n));
    for (ti, t) in mesh.triangles().iter().enumerate() {
        let p = t.map(|v| mesh.vertices()[v]);
        let area2 = signed_area2(p[0], p[1], p[2]);
        if area2 <= 1e-300 {
            return Err(SpdeError::DegenerateTriangle(ti, 0.5 * area2));
        }
        let area = 0.5 * area2;
        for k in 0..3 {
            c_diag[t[k]] += area / 3.0;
        }
        // gradients of the barycentric basis functions
        let grads: Vec<(f64, f64)> = (0..3)
            .map(|k| {
                let a = p[(k + 1) % 3];
                let b = p[(k + 2) % 3];
                ((a.y - b.y) / area2, (b.x - a.x) / area2)
            })
            .collect();
        for a in 0..3 {
            for b in 0..3 {
                let v = area * (grads[a].0 * grads[b].0 + grads[a].1 * grads[b].1);
                g_tri.add_triplet(t[a], t[b], v);
            }
        }
    }
    Ok(FemMatrices {
        c_diag,
        g: g_tri.to_csr(),
    })
}

/// Sparse precision matrix of the Matérn field on the mesh vertices.
pub fn matern_precision(fem: &FemMatrices, params: &MaternParams) -> Result<CsMat<f64>, SpdeError> {
    let kappa = params.kappa();
    let tau = params.tau();
    if !(kappa > 0.0) || !(tau > 0.0) {
        return Err(SpdeError::InvalidParams(format!(
            "kappa {kappa} and tau {tau} must be positive"
        )));
    }
    let k2 = kappa * kappa;
    let inv_c: Vec<f64> = fem.c_diag.iter().map(|c| 1.0 / c).collect();
    let g_cinv_g = {
        let gc = {
            let mut gc = fem.g.clone();
            gc
        };
        let mut gc = gc;
        for (_, mut row) in gc.outer_iterator_mut().enumerate() {
            for (col, v) in row.iter_mut() {
                *v *= inv_c[col];
            }
        }
        &gc * &fem.g
    };
    let c_term = diag_csr(&fem.c_diag.iter().map(|c| c * k2 * k2).collect::<Vec<_>>());
    let q = &(&c_term + &scale(&fem.g, 2.0 * k2)) + &g_cinv_g;
    Ok(scale(&q, tau * tau))
}

/// Log density of the penalized-complexity prior on (range, sd):
/// pi(range, sd) = lambda_r lambda_s range^{-2} exp(-lambda_r / range
/// - lambda_s sd), calibrated so P(range < range0) = alpha_r and
/// P(sd > sd0) = alpha_s.
pub fn pc_prior_logdensity(
    params: &MaternParams,
    range0: f64,
    alpha_r: f64,
    sd0: f64,
    alpha_s: f64,
) -> f64 {
    assert!(range0 > 0.0 && sd0 > 0.0);
    assert!(alpha_r > 0.0 && alpha_r < 1.0 && alpha_s > 0.0 && alpha_s < 1.0);
    let lambda_r = -alpha_r.ln() * range0;
    let lambda_s = -alpha_s.ln() / sd0;
    lambda_r.ln() + lambda_s.ln() - 2.0 * params.range.ln() - lambda_r / params.range
        - lambda_s * params.sd
}
