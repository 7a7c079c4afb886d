//! Joint geostatistical modelling of an environmental observation process
//! and the site-selection process of its monitoring network.
//!
//! The crate fits a shared-latent-effect model in which the annual Bernoulli
//! record of which sites operate may depend, through scaling parameters, on
//! the same Gaussian fields that drive the observations. Fitting is
//! empirical Bayes: an inner Newton solver finds the latent mode under
//! sum-to-zero constraints, a Laplace approximation scores hyperparameters,
//! and a derivative-free optimizer searches the hyperparameter space.
//! Posterior functionals (field maps, population-weighted exposure,
//! exceedance probabilities) are Monte Carlo summaries over constrained
//! Gaussian draws at the optimum.

pub mod geom;
pub mod matern;
pub mod mesh;
pub mod sparse;
pub mod spde;
