//! Truncated power series in `q` over an exact coefficient ring, and the
//! product, theta and Lambert building blocks.

mod products;
mod series;

pub use products::{
    eta, jacprod, lambert_sum, poch_finite, poch_infinite, poch_infinite_inverse, theta_jtp, theta_product, LambertSum,
    QMonomial, Quadratic, ThetaForm, ZArg,
};
pub use series::{CycSeries, IntSeries, QSeries};
