//! Complex special functions: log-Gamma, Γ-ratios and the Gauss
//! hypergeometric function on the real segment [0, 1).

mod gamma;
mod hyp2f1;

pub use gamma::{
    gamma, gamma_ratio, is_gamma_pole, ln_gamma_ratio, lngamma, pochhammer, recip_gamma, sin_pi,
    POLE_TOLERANCE,
};
pub use hyp2f1::{
    connect_near_one, hyp2f1, hyp2f1_series, Hyp2F1Params, MAX_SERIES_TERMS, Z_SWITCH,
};

pub(crate) use hyp2f1::hyp2f1_split;
