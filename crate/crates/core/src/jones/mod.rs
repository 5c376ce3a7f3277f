//! Colored Jones invariants of framed braid closures and Habiro's cyclotomic expansion.
//!
//! The state sum runs over tensor products of the `n`-dimensional modules of
//! quantum `sl2` with an R-matrix whose entries lie in `Z[v^{+-1}]`. Closed
//! strands are traced against `K`, and the result is corrected from the braid's
//! self-writhe to the declared framing, so that the 0-framed unknot gives `[n]`
//! and each unit of framing contributes `q^{(n^2-1)/4}`.

mod expansion;
mod ring;
mod state;

use alloc::vec::Vec;

pub use expansion::{cyclotomic_coeffs, verify_habiro_integrality, CycExpansion, IntegrityReport};
pub use ring::{BigPoly, RootScalars, Scalars, SmallPoly};
pub use state::{invariant, RMatrix, DEFAULT_CAPACITY};

use crate::cyclo::{CycNumber, RootSpec};
use crate::links::FramedLink;
use crate::qcalc::LaurentPoly;
use crate::{Error, Result};

/// A framed link with a color (module dimension) on every component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredLink {
    pub link: FramedLink,
    pub colors: Vec<u32>,
}

impl ColoredLink {
    pub fn new(link: FramedLink, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != link.num_components() {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} colors for {} components",
                colors.len(),
                link.num_components()
            )));
        }
        if colors.contains(&0) {
            return Err(Error::InvalidArgument("colors must be positive".into()));
        }
        Ok(Self { link, colors })
    }
}

/// `J_L(n_1, ..., n_m)` as a Laurent polynomial in `v = q^{1/4}`.
pub fn colored_jones(l: &ColoredLink) -> Result<LaurentPoly> {
    colored_jones_bounded(l, DEFAULT_CAPACITY)
}

pub fn colored_jones_bounded(l: &ColoredLink, bound: u128) -> Result<LaurentPoly> {
    match invariant(&SmallPoly, &l.link, &l.colors, bound) {
        Ok(p) => Ok(p.to_laurent_in_v()),
        Err(Error::Overflow(_)) => invariant(&BigPoly, &l.link, &l.colors, bound),
        Err(e) => Err(e),
    }
}

/// `J_L` evaluated at a root of unity, with `v` placed by [`RootSpec::v_image`].
///
/// For even order the value lies in `Q(zeta_{4m})`.
pub fn colored_jones_at(l: &ColoredLink, xi: RootSpec, bound: u128) -> Result<CycNumber> {
    let (order, t) = xi.v_image();
    let sc = RootScalars::new(order, t);
    Ok(CycNumber::from_cyc_int(&invariant(&sc, &l.link, &l.colors, bound)?))
}

#[cfg(test)]
mod tests;
