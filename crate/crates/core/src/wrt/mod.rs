//! SO(3) and SU(2) WRT invariants of surgery presentations at roots of unity.
//!
//! `F_L(xi)` sums `prod [n_i] J_L(n)` over colors `0 < n_i < 2r` (odd colors only
//! for SO(3)); `tau_M = F_L / (F_{U^{+1}}^{sigma_+} F_{U^{-1}}^{sigma_-})`.
//! Values live in `Q(zeta_r)` for odd `r`, and in `Q(zeta_{4r})` for the SU(2)
//! variant at even `r`.

use alloc::vec::Vec;

use crate::cyclo::{ev_v, CycNumber, RootSpec};
use crate::jones::{colored_jones_at, ColoredLink, DEFAULT_CAPACITY};
use crate::links::{catalog, signature_counts, FramedLink, H1Group, LinkingMatrix};
use crate::qcalc::qint;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    So3,
    Su2,
}

/// A closed 3-manifold given by integral surgery on a framed link in `S^3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Manifold {
    surgery: FramedLink,
    linking: LinkingMatrix,
    /// `(sigma_+, sigma_-, sigma_0)` of the linking matrix.
    signature: (usize, usize, usize),
    h1: H1Group,
}

impl Manifold {
    pub fn new(surgery: FramedLink) -> Self {
        let linking = surgery.linking_matrix();
        let signature = signature_counts(&linking);
        let h1 = linking.h1();
        Self { surgery, linking, signature, h1 }
    }

    /// A catalog manifold: `s3`, `poincare`, `lens(b)`, or any catalog link name.
    pub fn from_catalog(name: &str) -> Result<Self> {
        Ok(Self::new(catalog(name)?))
    }

    pub fn s3() -> Self {
        Self::new(FramedLink::empty())
    }

    pub fn surgery(&self) -> &FramedLink {
        &self.surgery
    }

    pub fn linking_matrix(&self) -> &LinkingMatrix {
        &self.linking
    }

    pub fn signature(&self) -> (usize, usize, usize) {
        self.signature
    }

    pub fn h1(&self) -> &H1Group {
        &self.h1
    }

    pub fn is_rational_homology_sphere(&self) -> bool {
        self.h1.is_finite()
    }

    /// Connected sum, presented by the split union of the surgery links.
    pub fn connected_sum(&self, other: &Self) -> Self {
        Self::new(self.surgery.disjoint_union(&other.surgery))
    }
}

fn check_root(xi: RootSpec, variant: Variant) -> Result<()> {
    if xi.m < 3 {
        return Err(Error::InvalidArgument("root order must be at least 3".into()));
    }
    if variant == Variant::So3 && xi.m.is_multiple_of(2) {
        return Err(Error::InvalidArgument("SO(3) needs an odd root order".into()));
    }
    Ok(())
}

fn colors(r: u64, variant: Variant) -> Vec<u32> {
    let step = if variant == Variant::So3 { 2 } else { 1 };
    (1..2 * r as u32).step_by(step).collect()
}

/// `F_L(xi)` with the default state-space bound.
pub fn f_l(link: &FramedLink, xi: RootSpec, variant: Variant) -> Result<CycNumber> {
    f_l_bounded(link, xi, variant, DEFAULT_CAPACITY)
}

pub fn f_l_bounded(link: &FramedLink, xi: RootSpec, variant: Variant, bound: u128) -> Result<CycNumber> {
    check_root(xi, variant)?;
    let m = link.num_components();
    let range = colors(xi.m, variant);
    let qints: Vec<CycNumber> = range.iter().map(|&n| ev_v(&qint(n as i64), xi)).collect::<Result<_>>()?;
    let mut idx = alloc::vec![0usize; m];
    let mut total = CycNumber::zero(xi.v_image().0);
    loop {
        let cols: Vec<u32> = idx.iter().map(|&i| range[i]).collect();
        let j = colored_jones_at(&ColoredLink::new(link.clone(), cols)?, xi, bound)?;
        total = &total + &idx.iter().fold(j, |acc, &i| &acc * &qints[i]);
        let mut p = m;
        loop {
            if p == 0 {
                return Ok(total);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < range.len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

fn tau_variant(mf: &Manifold, xi: RootSpec, variant: Variant) -> Result<CycNumber> {
    let f = f_l(&mf.surgery, xi, variant)?;
    let (sp, sm, _) = mf.signature;
    let mut den = CycNumber::one(1);
    if sp > 0 {
        den = &den * &f_l(&FramedLink::unknot(1), xi, variant)?.pow(sp as u64);
    }
    if sm > 0 {
        den = &den * &f_l(&FramedLink::unknot(-1), xi, variant)?.pow(sm as u64);
    }
    f.checked_div(&den)
}

/// The SO(3) invariant `tau_M(xi)`, odd order `r >= 3`.
pub fn tau(mf: &Manifold, xi: RootSpec) -> Result<CycNumber> {
    tau_variant(mf, xi, Variant::So3)
}

/// The SU(2) invariant: the same normalization with colors `1 <= n < 2r`.
pub fn tau_su2(mf: &Manifold, xi: RootSpec) -> Result<CycNumber> {
    tau_variant(mf, xi, Variant::Su2)
}

/// `tau_{L(b,1)} = F_{U^b} / F_{U^{sign b}}`.
pub fn tau_lens(b: i64, xi: RootSpec, variant: Variant) -> Result<CycNumber> {
    if b == 0 {
        return Err(Error::NotRationalHomologySphere);
    }
    f_l(&FramedLink::unknot(b), xi, variant)?.checked_div(&f_l(&FramedLink::unknot(b.signum()), xi, variant)?)
}

/// `tau'_M = tau_M / prod_i tau_{L(b_i,1)}` over the prime-power cyclic factors of `H_1`.
pub fn tau_prime(mf: &Manifold, xi: RootSpec) -> Result<CycNumber> {
    if !mf.is_rational_homology_sphere() {
        return Err(Error::NotRationalHomologySphere);
    }
    let mut t = tau(mf, xi)?;
    for b in mf.h1.prime_power_split()? {
        t = t.checked_div(&tau_lens(b as i64, xi, Variant::So3)?)?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests;
