use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

const PROFILES: &str = include_str!("../profiles.toml");

/// Bounds for every verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub jones_n_max: u32,
    pub jones_cases: usize,
    pub gauss_r_max: u64,
    pub gauss_b_max: i64,
    pub lemma_bs: Vec<i64>,
    pub lemma_rs: Vec<u64>,
    pub lemma_samples: usize,
    pub closed_form_k_max: u32,
    pub qbk_bs: Vec<i64>,
    pub qbk_k_max: u32,
    pub qbk_r_max: u64,
    pub integrality_k: u32,
    pub unify_k: usize,
    pub unify_r_max: u64,
    pub taylor_depth: usize,
    pub ohtsuki_n_max: usize,
    pub ohtsuki_primes: Vec<u64>,
    pub andrews_n_max: u32,
    pub andrews_k_max: usize,
    pub rr_order: usize,
    pub cyclo_max: u64,
    pub kirby_r_max: u64,
}

impl Profile {
    pub fn quick() -> Self {
        Self::named("quick")
    }

    pub fn full() -> Self {
        Self::named("full")
    }

    fn named(name: &str) -> Self {
        let mut all: BTreeMap<String, Profile> = toml::from_str(PROFILES).expect("profiles.toml is valid");
        all.remove(name).expect("profile present")
    }
}
