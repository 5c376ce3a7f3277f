//! Framed oriented links presented as braid closures.

mod catalog;
mod matrix;

use alloc::string::String;
use alloc::vec::Vec;

pub use catalog::catalog;
pub use matrix::{signature_counts, H1Group, LinkingMatrix};

use crate::{Error, Result};

/// The closure of a braid on `strands` strands with surgery framings per component.
///
/// Letter `i` is the generator `sigma_i`, `-i` its inverse; `sigma_i` crosses
/// positions `i-1` and `i` (0-based). `strands = 0` with an empty word is the
/// empty link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLink {
    strands: usize,
    word: Vec<i32>,
    framings: Vec<i64>,
    name: Option<String>,
}

impl FramedLink {
    pub fn new(strands: usize, word: Vec<i32>, framings: Vec<i64>) -> Result<Self> {
        for &g in &word {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidLink(alloc::format!("letter {g} on {strands} strands")));
            }
        }
        let link = Self { strands, word, framings, name: None };
        let n = link.components().len();
        if n != link.framings.len() {
            return Err(Error::InvalidLink(alloc::format!(
                "{} framings for {n} components",
                link.framings.len()
            )));
        }
        Ok(link)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// The empty link; surgery on it gives `S^3`.
    pub fn empty() -> Self {
        Self { strands: 0, word: Vec::new(), framings: Vec::new(), name: None }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn num_components(&self) -> usize {
        self.framings.len()
    }

    /// Permutation taking a strand's start position to its end position.
    fn permutation(&self) -> Vec<usize> {
        // at[p] = start position of the strand currently at p
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let i = g.unsigned_abs() as usize;
            at.swap(i - 1, i);
        }
        let mut perm = alloc::vec![0; self.strands];
        for (end, &start) in at.iter().enumerate() {
            perm[start] = end;
        }
        perm
    }

    /// Cycles of the closure permutation, each listed from its smallest position,
    /// ordered by smallest position.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let perm = self.permutation();
        let mut seen = alloc::vec![false; self.strands];
        let mut out = Vec::new();
        for s in 0..self.strands {
            if seen[s] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = perm[p];
            }
            out.push(cycle);
        }
        out
    }

    /// Component index of the strand starting at each position.
    pub fn component_of_position(&self) -> Vec<usize> {
        let mut comp = alloc::vec![0; self.strands];
        for (c, cycle) in self.components().iter().enumerate() {
            for &p in cycle {
                comp[p] = c;
            }
        }
        comp
    }

    /// For each letter, the components of the two strands it crosses.
    pub fn crossing_components(&self) -> Vec<(usize, usize)> {
        let mut at = self.component_of_position();
        self.word
            .iter()
            .map(|&g| {
                let i = g.unsigned_abs() as usize;
                let pair = (at[i - 1], at[i]);
                at.swap(i - 1, i);
                pair
            })
            .collect()
    }

    /// Signed crossing count of each component with itself.
    pub fn self_writhes(&self) -> Vec<i64> {
        let mut w = alloc::vec![0; self.num_components()];
        for (&g, (a, b)) in self.word.iter().zip(self.crossing_components()) {
            if a == b {
                w[a] += g.signum() as i64;
            }
        }
        w
    }

    pub fn linking_matrix(&self) -> LinkingMatrix {
        let n = self.num_components();
        let mut twice = alloc::vec![alloc::vec![0i64; n]; n];
        for (&g, (a, b)) in self.word.iter().zip(self.crossing_components()) {
            if a != b {
                twice[a][b] += g.signum() as i64;
                twice[b][a] += g.signum() as i64;
            }
        }
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.framings[i] } else { twice[i][j] / 2 }).collect())
            .collect();
        LinkingMatrix::from_rows(rows).expect("linking numbers are symmetric")
    }

    pub fn is_algebraically_split(&self) -> bool {
        self.linking_matrix().is_diagonal()
    }

    /// Mirror image: every crossing and framing changes sign.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            word: self.word.iter().map(|g| -g).collect(),
            framings: self.framings.iter().map(|f| -f).collect(),
            name: None,
        }
    }

    /// `self` placed beside `other`; components of `other` come after those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.strands as i32;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|g| g + g.signum() * shift));
        let mut framings = self.framings.clone();
        framings.extend_from_slice(&other.framings);
        let link = Self { strands: self.strands + other.strands, word, framings, name: None };
        debug_assert_eq!(link.components().len(), link.framings.len());
        link
    }

    /// Splits into maximal blocks of consecutive positions joined by generators.
    /// Each block comes with the indices of its components in `self`.
    pub fn split_blocks(&self) -> Vec<(FramedLink, Vec<usize>)> {
        if self.strands == 0 {
            return Vec::new();
        }
        let mut joined = alloc::vec![false; self.strands];
        for &g in &self.word {
            joined[g.unsigned_abs() as usize] = true;
        }
        let comp = self.component_of_position();
        let mut out = Vec::new();
        let mut start = 0;
        for end in 1..=self.strands {
            if end < self.strands && joined[end] {
                continue;
            }
            let word: Vec<i32> = self
                .word
                .iter()
                .filter(|g| {
                    let i = g.unsigned_abs() as usize;
                    i > start && i < end
                })
                .map(|g| g - g.signum() * start as i32)
                .collect();
            let mut comps: Vec<usize> = comp[start..end].to_vec();
            comps.sort_unstable();
            comps.dedup();
            let framings = comps.iter().map(|&c| self.framings[c]).collect();
            out.push((FramedLink { strands: end - start, word, framings, name: None }, comps));
            start = end;
        }
        out
    }
}

#[cfg(test)]
mod tests;
