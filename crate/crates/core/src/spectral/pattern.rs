//! Quotient patterns: finite descriptions of infinite quasi-transitive trees.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::dense::spectral_radius;
use crate::error::{Error, Result};

/// Neighbour counts by vertex class.
///
/// `counts[i][j]` is the number of class-`j` neighbours of every class-`i`
/// vertex. Serialized as `{"classes": c, "counts": [[...], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientPattern {
    pub classes: usize,
    pub counts: Vec<Vec<u32>>,
}

impl QuotientPattern {
    pub fn new(counts: Vec<Vec<u32>>) -> Result<Self> {
        let p = QuotientPattern {
            classes: counts.len(),
            counts,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let p: QuotientPattern = serde_json::from_str(text)?;
        p.validate()?;
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("pattern serializes")
    }

    /// The `d`-regular tree: one class with `d` neighbours of its own kind.
    pub fn regular_tree(d: u32) -> Result<Self> {
        Self::new(vec![vec![d]])
    }

    /// `T_{d;r,L}`: a `d`-regular backbone class `b` plus chain classes
    /// `c1..cL`; every backbone vertex carries `r` chains of length `len`.
    pub fn chain_tree(d: u32, r: u32, len: usize) -> Result<Self> {
        let c = len + 1;
        let mut counts = vec![vec![0; c]; c];
        counts[0][0] = d;
        if len > 0 {
            counts[0][1] = r;
            counts[1][0] = 1;
            for k in 1..len {
                counts[k][k + 1] = 1;
                counts[k + 1][k] = 1;
            }
        }
        Self::new(counts)
    }

    pub fn validate(&self) -> Result<()> {
        let c = self.classes;
        if c == 0 {
            return Err(Error::InvalidPattern("no classes".into()));
        }
        if self.counts.len() != c || self.counts.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidPattern(format!(
                "counts must be a {c}x{c} matrix"
            )));
        }
        for i in 0..c {
            for j in 0..c {
                if (self.counts[i][j] > 0) != (self.counts[j][i] > 0) {
                    return Err(Error::InvalidPattern(format!(
                        "asymmetric support: counts[{i}][{j}] = {} but counts[{j}][{i}] = {}",
                        self.counts[i][j], self.counts[j][i]
                    )));
                }
            }
        }
        if self.counts.iter().flatten().all(|&x| x == 0) {
            return Err(Error::InvalidPattern("pattern has no edges".into()));
        }
        Ok(())
    }

    /// Degree of a class-`i` vertex.
    pub fn degree(&self, i: usize) -> u32 {
        self.counts[i].iter().sum()
    }

    /// Perron root of the count matrix: the growth rate of the tree, i.e.
    /// the adjacency spectral radius of its quotient.
    pub fn adjacency_rho(&self) -> f64 {
        let c = self.classes;
        spectral_radius(&DMatrix::from_fn(c, c, |i, j| self.counts[i][j] as f64))
    }
}

/// Reduced Hashimoto matrix of a pattern and its spectral radius.
#[derive(Debug, Clone)]
pub struct PatternSpectrum {
    /// Ordered class pairs `(i, j)` with `counts[i][j] > 0`.
    pub states: Vec<(usize, usize)>,
    pub matrix: DMatrix<f64>,
    pub rho: f64,
}

/// Builds the non-backtracking matrix on class pairs:
/// `M[(i;j)][(j;l)] = counts[j][l] - [l == i]`.
pub fn pattern_hashimoto(p: &QuotientPattern) -> Result<PatternSpectrum> {
    p.validate()?;
    let c = p.classes;
    let states: Vec<(usize, usize)> = (0..c)
        .flat_map(|i| (0..c).map(move |j| (i, j)))
        .filter(|&(i, j)| p.counts[i][j] > 0)
        .collect();
    let s = states.len();
    let mut matrix = DMatrix::zeros(s, s);
    for (row, &(i, j)) in states.iter().enumerate() {
        for (col, &(j2, l)) in states.iter().enumerate() {
            if j2 != j {
                continue;
            }
            let entry = p.counts[j][l] as i64 - i64::from(l == i);
            if entry < 0 {
                return Err(Error::InvalidPattern(format!(
                    "negative transition from ({i};{j}) to ({j};{l})"
                )));
            }
            matrix[(row, col)] = entry as f64;
        }
    }
    let rho = spectral_radius(&matrix);
    Ok(PatternSpectrum {
        states,
        matrix,
        rho,
    })
}
