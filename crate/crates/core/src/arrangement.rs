//! Affine hyperplane arrangements over the rationals.
//!
//! Hyperplane `i` is `{x : normal_i · x = offset_i}`. A set of hyperplanes is
//! central when the corresponding linear system is consistent, and its rank
//! is the rank of its normals.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::semimatroid::{Limits, Semimatroid};
use crate::subset::{GroundSet, Subset};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rational>,
    pub offset: Rational,
}

impl Hyperplane {
    pub fn new(normal: Vec<Rational>, offset: Rational) -> Self {
        Hyperplane { normal, offset }
    }

    pub fn from_integers(normal: &[i64], offset: i64) -> Self {
        Hyperplane {
            normal: normal.iter().map(|&v| linalg::rational(v)).collect(),
            offset: linalg::rational(offset),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    dim: usize,
    planes: Vec<Hyperplane>,
    labels: Option<Vec<String>>,
}

impl Arrangement {
    pub fn new(dim: usize, planes: Vec<Hyperplane>) -> Result<Self> {
        for (i, h) in planes.iter().enumerate() {
            if h.normal.len() != dim {
                return Err(Error::DimensionMismatch {
                    index: i,
                    expected: dim,
                    found: h.normal.len(),
                });
            }
            if h.normal.iter().all(Zero::is_zero) {
                return Err(Error::ZeroNormal(i));
            }
        }
        Ok(Arrangement {
            dim,
            planes,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.planes.len() {
            return Err(Error::GroundSetMismatch(labels.len(), self.planes.len()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn planes(&self) -> &[Hyperplane] {
        &self.planes
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn len(&self) -> usize {
        self.planes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.planes.is_empty()
    }

    pub fn ground(&self) -> GroundSet {
        match &self.labels {
            Some(l) => GroundSet::with_labels(l.clone()),
            None => GroundSet::new(self.len()),
        }
    }

    fn normals(&self, b: Subset) -> Vec<Vec<Rational>> {
        b.iter().map(|i| self.planes[i].normal.clone()).collect()
    }

    fn augmented(&self, b: Subset) -> Vec<Vec<Rational>> {
        b.iter()
            .map(|i| {
                let mut row = self.planes[i].normal.clone();
                row.push(self.planes[i].offset.clone());
                row
            })
            .collect()
    }

    /// Whether the hyperplanes in `b` share a point. The empty set is central.
    pub fn is_central_subset(&self, b: Subset) -> bool {
        linalg::rank(&self.normals(b)) == linalg::rank(&self.augmented(b))
    }

    /// Codimension of the intersection of a central subset.
    pub fn subset_rank(&self, b: Subset) -> Result<u32> {
        let r = linalg::rank(&self.normals(b));
        if r != linalg::rank(&self.augmented(b)) {
            return Err(Error::NotCentralSubset(b));
        }
        Ok(r as u32)
    }

    /// The semimatroid of central subsets. Central sets are downward closed,
    /// so each is reached from a smaller central set by adding its largest
    /// element; non-central sets are never extended.
    pub fn semimatroid(&self) -> Result<Semimatroid> {
        self.semimatroid_with_limits(Limits::default())
    }

    pub fn semimatroid_with_limits(&self, limits: Limits) -> Result<Semimatroid> {
        limits.check_elements(self.len())?;
        let mut ranks: HashMap<Subset, u32> = HashMap::new();
        ranks.insert(Subset::EMPTY, 0);
        let mut frontier = vec![Subset::EMPTY];
        while let Some(b) = frontier.pop() {
            let start = b.max().map_or(0, |m| m + 1);
            for e in start..self.len() {
                let c = b.with(e);
                if let Ok(r) = self.subset_rank(c) {
                    ranks.insert(c, r);
                    limits.check_central(ranks.len())?;
                    frontier.push(c);
                }
            }
        }
        Ok(Semimatroid::from_map_unchecked(self.ground(), ranks))
    }

    /// Homogenise: `v·x = c` becomes `(v, −c)·(x, x_{d+1}) = 0`, and the
    /// plane `x_{d+1} = 0` is appended last.
    pub fn cone(&self) -> Arrangement {
        let mut planes: Vec<Hyperplane> = self
            .planes
            .iter()
            .map(|h| {
                let mut normal = h.normal.clone();
                normal.push(-h.offset.clone());
                Hyperplane::new(normal, Rational::zero())
            })
            .collect();
        let mut extra = vec![Rational::zero(); self.dim + 1];
        extra[self.dim] = linalg::rational(1);
        planes.push(Hyperplane::new(extra, Rational::zero()));
        let labels = self.labels.as_ref().map(|l| {
            let mut l = l.clone();
            l.push("p".to_string());
            l
        });
        Arrangement {
            dim: self.dim + 1,
            planes,
            labels,
        }
    }
}
