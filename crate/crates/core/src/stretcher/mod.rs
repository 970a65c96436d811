//! Stretching contact families of pseudosegments into straight segments.

mod augment;
mod stretch;
#[cfg(test)]
mod tests;

use thiserror::Error;

pub use augment::{augment, AugmentedArrangement};
pub use stretch::{stretch, SegmentContactSystem, SideMismatch, StretchCertificate};

use crate::faa::{
    check_cp, extremal_points, FaaError, FamilyError, PointKind, PseudosegmentFamily, SubsetScope,
};
use crate::graph::{GraphError, PlaneGraph};
use crate::harmonic::HarmonicError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StretchError {
    #[error("subset {witness:?} has only the extremal points {points:?}")]
    NotStretchable {
        witness: Vec<usize>,
        points: Vec<usize>,
    },
    #[error(transparent)]
    Budget(#[from] FaaError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Harmonic(#[from] HarmonicError),
    #[error("augmented drawing is not a triangle representation: {0}")]
    NotTriangular(String),
    #[error("region {0} is bounded by fewer than three runs")]
    DegenerateRegion(usize),
}

/// A maximal stretch of one pseudosegment along a region's boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run {
    pub segment: usize,
    pub start: usize,
    pub end: usize,
    /// Index in the face walk of the run's first dart.
    pub first_dart: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub face: usize,
    pub outer: bool,
    pub runs: Vec<Run>,
}

impl Region {
    /// Number of distinct pseudosegments on the boundary.
    pub fn bounding_count(&self) -> usize {
        let mut s: Vec<usize> = self.runs.iter().map(|r| r.segment).collect();
        s.sort_unstable();
        s.dedup();
        s.len()
    }
}

/// An embedded contact family of pseudosegments, given without a flat angle
/// assignment.
#[derive(Debug, Clone)]
pub struct PseudosegmentArrangement {
    family: PseudosegmentFamily,
}

impl PseudosegmentArrangement {
    pub fn new(family: PseudosegmentFamily) -> Self {
        PseudosegmentArrangement { family }
    }

    pub fn from_paths(graph: PlaneGraph, paths: Vec<Vec<usize>>) -> Result<Self, StretchError> {
        Ok(Self::new(PseudosegmentFamily::new(graph, paths)?))
    }

    pub fn family(&self) -> &PseudosegmentFamily {
        &self.family
    }

    pub fn graph(&self) -> &PlaneGraph {
        self.family.graph()
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    /// Runs along the boundary walk of face `f`. A corner continues a run when
    /// both its darts lie on one pseudosegment that passes through the vertex.
    pub fn runs(&self, f: usize) -> Vec<Run> {
        runs(&self.family, f)
    }

    pub fn regions(&self) -> Vec<Region> {
        let g = self.graph();
        (0..g.face_count())
            .map(|f| Region {
                face: f,
                outer: f == g.outer_face(),
                runs: self.runs(f),
            })
            .collect()
    }

    /// Extremal points of the whole family.
    pub fn extremal_points(&self) -> Vec<usize> {
        let all: Vec<usize> = (0..self.len()).collect();
        extremal_points(&all, &self.family)
    }
}

pub(crate) fn runs(fam: &PseudosegmentFamily, f: usize) -> Vec<Run> {
    let g = fam.graph();
    let walk = g.face_darts(f);
    let len = walk.len();
    let seg = |d: usize| fam.segment_of_edge(g.dart_edge(d));
    let junction: Vec<usize> = (0..len)
        .filter(|&j| {
            let (din, dout) = (walk[(j + len - 1) % len], walk[j]);
            let v = g.tail(dout);
            !(seg(din) == seg(dout) && fam.interior_segment(v) == Some(seg(dout)))
        })
        .collect();
    let k = junction.len();
    (0..k)
        .map(|i| {
            let (a, b) = (junction[i], junction[(i + 1) % k]);
            Run {
                segment: seg(walk[a]),
                start: g.tail(walk[a]),
                end: g.tail(walk[b % len]),
                first_dart: a,
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StretchReport {
    pub ok: bool,
    pub witness: Option<Vec<usize>>,
    pub witness_points: Vec<usize>,
}

/// Every subset of at least two pseudosegments needs three extremal points.
/// Subsets with a disconnected union are skipped: each of their parts
/// contributes two points of its own.
pub fn check_stretchable(
    arr: &PseudosegmentArrangement,
    budget: u64,
) -> Result<StretchReport, StretchError> {
    let r = check_cp(&arr.family, PointKind::Extremal, SubsetScope::Connected, budget)?;
    Ok(StretchReport {
        ok: r.ok,
        witness: r.witness,
        witness_points: r.witness_points,
    })
}
