//! Flat angle assignments and the combinatorial conditions on them.
//!
//! A flat angle assignment maps some non-suspension vertices to one incident
//! face each; the vertex will have a straight angle in that face.

mod outline;
mod points;
mod pseudosegments;

pub use outline::{
    check_co_star, check_co_star_with, convex_corners, outline_cycle_of, outline_cycles,
    CoStarMode, CoStarReport, OutlineCycle,
};
pub use points::{check_cp, extremal_points, free_points, CpReport, PointKind, SubsetScope};
pub use pseudosegments::{
    arc_classes, pseudosegments_of, Contact, FamilyError, Pseudosegment, PseudosegmentFamily,
};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::graph::SuspendedGraph;

/// Default cap on explored search nodes for the exhaustive enumerators.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FaaError {
    #[error("vertex {0} is assigned twice")]
    DuplicateVertex(usize),
    #[error("enumeration budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error("prescribed corner count {corners} for face {face} is below 3")]
    TooFewCorners { face: usize, corners: usize },
    #[error("graph has {0} edges, more than the supported 128")]
    TooManyEdges(usize),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatAngleAssignment {
    assigned: BTreeMap<usize, usize>,
}

impl FlatAngleAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, FaaError> {
        let mut assigned = BTreeMap::new();
        for (v, f) in pairs {
            if assigned.insert(v, f).is_some() {
                return Err(FaaError::DuplicateVertex(v));
            }
        }
        Ok(FlatAngleAssignment { assigned })
    }

    /// Face assigned to `v`, if any.
    pub fn face_of(&self, v: usize) -> Option<usize> {
        self.assigned.get(&v).copied()
    }

    pub fn is_assigned(&self, v: usize) -> bool {
        self.assigned.contains_key(&v)
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.assigned.iter().map(|(&v, &f)| (v, f))
    }

    pub fn len(&self) -> usize {
        self.assigned.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assigned.is_empty()
    }

    /// Number of vertices assigned to each face.
    pub fn face_counts(&self, face_count: usize) -> Vec<usize> {
        let mut counts = vec![0; face_count];
        for &f in self.assigned.values() {
            if f < face_count {
                counts[f] += 1;
            }
        }
        counts
    }
}

/// Target number of assigned vertices per face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FaceCornerSpec {
    /// Every face, the outer one included, gets exactly `|f| - 3` vertices.
    ExactTriangle,
    /// At most `|f| - 3` per face, and no outer-face vertex goes to an inner face.
    AtMost,
    /// Face `f` keeps exactly `corners[f]` corners, so `|f| - corners[f]`
    /// vertices are assigned to it. Faces absent from the map keep 3 corners.
    Prescribed(BTreeMap<usize, usize>),
}

impl FaceCornerSpec {
    pub fn prescribed(corners: BTreeMap<usize, usize>) -> Result<Self, FaaError> {
        if let Some((&face, &c)) = corners.iter().find(|(_, &c)| c < 3) {
            return Err(FaaError::TooFewCorners { face, corners: c });
        }
        Ok(FaceCornerSpec::Prescribed(corners))
    }

    /// Allowed range `(min, max)` of assigned vertices on face `f` of length `len`.
    pub fn bounds(&self, f: usize, len: usize) -> (usize, usize) {
        let cap = len.saturating_sub(3);
        match self {
            FaceCornerSpec::ExactTriangle => (cap, cap),
            FaceCornerSpec::AtMost => (0, cap),
            FaceCornerSpec::Prescribed(c) => {
                let t = len.saturating_sub(c.get(&f).copied().unwrap_or(3));
                (t, t)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    InvalidVertex(usize),
    InvalidFace(usize),
    SuspensionAssigned(usize),
    NotIncident {
        vertex: usize,
        face: usize,
    },
    OuterVertexAssignedInside {
        vertex: usize,
        face: usize,
    },
    FaceCount {
        face: usize,
        assigned: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssignmentReport {
    pub cv_ok: bool,
    pub cf_ok: bool,
    pub violations: Vec<Violation>,
}

impl AssignmentReport {
    pub fn ok(&self) -> bool {
        self.cv_ok && self.cf_ok
    }
}

pub fn check_assignment_conditions(
    g: &SuspendedGraph,
    faa: &FlatAngleAssignment,
    spec: &FaceCornerSpec,
) -> AssignmentReport {
    let pg = g.graph();
    let mut violations = Vec::new();
    let mut cv_ok = true;
    let mut cf_ok = true;
    for (v, f) in faa.pairs() {
        if v >= pg.vertex_count() {
            violations.push(Violation::InvalidVertex(v));
            cv_ok = false;
        } else if f >= pg.face_count() {
            violations.push(Violation::InvalidFace(f));
            cv_ok = false;
        } else if g.is_suspension(v) {
            violations.push(Violation::SuspensionAssigned(v));
            cv_ok = false;
        } else if !pg.is_incident(v, f) {
            violations.push(Violation::NotIncident { vertex: v, face: f });
            cv_ok = false;
        } else if *spec == FaceCornerSpec::AtMost
            && f != pg.outer_face()
            && pg.is_incident(v, pg.outer_face())
        {
            violations.push(Violation::OuterVertexAssignedInside { vertex: v, face: f });
            cf_ok = false;
        }
    }
    let counts = faa.face_counts(pg.face_count());
    for (f, &assigned) in counts.iter().enumerate() {
        let (min, max) = spec.bounds(f, pg.face_len(f));
        if assigned < min || assigned > max {
            violations.push(Violation::FaceCount {
                face: f,
                assigned,
                min,
                max,
            });
            cf_ok = false;
        }
    }
    AssignmentReport {
        cv_ok,
        cf_ok,
        violations,
    }
}

/// Visits every assignment passing the vertex and face conditions, in a fixed
/// order: vertices ascending, each first left unassigned, then tried on its
/// incident faces in ascending order. The visitor returns `false` to stop early.
pub fn for_each_faa(
    g: &SuspendedGraph,
    spec: &FaceCornerSpec,
    budget: u64,
    mut visit: impl FnMut(&FlatAngleAssignment) -> bool,
) -> Result<(), FaaError> {
    let pg = g.graph();
    let outer = pg.outer_face();
    let free: Vec<usize> = (0..pg.vertex_count())
        .filter(|&v| !g.is_suspension(v))
        .collect();
    let options: Vec<Vec<usize>> = free
        .iter()
        .map(|&v| {
            let mut fs = pg.faces_around(v);
            fs.sort_unstable();
            fs.dedup();
            if *spec == FaceCornerSpec::AtMost && pg.is_incident(v, outer) {
                fs.retain(|&f| f == outer);
            }
            fs
        })
        .collect();
    let bounds: Vec<(usize, usize)> = (0..pg.face_count())
        .map(|f| spec.bounds(f, pg.face_len(f)))
        .collect();
    let mut remaining = vec![0usize; pg.face_count()];
    for fs in &options {
        for &f in fs {
            remaining[f] += 1;
        }
    }
    if (0..pg.face_count()).any(|f| remaining[f] < bounds[f].0) {
        return Ok(());
    }
    let mut search = Search {
        free: &free,
        options: &options,
        bounds: &bounds,
        counts: vec![0; pg.face_count()],
        remaining,
        current: Vec::new(),
        nodes: 0,
        budget,
        stopped: false,
    };
    search.run(0, &mut visit)
}

struct Search<'a> {
    free: &'a [usize],
    options: &'a [Vec<usize>],
    bounds: &'a [(usize, usize)],
    counts: Vec<usize>,
    remaining: Vec<usize>,
    current: Vec<(usize, usize)>,
    nodes: u64,
    budget: u64,
    stopped: bool,
}

impl Search<'_> {
    fn run(
        &mut self,
        i: usize,
        visit: &mut impl FnMut(&FlatAngleAssignment) -> bool,
    ) -> Result<(), FaaError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(FaaError::BudgetExceeded(self.budget));
        }
        if i == self.free.len() {
            let faa = FlatAngleAssignment::from_pairs(self.current.iter().copied())
                .expect("each vertex is decided once");
            self.stopped = !visit(&faa);
            return Ok(());
        }
        let v = self.free[i];
        for &f in &self.options[i] {
            self.remaining[f] -= 1;
        }
        let choices = std::iter::once(None).chain(self.options[i].iter().map(|&f| Some(f)));
        for choice in choices {
            if let Some(f) = choice {
                self.counts[f] += 1;
                self.current.push((v, f));
            }
            let feasible = self.options[i].iter().all(|&f| {
                self.counts[f] <= self.bounds[f].1
                    && self.counts[f] + self.remaining[f] >= self.bounds[f].0
            });
            if feasible {
                self.run(i + 1, visit)?;
            }
            if let Some(f) = choice {
                self.counts[f] -= 1;
                self.current.pop();
            }
            if self.stopped {
                break;
            }
        }
        for &f in &self.options[i] {
            self.remaining[f] += 1;
        }
        Ok(())
    }
}

/// All assignments passing the vertex and face conditions, in enumeration order.
pub fn enumerate_faas(
    g: &SuspendedGraph,
    spec: &FaceCornerSpec,
    budget: u64,
) -> Result<Vec<FlatAngleAssignment>, FaaError> {
    let mut out = Vec::new();
    for_each_faa(g, spec, budget, |faa| {
        out.push(faa.clone());
        true
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn octahedron_has_only_the_empty_assignment() {
        let g = corpus::octahedron();
        let all = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap();
        assert_eq!(all, vec![FlatAngleAssignment::new()]);
        assert!(check_assignment_conditions(&g, &all[0], &FaceCornerSpec::ExactTriangle).ok());
    }

    #[test]
    fn cube_and_pentagonal_prism_have_none() {
        for g in [corpus::cube(), corpus::pentagonal_prism()] {
            let all = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap();
            assert!(all.is_empty());
        }
    }

    #[test]
    fn prism_inner_vertices_on_distinct_quads() {
        let g = corpus::prism();
        let pg = g.graph();
        let quad = |a: usize, b: usize| {
            (0..pg.face_count())
                .find(|&f| pg.face_len(f) == 4 && pg.is_incident(a, f) && pg.is_incident(b, f))
                .unwrap()
        };
        // rotate each inner vertex onto the quad spanned with its successor
        let faa =
            FlatAngleAssignment::from_pairs([(3, quad(3, 4)), (4, quad(4, 5)), (5, quad(5, 3))])
                .unwrap();
        let report = check_assignment_conditions(&g, &faa, &FaceCornerSpec::ExactTriangle);
        assert!(report.ok(), "{report:?}");
        let all = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap();
        assert!(all.contains(&faa));
        // frozen from the enumerator: the two rotational bijections
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (name, g) in corpus::graphs() {
            let pg = g.graph();
            let free: Vec<usize> = (0..pg.vertex_count())
                .filter(|&v| !g.is_suspension(v))
                .collect();
            let choices: Vec<Vec<Option<usize>>> = free
                .iter()
                .map(|&v| {
                    let mut fs = pg.faces_around(v);
                    fs.sort_unstable();
                    fs.dedup();
                    std::iter::once(None)
                        .chain(fs.into_iter().map(Some))
                        .collect()
                })
                .collect();
            for spec in [FaceCornerSpec::ExactTriangle, FaceCornerSpec::AtMost] {
                let mut brute = Vec::new();
                let mut idx = vec![0usize; free.len()];
                'outer: loop {
                    let faa = FlatAngleAssignment::from_pairs(
                        free.iter()
                            .enumerate()
                            .filter_map(|(i, &v)| choices[i][idx[i]].map(|f| (v, f))),
                    )
                    .unwrap();
                    if check_assignment_conditions(&g, &faa, &spec).ok() {
                        brute.push(faa);
                    }
                    for j in (0..idx.len()).rev() {
                        idx[j] += 1;
                        if idx[j] < choices[j].len() {
                            continue 'outer;
                        }
                        idx[j] = 0;
                    }
                    break;
                }
                let mut got = enumerate_faas(&g, &spec, DEFAULT_BUDGET).unwrap();
                got.sort();
                brute.sort();
                assert_eq!(got, brute, "{name} {spec:?}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let g = corpus::prism();
        assert_eq!(
            enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, 3),
            Err(FaaError::BudgetExceeded(3))
        );
    }

    #[test]
    fn duplicate_vertex_and_bad_targets_are_rejected() {
        assert_eq!(
            FlatAngleAssignment::from_pairs([(1, 0), (1, 2)]),
            Err(FaaError::DuplicateVertex(1))
        );
        assert_eq!(
            FaceCornerSpec::prescribed(BTreeMap::from([(0, 2)])),
            Err(FaaError::TooFewCorners {
                face: 0,
                corners: 2
            })
        );
    }

    #[test]
    fn suspension_assignment_breaks_cv() {
        let g = corpus::k4();
        let f = g.graph().faces_around(0)[0];
        let faa = FlatAngleAssignment::from_pairs([(0, f)]).unwrap();
        let r = check_assignment_conditions(&g, &faa, &FaceCornerSpec::AtMost);
        assert!(!r.cv_ok);
        assert!(r.violations.contains(&Violation::SuspensionAssigned(0)));
    }

    #[test]
    fn at_most_keeps_outer_vertices_on_the_outer_face() {
        let g = corpus::wheel5();
        let pg = g.graph();
        let inner = pg
            .faces_around(2)
            .into_iter()
            .find(|&f| f != pg.outer_face())
            .unwrap();
        let faa = FlatAngleAssignment::from_pairs([(2, inner)]).unwrap();
        let r = check_assignment_conditions(&g, &faa, &FaceCornerSpec::AtMost);
        assert!(r.cv_ok && !r.cf_ok);
    }
}
