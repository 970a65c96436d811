use super::outline::enclosed_faces;
use super::{FaaError, PseudosegmentFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    Free,
    Extremal,
}

/// Which subsets of the family a point-count check quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetScope {
    /// Subsets whose union is connected.
    Connected,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CpReport {
    pub ok: bool,
    pub checked: usize,
    /// Smallest failing subset (by size, then lexicographically).
    pub witness: Option<Vec<usize>>,
    pub witness_points: Vec<usize>,
}

fn points(subset: &[usize], fam: &PseudosegmentFamily, kind: PointKind) -> Vec<usize> {
    let g = fam.graph();
    let mut in_subset = vec![false; fam.len()];
    for &i in subset {
        in_subset[i] = true;
    }
    let edges: Vec<usize> = subset.iter().flat_map(|&i| fam.segment_edges(i)).collect();
    let mut out = Vec::new();
    // each connected piece of the union is judged against its own outer region
    for comp in g.edge_components(&edges) {
        let mut blocked = vec![false; g.edge_count()];
        for &e in &edges {
            let (a, _) = g.edges()[e];
            if comp.binary_search(&a).is_ok() {
                blocked[e] = true;
            }
        }
        let enclosed = enclosed_faces(g, &blocked);
        for &p in &comp {
            let at_p = fam.segments_at(p);
            let is_end = at_p
                .iter()
                .any(|&i| in_subset[i] && fam.segment(i).is_endpoint(p));
            let interior_to_subset = fam.interior_segment(p).is_some_and(|i| in_subset[i]);
            let on_unbounded = g.faces_around(p).iter().any(|&f| !enclosed[f]);
            if !is_end || interior_to_subset || !on_unbounded {
                continue;
            }
            if kind == PointKind::Free {
                let on_outer = g.is_incident(p, g.outer_face());
                let touches_other = at_p.iter().any(|&i| !in_subset[i]);
                if !on_outer && !touches_other {
                    continue;
                }
            }
            out.push(p);
        }
    }
    out.sort_unstable();
    out
}

/// Points of the subset that are endpoints, not interior to a member, on the
/// unbounded region of the subset, and on the unbounded region of the whole
/// family or on a pseudosegment outside the subset.
pub fn free_points(subset: &[usize], fam: &PseudosegmentFamily) -> Vec<usize> {
    points(subset, fam, PointKind::Free)
}

/// As [`free_points`] without the last requirement.
pub fn extremal_points(subset: &[usize], fam: &PseudosegmentFamily) -> Vec<usize> {
    points(subset, fam, PointKind::Extremal)
}

fn union_is_connected(subset: &[usize], fam: &PseudosegmentFamily) -> bool {
    let edges: Vec<usize> = subset.iter().flat_map(|&i| fam.segment_edges(i)).collect();
    fam.graph().edge_components(&edges).len() == 1
}

/// Checks that every subset of at least two pseudosegments has at least three
/// points of the given kind.
pub fn check_cp(
    fam: &PseudosegmentFamily,
    kind: PointKind,
    scope: SubsetScope,
    budget: u64,
) -> Result<CpReport, FaaError> {
    let n = fam.len();
    let mut checked = 0usize;
    let mut visited = 0u64;
    for size in 2..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            visited += 1;
            if visited > budget {
                return Err(FaaError::BudgetExceeded(budget));
            }
            if scope == SubsetScope::All || union_is_connected(&combo, fam) {
                checked += 1;
                let pts = points(&combo, fam, kind);
                if pts.len() < 3 {
                    return Ok(CpReport {
                        ok: false,
                        checked,
                        witness: Some(combo),
                        witness_points: pts,
                    });
                }
            }
            // next combination in lexicographic order
            let Some(i) = (0..size).rev().find(|&i| combo[i] < n - size + i) else {
                break;
            };
            combo[i] += 1;
            for j in i + 1..size {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    Ok(CpReport {
        ok: true,
        checked,
        witness: None,
        witness_points: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::faa::{pseudosegments_of, FlatAngleAssignment, DEFAULT_BUDGET};

    fn family(points: &[(f64, f64)], paths: &[&[usize]]) -> PseudosegmentFamily {
        let edges: Vec<(usize, usize)> = paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| (w[0], w[1])))
            .collect();
        let g = corpus::plane_graph_from_points(points, &edges).unwrap();
        PseudosegmentFamily::new(g, paths.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    #[test]
    fn singleton_endpoints() {
        let g = corpus::k4();
        let fam = pseudosegments_of(&g, &FlatAngleAssignment::new()).unwrap();
        for i in 0..fam.len() {
            let (a, b) = fam.segment(i).endpoints();
            assert_eq!(extremal_points(&[i], &fam), vec![a.min(b), a.max(b)]);
            // both endpoints touch other edges
            assert_eq!(free_points(&[i], &fam).len(), 2);
        }
    }

    #[test]
    fn l_contact_has_three_free_points() {
        // x=0, y=1, z=2 form s2; s1 = y-w with w=3
        let fam = family(
            &[(0.0, 0.0), (1.0, 0.0), (2.0, 0.0), (1.0, 1.0)],
            &[&[0, 1, 2], &[1, 3]],
        );
        let pts = free_points(&[0, 1], &fam);
        assert_eq!(pts, vec![0, 2, 3]);
        assert_eq!(extremal_points(&[0, 1], &fam), pts);
        let r = check_cp(&fam, PointKind::Extremal, SubsetScope::All, DEFAULT_BUDGET).unwrap();
        assert!(r.ok);
    }

    #[test]
    fn extremal_but_not_free() {
        // hub 0 with three spokes, each ending on a corner of a surrounding triangle
        let pts = [
            (0.0, 0.0),
            (2.0, 0.0),
            (-1.0, 1.7),
            (-1.0, -1.7),
            (4.0, 0.0),
            (-2.0, 3.4),
            (-2.0, -3.4),
        ];
        let fam = family(
            &pts,
            &[
                &[0, 1],
                &[0, 2],
                &[0, 3],
                &[1, 4],
                &[2, 5],
                &[3, 6],
                &[4, 5],
                &[5, 6],
                &[6, 4],
            ],
        );
        let all: Vec<usize> = (0..fam.len()).collect();
        let ext = extremal_points(&all, &fam);
        let free = free_points(&all, &fam);
        assert_eq!(ext, vec![4, 5, 6]);
        assert_eq!(free, vec![4, 5, 6]);
        // the hub alone with its three segments: all four points on the outline
        let hub: Vec<usize> = (0..fam.len())
            .filter(|&i| fam.segment(i).contains(0))
            .collect();
        let ext = extremal_points(&hub, &fam);
        let free = free_points(&hub, &fam);
        assert!(ext.contains(&0));
        assert!(!free.contains(&0));
        assert!(free.iter().all(|p| ext.contains(p)));
    }

    #[test]
    fn interlocked_family_has_two_extremal_points() {
        // a long segment carrying the feet of three segments that rest on each other
        let fam = family(
            &[
                (0.0, 0.0),
                (1.0, 0.0),
                (2.0, 0.0),
                (3.0, 0.0),
                (4.0, 0.0),
                (2.0, 1.0),
                (2.0, 2.0),
                (1.2, 1.0),
            ],
            &[&[0, 1, 2, 3, 4], &[1, 7, 5], &[2, 5, 6], &[3, 6, 7]],
        );
        let r = check_cp(
            &fam,
            PointKind::Extremal,
            SubsetScope::Connected,
            DEFAULT_BUDGET,
        )
        .unwrap();
        assert!(!r.ok);
        // the long segment with two leaning ones already encloses the tip of the second
        assert_eq!(r.witness, Some(vec![0, 1, 3]));
        assert_eq!(r.witness_points, vec![0, 4]);
        // the three leaning segments alone still expose their feet
        assert_eq!(extremal_points(&[1, 2, 3], &fam), vec![1, 2, 3]);
    }
}
