use super::stretch::certify;
use super::*;
use crate::corpus;
use crate::faa::{
    enumerate_faas, free_points, pseudosegments_of, FaceCornerSpec, DEFAULT_BUDGET,
};
use crate::harmonic::{draw, HarmonicWeights};

fn arr(fam: PseudosegmentFamily) -> PseudosegmentArrangement {
    PseudosegmentArrangement::new(fam)
}

fn stretchable() -> Vec<(&'static str, PseudosegmentArrangement)> {
    vec![
        ("l_contact", arr(corpus::l_contact())),
        ("pinwheel", arr(corpus::pinwheel())),
        ("cross", arr(corpus::cross())),
    ]
}

#[test]
fn l_contact_has_three_extremal_points() {
    let a = arr(corpus::l_contact());
    assert_eq!(a.extremal_points(), vec![0, 2, 3]);
    assert!(check_stretchable(&a, DEFAULT_BUDGET).unwrap().ok);
}

#[test]
fn l_contact_stretches_to_a_t() {
    let a = arr(corpus::l_contact());
    let out = stretch(&a, DEFAULT_BUDGET).unwrap();
    assert!(out.certificate.is_valid(1e-7), "{:?}", out.certificate);
    assert_eq!(out.certificate.contacts_checked, 1);
    let p = &out.points;
    // the foot lies strictly inside the long segment
    assert!(p[0].dist(p[1]) > 1e-3 && p[2].dist(p[1]) > 1e-3);
    assert!((p[0].dist(p[1]) + p[1].dist(p[2]) - p[0].dist(p[2])).abs() < 1e-9);
}

#[test]
fn interlocked_family_is_rejected_with_its_witness() {
    let a = arr(corpus::interlocked());
    match stretch(&a, DEFAULT_BUDGET) {
        Err(StretchError::NotStretchable { witness, points }) => {
            assert_eq!(witness, vec![0, 1, 3]);
            assert_eq!(points, vec![0, 4]);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn single_segment_is_vacuously_stretchable() {
    let a = arr(corpus::arrangement(&[(0.0, 0.0), (1.0, 1.0), (3.0, 0.0)], &[&[0, 1, 2]]));
    let r = check_stretchable(&a, DEFAULT_BUDGET).unwrap();
    assert!(r.ok);
    assert_eq!(r.witness, None);
    let out = stretch(&a, DEFAULT_BUDGET).unwrap();
    assert!(out.certificate.is_valid(1e-12));
    assert!(out.augmented.is_none());
}

#[test]
fn fixtures_stretch_with_certificates() {
    for (name, a) in stretchable() {
        let out = stretch(&a, DEFAULT_BUDGET).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert!(out.certificate.is_valid(1e-7), "{name}: {:?}", out.certificate);
        assert_eq!(out.family.contacts(), a.family().contacts(), "{name}");
    }
}

#[test]
fn strip_inverts_augment() {
    for (name, a) in stretchable() {
        let aug = augment(&a).unwrap();
        let mut stripped = aug.stripped_paths();
        stripped.sort();
        let base: Vec<Vec<usize>> = a.family().segments().iter().map(|s| s.vertices().to_vec()).collect();
        assert_eq!(stripped, base, "{name}");
        let n = a.graph().vertex_count();
        for v in 0..n {
            let mut got: Vec<usize> = aug.family.graph().neighbors(v).iter().copied().filter(|&u| u < n).collect();
            let mut want = a.graph().neighbors(v).to_vec();
            got.sort_unstable();
            want.sort_unstable();
            assert_eq!(got, want, "{name} vertex {v}");
        }
    }
}

#[test]
fn augmented_regions_are_triangles() {
    for (name, a) in stretchable() {
        let aug = augment(&a).unwrap();
        let plus = PseudosegmentArrangement::new(aug.family.clone());
        for r in plus.regions().iter().filter(|r| !r.outer) {
            assert_eq!(r.runs.len(), 3, "{name} face {}", r.face);
            assert_eq!(r.bounding_count(), 3, "{name} face {}", r.face);
        }
        let reduced = aug.suspended().reduce_degree_two().unwrap();
        assert!(reduced.graph.is_internally_3connected(), "{name}");
    }
}

#[test]
fn protection_counts_follow_runs() {
    // L contact: two pockets between the triangle and the family have four
    // runs, the third is already a triangle
    let l = augment(&arr(corpus::l_contact())).unwrap();
    assert_eq!(l.triangulation_points.len(), 2);
    assert_eq!(l.protection_points.len(), 8);
    // pinwheel: the square and three pockets with 4, 4, 4 and 6 runs
    let pin = augment(&arr(corpus::pinwheel())).unwrap();
    assert_eq!(pin.triangulation_points.len(), 4);
    assert_eq!(pin.protection_points.len(), 18);
}

fn sample_subsets(len: usize, seed: u64, count: usize) -> Vec<Vec<usize>> {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<usize> = (0..len).collect();
    let mut out = Vec::new();
    for a in 0..len {
        for b in a + 1..len {
            out.push(vec![a, b]);
        }
    }
    for _ in 0..count {
        let size = rng.gen_range(3..=len);
        let mut s: Vec<usize> = all.choose_multiple(&mut rng, size).copied().collect();
        s.sort_unstable();
        out.push(s);
    }
    out
}

#[test]
fn augmented_families_satisfy_the_point_condition() {
    for (name, a) in stretchable() {
        let fam = augment(&a).unwrap().family;
        for s in sample_subsets(fam.len(), 5, 300) {
            let pts = crate::faa::extremal_points(&s, &fam);
            assert!(pts.len() >= 3, "{name} {s:?} {pts:?}");
        }
    }
}

/// Adds the third side of every triangular region that has two sides in the
/// subset, until nothing changes.
fn close_under_regions(plus: &PseudosegmentArrangement, subset: &mut Vec<usize>) {
    let sides: Vec<Vec<usize>> = plus
        .regions()
        .iter()
        .filter(|r| !r.outer)
        .map(|r| r.runs.iter().map(|x| x.segment).collect())
        .collect();
    loop {
        let mut grew = false;
        for t in &sides {
            let inside: Vec<&usize> = t.iter().filter(|s| subset.contains(s)).collect();
            if inside.len() == 2 {
                subset.extend(t.iter().filter(|s| !subset.contains(s)).copied().collect::<Vec<_>>());
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    subset.sort_unstable();
}

#[test]
fn extremal_points_of_closed_subsets_are_free() {
    for (name, a) in stretchable() {
        let fam = augment(&a).unwrap().family;
        let plus = PseudosegmentArrangement::new(fam.clone());
        for mut s in sample_subsets(fam.len(), 11, 200) {
            close_under_regions(&plus, &mut s);
            let ext = crate::faa::extremal_points(&s, &fam);
            let free = free_points(&s, &fam);
            assert_eq!(ext, free, "{name} {s:?}");
        }
    }
}

#[test]
fn corpus_families_keep_their_contacts() {
    let mut total = 0;
    for (name, g) in corpus::graphs() {
        let faas = enumerate_faas(&g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap();
        let mut tried = 0;
        for faa in faas {
            let Ok((direct, report)) = draw(&g, &faa, &HarmonicWeights::uniform(), crate::harmonic::default_poles()) else {
                continue;
            };
            if !report.is_sltr() {
                continue;
            }
            let fam = pseudosegments_of(&g, &faa).unwrap();
            let a = arr(fam.clone());
            let out = stretch(&a, DEFAULT_BUDGET).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(out.certificate.is_valid(1e-7), "{name}: {:?}", out.certificate);
            let sltr = certify(&fam, &direct.points);
            assert!(sltr.side_mismatches.is_empty(), "{name}");
            tried += 1;
            if tried == 3 {
                break;
            }
        }
        total += tried;
    }
    assert!(total >= 10, "{total}");
}

