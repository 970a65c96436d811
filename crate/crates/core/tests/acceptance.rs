//! Acceptance criteria, one test each. Every test prints a single line
//! `criterion NN <name>: PASS|FAIL <detail>` before asserting.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sltr::corpus;
use sltr::faa::{
    check_co_star_with, check_cp, enumerate_faas, extremal_points, outline_cycles,
    pseudosegments_of, CoStarMode, FaceCornerSpec, FlatAngleAssignment, PointKind, SubsetScope,
    DEFAULT_BUDGET,
};
use sltr::graph::SuspendedGraph;
use sltr::harmonic::{
    assemble, check_solvability, default_poles, draw, is_gfaa, solve, CheckKind, HarmonicWeights,
    VerificationReport,
};
use sltr::medial::{invert_medial, medial_graph};
use sltr::schnyder::{compute_schnyder_wood, medial_faa, primal_dual_representation, verify_schnyder};
use sltr::stretcher::{augment, stretch, PseudosegmentArrangement, StretchError};

const GEOMETRIC_TOL: f64 = 1e-7;
const RESIDUAL_TOL: f64 = 1e-9;
const ANGLE_TOL: f64 = 1e-6;
const AREA_TOL: f64 = 1e-7;
const COLLINEAR_TOL: f64 = 1e-7;
const MAX_ORACLE_VERTICES: usize = 12;
const MAX_FAMILY_SIZE: usize = 12;
const WEIGHT_DRAWS: usize = 20;
const ORACLE_TIME: Duration = Duration::from_secs(300);
const SCHNYDER_TIME: Duration = Duration::from_secs(60);

fn report(n: u32, name: &str, ok: bool, detail: impl std::fmt::Display) {
    println!(
        "criterion {n:02} {name}: {} {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

fn assignments(g: &SuspendedGraph) -> Vec<FlatAngleAssignment> {
    enumerate_faas(g, &FaceCornerSpec::ExactTriangle, DEFAULT_BUDGET).unwrap()
}

/// Every (fixture, good assignment) pair.
fn good_assignments() -> Vec<(&'static str, SuspendedGraph, FlatAngleAssignment)> {
    let mut out = Vec::new();
    for (name, g) in corpus::graphs() {
        for faa in assignments(&g) {
            if is_gfaa(&g, &faa).unwrap() {
                out.push((name, g.clone(), faa));
            }
        }
    }
    out
}

#[test]
fn criterion_01_characterisation_equivalence() {
    let start = Instant::now();
    let (mut pairs, mut disagreements) = (0, Vec::new());
    for (name, g) in corpus::graphs() {
        if g.graph().vertex_count() > MAX_ORACLE_VERTICES {
            continue;
        }
        let cycles = outline_cycles(g.graph(), CoStarMode::Full, DEFAULT_BUDGET).unwrap();
        for faa in assignments(&g) {
            pairs += 1;
            if is_gfaa(&g, &faa).unwrap() != check_co_star_with(&g, &faa, &cycles).ok {
                disagreements.push(name);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = disagreements.is_empty() && pairs > 0 && elapsed < ORACLE_TIME;
    report(
        1,
        "geometric and combinatorial characterisations agree",
        ok,
        format!("{pairs} pairs, {} disagreements, {elapsed:.1?}", disagreements.len()),
    );
    assert!(ok, "{disagreements:?}");
}

#[test]
fn criterion_02_cube_has_no_assignment() {
    let count = assignments(&corpus::cube()).len();
    report(2, "cube admits no flat angle assignment", count == 0, format!("{count} found"));
    assert_eq!(count, 0);
}

#[test]
fn criterion_03_simple_cycles_suffice() {
    let (mut pairs, mut disagreements) = (0, 0);
    for (_, g) in corpus::graphs() {
        let full = outline_cycles(g.graph(), CoStarMode::Full, DEFAULT_BUDGET).unwrap();
        let simple = outline_cycles(g.graph(), CoStarMode::SimpleCycles, DEFAULT_BUDGET).unwrap();
        for faa in assignments(&g) {
            pairs += 1;
            let a = check_co_star_with(&g, &faa, &full).ok;
            let b = check_co_star_with(&g, &faa, &simple).ok;
            disagreements += usize::from(a != b);
        }
    }
    let ok = disagreements == 0 && pairs > 0;
    report(3, "full and simple-cycle outline checks agree", ok, format!("{pairs} pairs, {disagreements} disagreements"));
    assert!(ok);
}

#[test]
fn criterion_04_good_families_have_three_free_points() {
    let (mut families, mut skipped, mut subsets, mut failures) = (0, 0, 0, Vec::new());
    for (name, g, faa) in good_assignments() {
        let fam = pseudosegments_of(&g, &faa).unwrap();
        if fam.len() > MAX_FAMILY_SIZE {
            skipped += 1;
            continue;
        }
        families += 1;
        let r = check_cp(&fam, PointKind::Free, SubsetScope::All, DEFAULT_BUDGET).unwrap();
        subsets += r.checked;
        if !r.ok {
            failures.push((name, r.witness));
        }
    }
    let ok = failures.is_empty() && families > 0;
    report(
        4,
        "every subset of a good family has three free points",
        ok,
        format!(
            "{families} families ({skipped} above {MAX_FAMILY_SIZE} segments skipped), {subsets} subsets, {} failures",
            failures.len()
        ),
    );
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_05_solver_residuals_and_solvability() {
    let (mut systems, mut worst, mut unsolvable) = (0, 0.0f64, 0);
    for (_, g, faa) in good_assignments() {
        let sys = assemble(&g, &faa, &HarmonicWeights::uniform(), default_poles()).unwrap();
        if !check_solvability(&sys) {
            unsolvable += 1;
            continue;
        }
        let d = solve(&sys).unwrap();
        worst = worst.max(d.max_residual);
        systems += 1;
    }
    let ok = unsolvable == 0 && worst <= RESIDUAL_TOL && systems > 0;
    report(
        5,
        "harmonic systems are solvable with small residuals",
        ok,
        format!("{systems} systems, worst residual {worst:e}, {unsolvable} unsolvable"),
    );
    assert!(ok);
}

/// Largest violation of the vertex and face angle identities.
fn angle_defects(g: &SuspendedGraph, r: &VerificationReport) -> (f64, f64) {
    let pg = g.graph();
    let outer = pg.outer_face();
    let vertex = (0..pg.vertex_count())
        .filter(|&v| !pg.is_incident(v, outer))
        .map(|v| (r.vertex_angle_sums[v] - std::f64::consts::TAU).abs())
        .fold(0.0, f64::max);
    let face = (0..pg.face_count())
        .filter(|&f| f != outer)
        .map(|f| r.face_angle_sums[f] - (pg.face_len(f) as f64 - 2.0) * std::f64::consts::PI)
        .fold(f64::MIN, f64::max);
    (vertex, face)
}

#[test]
fn criterion_06_angle_identities() {
    let (mut drawings, mut worst_vertex, mut worst_face) = (0, 0.0f64, f64::MIN);
    for (_, g, faa) in good_assignments() {
        let (_, r) = draw(&g, &faa, &HarmonicWeights::uniform(), default_poles()).unwrap();
        assert!(r.is_sltr());
        let (v, f) = angle_defects(&g, &r);
        worst_vertex = worst_vertex.max(v);
        worst_face = worst_face.max(f);
        drawings += 1;
    }
    let ok = worst_vertex <= ANGLE_TOL && worst_face <= ANGLE_TOL && drawings > 0;
    report(
        6,
        "angle sums around vertices and faces",
        ok,
        format!("{drawings} drawings, vertex defect {worst_vertex:e}, face excess {worst_face:e}"),
    );
    assert!(ok);
}

#[test]
fn criterion_07_tutte_drawings_of_triangulations() {
    let mut failed = Vec::new();
    let triangulations = corpus::triangulations();
    for (name, g) in &triangulations {
        let (_, r) = draw(g, &FlatAngleAssignment::new(), &HarmonicWeights::uniform(), default_poles()).unwrap();
        let all_seven = CheckKind::ALL.iter().all(|&k| r.check(k).passed);
        if !(all_seven && r.faces_triangular) {
            failed.push(*name);
        }
    }
    let ok = failed.is_empty() && !triangulations.is_empty();
    report(
        7,
        "empty assignment on triangulations gives a verified drawing",
        ok,
        format!("{} triangulations, failed {failed:?}", triangulations.len()),
    );
    assert!(ok);
}

#[test]
fn criterion_08_schnyder_pipeline() {
    let start = Instant::now();
    let mut problems = Vec::new();
    for (name, g) in corpus::three_connected() {
        let wood = compute_schnyder_wood(&g).unwrap();
        if !verify_schnyder(&wood).ok {
            problems.push(format!("{name}: wood"));
        }
        let (medial, faa) = medial_faa(&wood).unwrap();
        if !is_gfaa(&medial.graph, &faa).unwrap() {
            problems.push(format!("{name}: medial assignment"));
        }
        let d = primal_dual_representation(&g).unwrap();
        let pg = g.graph();
        if d.tiles.len() != pg.vertex_count() + pg.face_count() - 1 {
            problems.push(format!("{name}: {} tiles", d.tiles.len()));
        }
        if d.area_defect() > AREA_TOL {
            problems.push(format!("{name}: area defect {:e}", d.area_defect()));
        }
        let primal = |i: usize| matches!(d.tiles[i].origin, sltr::medial::FaceOrigin::Vertex(_));
        if d.side_adjacency(GEOMETRIC_TOL).iter().any(|&(i, j)| primal(i) == primal(j)) {
            problems.push(format!("{name}: colouring"));
        }
    }
    let elapsed = start.elapsed();
    let ok = problems.is_empty() && elapsed < SCHNYDER_TIME;
    report(8, "Schnyder woods and primal-dual dissections", ok, format!("{problems:?} in {elapsed:.1?}"));
    assert!(ok);
}

#[test]
fn criterion_09_medial_recognition() {
    let mut problems = Vec::new();
    let graphs = corpus::graphs();
    for (name, g) in &graphs {
        let medial = medial_graph(g);
        match invert_medial(&medial.graph) {
            Ok(back) if back.is_isomorphic(g) => {}
            other => problems.push(format!("{name}: inversion {other:?}")),
        }
        if let Err(e) = primal_dual_representation(g) {
            problems.push(format!("{name}: {e}"));
        }
    }
    let ok = problems.is_empty();
    report(
        9,
        "medial graphs invert and their assignment draws",
        ok,
        format!("{} graphs, problems {problems:?}", graphs.len()),
    );
    assert!(ok);
}

#[test]
fn criterion_10_stretcher() {
    let pin = PseudosegmentArrangement::new(corpus::pinwheel());
    let out = stretch(&pin, DEFAULT_BUDGET).unwrap();
    let stretched = out.certificate.is_valid(COLLINEAR_TOL) && out.family.contacts() == pin.family().contacts();

    let locked = PseudosegmentArrangement::new(corpus::interlocked());
    let rejected = match stretch(&locked, DEFAULT_BUDGET) {
        Err(StretchError::NotStretchable { witness, .. }) => {
            extremal_points(&witness, locked.family()).len() <= 2
        }
        _ => false,
    };

    let aug = augment(&pin).unwrap();
    let mut stripped = aug.stripped_paths();
    stripped.sort();
    let base: Vec<Vec<usize>> = pin.family().segments().iter().map(|s| s.vertices().to_vec()).collect();
    let inverts = stripped == base;

    let ok = stretched && rejected && inverts;
    report(
        10,
        "stretch, reject and strip",
        ok,
        format!("stretched {stretched}, rejected {rejected}, strip inverts {inverts}"),
    );
    assert!(ok);
}

fn random_weights(g: &SuspendedGraph, rng: &mut ChaCha8Rng) -> HarmonicWeights {
    let pg = g.graph();
    let mut w = HarmonicWeights::uniform();
    for v in 0..pg.vertex_count() {
        w.between.insert(v, rng.gen_range(0.05..0.95));
        let raw: Vec<f64> = (0..pg.degree(v)).map(|_| rng.gen_range(0.1..1.0)).collect();
        let sum: f64 = raw.iter().sum();
        w.barycentric.insert(v, raw.iter().map(|x| x / sum).collect());
    }
    w
}

#[test]
fn criterion_11_weight_robustness() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut draws, mut failed) = (0, 0);
    for (_, g, faa) in good_assignments() {
        for _ in 0..WEIGHT_DRAWS {
            let w = random_weights(&g, &mut rng);
            let (_, r) = draw(&g, &faa, &w, default_poles()).unwrap();
            draws += 1;
            failed += usize::from(!r.is_sltr());
        }
    }
    let ok = failed == 0 && draws > 0;
    report(11, "random weights keep good assignments good", ok, format!("{draws} draws, {failed} failed"));
    assert!(ok);
}
