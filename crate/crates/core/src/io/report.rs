//! Key-value reports of drawings, woods, dissections and stretches.

use std::fmt::Write;

use crate::faa::PseudosegmentFamily;
use crate::harmonic::{Drawing, VerificationReport};
use crate::medial::FaceOrigin;
use crate::schnyder::{Dissection, SchnyderReport, SchnyderWood};
use crate::stretcher::SegmentContactSystem;

fn origin(o: FaceOrigin) -> String {
    match o {
        FaceOrigin::Vertex(v) => format!("vertex {v}"),
        FaceOrigin::Face(f) => format!("face {f}"),
    }
}

pub fn write_family(fam: &PseudosegmentFamily) -> String {
    let mut out = String::new();
    writeln!(out, "segments {}", fam.len()).unwrap();
    for s in fam.segments() {
        let vs: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "segment {}", vs.join(" ")).unwrap();
    }
    for c in fam.contacts() {
        let kind = if c.interior { "interior" } else { "end" };
        writeln!(out, "contact {} {} {} {kind}", c.point, c.segment, c.touched).unwrap();
    }
    out
}

pub fn write_verification(report: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let status = if c.passed { "pass" } else { "fail" };
        match &c.witness {
            Some(w) => writeln!(out, "check {} {status} {w}", c.kind).unwrap(),
            None => writeln!(out, "check {} {status}", c.kind).unwrap(),
        }
    }
    writeln!(out, "faces-triangular {}", report.faces_triangular).unwrap();
    writeln!(out, "sltr {}", report.is_sltr()).unwrap();
    out
}

pub fn write_drawing(d: &Drawing, report: &VerificationReport) -> String {
    let mut out = String::new();
    for (v, p) in d.points.iter().enumerate() {
        writeln!(out, "point {v} {:.12} {:.12}", p.x, p.y).unwrap();
    }
    writeln!(out, "residual {:e}", d.max_residual).unwrap();
    out + &write_verification(report)
}

pub fn write_wood(w: &SchnyderWood, report: &SchnyderReport) -> String {
    let mut out = String::new();
    let g = w.graph().graph();
    writeln!(out, "clockwise {}", w.clockwise).unwrap();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let ab = w.label(a, b).map_or("-".to_string(), |l| l.to_string());
        let ba = w.label(b, a).map_or("-".to_string(), |l| l.to_string());
        writeln!(out, "edge {e} {a} {b} {ab} {ba}").unwrap();
    }
    for v in report.violations.iter() {
        writeln!(out, "violation {v:?}").unwrap();
    }
    writeln!(out, "schnyder {}", report.ok).unwrap();
    out
}

pub fn write_dissection(d: &Dissection) -> String {
    let mut out = String::new();
    let e = d.enclosing;
    writeln!(
        out,
        "enclosing {:.12} {:.12} {:.12} {:.12} {:.12} {:.12}",
        e[0].x, e[0].y, e[1].x, e[1].y, e[2].x, e[2].y
    )
    .unwrap();
    for t in &d.tiles {
        let c = t.corners;
        writeln!(
            out,
            "tile {} {:.12} {:.12} {:.12} {:.12} {:.12} {:.12}",
            origin(t.origin),
            c[0].x,
            c[0].y,
            c[1].x,
            c[1].y,
            c[2].x,
            c[2].y
        )
        .unwrap();
    }
    writeln!(out, "tiles {}", d.tiles.len()).unwrap();
    writeln!(out, "area-defect {:e}", d.area_defect()).unwrap();
    writeln!(out, "wood-rule {}", d.used_wood_rule).unwrap();
    out
}

pub fn write_stretch(s: &SegmentContactSystem) -> String {
    let mut out = String::new();
    for (v, p) in s.points.iter().enumerate() {
        writeln!(out, "point {v} {:.12} {:.12}", p.x, p.y).unwrap();
    }
    for (i, (a, b)) in s.segments().iter().enumerate() {
        writeln!(out, "segment {i} {:.12} {:.12} {:.12} {:.12}", a.x, a.y, b.x, b.y).unwrap();
    }
    let c = &s.certificate;
    writeln!(out, "collinearity {:e}", c.max_collinearity).unwrap();
    writeln!(out, "contacts {}", c.contacts_checked).unwrap();
    writeln!(out, "side-mismatches {}", c.side_mismatches.len()).unwrap();
    writeln!(out, "crossings {}", c.crossings.len()).unwrap();
    out
}
