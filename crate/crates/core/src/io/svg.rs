//! SVG 1.1 renderings.

use std::fmt::Write;

use crate::faa::arc_classes;
use crate::geometry::Point;
use crate::harmonic::Drawing;
use crate::medial::FaceOrigin;
use crate::schnyder::Dissection;
use crate::stretcher::SegmentContactSystem;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    pub width: f64,
    pub height: f64,
    pub stroke_width: f64,
    pub vertex_radius: f64,
    /// Cycled through for pseudosegments.
    pub palette: Vec<String>,
    pub primal_fill: String,
    pub dual_fill: String,
    pub labels: bool,
    /// Written into the image when the drawing failed verification.
    pub unverified: bool,
}

impl Default for RenderSpec {
    fn default() -> Self {
        RenderSpec {
            width: 600.0,
            height: 540.0,
            stroke_width: 2.0,
            vertex_radius: 4.0,
            palette: ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]
                .map(String::from)
                .to_vec(),
            primal_fill: "#f4c542".into(),
            dual_fill: "#5b8bd6".into(),
            labels: false,
            unverified: false,
        }
    }
}

/// Maps drawing coordinates into the canvas with a margin, y pointing up.
struct Frame {
    min: Point,
    scale: f64,
    height: f64,
    margin: f64,
}

impl Frame {
    fn new(points: &[Point], spec: &RenderSpec) -> Self {
        let margin = 20.0 + spec.vertex_radius;
        let (mut lo, mut hi) = (Point::new(f64::MAX, f64::MAX), Point::new(f64::MIN, f64::MIN));
        for p in points {
            lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        if points.is_empty() {
            lo = Point::new(0.0, 0.0);
            hi = Point::new(1.0, 1.0);
        }
        let w = (hi.x - lo.x).max(1e-12);
        let h = (hi.y - lo.y).max(1e-12);
        let scale = ((spec.width - 2.0 * margin) / w).min((spec.height - 2.0 * margin) / h);
        Frame {
            min: lo,
            scale,
            height: spec.height,
            margin,
        }
    }

    fn map(&self, p: Point) -> (f64, f64) {
        (
            self.margin + (p.x - self.min.x) * self.scale,
            self.height - self.margin - (p.y - self.min.y) * self.scale,
        )
    }
}

fn open(spec: &RenderSpec) -> String {
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = spec.width,
        h = spec.height
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    if spec.unverified {
        writeln!(out, r##"<text x="8" y="18" font-size="14" fill="#d62728">unverified</text>"##).unwrap();
    }
    out
}

fn line(out: &mut String, f: &Frame, a: Point, b: Point, color: &str, width: f64) {
    let (x1, y1) = f.map(a);
    let (x2, y2) = f.map(b);
    writeln!(
        out,
        r#"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="{width}" stroke-linecap="round"/>"#
    )
    .unwrap();
}

fn vertices(out: &mut String, f: &Frame, points: &[Point], spec: &RenderSpec) {
    for (v, &p) in points.iter().enumerate() {
        let (x, y) = f.map(p);
        writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="{}" fill="black"/>"#, spec.vertex_radius).unwrap();
        if spec.labels {
            writeln!(
                out,
                r#"<text x="{:.3}" y="{:.3}" font-size="11">{v}</text>"#,
                x + spec.vertex_radius + 1.0,
                y - spec.vertex_radius - 1.0
            )
            .unwrap();
        }
    }
}

fn color(spec: &RenderSpec, i: usize) -> &str {
    &spec.palette[i % spec.palette.len()]
}

/// Edges coloured by the pseudosegment (arc) they belong to.
pub fn render_drawing(d: &Drawing, spec: &RenderSpec) -> String {
    let pg = d.graph.graph();
    let f = Frame::new(&d.points, spec);
    let mut out = open(spec);
    let faa = d.assignment.clone().unwrap_or_default();
    for (i, class) in arc_classes(pg, &faa).iter().enumerate() {
        for &e in class {
            let (a, b) = pg.edges()[e];
            line(&mut out, &f, d.points[a], d.points[b], color(spec, i), spec.stroke_width);
        }
    }
    vertices(&mut out, &f, &d.points, spec);
    out.push_str("</svg>\n");
    out
}

/// Vertex triangles in the primal colour, face triangles in the dual colour.
pub fn render_dissection(d: &Dissection, spec: &RenderSpec) -> String {
    let f = Frame::new(&d.enclosing, spec);
    let mut out = open(spec);
    let poly = |out: &mut String, c: &[Point; 3], fill: &str| {
        let pts: Vec<String> = c
            .iter()
            .map(|&p| {
                let (x, y) = f.map(p);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            out,
            r#"<polygon points="{}" fill="{fill}" stroke="black" stroke-width="{}" stroke-linejoin="round"/>"#,
            pts.join(" "),
            spec.stroke_width / 2.0
        )
        .unwrap();
    };
    poly(&mut out, &d.enclosing, "none");
    for t in &d.tiles {
        let fill = match t.origin {
            FaceOrigin::Vertex(_) => &spec.primal_fill,
            FaceOrigin::Face(_) => &spec.dual_fill,
        };
        poly(&mut out, &t.corners, fill);
    }
    out.push_str("</svg>\n");
    out
}

/// One colour per segment of a stretched contact system.
pub fn render_segments(s: &SegmentContactSystem, spec: &RenderSpec) -> String {
    let f = Frame::new(&s.points, spec);
    let mut out = open(spec);
    for (i, (a, b)) in s.segments().into_iter().enumerate() {
        line(&mut out, &f, a, b, color(spec, i), spec.stroke_width);
    }
    vertices(&mut out, &f, &s.points, spec);
    out.push_str("</svg>\n");
    out
}
