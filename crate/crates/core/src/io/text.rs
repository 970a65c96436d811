//! Line-oriented text formats for graphs, assignments and arrangements.
//!
//! ```text
//! sltr-graph 1
//! vertices 4
//! rotation 0: 1 3 2
//! ...
//! suspensions 0 1 2
//! outer 0 1
//! flat 3 0          # vertex 3 is flat in the face left of 3->0
//! between 3 0.4
//! barycentric 3 0.2 0.3 0.5
//! poles 0 0 1 0 0.5 0.866
//! ```
//!
//! `#` starts a comment. Arrangements replace suspensions and assignment
//! lines by `segment` lines listing the vertices of one pseudosegment.

use std::collections::BTreeMap;
use std::fmt::Write;

use thiserror::Error;

use crate::faa::FlatAngleAssignment;
use crate::geometry::Point;
use crate::graph::{PlaneGraph, SuspendedGraph};
use crate::harmonic::HarmonicWeights;
use crate::stretcher::PseudosegmentArrangement;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {reason}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the file as a whole.
    pub line: usize,
    pub reason: String,
}

fn err(line: usize, reason: impl Into<String>) -> ParseError {
    ParseError {
        line,
        reason: reason.into(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphDocument {
    pub graph: SuspendedGraph,
    pub faa: Option<FlatAngleAssignment>,
    pub weights: Option<HarmonicWeights>,
    pub poles: Option<[Point; 3]>,
}

impl GraphDocument {
    pub fn new(graph: SuspendedGraph) -> Self {
        GraphDocument {
            graph,
            faa: None,
            weights: None,
            poles: None,
        }
    }
}

struct Line<'a> {
    number: usize,
    key: &'a str,
    rest: Vec<&'a str>,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        let mut words = content.split_whitespace();
        let key = words.next()?;
        Some(Line {
            number: i + 1,
            key,
            rest: words.collect(),
        })
    })
}

fn num<T: std::str::FromStr>(line: usize, word: &str) -> Result<T, ParseError> {
    word.parse()
        .map_err(|_| err(line, format!("cannot read number `{word}`")))
}

fn nums<T: std::str::FromStr>(l: &Line) -> Result<Vec<T>, ParseError> {
    l.rest.iter().map(|w| num(l.number, w)).collect()
}

fn exactly<T: std::str::FromStr + Copy, const N: usize>(l: &Line) -> Result<[T; N], ParseError> {
    let v: Vec<T> = nums(l)?;
    v.try_into()
        .map_err(|v: Vec<T>| err(l.number, format!("`{}` takes {N} values, got {}", l.key, v.len())))
}

fn header<'a>(it: &mut impl Iterator<Item = Line<'a>>, kind: &str) -> Result<(), ParseError> {
    let Some(l) = it.next() else {
        return Err(err(0, "empty file"));
    };
    if l.key != kind {
        return Err(err(l.number, format!("expected `{kind}` header, found `{}`", l.key)));
    }
    let [version]: [u32; 1] = exactly(&l)?;
    if version != FORMAT_VERSION {
        return Err(err(l.number, format!("unsupported format version {version}")));
    }
    Ok(())
}

/// Vertex count, rotation and outer dart shared by graphs and arrangements.
#[derive(Default)]
struct Embedding {
    vertices: Option<(usize, usize)>,
    rotation: BTreeMap<usize, Vec<usize>>,
    outer: Option<(usize, (usize, usize))>,
}

impl Embedding {
    /// Consumes the line if it belongs to the embedding.
    fn take(&mut self, l: &Line) -> Result<bool, ParseError> {
        match l.key {
            "vertices" => {
                let [n]: [usize; 1] = exactly(l)?;
                self.vertices = Some((l.number, n));
            }
            "rotation" => {
                let (Some(head), tail) = (l.rest.first(), &l.rest[1.min(l.rest.len())..]) else {
                    return Err(err(l.number, "rotation needs a vertex"));
                };
                let v: usize = num(l.number, head.trim_end_matches(':'))?;
                let nb = tail
                    .iter()
                    .map(|w| num(l.number, w))
                    .collect::<Result<Vec<usize>, _>>()?;
                if self.rotation.insert(v, nb).is_some() {
                    return Err(err(l.number, format!("second rotation for vertex {v}")));
                }
            }
            "outer" => {
                let [a, b]: [usize; 2] = exactly(l)?;
                self.outer = Some((l.number, (a, b)));
            }
            _ => return Ok(false),
        }
        Ok(true)
    }

    fn build(self) -> Result<PlaneGraph, ParseError> {
        let (line, n) = self.vertices.ok_or_else(|| err(0, "missing `vertices`"))?;
        let mut rotation = Vec::with_capacity(n);
        for v in 0..n {
            let nb = self
                .rotation
                .get(&v)
                .ok_or_else(|| err(0, format!("vertex {v} has no rotation (file truncated?)")))?;
            rotation.push(nb.clone());
        }
        if let Some(&v) = self.rotation.keys().find(|&&v| v >= n) {
            return Err(err(line, format!("rotation given for vertex {v} of {n}")));
        }
        let (oline, hint) = self.outer.ok_or_else(|| err(0, "missing `outer`"))?;
        PlaneGraph::new(rotation, hint).map_err(|e| err(oline, e.to_string()))
    }
}

fn write_embedding(out: &mut String, g: &PlaneGraph) {
    writeln!(out, "vertices {}", g.vertex_count()).unwrap();
    for v in 0..g.vertex_count() {
        let nb: Vec<String> = g.neighbors(v).iter().map(|u| u.to_string()).collect();
        writeln!(out, "rotation {v}: {}", nb.join(" ")).unwrap();
    }
}

fn outer_dart(g: &PlaneGraph) -> (usize, usize) {
    let d = g.face_darts(g.outer_face())[0];
    (g.tail(d), g.head(d))
}

/// Face left of `v -> u`, as written by `flat v u`.
fn flat_face(g: &PlaneGraph, l: &Line) -> Result<(usize, usize), ParseError> {
    let [v, u]: [usize; 2] = exactly(l)?;
    let d = g
        .dart(v, u)
        .ok_or_else(|| err(l.number, format!("{v}-{u} is not an edge")))?;
    Ok((v, g.left_face(d)))
}

fn write_flats(out: &mut String, g: &PlaneGraph, faa: &FlatAngleAssignment) {
    for (v, f) in faa.pairs() {
        let d = (0..g.degree(v))
            .map(|k| g.dart_at(v, k))
            .find(|&d| g.left_face(d) == f)
            .expect("assigned face is incident");
        writeln!(out, "flat {v} {}", g.head(d)).unwrap();
    }
}

fn assignment(pairs: Vec<(usize, usize)>, line: usize) -> Result<FlatAngleAssignment, ParseError> {
    FlatAngleAssignment::from_pairs(pairs).map_err(|e| err(line, e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<GraphDocument, ParseError> {
    let mut it = lines(text);
    header(&mut it, "sltr-graph")?;
    let mut emb = Embedding::default();
    let mut suspensions = None;
    let mut flats: Vec<Line> = Vec::new();
    let mut weights: Option<HarmonicWeights> = None;
    let mut poles = None;
    for l in it {
        if emb.take(&l)? {
            continue;
        }
        match l.key {
            "suspensions" => suspensions = Some((l.number, exactly::<usize, 3>(&l)?)),
            "flat" => flats.push(l),
            "between" => {
                let [v, w] = l.rest[..] else {
                    return Err(err(l.number, "`between` takes a vertex and a weight"));
                };
                let (v, w): (usize, f64) = (num(l.number, v)?, num(l.number, w)?);
                weights.get_or_insert_with(Default::default).between.insert(v, w);
            }
            "barycentric" => {
                let Some((v, ws)) = l.rest.split_first() else {
                    return Err(err(l.number, "`barycentric` needs a vertex"));
                };
                let v: usize = num(l.number, v)?;
                let ws = ws.iter().map(|w| num(l.number, w)).collect::<Result<Vec<f64>, _>>()?;
                weights.get_or_insert_with(Default::default).barycentric.insert(v, ws);
            }
            "poles" => {
                let c: [f64; 6] = exactly(&l)?;
                poles = Some([0, 1, 2].map(|i| Point::new(c[2 * i], c[2 * i + 1])));
            }
            other => return Err(err(l.number, format!("unknown key `{other}`"))),
        }
    }
    let g = emb.build()?;
    let (sline, s) = suspensions.ok_or_else(|| err(0, "missing `suspensions`"))?;
    let faa = if flats.is_empty() {
        None
    } else {
        let pairs = flats
            .iter()
            .map(|l| flat_face(&g, l))
            .collect::<Result<Vec<_>, _>>()?;
        Some(assignment(pairs, flats[0].number)?)
    };
    let graph = SuspendedGraph::new(g, s).map_err(|e| err(sline, e.to_string()))?;
    Ok(GraphDocument {
        graph,
        faa,
        weights,
        poles,
    })
}

pub fn serialize_graph(doc: &GraphDocument) -> String {
    let g = doc.graph.graph();
    let mut out = format!("sltr-graph {FORMAT_VERSION}\n");
    write_embedding(&mut out, g);
    let [a, b, c] = doc.graph.suspensions();
    writeln!(out, "suspensions {a} {b} {c}").unwrap();
    let (x, y) = outer_dart(g);
    writeln!(out, "outer {x} {y}").unwrap();
    if let Some(faa) = &doc.faa {
        write_flats(&mut out, g, faa);
    }
    if let Some(w) = &doc.weights {
        for (v, l) in &w.between {
            writeln!(out, "between {v} {l}").unwrap();
        }
        for (v, ws) in &w.barycentric {
            let ws: Vec<String> = ws.iter().map(|x| x.to_string()).collect();
            writeln!(out, "barycentric {v} {}", ws.join(" ")).unwrap();
        }
    }
    if let Some(p) = &doc.poles {
        writeln!(
            out,
            "poles {} {} {} {} {} {}",
            p[0].x, p[0].y, p[1].x, p[1].y, p[2].x, p[2].y
        )
        .unwrap();
    }
    out
}

/// A standalone assignment file: a header and `flat` lines.
pub fn parse_faa(text: &str, g: &PlaneGraph) -> Result<FlatAngleAssignment, ParseError> {
    let mut it = lines(text);
    header(&mut it, "sltr-faa")?;
    let mut pairs = Vec::new();
    for l in it {
        if l.key != "flat" {
            return Err(err(l.number, format!("unknown key `{}`", l.key)));
        }
        pairs.push(flat_face(g, &l)?);
    }
    assignment(pairs, 0)
}

pub fn serialize_faa(faa: &FlatAngleAssignment, g: &PlaneGraph) -> String {
    let mut out = format!("sltr-faa {FORMAT_VERSION}\n");
    write_flats(&mut out, g, faa);
    out
}

pub fn parse_arrangement(text: &str) -> Result<PseudosegmentArrangement, ParseError> {
    let mut it = lines(text);
    header(&mut it, "sltr-arrangement")?;
    let mut emb = Embedding::default();
    let mut paths = Vec::new();
    for l in it {
        if emb.take(&l)? {
            continue;
        }
        match l.key {
            "segment" => paths.push(nums::<usize>(&l)?),
            other => return Err(err(l.number, format!("unknown key `{other}`"))),
        }
    }
    let g = emb.build()?;
    PseudosegmentArrangement::from_paths(g, paths).map_err(|e| err(0, e.to_string()))
}

pub fn serialize_arrangement(arr: &PseudosegmentArrangement) -> String {
    let g = arr.graph();
    let mut out = format!("sltr-arrangement {FORMAT_VERSION}\n");
    write_embedding(&mut out, g);
    let (x, y) = outer_dart(g);
    writeln!(out, "outer {x} {y}").unwrap();
    for s in arr.family().segments() {
        let vs: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
        writeln!(out, "segment {}", vs.join(" ")).unwrap();
    }
    out
}
