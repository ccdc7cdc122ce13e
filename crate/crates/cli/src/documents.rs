//! JSON documents for scenes, graphs and clique results. Rationals are
//! always written as `"num/den"` strings in lowest terms.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use polyclique::constructions::InstanceScene;
use polyclique::geom::{validate_polygon, DirectionSet, Point, Rational, Segment};
use polyclique::{Graph, Scene, SegmentScene};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SceneKind {
    Polygons,
    Segments,
}

/// A rational coordinate: the string `"num/den"` or `"num"`, or a JSON
/// integer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coord {
    Text(String),
    Int(i64),
}

impl Coord {
    pub fn of(r: &Rational) -> Coord {
        Coord::Text(format!("{}/{}", r.numer(), r.denom()))
    }

    pub fn value(&self) -> Result<Rational, String> {
        match self {
            Coord::Int(v) => Ok(Rational::from_integer(BigInt::from(*v))),
            Coord::Text(s) => parse_rational(s),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let int = |t: &str| BigInt::from_str(t.trim()).map_err(|_| format!("malformed rational {s:?}"));
    match s.split_once('/') {
        None => Ok(Rational::from_integer(int(s)?)),
        Some((n, d)) => {
            let den = int(d)?;
            if den == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(int(n)?, den))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<[Coord; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<[[Coord; 2]; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SceneDocument {
    pub kind: SceneKind,
    pub directions: Vec<[i64; 2]>,
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub labels: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub n: usize,
    pub k: usize,
    pub directions_used: usize,
    pub method: String,
    pub clique_count: usize,
    /// `n^k` in decimal.
    pub bound: String,
    pub cliques: Vec<Vec<String>>,
    pub elapsed_ms: u64,
}

/// A scene document whose numbers parsed but whose geometry is not yet
/// checked.
pub struct RawScene {
    pub kind: SceneKind,
    pub dirs: DirectionSet,
    pub items: Vec<(String, Vec<Point>)>,
}

/// Geometry that failed validation: the item index, its label and why.
#[derive(Debug)]
pub struct ItemError {
    pub index: usize,
    pub label: String,
    pub error: polyclique::Error,
}

impl std::fmt::Display for ItemError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "item {} ({:?}): {}", self.index, self.label, self.error)
    }
}

fn point(c: &[Coord; 2]) -> Result<Point, String> {
    Ok(Point::new(c[0].value()?, c[1].value()?))
}

fn coords(p: &Point) -> [Coord; 2] {
    [Coord::of(&p.x), Coord::of(&p.y)]
}

pub fn parse_document(text: &str) -> Result<SceneDocument, String> {
    serde_json::from_str(text).map_err(|e| format!("invalid scene document: {e}"))
}

impl SceneDocument {
    pub fn from_scene(scene: &InstanceScene) -> SceneDocument {
        let dirs = |d: &DirectionSet| d.iter().map(|d| [d.a(), d.b()]).collect();
        match scene {
            InstanceScene::Polygons(s) => SceneDocument {
                kind: SceneKind::Polygons,
                directions: dirs(s.dirs()),
                items: s
                    .polygons()
                    .iter()
                    .map(|(label, p)| Item {
                        label: label.clone(),
                        vertices: Some(p.vertices().iter().map(coords).collect()),
                        endpoints: None,
                    })
                    .collect(),
            },
            InstanceScene::Segments(s) => SceneDocument {
                kind: SceneKind::Segments,
                directions: dirs(s.dirs()),
                items: s
                    .segments()
                    .iter()
                    .map(|(label, seg)| Item {
                        label: label.clone(),
                        vertices: None,
                        endpoints: Some([coords(seg.start()), coords(seg.end())]),
                    })
                    .collect(),
            },
        }
    }

    /// Parses directions and coordinates without checking geometry.
    pub fn to_raw(&self) -> Result<RawScene, String> {
        let dirs = DirectionSet::from_pairs(
            &self.directions.iter().map(|d| (d[0], d[1])).collect::<Vec<_>>(),
        )
        .map_err(|e| format!("directions: {e}"))?;
        let mut items = Vec::with_capacity(self.items.len());
        for (i, item) in self.items.iter().enumerate() {
            let at = |e: String| format!("item {i} ({:?}): {e}", item.label);
            let points = match (self.kind, &item.vertices, &item.endpoints) {
                (SceneKind::Polygons, Some(vs), None) => {
                    vs.iter().map(point).collect::<Result<Vec<_>, _>>().map_err(at)?
                }
                (SceneKind::Segments, None, Some(ends)) => {
                    vec![point(&ends[0]).map_err(at)?, point(&ends[1]).map_err(at)?]
                }
                (SceneKind::Polygons, _, _) => return Err(at("polygon items need exactly \"vertices\"".into())),
                (SceneKind::Segments, _, _) => return Err(at("segment items need exactly \"endpoints\"".into())),
            };
            items.push((item.label.clone(), points));
        }
        Ok(RawScene { kind: self.kind, dirs, items })
    }
}

impl RawScene {
    /// Validates every item against the declared directions.
    pub fn build(self) -> Result<InstanceScene, ItemError> {
        let fail = |index: usize, label: &str, error| ItemError { index, label: label.to_string(), error };
        let whole = |error| ItemError { index: 0, label: String::new(), error };
        match self.kind {
            SceneKind::Polygons => {
                let mut polygons = Vec::with_capacity(self.items.len());
                for (i, (label, pts)) in self.items.into_iter().enumerate() {
                    let p = validate_polygon(&pts, &self.dirs).map_err(|e| fail(i, &label, e))?;
                    polygons.push((label, p));
                }
                Scene::new(self.dirs, polygons).map(InstanceScene::Polygons).map_err(whole)
            }
            SceneKind::Segments => {
                let mut segments = Vec::with_capacity(self.items.len());
                for (i, (label, mut pts)) in self.items.into_iter().enumerate() {
                    let end = pts.pop().expect("two endpoints");
                    let start = pts.pop().expect("two endpoints");
                    let s = Segment::new(start, end, &self.dirs).map_err(|e| fail(i, &label, e))?;
                    segments.push((label, s));
                }
                SegmentScene::new(self.dirs, segments).map(InstanceScene::Segments).map_err(whole)
            }
        }
    }
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> GraphDocument {
        GraphDocument {
            labels: g.labels().to_vec(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_graph(&self) -> Result<Graph, String> {
        let n = self.labels.len();
        if let Some(e) = self.edges.iter().find(|e| e[0] >= n || e[1] >= n || e[0] == e[1]) {
            return Err(format!("invalid edge [{}, {}] for {n} vertices", e[0], e[1]));
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Ok(Graph::from_edges(self.labels.clone(), &edges))
    }
}

/// Cliques as label lists, each sorted, the whole list sorted.
pub fn labelled_cliques<'a>(labels: &[String], cliques: impl IntoIterator<Item = &'a Vec<usize>>) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = cliques
        .into_iter()
        .map(|c| {
            let mut names: Vec<String> = c.iter().map(|&i| labels[i].clone()).collect();
            names.sort();
            names
        })
        .collect();
    out.sort();
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
