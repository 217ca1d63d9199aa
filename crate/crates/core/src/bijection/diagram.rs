//! The Hasse diagram of a Baxter permutation, on a grid with doubled
//! coordinates: black points sit at even coordinates, white points at odd
//! ones, so every coordinate is an exact integer.

use std::fmt;

use crate::perm::{Pattern, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// The point `(i, π(i))`, with 1-based `i`.
    Black(usize),
    /// The white point of ascent `a` of the extended permutation, `0 <= a <= n`.
    White(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Point {
    pub x: i64,
    pub y: i64,
    pub kind: PointKind,
}

/// Black and white points sorted by abscissa, with the covering relation of
/// the product order as edges `(lower, upper)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedDiagram {
    pub points: Vec<Point>,
    pub edges: Vec<(usize, usize)>,
}

/// A broken property of an embedded diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    RepeatedCoordinate { a: usize, b: usize },
    Monochromatic { edge: (usize, usize) },
    BlackDegree { point: usize, indegree: usize, outdegree: usize },
    NotNorthEast { edge: (usize, usize) },
    Crossing { first: (usize, usize), second: (usize, usize) },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::RepeatedCoordinate { a, b } => write!(f, "points {a} and {b} share a coordinate"),
            Defect::Monochromatic { edge } => write!(f, "edge {edge:?} joins two points of the same colour"),
            Defect::BlackDegree { point, indegree, outdegree } => {
                write!(f, "black point {point} has indegree {indegree} and outdegree {outdegree}")
            }
            Defect::NotNorthEast { edge } => write!(f, "edge {edge:?} does not point north-east"),
            Defect::Crossing { first, second } => write!(f, "edges {first:?} and {second:?} cross"),
        }
    }
}

impl Point {
    pub fn is_black(&self) -> bool {
        matches!(self.kind, PointKind::Black(_))
    }

    fn below(&self, other: &Point) -> bool {
        self.x < other.x && self.y < other.y
    }
}

/// Black points of `p` together with the white points of its ascents. The
/// permutation is extended by `π(0) = 0` and `π(n + 1) = n + 1`.
pub fn diagram_points(p: &Permutation) -> Vec<Point> {
    let n = p.len();
    let ext = |i: usize| if i == 0 { 0 } else if i == n + 1 { n + 1 } else { p.get(i) };
    let mut points = Vec::with_capacity(2 * n + 2);
    for a in 0..=n {
        if a >= 1 {
            points.push(Point { x: 2 * a as i64, y: 2 * p.get(a) as i64, kind: PointKind::Black(a) });
        }
        if ext(a) < ext(a + 1) {
            let level = (0..=a).map(ext).filter(|&v| v < ext(a + 1)).max().unwrap();
            points.push(Point { x: 2 * a as i64 + 1, y: 2 * level as i64 + 1, kind: PointKind::White(a) });
        }
    }
    points
}

/// Covering pairs of the product order, for points sorted by abscissa with
/// distinct ordinates. For each point, the candidates above it are scanned
/// left to right; one is a cover exactly when it lies below every earlier
/// candidate.
pub fn hasse_covers(points: &[Point]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, v) in points.iter().enumerate() {
        let mut lowest = i64::MAX;
        for (j, u) in points.iter().enumerate().skip(i + 1) {
            if u.y > v.y && u.y < lowest {
                edges.push((i, j));
                lowest = u.y;
            }
        }
    }
    edges
}

/// Covering pairs straight from the definition.
pub fn hasse_covers_naive(points: &[Point]) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, v) in points.iter().enumerate() {
        for (j, u) in points.iter().enumerate() {
            if v.below(u) && !points.iter().any(|w| v.below(w) && w.below(u)) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Whether two segments meet anywhere other than at a shared endpoint.
/// Segments sharing an endpoint only count when they overlap.
fn segments_cross(p1: (i64, i64), p2: (i64, i64), q1: (i64, i64), q2: (i64, i64)) -> bool {
    let shared = [p1, p2].iter().any(|p| *p == q1 || *p == q2);
    let d1 = cross(q1, q2, p1);
    let d2 = cross(q1, q2, p2);
    let d3 = cross(p1, p2, q1);
    let d4 = cross(p1, p2, q2);
    if shared {
        // collinear and pointing the same way from the shared point
        return d1 == 0 && d2 == 0 && {
            let (o, a, b) = if p1 == q1 {
                (p1, p2, q2)
            } else if p1 == q2 {
                (p1, p2, q1)
            } else if p2 == q1 {
                (p2, p1, q2)
            } else {
                (p2, p1, q1)
            };
            (a.0 - o.0) * (b.0 - o.0) + (a.1 - o.1) * (b.1 - o.1) > 0
        };
    }
    let on = |o: (i64, i64), a: (i64, i64), p: (i64, i64)| {
        p.0 >= o.0.min(a.0) && p.0 <= o.0.max(a.0) && p.1 >= o.1.min(a.1) && p.1 <= o.1.max(a.1)
    };
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && on(q1, q2, p1)) || (d2 == 0 && on(q1, q2, p2)) || (d3 == 0 && on(p1, p2, q1)) || (d4 == 0 && on(p1, p2, q2))
}

impl EmbeddedDiagram {
    pub fn from_points(points: Vec<Point>) -> Self {
        let edges = hasse_covers(&points);
        EmbeddedDiagram { points, edges }
    }

    pub fn black_count(&self) -> usize {
        self.points.iter().filter(|p| p.is_black()).count()
    }

    pub fn white_count(&self) -> usize {
        self.points.len() - self.black_count()
    }

    /// First pair of edges whose straight segments cross.
    pub fn find_crossing(&self) -> Option<((usize, usize), (usize, usize))> {
        let at = |i: usize| (self.points[i].x, self.points[i].y);
        for (k, &a) in self.edges.iter().enumerate() {
            for &b in &self.edges[k + 1..] {
                if segments_cross(at(a.0), at(a.1), at(b.0), at(b.1)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Crossing test through patterns: the standardized point set contains
    /// 2 1 3̄ 5 4 exactly when some pair of covering segments cross.
    pub fn crossing_by_pattern(&self) -> bool {
        let ys: Vec<i64> = self.points.iter().map(|p| p.y).collect();
        !Permutation::standardize(&ys).avoids(&Pattern::hasse_crossing())
    }

    pub fn defects(&self) -> Vec<Defect> {
        let mut out = Vec::new();
        for a in 0..self.points.len() {
            for b in a + 1..self.points.len() {
                if self.points[a].x == self.points[b].x || self.points[a].y == self.points[b].y {
                    out.push(Defect::RepeatedCoordinate { a, b });
                }
            }
        }
        let mut indeg = vec![0; self.points.len()];
        let mut outdeg = vec![0; self.points.len()];
        for &(lo, hi) in &self.edges {
            if self.points[lo].is_black() == self.points[hi].is_black() {
                out.push(Defect::Monochromatic { edge: (lo, hi) });
            }
            if !self.points[lo].below(&self.points[hi]) {
                out.push(Defect::NotNorthEast { edge: (lo, hi) });
            }
            outdeg[lo] += 1;
            indeg[hi] += 1;
        }
        for (point, p) in self.points.iter().enumerate() {
            if p.is_black() && (indeg[point] != 1 || outdeg[point] != 1) {
                out.push(Defect::BlackDegree { point, indegree: indeg[point], outdegree: outdeg[point] });
            }
        }
        if let Some((first, second)) = self.find_crossing() {
            out.push(Defect::Crossing { first, second });
        }
        out
    }
}
