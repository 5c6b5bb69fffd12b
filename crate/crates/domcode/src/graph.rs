//! Finite simple graphs with precomputed closed neighborhoods.
//!
//! Vertices are internal indices `0..n`; every vertex additionally carries a
//! [`Label`] — the public, human-facing name used in files, JSON and the CLI.
//! Complete graphs are labeled `1..=q`, products carry coordinate tuples with
//! 1-based components, grid windows carry their (possibly negative) plane
//! coordinates, and graphs loaded from edge-list files keep the file's ids.

use std::collections::HashMap;
use std::fmt;

use crate::bitset::VertexSet;
use crate::{Error, Result};

/// Hard cap on vertex counts so closed neighborhoods stay desk-sized bitsets.
/// Every target in this crate (products up to `K_12×K_12`, `K_16³`, king
/// windows up to radius 31) fits comfortably.
pub const VERTEX_CAP: usize = 4096;

/// Public name of a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Scalar name: `1..=q` for complete graphs, the file's own id for
    /// graphs loaded from edge lists.
    Num(i64),
    /// Coordinate tuple: 1-based factor coordinates for products and Hamming
    /// graphs, plane coordinates for grid windows.
    Tuple(Vec<i64>),
}

impl Label {
    pub fn pair(i: i64, j: i64) -> Label {
        Label::Tuple(vec![i, j])
    }

    pub fn triple(i: i64, j: i64, k: i64) -> Label {
        Label::Tuple(vec![i, j, k])
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Num(x) => write!(f, "{x}"),
            Label::Tuple(xs) => {
                write!(f, "(")?;
                for (idx, x) in xs.iter().enumerate() {
                    if idx > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An immutable finite simple graph.
///
/// Invariants: `v ∈ closed[v]` for every vertex, and membership is symmetric
/// (`u ∈ closed[v] ⟺ v ∈ closed[u]`). Constructors guarantee both; edge-list
/// input is validated.
#[derive(Clone)]
pub struct Graph {
    name: String,
    n: usize,
    closed: Vec<VertexSet>,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl Graph {
    fn from_closed(name: String, closed: Vec<VertexSet>, labels: Vec<Label>) -> Result<Graph> {
        let n = closed.len();
        if n > VERTEX_CAP {
            return Err(Error::TooLarge { n, cap: VERTEX_CAP });
        }
        debug_assert_eq!(labels.len(), n);
        let index = labels
            .iter()
            .enumerate()
            .map(|(v, l)| (l.clone(), v))
            .collect();
        let g = Graph {
            name,
            n,
            closed,
            labels,
            index,
        };
        debug_assert!(g.neighborhoods_consistent());
        Ok(g)
    }

    /// Builds a graph from an edge list over vertices `0..n`.
    ///
    /// Rejects self-loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges(
        name: impl Into<String>,
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<Graph> {
        if n > VERTEX_CAP {
            return Err(Error::TooLarge { n, cap: VERTEX_CAP });
        }
        let mut closed: Vec<VertexSet> = (0..n)
            .map(|v| VertexSet::with_members(n, [v]))
            .collect();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("self-loop at {u}")));
            }
            if closed[u].contains(v) {
                return Err(Error::InvalidParameter(format!("duplicate edge ({u},{v})")));
            }
            closed[u].insert(v);
            closed[v].insert(u);
        }
        let labels = (0..n).map(|v| Label::Num(v as i64)).collect();
        Graph::from_closed(name.into(), closed, labels)
    }

    /// Complete graph `K_q`, vertices labeled `1..=q`.
    pub fn complete(q: usize) -> Result<Graph> {
        if q == 0 {
            return Err(Error::InvalidParameter(
                "complete graph needs at least one vertex".into(),
            ));
        }
        if q > VERTEX_CAP {
            return Err(Error::TooLarge { n: q, cap: VERTEX_CAP });
        }
        let closed = vec![VertexSet::full(q); q];
        let labels = (1..=q as i64).map(Label::Num).collect();
        Graph::from_closed(format!("K({q})"), closed, labels)
    }

    /// Cartesian product: `(u1,u2) ~ (v1,v2)` iff the vertices agree in one
    /// factor and are adjacent in the other.
    pub fn cartesian_product(a: &Graph, b: &Graph) -> Result<Graph> {
        Graph::product(a, b, "cart", |au, av, bu, bv, aadj, badj| {
            (au == av && badj(bu, bv)) || (bu == bv && aadj(au, av))
        })
    }

    /// Direct (tensor) product: `(u1,u2) ~ (v1,v2)` iff the vertices are
    /// adjacent in both factors.
    pub fn direct_product(a: &Graph, b: &Graph) -> Result<Graph> {
        Graph::product(a, b, "direct", |au, av, bu, bv, aadj, badj| {
            aadj(au, av) && badj(bu, bv)
        })
    }

    fn product(
        a: &Graph,
        b: &Graph,
        kind: &str,
        rule: impl Fn(usize, usize, usize, usize, &dyn Fn(usize, usize) -> bool, &dyn Fn(usize, usize) -> bool) -> bool,
    ) -> Result<Graph> {
        if a.n == 0 || b.n == 0 {
            return Err(Error::InvalidParameter("product of an empty graph".into()));
        }
        let n = a
            .n
            .checked_mul(b.n)
            .filter(|&n| n <= VERTEX_CAP)
            .ok_or(Error::TooLarge { n: usize::MAX, cap: VERTEX_CAP })?;
        let id = |ia: usize, ib: usize| ia * b.n + ib;
        let aadj = |u: usize, v: usize| u != v && a.closed[u].contains(v);
        let badj = |u: usize, v: usize| u != v && b.closed[u].contains(v);
        let mut closed: Vec<VertexSet> = (0..n)
            .map(|v| VertexSet::with_members(n, [v]))
            .collect();
        for au in 0..a.n {
            for bu in 0..b.n {
                for av in 0..a.n {
                    for bv in 0..b.n {
                        if (au, bu) < (av, bv) && rule(au, av, bu, bv, &aadj, &badj) {
                            closed[id(au, bu)].insert(id(av, bv));
                            closed[id(av, bv)].insert(id(au, bu));
                        }
                    }
                }
            }
        }
        let labels = (0..a.n)
            .flat_map(|ia| (0..b.n).map(move |ib| (ia, ib)))
            .map(|(ia, ib)| compose_labels(&a.labels[ia], &b.labels[ib]))
            .collect();
        Graph::from_closed(format!("{kind}({},{})", a.name, b.name), closed, labels)
    }

    /// Complement: adjacency inverted on distinct pairs, labels preserved.
    pub fn complement(g: &Graph) -> Result<Graph> {
        let closed = (0..g.n)
            .map(|v| {
                let mut s = g.closed[v].complement();
                s.insert(v);
                s
            })
            .collect();
        Graph::from_closed(format!("comp({})", g.name), closed, g.labels.clone())
    }

    /// Hamming graph `K_q³`: vertices `(i,j,k)` with `1 ≤ i,j,k ≤ q`,
    /// adjacent iff they differ in exactly one coordinate.
    pub fn hamming_cube(q: usize) -> Result<Graph> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!(
                "hamming cube needs q >= 2, got {q}"
            )));
        }
        let kq = Graph::complete(q)?;
        let g = Graph::cartesian_product(&Graph::cartesian_product(&kq, &kq)?, &kq)?;
        Graph::from_closed(format!("cube({q})"), g.closed, g.labels)
    }

    /// King-grid window: integer points with `|x|,|y| ≤ n`, adjacent at
    /// Chebyshev distance one. Labels carry the plane coordinates.
    pub fn king_window(n: usize) -> Result<Graph> {
        let offsets: &[(i64, i64)] = &[
            (-1, -1),
            (-1, 0),
            (-1, 1),
            (0, -1),
            (0, 1),
            (1, -1),
            (1, 0),
            (1, 1),
        ];
        Graph::grid_window("king", n, offsets)
    }

    /// Triangular-grid window: vertices `v(i,j)` with `|i|,|j| ≤ n`; the six
    /// neighbors of `v(i,j)` are the offsets `(±1,0)`, `(0,±1)`, `(1,−1)`,
    /// `(−1,1)` that stay inside the window. These offsets are exactly the
    /// distance-one pairs under the plane embedding
    /// `v(i,j) = i·(1,0) + j·(1/2, √3/2)`.
    pub fn triangular_window(n: usize) -> Result<Graph> {
        let offsets: &[(i64, i64)] = &[(-1, 0), (1, 0), (0, -1), (0, 1), (1, -1), (-1, 1)];
        Graph::grid_window("tri", n, offsets)
    }

    fn grid_window(kind: &str, n: usize, offsets: &[(i64, i64)]) -> Result<Graph> {
        let side = 2 * n + 1;
        let total = side * side;
        if total > VERTEX_CAP {
            return Err(Error::TooLarge { n: total, cap: VERTEX_CAP });
        }
        let r = n as i64;
        let id = |x: i64, y: i64| ((x + r) as usize) * side + (y + r) as usize;
        let mut closed: Vec<VertexSet> = (0..total)
            .map(|v| VertexSet::with_members(total, [v]))
            .collect();
        let mut labels = Vec::with_capacity(total);
        for x in -r..=r {
            for y in -r..=r {
                labels.push(Label::pair(x, y));
                for &(dx, dy) in offsets {
                    let (nx, ny) = (x + dx, y + dy);
                    if nx.abs() <= r && ny.abs() <= r {
                        closed[id(x, y)].insert(id(nx, ny));
                    }
                }
            }
        }
        Graph::from_closed(format!("{kind}({n})"), closed, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_nbhd(&self, v: usize) -> &VertexSet {
        &self.closed[v]
    }

    /// Open degree `|N(v)| = |N[v]| − 1`.
    pub fn open_degree(&self, v: usize) -> usize {
        self.closed[v].len() - 1
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.closed[u].contains(v)
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    /// Internal index of the vertex with the given public name.
    pub fn vertex(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Edges as `(u,v)` pairs with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.closed[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(self.n);
        let mut frontier = vec![0usize];
        seen.insert(0);
        while let Some(u) = frontier.pop() {
            for v in self.closed[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    frontier.push(v);
                }
            }
        }
        seen.len() == self.n
    }

    fn neighborhoods_consistent(&self) -> bool {
        (0..self.n).all(|v| {
            self.closed[v].contains(v)
                && self.closed[v].universe() == self.n
                && self.closed[v].iter().all(|u| self.closed[u].contains(v))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, n={}, m={})", self.name, self.n, self.edge_count())
    }
}

fn compose_labels(a: &Label, b: &Label) -> Label {
    let mut xs = match a {
        Label::Num(x) => vec![*x],
        Label::Tuple(xs) => xs.clone(),
    };
    match b {
        Label::Num(y) => xs.push(*y),
        Label::Tuple(ys) => xs.extend_from_slice(ys),
    }
    Label::Tuple(xs)
}

/// A vertex subset tied to a named graph.
///
/// May be empty at the type level; the verifiers reject empty codes, since a
/// code is by definition a nonempty set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Code {
    graph_name: String,
    members: VertexSet,
}

impl Code {
    /// Code on `g` containing the given vertex indices.
    pub fn new<I: IntoIterator<Item = usize>>(g: &Graph, members: I) -> Result<Code> {
        let mut set = VertexSet::empty(g.n());
        for v in members {
            if v >= g.n() {
                return Err(Error::InvalidParameter(format!(
                    "vertex {v} out of range for {}",
                    g.name()
                )));
            }
            set.insert(v);
        }
        Ok(Code {
            graph_name: g.name().to_string(),
            members: set,
        })
    }

    /// Code on `g` identified by vertex labels.
    pub fn from_labels<'a, I: IntoIterator<Item = &'a Label>>(g: &Graph, labels: I) -> Result<Code> {
        let ids = labels
            .into_iter()
            .map(|l| {
                g.vertex(l).ok_or_else(|| {
                    Error::InvalidParameter(format!("no vertex {l} in {}", g.name()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Code::new(g, ids)
    }

    pub fn from_set(g: &Graph, members: VertexSet) -> Result<Code> {
        if members.universe() != g.n() {
            return Err(Error::Mismatch {
                code_graph: format!("universe {}", members.universe()),
                graph: g.name().to_string(),
            });
        }
        Ok(Code {
            graph_name: g.name().to_string(),
            members,
        })
    }

    /// The whole vertex set of `g` as a code.
    pub fn all(g: &Graph) -> Code {
        Code {
            graph_name: g.name().to_string(),
            members: VertexSet::full(g.n()),
        }
    }

    pub fn graph_name(&self) -> &str {
        &self.graph_name
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(v)
    }

    /// Errors unless this code belongs to `g` (same name and vertex count).
    pub fn ensure_belongs(&self, g: &Graph) -> Result<()> {
        if self.graph_name != g.name() || self.members.universe() != g.n() {
            return Err(Error::Mismatch {
                code_graph: self.graph_name.clone(),
                graph: g.name().to_string(),
            });
        }
        Ok(())
    }

    /// Member labels in vertex-index order.
    pub fn labels<'g>(&self, g: &'g Graph) -> Vec<&'g Label> {
        self.members.iter().map(|v| g.label(v)).collect()
    }
}

/// The I-set `I(C; v) = N[v] ∩ C`: the codewords covering `v`.
pub fn iset(g: &Graph, code: &Code, v: usize) -> VertexSet {
    g.closed_nbhd(v).intersection(code.members())
}

/// The pipe along `axis` (1, 2 or 3) through the fixed coordinates `(a, b)`
/// of the other two axes, in axis order. Requires a graph with 3-tuple
/// labels, e.g. one built by [`Graph::hamming_cube`].
pub fn pipe(g: &Graph, axis: u8, a: i64, b: i64) -> Result<VertexSet> {
    tuple_slice(g, axis, move |coords, axis| {
        let fixed: Vec<i64> = (0..3).filter(|&i| i != axis).map(|i| coords[i]).collect();
        fixed == [a, b]
    })
}

/// The layer fixing `axis` (1, 2 or 3) at coordinate `j`.
pub fn layer(g: &Graph, axis: u8, j: i64) -> Result<VertexSet> {
    tuple_slice(g, axis, move |coords, axis| coords[axis] == j)
}

fn tuple_slice(
    g: &Graph,
    axis: u8,
    keep: impl Fn(&[i64], usize) -> bool,
) -> Result<VertexSet> {
    if !(1..=3).contains(&axis) {
        return Err(Error::InvalidParameter(format!("axis must be 1..=3, got {axis}")));
    }
    let axis = axis as usize - 1;
    let mut out = VertexSet::empty(g.n());
    for v in 0..g.n() {
        match g.label(v) {
            Label::Tuple(coords) if coords.len() == 3 => {
                if keep(coords, axis) {
                    out.insert(v);
                }
            }
            _ => {
                return Err(Error::InvalidParameter(format!(
                    "{} does not have 3-coordinate labels",
                    g.name()
                )))
            }
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidParameter(
            "no vertex matches the requested coordinates".into(),
        ));
    }
    Ok(out)
}
