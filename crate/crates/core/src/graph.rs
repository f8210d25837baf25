//! Finite simple graphs: adjacency, metric queries, parsing, generators.

use std::collections::VecDeque;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Sorted, duplicate-free list of vertex ids.
pub type VertexSet = Vec<Vertex>;

/// Hop distance between two vertices; `Infinite` for a disconnected pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => write!(f, "inf"),
        }
    }
}

/// Immutable finite simple undirected graph. Vertices are ids `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::SameVertex(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::InvalidInput(format!("duplicate edge {u} {v}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, x: Vertex) -> Result<&[Vertex]> {
        self.check_vertex(x)?;
        Ok(&self.adj[x])
    }

    pub fn degree(&self, x: Vertex) -> Result<usize> {
        self.check_vertex(x)?;
        Ok(self.adj[x].len())
    }

    pub fn is_edge(&self, x: Vertex, y: Vertex) -> bool {
        x < self.n && self.adj[x].binary_search(&y).is_ok()
    }

    fn check_vertex(&self, x: Vertex) -> Result<()> {
        if x >= self.n {
            Err(Error::VertexOutOfRange(x))
        } else {
            Ok(())
        }
    }

    /// BFS levels from `x`, truncated at `radius` when given.
    /// `levels[y] = None` means `d(x, y) > radius` (or unreachable).
    pub fn bfs_levels(&self, x: Vertex, radius: Option<usize>) -> Result<Vec<Option<usize>>> {
        self.check_vertex(x)?;
        let mut levels = vec![None; self.n];
        levels[x] = Some(0);
        let mut queue = VecDeque::from([x]);
        while let Some(u) = queue.pop_front() {
            let du = levels[u].unwrap();
            if radius.is_some_and(|r| du >= r) {
                continue;
            }
            for &v in &self.adj[u] {
                if levels[v].is_none() {
                    levels[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(levels)
    }

    pub fn distance(&self, x: Vertex, y: Vertex) -> Result<Distance> {
        self.check_vertex(y)?;
        let levels = self.bfs_levels(x, None)?;
        Ok(match levels[y] {
            Some(d) => Distance::Finite(d),
            None => Distance::Infinite,
        })
    }

    /// `{y : d(x, y) = r}`, sorted.
    pub fn sphere(&self, x: Vertex, r: usize) -> Result<VertexSet> {
        let levels = self.bfs_levels(x, Some(r))?;
        Ok((0..self.n).filter(|&y| levels[y] == Some(r)).collect())
    }

    /// `{y : d(x, y) <= r}`, sorted.
    pub fn ball(&self, x: Vertex, r: usize) -> Result<VertexSet> {
        let levels = self.bfs_levels(x, Some(r))?;
        Ok((0..self.n).filter(|&y| levels[y].is_some()).collect())
    }

    /// Common neighborhood `N_xy = S_1(x) ∩ S_1(y)`.
    pub fn common_neighbors(&self, x: Vertex, y: Vertex) -> Result<VertexSet> {
        self.check_vertex(x)?;
        self.check_vertex(y)?;
        if x == y {
            return Err(Error::SameVertex(x));
        }
        Ok(self.adj[x]
            .iter()
            .copied()
            .filter(|z| self.adj[y].binary_search(z).is_ok())
            .collect())
    }

    pub fn min_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        Ok(self.adj.iter().map(Vec::len).min().unwrap())
    }

    pub fn diameter(&self) -> Result<Distance> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut diam = 0usize;
        for x in 0..self.n {
            let levels = self.bfs_levels(x, None)?;
            for level in &levels {
                match level {
                    Some(d) => diam = diam.max(*d),
                    None => return Ok(Distance::Infinite),
                }
            }
        }
        Ok(Distance::Finite(diam))
    }
}

/// Parses the edge-list text format: `#` comments, blank lines ignored,
/// optional leading `n <count>` header, then one `<u> <v>` edge per line.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut seen_content = false;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut max_id = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(first) = tokens.next() else { continue };

        if first == "n" && !seen_content {
            let count = tokens.next().ok_or_else(|| Error::Parse {
                line: line_no,
                msg: "header 'n' missing vertex count".into(),
            })?;
            let count: usize = count.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("non-integer vertex count {count:?}"),
            })?;
            if tokens.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "trailing tokens after header".into(),
                });
            }
            declared_n = Some(count);
            seen_content = true;
            continue;
        }
        seen_content = true;

        let second = tokens.next().ok_or_else(|| Error::Parse {
            line: line_no,
            msg: "edge line needs two vertex ids".into(),
        })?;
        if tokens.next().is_some() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing tokens after edge".into(),
            });
        }
        let parse_id = |tok: &str| -> Result<Vertex> {
            tok.parse().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("non-integer vertex id {tok:?}"),
            })
        };
        let u = parse_id(first)?;
        let v = parse_id(second)?;
        if u == v {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        if let Some(n) = declared_n {
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("vertex id {} >= declared n {n}", u.max(v)),
                });
            }
        }
        let key = (u.min(v), u.max(v));
        if edges.contains(&key) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("duplicate edge {u} {v}"),
            });
        }
        edges.push(key);
        max_id = max_id.max(key.1);
    }

    let n = declared_n.unwrap_or(if edges.is_empty() { 0 } else { max_id + 1 });
    Graph::new(n, &edges)
}

/// Writes the edge-list format back out, edges sorted lexicographically.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Vertex ids of the degree-threshold sharpness construction.
///
/// Numbering: x = 0, y = 1, then z_0..z_{l-3}, then x_0..x_l,
/// then y_0..y_l, then v last.
#[derive(Debug, Clone, Copy)]
pub struct SharpnessIds {
    pub x: Vertex,
    pub y: Vertex,
    pub z_start: Vertex,
    pub x_start: Vertex,
    pub y_start: Vertex,
    pub v: Vertex,
    pub l: usize,
}

/// Builds the sharpness family member for `l >= 2`: a graph on `3l + 3`
/// vertices with minimum degree `2l` whose designated edge (x, y) has
/// Lin-Lu-Yau curvature `-1/(2l)`.
pub fn generate_sharpness(l: usize) -> Result<(Graph, SharpnessIds)> {
    if l < 2 {
        return Err(Error::InvalidParameter(format!("sharpness needs l >= 2, got {l}")));
    }
    let zcount = l - 2;
    let ids = SharpnessIds {
        x: 0,
        y: 1,
        z_start: 2,
        x_start: 2 + zcount,
        y_start: 2 + zcount + (l + 1),
        v: 3 * l + 2,
        l,
    };
    let n = 3 * l + 3;
    let zi = |i: usize| ids.z_start + i;
    let xi = |i: usize| ids.x_start + i;
    let yi = |i: usize| ids.y_start + i;

    let mut edges = vec![(ids.x, ids.y)];
    for i in 0..zcount {
        edges.push((ids.x, zi(i)));
        edges.push((ids.y, zi(i)));
        for j in 0..=l {
            edges.push((zi(i), xi(j)));
            edges.push((zi(i), yi(j)));
        }
    }
    for i in 0..=l {
        edges.push((ids.x, xi(i)));
        edges.push((ids.y, yi(i)));
        edges.push((ids.v, xi(i)));
        edges.push((ids.v, yi(i)));
        for j in (i + 1)..=l {
            edges.push((xi(i), xi(j)));
            edges.push((yi(i), yi(j)));
        }
    }
    Ok((Graph::new(n, &edges)?, ids))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Cycle,
    Complete,
    Path,
    Hypercube,
}

pub fn generate_standard(kind: StandardKind, size: usize) -> Result<Graph> {
    match kind {
        StandardKind::Cycle => {
            if size < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {size}")));
            }
            let edges: Vec<_> = (0..size).map(|i| (i, (i + 1) % size)).collect();
            Graph::new(size, &edges)
        }
        StandardKind::Complete => {
            if size < 1 {
                return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..size {
                for v in (u + 1)..size {
                    edges.push((u, v));
                }
            }
            Graph::new(size, &edges)
        }
        StandardKind::Path => {
            if size < 1 {
                return Err(Error::InvalidParameter("path needs n >= 1".into()));
            }
            let edges: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
            Graph::new(size, &edges)
        }
        StandardKind::Hypercube => {
            if size < 1 || size > 16 {
                return Err(Error::InvalidParameter(format!(
                    "hypercube dimension must be in 1..=16, got {size}"
                )));
            }
            let n = 1usize << size;
            let mut edges = Vec::new();
            for u in 0..n {
                for bit in 0..size {
                    let v = u ^ (1 << bit);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges)
        }
    }
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, &edges).unwrap()
}

/// Random simple graph on `n` vertices with minimum degree at least
/// `delta_min`, deterministic per seed.
///
/// Procedure: Erdős–Rényi draw at p = min(1, 1.1 (delta_min+1)/(n-1)),
/// then repair deficient vertices by adding edges to uniformly chosen
/// non-neighbors.
pub fn random_min_degree_graph(n: usize, delta_min: usize, seed: u64) -> Result<Graph> {
    if n == 0 || delta_min >= n {
        return Err(Error::Infeasible { n, delta_min });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = if n == 1 {
        0.0
    } else {
        (1.1 * (delta_min as f64 + 1.0) / (n as f64 - 1.0)).min(1.0)
    };
    let mut adj = vec![vec![false; n]; n];
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    let mut deg: Vec<usize> = adj.iter().map(|row| row.iter().filter(|&&b| b).count()).collect();
    for u in 0..n {
        while deg[u] < delta_min {
            let candidates: Vec<Vertex> =
                (0..n).filter(|&v| v != u && !adj[u][v]).collect();
            let v = candidates[rng.random_range(0..candidates.len())];
            adj[u][v] = true;
            adj[v][u] = true;
            deg[u] += 1;
            deg[v] += 1;
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if adj[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges)
}
