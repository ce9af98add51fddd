//! Labeled undirected multigraphs with a canonical sorted edge list.
//!
//! Vertices are labeled `1..=n`. Edges are stored once per unordered pair
//! `{u, v}` with `u <= v`, strictly sorted, with parallel edges folded into
//! a per-edge multiplicity. Loops (`u == v`) only arise from faithful
//! contraction and are never accepted from input.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::error::{Error, Result};

/// Unordered vertex pair, normalized so that `u <= v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

/// Position in a graph's sorted edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef(pub usize);

/// Bridge or cycle-edge. Loops and edges of multiplicity at least two are
/// always cycle-edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Bridge,
    CycleEdge,
}

/// What to do with loops and parallel edges produced by a contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Contraction {
    /// Drop loops and collapse parallel edges to multiplicity one.
    Simplify,
    /// Keep loops and multiplicities (deletion-contraction for Tutte).
    Faithful,
}

/// Old-label to new-label map returned by contractions and subgraph
/// extraction. Index 0 is unused.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    map: Vec<usize>,
    new_n: usize,
}

impl Relabeling {
    pub fn apply(&self, old: usize) -> usize {
        self.map[old]
    }

    pub fn old_n(&self) -> usize {
        self.map.len() - 1
    }

    pub fn new_n(&self) -> usize {
        self.new_n
    }

    /// All old labels that map to `new`, ascending.
    pub fn preimage(&self, new: usize) -> Vec<usize> {
        (1..self.map.len()).filter(|&x| self.map[x] == new).collect()
    }
}

/// Closed walk `v1, v2, ..., vk, v1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclePath {
    vertices: Vec<usize>,
}

impl CyclePath {
    /// Builds a cycle from a closed walk whose last vertex repeats the first.
    pub fn new(graph: &Graph, vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 || vertices.first() != vertices.last() {
            return Err(Error::Parse {
                line: 0,
                reason: "cycle must have at least two steps and be closed".into(),
            });
        }
        for pair in vertices.windows(2) {
            graph
                .edge_index(pair[0], pair[1])
                .ok_or(Error::NotAnEdge { u: pair[0], v: pair[1] })?;
        }
        Ok(CyclePath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of steps (edges traversed).
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Spanning tree plus one fundamental cycle per non-tree edge unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningStructure {
    pub tree: Vec<EdgeRef>,
    pub cycles: Vec<(EdgeRef, CyclePath)>,
}

#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    mult: Vec<u32>,
    /// `adjacency[x]` lists `(neighbor, edge index)` by ascending neighbor.
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.mult == other.mult
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
        self.mult.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (i, (e, &m)) in self.edges.iter().zip(&self.mult).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", e)?;
            if m > 1 {
                write!(f, "x{}", m)?;
            }
        }
        write!(f, "])")
    }
}

impl Graph {
    /// Simple or multigraph from a list of pairs; repeated pairs add
    /// multiplicity. Loops are rejected.
    pub fn new<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut counts: BTreeMap<Edge, u32> = BTreeMap::new();
        for (a, b) in pairs {
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::LoopEdge { vertex: a });
            }
            *counts.entry(Edge::new(a, b)).or_insert(0) += 1;
        }
        Ok(Self::from_counts(n, counts))
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_counts(n, BTreeMap::new())
    }

    pub fn complete(n: usize) -> Self {
        let pairs = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b)));
        Self::new(n, pairs).expect("complete graph is valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Self::new(n, (1..=n).map(|a| (a, a % n + 1))).expect("cycle is valid")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|a| (a, a + 1))).expect("path is valid")
    }

    fn from_counts(n: usize, counts: BTreeMap<Edge, u32>) -> Self {
        let (edges, mult): (Vec<Edge>, Vec<u32>) = counts.into_iter().unzip();
        let mut adjacency = vec![Vec::new(); n + 1];
        for (i, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, i));
            if !e.is_loop() {
                adjacency[e.v].push((e.u, i));
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            mult,
            adjacency,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeRef) -> Result<Edge> {
        self.edges.get(e.0).copied().ok_or(Error::InvalidEdgeRef {
            index: e.0,
            len: self.edges.len(),
        })
    }

    pub fn multiplicity(&self, e: EdgeRef) -> u32 {
        self.mult[e.0]
    }

    /// Number of distinct edge slots (parallel edges counted once).
    pub fn edge_slots(&self) -> usize {
        self.edges.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m == 1) && !self.has_loops()
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    /// `(neighbor, edge index)` pairs of `x`, ascending by neighbor.
    pub fn neighbors(&self, x: usize) -> &[(usize, usize)] {
        &self.adjacency[x]
    }

    pub fn check_vertex(&self, x: usize) -> Result<()> {
        if x == 0 || x > self.n {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Same vertex set with loops dropped and multiplicities reset to one.
    pub fn simplified(&self) -> Graph {
        let counts = self.edges.iter().filter(|e| !e.is_loop()).map(|&e| (e, 1)).collect();
        Self::from_counts(self.n, counts)
    }

    /// Same vertex set keeping only the edge slots selected by `keep`.
    pub fn retain_edges(&self, mut keep: impl FnMut(EdgeRef) -> bool) -> Graph {
        let counts = self
            .edges
            .iter()
            .zip(&self.mult)
            .enumerate()
            .filter(|&(i, _)| keep(EdgeRef(i)))
            .map(|(_, (&e, &m))| (e, m))
            .collect();
        Self::from_counts(self.n, counts)
    }

    /// Removes one unit of multiplicity from `e`.
    pub fn delete_edge(&self, e: EdgeRef) -> Result<Graph> {
        let target = self.edge(e)?;
        let counts = self
            .edges
            .iter()
            .zip(&self.mult)
            .filter_map(|(&edge, &m)| {
                let m = if edge == target { m - 1 } else { m };
                (m > 0).then_some((edge, m))
            })
            .collect();
        Ok(Self::from_counts(self.n, counts))
    }

    /// Merges the endpoints `u < v` of `e` into `u`; labels above `v` shift
    /// down by one.
    pub fn contract_edge(&self, e: EdgeRef, mode: Contraction) -> Result<(Graph, Relabeling)> {
        let target = self.edge(e)?;
        // contracting a loop merges nothing and just consumes it
        Ok(self.merge_vertices(&[target.u, target.v], mode, Some(e.0)))
    }

    /// Merges every vertex in `set` into its smallest member and compacts
    /// the remaining labels, preserving their order.
    pub fn contract_vertices(&self, set: &[usize], mode: Contraction) -> Result<(Graph, Relabeling)> {
        if set.is_empty() {
            return Err(Error::EmptyInterval);
        }
        for &x in set {
            self.check_vertex(x)?;
        }
        Ok(self.merge_vertices(set, mode, None))
    }

    fn merge_vertices(&self, set: &[usize], mode: Contraction, consumed: Option<usize>) -> (Graph, Relabeling) {
        let mut in_set = vec![false; self.n + 1];
        for &x in set {
            in_set[x] = true;
        }
        let rep = *set.iter().min().expect("nonempty set");
        let mut map = vec![0; self.n + 1];
        let mut next = 0;
        for x in 1..=self.n {
            if !in_set[x] || x == rep {
                next += 1;
                map[x] = next;
            }
        }
        for x in 1..=self.n {
            if in_set[x] {
                map[x] = map[rep];
            }
        }
        let mut counts: BTreeMap<Edge, u32> = BTreeMap::new();
        for (i, (e, &m)) in self.edges.iter().zip(&self.mult).enumerate() {
            let m = if consumed == Some(i) { m - 1 } else { m };
            if m == 0 {
                continue;
            }
            let image = Edge::new(map[e.u], map[e.v]);
            match mode {
                Contraction::Simplify => {
                    if !image.is_loop() {
                        counts.insert(image, 1);
                    }
                }
                Contraction::Faithful => *counts.entry(image).or_insert(0) += m,
            }
        }
        let relabel = Relabeling { map, new_n: next };
        (Self::from_counts(next, counts), relabel)
    }

    /// Tags every edge as bridge or cycle-edge (iterative low-link DFS).
    pub fn classify_edges(&self) -> Vec<EdgeKind> {
        let mut kinds = vec![EdgeKind::CycleEdge; self.edges.len()];
        let mut disc = vec![0usize; self.n + 1];
        let mut low = vec![0usize; self.n + 1];
        let mut timer = 1;
        for root in 1..=self.n {
            if disc[root] != 0 {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            // (vertex, edge used to enter it, next adjacency position)
            let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
            while let Some(top) = stack.last_mut() {
                let (x, entry, pos) = *top;
                if let Some(&(y, ei)) = self.adjacency[x].get(pos) {
                    top.2 += 1;
                    if Some(ei) == entry || y == x {
                        continue;
                    }
                    if disc[y] == 0 {
                        disc[y] = timer;
                        low[y] = timer;
                        timer += 1;
                        stack.push((y, Some(ei), 0));
                    } else {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if let Some(ei) = entry {
                        let parent = self.edges[ei].other(x);
                        low[parent] = low[parent].min(low[x]);
                        if low[x] > disc[parent] && self.mult[ei] == 1 {
                            kinds[ei] = EdgeKind::Bridge;
                        }
                    }
                }
            }
        }
        kinds
    }

    /// First cycle-edge in sorted order, if any.
    pub fn first_cycle_edge(&self) -> Option<EdgeRef> {
        self.classify_edges()
            .iter()
            .position(|&k| k == EdgeKind::CycleEdge)
            .map(EdgeRef)
    }

    /// Vertex sets of the connected components, each ascending, ordered by
    /// minimum label.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n + 1];
        let mut components = Vec::new();
        for start in 1..=self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        component.push(y);
                        queue.push_back(y);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced on `vertices`, relabeled `1..=k` in ascending order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Relabeling) {
        let mut map = vec![0; self.n + 1];
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for (i, &x) in sorted.iter().enumerate() {
            map[x] = i + 1;
        }
        let counts = self
            .edges
            .iter()
            .zip(&self.mult)
            .filter(|(e, _)| map[e.u] != 0 && map[e.v] != 0)
            .map(|(e, &m)| (Edge::new(map[e.u], map[e.v]), m))
            .collect();
        let relabel = Relabeling {
            map,
            new_n: sorted.len(),
        };
        (Self::from_counts(sorted.len(), counts), relabel)
    }

    /// Breadth-first spanning tree from vertex 1 (neighbors in ascending
    /// order) and the fundamental cycle of every non-tree edge.
    ///
    /// For a non-tree edge `{a, b}` with `a < b` the cycle starts at `a`,
    /// follows the tree path to `b` and closes with the step `b -> a`.
    /// Extra units of multiplicity give two-step cycles `a, b, a`.
    pub fn spanning_structure(&self) -> Result<SpanningStructure> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        if let Some(e) = self.edges.iter().find(|e| e.is_loop()) {
            return Err(Error::LoopEdge { vertex: e.u });
        }
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.n + 1];
        let mut depth = vec![0usize; self.n + 1];
        let mut tree_edge = vec![false; self.edges.len()];
        if self.n > 0 {
            let mut seen = vec![false; self.n + 1];
            seen[1] = true;
            let mut queue = VecDeque::from([1]);
            while let Some(x) = queue.pop_front() {
                for &(y, ei) in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some((x, ei));
                        depth[y] = depth[x] + 1;
                        tree_edge[ei] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let tree = (0..self.edges.len()).filter(|&i| tree_edge[i]).map(EdgeRef).collect();
        let mut cycles = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let copies = if tree_edge[i] { self.mult[i] - 1 } else { self.mult[i] };
            for _ in 0..copies {
                let mut vertices = self.tree_path(&parent, &depth, e.u, e.v);
                vertices.push(e.u);
                cycles.push((EdgeRef(i), CyclePath { vertices }));
            }
        }
        Ok(SpanningStructure { tree, cycles })
    }

    fn tree_path(&self, parent: &[Option<(usize, usize)>], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
        let up = |x: usize| parent[x].expect("non-root has a parent").0;
        let (mut x, mut y) = (a, b);
        let mut from_a = vec![x];
        let mut from_b = vec![y];
        while depth[x] > depth[y] {
            x = up(x);
            from_a.push(x);
        }
        while depth[y] > depth[x] {
            y = up(y);
            from_b.push(y);
        }
        while x != y {
            x = up(x);
            y = up(y);
            from_a.push(x);
            from_b.push(y);
        }
        from_b.pop();
        from_a.extend(from_b.into_iter().rev());
        from_a
    }

    /// Cyclomatic number `m - n + c` (with multiplicity).
    pub fn cyclomatic_number(&self) -> usize {
        self.edge_count() + self.connected_components().len() - self.n
    }
}

/// Renders the graph in the text file format accepted by [`parse_graph`].
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.n, self.edge_count())?;
        for (e, &m) in self.edges.iter().zip(&self.mult) {
            for _ in 0..m {
                writeln!(f, "{} {}", e.u, e.v)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_graph(s)
    }
}

/// Parses the edge-list format: `#` comment lines, a header `n m`, then `m`
/// lines `u v`. Repeated pairs add multiplicity.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = data.next().ok_or(Error::Parse {
        line: 0,
        reason: "missing header line `n m`".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, content) in data {
        if pairs.len() == m {
            return Err(Error::Parse {
                line,
                reason: format!("more than the declared {} edges", m),
            });
        }
        let [a, b] = parse_pair(line, content)?;
        for x in [a, b] {
            if x == 0 || x > n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if a == b {
            return Err(Error::LoopEdge { vertex: a });
        }
        pairs.push((a, b));
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: 0,
            reason: format!("declared {} edges, found {}", m, pairs.len()),
        });
    }
    Graph::new(n, pairs)
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse {
            line,
            reason: format!("expected two integers, got {:?}", content),
        });
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field.parse().map_err(|_| Error::Parse {
            line,
            reason: format!("not a nonnegative integer: {:?}", field),
        })?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pairs(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().iter().map(|e| (e.u, e.v)).collect()
    }

    #[test]
    fn parses_triangle() {
        let g = parse_graph("3 3\n1 2\n1 3\n2 3").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(pairs(&g), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn normalizes_endpoint_order() {
        let g = parse_graph("2 1\n2 1").unwrap();
        assert_eq!(pairs(&g), vec![(1, 2)]);
    }

    #[test]
    fn input_order_is_irrelevant_and_crlf_and_comments_work() {
        let g = parse_graph("# triangle\r\n3 3\r\n2 3\r\n\r\n# middle\n3 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_graph("2 1\n1 1"), Err(Error::LoopEdge { vertex: 1 }));
        assert_eq!(
            parse_graph("2 1\n1 3"),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert!(matches!(parse_graph("2 1\n1 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_graph("2 2\n1 2"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_graph("2 1\n1 2\n1 2"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(parse_graph(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph("2 1 5\n1 2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn repeated_pair_adds_multiplicity() {
        let g = parse_graph("2 3\n1 2\n2 1\n1 2").unwrap();
        assert_eq!(g.edge_slots(), 1);
        assert_eq!(g.multiplicity(EdgeRef(0)), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(!g.is_simple());
    }

    #[test]
    fn deletion_examples() {
        let k3 = Graph::complete(3);
        let g = k3.delete_edge(EdgeRef(2)).unwrap();
        assert_eq!(pairs(&g), vec![(1, 2), (1, 3)]);
        assert_eq!(g.n(), 3);

        let k2 = Graph::complete(2);
        let g = k2.delete_edge(EdgeRef(0)).unwrap();
        assert_eq!(g, Graph::empty(2));

        let double = Graph::new(2, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(double.delete_edge(EdgeRef(0)).unwrap(), k2);

        assert_eq!(
            k2.delete_edge(EdgeRef(1)),
            Err(Error::InvalidEdgeRef { index: 1, len: 1 })
        );
    }

    #[test]
    fn contraction_examples() {
        let k3 = Graph::complete(3);
        let (g, relabel) = k3.contract_edge(EdgeRef(2), Contraction::Simplify).unwrap();
        assert_eq!(g, Graph::complete(2));
        assert_eq!((relabel.apply(1), relabel.apply(2), relabel.apply(3)), (1, 2, 2));

        let (g, _) = k3.contract_edge(EdgeRef(2), Contraction::Faithful).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(pairs(&g), vec![(1, 2)]);
        assert_eq!(g.multiplicity(EdgeRef(0)), 2);

        let (g, _) = Graph::complete(2)
            .contract_edge(EdgeRef(0), Contraction::Faithful)
            .unwrap();
        // the contracted edge itself is consumed, so no loop remains
        assert_eq!(g, Graph::empty(1));

        // a parallel copy survives as a loop
        let double = Graph::new(2, [(1, 2), (1, 2)]).unwrap();
        let (g, _) = double.contract_edge(EdgeRef(0), Contraction::Faithful).unwrap();
        assert_eq!(pairs(&g), vec![(1, 1)]);
        assert!(g.has_loops());
        let (g, _) = g.contract_edge(EdgeRef(0), Contraction::Faithful).unwrap();
        assert_eq!(g, Graph::empty(1));
    }

    #[test]
    fn contraction_shifts_higher_labels() {
        // path 1-2-3-4, contract {2,3}: 4 becomes 3
        let g = Graph::path(4);
        let (c, relabel) = g.contract_edge(EdgeRef(1), Contraction::Simplify).unwrap();
        assert_eq!(c, Graph::path(3));
        assert_eq!(relabel.apply(4), 3);
        assert_eq!(relabel.preimage(2), vec![2, 3]);
    }

    #[test]
    fn classification_examples() {
        use EdgeKind::*;
        assert_eq!(Graph::complete(3).classify_edges(), vec![CycleEdge; 3]);
        assert_eq!(Graph::path(3).classify_edges(), vec![Bridge; 2]);
        let g = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 1), (1, 5)]).unwrap();
        let kinds = g.classify_edges();
        // sorted: {1,2},{1,4},{1,5},{2,3},{3,4}
        assert_eq!(kinds, vec![CycleEdge, CycleEdge, Bridge, CycleEdge, CycleEdge]);
        let double = Graph::new(2, [(1, 2), (1, 2)]).unwrap();
        assert_eq!(double.classify_edges(), vec![CycleEdge]);
    }

    #[test]
    fn triangle_spanning_structure() {
        let s = Graph::complete(3).spanning_structure().unwrap();
        assert_eq!(s.tree, vec![EdgeRef(0), EdgeRef(1)]);
        assert_eq!(s.cycles.len(), 1);
        assert_eq!(s.cycles[0].0, EdgeRef(2));
        assert_eq!(s.cycles[0].1.vertices(), &[2, 1, 3, 2]);
    }

    #[test]
    fn square_spanning_structure() {
        // sorted edges {1,2},{1,4},{2,3},{3,4}; BFS tree {1,2},{1,4},{2,3}
        let s = Graph::cycle(4).spanning_structure().unwrap();
        assert_eq!(s.tree, vec![EdgeRef(0), EdgeRef(1), EdgeRef(2)]);
        assert_eq!(s.cycles.len(), 1);
        assert_eq!(s.cycles[0].0, EdgeRef(3));
        assert_eq!(s.cycles[0].1.vertices(), &[3, 2, 1, 4, 3]);
    }

    #[test]
    fn trees_have_no_fundamental_cycles() {
        let star = Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap();
        assert!(star.spanning_structure().unwrap().cycles.is_empty());
        assert!(Graph::path(5).spanning_structure().unwrap().cycles.is_empty());
        assert_eq!(Graph::empty(2).spanning_structure(), Err(Error::Disconnected));
    }

    #[test]
    fn component_examples() {
        assert_eq!(Graph::complete(3).connected_components(), vec![vec![1, 2, 3]]);
        assert_eq!(Graph::empty(2).connected_components(), vec![vec![1], vec![2]]);
        let g = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![1, 2], vec![3, 4]]);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..8).prop_flat_map(|n| {
            let pair = (1..=n, 1..=n);
            proptest::collection::vec(pair, 0..14).prop_map(move |raw| {
                let raw = raw.into_iter().filter(|(a, b)| a != b);
                Graph::new(n, raw).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
        }

        #[test]
        fn deletion_removes_one_unit(g in arb_graph()) {
            for i in 0..g.edge_slots() {
                let d = g.delete_edge(EdgeRef(i)).unwrap();
                prop_assert_eq!(d.edge_count(), g.edge_count() - 1);
            }
        }

        #[test]
        fn simplified_contraction_is_simple(g in arb_graph()) {
            for i in 0..g.edge_slots() {
                let (c, relabel) = g.contract_edge(EdgeRef(i), Contraction::Simplify).unwrap();
                prop_assert!(c.is_simple());
                prop_assert_eq!(c.n(), g.n() - 1);
                prop_assert_eq!(relabel.new_n(), c.n());
            }
        }

        #[test]
        fn bridge_iff_deletion_adds_component(g in arb_graph()) {
            let before = g.connected_components().len();
            for (i, kind) in g.classify_edges().into_iter().enumerate() {
                let after = g.delete_edge(EdgeRef(i)).unwrap().connected_components().len();
                prop_assert_eq!(kind == EdgeKind::Bridge, after == before + 1);
            }
        }

        #[test]
        fn spanning_structure_is_deterministic(g in arb_graph()) {
            if g.is_connected() {
                let a = g.spanning_structure().unwrap();
                let b = g.clone().spanning_structure().unwrap();
                prop_assert_eq!(a.tree.len(), g.n() - 1);
                prop_assert_eq!(a.cycles.len(), g.cyclomatic_number());
                for (_, cycle) in &a.cycles {
                    prop_assert!(CyclePath::new(&g, cycle.vertices().to_vec()).is_ok());
                }
                prop_assert_eq!(a, b);
            }
        }
    }
}
