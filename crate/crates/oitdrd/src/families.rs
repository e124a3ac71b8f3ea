//! Deterministic graph family generators and enumeration corpora.
//!
//! All generators are pure; the seeded random families are bit-exactly
//! reproducible for a given spec.

use std::collections::HashSet;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum FamilyError {
    #[error("{family}: parameter out of range ({reason})")]
    ParamOutOfRange {
        family: &'static str,
        reason: &'static str,
    },
    #[error("{family}: enumeration capped at n <= {cap}, requested {n}")]
    CapExceeded {
        family: &'static str,
        cap: usize,
        n: usize,
    },
    #[error("cannot parse family spec `{0}`")]
    Parse(String),
    #[error("bundled fixture is corrupt: {0}")]
    Fixture(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn param_err(family: &'static str, reason: &'static str) -> FamilyError {
    FamilyError::ParamOutOfRange { family, reason }
}

/// Path on `p` vertices, edges `i - i+1`.
pub fn path(p: usize) -> Result<Graph, FamilyError> {
    if p < 1 {
        return Err(param_err("path", "p >= 1"));
    }
    let edges: Vec<_> = (0..p.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Ok(Graph::from_edges(p, &edges)?)
}

/// Cycle on `p >= 3` vertices.
pub fn cycle(p: usize) -> Result<Graph, FamilyError> {
    if p < 3 {
        return Err(param_err("cycle", "p >= 3"));
    }
    let mut edges: Vec<_> = (0..p - 1).map(|i| (i, i + 1)).collect();
    edges.push((p - 1, 0));
    Ok(Graph::from_edges(p, &edges)?)
}

/// Star on `p >= 2` vertices: center 0, leaves `1..p`.
pub fn star(p: usize) -> Result<Graph, FamilyError> {
    if p < 2 {
        return Err(param_err("star", "p >= 2"));
    }
    let edges: Vec<_> = (1..p).map(|i| (0, i)).collect();
    Ok(Graph::from_edges(p, &edges)?)
}

/// Double star: adjacent centers 0 and 1 carrying `r` and `t` leaves.
/// Requires `t >= r >= 1`.
pub fn double_star(r: usize, t: usize) -> Result<Graph, FamilyError> {
    if r < 1 || t < r {
        return Err(param_err("double_star", "t >= r >= 1"));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((0..r).map(|i| (0, 2 + i)));
    edges.extend((0..t).map(|i| (1, 2 + r + i)));
    Ok(Graph::from_edges(2 + r + t, &edges)?)
}

/// Complete bipartite graph with sides of size `a` and `b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    if a < 1 || b < 1 {
        return Err(param_err("complete_bipartite", "a, b >= 1"));
    }
    let mut edges = Vec::with_capacity(a * b);
    for i in 0..a {
        for j in 0..b {
            edges.push((i, a + j));
        }
    }
    Ok(Graph::from_edges(a + b, &edges)?)
}

/// Corona of `base`: one new pendant vertex attached to every vertex.
/// Original vertices keep their ids; the pendant of `i` is `n + i`.
pub fn corona(base: &Graph) -> Graph {
    let n = base.n();
    let mut edges = base.edges();
    edges.extend((0..n).map(|i| (i, n + i)));
    Graph::from_edges(2 * n, &edges).expect("corona of a valid graph is valid")
}

/// Star with `t - 1 >= 2` legs, each leg a path of four edges from the
/// center (every star edge subdivided exactly three times).
pub fn spider4(t: usize) -> Result<Graph, FamilyError> {
    if t < 3 {
        return Err(param_err("spider4", "t >= 3 (at least two legs)"));
    }
    let legs = t - 1;
    let mut edges = Vec::new();
    for j in 0..legs {
        let first = 1 + 4 * j;
        edges.push((0, first));
        for k in 0..3 {
            edges.push((first + k, first + k + 1));
        }
    }
    Ok(Graph::from_edges(1 + 4 * legs, &edges)?)
}

/// Uniformly random labeled tree on `n` vertices via a random Pruefer
/// sequence; bit-exact for a given seed.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(param_err("random_tree", "n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if n == 1 {
        return Ok(Graph::from_edges(1, &[])?);
    }
    if n == 2 {
        return Ok(Graph::from_edges(2, &[(0, 1)])?);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    Ok(prufer_decode(n, &seq))
}

/// Decodes a Pruefer sequence of length `n - 2` into a labeled tree.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Graph {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    assert_eq!(seq.len(), n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("valid Pruefer sequence");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("Pruefer decode yields a tree")
}

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability 0.3. Bit-exact for a given seed.
pub fn random_connected(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(param_err("random_connected", "n >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = if n >= 3 {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        prufer_decode(n, &seq)
    } else {
        path(n)?
    };
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.gen_bool(0.3) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, &edges)?)
}

const ALL_CONNECTED_CAP: usize = 6;
const ALL_TREES_CAP: usize = 10;

/// Streams every labeled connected graph on `n <= 6` vertices, in
/// increasing order of the edge-subset bitmask.
pub fn all_connected(n: usize) -> Result<impl Iterator<Item = Graph>, FamilyError> {
    if n > ALL_CONNECTED_CAP {
        return Err(FamilyError::CapExceeded {
            family: "all_connected",
            cap: ALL_CONNECTED_CAP,
            n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total: u64 = 1 << pairs.len();
    Ok((0..total).filter_map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).expect("subset of simple edges");
        g.is_connected().then_some(g)
    }))
}

/// Streams every free (unlabeled) tree on `n <= 10` vertices exactly once.
///
/// Rooted trees are generated by the canonical level-sequence successor
/// rule and deduplicated up to isomorphism by a centroid-rooted canonical
/// encoding.
pub fn all_trees(n: usize) -> Result<impl Iterator<Item = Graph>, FamilyError> {
    if n > ALL_TREES_CAP {
        return Err(FamilyError::CapExceeded {
            family: "all_trees",
            cap: ALL_TREES_CAP,
            n,
        });
    }
    let mut seen = HashSet::new();
    Ok(RootedTreeSequences::new(n).filter_map(move |levels| {
        let g = tree_from_level_sequence(&levels);
        seen.insert(free_tree_key(&g)).then_some(g)
    }))
}

/// Level sequences of all rooted trees on `n` vertices, lexicographically
/// descending, starting from the path `[1, 2, .., n]`.
struct RootedTreeSequences {
    levels: Vec<usize>,
    done: bool,
}

impl RootedTreeSequences {
    fn new(n: usize) -> Self {
        RootedTreeSequences {
            levels: (1..=n).collect(),
            done: n == 0,
        }
    }
}

impl Iterator for RootedTreeSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.levels.clone();
        // successor: trim the last vertex deeper than level 2 back onto the
        // subtree rooted at its parent's level
        match self.levels.iter().rposition(|&l| l > 2) {
            None => self.done = true,
            Some(p) => {
                let q = (0..p).rfind(|&i| self.levels[i] == self.levels[p] - 1).unwrap();
                for i in p..self.levels.len() {
                    self.levels[i] = self.levels[i - (p - q)];
                }
            }
        }
        Some(current)
    }
}

/// Rebuilds the rooted tree encoded by a canonical level sequence:
/// the parent of vertex `i` is the nearest earlier vertex one level up.
fn tree_from_level_sequence(levels: &[usize]) -> Graph {
    let n = levels.len();
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let parent = (0..i).rfind(|&j| levels[j] == levels[i] - 1).unwrap();
        edges.push((parent, i));
    }
    Graph::from_edges(n, &edges).expect("level sequence encodes a tree")
}

/// Isomorphism-invariant key for a free tree: canonical subtree encoding
/// rooted at the centroid, or at the centroid edge when there are two.
fn free_tree_key(g: &Graph) -> String {
    let centroids = tree_centroids(g);
    match centroids[..] {
        [c] => ahu_encode(g, c, usize::MAX),
        [c1, c2] => {
            let a = ahu_encode(g, c1, c2);
            let b = ahu_encode(g, c2, c1);
            if a <= b {
                format!("{a}|{b}")
            } else {
                format!("{b}|{a}")
            }
        }
        _ => unreachable!("a tree has one or two centroids"),
    }
}

/// The one or two vertices minimizing the largest component of `T - v`.
fn tree_centroids(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 1 {
        return vec![0];
    }
    let order = bfs_order(g, 0);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    for &v in &order {
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = v;
            }
        }
    }
    let mut size = vec![1usize; n];
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
        }
    }
    let weight = |v: usize| -> usize {
        let mut w = n - size[v]; // component through the parent
        for &u in g.neighbors(v) {
            if parent[u] == v {
                w = w.max(size[u]);
            }
        }
        w
    };
    let best = (0..n).map(weight).min().unwrap();
    (0..n).filter(|&v| weight(v) == best).collect()
}

fn bfs_order(g: &Graph, src: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    let mut queue = std::collections::VecDeque::from([src]);
    seen[src] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    order
}

/// Canonical parenthesized encoding of the subtree of `root` away from
/// `parent` (pass `usize::MAX` for the whole tree).
fn ahu_encode(g: &Graph, root: usize, parent: usize) -> String {
    let mut children: Vec<String> = g
        .neighbors(root)
        .iter()
        .filter(|&&u| u != parent)
        .map(|&u| ahu_encode(g, u, root))
        .collect();
    children.sort();
    format!("({})", children.concat())
}

/// The bundled 3-regular girth-8 graph on 30 vertices (the 8-cage),
/// re-verified on every load.
pub fn tutte_coxeter() -> Result<Graph, FamilyError> {
    let text = include_str!("../data/tutte_coxeter.edges");
    let g = Graph::from_edge_list(text)?;
    if g.n() != 30 || g.m() != 45 {
        return Err(FamilyError::Fixture(format!(
            "expected 30 vertices / 45 edges, got {} / {}",
            g.n(),
            g.m()
        )));
    }
    if g.regular_degree() != Some(3) {
        return Err(FamilyError::Fixture("not 3-regular".into()));
    }
    if g.girth() != Some(8) {
        return Err(FamilyError::Fixture(format!("girth {:?}, expected 8", g.girth())));
    }
    Ok(g)
}

/// A parsed family request, e.g. `path:10` or `random_tree:9:42`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Star(usize),
    DoubleStar(usize, usize),
    CompleteBipartite(usize, usize),
    Corona(Box<FamilySpec>),
    Spider4(usize),
    RandomTree { n: usize, seed: u64 },
    RandomConnected { n: usize, seed: u64 },
    AllConnected(usize),
    AllTrees(usize),
    TutteCoxeter,
}

/// Result of generating a family: a single graph or a stream.
pub enum Generated {
    One(Graph),
    Many(Box<dyn Iterator<Item = Graph>>),
}

/// Builds the graph(s) described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Generated, FamilyError> {
    use FamilySpec::*;
    Ok(match spec {
        Path(p) => Generated::One(path(*p)?),
        Cycle(p) => Generated::One(cycle(*p)?),
        Star(p) => Generated::One(star(*p)?),
        DoubleStar(r, t) => Generated::One(double_star(*r, *t)?),
        CompleteBipartite(a, b) => Generated::One(complete_bipartite(*a, *b)?),
        Corona(base) => match generate(base)? {
            Generated::One(g) => Generated::One(corona(&g)),
            Generated::Many(_) => {
                return Err(FamilyError::Parse("corona of a stream family".into()))
            }
        },
        Spider4(t) => Generated::One(spider4(*t)?),
        RandomTree { n, seed } => Generated::One(random_tree(*n, *seed)?),
        RandomConnected { n, seed } => Generated::One(random_connected(*n, *seed)?),
        AllConnected(n) => Generated::Many(Box::new(all_connected(*n)?)),
        AllTrees(n) => Generated::Many(Box::new(all_trees(*n)?)),
        TutteCoxeter => Generated::One(tutte_coxeter()?),
    })
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, FamilyError> {
        let err = || FamilyError::Parse(s.to_string());
        let mut parts = s.split(':');
        let name = parts.next().ok_or_else(err)?;
        let num = |parts: &mut std::str::Split<'_, char>| -> Result<usize, FamilyError> {
            parts.next().and_then(|t| t.parse().ok()).ok_or_else(err)
        };
        let spec = match name {
            "path" => FamilySpec::Path(num(&mut parts)?),
            "cycle" => FamilySpec::Cycle(num(&mut parts)?),
            "star" => FamilySpec::Star(num(&mut parts)?),
            "double_star" => FamilySpec::DoubleStar(num(&mut parts)?, num(&mut parts)?),
            "complete_bipartite" => {
                FamilySpec::CompleteBipartite(num(&mut parts)?, num(&mut parts)?)
            }
            "corona" => {
                let rest: Vec<&str> = parts.collect();
                if rest.is_empty() {
                    return Err(err());
                }
                return Ok(FamilySpec::Corona(Box::new(rest.join(":").parse()?)));
            }
            "spider4" => FamilySpec::Spider4(num(&mut parts)?),
            "random_tree" => FamilySpec::RandomTree {
                n: num(&mut parts)?,
                seed: num(&mut parts)? as u64,
            },
            "random_connected" => FamilySpec::RandomConnected {
                n: num(&mut parts)?,
                seed: num(&mut parts)? as u64,
            },
            "all_connected" => FamilySpec::AllConnected(num(&mut parts)?),
            "all_trees" => FamilySpec::AllTrees(num(&mut parts)?),
            "tutte_coxeter" => FamilySpec::TutteCoxeter,
            _ => return Err(err()),
        };
        if parts.next().is_some() {
            return Err(err());
        }
        Ok(spec)
    }
}

impl std::fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use FamilySpec::*;
        match self {
            Path(p) => write!(f, "path:{p}"),
            Cycle(p) => write!(f, "cycle:{p}"),
            Star(p) => write!(f, "star:{p}"),
            DoubleStar(r, t) => write!(f, "double_star:{r}:{t}"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            Corona(base) => write!(f, "corona:{base}"),
            Spider4(t) => write!(f, "spider4:{t}"),
            RandomTree { n, seed } => write!(f, "random_tree:{n}:{seed}"),
            RandomConnected { n, seed } => write!(f, "random_connected:{n}:{seed}"),
            AllConnected(n) => write!(f, "all_connected:{n}"),
            AllTrees(n) => write!(f, "all_trees:{n}"),
            TutteCoxeter => write!(f, "tutte_coxeter"),
        }
    }
}
