//! Weighted digraphs as square matrices, and the algebraic path problem.
//!
//! Node `i` of a graph is row and column `i` of its adjacency matrix; a `0`
//! entry means there is no arc. The closure `A*` holds, for every node pair,
//! the `⊕`-supremum of path weights over paths of any length: shortest paths
//! over min-plus, widest paths over max-min, best profits over max-plus.
//!
//! # Text format
//!
//! Tab-separated `src<TAB>dst<TAB>weight` lines, with optional directives
//! `#semiring <id>` and `#nodes <n1> <n2> …`. A `#` followed by whitespace
//! starts a comment, as do the `#ops` and `#series` annotations the CLI
//! writes; any other `#word` is an unknown directive. Parallel arcs are
//! merged with `⊕`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::linalg::{closure, mat_mul, mat_pow, solve_bellman, Matrix};
use crate::semiring::{NumericSemiring, Semiring};
use crate::text::{parse_cell, tokens, TextValue, Token};

/// Largest graph [`brute_force_closure`] will enumerate.
pub const BRUTE_FORCE_MAX_NODES: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedDigraph<E> {
    nodes: Vec<String>,
    index: HashMap<String, usize>,
    arcs: BTreeMap<(usize, usize), E>,
}

impl<E: Copy> WeightedDigraph<E> {
    /// A graph with the given nodes and no arcs. Names must be distinct.
    pub fn new<I, N>(nodes: I) -> Result<Self>
    where
        I: IntoIterator<Item = N>,
        N: Into<String>,
    {
        let mut g = WeightedDigraph { nodes: Vec::new(), index: HashMap::new(), arcs: BTreeMap::new() };
        for n in nodes {
            let n = n.into();
            if g.index.contains_key(&n) {
                return Err(Error::InvalidParameter(format!("duplicate node '{n}'")));
            }
            g.add_node(n);
        }
        Ok(g)
    }

    /// Index of `name`, adding the node if it is new.
    pub fn add_node(&mut self, name: impl Into<String>) -> usize {
        let name = name.into();
        if let Some(&i) = self.index.get(&name) {
            return i;
        }
        let i = self.nodes.len();
        self.index.insert(name.clone(), i);
        self.nodes.push(name);
        i
    }

    /// Adds the arc `src → dst`, merging with an existing one by `⊕`.
    /// A `0` weight adds nothing.
    pub fn add_arc<S: Semiring<Elem = E>>(&mut self, s: &S, src: &str, dst: &str, weight: E) -> Result<()> {
        let i = self.require(src)?;
        let j = self.require(dst)?;
        self.add_arc_at(s, i, j, s.check(weight)?);
        Ok(())
    }

    fn add_arc_at<S: Semiring<Elem = E>>(&mut self, s: &S, i: usize, j: usize, weight: E) {
        if s.is_zero(weight) {
            return;
        }
        let merged = match self.arcs.get(&(i, j)) {
            Some(&w) => s.add(w, weight),
            None => weight,
        };
        self.arcs.insert((i, j), merged);
    }

    fn require(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("unknown node '{name}'")))
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[String] {
        &self.nodes
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Arcs as `(src, dst, weight)` in index order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, E)> + '_ {
        self.arcs.iter().map(|(&(i, j), &w)| (i, j, w))
    }

    pub fn weight(&self, src: usize, dst: usize) -> Option<E> {
        self.arcs.get(&(src, dst)).copied()
    }

    /// Adjacency matrix with `0` where there is no arc.
    pub fn to_matrix<S: Semiring<Elem = E>>(&self, s: &S) -> Matrix<E> {
        let n = self.nodes.len();
        let mut m = Matrix::zeros(s, n, n);
        for (&(i, j), &w) in &self.arcs {
            m[(i, j)] = w;
        }
        m
    }

    /// The graph of a square matrix. Nodes are named `1..=n` when `names`
    /// is `None`.
    pub fn from_matrix<S: Semiring<Elem = E>>(s: &S, a: &Matrix<E>, names: Option<Vec<String>>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::dims("graph from matrix", format!("{}x{} is not square", a.rows(), a.cols())));
        }
        let n = a.rows();
        let names = names.unwrap_or_else(|| (1..=n).map(|i| i.to_string()).collect());
        if names.len() != n {
            return Err(Error::dims("graph from matrix", format!("{} names for {n} nodes", names.len())));
        }
        let mut g = WeightedDigraph::new(names)?;
        for i in 0..n {
            for j in 0..n {
                g.add_arc_at(s, i, j, s.check(a[(i, j)])?);
            }
        }
        Ok(g)
    }
}

/// A node sequence `(y₀, …, yₖ)`; its length is `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn from_names<E: Copy>(g: &WeightedDigraph<E>, names: &[&str]) -> Result<Self> {
        names.iter().map(|n| g.require(n)).collect::<Result<_>>().map(Path)
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// `A(y₀,y₁) ⊙ … ⊙ A(yₖ₋₁,yₖ)`; `1` for a path of length zero.
pub fn path_weight<S: Semiring>(s: &S, g: &WeightedDigraph<S::Elem>, p: &Path) -> Result<S::Elem> {
    let Some(&first) = p.0.first() else {
        return Err(Error::InvalidParameter("empty node sequence".into()));
    };
    if first >= g.node_count() {
        return Err(Error::InvalidParameter(format!("node index {first} out of range")));
    }
    let mut w = s.one();
    for pair in p.0.windows(2) {
        let arc = g.weight(pair[0], pair[1]).ok_or_else(|| {
            Error::InvalidParameter(format!("no arc from node {} to node {}", pair[0], pair[1]))
        })?;
        w = s.mul(w, arc);
    }
    Ok(w)
}

/// `A*` of the adjacency matrix: the supremum of path weights for every pair.
pub fn algebraic_path<S: Semiring>(s: &S, g: &WeightedDigraph<S::Elem>) -> Result<Matrix<S::Elem>> {
    closure(s, &g.to_matrix(s))
}

/// Best total profit `A(p) ⊕ b_j` from every start node, i.e. `A*B`.
///
/// Intended for max-plus arc profits and terminal profits `terminal` (an
/// `n × 1` column). A positive-profit cycle is a divergence error in plain
/// max-plus and yields `+∞` in the completed carrier.
pub fn dp_best_profit<S: Semiring>(
    s: &S,
    g: &WeightedDigraph<S::Elem>,
    terminal: &Matrix<S::Elem>,
) -> Result<Matrix<S::Elem>> {
    solve_bellman(s, &g.to_matrix(s), terminal)
}

/// Best profit over plans of exactly `k` transitions, `AᵏB`.
pub fn dp_profit_fixed_length<S: Semiring>(
    s: &S,
    g: &WeightedDigraph<S::Elem>,
    terminal: &Matrix<S::Elem>,
    k: usize,
) -> Result<Matrix<S::Elem>> {
    mat_mul(s, &mat_pow(s, &g.to_matrix(s), k)?, terminal)
}

/// Folds the weights of every path of length `1..=max_len` with `⊕` and
/// joins `1` on the diagonal, by explicit enumeration.
///
/// Exponential; refuses graphs with more than [`BRUTE_FORCE_MAX_NODES`] nodes.
pub fn brute_force_closure<S: Semiring>(
    s: &S,
    g: &WeightedDigraph<S::Elem>,
    max_len: usize,
) -> Result<Matrix<S::Elem>> {
    let n = g.node_count();
    if n > BRUTE_FORCE_MAX_NODES {
        return Err(Error::InvalidParameter(format!(
            "path enumeration is limited to {BRUTE_FORCE_MAX_NODES} nodes, graph has {n}"
        )));
    }
    let adj: Vec<Vec<(usize, S::Elem)>> = (0..n)
        .map(|i| g.arcs().filter(|a| a.0 == i).map(|(_, j, w)| (j, w)).collect())
        .collect();

    let mut out = Matrix::identity(s, n);
    for start in 0..n {
        // (node, weight of the path so far, length)
        let mut stack = vec![(start, s.one(), 0usize)];
        while let Some((node, w, len)) = stack.pop() {
            if len > 0 {
                out[(start, node)] = s.add(out[(start, node)], w);
            }
            if len < max_len {
                for &(next, aw) in &adj[node] {
                    stack.push((next, s.mul(w, aw), len + 1));
                }
            }
        }
    }
    Ok(out)
}

/// Returns the identifier of the `#semiring` directive, if any.
pub fn semiring_directive(input: &str) -> Option<String> {
    input.lines().find_map(|l| {
        let mut t = l.split_whitespace();
        (t.next() == Some("#semiring")).then(|| t.next().unwrap_or_default().to_string())
    })
}

/// Heuristic used by the CLI: graph files carry a `#nodes` directive or
/// tab-separated triples, matrix files start with a `<rows> <cols>` header.
/// `#semiring` may appear in either.
pub fn looks_like_graph(input: &str) -> bool {
    for line in input.lines() {
        let t = line.trim();
        if t.starts_with("#nodes") {
            return true;
        }
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        return line.split('\t').count() == 3;
    }
    false
}

/// Reads a graph in the tab-separated format, validating weights against `s`.
pub fn parse_graph<S>(s: &S, input: &str) -> Result<WeightedDigraph<S::Elem>>
where
    S: Semiring,
    S::Elem: TextValue,
{
    let mut g = WeightedDigraph::new(Vec::<String>::new())?;
    let mut declared = false;
    let mut seen_arc = false;
    for (idx, line) in input.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('#') {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                continue;
            }
            let toks = tokens(line_no, line);
            match toks[0].text {
                "#semiring" => {
                    if toks.len() != 2 {
                        return Err(Error::parse(line_no, toks[0].column, "#semiring takes one identifier"));
                    }
                    let requested = s.descriptor().carrier_name;
                    if !declares(toks[1].text, &requested) {
                        return Err(Error::parse(
                            line_no,
                            toks[1].column,
                            format!("file declares semiring '{}' but '{requested}' was requested", toks[1].text),
                        ));
                    }
                }
                "#nodes" => {
                    if declared || seen_arc {
                        return Err(Error::parse(line_no, toks[0].column, "#nodes must precede all arcs and appear once"));
                    }
                    declared = true;
                    for t in &toks[1..] {
                        if g.index_of(t.text).is_some() {
                            return Err(Error::parse(line_no, t.column, format!("duplicate node '{}'", t.text)));
                        }
                        g.add_node(t.text);
                    }
                }
                "#ops" | "#series" => {}
                other => {
                    return Err(Error::parse(line_no, toks[0].column, format!("unknown directive '{other}'")));
                }
            }
            continue;
        }

        seen_arc = true;
        let fields = tab_fields(line_no, line);
        if fields.len() != 3 {
            return Err(Error::parse(
                line_no,
                1,
                format!("expected 3 tab-separated fields, found {}", fields.len()),
            ));
        }
        let mut ends = [0usize; 2];
        for (k, f) in fields[..2].iter().enumerate() {
            if f.text.is_empty() || f.text.contains(char::is_whitespace) {
                return Err(Error::parse(line_no, f.column, format!("invalid node name '{}'", f.text)));
            }
            ends[k] = match (g.index_of(f.text), declared) {
                (Some(i), _) => i,
                (None, false) => g.add_node(f.text),
                (None, true) => {
                    return Err(Error::parse(line_no, f.column, format!("unknown node '{}'", f.text)));
                }
            };
        }
        let w = parse_cell(s, fields[2])?;
        g.add_arc_at(s, ends[0], ends[1], w);
    }
    Ok(g)
}

/// Whether a file declaring `declared` may be read over the carrier named
/// `requested`. Interval carriers `I(..)` match their base semiring, and a
/// semiring matches its own completion.
fn declares(declared: &str, requested: &str) -> bool {
    let base = requested
        .strip_prefix("I(")
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(requested);
    declared == base
        || declared.parse::<NumericSemiring>().is_ok_and(|d| {
            [d.with_completion(true), d.with_completion(false)]
                .iter()
                .any(|v| v.descriptor().carrier_name == base)
        })
}

fn tab_fields(line_no: usize, line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut col = 1;
    for part in line.split('\t') {
        let lead = part.len() - part.trim_start().len();
        out.push(Token { text: part.trim(), line: line_no, column: col + part[..lead].chars().count() });
        col += part.chars().count() + 1;
    }
    out
}

/// Writes a graph with a `#nodes` directive and one line per arc.
pub fn write_graph<E: TextValue + Copy>(g: &WeightedDigraph<E>) -> String {
    let mut out = format!("#nodes {}\n", g.nodes().join(" "));
    for (i, j, w) in g.arcs() {
        out.push_str(&format!("{}\t{}\t{}\n", g.nodes()[i], g.nodes()[j], w.format_token()));
    }
    out
}
