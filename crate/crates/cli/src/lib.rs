//! Implementation of the `kleene` command.
//!
//! One invocation runs one task on one input file. The input is either a
//! matrix file or a tab-separated graph file (detected from its content),
//! holding scalars or, with `--interval`, `lo..hi` intervals.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, ValueEnum};
use kleene::graph::{looks_like_graph, parse_graph, semiring_directive, write_graph, WeightedDigraph};
use kleene::interval::IntervalSemiring;
use kleene::linalg::{closure_with, solve_bellman_with, star_series, ClosureAlgorithm, Matrix};
use kleene::semiring::{scalar_product, Counting, NumericSemiring, Semiring};
use kleene::text::{parse_matrix, write_matrix, TextValue};
use kleene::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Task {
    /// Closure `A*` of a square matrix or graph, printed as a matrix.
    Closure,
    /// Least solution `A*B` of `X = AX ⊕ B`; needs `--b`.
    Bellman,
    /// Scalar product of two vectors: the two rows of the input, or the
    /// input and `--b`.
    Dot,
    /// All-pairs path values of a graph, printed as a graph.
    Path,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "kleene", version, about = "Closures, Bellman equations and interval bounds over numerical semirings")]
pub struct Args {
    /// Matrix or graph file.
    pub input: PathBuf,

    /// maxplus, maxplus-complete, minplus, maxmin[:a:b], plustimes or
    /// subtropical:h. Defaults to the file's #semiring directive.
    #[arg(long)]
    pub semiring: Option<String>,

    #[arg(long, value_enum, default_value_t = Task::Closure)]
    pub task: Task,

    /// elimination, block or series.
    #[arg(long, default_value = "elimination")]
    pub algorithm: ClosureAlgorithm,

    /// Read entries as intervals `lo..hi` and compute interval bounds.
    #[arg(long)]
    pub interval: bool,

    /// Append a `#ops` line with the number of basic operations performed.
    #[arg(long)]
    pub count_ops: bool,

    /// Right-hand side matrix for `--task bellman`, second vector for `--task dot`.
    #[arg(long = "b", value_name = "PATH")]
    pub b: Option<PathBuf>,

    /// Write the result here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Number of powers summed by `--algorithm series` (default: the matrix size).
    #[arg(long)]
    pub max_terms: Option<usize>,

    /// Use the non-completed carrier, so that divergent closures are errors
    /// instead of `inf` entries.
    #[arg(long)]
    pub strict_divergence: bool,
}

/// Process exit status for an error: 1 for bad input, 2 for a divergent
/// closure, 3 for an operation the carrier does not support.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Divergence(_) => 2,
        Error::Unsupported { .. } | Error::Undefined { .. } => 3,
        _ => 1,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

/// Runs the command and writes its output.
pub fn run(args: &Args) -> Result<(), Error> {
    let out = render(args)?;
    match &args.output {
        Some(path) => fs::write(path, out).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

/// Runs the command and returns what it would print.
pub fn render(args: &Args) -> Result<String, Error> {
    let text = read(&args.input)?;
    let b_text = args.b.as_deref().map(read).transpose()?;

    let id = match (&args.semiring, semiring_directive(&text)) {
        (Some(id), _) => id.clone(),
        (None, Some(id)) => id,
        (None, None) => return Err(usage("no semiring given: pass --semiring or add a #semiring line")),
    };
    let s = id.parse::<NumericSemiring>()?.with_completion(!args.strict_divergence);

    let algorithm = match (args.algorithm, args.max_terms) {
        (ClosureAlgorithm::Series(_), terms) => ClosureAlgorithm::Series(terms),
        (_, Some(_)) => return Err(usage("--max-terms only applies to --algorithm series")),
        (alg, None) => alg,
    };
    if args.interval && matches!(algorithm, ClosureAlgorithm::Series(_)) {
        return Err(Error::Unsupported {
            op: "interval closure by series (stopping rule compares values)",
            carrier: format!("I({s})"),
        });
    }

    let job = Job { args, algorithm, id: &id, text: &text, b_text: b_text.as_deref() };
    match (args.interval, args.count_ops) {
        (false, false) => job.execute(&s),
        (true, false) => job.execute(&IntervalSemiring::new(s)),
        (false, true) => {
            let c = Counting::new(s);
            let out = job.execute(&c)?;
            Ok(format!("{out}#ops {}\n", c.counts()))
        }
        (true, true) => {
            // counted in operations of the base semiring
            let c = Counting::new(s);
            let out = job.execute(&IntervalSemiring::new(&c))?;
            Ok(format!("{out}#ops {}\n", c.counts()))
        }
    }
}

struct Job<'a> {
    args: &'a Args,
    algorithm: ClosureAlgorithm,
    id: &'a str,
    text: &'a str,
    b_text: Option<&'a str>,
}

impl Job<'_> {
    fn execute<S>(&self, s: &S) -> Result<String, Error>
    where
        S: Semiring,
        S::Elem: TextValue,
    {
        let (a, names) = if looks_like_graph(self.text) {
            let g = parse_graph(s, self.text)?;
            (g.to_matrix(s), Some(g.nodes().to_vec()))
        } else {
            (parse_matrix(s, self.text)?, None)
        };
        let b = self.b_text.map(|t| parse_matrix(s, t)).transpose()?;

        match self.args.task {
            Task::Closure => self.closure(s, &a),
            Task::Bellman => {
                let b = b.ok_or_else(|| usage("--task bellman needs a right-hand side: pass --b <path>"))?;
                Ok(write_matrix(&solve_bellman_with(s, &a, &b, self.algorithm)?))
            }
            Task::Dot => {
                let (x, y) = match &b {
                    Some(b) => (a.data(), b.data()),
                    None if a.rows() == 2 => (a.row(0), a.row(1)),
                    None => return Err(usage("--task dot needs a two-row input or --b <path>")),
                };
                let v = scalar_product(s, x, y)?;
                Ok(write_matrix(&Matrix::new(1, 1, vec![v])?))
            }
            Task::Path => {
                let star = closure_with(s, &a, self.algorithm)?;
                let g = WeightedDigraph::from_matrix(s, &star, names)?;
                Ok(format!("#semiring {}\n{}", self.id, write_graph(&g)))
            }
        }
    }

    fn closure<S>(&self, s: &S, a: &Matrix<S::Elem>) -> Result<String, Error>
    where
        S: Semiring,
        S::Elem: TextValue,
    {
        match self.algorithm {
            ClosureAlgorithm::Series(terms) => {
                let r = star_series(s, a, terms.unwrap_or(a.rows()))?;
                Ok(format!(
                    "{}#series terms={} stabilized={}\n",
                    write_matrix(&r.sum),
                    r.terms,
                    r.stabilized
                ))
            }
            alg => Ok(write_matrix(&closure_with(s, a, alg)?)),
        }
    }
}
