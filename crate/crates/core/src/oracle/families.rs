use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "family")]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    CompleteBipartite {
        left: usize,
        right: usize,
    },
    /// K_{1,leaves}
    Star {
        leaves: usize,
    },
    Empty {
        n: usize,
    },
    RandomTree {
        n: usize,
        seed: u64,
    },
    Petersen,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path { n } => write!(f, "P{n}"),
            Family::Cycle { n } => write!(f, "C{n}"),
            Family::Complete { n } => write!(f, "K{n}"),
            Family::CompleteBipartite { left, right } => write!(f, "K{left},{right}"),
            Family::Star { leaves } => write!(f, "K1,{leaves}"),
            Family::Empty { n } => write!(f, "E{n}"),
            Family::RandomTree { n, seed } => write!(f, "T{n}#{seed}"),
            Family::Petersen => f.write_str("Petersen"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name:param[,param]`, e.g. `cycle:5`, `complete_bipartite:2,3`,
    /// `random_tree:8,42`, `petersen`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("cannot parse family `{s}`"));
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let nums: Vec<u64> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',').map(|a| a.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?
        };
        let one = || if nums.len() == 1 { Ok(nums[0] as usize) } else { Err(bad()) };
        let two = || if nums.len() == 2 { Ok((nums[0], nums[1])) } else { Err(bad()) };
        Ok(match name {
            "path" => Family::Path { n: one()? },
            "cycle" => Family::Cycle { n: one()? },
            "complete" => Family::Complete { n: one()? },
            "complete_bipartite" => {
                let (a, b) = two()?;
                Family::CompleteBipartite { left: a as usize, right: b as usize }
            }
            "star" => Family::Star { leaves: one()? },
            "empty" => Family::Empty { n: one()? },
            "random_tree" => {
                let (n, seed) = two()?;
                Family::RandomTree { n: n as usize, seed }
            }
            "petersen" if nums.is_empty() => Family::Petersen,
            _ => return Err(bad()),
        })
    }
}

fn invalid(msg: &str) -> Error {
    Error::Precondition(msg.to_string())
}

/// Builds a member of `family`; random trees are deterministic for a seed.
pub fn generate(family: Family) -> Result<Graph> {
    match family {
        Family::Path { n } => {
            if n == 0 {
                return Err(invalid("path needs at least one vertex"));
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle needs at least three vertices"));
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete { n } => Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))),
        Family::CompleteBipartite { left, right } => {
            if left == 0 || right == 0 {
                return Err(invalid("complete bipartite sides must be nonempty"));
            }
            Graph::from_edges(left + right, (0..left).flat_map(|u| (0..right).map(move |v| (u, left + v))))
        }
        Family::Star { leaves } => generate(Family::CompleteBipartite { left: 1, right: leaves }),
        Family::Empty { n } => Graph::empty(n),
        Family::RandomTree { n, seed } => random_tree(n, seed),
        Family::Petersen => {
            Graph::from_edges(10, (0..5).flat_map(|i| [(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]))
        }
    }
}

/// Uniform labeled tree via a random Prüfer sequence.
fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|i| (0, i)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    prufer.iter().for_each(|&x| degree[x] += 1);
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &prufer {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}
