use std::fmt;
use std::str::FromStr;

use sombor::graph::{self, Graph};
use sombor::GraphError;

/// A named graph family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    Bipartite(usize, usize),
    Petersen,
}

impl Family {
    pub fn graph(self) -> Result<Graph, GraphError> {
        match self {
            Family::Path(n) => graph::path(n),
            Family::Cycle(n) => graph::cycle(n),
            Family::Star(n) => graph::star(n),
            Family::Complete(n) => graph::complete(n),
            Family::Bipartite(m, n) => graph::complete_bipartite(m, n),
            Family::Petersen => Ok(graph::petersen()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Bipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            Family::Petersen => f.write_str("petersen"),
        }
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "petersen" {
            return Ok(Family::Petersen);
        }
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| format!("bad family `{s}`: expected NAME:N, bipartite:M,N or petersen"))?;
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad family `{s}`: `{t}` is not a non-negative integer"))
        };
        match name {
            "path" => Ok(Family::Path(num(args)?)),
            "cycle" => Ok(Family::Cycle(num(args)?)),
            "star" => Ok(Family::Star(num(args)?)),
            "complete" => Ok(Family::Complete(num(args)?)),
            "bipartite" => {
                let (m, n) = args
                    .split_once(',')
                    .ok_or_else(|| format!("bad family `{s}`: expected bipartite:M,N"))?;
                Ok(Family::Bipartite(num(m)?, num(n)?))
            }
            other => Err(format!(
                "unknown family `{other}` (expected path, cycle, star, complete, bipartite or petersen)"
            )),
        }
    }
}
