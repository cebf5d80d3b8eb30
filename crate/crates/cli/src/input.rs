//! Graph sources for the scan pipeline.

use std::io::{self, BufRead};
use std::ops::RangeInclusive;

use cdcrit::families::FamilySpec;
use cdcrit::Graph;

use crate::enumerate::{enumerate_connected_graphs, EnumerateError, LabeledGraphs};

/// One unit of scan input. `index` is the 1-based line number for text
/// input and the 1-based ordinal otherwise.
#[derive(Clone, Debug)]
pub struct Item {
    pub index: u64,
    pub payload: Payload,
}

#[derive(Clone, Debug)]
pub enum Payload {
    /// An unparsed graph6 line; parsing happens in the workers.
    Line(String),
    Graph { graph: Graph, family: Option<String> },
}

pub enum Source {
    /// graph6 text, one graph per line; blank lines and a `>>graph6<<`
    /// header are skipped.
    Lines(Box<dyn BufRead + Send>),
    /// Connected labeled graphs for each order in the range.
    Enumerate {
        orders: RangeInclusive<usize>,
        dedup: bool,
        /// Graphs below this minimum degree never reach the pipeline.
        min_degree: usize,
    },
    Families(Vec<FamilySpec>),
}

/// Parses `N`, `LO-HI` or `LO..HI`.
pub fn parse_order_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order range `{s}`"));
    let (lo, hi) = match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let n = num(s)?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(format!("bad order range `{s}`"));
    }
    Ok(lo..=hi)
}

impl Source {
    pub fn into_items(self) -> Result<Box<dyn Iterator<Item = io::Result<Item>> + Send>, EnumerateError> {
        Ok(match self {
            Source::Lines(reader) => Box::new(
                reader
                    .lines()
                    .enumerate()
                    .filter_map(|(i, line)| match line {
                        Err(e) => Some(Err(e)),
                        Ok(l) => {
                            let t = l.trim_end_matches('\r');
                            let t = t.strip_prefix(">>graph6<<").unwrap_or(t);
                            (!t.trim().is_empty()).then(|| {
                                Ok(Item {
                                    index: i as u64 + 1,
                                    payload: Payload::Line(t.to_string()),
                                })
                            })
                        }
                    }),
            ),
            Source::Enumerate { orders, dedup, min_degree } => {
                let mut parts: Vec<Box<dyn Iterator<Item = Graph> + Send>> = Vec::new();
                for n in orders {
                    if min_degree > 0 && !dedup {
                        parts.push(Box::new(LabeledGraphs::new(n, min_degree)?));
                    } else {
                        let min = min_degree;
                        let it = enumerate_connected_graphs(n, dedup)?;
                        parts.push(Box::new(it.filter(move |g| cdcrit::invariants::min_degree(g) >= min)));
                    }
                }
                Box::new(parts.into_iter().flatten().enumerate().map(|(i, graph)| {
                    Ok(Item {
                        index: i as u64 + 1,
                        payload: Payload::Graph { graph, family: None },
                    })
                }))
            }
            Source::Families(specs) => Box::new(specs.into_iter().enumerate().map(|(i, spec)| {
                let (graph, _) = spec
                    .build()
                    .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e.to_string()))?;
                Ok(Item {
                    index: i as u64 + 1,
                    payload: Payload::Graph {
                        graph,
                        family: Some(spec.to_string()),
                    },
                })
            })),
        })
    }
}
