//! Text forms of set partitions and diagrams.
//!
//! Blocks are separated by `|`, vertices by `,`; bottom-row vertices carry a
//! prime (`2'`). Whitespace is ignored. A raw restricted-growth string may be
//! given instead as `rgs:0,0,1,…`. Rectangular diagrams are prefixed with
//! their shape, `k,l:`.

use crate::diagram::{Diagram, RectDiagram};
use crate::error::{Error, Result};
use crate::setpart::SetPartition;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Vertex {
    label: usize,
    primed: bool,
}

enum Body {
    Rgs(Vec<usize>),
    Blocks(Vec<Vec<Vertex>>),
}

fn strip_ws(text: &str) -> String {
    text.chars().filter(|c| !c.is_whitespace()).collect()
}

fn parse_body(text: &str) -> Result<Body> {
    if let Some(rest) = text.strip_prefix("rgs:") {
        if rest.is_empty() {
            return Ok(Body::Rgs(Vec::new()));
        }
        let rgs = rest
            .split(',')
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad RGS entry {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(Body::Rgs(rgs));
    }
    if text.is_empty() {
        return Ok(Body::Blocks(Vec::new()));
    }
    let blocks = text
        .split('|')
        .map(|block| {
            if block.is_empty() {
                return Err(Error::Parse("empty block".into()));
            }
            block
                .split(',')
                .map(parse_vertex)
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Body::Blocks(blocks))
}

fn parse_vertex(token: &str) -> Result<Vertex> {
    let (digits, primed) = match token.strip_suffix('\'') {
        Some(d) => (d, true),
        None => (token, false),
    };
    let label: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad vertex {token:?}")))?;
    if label == 0 {
        return Err(Error::Parse("vertex labels start at 1".into()));
    }
    Ok(Vertex { label, primed })
}

/// Index of a vertex given the top-row length and both row bounds.
fn vertex_index(v: Vertex, top: usize, bottom: usize) -> Result<usize> {
    let (bound, offset) = if v.primed { (bottom, top) } else { (top, 0) };
    if v.label > bound {
        let shown = if v.primed {
            format!("{}'", v.label)
        } else {
            v.label.to_string()
        };
        return Err(Error::Parse(format!(
            "vertex {shown} exceeds row length {bound}"
        )));
    }
    Ok(offset + v.label - 1)
}

fn blocks_to_partition(blocks: &[Vec<Vertex>], top: usize, bottom: usize) -> Result<SetPartition> {
    let indexed = blocks
        .iter()
        .map(|b| b.iter().map(|&v| vertex_index(v, top, bottom)).collect())
        .collect::<Result<Vec<Vec<usize>>>>()?;
    SetPartition::from_blocks(top + bottom, &indexed)
}

/// Parses a set partition of `[g]` (no primes); `g` is the largest label
/// unless given.
pub fn parse_partition(text: &str, ground: Option<usize>) -> Result<SetPartition> {
    match parse_body(&strip_ws(text))? {
        Body::Rgs(rgs) => {
            if let Some(g) = ground {
                if rgs.len() != g {
                    return Err(Error::SizeMismatch {
                        expected: g,
                        found: rgs.len(),
                    });
                }
            }
            SetPartition::from_rgs(rgs)
        }
        Body::Blocks(blocks) => {
            if blocks.iter().flatten().any(|v| v.primed) {
                return Err(Error::Parse(
                    "primed vertex in a set partition of [g]".into(),
                ));
            }
            let g = ground.unwrap_or_else(|| max_label(&blocks));
            blocks_to_partition(&blocks, g, 0)
        }
    }
}

fn max_label(blocks: &[Vec<Vertex>]) -> usize {
    blocks.iter().flatten().map(|v| v.label).max().unwrap_or(0)
}

/// Parses a `k`-diagram; `k` is the largest vertex label unless given.
pub fn parse_diagram(text: &str, k: Option<usize>) -> Result<Diagram> {
    match parse_body(&strip_ws(text))? {
        Body::Rgs(rgs) => {
            let k = match k {
                Some(k) if rgs.len() != 2 * k => {
                    return Err(Error::SizeMismatch {
                        expected: 2 * k,
                        found: rgs.len(),
                    })
                }
                Some(k) => k,
                None if rgs.len() % 2 == 1 => {
                    return Err(Error::Parse(format!(
                        "RGS length {} is not twice a diagram size",
                        rgs.len()
                    )))
                }
                None => rgs.len() / 2,
            };
            Diagram::new(k, SetPartition::from_rgs(rgs)?)
        }
        Body::Blocks(blocks) => {
            let k = k.unwrap_or_else(|| max_label(&blocks));
            Diagram::new(k, blocks_to_partition(&blocks, k, k)?)
        }
    }
}

/// Parses a rectangular diagram `k,l:blocks`.
pub fn parse_rect(text: &str) -> Result<RectDiagram> {
    let text = strip_ws(text);
    let (shape, body) = text
        .split_once(':')
        .ok_or_else(|| Error::Parse("rectangular diagrams need a `k,l:` prefix".into()))?;
    let (top, bottom) = shape
        .split_once(',')
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
        .ok_or_else(|| Error::Parse(format!("bad shape {shape:?}")))?;
    let partition = match parse_body(body)? {
        Body::Rgs(rgs) => {
            if rgs.len() != top + bottom {
                return Err(Error::SizeMismatch {
                    expected: top + bottom,
                    found: rgs.len(),
                });
            }
            SetPartition::from_rgs(rgs)?
        }
        Body::Blocks(blocks) => blocks_to_partition(&blocks, top, bottom)?,
    };
    RectDiagram::new(top, bottom, partition)
}

impl std::str::FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_diagram(s, None)
    }
}

impl std::str::FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s, None)
    }
}

impl std::str::FromStr for RectDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rect(s)
    }
}
