//! Text format for saturation bundles.
//!
//! ```text
//! [meta]
//! family = GP
//! n = 8
//! k = 3
//! r = 6
//!
//! [groups]
//! A1: x3 x4 x5
//! ...
//!
//! [missing]
//! A5 A6
//!
//! [moves]
//! M1: x0 A4 -> A6 ; missing A4 A5
//!
//! [coverage]
//! x0 y1 -> x1 y0 @ base
//! ```
//!
//! Group labels are 1-based in the file and 0-based in memory. Lines
//! starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{edge, Edge, GpLabel};

use super::{CertId, CoverageEntry, MoveRule, PartitionCert, SaturationBundle};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {msg}")]
pub struct BundleParseError {
    pub line: usize,
    pub msg: String,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Meta,
    Groups,
    Missing,
    Moves,
    Coverage,
}

pub fn parse_bundle(text: &str) -> Result<SaturationBundle, BundleParseError> {
    let mut section = Section::None;
    let (mut family, mut n, mut k, mut r) = (None, None, None, None);
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut missing = None;
    let mut moves = Vec::new();
    let mut coverage = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |msg: String| BundleParseError { line, msg };
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if s.starts_with('[') {
            section = match s {
                "[meta]" => Section::Meta,
                "[groups]" => Section::Groups,
                "[missing]" => Section::Missing,
                "[moves]" => Section::Moves,
                "[coverage]" => Section::Coverage,
                _ => return Err(err(format!("unknown section {s}"))),
            };
            continue;
        }
        // Labels can only be resolved once n is known.
        let need_n = || n.ok_or_else(|| err("[meta] must give n before this section".into()));
        match section {
            Section::None => return Err(err("content outside any section".into())),
            Section::Meta => {
                let (key, value) = s
                    .split_once('=')
                    .ok_or_else(|| err(format!("expected key = value, got {s:?}")))?;
                let value = value.trim();
                let num = || value.parse::<usize>().map_err(|_| err(format!("bad number {value:?}")));
                match key.trim() {
                    "family" => family = Some(value.to_string()),
                    "n" => n = Some(num()?),
                    "k" => k = Some(num()?),
                    "r" => r = Some(num()?),
                    other => return Err(err(format!("unknown key {other:?}"))),
                }
            }
            Section::Groups => {
                let n = need_n()?;
                let (name, rest) = s.split_once(':').ok_or_else(|| err("expected `A<i>: labels`".into()))?;
                let idx = parse_group(name).map_err(err)?;
                if idx != groups.len() {
                    return Err(err(format!("expected A{}, got {}", groups.len() + 1, name.trim())));
                }
                let members = rest
                    .split_whitespace()
                    .map(|t| parse_vertex(t, n))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?;
                groups.push(members);
            }
            Section::Missing => {
                if missing.is_some() {
                    return Err(err("duplicate missing pair".into()));
                }
                let toks: Vec<&str> = s.split_whitespace().collect();
                let [a, b] = toks[..] else {
                    return Err(err("expected two group labels".into()));
                };
                missing = Some(pair(parse_group(a).map_err(err)?, parse_group(b).map_err(err)?));
            }
            Section::Moves => {
                let n = need_n()?;
                let (name, rest) = s.split_once(':').ok_or_else(|| err("expected `M<i>: ...`".into()))?;
                let expected = format!("M{}", moves.len() + 1);
                if name.trim() != expected {
                    return Err(err(format!("expected {expected}, got {}", name.trim())));
                }
                let (mv, miss) = rest
                    .split_once(';')
                    .ok_or_else(|| err("expected `; missing A<i> A<j>`".into()))?;
                let toks: Vec<&str> = mv.split_whitespace().collect();
                let [v, from, "->", to] = toks[..] else {
                    return Err(err(format!("expected `vertex A<i> -> A<j>`, got {:?}", mv.trim())));
                };
                let vertex: GpLabel = v.parse().map_err(|e| err(format!("{e}")))?;
                parse_vertex(v, n).map_err(err)?;
                let toks: Vec<&str> = miss.split_whitespace().collect();
                let ["missing", a, b] = toks[..] else {
                    return Err(err("expected `missing A<i> A<j>`".into()));
                };
                moves.push(MoveRule {
                    vertex,
                    from: parse_group(from).map_err(err)?,
                    to: parse_group(to).map_err(err)?,
                    missing: pair(parse_group(a).map_err(err)?, parse_group(b).map_err(err)?),
                });
            }
            Section::Coverage => {
                let n = need_n()?;
                let (edges, cert) = s.split_once('@').ok_or_else(|| err("expected `... @ cert`".into()))?;
                let (canon, inst) = edges
                    .split_once("->")
                    .ok_or_else(|| err("expected `u v -> u v`".into()))?;
                let cert = match cert.trim() {
                    "base" => CertId::Base,
                    c => {
                        let i = c
                            .strip_prefix('M')
                            .and_then(|d| d.parse::<usize>().ok())
                            .filter(|&i| i >= 1)
                            .ok_or_else(|| err(format!("bad certificate name {c:?}")))?;
                        CertId::Move(i - 1)
                    }
                };
                coverage.push(CoverageEntry {
                    canonical: parse_edge(canon, n).map_err(err)?,
                    instance: parse_edge(inst, n).map_err(err)?,
                    cert,
                });
            }
        }
    }

    let end = text.lines().count();
    let err = |msg: &str| BundleParseError {
        line: end,
        msg: msg.to_string(),
    };
    match family.as_deref() {
        Some("GP") => {}
        Some(f) => return Err(err(&format!("unsupported family {f:?}"))),
        None => return Err(err("missing family")),
    }
    Ok(SaturationBundle {
        n: n.ok_or_else(|| err("missing n"))?,
        k: k.ok_or_else(|| err("missing k"))?,
        r: r.ok_or_else(|| err("missing r"))?,
        base: PartitionCert {
            groups,
            missing: missing.ok_or_else(|| err("missing [missing] pair"))?,
        },
        moves,
        coverage,
    })
}

pub fn write_bundle(b: &SaturationBundle) -> String {
    let mut out = String::new();
    let label = |v: usize| GpLabel::from_vertex(v, b.n).to_string();
    let pair_str = |(x, y): (usize, usize)| format!("A{} A{}", x + 1, y + 1);
    let _ = writeln!(out, "[meta]\nfamily = GP\nn = {}\nk = {}\nr = {}\n", b.n, b.k, b.r);
    out += "[groups]\n";
    for (i, g) in b.base.groups.iter().enumerate() {
        let names: Vec<String> = g.iter().map(|&v| label(v)).collect();
        let _ = writeln!(out, "A{}: {}", i + 1, names.join(" "));
    }
    let _ = writeln!(out, "\n[missing]\n{}\n", pair_str(b.base.missing));
    out += "[moves]\n";
    for (i, m) in b.moves.iter().enumerate() {
        let _ = writeln!(out, "M{}: {} ; missing {}", i + 1, m.describe(), pair_str(m.missing));
    }
    out += "\n[coverage]\n";
    for c in &b.coverage {
        let _ = writeln!(
            out,
            "{} {} -> {} {} @ {}",
            label(c.canonical.0),
            label(c.canonical.1),
            label(c.instance.0),
            label(c.instance.1),
            c.cert
        );
    }
    out
}

fn pair(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn parse_group(tok: &str) -> Result<usize, String> {
    tok.trim()
        .strip_prefix('A')
        .and_then(|d| d.parse::<usize>().ok())
        .filter(|&i| i >= 1)
        .map(|i| i - 1)
        .ok_or_else(|| format!("bad group label {:?}", tok.trim()))
}

fn parse_vertex(tok: &str, n: usize) -> Result<usize, String> {
    let label: GpLabel = tok.parse().map_err(|e| format!("{e}"))?;
    label.to_vertex(n).map_err(|e| format!("{e}"))
}

fn parse_edge(s: &str, n: usize) -> Result<Edge, String> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let [u, v] = toks[..] else {
        return Err(format!("expected two vertex labels, got {:?}", s.trim()));
    };
    let (u, v) = (parse_vertex(u, n)?, parse_vertex(v, n)?);
    if u == v {
        return Err(format!("loop at {}", GpLabel::from_vertex(u, n)));
    }
    Ok(edge(u, v))
}
