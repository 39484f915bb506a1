//! Line-oriented text formats for settings, algebras and witness reports.
//!
//! Setting files:
//!
//! ```text
//! # Kronecker quiver
//! vertices: a b
//! arrow: a b
//! arrow: a b
//! dim: a=1 b=1
//! ```
//!
//! Algebra files give `blocks: n_1 .. n_l` followed by `l` lines
//! `rank: r_{i,1} .. r_{i,l}`. Tokens are whitespace separated, `#` starts a
//! comment and vertex names match `[A-Za-z0-9_]+`.

use std::fmt::Write as _;

use crate::algebra::AlgebraSpec;
use crate::error::{Error, Result};
use crate::euclid::EuclideanType;
use crate::quiver::{Arrow, DimVector, Embedding, Quiver, QuiverSetting};
use crate::witness::{EuclideanWitness, SubrootWitness, Witness};

fn err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

/// Non-empty lines with comments stripped, as `(line number, directive, rest)`.
fn directives(text: &str) -> impl Iterator<Item = (usize, Result<(&str, &str)>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            return None;
        }
        let parsed = match line.split_once(':') {
            Some((key, rest)) => Ok((key.trim(), rest.trim())),
            None => Err(Error::Parse { line: i + 1, message: format!("expected `directive: ...`, got `{line}`") }),
        };
        Some((i + 1, parsed))
    })
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_count(line: usize, s: &str, what: &str) -> Result<u64> {
    if s.starts_with('-') {
        return err(line, format!("negative {what} `{s}`"));
    }
    s.parse().or_else(|_| err(line, format!("invalid {what} `{s}`")))
}

pub fn parse_setting(text: &str) -> Result<QuiverSetting> {
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows = Vec::new();
    let mut dim: Option<Vec<Option<u64>>> = None;
    let mut last = 1;
    let lookup = |vs: &Option<Vec<String>>, line: usize, name: &str| -> Result<usize> {
        match vs {
            None => err(line, "`vertices:` must come first"),
            Some(vs) => match vs.iter().position(|v| v == name) {
                Some(x) => Ok(x),
                None => err(line, format!("undeclared vertex `{name}`")),
            },
        }
    };
    for (line, parsed) in directives(text) {
        last = line;
        let (key, rest) = parsed?;
        match key {
            "vertices" => {
                if vertices.is_some() {
                    return err(line, "`vertices:` given twice");
                }
                let mut names: Vec<String> = Vec::new();
                for tok in rest.split_whitespace() {
                    if !valid_name(tok) {
                        return err(line, format!("invalid vertex name `{tok}`"));
                    }
                    if names.iter().any(|n| n == tok) {
                        return err(line, format!("duplicate vertex `{tok}`"));
                    }
                    names.push(tok.to_string());
                }
                vertices = Some(names);
            }
            "arrow" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 2 {
                    return err(line, "`arrow:` takes a source and a target");
                }
                let s = lookup(&vertices, line, toks[0])?;
                let t = lookup(&vertices, line, toks[1])?;
                arrows.push(Arrow::new(s, t));
            }
            "dim" => {
                if dim.is_some() {
                    return err(line, "`dim:` given twice");
                }
                let n = vertices.as_ref().map_or(0, Vec::len);
                let mut entries = vec![None; n];
                for tok in rest.split_whitespace() {
                    let Some((name, value)) = tok.split_once('=') else {
                        return err(line, format!("expected `vertex=value`, got `{tok}`"));
                    };
                    let x = lookup(&vertices, line, name)?;
                    if entries[x].is_some() {
                        return err(line, format!("dimension of `{name}` given twice"));
                    }
                    entries[x] = Some(parse_count(line, value, "dimension")?);
                }
                if let Some(x) = entries.iter().position(Option::is_none) {
                    return err(line, format!("missing dimension for `{}`", vertices.as_ref().unwrap()[x]));
                }
                dim = Some(entries);
            }
            other => return err(line, format!("unknown directive `{other}`")),
        }
    }
    let Some(vertices) = vertices else {
        return err(last, "missing `vertices:`");
    };
    let Some(dim) = dim else {
        return err(last, "missing `dim:`");
    };
    let quiver = Quiver::new(vertices, arrows)?;
    QuiverSetting::new(quiver, DimVector::new(dim.into_iter().flatten().collect()))
}

/// Canonical text of a setting; [`parse_setting`] inverts it exactly.
pub fn serialize_setting(setting: &QuiverSetting) -> String {
    let q = setting.quiver();
    let mut out = format!("vertices: {}\n", q.vertices().join(" "));
    for a in q.arrows() {
        let _ = writeln!(out, "arrow: {} {}", q.name(a.source), q.name(a.target));
    }
    let dims: Vec<String> = q.vertices().iter().zip(setting.dim().entries()).map(|(v, d)| format!("{v}={d}")).collect();
    let _ = writeln!(out, "dim: {}", dims.join(" "));
    out
}

pub fn parse_algebra(text: &str) -> Result<AlgebraSpec> {
    let mut blocks: Option<(usize, Vec<u64>)> = None;
    let mut ranks = Vec::new();
    let mut last = 1;
    for (line, parsed) in directives(text) {
        last = line;
        let (key, rest) = parsed?;
        let numbers =
            |what: &str| rest.split_whitespace().map(|t| parse_count(line, t, what)).collect::<Result<Vec<u64>>>();
        match key {
            "blocks" => {
                if blocks.is_some() {
                    return err(line, "`blocks:` given twice");
                }
                let sizes = numbers("block size")?;
                if sizes.is_empty() {
                    return err(line, "`blocks:` needs at least one size");
                }
                blocks = Some((line, sizes));
            }
            "rank" => {
                let Some((_, sizes)) = &blocks else {
                    return err(line, "`blocks:` must come first");
                };
                let row = numbers("rank")?;
                if row.len() != sizes.len() {
                    return err(line, format!("rank row has {} entries, expected {}", row.len(), sizes.len()));
                }
                if ranks.len() == sizes.len() {
                    return err(line, format!("more than {} rank rows", sizes.len()));
                }
                ranks.push(row);
            }
            other => return err(line, format!("unknown directive `{other}`")),
        }
    }
    let Some((line, sizes)) = blocks else {
        return err(last, "missing `blocks:`");
    };
    if ranks.len() != sizes.len() {
        return err(last, format!("{} rank rows, expected {}", ranks.len(), sizes.len()));
    }
    AlgebraSpec::new(sizes, ranks).or_else(|e| err(line, e.to_string()))
}

pub fn serialize_algebra(spec: &AlgebraSpec) -> String {
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!("blocks: {}\n", join(spec.block_sizes()));
    for row in spec.ranks() {
        let _ = writeln!(out, "rank: {}", join(row));
    }
    out
}

/// Witness report: a header line, one line per vertex in ambient order, then
/// one line per arrow giving its ambient index and endpoints.
pub fn render_euclidean(setting: &QuiverSetting, w: &EuclideanWitness) -> String {
    let q = setting.quiver();
    let sub = w.subquiver();
    let mut out = format!("WITNESS type={} m={}\n", w.kind(), w.multiplier());
    for (local, &x) in w.ambient_vertices().iter().enumerate() {
        let _ = writeln!(out, "vertex {} -> {} h={}", q.name(x), sub.name(local), w.radical().get(local));
    }
    for &k in w.embedding().arrow_map() {
        let a = q.arrows()[k];
        let _ = writeln!(out, "arrow {k} {} -> {}", q.name(a.source), q.name(a.target));
    }
    out
}

pub fn render_subroot(setting: &QuiverSetting, w: &SubrootWitness) -> String {
    let q = setting.quiver();
    let dims: Vec<String> = q.vertices().iter().zip(w.vector.entries()).map(|(v, d)| format!("{v}={d}")).collect();
    format!("SUBROOT q={}\ndim: {}\n", w.q, dims.join(" "))
}

pub fn render_witness(setting: &QuiverSetting, w: &Witness) -> String {
    match w {
        Witness::Euclidean(e) => render_euclidean(setting, e),
        Witness::Subroot(s) => render_subroot(setting, s),
    }
}

/// Reads a report produced by [`render_euclidean`] against `setting`. The
/// result is structurally well formed but not yet checked; call
/// [`EuclideanWitness::validate`].
pub fn parse_euclidean(setting: &QuiverSetting, text: &str) -> Result<EuclideanWitness> {
    let q = setting.quiver();
    let mut header: Option<(EuclideanType, u64)> = None;
    let mut vertices: Vec<(usize, String, u64)> = Vec::new();
    let mut arrows: Vec<usize> = Vec::new();
    let mut last = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks: Vec<&str> = raw.split('#').next().unwrap_or("").split_whitespace().collect();
        if toks.is_empty() {
            continue;
        }
        last = line;
        match toks[0] {
            "WITNESS" => {
                if header.is_some() {
                    return err(line, "second WITNESS header");
                }
                let field = |k: usize, key: &str| -> Result<&str> {
                    match toks.get(k).and_then(|t| t.strip_prefix(key)) {
                        Some(v) => Ok(v),
                        None => err(line, format!("expected `{key}...`")),
                    }
                };
                if toks.len() != 3 {
                    return err(line, "expected `WITNESS type=<type> m=<int>`");
                }
                let kind: EuclideanType = field(1, "type=")?.parse().or_else(|e: Error| err(line, e.to_string()))?;
                let m = parse_count(line, field(2, "m=")?, "multiplier")?;
                header = Some((kind, m));
            }
            "vertex" => {
                if toks.len() != 5 || toks[2] != "->" {
                    return err(line, "expected `vertex <name> -> <position> h=<int>`");
                }
                let x = q.index_of(toks[1]).map_or_else(|| err(line, format!("unknown vertex `{}`", toks[1])), Ok)?;
                let Some(h) = toks[4].strip_prefix("h=") else {
                    return err(line, "expected `h=<int>`");
                };
                vertices.push((x, toks[3].to_string(), parse_count(line, h, "radical entry")?));
            }
            "arrow" => {
                if toks.len() != 5 || toks[3] != "->" {
                    return err(line, "expected `arrow <index> <source> -> <target>`");
                }
                let k: usize = toks[1].parse().or_else(|_| err(line, format!("invalid arrow index `{}`", toks[1])))?;
                let Some(a) = q.arrows().get(k) else {
                    return err(line, format!("arrow index {k} out of range"));
                };
                if q.name(a.source) != toks[2] || q.name(a.target) != toks[4] {
                    return err(line, format!("arrow {k} is {} -> {}", q.name(a.source), q.name(a.target)));
                }
                arrows.push(k);
            }
            other => return err(line, format!("unknown line `{other}`")),
        }
    }
    let Some((kind, m)) = header else {
        return err(last, "missing WITNESS header");
    };
    vertices.sort_by_key(|v| v.0);
    let vmap: Vec<usize> = vertices.iter().map(|v| v.0).collect();
    let local = |x: usize| {
        vmap.binary_search(&x)
            .map_err(|_| Error::InvalidEmbedding(format!("arrow leaves the witness at `{}`", q.name(x))))
    };
    let sub_arrows = arrows
        .iter()
        .map(|&k| {
            let a = q.arrows()[k];
            Ok(Arrow::new(local(a.source)?, local(a.target)?))
        })
        .collect::<Result<Vec<_>>>()?;
    let sub = Quiver::new(vertices.iter().map(|v| v.1.clone()).collect(), sub_arrows)?;
    let radical = DimVector::new(vertices.iter().map(|v| v.2).collect());
    let embedding = Embedding::new(sub, q.clone(), vmap, arrows)?;
    Ok(EuclideanWitness::from_raw(kind, embedding, radical, m))
}
