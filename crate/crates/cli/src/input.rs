//! Text inputs: `@path` arguments, words, permutations, term orders and
//! the simplicial complex format.

use std::collections::BTreeMap;

use gvdkit_core::polyalg::{Limits, TermOrder};
use gvdkit_core::roots::Word;
use gvdkit_core::simplicial::SimplicialComplex;

use crate::CliError;

/// Reads `@path` arguments from disk; anything else is returned as is.
pub fn resolve(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_string(), msg: e.to_string() }),
        None => Ok(arg.to_string()),
    }
}

/// A comma-separated word of 1-based simple indices; `e` or empty is the
/// identity.
pub fn parse_word(arg: &str) -> Result<Word, CliError> {
    Ok(Word::parse(&resolve(arg)?)?)
}

/// One-line notation, comma-separated.
pub fn parse_permutation(arg: &str) -> Result<Vec<usize>, CliError> {
    let text = resolve(arg)?;
    let mut out = Vec::new();
    let mut pos = 0;
    for part in text.trim().split(',') {
        let t = part.trim();
        let v = t.parse().map_err(|_| usage(pos, format!("expected a permutation entry, found `{}`", t)))?;
        out.push(v);
        pos += part.len() + 1;
    }
    Ok(out)
}

pub fn parse_order(name: &str) -> Result<TermOrder, CliError> {
    match name.to_ascii_lowercase().as_str() {
        "lex" => Ok(TermOrder::Lex),
        "grlex" | "deglex" | "gradedlex" => Ok(TermOrder::GradedLex),
        "grevlex" | "degrevlex" => Ok(TermOrder::GrevLex),
        other => Err(CliError::Usage(format!("unknown term order `{}` (lex, grlex, grevlex)", other))),
    }
}

/// `max_basis=N,max_degree=D`, either key optional.
pub fn parse_caps(text: &str) -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item.split_once('=').ok_or_else(|| CliError::Usage(format!("bad cap `{}`", item)))?;
        let bad = || CliError::Usage(format!("bad cap value `{}`", item));
        match key.trim() {
            "max_basis" => limits.max_basis = value.trim().parse().map_err(|_| bad())?,
            "max_degree" => limits.max_degree = value.trim().parse().map_err(|_| bad())?,
            other => return Err(CliError::Usage(format!("unknown cap `{}`", other))),
        }
    }
    Ok(limits)
}

fn usage(pos: usize, msg: String) -> CliError {
    CliError::Core(gvdkit_core::Error::Parse { pos, msg })
}

/// Parses one facet per line, vertices comma-separated. `{}` is the empty
/// face. A `# vertices: a,b,c` line fixes the vertex set and its order;
/// otherwise vertices are sorted numerically when all labels are integers
/// and taken in order of appearance if not. Other `#` lines are comments.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, CliError> {
    let mut declared: Option<Vec<String>> = None;
    let mut facets: Vec<Vec<String>> = Vec::new();
    let mut offset = 0;
    for line in text.lines() {
        let t = line.trim();
        let at = offset;
        offset += line.len() + 1;
        if let Some(rest) = t.strip_prefix('#') {
            if let Some(vs) = rest.trim().strip_prefix("vertices:") {
                declared = Some(split_labels(vs));
            }
            continue;
        }
        if t.is_empty() {
            continue;
        }
        if t == "{}" {
            facets.push(Vec::new());
            continue;
        }
        let labels = split_labels(t);
        if labels.iter().any(|l| l.is_empty()) {
            return Err(usage(at, "empty vertex label".to_string()));
        }
        facets.push(labels);
    }
    let labels = match declared {
        Some(l) => l,
        None => {
            let mut seen: Vec<String> = Vec::new();
            for l in facets.iter().flatten() {
                if !seen.contains(l) {
                    seen.push(l.clone());
                }
            }
            if seen.iter().all(|l| l.parse::<i64>().is_ok()) {
                seen.sort_by_key(|l| l.parse::<i64>().unwrap());
            }
            seen
        }
    };
    let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let mut idx_facets = Vec::new();
    for f in &facets {
        let mut face = Vec::new();
        for l in f {
            let i = index.get(l.as_str()).ok_or_else(|| CliError::Usage(format!("vertex `{}` is not declared", l)))?;
            face.push(*i);
        }
        idx_facets.push(face);
    }
    Ok(SimplicialComplex::with_labels(labels, idx_facets)?)
}

fn split_labels(s: &str) -> Vec<String> {
    s.split(',').map(|x| x.trim().to_string()).collect()
}

/// Inverse of [`parse_complex`], always declaring the vertex set.
pub fn format_complex(c: &SimplicialComplex) -> String {
    let labels = c.labels();
    let mut out = format!("# vertices: {}\n", labels.join(","));
    for f in c.facets() {
        if f.is_empty() {
            out.push_str("{}\n");
        } else {
            let names: Vec<&str> = f.iter().map(|&v| labels[v].as_str()).collect();
            out.push_str(&names.join(","));
            out.push('\n');
        }
    }
    out
}
