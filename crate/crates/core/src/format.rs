//! Line-oriented structure files.
//!
//! ```text
//! ainfty v1
//! convention cochain
//! basis v1 0
//! basis v2 0
//! basis w 1
//! map 1: v1 -> 1 w
//! map 2: v1 v2 -> 1 v1
//! map 3: v1 w v2 -> -1 v1 + 1/2 v2
//! ```
//!
//! `#` starts a comment. Coefficients are integers or `p/q`. Words not
//! listed map to zero. With `convention chain` the declared degrees are
//! negated on load and restored on write.

use std::collections::{BTreeMap, HashMap};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::engine::{AStructure, MapSource, MultiMap};
use crate::error::{Error, Result};
use crate::graded::{format_scalar, Convention, GradedSpace, Scalar, Vector, Word};

pub const HEADER: &str = "ainfty v1";

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Parses `n`, `-n`, `p/q` or `-p/q`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix(['-', '+']).unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return None;
    }
    let n = BigInt::from_str(num.trim_start_matches('+')).ok()?;
    let d = BigInt::from_str(den).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Scalar::new(n, d))
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name != "->"
        && name != "+"
        && !name.contains([',', ':', '#'])
        && parse_scalar(name).is_none()
}

struct Entry {
    line: usize,
    arity: usize,
    word: Word,
    out: Vector,
}

fn parse_map_line(space: &GradedSpace, line: usize, rest: &str) -> Result<Entry> {
    let (head, body) = rest
        .split_once(':')
        .ok_or_else(|| parse_error(line, "expected `map <k>: <inputs> -> <outputs>`"))?;
    let arity: usize = head
        .trim()
        .parse()
        .map_err(|_| parse_error(line, format!("bad arity `{}`", head.trim())))?;
    if arity < 1 {
        return Err(parse_error(line, "arity must be at least 1"));
    }
    let (inputs, outputs) = body
        .split_once("->")
        .ok_or_else(|| parse_error(line, "missing `->`"))?;
    let letters = inputs
        .split_whitespace()
        .map(|name| {
            space
                .index_of(name)
                .ok_or_else(|| parse_error(line, format!("unknown basis name `{name}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    if letters.len() != arity {
        return Err(parse_error(
            line,
            format!("map {arity} given a word of length {}", letters.len()),
        ));
    }
    let word = Word::new(letters).map_err(|e| parse_error(line, e.to_string()))?;

    let mut out = Vector::zero();
    let outputs = outputs.trim();
    if outputs != "0" {
        for term in outputs.split('+') {
            let parts: Vec<&str> = term.split_whitespace().collect();
            let [coeff, name] = parts[..] else {
                return Err(parse_error(line, format!("expected `<coeff> <name>`, got `{}`", term.trim())));
            };
            let c = parse_scalar(coeff)
                .ok_or_else(|| parse_error(line, format!("malformed rational `{coeff}`")))?;
            let i = space
                .index_of(name)
                .ok_or_else(|| parse_error(line, format!("unknown basis name `{name}`")))?;
            out.add_term(i, c);
        }
    }
    Ok(Entry { line, arity, word, out })
}

/// Parses a structure file into an unprimed finite-table structure.
pub fn parse_structure(name: &str, text: &str) -> Result<AStructure> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, l)) if l == HEADER => {}
        Some((n, l)) => return Err(parse_error(n, format!("expected `{HEADER}`, got `{l}`"))),
        None => return Err(parse_error(1, "empty structure file")),
    }
    let convention = match lines.next() {
        Some((_, "convention cochain")) => Convention::Cochain,
        Some((_, "convention chain")) => Convention::Chain,
        Some((n, l)) => {
            return Err(parse_error(n, format!("expected `convention cochain|chain`, got `{l}`")))
        }
        None => return Err(parse_error(1, "missing convention line")),
    };

    let mut basis: Vec<(String, i64)> = Vec::new();
    let mut space: Option<Arc<GradedSpace>> = None;
    let mut entries: Vec<Entry> = Vec::new();
    for (n, l) in lines {
        let (keyword, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        match keyword {
            "basis" => {
                if space.is_some() {
                    return Err(parse_error(n, "basis lines must precede map lines"));
                }
                let parts: Vec<&str> = rest.split_whitespace().collect();
                let [bname, degree] = parts[..] else {
                    return Err(parse_error(n, "expected `basis <name> <degree>`"));
                };
                if !valid_name(bname) {
                    return Err(parse_error(n, format!("invalid basis name `{bname}`")));
                }
                if basis.iter().any(|(b, _)| b == bname) {
                    return Err(parse_error(n, format!("duplicate basis name `{bname}`")));
                }
                let degree: i64 = degree
                    .parse()
                    .map_err(|_| parse_error(n, format!("bad degree `{degree}`")))?;
                basis.push((bname.to_string(), degree));
            }
            "map" => {
                let sp = match &space {
                    Some(sp) => sp.clone(),
                    None => {
                        let sp = Arc::new(
                            GradedSpace::new(basis.clone(), convention)
                                .map_err(|e| parse_error(n, e.to_string()))?,
                        );
                        space = Some(sp.clone());
                        sp
                    }
                };
                entries.push(parse_map_line(&sp, n, rest)?);
            }
            other => return Err(parse_error(n, format!("unknown directive `{other}`"))),
        }
    }
    let space = match space {
        Some(s) => s,
        None => Arc::new(
            GradedSpace::new(basis, convention).map_err(|e| parse_error(1, e.to_string()))?,
        ),
    };

    let mut seen: HashMap<(usize, Word), usize> = HashMap::new();
    let mut by_arity: BTreeMap<usize, Vec<(Word, Vector)>> = BTreeMap::new();
    for e in entries {
        if let Some(first) = seen.insert((e.arity, e.word.clone()), e.line) {
            return Err(parse_error(
                e.line,
                format!("duplicate map entry (first given on line {first})"),
            ));
        }
        // Validates homogeneity with the offending line number.
        MultiMap::unprimed(space.clone(), e.arity, [(e.word.clone(), e.out.clone())])
            .map_err(|err| parse_error(e.line, err.to_string()))?;
        by_arity.entry(e.arity).or_default().push((e.word, e.out));
    }
    let maps = by_arity
        .into_iter()
        .map(|(k, es)| MultiMap::unprimed(space.clone(), k, es))
        .collect::<Result<Vec<_>>>()?;
    AStructure::from_table(name, space, false, maps)
}

/// Writes a finite unprimed structure back out in file form.
pub fn serialize_structure(s: &AStructure) -> Result<String> {
    if s.is_primed() {
        return Err(Error::Input("only unprimed structures are written to files".into()));
    }
    let MapSource::Table(table) = s.source() else {
        return Err(Error::Input(format!(
            "`{}` is generated at every arity and has no finite file form",
            s.name()
        )));
    };
    let space = s.space();
    let mut out = format!("{HEADER}\nconvention {}\n", space.convention());
    for (i, b) in space.basis().iter().enumerate() {
        out.push_str(&format!("basis {} {}\n", b.name, space.declared_degree(i)?));
    }
    for (arity, m) in table {
        for (w, v) in m.entries() {
            let terms = v
                .iter()
                .map(|(i, c)| format!("{} {}", format_scalar(c), space.name(i)))
                .collect::<Vec<_>>()
                .join(" + ");
            out.push_str(&format!("map {arity}: {} -> {terms}\n", space.word_names(&w).join(" ")));
        }
    }
    Ok(out)
}
