//! Line-oriented text formats.
//!
//! ```text
//! SEMIMATROID v1          ARRANGEMENT v1          MATROID v1
//! elements 3              dim 3                   elements 2
//! labels 1 2 3            labels 1 2 3 4 5        R ; 0
//! C ; 0                   H 1 1 1 ; 0             R 0 ; 1
//! C 0 ; 1                 H 1 -1 0 ; 0            R 1 ; 1
//! C 0 2 ; 2               H 1/3 0 0 ; -2          R 0 1 ; 1
//! ```
//!
//! Indices are 0-based and strictly ascending. The `labels` line is
//! optional. `#` starts a comment; blank lines are ignored. Sets are written
//! in `(size, lex)` order.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::{Arrangement, Hyperplane};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::matroid::MatroidRank;
use crate::semimatroid::{check_exhaustive, Limits, Semimatroid};
use crate::subset::{all_subsets_sorted, GroundSet, Subset, MAX_BITS};

pub const SEMIMATROID_HEADER: &str = "SEMIMATROID v1";
pub const ARRANGEMENT_HEADER: &str = "ARRANGEMENT v1";
pub const MATROID_HEADER: &str = "MATROID v1";

/// Content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

struct Lines<'a, I: Iterator<Item = (usize, &'a str)>> {
    inner: std::iter::Peekable<I>,
    last: usize,
}

impl<'a, I: Iterator<Item = (usize, &'a str)>> Lines<'a, I> {
    fn new(inner: I) -> Self {
        Lines {
            inner: inner.peekable(),
            last: 0,
        }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.inner.next();
        if let Some((n, _)) = item {
            self.last = n;
        }
        item
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next()
            .ok_or_else(|| Error::parse(self.last + 1, format!("expected {}", what)))
    }

    fn header(&mut self, header: &str) -> Result<()> {
        let (n, line) = self.expect(header)?;
        if line != header {
            return Err(Error::parse(n, format!("expected header `{}`", header)));
        }
        Ok(())
    }

    fn keyword_count(&mut self, keyword: &str) -> Result<usize> {
        let (n, line) = self.expect(&format!("`{} <n>`", keyword))?;
        let mut parts = line.split_whitespace();
        if parts.next() != Some(keyword) {
            return Err(Error::parse(n, format!("expected `{} <n>`", keyword)));
        }
        let value = parts
            .next()
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| {
                Error::parse(n, format!("`{}` needs a non-negative integer", keyword))
            })?;
        if parts.next().is_some() {
            return Err(Error::parse(n, "trailing tokens"));
        }
        Ok(value)
    }

    /// An optional `labels ...` line with exactly `count` labels.
    fn labels(&mut self, count: usize) -> Result<Option<Vec<String>>> {
        let Some(&(n, line)) = self.inner.peek() else {
            return Ok(None);
        };
        let mut parts = line.split_whitespace();
        if parts.next() != Some("labels") {
            return Ok(None);
        }
        self.next();
        let labels: Vec<String> = parts.map(String::from).collect();
        if labels.len() != count {
            return Err(Error::parse(
                n,
                format!("expected {} labels, found {}", count, labels.len()),
            ));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::parse(n, "labels must be distinct"));
        }
        Ok(Some(labels))
    }
}

fn ground_of(n: usize, labels: Option<Vec<String>>) -> GroundSet {
    match labels {
        Some(l) => GroundSet::with_labels(l),
        None => GroundSet::new(n),
    }
}

/// Parse `<tag> <indices> ; <value>` into the index set and the value text.
fn tagged_row<'a>(n: usize, line: &'a str, tag: &str, size: usize) -> Result<(Subset, &'a str)> {
    let rest = line
        .strip_prefix(tag)
        .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
        .ok_or_else(|| Error::parse(n, format!("expected a `{}` line", tag)))?;
    let (indices, value) = rest
        .split_once(';')
        .ok_or_else(|| Error::parse(n, "missing `;`"))?;
    let mut set = Subset::EMPTY;
    let mut prev: Option<usize> = None;
    for tok in indices.split_whitespace() {
        let e: usize = tok
            .parse()
            .map_err(|_| Error::parse(n, format!("bad index `{}`", tok)))?;
        if e >= size {
            return Err(Error::parse(
                n,
                format!("index {} out of range for {} elements", e, size),
            ));
        }
        if prev.is_some_and(|p| p >= e) {
            return Err(Error::parse(n, "indices must be strictly ascending"));
        }
        prev = Some(e);
        set = set.with(e);
    }
    Ok((set, value.trim()))
}

fn parse_rank(n: usize, text: &str) -> Result<u32> {
    text.parse()
        .map_err(|_| Error::parse(n, format!("bad rank `{}`", text)))
}

fn check_size(n: usize, size: usize) -> Result<()> {
    if size > MAX_BITS {
        return Err(Error::parse(
            n,
            format!("at most {} elements are supported", MAX_BITS),
        ));
    }
    Ok(())
}

pub fn parse_semimatroid(text: &str) -> Result<Semimatroid> {
    parse_semimatroid_with_limits(text, Limits::default())
}

pub fn parse_semimatroid_with_limits(text: &str, limits: Limits) -> Result<Semimatroid> {
    let mut lines = Lines::new(content_lines(text));
    lines.header(SEMIMATROID_HEADER)?;
    let size = lines.keyword_count("elements")?;
    check_size(lines.last, size)?;
    limits.check_elements(size)?;
    let labels = lines.labels(size)?;
    let mut ranks: HashMap<Subset, u32> = HashMap::new();
    while let Some((n, line)) = lines.next() {
        let (set, value) = tagged_row(n, line, "C", size)?;
        let rank = parse_rank(n, value)?;
        if ranks.insert(set, rank).is_some() {
            return Err(Error::parse(n, "duplicate set"));
        }
        limits.check_central(ranks.len())?;
    }
    Semimatroid::with_limits(ground_of(size, labels), ranks, limits)
}

fn write_indices(out: &mut String, tag: &str, x: Subset) {
    out.push_str(tag);
    for e in x.iter() {
        let _ = write!(out, " {}", e);
    }
}

fn write_labels(out: &mut String, ground: &GroundSet) {
    if let Some(labels) = ground.labels() {
        let _ = writeln!(out, "labels {}", labels.join(" "));
    }
}

pub fn serialize_semimatroid(s: &Semimatroid) -> String {
    let mut out = format!("{}\nelements {}\n", SEMIMATROID_HEADER, s.n());
    write_labels(&mut out, s.ground());
    for (x, r) in s.central_ranks() {
        write_indices(&mut out, "C", x);
        let _ = writeln!(out, " ; {}", r);
    }
    out
}

/// `p`, `-p` or `p/q` with `q > 0`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (text, None),
    };
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits(unsigned) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = match den {
        Some(q) if digits(q) => q.parse().ok()?,
        Some(_) => return None,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom() == &BigInt::from(1) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement> {
    let mut lines = Lines::new(content_lines(text));
    lines.header(ARRANGEMENT_HEADER)?;
    let dim = lines.keyword_count("dim")?;
    let mut labels_line = None;
    let mut planes = Vec::new();
    let mut pending_labels: Option<(usize, Vec<String>)> = None;
    if let Some(&(n, line)) = lines.inner.peek() {
        if let Some(rest) = line.strip_prefix("labels") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                lines.next();
                pending_labels = Some((n, rest.split_whitespace().map(String::from).collect()));
            }
        }
    }
    while let Some((n, line)) = lines.next() {
        let rest = line
            .strip_prefix('H')
            .filter(|r| r.is_empty() || r.starts_with(char::is_whitespace))
            .ok_or_else(|| Error::parse(n, "expected an `H` line"))?;
        let (normal, offset) = rest
            .split_once(';')
            .ok_or_else(|| Error::parse(n, "missing `;`"))?;
        let normal: Vec<Rational> = normal
            .split_whitespace()
            .map(|t| {
                parse_rational(t).ok_or_else(|| Error::parse(n, format!("bad rational `{}`", t)))
            })
            .collect::<Result<_>>()?;
        if normal.len() != dim {
            return Err(Error::parse(
                n,
                format!("expected {} coefficients, found {}", dim, normal.len()),
            ));
        }
        let offset = offset.trim();
        let offset = parse_rational(offset)
            .ok_or_else(|| Error::parse(n, format!("bad rational `{}`", offset)))?;
        if normal.iter().all(Zero::is_zero) {
            return Err(Error::ZeroNormal(planes.len()));
        }
        planes.push(Hyperplane::new(normal, offset));
    }
    check_size(lines.last, planes.len())?;
    if let Some((n, labels)) = pending_labels {
        if labels.len() != planes.len() {
            return Err(Error::parse(
                n,
                format!("expected {} labels, found {}", planes.len(), labels.len()),
            ));
        }
        let distinct: HashSet<&String> = labels.iter().collect();
        if distinct.len() != labels.len() {
            return Err(Error::parse(n, "labels must be distinct"));
        }
        labels_line = Some(labels);
    }
    let a = Arrangement::new(dim, planes)?;
    match labels_line {
        Some(l) => a.with_labels(l),
        None => Ok(a),
    }
}

pub fn serialize_arrangement(a: &Arrangement) -> String {
    let mut out = format!("{}\ndim {}\n", ARRANGEMENT_HEADER, a.dim());
    if let Some(labels) = a.labels() {
        let _ = writeln!(out, "labels {}", labels.join(" "));
    }
    for h in a.planes() {
        out.push('H');
        for v in &h.normal {
            let _ = write!(out, " {}", format_rational(v));
        }
        let _ = writeln!(out, " ; {}", format_rational(&h.offset));
    }
    out
}

pub fn parse_matroid(text: &str) -> Result<MatroidRank> {
    let mut lines = Lines::new(content_lines(text));
    lines.header(MATROID_HEADER)?;
    let size = lines.keyword_count("elements")?;
    check_size(lines.last, size)?;
    check_exhaustive(size)?;
    let labels = lines.labels(size)?;
    let mut table: Vec<Option<u32>> = vec![None; 1 << size];
    while let Some((n, line)) = lines.next() {
        let (set, value) = tagged_row(n, line, "R", size)?;
        let slot = &mut table[set.bits() as usize];
        if slot.is_some() {
            return Err(Error::parse(n, "duplicate set"));
        }
        *slot = Some(parse_rank(n, value)?);
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(bits, r)| {
            r.ok_or_else(|| {
                Error::parse(
                    lines.last + 1,
                    format!("missing rank for {:?}", Subset::from_bits(bits as u64)),
                )
            })
        })
        .collect::<Result<Vec<u32>>>()?;
    MatroidRank::new(ground_of(size, labels), table)
}

pub fn serialize_matroid(m: &MatroidRank) -> String {
    let mut out = format!("{}\nelements {}\n", MATROID_HEADER, m.n());
    write_labels(&mut out, m.ground());
    for x in all_subsets_sorted(m.n()) {
        write_indices(&mut out, "R", x);
        let _ = writeln!(out, " ; {}", m.rank(x));
    }
    out
}
