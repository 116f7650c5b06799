//! Session files.
//!
//! ```text
//! format_version 1
//! ring n=5
//! prime auto
//! seed 42
//! trials 3
//! ideal X = x0*x1, x0*x2
//! ideal Y = x3^2+x4^2+x5^2
//! function phi = 2*[x0] - [x0*x1]
//! ```
//!
//! `#` starts a comment. `ring` must precede every other declaration except
//! `format_version`. `prime` is a prime below `2^32` or `auto` (drawn from
//! the seed). An ideal with no generators (`ideal E =`) stands for the
//! empty scheme where an empty subscheme is meaningful.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use chernclass::charclasses::ConstructibleFunction;
use chernclass::polyring::{parse_polynomial, random_prime};
use chernclass::{Error, HomogeneousIdeal, PrimeField, SparsePolynomial};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl SessionError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

impl std::error::Error for SessionError {}

/// Values given on the command line, which take precedence over the file.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    /// `Some(None)` requests an automatically drawn prime.
    pub prime: Option<Option<u64>>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Session {
    pub n: usize,
    pub field: PrimeField,
    pub prime_was_auto: bool,
    pub seed: u64,
    pub trials: usize,
    pub ideals: BTreeMap<String, HomogeneousIdeal>,
    pub functions: BTreeMap<String, ConstructibleFunction>,
}

impl Session {
    pub fn ideal(&self, name: &str) -> Option<&HomogeneousIdeal> {
        self.ideals.get(name)
    }

    pub fn function(&self, name: &str) -> Option<&ConstructibleFunction> {
        self.functions.get(name)
    }

    /// The single generator of a principal ideal.
    pub fn hypersurface(&self, name: &str) -> Option<&SparsePolynomial> {
        match self.ideals.get(name)?.gens() {
            [f] => Some(f),
            _ => None,
        }
    }
}

pub fn parse_session(path: &Path, overrides: &Overrides) -> Result<Session, SessionError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| SessionError::new(0, 0, format!("cannot read {}: {e}", path.display())))?;
    parse_session_str(&text, overrides)
}

enum Body {
    Ideal(Vec<(usize, String)>),
    Function(Vec<(usize, i64, String)>),
}

struct Decl {
    line: usize,
    name: String,
    body: Body,
}

/// Column (1-based) of byte offset `at` within `line`.
fn col(at: usize) -> usize {
    at + 1
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Splits `rest` (starting at byte `offset` of the line) on commas.
fn split_gens(rest: &str, offset: usize) -> Vec<(usize, String)> {
    if rest.trim().is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut start = 0;
    for piece in rest.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        out.push((offset + start + lead, piece.trim().to_string()));
        start += piece.len() + 1;
    }
    out
}

/// Parses `2*[F] - [G] + [H]` into `(column, coefficient, polynomial text)`.
fn split_function(rest: &str, offset: usize, line: usize) -> Result<Vec<(usize, i64, String)>, SessionError> {
    let bytes = rest.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let skip = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip(&mut i);
    if i == bytes.len() {
        return Ok(out);
    }
    loop {
        let mut sign = 1i64;
        if out.is_empty() {
            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                sign = if bytes[i] == b'-' { -1 } else { 1 };
                i += 1;
            }
        } else {
            match bytes.get(i) {
                Some(b'+') => {}
                Some(b'-') => sign = -1,
                _ => return Err(SessionError::new(line, col(offset + i), "expected '+' or '-'")),
            }
            i += 1;
        }
        skip(&mut i);
        let num_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > num_start {
            let c = rest[num_start..i]
                .parse()
                .map_err(|_| SessionError::new(line, col(offset + num_start), "coefficient out of range"))?;
            skip(&mut i);
            if bytes.get(i) != Some(&b'*') {
                return Err(SessionError::new(line, col(offset + i), "expected '*' after coefficient"));
            }
            i += 1;
            skip(&mut i);
            c
        } else {
            1
        };
        if bytes.get(i) != Some(&b'[') {
            return Err(SessionError::new(line, col(offset + i), "expected '[' starting a hypersurface"));
        }
        let open = i;
        let close = rest[open..]
            .find(']')
            .map(|k| open + k)
            .ok_or_else(|| SessionError::new(line, col(offset + open), "unclosed '['"))?;
        let inner = &rest[open + 1..close];
        let lead = inner.len() - inner.trim_start().len();
        out.push((offset + open + 1 + lead, sign * coeff, inner.trim().to_string()));
        i = close + 1;
        skip(&mut i);
        if i == bytes.len() {
            return Ok(out);
        }
    }
}

fn parse_number<T: std::str::FromStr>(word: Option<&str>, line: usize, at: usize, what: &str) -> Result<T, SessionError> {
    word.and_then(|w| w.parse().ok())
        .ok_or_else(|| SessionError::new(line, col(at), format!("expected {what}")))
}

pub fn parse_session_str(text: &str, overrides: &Overrides) -> Result<Session, SessionError> {
    let mut n: Option<usize> = None;
    let mut prime: Option<Option<u64>> = None;
    let mut seed: Option<u64> = None;
    let mut trials: Option<usize> = None;
    let mut decls: Vec<Decl> = Vec::new();
    let mut names: BTreeMap<String, usize> = BTreeMap::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw);
        if content.trim().is_empty() {
            continue;
        }
        let lead = content.len() - content.trim_start().len();
        let trimmed = content.trim();
        let keyword = trimmed.split_whitespace().next().unwrap();
        let after_kw = lead + keyword.len();
        let rest = &content[after_kw..];
        let rest_lead = after_kw + (rest.len() - rest.trim_start().len());
        if keyword == "format_version" {
            let v: u32 = parse_number(rest.split_whitespace().next(), line, rest_lead, "a version number")?;
            if v != FORMAT_VERSION {
                return Err(SessionError::new(line, col(rest_lead), format!("unsupported format_version {v}")));
            }
            continue;
        }
        if n.is_none() && keyword != "ring" {
            return Err(SessionError::new(line, col(lead), "missing ring declaration"));
        }
        match keyword {
            "ring" => {
                if n.is_some() {
                    return Err(SessionError::new(line, col(lead), "duplicate ring declaration"));
                }
                let arg = rest.trim();
                let value = arg
                    .strip_prefix("n")
                    .map(str::trim_start)
                    .and_then(|s| s.strip_prefix('='))
                    .map(str::trim);
                let dim: usize = parse_number(value, line, rest_lead, "'n=<dimension>'")?;
                if dim + 1 > chernclass::polyring::MAX_VARS {
                    return Err(SessionError::new(
                        line,
                        col(rest_lead),
                        format!("n = {dim} exceeds the supported maximum {}", chernclass::polyring::MAX_VARS - 1),
                    ));
                }
                n = Some(dim);
            }
            "prime" => {
                let word = rest.split_whitespace().next();
                prime = Some(if word == Some("auto") {
                    None
                } else {
                    Some(parse_number(word, line, rest_lead, "a prime or 'auto'")?)
                });
            }
            "seed" => seed = Some(parse_number(rest.split_whitespace().next(), line, rest_lead, "a seed")?),
            "trials" => {
                let t: usize = parse_number(rest.split_whitespace().next(), line, rest_lead, "a trial count")?;
                if t == 0 {
                    return Err(SessionError::new(line, col(rest_lead), "trials must be at least 1"));
                }
                trials = Some(t);
            }
            "ideal" | "function" => {
                let eq = rest
                    .find('=')
                    .ok_or_else(|| SessionError::new(line, col(rest_lead), "expected '<name> = …'"))?;
                let name = rest[..eq].trim();
                if !is_name(name) {
                    return Err(SessionError::new(line, col(rest_lead), format!("invalid name '{name}'")));
                }
                if let Some(first) = names.get(name) {
                    return Err(SessionError::new(
                        line,
                        col(rest_lead),
                        format!("duplicate name '{name}' (first declared on line {first})"),
                    ));
                }
                names.insert(name.to_string(), line);
                let body_at = after_kw + eq + 1;
                let body_text = &content[body_at..];
                let body = if keyword == "ideal" {
                    Body::Ideal(split_gens(body_text, body_at))
                } else {
                    Body::Function(split_function(body_text, body_at, line)?)
                };
                decls.push(Decl {
                    line,
                    name: name.to_string(),
                    body,
                });
            }
            other => return Err(SessionError::new(line, col(lead), format!("unknown declaration '{other}'"))),
        }
    }

    let n = n.ok_or_else(|| SessionError::new(0, 0, "missing ring declaration"))?;
    let seed = overrides.seed.or(seed).unwrap_or(0);
    let trials = overrides.trials.or(trials).unwrap_or(3);
    let prime = overrides.prime.or(prime).unwrap_or(None);
    let prime_was_auto = prime.is_none();
    let p = prime.unwrap_or_else(|| random_prime(seed));
    let field = PrimeField::new(p).map_err(|e| SessionError::new(0, 0, e.to_string()))?;

    let poly_at = |text: &str, line: usize, at: usize| -> Result<SparsePolynomial, SessionError> {
        let f = parse_polynomial(text, n, field).map_err(|e| match e {
            Error::Parse { column, message } => SessionError::new(line, col(at) + column - 1, message),
            other => SessionError::new(line, col(at), other.to_string()),
        })?;
        if !f.is_homogeneous() {
            return Err(SessionError::new(line, col(at), "inhomogeneous generator"));
        }
        Ok(f)
    };

    let mut ideals = BTreeMap::new();
    let mut functions = BTreeMap::new();
    for decl in decls {
        match decl.body {
            Body::Ideal(gens) => {
                let polys = gens
                    .iter()
                    .map(|(at, g)| {
                        if g.is_empty() {
                            return Err(SessionError::new(decl.line, col(*at), "empty generator"));
                        }
                        poly_at(g, decl.line, *at)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let ideal = HomogeneousIdeal::new(n + 1, field, polys)
                    .map_err(|e| SessionError::new(decl.line, 1, e.to_string()))?;
                ideals.insert(decl.name, ideal);
            }
            Body::Function(terms) => {
                let mut parsed = Vec::with_capacity(terms.len());
                for (at, a, text) in &terms {
                    let f = poly_at(text, decl.line, *at)?;
                    if f.is_zero() {
                        return Err(SessionError::new(decl.line, col(*at), "zero hypersurface"));
                    }
                    parsed.push((*a, f));
                }
                let phi = ConstructibleFunction::new(n + 1, field, parsed)
                    .map_err(|e| SessionError::new(decl.line, 1, e.to_string()))?;
                functions.insert(decl.name, phi);
            }
        }
    }

    Ok(Session {
        n,
        field,
        prime_was_auto,
        seed,
        trials,
        ideals,
        functions,
    })
}
