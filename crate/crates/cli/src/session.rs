//! The input language: `;`-terminated statements declaring one ring and
//! named ideals, modules and matrices over it. `//` starts a comment.

use std::collections::BTreeMap;
use std::fmt;

use locdual::ring::text::{line_column, parse_polynomial_span};
use locdual::ring::{Field, Polynomial, Ring, RingMatrix, RingVector};
use locdual::Error;

/// A declared object.
#[derive(Clone, Debug, PartialEq)]
pub enum Object {
    Ideal(Vec<Polynomial>),
    /// Presentation matrix; its columns generate the relations.
    Module(RingMatrix),
    Matrix(RingMatrix),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Ideal(_) => "ideal",
            Object::Module(_) => "module",
            Object::Matrix(_) => "matrix",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    ring: Ring,
    objects: BTreeMap<String, Object>,
    order: Vec<String>,
}

impl Session {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn get(&self, name: &str) -> Option<&Object> {
        self.objects.get(name)
    }

    /// Names in declaration order.
    pub fn names(&self) -> &[String] {
        &self.order
    }

    /// The presentation matrix of a module or of `O/J` for an ideal.
    pub fn presentation(&self, name: &str) -> Result<RingMatrix, SessionError> {
        match self.lookup(name)? {
            Object::Ideal(gens) => Ok(ideal_row(&self.ring, gens)),
            Object::Module(m) => Ok(m.clone()),
            Object::Matrix(_) => Err(SessionError::WrongKind {
                name: name.to_string(),
                expected: "ideal or module",
            }),
        }
    }

    pub fn ideal(&self, name: &str) -> Result<&[Polynomial], SessionError> {
        match self.lookup(name)? {
            Object::Ideal(gens) => Ok(gens),
            _ => Err(SessionError::WrongKind {
                name: name.to_string(),
                expected: "ideal",
            }),
        }
    }

    pub fn matrix(&self, name: &str) -> Result<&RingMatrix, SessionError> {
        match self.lookup(name)? {
            Object::Matrix(m) => Ok(m),
            _ => Err(SessionError::WrongKind {
                name: name.to_string(),
                expected: "matrix",
            }),
        }
    }

    fn lookup(&self, name: &str) -> Result<&Object, SessionError> {
        self.objects
            .get(name)
            .ok_or_else(|| SessionError::Unknown(name.to_string()))
    }

    /// Parses `[p1, ..., pr]` or a bare polynomial (rank 1) in the session ring.
    pub fn parse_vector(&self, text: &str) -> Result<RingVector, SessionError> {
        let t = text.trim();
        let entries = if t.starts_with('[') {
            let (items, _) = list_items(text, 0, text.len())?;
            items
                .into_iter()
                .map(|(s, e)| poly(&self.ring, text, s, e))
                .collect::<Result<Vec<_>, _>>()?
        } else {
            vec![poly(&self.ring, text, 0, text.len())?]
        };
        RingVector::new(&self.ring, entries).map_err(SessionError::Core)
    }

    /// Parses a comma-separated list of polynomials.
    pub fn parse_polynomials(&self, text: &str) -> Result<Vec<Polynomial>, SessionError> {
        split_top(text, 0, text.len())
            .into_iter()
            .filter(|&(s, e)| !text[s..e].trim().is_empty())
            .map(|(s, e)| poly(&self.ring, text, s, e))
            .collect()
    }
}

/// `1 x k` presentation of `O/(gens)`.
pub fn ideal_row(ring: &Ring, gens: &[Polynomial]) -> RingMatrix {
    if gens.is_empty() {
        return RingMatrix::zero(ring, 1, 0);
    }
    RingMatrix::from_rows(ring, vec![gens.to_vec()]).expect("generators share the ring")
}

#[derive(Clone, Debug, PartialEq)]
pub enum SessionError {
    Syntax { line: usize, column: usize, message: String },
    Unknown(String),
    WrongKind { name: String, expected: &'static str },
    Core(Error),
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SessionError::Syntax { line, column, message } => {
                write!(f, "line {line}, column {column}: {message}")
            }
            SessionError::Unknown(n) => write!(f, "unknown object `{n}`"),
            SessionError::WrongKind { name, expected } => write!(f, "`{name}` is not an {expected}"),
            SessionError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SessionError {}

fn syntax(full: &str, at: usize, message: impl Into<String>) -> SessionError {
    let (line, column) = line_column(full, at);
    SessionError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn poly(ring: &Ring, full: &str, start: usize, end: usize) -> Result<Polynomial, SessionError> {
    parse_polynomial_span(ring, full, start, end).map_err(|e| match e {
        Error::Parse { line, column, message } => SessionError::Syntax { line, column, message },
        other => SessionError::Core(other),
    })
}

/// Replaces comments by spaces so that offsets are preserved.
fn strip_comments(text: &str) -> String {
    text.lines()
        .map(|l| match l.find("//") {
            Some(i) => format!("{}{}", &l[..i], " ".repeat(l.len() - i)),
            None => l.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
        + if text.ends_with('\n') { "\n" } else { "" }
}

/// Splits `full[start..end]` at commas outside brackets and parentheses.
fn split_top(full: &str, start: usize, end: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut from = start;
    for (i, c) in full[start..end].char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push((from, start + i));
                from = start + i + 1;
            }
            _ => {}
        }
    }
    out.push((from, end));
    out
}

fn trim_span(full: &str, start: usize, end: usize) -> (usize, usize) {
    let s = &full[start..end];
    let lead = s.len() - s.trim_start().len();
    let trail = s.len() - s.trim_end().len();
    (start + lead, end - trail)
}

/// Items of a bracketed list `[a, b, ...]`; returns their spans and the
/// offset after the closing bracket.
fn list_items(full: &str, start: usize, end: usize) -> Result<(Vec<(usize, usize)>, usize), SessionError> {
    let (s, e) = trim_span(full, start, end);
    if !full[s..e].starts_with('[') {
        return Err(syntax(full, s, "expected `[`"));
    }
    let mut depth = 0i32;
    let mut close = None;
    for (i, c) in full[s..e].char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => {
                depth -= 1;
                if depth == 0 {
                    close = Some(s + i);
                    break;
                }
            }
            _ => {}
        }
    }
    let close = close.ok_or_else(|| syntax(full, s, "unclosed `[`"))?;
    if !full[close + 1..e].trim().is_empty() {
        return Err(syntax(full, close + 1, "unexpected input after `]`"));
    }
    if full[s + 1..close].trim().is_empty() {
        return Ok((Vec::new(), close + 1));
    }
    let items = split_top(full, s + 1, close)
        .into_iter()
        .map(|(a, b)| trim_span(full, a, b))
        .collect::<Vec<_>>();
    if let Some(&(a, _)) = items.iter().find(|(a, b)| a == b) {
        return Err(syntax(full, a, "empty list entry"));
    }
    Ok((items, close + 1))
}

/// A nested list `[[..],[..]]` as outer items of polynomial entries.
fn nested(ring: &Ring, full: &str, start: usize, end: usize) -> Result<Vec<Vec<Polynomial>>, SessionError> {
    let (outer, _) = list_items(full, start, end)?;
    let mut out = Vec::with_capacity(outer.len());
    let mut width = None;
    for (a, b) in outer {
        let (inner, _) = list_items(full, a, b)?;
        if *width.get_or_insert(inner.len()) != inner.len() {
            return Err(syntax(full, a, "rows of different length"));
        }
        out.push(
            inner
                .into_iter()
                .map(|(s, e)| poly(ring, full, s, e))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(out)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_ring(full: &str, start: usize, end: usize) -> Result<Ring, SessionError> {
    let text = &full[start..end];
    let open = text.find('[').ok_or_else(|| syntax(full, start, "expected `[` after the field"))?;
    let field_text = text[..open].trim();
    let field = if field_text == "Q" {
        Field::Rational
    } else if let Some(q) = field_text.strip_prefix("Fp(").and_then(|r| r.strip_suffix(')')) {
        let q: u32 = q
            .trim()
            .parse()
            .map_err(|_| syntax(full, start, format!("bad characteristic `{q}`")))?;
        Field::prime(q).map_err(|e| syntax(full, start, e.to_string()))?
    } else {
        return Err(syntax(full, start, format!("unknown field `{field_text}`, expected Q or Fp(q)")));
    };
    let (items, _) = list_items(full, start + open, end)?;
    let mut names = Vec::with_capacity(items.len());
    for (a, b) in items {
        let name = &full[a..b];
        if !is_ident(name) {
            return Err(syntax(full, a, format!("bad variable name `{name}`")));
        }
        names.push(name.to_string());
    }
    Ring::degrevlex(field, names).map_err(|e| syntax(full, start, e.to_string()))
}

/// Parses a session. Errors carry 1-based line and column.
pub fn parse_session(input: &str) -> Result<Session, SessionError> {
    let full = strip_comments(input);
    let full = full.as_str();
    let mut ring: Option<Ring> = None;
    let mut objects = BTreeMap::new();
    let mut order = Vec::new();
    let mut from = 0;
    let mut statements = Vec::new();
    for (i, c) in full.char_indices() {
        if c == ';' {
            statements.push((from, i));
            from = i + 1;
        }
    }
    if !full[from..].trim().is_empty() {
        let (s, _) = trim_span(full, from, full.len());
        return Err(syntax(full, s, "missing `;`"));
    }
    for (a, b) in statements {
        let (s, e) = trim_span(full, a, b);
        if s == e {
            continue;
        }
        let stmt = &full[s..e];
        let kw_len = stmt.find(|c: char| c.is_whitespace()).unwrap_or(stmt.len());
        let keyword = &stmt[..kw_len];
        if keyword == "ring" {
            let r = parse_ring(full, s + kw_len, e)?;
            if let Some(existing) = &ring {
                if *existing != r {
                    return Err(syntax(full, s, "inconsistent ring: a different ring is already declared"));
                }
            }
            ring = Some(r);
            continue;
        }
        if !matches!(keyword, "ideal" | "module" | "matrix") {
            return Err(syntax(full, s, format!("unknown statement `{keyword}`")));
        }
        let r = ring.as_ref().ok_or_else(|| syntax(full, s, "no ring declared"))?;
        let rest_start = s + kw_len;
        let eq = full[rest_start..e]
            .find('=')
            .map(|i| rest_start + i)
            .ok_or_else(|| syntax(full, rest_start, "expected `=`"))?;
        let (ns, ne) = trim_span(full, rest_start, eq);
        let name = &full[ns..ne];
        if !is_ident(name) {
            return Err(syntax(full, ns, format!("bad name `{name}`")));
        }
        if objects.contains_key(name) {
            return Err(syntax(full, ns, format!("`{name}` is already declared")));
        }
        let body = eq + 1;
        let obj = match keyword {
            "ideal" => {
                let (bs, be) = trim_span(full, body, e);
                let gens = if bs == be {
                    Vec::new()
                } else {
                    split_top(full, bs, be)
                        .into_iter()
                        .map(|(x, y)| poly(r, full, x, y))
                        .collect::<Result<Vec<_>, _>>()?
                };
                Object::Ideal(gens.into_iter().filter(|p| !p.is_zero()).collect())
            }
            "module" => {
                let cols = nested(r, full, body, e)?;
                let rows = cols.first().map_or(0, Vec::len);
                if cols.is_empty() || rows == 0 {
                    return Err(syntax(full, body, "a module needs at least one row and one column"));
                }
                let vecs: Vec<RingVector> = cols
                    .into_iter()
                    .map(|c| RingVector::new(r, c))
                    .collect::<Result<_, _>>()
                    .map_err(SessionError::Core)?;
                Object::Module(RingMatrix::from_columns(r, rows, &vecs).map_err(SessionError::Core)?)
            }
            _ => {
                let rows = nested(r, full, body, e)?;
                if rows.is_empty() {
                    return Err(syntax(full, body, "empty matrix"));
                }
                Object::Matrix(RingMatrix::from_rows(r, rows).map_err(SessionError::Core)?)
            }
        };
        order.push(name.to_string());
        objects.insert(name.to_string(), obj);
    }
    let ring = ring.ok_or_else(|| syntax(full, 0, "no ring declared"))?;
    Ok(Session { ring, objects, order })
}
