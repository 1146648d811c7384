//! Structured vertex names that record Mycielski provenance.
//!
//! Text form:
//! - `Base(tag)` prints the tag itself when it only uses `[A-Za-z0-9_+-]`,
//!   otherwise a single-quoted string with `\'` and `\\` escapes;
//! - `Apex(d)` prints as `z^d`;
//! - `Level(parent, i)` prints as `parent.i` when the parent is atomic and
//!   `(parent).i` otherwise, so `Level(Level(u, 0), 2)` is `(u.0).2`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexName {
    /// Vertex of a seed graph.
    Base(String),
    /// Copy `(u, i)` of `u` on level `i` of a Mycielski construction.
    Level(Box<VertexName>, usize),
    /// Apex `z` added by the `depth`-th nested construction.
    Apex(usize),
}

impl VertexName {
    pub fn base(tag: impl Into<String>) -> Self {
        VertexName::Base(tag.into())
    }

    pub fn level(parent: &VertexName, i: usize) -> Self {
        VertexName::Level(Box::new(parent.clone()), i)
    }

    /// Deepest apex depth mentioned anywhere in the name.
    pub fn max_apex_depth(&self) -> usize {
        match self {
            VertexName::Base(_) => 0,
            VertexName::Apex(d) => *d,
            VertexName::Level(p, _) => p.max_apex_depth(),
        }
    }

    fn is_atomic(&self) -> bool {
        !matches!(self, VertexName::Level(..))
    }
}

fn is_plain_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '+' || c == '-'
}

impl fmt::Display for VertexName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexName::Base(tag) => {
                if !tag.is_empty() && tag.chars().all(is_plain_char) {
                    f.write_str(tag)
                } else {
                    f.write_str("'")?;
                    for c in tag.chars() {
                        if c == '\'' || c == '\\' {
                            f.write_str("\\")?;
                        }
                        write!(f, "{c}")?;
                    }
                    f.write_str("'")
                }
            }
            VertexName::Apex(d) => write!(f, "z^{d}"),
            VertexName::Level(p, i) if p.is_atomic() => write!(f, "{p}.{i}"),
            VertexName::Level(p, i) => write!(f, "({p}).{i}"),
        }
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    src: &'a str,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("vertex name {:?}: {what}", self.src))
    }

    fn digits(&mut self) -> Result<usize, Error> {
        let mut s = String::new();
        while let Some(c) = self.chars.peek().copied().filter(char::is_ascii_digit) {
            s.push(c);
            self.chars.next();
        }
        s.parse().map_err(|_| self.err("expected digits"))
    }

    fn name(&mut self) -> Result<VertexName, Error> {
        let mut name = match self.chars.peek().copied() {
            Some('(') => {
                self.chars.next();
                let inner = self.name()?;
                if self.chars.next() != Some(')') {
                    return Err(self.err("unbalanced parenthesis"));
                }
                if self.chars.peek() != Some(&'.') {
                    return Err(self.err("parenthesised name must carry a level"));
                }
                inner
            }
            Some('\'') => {
                self.chars.next();
                let mut tag = String::new();
                loop {
                    match self.chars.next() {
                        None => return Err(self.err("unterminated quote")),
                        Some('\'') => break,
                        Some('\\') => tag.push(self.chars.next().ok_or_else(|| self.err("dangling escape"))?),
                        Some(c) => tag.push(c),
                    }
                }
                VertexName::Base(tag)
            }
            Some('z') => {
                self.chars.next();
                if self.chars.peek() == Some(&'^') {
                    self.chars.next();
                    VertexName::Apex(self.digits()?)
                } else {
                    let mut tag = String::from("z");
                    self.plain(&mut tag);
                    VertexName::Base(tag)
                }
            }
            Some(c) if is_plain_char(c) => {
                let mut tag = String::new();
                self.plain(&mut tag);
                VertexName::Base(tag)
            }
            _ => return Err(self.err("expected a name")),
        };
        while self.chars.peek() == Some(&'.') {
            self.chars.next();
            name = VertexName::Level(Box::new(name), self.digits()?);
        }
        Ok(name)
    }

    fn plain(&mut self, tag: &mut String) {
        while let Some(c) = self.chars.peek().copied().filter(|c| is_plain_char(*c)) {
            tag.push(c);
            self.chars.next();
        }
    }
}

impl FromStr for VertexName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser {
            chars: s.chars().peekable(),
            src: s,
        };
        let name = p.name()?;
        if p.chars.next().is_some() {
            return Err(p.err("trailing characters"));
        }
        Ok(name)
    }
}

impl Serialize for VertexName {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for VertexName {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display_forms() {
        let u = VertexName::base("u");
        let u0 = VertexName::level(&u, 0);
        assert_eq!(u0.to_string(), "u.0");
        assert_eq!(VertexName::level(&u0, 2).to_string(), "(u.0).2");
        assert_eq!(VertexName::Apex(1).to_string(), "z^1");
        assert_eq!(VertexName::level(&VertexName::Apex(1), 3).to_string(), "z^1.3");
        assert_eq!(VertexName::base("a.b").to_string(), "'a.b'");
        assert_eq!(VertexName::base("it's").to_string(), r"'it\'s'");
    }

    #[test]
    fn rejects_garbage() {
        assert!("".parse::<VertexName>().is_err());
        assert!("(u.0".parse::<VertexName>().is_err());
        assert!("(u)".parse::<VertexName>().is_err());
        assert!("u.".parse::<VertexName>().is_err());
        assert!("'open".parse::<VertexName>().is_err());
    }

    fn arb_name() -> impl Strategy<Value = VertexName> {
        let leaf = prop_oneof![
            "[a-z0-9+().' -]{0,6}".prop_map(VertexName::Base),
            (0usize..5).prop_map(VertexName::Apex),
        ];
        leaf.prop_recursive(4, 16, 1, |inner| {
            (inner, 0usize..12).prop_map(|(p, i)| VertexName::Level(Box::new(p), i))
        })
    }

    proptest! {
        #[test]
        fn text_form_round_trips(name in arb_name()) {
            let text = name.to_string();
            prop_assert_eq!(text.parse::<VertexName>().unwrap(), name);
        }
    }
}
