//! Bundle expressions: `O(t)`, `S[a1,...]U`, `S[b1,...]Q*` and their
//! products, e.g. `S[2,1]U S[1]Q* O(3)`. The printed form is the
//! `Display` of [`BundleShape`].

use crate::error::{Error, Result};
use crate::rootsys::{BundleShape, Partition, Space};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in {:?}", self.pos, self.text))
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{c}'")))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let s = &self.text[start..self.pos];
        let v = s.parse().map_err(|_| {
            self.pos = start;
            self.err("expected an integer")
        })?;
        self.skip_ws();
        Ok(v)
    }

    fn partition(&mut self) -> Result<Vec<u32>> {
        self.expect('[')?;
        let mut parts = Vec::new();
        self.skip_ws();
        if self.peek() == Some(']') {
            self.pos += 1;
            return Ok(parts);
        }
        loop {
            let at = self.pos;
            let v = self.int()?;
            if v < 0 {
                self.pos = at;
                return Err(self.err("negative part"));
            }
            parts.push(v as u32);
            match self.peek() {
                Some(',') => self.pos += 1,
                Some(']') => {
                    self.pos += 1;
                    return Ok(parts);
                }
                _ => return Err(self.err("expected ',' or ']'")),
            }
        }
    }
}

/// Parses and canonicalizes (full columns absorbed into the twist).
pub fn parse_bundle(text: &str, s: &Space) -> Result<BundleShape> {
    let mut c = Cursor { text, pos: 0 };
    let mut alpha: Option<Vec<u32>> = None;
    let mut beta: Option<Vec<u32>> = None;
    let mut t = 0i64;
    let mut any = false;
    loop {
        c.skip_ws();
        let Some(ch) = c.peek() else { break };
        let start = c.pos;
        match ch {
            'O' => {
                c.pos += 1;
                c.skip_ws();
                if c.peek() == Some('(') {
                    c.pos += 1;
                    t += c.int()?;
                    c.expect(')')?;
                }
            }
            'S' => {
                c.pos += 1;
                let parts = c.partition()?;
                let slot = match (c.peek(), c.text[c.pos..].starts_with("Q*")) {
                    (_, true) => {
                        c.pos += 2;
                        &mut beta
                    }
                    (Some('U'), _) => {
                        c.pos += 1;
                        &mut alpha
                    }
                    _ => return Err(c.err("expected 'U' or 'Q*'")),
                };
                if slot.is_some() {
                    c.pos = start;
                    return Err(c.err("repeated Schur factor on the same bundle"));
                }
                if parts.windows(2).any(|w| w[0] < w[1]) {
                    return Err(Error::Shape(format!(
                        "partition {parts:?} at position {start} is not weakly decreasing"
                    )));
                }
                *slot = Some(parts);
            }
            _ => return Err(c.err(&format!("unexpected '{ch}'"))),
        }
        any = true;
    }
    if !any {
        return Err(Error::Parse("empty bundle expression".into()));
    }
    let shape = BundleShape {
        alpha: Partition::new(alpha.unwrap_or_default())?,
        beta: Partition::new(beta.unwrap_or_default())?,
        t,
    };
    shape.canonical(s)
}
