use super::PlanarDiagram;
use crate::error::{Error, Result};

/// Parses an oriented PD code such as `X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]`.
///
/// Tokens are separated by whitespace (commas between tokens and an enclosing
/// `PD[...]` are tolerated). Anything after `#` is a comment. `Loop[1]` on its
/// own denotes the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    let codes = parse_codes(text)?;
    match codes {
        Codes::Loop => Ok(PlanarDiagram::unknot()),
        Codes::Crossings(c) => PlanarDiagram::from_codes(&c),
    }
}

enum Codes {
    Loop,
    Crossings(Vec<[u64; 4]>),
}

struct Scanner<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_separators(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b' ' | b'\t' | b'\r' | b'\n' | b',' => self.pos += 1,
                _ => break,
            }
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a positive integer label");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match s.parse::<u64>() {
            Ok(0) => {
                self.pos = start;
                self.err("edge labels start at 1")
            }
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("label out of range")
            }
        }
    }
}

fn parse_codes(text: &str) -> Result<Codes> {
    let body = match text.find('#') {
        Some(i) => &text[..i],
        None => text,
    };
    let mut sc = Scanner {
        src: body.as_bytes(),
        pos: 0,
    };
    sc.skip_separators();
    let wrapped = sc.eat("PD[");
    let mut out = Vec::new();
    let mut saw_loop = false;
    loop {
        sc.skip_separators();
        match sc.peek() {
            None => break,
            Some(b']') if wrapped => {
                sc.pos += 1;
                sc.skip_separators();
                if sc.peek().is_some() {
                    return sc.err("trailing input after PD[...]");
                }
                break;
            }
            Some(b'X') => {
                sc.pos += 1;
                sc.expect(b'[')?;
                let mut q = [0u64; 4];
                for (i, slot) in q.iter_mut().enumerate() {
                    if i > 0 {
                        sc.expect(b',')?;
                    }
                    *slot = sc.number()?;
                }
                sc.expect(b']')?;
                out.push(q);
            }
            Some(b'L') if sc.eat("Loop[") => {
                if sc.number()? != 1 {
                    return sc.err("only Loop[1] is supported");
                }
                sc.expect(b']')?;
                saw_loop = true;
            }
            Some(_) => return sc.err("expected a crossing token X[a,b,c,d]"),
        }
    }
    if saw_loop {
        if !out.is_empty() {
            return Err(Error::Syntax {
                offset: 0,
                message: "Loop[1] cannot be combined with crossings".into(),
            });
        }
        return Ok(Codes::Loop);
    }
    if out.is_empty() {
        return Err(Error::Syntax {
            offset: 0,
            message: "empty diagram".into(),
        });
    }
    Ok(Codes::Crossings(out))
}
