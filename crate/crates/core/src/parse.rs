//! Text grammar for words, endomorphism files and braid words.
//!
//! Words: generators are a lowercase letter followed by an index (`x3`,
//! `y1`, `c6`); the uppercase form is the inverse (`X3`). `1` is the empty
//! word. Factors are juxtaposed (whitespace or `*` optional). `[a,b]` is the
//! commutator `a b a^-1 b^-1`, `w^n` an integer power and `w^c` a
//! conjugation whose side is chosen by [`Conjugation`].

use crate::error::{Error, Result};
use crate::words::{Endomorphism, FreeWord, Letter};

/// How `w^c` is read.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Conjugation {
    /// `w^c = c w c^-1`.
    #[default]
    Left,
    /// `w^c = c^-1 w c`.
    Right,
}

#[derive(Clone, Debug, Default)]
pub struct WordParser {
    pub conjugation: Conjugation,
}

impl WordParser {
    pub fn new(conjugation: Conjugation) -> Self {
        WordParser { conjugation }
    }

    pub fn parse(&self, input: &str) -> Result<FreeWord> {
        self.parse_named(input).map(|(w, _)| w)
    }

    /// Parses and also reports the generator symbol used (if any).
    pub fn parse_named(&self, input: &str) -> Result<(FreeWord, Option<char>)> {
        let mut p = Cursor {
            src: input.as_bytes(),
            pos: 0,
            symbol: None,
            conjugation: self.conjugation,
        };
        let w = p.product()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok((w, p.symbol))
    }
}

/// Parses with the default (conjugator-on-left) convention.
pub fn parse_word(input: &str) -> Result<FreeWord> {
    WordParser::default().parse(input)
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
    symbol: Option<char>,
    conjugation: Conjugation,
}

impl Cursor<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn starts_primary(c: u8) -> bool {
        c.is_ascii_alphabetic() || c == b'[' || c == b'(' || c == b'1'
    }

    fn product(&mut self) -> Result<FreeWord> {
        let mut w = FreeWord::identity();
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                }
                Some(c) if Self::starts_primary(c) => {
                    let f = self.factor()?;
                    w.push_word(&f);
                }
                _ => return Ok(w),
            }
        }
    }

    fn factor(&mut self) -> Result<FreeWord> {
        let mut w = self.primary()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            match self.peek() {
                Some(c) if c == b'-' || c.is_ascii_digit() => {
                    let e = self.integer()?;
                    w = w.pow(e);
                }
                Some(c) if Self::starts_primary(c) => {
                    let c = self.primary()?;
                    w = match self.conjugation {
                        Conjugation::Left => w.conjugate_by(&c),
                        Conjugation::Right => w.conjugate_by(&c.inverse()),
                    };
                }
                _ => return Err(self.error("expected exponent or conjugator after '^'")),
            }
        }
        Ok(w)
    }

    fn primary(&mut self) -> Result<FreeWord> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let a = self.product()?;
                self.expect(b',')?;
                let b = self.product()?;
                self.expect(b']')?;
                Ok(FreeWord::commutator(&a, &b))
            }
            Some(b'(') => {
                self.pos += 1;
                let a = self.product()?;
                self.expect(b')')?;
                Ok(a)
            }
            Some(b'1') => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(self.error("bare integers are not words"));
                }
                Ok(FreeWord::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                let sym = (c as char).to_ascii_lowercase();
                match self.symbol {
                    None => self.symbol = Some(sym),
                    Some(s) if s != sym => {
                        self.pos = start;
                        return Err(self.error(&format!(
                            "generator symbol '{sym}' mixed with '{s}'"
                        )));
                    }
                    _ => {}
                }
                let index = self.index()?;
                let sign = if c.is_ascii_uppercase() { -1 } else { 1 };
                Ok(FreeWord::reduce([Letter::new(index, sign)?]))
            }
            _ => Err(self.error("expected a generator, '1', '[' or '('")),
        }
    }

    fn index(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected generator index"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let i: u32 = s.parse().map_err(|_| self.error("index out of range"))?;
        if i == 0 {
            return Err(Error::Parse {
                pos: start,
                msg: "generator indices start at 1".into(),
            });
        }
        Ok(i)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        let v: i64 = s.parse().map_err(|_| self.error("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

/// Parses an endomorphism file: one `x<i> -> <word>` per line, `#` comments.
/// Generators without a line map to themselves. The alphabet size is the
/// largest index mentioned, or `rank` if given.
pub fn parse_endo(text: &str, rank: Option<u32>) -> Result<Endomorphism> {
    let parser = WordParser::default();
    let mut entries = Vec::new();
    let mut n = rank.unwrap_or(0);
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            pos: lineno,
            msg: format!("line {}: {msg}", lineno + 1),
        };
        let (lhs, rhs) = line.split_once("->").ok_or_else(|| err("expected '->'"))?;
        let lhs = parser.parse(lhs.trim())?;
        if lhs.len() != 1 || lhs.letters()[0].is_inverse() {
            return Err(err("left side must be a single generator"));
        }
        let idx = lhs.letters()[0].index();
        let img = parser.parse(rhs.trim())?;
        if rank.is_none() {
            n = n.max(idx).max(img.max_index());
        }
        entries.push((idx, img));
    }
    let mut f = Endomorphism::identity(n);
    for (idx, img) in entries {
        f.set_image(idx, img)?;
    }
    Ok(f)
}

/// A word in the pure braid generators `A_{i,n}` for a fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    pub strands: u32,
    /// `(i, ±1)` for `A_{i,n}^{±1}`, in reading order.
    pub letters: Vec<(u32, i8)>,
}

impl BraidWord {
    /// The image of a word in `E(n-1)` under `x_i ↦ A_{i,n}`.
    pub fn from_free_word(w: &FreeWord, strands: u32) -> Result<Self> {
        for l in w.letters() {
            if l.index() >= strands {
                return Err(Error::InvalidBraidGenerator {
                    i: l.index(),
                    n: strands,
                });
            }
        }
        Ok(BraidWord {
            strands,
            letters: w.letters().iter().map(|l| (l.index(), l.sign())).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect(),
        }
    }

    pub fn to_free_word(&self) -> FreeWord {
        FreeWord::reduce(
            self.letters
                .iter()
                .map(|&(i, s)| Letter::new(i, s).expect("braid letters have index >= 1")),
        )
    }
}

/// Parses a braid word. Accepts either `A<i>,<n>` letters with optional
/// integer exponents (`A1,3 A2,3^-1`), or a word expression in `x` letters
/// which is read through `x_i ↦ A_{i,n}`; the latter form requires
/// `strands`.
pub fn parse_braid(input: &str, strands: Option<u32>) -> Result<BraidWord> {
    let trimmed = input.trim();
    if !trimmed.contains('A') {
        let n = strands.ok_or(Error::Parse {
            pos: 0,
            msg: "strand count needed for a word in x letters".into(),
        })?;
        let w = parse_word(trimmed)?;
        return BraidWord::from_free_word(&w, n);
    }
    let mut letters = Vec::new();
    let mut n_seen: Option<u32> = strands;
    let src = trimmed.as_bytes();
    let mut pos = 0;
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    let number = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        if src.get(*pos) == Some(&b'-') {
            *pos += 1;
        }
        while *pos < src.len() && src[*pos].is_ascii_digit() {
            *pos += 1;
        }
        std::str::from_utf8(&src[start..*pos]).ok()?.parse().ok()
    };
    while pos < src.len() {
        let c = src[pos];
        if c.is_ascii_whitespace() || c == b'*' {
            pos += 1;
            continue;
        }
        if c != b'A' {
            return Err(err(pos, "expected 'A'"));
        }
        pos += 1;
        let i = number(&mut pos).ok_or_else(|| err(pos, "expected strand index"))?;
        if src.get(pos) != Some(&b',') {
            return Err(err(pos, "expected ','"));
        }
        pos += 1;
        let n = number(&mut pos).ok_or_else(|| err(pos, "expected strand count"))?;
        let mut e = 1;
        if src.get(pos) == Some(&b'^') {
            pos += 1;
            e = number(&mut pos).ok_or_else(|| err(pos, "expected exponent"))?;
        }
        if i < 1 || n < 2 || i >= n {
            return Err(Error::InvalidBraidGenerator {
                i: i.max(0) as u32,
                n: n.max(0) as u32,
            });
        }
        match n_seen {
            Some(m) if m != n as u32 => {
                return Err(err(pos, "all letters must use the same strand count"))
            }
            _ => n_seen = Some(n as u32),
        }
        let s = if e < 0 { -1 } else { 1 };
        for _ in 0..e.unsigned_abs() {
            letters.push((i as u32, s));
        }
    }
    let strands = n_seen.ok_or_else(|| err(0, "empty braid word needs a strand count"))?;
    Ok(BraidWord { strands, letters })
}
