//! Symbols, words and texts over an interned alphabet.
//!
//! User tokens are mapped to dense ids starting at 1. Id 0 is the sentinel
//! used by the interleaving reduction and by the lower-bound generators; it
//! never comes out of [`Alphabet::intern`].

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A symbol id. `Symbol::SENTINEL` (id 0) is reserved.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Symbol(pub u32);

impl Symbol {
    pub const SENTINEL: Symbol = Symbol(0);

    pub fn id(self) -> u32 {
        self.0
    }

    pub fn is_sentinel(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Token interner shared by a word and the texts it is matched against.
#[derive(Debug, Clone, Default)]
pub struct Alphabet {
    ids: HashMap<String, Symbol>,
    tokens: Vec<String>,
}

impl Alphabet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn intern(&mut self, token: &str) -> Symbol {
        if let Some(&s) = self.ids.get(token) {
            return s;
        }
        let s = Symbol(self.tokens.len() as u32 + 1);
        self.tokens.push(token.to_owned());
        self.ids.insert(token.to_owned(), s);
        s
    }

    pub fn get(&self, token: &str) -> Option<Symbol> {
        self.ids.get(token).copied()
    }

    /// The token for `s`, or `"0"` for the sentinel.
    pub fn token(&self, s: Symbol) -> Option<&str> {
        if s.is_sentinel() {
            return Some("0");
        }
        self.tokens.get(s.0 as usize - 1).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Interns every whitespace-separated token of `input`.
    pub fn intern_tokens(&mut self, input: &str) -> Vec<Symbol> {
        input.split_whitespace().map(|t| self.intern(t)).collect()
    }

    /// Interns each character of `s` as its own token. Handy for short
    /// literal texts such as `"aabb"`.
    pub fn intern_chars(&mut self, s: &str) -> Vec<Symbol> {
        let mut buf = [0u8; 4];
        s.chars().map(|c| self.intern(c.encode_utf8(&mut buf))).collect()
    }
}

/// The pattern `w = w_1 … w_k`, `k ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
    distinct: usize,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidInput("word must be non-empty".into()));
        }
        Ok(Self::from_symbols_unchecked(symbols))
    }

    /// Builds a word that may contain the sentinel. Used by reductions and
    /// generators; user input should go through [`Word::new`].
    pub(crate) fn from_symbols_unchecked(symbols: Vec<Symbol>) -> Self {
        let mut seen: Vec<Symbol> = symbols.clone();
        seen.sort_unstable();
        seen.dedup();
        Word {
            distinct: seen.len(),
            symbols,
        }
    }

    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        if ids.contains(&0) {
            return Err(Error::InvalidInput("symbol id 0 is reserved".into()));
        }
        Word::new(ids.iter().map(|&i| Symbol(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of distinct symbols, `k_d`.
    pub fn distinct(&self) -> usize {
        self.distinct
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// The 1-based role symbol `w_i`.
    pub fn role(&self, i: usize) -> Symbol {
        self.symbols[i - 1]
    }

    /// True when no two consecutive symbols are equal.
    pub fn is_wc(&self) -> bool {
        self.symbols.windows(2).all(|p| p[0] != p[1])
    }
}

/// The text `T = t_1 … t_n`. Positions are 1-based in every public API.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Text {
    symbols: Vec<Symbol>,
}

impl Text {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.iter().any(|s| s.is_sentinel()) {
            return Err(Error::InvalidInput("symbol id 0 is reserved".into()));
        }
        Ok(Text { symbols })
    }

    pub(crate) fn from_symbols_unchecked(symbols: Vec<Symbol>) -> Self {
        Text { symbols }
    }

    pub fn from_ids(ids: &[u32]) -> Result<Self> {
        Text::new(ids.iter().map(|&i| Symbol(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// `T[j]` for 1-based `j`.
    pub fn at(&self, j: usize) -> Symbol {
        self.symbols[j - 1]
    }
}

/// Parses a word and a text from whitespace-separated token files, sharing
/// one alphabet.
pub fn parse_word_and_text(word_src: &str, text_src: &str) -> Result<(Alphabet, Word, Text)> {
    let mut alphabet = Alphabet::new();
    let word = Word::new(alphabet.intern_tokens(word_src))?;
    let text = Text::new(alphabet.intern_tokens(text_src))?;
    Ok((alphabet, word, text))
}
