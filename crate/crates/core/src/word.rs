//! Move-word text shared by both puzzles.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! word     := item*
//! item     := atom exponent?
//! atom     := LETTER | '(' word ')'
//! exponent := '^'? ( digits | '-' digits )
//! ```
//!
//! `U3R` is `UUUR`; `(RU)^2` is `RURU`; `(U3R)^-1` inverts letter by letter
//! in reverse order.

use std::fmt::Display;

use crate::error::WordError;

pub trait MoveLetter: Copy + Eq + Display + Sized {
    fn from_char(c: char) -> Option<Self>;

    /// A word equal to the inverse of this single move.
    fn inverse(self) -> Vec<Self>;
}

pub fn parse_word<M: MoveLetter>(text: &str) -> Result<Vec<M>, WordError> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    let mut parser = Parser { chars, pos: 0 };
    let word = parser.word::<M>()?;
    if parser.pos != parser.chars.len() {
        let (offset, ch) = parser.chars[parser.pos];
        return Err(if ch == ')' {
            WordError::Unbalanced
        } else {
            WordError::UnexpectedChar { ch, offset }
        });
    }
    Ok(word)
}

pub fn format_word<M: MoveLetter>(word: &[M]) -> String {
    word.iter().map(ToString::to_string).collect()
}

/// Like [`format_word`] but collapses runs, e.g. `UUUR` becomes `U3R`.
pub fn format_word_compact<M: MoveLetter>(word: &[M]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&word[i].to_string());
        if j - i > 1 {
            out.push_str(&(j - i).to_string());
        }
        i = j;
    }
    out
}

pub fn invert_word<M: MoveLetter>(word: &[M]) -> Vec<M> {
    word.iter().rev().flat_map(|m| m.inverse()).collect()
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn word<M: MoveLetter>(&mut self) -> Result<Vec<M>, WordError> {
        let mut out = Vec::new();
        while let Some(c) = self.peek() {
            let atom = if c == '(' {
                self.pos += 1;
                let inner = self.word::<M>()?;
                if self.peek() != Some(')') {
                    return Err(WordError::Unbalanced);
                }
                self.pos += 1;
                inner
            } else if c == ')' {
                break;
            } else if let Some(m) = M::from_char(c) {
                self.pos += 1;
                vec![m]
            } else {
                let (offset, ch) = self.chars[self.pos];
                return Err(WordError::UnexpectedChar { ch, offset });
            };
            match self.exponent()? {
                None => out.extend(atom),
                Some(k) if k >= 0 => {
                    for _ in 0..k {
                        out.extend_from_slice(&atom);
                    }
                }
                Some(k) => {
                    let inv = invert_word(&atom);
                    for _ in 0..k.unsigned_abs() {
                        out.extend_from_slice(&inv);
                    }
                }
            }
        }
        Ok(out)
    }

    fn exponent(&mut self) -> Result<Option<i64>, WordError> {
        let caret = self.peek() == Some('^');
        if caret {
            self.pos += 1;
        }
        let start = self.pos;
        if self.peek() == Some('-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let digits: String = self.chars[start..self.pos]
            .iter()
            .map(|&(_, c)| c)
            .collect();
        if digits.is_empty() {
            return if caret {
                Err(WordError::BadExponent(String::new()))
            } else {
                Ok(None)
            };
        }
        digits
            .parse::<i64>()
            .map(Some)
            .map_err(|_| WordError::BadExponent(digits))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::fmt;

    #[derive(Clone, Copy, Debug, PartialEq, Eq)]
    enum L {
        A,
        B,
    }

    impl fmt::Display for L {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str(match self {
                L::A => "A",
                L::B => "B",
            })
        }
    }

    impl MoveLetter for L {
        fn from_char(c: char) -> Option<L> {
            match c {
                'A' => Some(L::A),
                'B' => Some(L::B),
                _ => None,
            }
        }
        // order 3
        fn inverse(self) -> Vec<L> {
            vec![self, self]
        }
    }

    fn parse(s: &str) -> Vec<L> {
        parse_word(s).unwrap()
    }

    #[test]
    fn exponents_and_groups() {
        assert_eq!(format_word(&parse("A3B")), "AAAB");
        assert_eq!(format_word(&parse("(AB)^2")), "ABAB");
        assert_eq!(format_word(&parse("(AB)2A")), "ABABA");
        assert_eq!(format_word(&parse("(AB)^-1")), "BBAA");
        assert_eq!(format_word(&parse("A0B")), "B");
        assert!(parse("").is_empty());
        assert_eq!(format_word(&parse(" A B ")), "AB");
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_word::<L>("AC"),
            Err(WordError::UnexpectedChar { ch: 'C', offset: 1 })
        ));
        assert_eq!(parse_word::<L>("(AB"), Err(WordError::Unbalanced));
        assert_eq!(parse_word::<L>("AB)"), Err(WordError::Unbalanced));
        assert!(matches!(
            parse_word::<L>("A^"),
            Err(WordError::BadExponent(_))
        ));
    }

    #[test]
    fn compact_round_trip() {
        let w = parse("U3R3UAB".replace('U', "A").replace('R', "B").as_str());
        assert_eq!(format_word_compact(&w), "A3B3A2B");
        assert_eq!(parse(&format_word_compact(&w)), w);
    }
}
