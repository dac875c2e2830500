//! Tokenizer for `.qk` text. Total: every input, valid or not, yields
//! a token stream; characters that fit nothing become error tokens the
//! parser reports with their span.

use crate::ast::Span;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tok {
    /// Identifiers and numerals. Hyphens are allowed inside a name
    /// when followed by another name character, so `plus-cap` and
    /// `walking-arrow` are single names while `a->b` still splits
    /// around the arrow.
    Name(String),
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Dot,
    Eq,
    Star,
    /// `->`
    Arrow,
    /// `-|->`
    ProArrow,
    /// `<=`
    Leq,
    /// A character no token starts with.
    Bad(char),
}

impl Tok {
    /// How the token is written, for error messages and the printer.
    pub fn show(&self) -> String {
        match self {
            Tok::Name(s) => format!("`{s}`"),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Colon => "`:`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Star => "`*`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::ProArrow => "`-|->`".into(),
            Tok::Leq => "`<=`".into(),
            Tok::Bad(c) => format!("{c:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Tokenize the whole source. Never fails; never panics.
pub fn lex(src: &str) -> Vec<Token> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);

    let mut push = |tok: Tok, line: usize, col: usize, len: usize| {
        out.push(Token { tok, span: Span { line, col, len } });
    };

    while i < chars.len() {
        let c = chars[i];
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if is_name_char(c) {
            let (l0, c0) = (line, col);
            let mut name = String::new();
            while i < chars.len() {
                let ch = chars[i];
                if is_name_char(ch) {
                    name.push(ch);
                    i += 1;
                    col += 1;
                } else if ch == '-' && i + 1 < chars.len() && is_name_char(chars[i + 1]) {
                    name.push(ch);
                    i += 1;
                    col += 1;
                } else {
                    break;
                }
            }
            let len = name.chars().count();
            push(Tok::Name(name), l0, c0, len);
            continue;
        }
        // `-|->` then `->`, longest match first.
        if c == '-' && chars.get(i + 1) == Some(&'|') && chars.get(i + 2) == Some(&'-') && chars.get(i + 3) == Some(&'>') {
            push(Tok::ProArrow, line, col, 4);
            i += 4;
            col += 4;
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'>') {
            push(Tok::Arrow, line, col, 2);
            i += 2;
            col += 2;
            continue;
        }
        if c == '<' && chars.get(i + 1) == Some(&'=') {
            push(Tok::Leq, line, col, 2);
            i += 2;
            col += 2;
            continue;
        }
        let single = match c {
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ':' => Some(Tok::Colon),
            ';' => Some(Tok::Semi),
            ',' => Some(Tok::Comma),
            '.' => Some(Tok::Dot),
            '=' => Some(Tok::Eq),
            '*' => Some(Tok::Star),
            other => Some(Tok::Bad(other)),
        };
        push(single.expect("always some"), line, col, 1);
        i += 1;
        col += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<Tok> {
        lex(src).into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn arrows_split_names_but_hyphenated_words_hold_together() {
        assert_eq!(
            kinds("a->b"),
            vec![Tok::Name("a".into()), Tok::Arrow, Tok::Name("b".into())]
        );
        assert_eq!(kinds("plus-cap"), vec![Tok::Name("plus-cap".into())]);
        assert_eq!(
            kinds("A -|-> B"),
            vec![Tok::Name("A".into()), Tok::ProArrow, Tok::Name("B".into())]
        );
    }

    #[test]
    fn comments_and_spans() {
        let toks = lex("x # rest is gone\n  y");
        assert_eq!(toks.len(), 2);
        assert_eq!(toks[1].span, Span { line: 2, col: 3, len: 1 });
    }

    #[test]
    fn strange_bytes_become_bad_tokens() {
        let toks = lex("a @ b");
        assert_eq!(toks[1].tok, Tok::Bad('@'));
    }
}
