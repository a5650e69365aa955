//! Text formats for codes and length profiles.
//!
//! A code file starts with a `q=<size>` header, then holds one word per
//! line. For `q <= 10` a word is a digit string such as `02101`; otherwise
//! it is a comma-separated list of symbols. Blank lines and anything after
//! `#` are ignored.
//!
//! A profile file has the same header followed by `<length> <count>` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use noc_core::count::CodeSizeProfile;
use noc_core::{Alphabet, Code, Word};
use num_bigint::BigUint;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: expected a `q=<alphabet size>` header")]
    MissingHeader { line: usize },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Word { line: usize, source: noc_core::Error },
    #[error(transparent)]
    Invalid(#[from] noc_core::Error),
}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Alphabet, FormatError> {
    let (line, text) = lines.next().ok_or(FormatError::MissingHeader { line: 1 })?;
    let value = text
        .split_once('=')
        .filter(|(key, _)| key.trim() == "q")
        .map(|(_, v)| v.trim())
        .ok_or(FormatError::MissingHeader { line })?;
    let q: usize = value
        .parse()
        .map_err(|_| FormatError::Syntax { line, msg: format!("alphabet size `{value}` is not an integer") })?;
    Alphabet::new(q).map_err(|source| FormatError::Word { line, source })
}

fn parse_symbols(line: usize, text: &str, alphabet: Alphabet) -> Result<Vec<u8>, FormatError> {
    let bad = |tok: &str| FormatError::Syntax { line, msg: format!("`{tok}` is not a symbol") };
    if alphabet.size() <= 10 && !text.contains(',') {
        text.chars().map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad(&c.to_string()))).collect()
    } else {
        text.split(',').map(|tok| tok.trim().parse::<u8>().map_err(|_| bad(tok.trim()))).collect()
    }
}

/// The header alphabet and the listed words, in file order. Unlike
/// [`parse_code`] this admits length-1 words and repeats, so it also reads
/// forbidden-block files.
pub fn parse_words(text: &str) -> Result<(Alphabet, Vec<Word>), FormatError> {
    let mut lines = content_lines(text);
    let alphabet = parse_header(&mut lines)?;
    let mut words = Vec::new();
    for (line, body) in lines {
        let symbols = parse_symbols(line, body, alphabet)?;
        words.push(Word::new(alphabet, symbols).map_err(|source| FormatError::Word { line, source })?);
    }
    Ok((alphabet, words))
}

pub fn parse_code(text: &str) -> Result<Code, FormatError> {
    let (alphabet, words) = parse_words(text)?;
    Ok(Code::new(alphabet, words)?)
}

/// Renders one word in the file syntax for its alphabet.
pub fn format_word(word: &Word, alphabet: Alphabet) -> String {
    if alphabet.size() <= 10 {
        word.symbols().iter().map(|s| char::from(b'0' + s)).collect()
    } else {
        word.symbols().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// The file text for `code`, with `comments` emitted as `#` lines after the header.
pub fn write_code(code: &Code, comments: &[String]) -> String {
    let mut out = format!("q={}\n", code.alphabet().size());
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    for w in code {
        out.push_str(&format_word(w, code.alphabet()));
        out.push('\n');
    }
    out
}

pub fn parse_profile(text: &str) -> Result<CodeSizeProfile, FormatError> {
    let mut lines = content_lines(text);
    let alphabet = parse_header(&mut lines)?;
    let mut sizes: BTreeMap<usize, BigUint> = BTreeMap::new();
    for (line, body) in lines {
        let fields: Vec<&str> = body.split(|c: char| c.is_whitespace() || c == ',').filter(|f| !f.is_empty()).collect();
        let [len, count] = fields[..] else {
            return Err(FormatError::Syntax { line, msg: "expected `<length> <count>`".into() });
        };
        let len: usize =
            len.parse().map_err(|_| FormatError::Syntax { line, msg: format!("`{len}` is not a length") })?;
        let count: BigUint =
            count.parse().map_err(|_| FormatError::Syntax { line, msg: format!("`{count}` is not a count") })?;
        if sizes.insert(len, count).is_some() {
            return Err(FormatError::Syntax { line, msg: format!("length {len} listed twice") });
        }
    }
    Ok(CodeSizeProfile::new(alphabet.size() as u32, sizes)?)
}

pub fn write_profile(profile: &CodeSizeProfile) -> String {
    let mut out = format!("q={}\n", profile.q());
    for (len, count) in profile.sizes() {
        let _ = writeln!(out, "{len} {count}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_round_trip() {
        let text = "# example\nq=3\n\n0121 # trailing\n0221\n";
        let code = parse_code(text).unwrap();
        assert_eq!(code.len(), 2);
        let again = parse_code(&write_code(&code, &["size=2".into()])).unwrap();
        assert_eq!(again, code);
    }

    #[test]
    fn large_alphabets_use_commas() {
        let code = parse_code("q=12\n0,11,3\n0, 10, 3\n").unwrap();
        let text = write_code(&code, &[]);
        assert_eq!(text, "q=12\n0,10,3\n0,11,3\n");
        assert_eq!(parse_code(&text).unwrap(), code);
        assert_eq!(parse_code("q=3\n0,1,2\n").unwrap().len(), 1);
    }

    #[test]
    fn malformed_code_files() {
        assert!(matches!(parse_code(""), Err(FormatError::MissingHeader { .. })));
        assert!(matches!(parse_code("0101\n"), Err(FormatError::MissingHeader { line: 1 })));
        assert!(matches!(parse_code("q=x\n"), Err(FormatError::Syntax { line: 1, .. })));
        assert!(matches!(parse_code("q=2\n01\n0a1\n"), Err(FormatError::Syntax { line: 3, .. })));
        assert!(matches!(parse_code("q=2\n012\n"), Err(FormatError::Word { line: 2, .. })));
        assert!(matches!(parse_code("q=2\n01\n01\n"), Err(FormatError::Invalid(noc_core::Error::DuplicateWord(_)))));
        assert!(matches!(parse_code("q=2\n0\n"), Err(FormatError::Invalid(noc_core::Error::ShortCodeword(_)))));
        assert!(matches!(parse_code("q=1\n"), Err(FormatError::Word { line: 1, .. })));
    }

    #[test]
    fn block_files_admit_single_symbols() {
        let (a, words) = parse_words("q=4\n0\n1\n").unwrap();
        assert_eq!(a.size(), 4);
        assert_eq!(words.len(), 2);
    }

    #[test]
    fn profile_round_trip() {
        let p = parse_profile("q=2\n8 1\n# comment\n9, 13\n").unwrap();
        assert_eq!((p.h(), p.n()), (Some(8), Some(9)));
        assert_eq!(parse_profile(&write_profile(&p)).unwrap(), p);
        assert!(parse_profile("q=2\n8\n").is_err());
        assert!(parse_profile("q=2\n2 5\n").is_err());
        assert!(parse_profile("q=2\n3 1\n3 2\n").is_err());
    }
}
