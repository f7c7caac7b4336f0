use std::collections::HashSet;
use std::fs;
use std::io;
use std::ops::Range;
use std::path::Path;

/// Abbreviations whose trailing period does not end a sentence.
pub const DEFAULT_ABBREVIATIONS: &[&str] = &[
    "e.g", "i.e", "etc", "vs", "cf", "al", "approx", "Mr", "Mrs", "Ms", "Dr", "Prof", "St", "Jr",
    "Inc", "Ltd", "Co", "Fig", "Figs", "Eq", "Eqs", "No", "Nos", "U.S", "U.K",
];

const OPENERS: &[char] = &['(', '[', '{', '"', '\'', '\u{201c}', '\u{2018}'];
const CLOSERS: &[char] = &[')', ']', '}', '"', '\'', '\u{201d}', '\u{2019}'];

/// Rule-based sentence splitter.
///
/// Boundaries fall after a run of `.`, `?`, `!` (and `;` unless disabled)
/// that is followed by whitespace or end of text, optionally with closing
/// quotes or brackets in between, and at blank-line paragraph breaks.
/// A lone period is not a boundary after a known abbreviation or between
/// two digits.
#[derive(Debug, Clone)]
pub struct Segmenter {
    abbreviations: HashSet<String>,
    semicolon_breaks: bool,
}

impl Default for Segmenter {
    fn default() -> Self {
        Segmenter::new(DEFAULT_ABBREVIATIONS)
    }
}

impl Segmenter {
    /// Entries are matched exactly, without their trailing period. An
    /// all-lowercase entry also matches with a capitalized first letter.
    pub fn new<I, S>(abbreviations: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let abbreviations = abbreviations
            .into_iter()
            .filter_map(|a| {
                let a = a.as_ref().trim().trim_end_matches('.');
                (!a.is_empty()).then(|| a.to_string())
            })
            .collect();
        Segmenter {
            abbreviations,
            semicolon_breaks: true,
        }
    }

    /// Reads one abbreviation per line. Blank lines and `#` comments are
    /// skipped.
    pub fn from_abbreviation_file(path: &Path) -> io::Result<Self> {
        let content = fs::read_to_string(path)?;
        Ok(Segmenter::new(
            content
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty()),
        ))
    }

    pub fn with_semicolon_breaks(mut self, enabled: bool) -> Self {
        self.semicolon_breaks = enabled;
        self
    }

    pub fn is_abbreviation(&self, word: &str) -> bool {
        if self.abbreviations.contains(word) {
            return true;
        }
        // "E.g" at sentence start
        let mut chars = word.chars();
        match chars.next() {
            Some(first) if first.is_uppercase() => {
                let lowered: String = first.to_lowercase().chain(chars).collect();
                lowered != word
                    && self.abbreviations.contains(&lowered)
                    && lowered.chars().all(|c| !c.is_uppercase())
            }
            _ => false,
        }
    }

    fn is_terminator(&self, c: char) -> bool {
        matches!(c, '.' | '?' | '!') || (self.semicolon_breaks && c == ';')
    }

    /// Byte ranges of the sentences in `text`, trimmed of surrounding
    /// whitespace. Every non-whitespace character belongs to exactly one
    /// range.
    pub fn spans(&self, text: &str) -> Vec<Range<usize>> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut spans = Vec::new();
        let mut start: Option<usize> = None;
        let mut i = 0;

        while i < chars.len() {
            let (pos, c) = chars[i];

            if c == '\n' && start.is_some() {
                let mut j = i + 1;
                while j < chars.len() && chars[j].1.is_whitespace() && chars[j].1 != '\n' {
                    j += 1;
                }
                if j < chars.len() && chars[j].1 == '\n' {
                    push_span(text, &mut spans, start.take().unwrap(), pos);
                    i = j + 1;
                    continue;
                }
            }

            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let sentence_start = *start.get_or_insert(pos);

            if !self.is_terminator(c) {
                i += 1;
                continue;
            }

            let mut j = i;
            while j < chars.len() && self.is_terminator(chars[j].1) {
                j += 1;
            }
            let run_len = j - i;
            while j < chars.len() && CLOSERS.contains(&chars[j].1) {
                j += 1;
            }
            let at_break = j == chars.len() || chars[j].1.is_whitespace();
            let end = chars.get(j).map_or(text.len(), |&(p, _)| p);

            let is_boundary = at_break
                && !(run_len == 1
                    && c == '.'
                    && (self.between_digits(&chars, i)
                        || self.follows_abbreviation(text, sentence_start, pos)));

            if is_boundary {
                push_span(text, &mut spans, sentence_start, end);
                start = None;
            }
            i = j;
        }

        if let Some(s) = start {
            push_span(text, &mut spans, s, text.len());
        }
        spans
    }

    pub fn segment<'a>(&self, text: &'a str) -> Vec<&'a str> {
        self.spans(text).into_iter().map(|r| &text[r]).collect()
    }

    fn between_digits(&self, chars: &[(usize, char)], i: usize) -> bool {
        i > 0
            && i + 1 < chars.len()
            && chars[i - 1].1.is_ascii_digit()
            && chars[i + 1].1.is_ascii_digit()
    }

    fn follows_abbreviation(&self, text: &str, sentence_start: usize, period: usize) -> bool {
        let before = &text[sentence_start..period];
        let word = before
            .rsplit(char::is_whitespace)
            .next()
            .unwrap_or("")
            .trim_start_matches(OPENERS);
        !word.is_empty() && self.is_abbreviation(word)
    }
}

fn push_span(text: &str, spans: &mut Vec<Range<usize>>, start: usize, end: usize) {
    let slice = &text[start..end];
    let trimmed_end = start + slice.trim_end().len();
    if trimmed_end > start {
        spans.push(start..trimmed_end);
    }
}

/// Splits `text` into sentences with the default [`Segmenter`].
pub fn segment_sentences(text: &str) -> Vec<&str> {
    Segmenter::default().segment(text)
}
