//! Vowel-group syllable estimation.
//!
//! The count starts from the number of maximal runs of `a e i o u y`, then
//! applies a handful of English spelling corrections:
//!
//! * a final consonant + `e` is silent, except in consonant + `le`
//!   (`rate` = 1, `table` = 2);
//! * final `-ed` is silent unless it follows `t` or `d`
//!   (`declined` = 2, `expected` = 3);
//! * final `-es` is silent after a single consonant other than a sibilant
//!   or `l` in consonant + `les` (`rates` = 1, `prices` = 2, `tables` = 2);
//! * a consonant + `e` before `-ly`, `-ment(s)`, `-ful`, `-ness`, `-less`
//!   is silent (`likely` = 2, `announcement` = 3);
//! * the vowel pairs `ia`, `ua`, `io` split into two syllables except in
//!   the usual one-syllable spellings (`-cial`, `-tial`, `qua`, `gua`,
//!   `-tion`, `-ion`).
//!
//! The result is clamped to at least 1. Hyphenated tokens sum their parts.

fn is_vowel(c: u8) -> bool {
    matches!(c, b'a' | b'e' | b'i' | b'o' | b'u' | b'y')
}

fn is_consonant(c: u8) -> bool {
    c.is_ascii_alphabetic() && !is_vowel(c)
}

const SILENT_E_SUFFIXES: &[&str] = &["ments", "ment", "ness", "less", "ful", "ly"];

/// Estimated syllable count of a lowercase word token; always ≥ 1.
pub fn count_syllables(word: &str) -> u32 {
    if word.contains('-') {
        return word
            .split('-')
            .filter(|part| !part.is_empty())
            .map(count_part)
            .sum::<u32>()
            .max(1);
    }
    count_part(word)
}

fn count_part(word: &str) -> u32 {
    let letters: Vec<u8> = word
        .chars()
        .filter(|c| c.is_alphabetic())
        .map(|c| if c.is_ascii() { c as u8 } else { b'#' })
        .collect();
    let n = letters.len();
    let mut count: i32 = 0;

    let mut i = 0;
    while i < n {
        if !is_vowel(letters[i]) {
            i += 1;
            continue;
        }
        let start = i;
        while i < n && is_vowel(letters[i]) {
            i += 1;
        }
        count += 1 + hiatus_splits(&letters, start, i) as i32;
    }

    if silent_final_e(&letters) {
        count -= 1;
    }
    count.max(1) as u32
}

/// Extra syllables inside the vowel run `letters[start..end]`.
fn hiatus_splits(letters: &[u8], start: usize, end: usize) -> u32 {
    let before = |k: usize| (k > 0).then(|| letters[k - 1]);
    let after = |k: usize| letters.get(k + 2).copied();
    let mut splits = 0;
    for k in start..end.saturating_sub(1) {
        let split = match (letters[k], letters[k + 1]) {
            (b'i', b'a') => !matches!(before(k), Some(b'c' | b't' | b's' | b'g')),
            (b'u', b'a') => !matches!(before(k), Some(b'q' | b'g')),
            (b'i', b'o') => {
                !matches!(before(k), Some(b'c' | b't' | b's' | b'x' | b'g'))
                    && after(k) != Some(b'n')
            }
            _ => false,
        };
        if split {
            splits += 1;
        }
    }
    splits
}

fn silent_final_e(w: &[u8]) -> bool {
    let n = w.len();
    let at = |k: usize| w.get(k).copied().unwrap_or(0);
    let consonant_le = |e: usize| e >= 2 && at(e - 1) == b'l' && is_consonant(at(e - 2));

    if n >= 2 && at(n - 1) == b'e' && is_consonant(at(n - 2)) {
        return !consonant_le(n - 1);
    }
    if n >= 3 && at(n - 2) == b'e' && is_consonant(at(n - 3)) {
        let before = at(n - 3);
        match at(n - 1) {
            b'd' => return !matches!(before, b't' | b'd'),
            b's' => {
                let sibilant = matches!(before, b's' | b'x' | b'z' | b'c' | b'g')
                    || (before == b'h' && n >= 4 && matches!(at(n - 4), b'c' | b's'));
                return !sibilant && !consonant_le(n - 2);
            }
            _ => {}
        }
    }
    for suffix in SILENT_E_SUFFIXES {
        let s = suffix.as_bytes();
        if !w.ends_with(s) {
            continue;
        }
        let stem = &w[..n - s.len()];
        let m = stem.len();
        if m >= 4
            && stem[m - 1] == b'e'
            && is_consonant(stem[m - 2])
            && !consonant_le(m - 1)
            && stem[..m - 1].iter().any(|&c| is_vowel(c))
        {
            return true;
        }
    }
    false
}
