fn is_apostrophe(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}')
}

fn is_hyphen(c: char) -> bool {
    matches!(c, '-' | '\u{2010}' | '\u{2011}')
}

/// Splits text into lowercase word tokens.
///
/// A token is a maximal run of alphabetic characters, possibly joined by
/// single internal apostrophes or hyphens (`bank's`, `risk-averse`).
/// Digits and punctuation separate tokens and are dropped, so `Q1` yields
/// `q` and `2.1%` yields nothing. Curly apostrophes and Unicode hyphens are
/// normalized to ASCII.
pub fn tokenize_words(text: &str) -> Vec<String> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut chars = text.chars().peekable();

    while let Some(c) = chars.next() {
        if c.is_alphabetic() {
            current.extend(c.to_lowercase());
            continue;
        }
        let joiner = if is_apostrophe(c) {
            Some('\'')
        } else if is_hyphen(c) {
            Some('-')
        } else {
            None
        };
        match joiner {
            Some(j) if !current.is_empty() && chars.peek().is_some_and(|n| n.is_alphabetic()) => {
                current.push(j);
            }
            _ => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    tokens
}
