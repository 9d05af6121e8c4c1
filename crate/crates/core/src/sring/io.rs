//! Partition files: one class per line, space-separated element indices.
//! Blank lines and lines starting with `#` are skipped.

use crate::error::{Error, Result};

pub fn parse_partition(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut classes = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let class = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| Error::Parse {
                    line: i + 1,
                    reason: format!("{tok:?} is not an element index"),
                })
            })
            .collect::<Result<Vec<u32>>>()?;
        classes.push(class);
    }
    if classes.is_empty() {
        return Err(Error::Parse {
            line: 0,
            reason: "no classes".into(),
        });
    }
    Ok(classes)
}

/// Normalized output: classes sorted internally and by smallest element.
pub fn format_partition(classes: &[Vec<u32>]) -> String {
    let normalized = super::normalize(classes.to_vec());
    let mut out = String::new();
    for class in normalized {
        let line: Vec<String> = class.iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_errors() {
        assert!(parse_partition("").is_err());
        let err = parse_partition("0\n1 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn comments_and_order() {
        let p = parse_partition("# header\n3 1\n\n0\n2\n").unwrap();
        assert_eq!(format_partition(&p), "0\n1 3\n2\n");
    }

    proptest! {
        #[test]
        fn format_then_parse_is_normalizing(perm in Just((0u32..20).collect::<Vec<_>>()).prop_shuffle(), cuts in prop::collection::vec(1usize..20, 0..6)) {
            let mut cuts = cuts;
            cuts.sort_unstable();
            cuts.dedup();
            let mut classes = Vec::new();
            let mut start = 0;
            for c in cuts.into_iter().chain(std::iter::once(20)) {
                if c > start {
                    classes.push(perm[start..c].to_vec());
                    start = c;
                }
            }
            let text = format_partition(&classes);
            let parsed = parse_partition(&text).unwrap();
            prop_assert_eq!(format_partition(&parsed), text);
            prop_assert_eq!(parsed, crate::sring::normalize(classes));
        }
    }
}
