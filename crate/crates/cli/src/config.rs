//! `key = value` setup files. Keys mirror the `setup` flags; `#` starts a
//! comment.

use std::collections::BTreeMap;

use crate::error::{usage, CliResult};

const KEYS: [&str; 7] = ["n", "d", "k", "t", "prime", "variant", "seed"];

pub fn parse(text: &str) -> CliResult<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(usage(format!(
                "config line {}: expected key = value",
                lineno + 1
            )));
        };
        let key = key.trim().replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(usage(format!(
                "config line {}: unknown key `{key}`",
                lineno + 1
            )));
        }
        if out.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(usage(format!(
                "config line {}: `{key}` given twice",
                lineno + 1
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blank_lines() {
        let cfg = parse("# system\nn = 8\n\nd=4   # threshold\nprime = small\n").unwrap();
        assert_eq!(cfg["n"], "8");
        assert_eq!(cfg["d"], "4");
        assert_eq!(cfg["prime"], "small");
    }

    #[test]
    fn rejects_unknown_and_repeated_keys() {
        assert!(parse("q = 1").is_err());
        assert!(parse("n = 1\nn = 2").is_err());
        assert!(parse("just words").is_err());
    }
}
