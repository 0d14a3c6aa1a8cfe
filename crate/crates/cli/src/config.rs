//! Flat `key = value` configuration files.
//!
//! Grammar: one `key = value` per line; blank lines and lines starting with
//! `#` are ignored; surrounding whitespace is trimmed. Keys: `cache_dir`,
//! `seed`, `jobs`, `closure_bound`, `suite`, `format`, `timings`.

use std::path::PathBuf;

use griess_lab::axial::DEFAULT_CLOSURE_BOUND;
use griess_lab::scenarios::{Format, Suite, DEFAULT_SEED};

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// None keeps everything in memory.
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
    pub jobs: usize,
    pub closure_bound: usize,
    pub suite: Suite,
    pub format: Format,
    pub timings: bool,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            cache_dir: None,
            seed: DEFAULT_SEED,
            jobs: 1,
            closure_bound: DEFAULT_CLOSURE_BOUND,
            suite: Suite::All,
            format: Format::Text,
            timings: false,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut c = Config::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| v.parse::<u64>().map_err(|_| format!("line {}: {key} needs a number", n + 1));
            match key {
                "cache_dir" => c.cache_dir = Some(PathBuf::from(value)),
                "seed" => c.seed = num(value)?,
                "jobs" => c.jobs = num(value)? as usize,
                "closure_bound" => c.closure_bound = num(value)? as usize,
                "suite" => c.suite = value.parse()?,
                "format" => c.format = value.parse()?,
                "timings" => c.timings = value.parse().map_err(|_| format!("line {}: timings needs true or false", n + 1))?,
                _ => return Err(format!("line {}: unknown key {key:?}", n + 1)),
            }
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_keys() {
        let c = Config::parse("# comment\n\ncache_dir = /tmp/x\nseed=7\njobs = 3\nclosure_bound = 50\nsuite = cocycle\nformat = json\ntimings = true\n").unwrap();
        assert_eq!(c.cache_dir, Some(PathBuf::from("/tmp/x")));
        assert_eq!((c.seed, c.jobs, c.closure_bound, c.timings), (7, 3, 50, true));
        assert_eq!((c.suite, c.format), (Suite::Cocycle, Format::Json));
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(Config::parse("seed").is_err());
        assert!(Config::parse("colour = red").is_err());
        assert!(Config::parse("suite = nosuch").is_err());
        assert!(Config::parse("seed = -1").is_err());
        assert_eq!(Config::parse("").unwrap(), Config::default());
    }
}
