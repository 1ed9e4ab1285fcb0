//! Run configuration, from flags or from a `key = value` file.

use std::collections::BTreeMap;
use std::str::FromStr;

use hypcm_core::eigen::Representation;
use hypcm_core::C64;

use crate::error::{Error, Result};
use crate::verify::{CheckId, Suite, DEFAULT_SEED};
use crate::wire::{parse_complex, parse_reals};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Pretty,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "pretty" => Ok(OutputFormat::Pretty),
            _ => Err(Error::Usage(format!("unknown output format `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub a_plus: f64,
    pub a_minus: f64,
    pub b: Option<C64>,
    pub output_format: OutputFormat,
    /// Tolerance override for all checks.
    pub tol: Option<f64>,
    /// Per-check tolerance overrides.
    pub tol_overrides: BTreeMap<CheckId, f64>,
    pub seed: u64,
    pub suite: Suite,
    pub representation: Option<Representation>,
    pub threads: Option<usize>,
}

impl Default for CliConfig {
    fn default() -> Self {
        CliConfig {
            a_plus: 1.0,
            a_minus: 1.0,
            b: None,
            output_format: OutputFormat::Pretty,
            tol: None,
            tol_overrides: BTreeMap::new(),
            seed: DEFAULT_SEED,
            suite: Suite::Fast,
            representation: None,
            threads: None,
        }
    }
}

pub fn parse_representation(s: &str) -> Result<Representation> {
    match s {
        "defining" => Ok(Representation::Defining),
        "com" => Ok(Representation::CenterOfMass),
        "dual" => Ok(Representation::Dual),
        "auto" => Ok(Representation::Auto),
        _ => {
            if let Some(r) = s.strip_prefix("residue:") {
                return Ok(Representation::ResidueAugmented(parse_num(r, "residue shift")?));
            }
            Err(Error::Usage(format!("unknown representation `{s}`")))
        }
    }
}

fn parse_num<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Usage(format!("bad {what} `{s}`")))
}

impl CliConfig {
    /// Applies one `key = value` setting.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        match key.trim() {
            "a_plus" => self.a_plus = parse_num(value, "a_plus")?,
            "a_minus" => self.a_minus = parse_num(value, "a_minus")?,
            "a" => match parse_reals(value)?[..] {
                [ap, am] => (self.a_plus, self.a_minus) = (ap, am),
                _ => return Err(Error::Usage(format!("`a` takes two periods, got `{value}`"))),
            },
            "b" => self.b = Some(parse_complex(value)?),
            "threads" => self.threads = Some(parse_num(value, "threads")?),
            "output_format" | "format" => self.output_format = value.parse()?,
            "tol" => self.tol = Some(parse_num(value, "tol")?),
            "seed" => self.seed = parse_num(value, "seed")?,
            "suite" => {
                self.suite = Suite::from_name(value).ok_or_else(|| Error::Usage(format!("unknown suite `{value}`")))?
            }
            "representation" | "rep" => self.representation = Some(parse_representation(value)?),
            k => match k.strip_prefix("tol.") {
                Some(id) => {
                    let id = CheckId::from_name(id).ok_or_else(|| Error::UnknownCheck(id.to_string()))?;
                    self.tol_overrides.insert(id, parse_num(value, "tol")?);
                }
                None => return Err(Error::Usage(format!("unknown config key `{k}`"))),
            },
        }
        Ok(())
    }

    /// Reads a config file body. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = CliConfig::default();
        cfg.merge(text)?;
        Ok(cfg)
    }

    pub fn merge(&mut self, text: &str) -> Result<()> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Usage(format!("config line {}: expected key = value", n + 1)))?;
            self.set(k, v)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_file() {
        let cfg = CliConfig::parse(
            "# periods\na = 2,1\na_plus = 1\na_minus=0.8\n\nb = 0.5\nthreads = 2\nformat = json\nsuite = all\ntol.g_reflection = 1e-12\nrep = residue:0.4\nseed = 7\n",
        )
        .unwrap();
        assert_eq!(cfg.a_minus, 0.8);
        assert_eq!(cfg.b, Some(C64::new(0.5, 0.0)));
        assert_eq!(cfg.output_format, OutputFormat::Json);
        assert_eq!(cfg.suite, Suite::All);
        assert_eq!(cfg.tol_overrides[&CheckId::GReflection], 1e-12);
        assert_eq!(cfg.representation, Some(Representation::ResidueAugmented(0.4)));
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.threads, Some(2));
        assert_eq!(CliConfig::parse("b = 0.8+0.1i").unwrap().b, Some(C64::new(0.8, 0.1)));
        assert_eq!(CliConfig::parse("a = 2,0.5").unwrap().a_minus, 0.5);
    }

    #[test]
    fn rejects_bad_lines() {
        assert!(matches!(CliConfig::parse("a_plus 1"), Err(Error::Usage(_))));
        assert!(matches!(CliConfig::parse("colour = red"), Err(Error::Usage(_))));
        assert!(matches!(CliConfig::parse("tol.nope = 1"), Err(Error::UnknownCheck(_))));
        assert!(matches!(CliConfig::parse("seed = x"), Err(Error::Usage(_))));
        assert!(matches!(CliConfig::parse("a = 1"), Err(Error::Usage(_))));
    }
}
