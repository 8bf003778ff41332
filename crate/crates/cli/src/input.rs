//! Reading input files with line-accurate error messages.

use std::collections::HashMap;
use std::fs;
use std::io::Read;
use std::path::Path;

use ordchain::dense::{Interval, StagedSet};
use ordchain::trees::{FiniteTree, TreeError, TreeMode};
use ordchain::{Element, ExactRational, OrderOracle, ParseError, Word};

use crate::CliError;

/// A file's contents together with the name used in messages.
pub struct Source {
    pub name: String,
    pub text: String,
}

impl Source {
    /// Reads `path`, or standard input for `-`.
    pub fn read(path: &Path) -> Result<Source, CliError> {
        let name = path.display().to_string();
        let text = if name == "-" {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
                path: "<stdin>".into(),
                source,
            })?;
            s
        } else {
            fs::read_to_string(path).map_err(|source| CliError::Io {
                path: name.clone(),
                source,
            })?
        };
        Ok(Source { name, text })
    }

    pub fn inline(name: &str, text: &str) -> Source {
        Source {
            name: name.into(),
            text: text.into(),
        }
    }

    /// Non-blank lines with `#` comments stripped, numbered from 1.
    pub fn lines(&self) -> impl Iterator<Item = (usize, &str)> {
        self.text.lines().enumerate().filter_map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (!line.is_empty()).then_some((i + 1, line))
        })
    }

    /// Whitespace-separated tokens with their line numbers.
    pub fn tokens(&self) -> impl Iterator<Item = (usize, &str)> {
        self.lines().flat_map(|(n, line)| line.split_whitespace().map(move |t| (n, t)))
    }

    pub fn error(&self, line: usize, e: ParseError) -> CliError {
        CliError::Parse {
            path: self.name.clone(),
            line,
            token: e.token,
            reason: e.reason,
        }
    }

    pub fn elements(&self, o: &OrderOracle) -> Result<Vec<Element>, CliError> {
        self.tokens()
            .map(|(n, t)| o.parse_element(t).map_err(|e| self.error(n, e)))
            .collect()
    }

    pub fn rationals(&self) -> Result<Vec<ExactRational>, CliError> {
        self.tokens()
            .map(|(n, t)| t.parse().map_err(|e| self.error(n, e)))
            .collect()
    }

    /// One ω-word per line.
    pub fn tree(&self, mode: TreeMode) -> Result<FiniteTree, CliError> {
        let mut words = Vec::new();
        let mut first_line = HashMap::new();
        for (n, line) in self.lines() {
            if line.split_whitespace().count() > 1 {
                return Err(self.error(n, ParseError::new(line, "expected one word per line")));
            }
            let w: Word = line.parse().map_err(|e| self.error(n, e))?;
            first_line.entry(w.clone()).or_insert(n);
            words.push(w);
        }
        FiniteTree::validate(words, mode).map_err(|e| match e {
            TreeError::MissingPrefix { node, prefix } => CliError::Parse {
                path: self.name.clone(),
                line: first_line[&node],
                token: node.to_string(),
                reason: format!("missing prefix `{prefix}` (use --closure to add prefixes)"),
            },
            other => CliError::Invalid(other.to_string()),
        })
    }

    /// One stage per line: `lo hi; lo hi; …`.
    pub fn stages(&self) -> Result<StagedSet, CliError> {
        let mut stages = Vec::new();
        for (n, line) in self.lines() {
            let mut stage = Vec::new();
            for part in line.split(';').map(str::trim).filter(|p| !p.is_empty()) {
                let ends: Vec<&str> = part.split_whitespace().collect();
                let [lo, hi] = ends[..] else {
                    return Err(self.error(n, ParseError::new(part, "expected an interval `lo hi`")));
                };
                let lo: ExactRational = lo.parse().map_err(|e| self.error(n, e))?;
                let hi: ExactRational = hi.parse().map_err(|e| self.error(n, e))?;
                if lo > hi {
                    return Err(self.error(n, ParseError::new(part, "interval ends are reversed")));
                }
                stage.push(Interval::new(lo, hi));
            }
            stages.push(stage);
        }
        StagedSet::new(stages).map_err(|e| CliError::Invalid(format!("{}: {e}", self.name)))
    }
}
