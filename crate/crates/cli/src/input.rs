//! Reading whitespace-separated numbers from arguments, a file or stdin.

use std::fmt;
use std::io::Read;
use std::path::PathBuf;

use gcdn_core::Natural;

#[derive(Debug, Clone)]
pub enum Source {
    Args(Vec<String>),
    File(PathBuf),
    Stdin,
}

#[derive(Debug, Clone)]
pub struct InputSpec {
    pub source: Source,
    /// Read unprefixed tokens as hexadecimal. `0x` tokens are hex either way.
    pub hex: bool,
}

#[derive(Debug)]
pub enum InputError {
    Io {
        what: String,
        err: std::io::Error,
    },
    Parse {
        token: String,
        position: usize,
        line: Option<usize>,
    },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Io { what, err } => write!(f, "cannot read {what}: {err}"),
            InputError::Parse {
                token,
                position,
                line: Some(line),
            } => {
                write!(
                    f,
                    "invalid number `{token}` (token {position}, line {line})"
                )
            }
            InputError::Parse {
                token,
                position,
                line: None,
            } => {
                write!(f, "invalid number `{token}` (argument {position})")
            }
        }
    }
}

impl InputSpec {
    pub fn read(&self) -> Result<Vec<Natural>, InputError> {
        match &self.source {
            Source::Args(args) => args
                .iter()
                .enumerate()
                .map(|(i, tok)| self.parse_token(tok, i + 1, None))
                .collect(),
            Source::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|err| InputError::Io {
                    what: path.display().to_string(),
                    err,
                })?;
                self.parse_text(&text)
            }
            Source::Stdin => {
                let mut text = String::new();
                std::io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|err| InputError::Io {
                        what: "stdin".into(),
                        err,
                    })?;
                self.parse_text(&text)
            }
        }
    }

    fn parse_text(&self, text: &str) -> Result<Vec<Natural>, InputError> {
        let mut out = Vec::new();
        for (line_no, line) in text.lines().enumerate() {
            for tok in line.split_whitespace() {
                let position = out.len() + 1;
                out.push(self.parse_token(tok, position, Some(line_no + 1))?);
            }
        }
        Ok(out)
    }

    fn parse_token(
        &self,
        tok: &str,
        position: usize,
        line: Option<usize>,
    ) -> Result<Natural, InputError> {
        let parsed = if self.hex && !tok.starts_with("0x") && !tok.starts_with("0X") {
            Natural::from_str_radix(tok, 16)
        } else {
            tok.parse()
        };
        parsed.map_err(|_| InputError::Parse {
            token: tok.to_string(),
            position,
            line,
        })
    }
}
