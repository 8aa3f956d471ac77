use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use percbound::Error;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Input = 2,
    Numeric = 3,
    InvalidPattern = 4,
}

#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
}

impl Failure {
    pub fn input(message: impl fmt::Display) -> Self {
        Failure {
            status: Status::Input,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::FlatCurve(_) => Status::Numeric,
            _ => Status::Input,
        };
        Failure {
            status,
            message: e.to_string(),
        }
    }
}

pub fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

/// Writes `bytes` to `path`, or to standard output.
pub fn emit(path: Option<&Path>, bytes: &[u8]) -> Result<(), Failure> {
    let result = match path {
        Some(p) => fs::write(p, bytes),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(bytes).and_then(|_| out.flush())
        }
    };
    result.map_err(|e| match path {
        Some(p) => Failure::input(format!("{}: {e}", p.display())),
        None => Failure::input(format!("standard output: {e}")),
    })
}

pub fn json<T: serde::Serialize>(value: &T) -> Vec<u8> {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s.into_bytes()
}

/// Fixed-precision cell for text tables; `-` when undefined.
pub fn cell(x: Option<f64>) -> String {
    match x {
        Some(v) => format!("{v:.6}"),
        None => "-".to_string(),
    }
}
