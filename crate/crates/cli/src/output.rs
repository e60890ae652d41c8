use brookskit::Error;
use serde::Serialize;
use serde_json::{json, Value};
use std::fs::File;
use std::io::Write;
use std::path::Path;

pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_SCALE: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub error: String,
    pub detail: Value,
}

impl CliError {
    pub fn usage(e: Error) -> Self {
        let error = match &e {
            Error::Parse { .. } | Error::Validation(_) => e.kind().to_string(),
            _ => "usage".to_string(),
        };
        CliError {
            code: EXIT_USAGE,
            error,
            detail: Value::String(e.to_string()),
        }
    }

    pub fn usage_msg(error: &str, detail: String) -> Self {
        CliError {
            code: EXIT_USAGE,
            error: error.to_string(),
            detail: Value::String(detail),
        }
    }

    pub fn domain(error: &str, detail: Value) -> Self {
        CliError {
            code: EXIT_DOMAIN,
            error: error.to_string(),
            detail,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Scale { .. } => EXIT_SCALE,
            Error::Parse { .. } | Error::Validation(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        let detail = match &e {
            Error::Precondition {
                reason,
                witness: Some(w),
            } => json!({ "message": e.to_string(), "reason": reason, "witness": w }),
            Error::Scale { what, value, limit } => {
                json!({ "message": e.to_string(), "what": what, "value": value, "limit": limit })
            }
            _ => Value::String(e.to_string()),
        };
        CliError {
            code,
            error: e.kind().to_string(),
            detail,
        }
    }
}

/// JSON goes to the data sink, log lines to stderr.
pub struct Out {
    sink: Box<dyn Write>,
    pub quiet: bool,
}

impl Out {
    pub fn stdout() -> Self {
        Out {
            sink: Box::new(std::io::stdout()),
            quiet: false,
        }
    }

    pub fn file(path: &Path) -> Result<Self, CliError> {
        let f = File::create(path).map_err(|e| CliError::usage_msg("io", format!("{}: {e}", path.display())))?;
        Ok(Out {
            sink: Box::new(f),
            quiet: false,
        })
    }

    pub fn json<T: Serialize>(&mut self, value: &T) {
        let line = serde_json::to_string(value).expect("output is serializable");
        let _ = writeln!(self.sink, "{line}");
    }

    pub fn text(&mut self, s: &str) {
        let _ = writeln!(self.sink, "{s}");
    }

    pub fn log(&self, msg: impl AsRef<str>) {
        if !self.quiet {
            eprintln!("brookskit: {}", msg.as_ref());
        }
    }

    pub fn emit_error(&mut self, e: &CliError) {
        self.json(&json!({ "error": e.error, "detail": e.detail }));
    }
}
