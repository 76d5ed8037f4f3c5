use std::fmt;

use serde::Serialize;

/// Errors surfaced by the command-line tool. `location` points into the
/// input (a JSON path such as `f.entries[2]`, or `line:column`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input { location: String, message: String },
    Engine(qpencil_core::Error),
    Io(String),
}

#[derive(Serialize)]
struct ErrorObject<'a> {
    kind: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    location: Option<&'a str>,
}

#[derive(Serialize)]
struct ErrorDocument<'a> {
    error: ErrorObject<'a>,
}

impl CliError {
    pub fn input(location: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Input { location: location.into(), message: message.into() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input { .. } => "InvalidInput",
            CliError::Engine(e) => e.kind(),
            CliError::Io(_) => "Io",
        }
    }

    /// Machine-readable `{"error": {kind, message, location}}` document.
    pub fn to_json(&self) -> String {
        let (message, location) = match self {
            CliError::Input { location, message } => (message.clone(), Some(location.as_str())),
            CliError::Engine(e) => (e.to_string(), None),
            CliError::Io(m) => (m.clone(), None),
        };
        let doc = ErrorDocument { error: ErrorObject { kind: self.kind(), message, location } };
        serde_json::to_string_pretty(&doc).expect("error document serializes")
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input { location, message } => write!(f, "invalid input at {location}: {message}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<qpencil_core::Error> for CliError {
    fn from(e: qpencil_core::Error) -> Self {
        CliError::Engine(e)
    }
}
