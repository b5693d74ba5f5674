//! The `cubic` command line: constants, counts, series and verification.
//!
//! Every JSON response is `{"query": ..., "result": ..., "warnings": [...]}`;
//! errors are `{"query": ..., "error": {"kind": ..., "message": ...}}` on stderr.

pub mod commands;
pub mod query;

use serde_json::json;

use cubic_core::ErrorKind;

pub use query::{Cli, Format, Query};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_INTEGRITY: u8 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Response {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Integrity => EXIT_INTEGRITY,
        ErrorKind::Domain | ErrorKind::Parse | ErrorKind::Resource => EXIT_VALIDATION,
    }
}

/// Error document for failures that occur before a query exists.
pub fn usage_error(message: &str) -> String {
    let doc = json!({ "query": null, "error": { "kind": "usage", "message": message } });
    serde_json::to_string_pretty(&doc).unwrap() + "\n"
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

pub fn run(query: &Query) -> Response {
    let outcome = match query {
        Query::Constants(a) => commands::constants(a),
        Query::Count(a) => commands::count(a),
        Query::Series(a) => commands::series(a),
        Query::Verify(a) => commands::verify(a),
        Query::ReproduceExample(a) => commands::reproduce_example(a),
    };
    match outcome {
        Ok(out) => {
            let code = if out.failed {
                EXIT_VERIFY_FAILED
            } else {
                EXIT_OK
            };
            match query.format() {
                Format::Json => {
                    let doc =
                        json!({ "query": query, "result": out.result, "warnings": out.warnings });
                    Response {
                        stdout: serde_json::to_string_pretty(&doc).unwrap() + "\n",
                        stderr: String::new(),
                        code,
                    }
                }
                Format::Tsv => Response {
                    stdout: tsv(&out.tsv),
                    stderr: out
                        .warnings
                        .iter()
                        .map(|w| format!("warning: {w}\n"))
                        .collect(),
                    code,
                },
            }
        }
        Err(e) => {
            let doc = json!({
                "query": query,
                "error": { "kind": e.kind().as_str(), "message": e.to_string() },
            });
            Response {
                stdout: String::new(),
                stderr: serde_json::to_string_pretty(&doc).unwrap() + "\n",
                code: exit_code(e.kind()),
            }
        }
    }
}
