use thiserror::Error;

/// Anything that makes an invocation invalid: bad syntax, dangling names,
/// or a structure failing its validator.  All of these exit with code 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at {0}")]
    Parse(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("unresolved reference `{0}`")]
    Unresolved(String),
    #[error("`{name}`: {source}")]
    Invalid {
        name: String,
        source: laxcomma_core::Error,
    },
    #[error(transparent)]
    Core(#[from] laxcomma_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
