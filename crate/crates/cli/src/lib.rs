//! Library side of the `apsa` command-line tool.

pub mod cli;
pub mod commands;
pub mod corpus;
pub mod error;

pub use cli::Cli;
pub use commands::run;
pub use error::CliError;

/// Thread count from `APSA_THREADS`, falling back to the available cores.
pub fn thread_count() -> usize {
    std::env::var("APSA_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&t: &usize| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}
