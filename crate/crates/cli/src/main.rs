use std::io::Write;

use clap::Parser;
use poset_cone_cli::{execute, Cli, Output, EXIT_OK, EXIT_USAGE};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    if let Some(threads) = cli.threads {
        configure_threads(threads);
    }
    let out = execute(&cli, &mut std::io::stdin().lock()).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(EXIT_USAGE);
    });
    let Output { stdout, code } = out;
    let mut handle = std::io::stdout().lock();
    let _ = handle.write_all(stdout.as_bytes());
    let _ = handle.flush();
    if code != EXIT_OK {
        std::process::exit(code);
    }
}

#[cfg(feature = "parallel")]
fn configure_threads(threads: usize) {
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
        eprintln!("warning: could not configure thread pool: {e}");
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads(_threads: usize) {}
