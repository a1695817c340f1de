use clap::Parser;
use std::io::Write;
use std::time::Instant;

fn main() {
    let cli = match tourinv_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout with status 0 and usage
            // errors to stderr with status 2, matching our convention.
            e.exit();
        }
    };

    let start = Instant::now();
    let mut out = String::new();
    let code = match tourinv_cli::run(&cli, &mut out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            tourinv_cli::exit_code(&e)
        }
    };
    print!("{out}");
    std::io::stdout().flush().ok();
    // Wall time is deliberately kept off stdout so records stay diffable.
    eprintln!("# wall_ms={}", start.elapsed().as_millis());
    std::process::exit(code);
}
