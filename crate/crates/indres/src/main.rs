use clap::Parser;

fn main() {
    std::process::exit(indres::cli_io::run(indres::cli_io::Cli::parse()));
}
