use clap::Parser;

fn main() {
    let cli = lpodc::cli::Cli::parse();
    std::process::exit(lpodc::cli::run(&cli));
}
