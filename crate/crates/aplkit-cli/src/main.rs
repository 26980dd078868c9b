use clap::Parser;

fn main() {
    let cli = aplkit_cli::Cli::parse();
    std::process::exit(aplkit_cli::run(cli));
}
