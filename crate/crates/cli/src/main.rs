use clap::Parser;

fn main() {
    let cli = polyclique_cli::Cli::parse();
    std::process::exit(polyclique_cli::run(cli));
}
