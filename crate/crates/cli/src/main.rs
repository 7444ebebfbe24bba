fn main() {
    std::process::exit(tripartite_discord_cli::run(std::env::args_os()));
}
