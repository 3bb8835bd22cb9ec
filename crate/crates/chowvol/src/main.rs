fn main() { std::process::exit(chowvol::cli::run_env()); }
