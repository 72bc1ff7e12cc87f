fn main() {
    std::process::exit(conflict_games::cli::dispatch(std::env::args()));
}
