fn main() {
    std::process::exit(ara_rpsm::bench::run(std::env::args_os()));
}
