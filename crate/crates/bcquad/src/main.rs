fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = bcquad::cli::run_command(&args);
    if !out.stdout.is_empty() {
        println!("{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        eprintln!("{}", out.stderr);
    }
    std::process::exit(out.code);
}
