fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let run = spechtlab::run(&args);
    print!("{}", run.stdout);
    for line in run.stderr.lines() {
        eprintln!("{}", line);
    }
    std::process::exit(run.code);
}
