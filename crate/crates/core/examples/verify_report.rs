//! Drives the command line in-process and prints the text report.

fn main() {
    let args = ["b2weight", "verify", "quad", "--k0", "1/5", "--k1", "-1/10", "--nmax", "2", "--format", "text"];
    let code = b2weight::cli::run(args, &mut std::io::stdout(), &mut std::io::stderr());
    println!("exit code {code}");
}
