//! Drive the command-line front end in-process.
fn main() {
    for args in [
        vec!["validate", "fixp"],
        vec!["axioms", "fixi", "--set", "frc", "--family", "all", "--human"],
        vec!["colimit", "@random", "--seed", "7", "--method", "both", "--human"],
    ] {
        let out = bifrac::cli::run(std::iter::once("bifrac").chain(args.iter().copied()));
        println!("$ bifrac {} -> exit {}", args.join(" "), out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
