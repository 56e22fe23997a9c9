//! Rewrites the JSON fixtures from the in-code builders.
//!
//!     cargo run --example regenerate_fixtures [dir]

fn main() {
    let dir = std::env::args().nth(1).map(std::path::PathBuf::from).unwrap_or_else(bifrac::io::default_fixture_dir);
    bifrac::fixtures::write_files(&dir).expect("write fixtures");
    for (rel, _) in bifrac::fixtures::files() {
        println!("{}", dir.join(rel).display());
    }
}
