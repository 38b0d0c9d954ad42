//! Driving computations from JSON configs, as the command-line tool does.
//! Pass config paths as arguments, or run the bundled ones.

use cyclic_sayd::config::parse_config;
use cyclic_sayd::report::Report;

const BUNDLED: [&str; 3] = [
    include_str!("configs/kz2_vect.json"),
    include_str!("configs/functions_z2_rep.json"),
    include_str!("configs/dual_numbers_explicit.json"),
];

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let texts: Vec<String> = if args.is_empty() {
        BUNDLED.iter().map(|s| s.to_string()).collect()
    } else {
        args.iter().map(|p| std::fs::read_to_string(p).expect("readable config")).collect()
    };
    let mut computations = Vec::new();
    for text in &texts {
        match parse_config(text).and_then(|c| c.build()) {
            Ok(comp) => computations.push(comp),
            Err(e) => eprintln!("rejected: {e}"),
        }
    }
    let report = Report::timed(|| (computations.iter().map(|c| c.run()).collect(), vec![]));
    print!("{}", report.to_text());
}
