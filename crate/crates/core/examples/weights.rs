//! Prints the weights of a minuscule representation, one per line, in the
//! point-file format read by `lie-meet facets`.
//!
//!     cargo run --example weights -- E 6 1 > e6.txt

use lie_meet::cli::parse_type;
use lie_meet::rootsys::RootSystem;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let [t, r, i] = args.as_slice() else {
        return Err("usage: weights TYPE RANK INDEX".into());
    };
    let rs = RootSystem::build(parse_type(t)?, r.parse()?)?;
    let ws = rs.weight_system(&rs.fundamental_weight(i.parse()?)?)?;
    println!("# {} ϖ{i}: {} weights", rs.name(), ws.len());
    for w in &ws.weights {
        let coords: Vec<String> = w.coords().iter().map(|x| x.to_string()).collect();
        println!("{}", coords.join(" "));
    }
    Ok(())
}
