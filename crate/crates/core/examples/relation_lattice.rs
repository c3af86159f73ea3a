//! Prints the Hermite basis of the integer relations among the weights of
//! a minuscule representation.
//!
//!     cargo run --example relation_lattice -- C 3 1

use lie_meet::cli::parse_type;
use lie_meet::rootsys::RootSystem;
use lie_meet::witness::relation_lattice;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (t, r, i) = match args.as_slice() {
        [t, r, i] => (parse_type(t)?, r.parse()?, i.parse()?),
        [] => (parse_type("C")?, 3, 1),
        _ => return Err("usage: relation_lattice TYPE RANK INDEX".into()),
    };
    let rs = RootSystem::build(t, r)?;
    let ws = rs.weight_system(&rs.fundamental_weight(i)?)?;
    for (k, w) in ws.weights.iter().enumerate() {
        println!("w{k} = {w}");
    }
    for rel in relation_lattice(&ws.weights)? {
        println!("{rel:?}");
    }
    Ok(())
}
