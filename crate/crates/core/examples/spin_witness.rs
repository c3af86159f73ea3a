//! Finds a `±1` vector for a spin representation and builds the `±i`
//! torus witness.
//!
//!     cargo run --example spin_witness -- B 5

use lie_meet::cli::parse_type;
use lie_meet::rootsys::RootSystem;
use lie_meet::witness::{pm_i_torus_witness, pm_one_vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (t, r) = match args.as_slice() {
        [t, r] => (parse_type(t)?, r.parse()?),
        [] => (parse_type("B")?, 4),
        _ => return Err("usage: spin_witness TYPE RANK".into()),
    };
    let rs = RootSystem::build(t, r)?;
    let ws = rs.weight_system(&rs.fundamental_weight(r)?)?;
    let v = pm_one_vector(&ws)?;
    let w = pm_i_torus_witness(&ws, &v)?;
    let v: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    println!("{}: {} weights", rs.name(), ws.len());
    println!("v = ({})", v.join(", "));
    println!("relation lattice rank {}", w.relations.len());
    println!("checks: {:?}  verified: {}", w.checks, w.verified());
    Ok(())
}
