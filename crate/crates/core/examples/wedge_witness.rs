//! Builds the witness for `∧^j C^m` and prints its diagonal entries in
//! `Q[t]/(t^m - j/(j-m))`.
//!
//!     cargo run --example wedge_witness -- 4 2

use lie_meet::witness::{slm_wedge_witness, Diagonal};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse())
        .collect::<Result<_, _>>()?;
    let (m, j) = match args.as_slice() {
        [m, j] => (*m, *j),
        [] => (4, 2),
        _ => return Err("usage: wedge_witness M J".into()),
    };
    let w = slm_wedge_witness(m, j)?;
    let Diagonal::Quotient { group, algebra } = &w.diag else {
        unreachable!()
    };
    println!("{}", w.case);
    for (k, tuple) in w
        .wedge
        .as_ref()
        .expect("wedge data")
        .basis
        .iter()
        .enumerate()
    {
        println!("{tuple:?}  ρ(g) = {}  ρ∗(x) = {}", group[k], algebra[k]);
    }
    println!("checks: {:?}  verified: {}", w.checks, w.verified());
    Ok(())
}
