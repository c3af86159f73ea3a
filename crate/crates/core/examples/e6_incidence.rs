//! Incidence graph of the 27 weights of E6 and the triple case analysis.

use lie_meet::obstruction::{e6_case_checks, e6_incidence, Facts};
use lie_meet::rootsys::{RootSystem, TypeLabel};

fn main() -> lie_meet::Result<()> {
    let rs = RootSystem::build(TypeLabel::E, 6)?;
    let ws = rs.weight_system(&rs.fundamental_weight(1)?)?;
    let g = e6_incidence(&ws)?;
    println!(
        "incident pairs {}  skew pairs {}",
        g.incident_pairs.len(),
        g.skew_pairs.len()
    );
    println!(
        "degrees {:?}",
        (0..g.len()).map(|i| g.degree(i)).collect::<Vec<_>>()
    );

    let cert = e6_case_checks(&g);
    let Facts::E6CaseAnalysis(f) = &cert.facts else {
        unreachable!()
    };
    println!("triples by incident pairs {:?}", f.case_counts);
    for (p, profiles) in &f.count_profiles {
        println!("  p={p} counts {profiles:?}");
    }
    println!("difference rank {}", f.difference_rank);
    println!("2_21 facets {:?}", f.hull.histogram);
    println!("verified {}", cert.verified);
    Ok(())
}
