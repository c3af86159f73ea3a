//! Classifies a few representations and prints the verdicts.

use lie_meet::cli::{classify, WeightSpec};
use lie_meet::rootsys::TypeLabel;

fn main() -> lie_meet::Result<()> {
    let cases = [
        (TypeLabel::A, 3, "w2"),
        (TypeLabel::B, 3, "w3"),
        (TypeLabel::C, 3, "w3"),
        (TypeLabel::A, 1, "2"),
        (TypeLabel::G, 2, "w1"),
        (TypeLabel::E, 6, "w1"),
    ];
    for (t, r, w) in cases {
        let v = classify(t, r, &w.parse::<WeightSpec>()?)?;
        println!(
            "{t}{r} {w:<4} minuscule={:<5} nonempty={:<5} verified={}",
            v.minuscule,
            v.intersection_nonempty,
            v.certificate.verified()
        );
    }
    Ok(())
}
