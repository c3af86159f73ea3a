//! Facets of the Gosset polytopes `2_21` and `3_21`.

use lie_meet::obstruction::hull_facets;
use lie_meet::rootsys::{RootSystem, TypeLabel};

fn main() -> lie_meet::Result<()> {
    for (rank, i) in [(6, 1), (7, 7)] {
        let rs = RootSystem::build(TypeLabel::E, rank)?;
        let ws = rs.weight_system(&rs.fundamental_weight(i)?)?;
        let poly = hull_facets(&ws.rows())?;
        let check = poly.verify();
        println!(
            "{}: {} vertices, dim {}, {} facets {:?}, {} ridges, verified {}",
            rs.name(),
            poly.vertices.len(),
            poly.dim,
            poly.facets.len(),
            poly.histogram(),
            check.ridge_count,
            check.all()
        );
    }
    Ok(())
}
