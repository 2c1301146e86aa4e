//! Integrals over a quiver flag variety computed on its abelianization, and
//! the resulting Poincare pairing.

use qflag::oracle::{pairing_matrix, rank};
use qflag::{ClassicalRing, CohClass, Mode, Quiver, RewriteSystem};

fn main() -> qflag::Result<()> {
    let quiver = Quiver::grassmannian(5, 2)?;
    let ring = ClassicalRing::new(quiver.clone());
    let system = RewriteSystem::new(&quiver, Mode::Classical)?;
    let basis = ring.basis();

    let point = CohClass::basis(basis.last().unwrap().clone());
    println!("integral of the point class: {}", system.martin_integrate(&point)?);

    let s1 = CohClass::basis(basis[1].clone());
    let mut power = ring.one();
    for _ in 0..quiver.dimension() {
        power = ring.multiply(&power, &s1)?;
    }
    println!("degree of Gr(5,2): {}", system.martin_integrate(&power)?);

    let matrix = pairing_matrix(&ring, &system)?;
    println!("pairing matrix has rank {} of {}", rank(&matrix), basis.len());
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("  {}", cells.join(" "));
    }
    Ok(())
}
