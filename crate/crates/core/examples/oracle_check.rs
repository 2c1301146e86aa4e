//! Checks every quantum product on a quiver flag variety against the
//! rewrite system of its abelianization.

use qflag::{Mode, QuantumClass, QuantumRing, Quiver, RewriteSystem};

fn main() -> qflag::Result<()> {
    let quiver = Quiver::new(&[2, 1, 1], &[(0, 1, 4), (1, 2, 1), (1, 3, 1)])?;
    let ring = QuantumRing::new(quiver.clone())?;
    let system = RewriteSystem::new(&quiver, Mode::Quantum)?;
    println!("{} toric variables", system.x_count());
    for (i, j) in system.variables().into_iter().take(2) {
        println!("generator at x{i}{j}: {} terms", system.generator(i, j).len());
    }

    let basis = ring.basis();
    let (mut checked, mut failed) = (0, 0);
    for (k, a) in basis.iter().enumerate() {
        for b in &basis[k..] {
            let product = ring.multiply_basis(a, b)?;
            let a = QuantumClass::basis(a.clone());
            let b = QuantumClass::basis(b.clone());
            checked += 1;
            if !system.verify_product(&a, &b, &product)? {
                failed += 1;
            }
        }
    }
    println!("{checked} products checked, {failed} mismatches");
    Ok(())
}
