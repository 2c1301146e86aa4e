//! Schubert calculus on Gr(4, 2): the classical table and the small
//! quantum corrections.

use qflag::{ClassicalRing, Partition, QuantumClass, QuantumRing, Quiver};

fn main() -> qflag::Result<()> {
    let quiver = Quiver::grassmannian(4, 2)?;
    let classical = ClassicalRing::new(quiver.clone());
    let quantum = QuantumRing::new(quiver)?;

    let s1 = classical.schur(1, Partition::row(1))?;
    let mut power = classical.one();
    for k in 1..=4 {
        power = classical.multiply(&power, &s1)?;
        println!("s1[1]^{k} = {power}");
    }

    let basis = quantum.basis();
    println!("\nquantum products on Gr(4,2):");
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i..] {
            let product = quantum.multiply_basis(a, b)?;
            if !product.is_classical() {
                let a = QuantumClass::basis(a.clone());
                let b = QuantumClass::basis(b.clone());
                println!("({a}) * ({b}) = {product}");
            }
        }
    }
    Ok(())
}
