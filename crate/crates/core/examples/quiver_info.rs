//! Reads a quiver description and prints its invariants and Schubert basis.

use qflag::expr::render;
use qflag::{PrintOrder, QuantumClass};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = "vertices = 4\ndims = [2, 1, 1, 1]\narrows = [[0, 1, 4], [1, 2, 1], [1, 3, 1], [1, 4, 1]]\n";
    let quiver = qflag::cli::parse_quiver(text).map_err(|e| format!("{e:?}"))?;

    for i in 1..=quiver.rho() {
        let v = quiver.vertex_ranks(i);
        println!("vertex {i}: rank {} s {} s' {}", quiver.rank(i), v.incoming, v.outgoing);
    }
    println!("fano: {}", quiver.is_fano());
    println!("dimension: {}", quiver.dimension());

    let ring = qflag::QuantumRing::new(quiver)?;
    let basis = ring.basis();
    println!("basis ({} classes):", basis.len());
    for tuple in basis.iter().take(12) {
        println!("  {}", render(&QuantumClass::basis(tuple.clone()), PrintOrder::Degree));
    }
    Ok(())
}
