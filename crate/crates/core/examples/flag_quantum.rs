//! Quantum rim-hook reduction on the flag variety Fl(4; 2, 1).

use qflag::expr::parse;
use qflag::{ClassicalRing, QuantumRing, Quiver};

fn main() -> qflag::Result<()> {
    let quiver = Quiver::flag(4, &[2, 1])?;
    let classical = ClassicalRing::new(quiver.clone());
    let quantum = QuantumRing::new(quiver.clone())?;
    println!("dimension {}, {} basis classes", quiver.dimension(), quiver.basis_count());
    for i in 1..=quiver.rho() {
        println!("deg q{i} = {}", quiver.q_degree(i));
    }

    for src in ["s1[3]", "s2[2]", "s1[2] s1[2]", "s1[2,2] s2[1]", "s1[1] s1[2,2] s2[1]"] {
        let raw = parse(src)?.to_raw(&quiver)?;
        println!("{src:>22}  classical {}", classical.reduce(&raw)?);
        println!("{:>22}  quantum   {}", "", quantum.reduce(&raw)?);
    }
    Ok(())
}
