//! The Laurent superpotential of a quiver flag variety, its constraints and
//! the critical relations after solving for one arrow per vertex.

use qflag::mirror::build_superpotential;
use qflag::{Mode, Quiver, RewriteSystem};

fn main() -> qflag::Result<()> {
    let quiver = Quiver::flag(4, &[2, 1])?;
    let mirror = build_superpotential(&quiver)?;
    print!("{}", mirror.emit());

    let system = RewriteSystem::new(&quiver, Mode::Quantum)?;
    for (at, cleared) in mirror.cleared_constraints() {
        let image = mirror.to_toric(&cleared, &system)?;
        println!(
            "constraint at {}.{} reduces to zero in the toric presentation: {}",
            at.vertex,
            at.copy,
            system.normal_form(&image).is_zero()
        );
    }
    Ok(())
}
