//! Removing rim hooks from a partition, the combinatorial step behind every
//! reduction in the rings.

use qflag::{Partition, SignedPartition};

fn main() -> qflag::Result<()> {
    let lambda = Partition::new(vec![4, 2, 2])?;
    println!("lambda = {lambda}, size {}", lambda.size());

    for n in 1..=6 {
        match lambda.remove_rim_hook(n)? {
            SignedPartition::Zero => println!("{n}-hook: vanishes"),
            SignedPartition::Term { sign, partition } => {
                let h = lambda.rim_hook(n).map(|hook| hook.height()).unwrap_or(0);
                println!("{n}-hook: {sign:+} {partition} (height {h})");
            }
        }
    }

    println!("transpose: {}", lambda.transpose());
    println!("partitions in a 2 x 3 box: {}", Partition::in_box(2, 3).len());
    Ok(())
}
