// Exhaustive equilibrium report for the four-player path.

use conflict_games::instances::gen_path4;
use conflict_games::prelude::*;

pub fn run_example() -> Result<()> {
    let inst = gen_path4()?;
    let rep = Oracle::new(&inst).report()?;
    println!("optimum {} at {}", rep.optimum.1, rep.optimum.0);
    println!("{} pure NE, worst {} at {}", rep.pure_ne.len(), rep.worst_ne.1, rep.worst_ne.0);
    if let Some(strong) = &rep.strong_ne {
        for (s, v) in strong {
            println!("strong NE {s} cost {v}");
        }
    }
    println!("PoA {} PoS {} strong PoA {}", rep.poa, rep.pos, rep.strong_poa);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
