// Worst coarse correlated equilibrium by exact linear programming.

use conflict_games::instances::gen_bwc_multipartite;
use conflict_games::prelude::*;
use conflict_games::smoothness::table1_for;

pub fn run_example() -> Result<()> {
    let inst = gen_bwc_multipartite(2)?;
    let oracle = Oracle::new(&inst);
    let sol = oracle.worst_cce()?;
    let opt = oracle.optimum()?.1;
    println!("worst CCE cost {} against optimum {}", sol.value, opt);
    println!("ratio {} table bound {}", &sol.value / &opt, table1_for(&inst)?.pota);
    for (s, q) in &sol.distribution {
        println!("  {s} with probability {q}");
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
