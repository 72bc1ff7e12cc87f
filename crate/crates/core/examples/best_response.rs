// A best-response trace from the worst state, and the convergence checks.

use conflict_games::dynamics::{check_convergence_theorems, run_br};
use conflict_games::instances::gen_swc_pos;
use conflict_games::prelude::*;

pub fn run_example() -> Result<()> {
    let inst = gen_swc_pos(3, &frac(1, 10))?;
    let oracle = Oracle::new(&inst);
    let (worst, _) = oracle.pessimum()?;
    let trace = run_br(&inst, &worst, 1000)?;
    let mut csv = Vec::new();
    trace.write_csv(&mut csv)?;
    print!("{}", String::from_utf8_lossy(&csv));
    for row in check_convergence_theorems(&oracle, &frac(1, 10), 5, 1)? {
        println!("{row}");
    }
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
