// Semi-smoothness and niceness certificates, plus the best pure
// deviation ratio on the single-edge cut game.

use conflict_games::instances::{gen_maxcut_edge, RandomSpec};
use conflict_games::prelude::*;
use conflict_games::smoothness::{
    check_nice, check_semi_smooth, deviation_profile, max_rho_over_pure_sigmas, table1_for,
};

pub fn run_example() -> Result<()> {
    let inst = RandomSpec::new(5, 3, GameKind::SwC, frac(1, 2), 11).build()?;
    let table = table1_for(&inst)?;
    let oracle = Oracle::new(&inst);
    let semi = check_semi_smooth(&oracle, &table.params, &deviation_profile(&inst))?;
    println!(
        "SwC n=5 m=3: ({}, {})-semi-smooth {} (min slack {} at {})",
        table.params.lambda, table.params.mu, semi.holds, semi.slack, semi.worst_state
    );
    let nice = check_nice(&oracle, &table.params)?;
    println!("nice {} (min slack {})", nice.holds, nice.slack);

    let edge = gen_maxcut_edge()?;
    let (sigma, rho) = max_rho_over_pure_sigmas(&Oracle::new(&edge))?;
    println!("single edge: best pure sigma {sigma}, rho in [{}, {}]", rho.lo, rho.hi);
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
