// Writing an instance document and reading it back.

use conflict_games::instances::{gen_random, parse_instance, write_instance};
use conflict_games::prelude::*;

pub fn run_example() -> Result<()> {
    let inst = gen_random(4, 2, GameKind::SwF, &frac(1, 2), 3)?;
    let text = write_instance(&inst);
    print!("{text}");
    let back = parse_instance(&text)?;
    assert_eq!(back, inst);
    println!("round trip ok: {} players, {} machines", back.n(), back.m());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
