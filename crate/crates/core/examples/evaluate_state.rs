// Per-player values, social value and potential of a single assignment.

use conflict_games::prelude::*;

pub fn run_example() -> Result<()> {
    let inst = Instance::builder(GameKind::BwCF, 3, 2)
        .conflicts([(0, 1), (1, 2)])
        .friendship(0, 2)
        .weights(CostWeights::new(int(1), frac(1, 2), int(2)))
        .build()?;
    let s = State::for_instance(&inst, vec![0, 1, 0])?;
    let ev = Evaluator::new(&inst, &s);
    for i in 0..inst.n() {
        let (k, gain) = ev.best_response(i);
        println!("player {}: cost {} best machine {} gain {}", i + 1, ev.value(i), k + 1, gain);
    }
    println!("social cost {}, potential {}", ev.social(), ev.potential());
    println!("pure NE: {}", ev.is_pure_nash());
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
