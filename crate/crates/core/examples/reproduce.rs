// The named-example battery and a small slice of the bound table.

use conflict_games::report::{render_text, reproduce_named_examples, reproduce_table1, TableConfig};
use conflict_games::Result;

pub fn run_example() -> Result<()> {
    let mut rows = reproduce_named_examples(7)?;
    rows.extend(reproduce_table1(&TableConfig {
        max_n: 4,
        max_m: 2,
        trials: 3,
        ..TableConfig::default()
    })?);
    print!("{}", render_text(&rows));
    Ok(())
}

fn main() -> Result<()> {
    run_example()
}
