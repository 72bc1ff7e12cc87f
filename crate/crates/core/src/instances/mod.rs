//! Named lower-bound families, seeded random instances and the instance
//! document format.

mod format;
mod generators;
mod random;
mod spec;

pub use format::{parse_instance, write_instance};
pub use generators::{
    gen_bwc_multipartite, gen_bwcf_lower, gen_bwf_cliques, gen_maxcut_edge, gen_path4,
    gen_swc_pos, gen_swf_nostrong, parts_on_own_machine, parts_spread,
};
pub use random::{gen_random, random_pool, PoolLimits, RandomSpec};
pub use spec::InstanceSpec;
