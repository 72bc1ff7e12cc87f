use crate::error::{GameError, Result};
use crate::game::{CostWeights, GameKind, Instance, State};
use crate::rational::{int, zero, Rational};

fn need_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(GameError::InvalidParameter {
            param: "m",
            reason: format!("must be >= 2, got {m}"),
        });
    }
    Ok(())
}

fn need_positive(param: &'static str, v: &Rational) -> Result<()> {
    if *v <= zero() {
        return Err(GameError::InvalidParameter {
            param,
            reason: format!("must be > 0, got {v}"),
        });
    }
    Ok(())
}

/// `m` parts of `m` players each; player `i` belongs to part `i / m`.
type Edges = Vec<(usize, usize)>;

fn parts(m: usize) -> (Edges, Edges) {
    let n = m * m;
    let mut inside = Vec::new();
    let mut across = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if a / m == b / m {
                inside.push((a, b));
            } else {
                across.push((a, b));
            }
        }
    }
    (inside, across)
}

/// Complete m-partite conflict graph with m parts of size m.
pub fn gen_bwc_multipartite(m: usize) -> Result<Instance> {
    need_m(m)?;
    let (_, across) = parts(m);
    Instance::builder(GameKind::BwC, m * m, m).conflicts(across).build()
}

/// m disjoint friendship cliques of size m.
pub fn gen_bwf_cliques(m: usize) -> Result<Instance> {
    need_m(m)?;
    let (inside, _) = parts(m);
    Instance::builder(GameKind::BwF, m * m, m).friendships(inside).build()
}

/// Friends inside each of the m parts, conflicts across parts.
pub fn gen_bwcf_lower(m: usize, weights: CostWeights) -> Result<Instance> {
    need_m(m)?;
    weights.validate().map_err(|e| GameError::InvalidParameter {
        param: "weights",
        reason: e.to_string(),
    })?;
    let (inside, across) = parts(m);
    Instance::builder(GameKind::BwCF, m * m, m)
        .friendships(inside)
        .conflicts(across)
        .weights(weights)
        .build()
}

/// Path on four nodes, two machines.
pub fn gen_path4() -> Result<Instance> {
    Instance::builder(GameKind::BwC, 4, 2)
        .conflicts([(0, 1), (1, 2), (2, 3)])
        .build()
}

/// n = m, conflict clique, machine 1 worth m^2 - m + eps and the rest 0.
pub fn gen_swc_pos(m: usize, eps: &Rational) -> Result<Instance> {
    need_m(m)?;
    need_positive("eps", eps)?;
    let mut values = vec![zero(); m];
    values[0] = int((m * m - m) as i64) + eps;
    let clique = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b)));
    Instance::builder(GameKind::SwC, m, m)
        .conflicts(clique)
        .machine_values(values)
        .build()
}

/// Sharing with Friendship instance without a strong equilibrium.
pub fn gen_swf_nostrong(eps: &Rational) -> Result<Instance> {
    need_positive("eps", eps)?;
    Instance::builder(GameKind::SwF, 4, 2)
        .friendships([(0, 1), (2, 3)])
        .machine_values(vec![int(2) + eps, int(4) + eps * int(3)])
        .build()
}

/// Two players joined by one edge.
pub fn gen_maxcut_edge() -> Result<Instance> {
    Instance::builder(GameKind::MaxCut, 2, 2).conflict(0, 1).build()
}

/// Part k on machine k: the optimum of the m-partite families.
pub fn parts_on_own_machine(m: usize) -> State {
    State::new((0..m * m).map(|i| i / m).collect())
}

/// Each part spread over all machines: the worst pure equilibrium of the
/// m-partite conflict family.
pub fn parts_spread(m: usize) -> State {
    State::new((0..m * m).map(|i| i % m).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::social_value;
    use crate::rational::frac;

    #[test]
    fn multipartite_shapes() {
        let two = gen_bwc_multipartite(2).unwrap();
        assert_eq!((two.n(), two.conflict_edges().len()), (4, 4));
        let three = gen_bwc_multipartite(3).unwrap();
        assert_eq!((three.n(), three.conflict_edges().len()), (9, 27));
        assert!(gen_bwc_multipartite(1).is_err());
    }

    #[test]
    fn cliques_shapes() {
        assert_eq!(gen_bwf_cliques(2).unwrap().friendship_edges().len(), 2);
        assert_eq!(gen_bwf_cliques(3).unwrap().friendship_edges().len(), 9);
    }

    #[test]
    fn bwcf_lower_optimum_is_alpha_n2_over_m() {
        for m in 2..=3 {
            let w = CostWeights::new(frac(3, 2), int(2), frac(1, 2));
            let inst = gen_bwcf_lower(m, w.clone()).unwrap();
            if m == 2 {
                assert_eq!(inst.friendship_edges().len(), 2);
                assert_eq!(inst.conflict_edges().len(), 4);
            }
            let n = (m * m) as i64;
            let expect = &w.alpha * frac(n * n, m as i64);
            assert_eq!(social_value(&inst, &parts_on_own_machine(m)).unwrap(), expect);
        }
        assert!(gen_bwcf_lower(2, CostWeights::new(int(0), int(1), int(1))).is_err());
    }

    #[test]
    fn sharing_examples() {
        let pos = gen_swc_pos(3, &frac(1, 10)).unwrap();
        assert_eq!(pos.machine_values().unwrap(), &[frac(61, 10), int(0), int(0)]);
        assert!(gen_swc_pos(3, &int(0)).is_err());
        let ns = gen_swf_nostrong(&frac(1, 10)).unwrap();
        assert_eq!(ns.machine_values().unwrap(), &[frac(21, 10), frac(43, 10)]);
    }

    #[test]
    fn path_and_edge() {
        let p = gen_path4().unwrap();
        assert_eq!((p.n(), p.m(), p.conflict_edges().len()), (4, 2, 3));
        assert_eq!(social_value(&p, &State::new(vec![0, 1, 0, 1])).unwrap(), int(8));
        assert_eq!(social_value(&p, &State::new(vec![0, 1, 1, 0])).unwrap(), int(10));
        let e = gen_maxcut_edge().unwrap();
        assert_eq!(social_value(&e, &State::new(vec![0, 1])).unwrap(), int(2));
    }
}
