//! Rank of a polynomial matrix over the rational function field
//! F_p(a_1,..,a_n): randomized evaluation at points of an extension field
//! large enough for polynomial identity testing, certified on small matrices
//! by fraction-free elimination over the polynomial ring.

use rayon::prelude::*;

use super::field::{ExtField, Field};
use super::mpoly::MatPoly;
use crate::rng::sub_rng;

/// Above this dimension the certification pass is skipped: elimination over
/// the polynomial ring blows up combinatorially.
pub const CERTIFY_DIM_CAP: usize = 64;

/// Working term budget for the certification pass; exceeding it falls back
/// to the randomized result flagged uncertified.
pub const CERTIFY_TERM_BUDGET: usize = 2_000_000;

pub const DEFAULT_TRIALS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericRank {
    pub rank: usize,
    pub certified: bool,
}

/// Rank of `m` over F_p(a_1,..,a_n).
///
/// The rank at any evaluation point is at most the generic rank, and equals
/// it unless the point is a zero of some fixed nonzero maximal minor, which
/// for an entry degree bound d happens with probability at most
/// d*min(rows,cols)/|F| per trial. The evaluation field F_{p^e} is chosen
/// with p^e >= 4*d*min(rows,cols) so each trial fails with probability at
/// most 1/4; the maximum over `trials` independent evaluations is reported.
pub fn generic_rank(m: &MatPoly, trials: usize, seed: u64) -> GenericRank {
    let trials = trials.max(1);
    let d = m.max_degree();
    let minrc = m.rows().min(m.cols());
    if minrc == 0 {
        return GenericRank { rank: 0, certified: true };
    }
    if d == 0 {
        // constant matrix: its rank over F_p is the generic rank
        let f = Field::Prime(m.base());
        let rank = m.eval(&f, &vec![0; m.nvars()]).rank();
        return GenericRank { rank, certified: true };
    }

    let p = m.base().p();
    let bound = 4 * (d as u64) * (minrc as u64);
    let mut e = 1usize;
    let mut q = p;
    while q < bound {
        e += 1;
        q *= p;
    }
    let ext = Field::Ext(ExtField::new(p, e).expect("evaluation field fits in u64"));

    let rand_rank = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = sub_rng(seed, t as u64);
            let point: Vec<u64> = (0..m.nvars()).map(|_| ext.rand_elem(&mut rng)).collect();
            m.eval(&ext, &point).rank()
        })
        .max()
        .unwrap_or(0);

    if minrc <= CERTIFY_DIM_CAP {
        if let Some(exact) = m.bareiss_rank(CERTIFY_TERM_BUDGET) {
            assert_eq!(
                exact, rand_rank,
                "internal error: certified generic rank {} disagrees with randomized rank {}",
                exact, rand_rank
            );
            return GenericRank { rank: exact, certified: true };
        }
    }
    GenericRank { rank: rand_rank, certified: false }
}
