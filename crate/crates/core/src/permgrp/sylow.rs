//! Sylow p-subgroups of symmetric and alternating groups, built from the
//! base-p digits of the degree as products of iterated wreath products, and
//! the exhaustive verification that they are characterized by containing all
//! elementary abelian classes.

use rayon::prelude::*;
use serde::Serialize;

use super::classes::{classify_elem_abelian, is_conjugate_to_class, ElemAbelianClass, Flavor};
use super::elem_enum::enumerate_elem_abelian;
use super::group::PermGroup;
use super::perm::Perm;
use super::PermError;

/// Generators of the iterated wreath product C_p wr ... wr C_p (i factors)
/// on the block of size p^i at 0-based offset z: level t adds p^(t-1) modulo
/// p^t on the leading sub-block, and its conjugates under the higher levels
/// fill out the rest.
fn wreath_generators(p: u64, i: usize, z: usize, degree: usize) -> Vec<Perm> {
    let p = p as usize;
    let mut gens = Vec::with_capacity(i);
    for t in 1..=i {
        let span = p.pow(t as u32);
        let step = p.pow(t as u32 - 1);
        let imgs: Vec<u32> = (0..degree)
            .map(|x| {
                if x < z || x >= z + span {
                    x as u32
                } else {
                    (z + ((x - z) + step) % span) as u32
                }
            })
            .collect();
        gens.push(Perm::from_images(imgs).unwrap());
    }
    gens
}

/// v_p(n!) — the exponent of the Sylow p-subgroup order.
pub fn nu_factorial(n: usize, p: u64) -> u32 {
    let mut total = 0u32;
    let mut q = p as usize;
    while q <= n {
        total += (n / q) as u32;
        q *= p as usize;
    }
    total
}

/// A Sylow p-subgroup of the symmetric group of the given degree: for each
/// base-p digit d_i of n, d_i copies of the i-fold iterated wreath product
/// on consecutive blocks, ascending block size, leftover points fixed.
pub fn sylow_sym(n: usize, p: u64) -> PermGroup {
    let mut digits = Vec::new();
    let mut m = n;
    while m > 0 {
        digits.push(m % p as usize);
        m /= p as usize;
    }
    let mut gens = Vec::new();
    let mut z = 0usize;
    for (i, &d) in digits.iter().enumerate().skip(1) {
        let size = (p as usize).pow(i as u32);
        for _ in 0..d {
            gens.extend(wreath_generators(p, i, z, n));
            z += size;
        }
    }
    PermGroup::new(n, gens)
}

/// A Sylow p-subgroup of the alternating group: for odd p the symmetric
/// Sylow subgroup already consists of even permutations; for p = 2 take the
/// even part.
pub fn sylow_alt(n: usize, p: u64) -> Result<PermGroup, PermError> {
    let s = sylow_sym(n, p);
    if p != 2 {
        debug_assert!(s.is_even());
        return Ok(s);
    }
    s.even_subgroup()
}

/// The subgroup of the symmetric group on {1..kp} generated by the two grid
/// translations of {1..p^2} together with a Sylow p-subgroup of the
/// symmetric group on the tail {p^2+1..kp}.
pub fn grid_tail_group(p: u64, k: usize) -> PermGroup {
    let n = k * p as usize;
    let pp = (p * p) as usize;
    assert!(n >= pp, "need k >= p");
    let mut gens = vec![
        super::classes::grid_row_shift(p, n),
        super::classes::grid_col_shift(p, n),
    ];
    let tail = sylow_sym(n - pp, p);
    for g in tail.gens() {
        gens.push(g.embed_shifted(pp, n));
    }
    PermGroup::new(n, gens)
}

#[derive(Debug, Clone, Serialize)]
pub struct ForwardCheck {
    pub class: ElemAbelianClass,
    pub found_in_sylow: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConverseCheck {
    pub maximal_index: usize,
    pub maximal_order: u64,
    /// A class with no conjugate inside this maximal subgroup.
    pub witness_class: Option<ElemAbelianClass>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SylowVerifyReport {
    pub p: u64,
    pub n: usize,
    pub flavor: Flavor,
    pub sylow_order: u64,
    pub forward: Vec<ForwardCheck>,
    pub converse: Vec<ConverseCheck>,
    pub pass: bool,
}

/// Two-sided verification that containing every elementary abelian class
/// (up to conjugacy) characterizes Sylow p-subgroups:
/// (a) the Sylow subgroup contains a conjugate of every maximal class;
/// (b) every maximal subgroup of the Sylow subgroup misses some class.
/// Part (b) suffices for the characterization because every proper
/// p-subgroup lies inside a maximal subgroup of some Sylow subgroup, Sylow
/// subgroups are all conjugate, and every elementary abelian subgroup lies
/// inside some maximal class.
pub fn verify_sylow_characterization(
    p: u64,
    n: usize,
    flavor: Flavor,
) -> Result<SylowVerifyReport, PermError> {
    let sylow = match flavor {
        Flavor::Sym => sylow_sym(n, p),
        Flavor::Alt => sylow_alt(n, p)?,
    };
    let classes = classify_elem_abelian(p, n, flavor)?;

    let in_sylow = enumerate_elem_abelian(&sylow, p)?;
    let forward: Vec<ForwardCheck> = classes
        .iter()
        .map(|c| {
            let found = in_sylow
                .iter()
                .any(|s| is_conjugate_to_class(&s.group, c).unwrap_or(false));
            Ok(ForwardCheck { class: c.clone(), found_in_sylow: found })
        })
        .collect::<Result<_, PermError>>()?;

    let maxes = sylow.maximal_subgroups_p_group(p)?;
    let converse: Vec<ConverseCheck> = maxes
        .par_iter()
        .enumerate()
        .map(|(idx, m)| {
            let subs = enumerate_elem_abelian(m, p)?;
            let witness = classes.iter().find(|c| {
                !subs
                    .iter()
                    .any(|s| is_conjugate_to_class(&s.group, c).unwrap_or(false))
            });
            Ok(ConverseCheck {
                maximal_index: idx,
                maximal_order: m.order()?,
                witness_class: witness.cloned(),
            })
        })
        .collect::<Result<_, PermError>>()?;

    let pass = forward.iter().all(|f| f.found_in_sylow)
        && converse.iter().all(|c| c.witness_class.is_some());
    Ok(SylowVerifyReport {
        p,
        n,
        flavor,
        sylow_order: sylow.order()?,
        forward,
        converse,
        pass,
    })
}
