//! Maximal elementary abelian p-subgroup classes of symmetric and
//! alternating groups: the block constructions, the composition-indexed
//! classification, and the orbit-profile conjugacy test.

use serde::Serialize;

use super::group::{subgroup_from_elements, PermGroup};
use super::perm::Perm;
use super::PermError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Flavor {
    Sym,
    Alt,
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flavor::Sym => write!(f, "sym"),
            Flavor::Alt => write!(f, "alt"),
        }
    }
}

/// A conjugacy class of maximal elementary abelian p-subgroups, named by the
/// composition (m_1,..,m_r): m_i orbits of size p^i. Trailing zeros are
/// trimmed, so m_r != 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElemAbelianClass {
    pub p: u64,
    pub ms: Vec<usize>,
    pub flavor: Flavor,
}

impl ElemAbelianClass {
    pub fn new(p: u64, ms: Vec<usize>, flavor: Flavor) -> Result<Self, PermError> {
        let mut ms = ms;
        while ms.last() == Some(&0) {
            ms.pop();
        }
        if ms.is_empty() {
            return Err(PermError::EmptyComposition);
        }
        if flavor == Flavor::Alt {
            if p != 2 {
                return Err(PermError::AltReducesToSym { p });
            }
            if ms[0] == 2 {
                return Err(PermError::AltCompositionExcluded);
            }
        }
        Ok(ElemAbelianClass { p, ms, flavor })
    }

    /// Points covered by the blocks: sum of m_i * p^i.
    pub fn support(&self) -> usize {
        self.ms
            .iter()
            .enumerate()
            .map(|(i, &m)| m * (self.p as usize).pow(i as u32 + 1))
            .sum()
    }

    /// Group order of the class representative.
    pub fn group_order(&self) -> u64 {
        let rank: u32 = match self.flavor {
            Flavor::Sym => self.ms.iter().enumerate().map(|(i, &m)| (i as u32 + 1) * m as u32).sum(),
            Flavor::Alt => {
                let sym_rank: u32 =
                    self.ms.iter().enumerate().map(|(i, &m)| (i as u32 + 1) * m as u32).sum();
                // the even part drops one transposition generator
                if self.ms[0] >= 1 {
                    sym_rank - 1
                } else {
                    sym_rank
                }
            }
        };
        self.p.pow(rank)
    }

    pub fn label(&self) -> String {
        let inner: Vec<String> = self.ms.iter().map(|m| m.to_string()).collect();
        let head = match self.flavor {
            Flavor::Sym => "E",
            Flavor::Alt => "F",
        };
        format!("{}({})", head, inner.join(","))
    }
}

/// Block of size p^i at 0-based offset z, acting as the translation action
/// of F_p^i on itself: generator t adds the t-th standard basis vector, that
/// is, increments base-p digit t of the block-local coordinate.
fn block_generators(p: u64, i: usize, z: usize, degree: usize) -> Vec<Perm> {
    let size = (p as usize).pow(i as u32);
    let mut gens = Vec::with_capacity(i);
    for t in 0..i {
        let stride = (p as usize).pow(t as u32);
        let imgs: Vec<u32> = (0..degree)
            .map(|x| {
                if x < z || x >= z + size {
                    return x as u32;
                }
                let c = x - z;
                let digit = (c / stride) % p as usize;
                let bumped = if digit + 1 == p as usize {
                    c - digit * stride
                } else {
                    c + stride
                };
                (z + bumped) as u32
            })
            .collect();
        gens.push(Perm::from_images(imgs).expect("translation is a bijection"));
    }
    gens
}

/// The elementary abelian subgroup E(m_1,..,m_r) of the symmetric group of
/// the given degree: m_i regular blocks of size p^i on an initial segment,
/// smaller blocks first.
pub fn construct_e(p: u64, ms: &[usize], degree: usize) -> Result<PermGroup, PermError> {
    let support: usize =
        ms.iter().enumerate().map(|(i, &m)| m * (p as usize).pow(i as u32 + 1)).sum();
    if support > degree {
        return Err(PermError::CompositionTooLarge { support, degree });
    }
    let mut gens = Vec::new();
    let mut z = 0usize;
    for (idx, &m) in ms.iter().enumerate() {
        let i = idx + 1;
        let size = (p as usize).pow(i as u32);
        for _ in 0..m {
            gens.extend(block_generators(p, i, z, degree));
            z += size;
        }
    }
    Ok(PermGroup::new(degree, gens))
}

/// F(m_1,..,m_r) = even part of E(m_1,..,m_r), for p = 2. Compositions with
/// m_1 = 2 are rejected: the even part of E(2, m_2, ...) is properly
/// contained in the class F(0, m_2 + 1, ...), so it names no maximal class.
pub fn construct_f(p: u64, ms: &[usize], degree: usize) -> Result<PermGroup, PermError> {
    if p != 2 {
        return Err(PermError::AltReducesToSym { p });
    }
    if ms.first() == Some(&2) {
        return Err(PermError::AltCompositionExcluded);
    }
    let e = construct_e(p, ms, degree)?;
    // generators of odd sign are exactly the m_1 transpositions; pair them
    let (odd, even): (Vec<Perm>, Vec<Perm>) =
        e.gens().iter().cloned().partition(|g| !g.is_even());
    if odd.is_empty() {
        return Ok(e);
    }
    let mut gens = even;
    let first = &odd[0];
    for t in &odd[1..] {
        gens.push(t.mul(first));
    }
    Ok(PermGroup::new(degree, gens))
}

/// All classes of maximal elementary abelian p-subgroups.
///
/// Sym: compositions (m_1,..,m_r) with sum m_i p^i = p * floor(n/p); the
/// remainder of n contributes fixed points. Alt: p = 2 and n even, with
/// sum = n and m_1 != 2. For odd p the alternating case coincides with the
/// symmetric one and is reported as such via an error.
pub fn classify_elem_abelian(
    p: u64,
    n: usize,
    flavor: Flavor,
) -> Result<Vec<ElemAbelianClass>, PermError> {
    match flavor {
        Flavor::Sym => {
            let target = (p as usize) * (n / p as usize);
            let mut out = Vec::new();
            compositions(p as usize, target, &mut Vec::new(), &mut out);
            out.sort_by(|a, b| b.cmp(a));
            out.into_iter().map(|ms| ElemAbelianClass::new(p, ms, Flavor::Sym)).collect()
        }
        Flavor::Alt => {
            if p != 2 {
                return Err(PermError::AltReducesToSym { p });
            }
            if n % 2 != 0 {
                return Err(PermError::AltNeedsEvenDegree { n });
            }
            let mut out = Vec::new();
            compositions(2, n, &mut Vec::new(), &mut out);
            out.sort_by(|a, b| b.cmp(a));
            out.retain(|ms| ms.first() != Some(&2));
            out.into_iter().map(|ms| ElemAbelianClass::new(p, ms, Flavor::Alt)).collect()
        }
    }
}

/// All (m_1, m_2, ...) with sum m_i p^i = target, trailing zeros trimmed.
fn compositions(p: usize, target: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if target == 0 {
        let mut ms = prefix.clone();
        while ms.last() == Some(&0) {
            ms.pop();
        }
        if !ms.is_empty() {
            out.push(ms);
        }
        return;
    }
    let part = p.pow(prefix.len() as u32 + 1);
    if part > target {
        return;
    }
    for m in 0..=(target / part) {
        prefix.push(m);
        compositions(p, target - m * part, prefix, out);
        prefix.pop();
    }
}

/// Is the elementary abelian subgroup conjugate, inside the full symmetric
/// group on its degree, to the class representative? For Sym classes the
/// orbit profile is a complete invariant: m_i regular orbits of size p^i and
/// group order equal to the product of the orbit sizes pin the group down to
/// a product of regular blocks. For Alt classes the same holds with the
/// size-2 orbits contributing an even-weight hyperplane, which the order
/// condition detects.
pub fn is_conjugate_to_class(e: &PermGroup, class: &ElemAbelianClass) -> Result<bool, PermError> {
    if !e.is_elementary_abelian(class.p) {
        return Err(PermError::NotElementaryAbelian);
    }
    match class.flavor {
        Flavor::Sym => sym_profile_matches(e, class.p, &class.ms),
        Flavor::Alt => {
            if !e.is_even() {
                return Ok(false);
            }
            let m1 = class.ms[0];
            if m1 <= 1 {
                // F(0, m_2, ..) = E(0, m_2, ..); F(1, m_2, ..) coincides with
                // E(0, m_2, ..) plus two extra fixed points
                let mut ms = class.ms.clone();
                ms[0] = 0;
                sym_profile_matches(e, class.p, &ms)
            } else {
                let (profile, _) = e.orbits()?;
                if !profile.regular.iter().all(|&r| r) {
                    return Ok(false);
                }
                for (idx, &m) in class.ms.iter().enumerate() {
                    let size = (class.p as usize).pow(idx as u32 + 1);
                    if profile.orbits_of_size(size) != m {
                        return Ok(false);
                    }
                }
                let nontrivial: usize =
                    profile.sizes.iter().filter(|&&s| s > 1).count();
                let expected_orbits: usize = class.ms.iter().sum();
                if nontrivial != expected_orbits {
                    return Ok(false);
                }
                Ok(e.order()? == class.group_order())
            }
        }
    }
}

fn sym_profile_matches(e: &PermGroup, p: u64, ms: &[usize]) -> Result<bool, PermError> {
    let (profile, _) = e.orbits()?;
    let mut expected_product = 1u64;
    for (idx, &m) in ms.iter().enumerate() {
        let size = (p as usize).pow(idx as u32 + 1);
        if profile.orbits_of_size(size) != m || profile.regular_orbits_of_size(size) != m {
            return Ok(false);
        }
        expected_product *= (size as u64).pow(m as u32);
    }
    let nontrivial = profile.sizes.iter().filter(|&&s| s > 1).count();
    if nontrivial != ms.iter().sum::<usize>() {
        return Ok(false);
    }
    Ok(e.order()? == expected_product)
}

/// Product of the translation cycles on the rows of the p x p grid
/// {1..p^2}: the blocks {1..p}, {p+1..2p}, ... each cycled in place.
pub fn grid_row_shift(p: u64, degree: usize) -> Perm {
    let p = p as usize;
    assert!(degree >= p * p);
    let imgs: Vec<u32> = (0..degree)
        .map(|x| {
            if x >= p * p {
                return x as u32;
            }
            let (row, c) = (x / p, x % p);
            (row * p + (c + 1) % p) as u32
        })
        .collect();
    Perm::from_images(imgs).unwrap()
}

/// Product of the cycles down the columns of the p x p grid: adds p to each
/// point of {1..p^2} modulo p^2.
pub fn grid_col_shift(p: u64, degree: usize) -> Perm {
    let p = p as usize;
    assert!(degree >= p * p);
    let imgs: Vec<u32> = (0..degree)
        .map(|x| if x >= p * p { x as u32 } else { ((x + p) % (p * p)) as u32 })
        .collect();
    Perm::from_images(imgs).unwrap()
}

/// Parse the subgroup mini-language: "E(m1,...,mr)" | "F(m1,...,mr)" |
/// "Sylow" | "Q9" | "gens:<perm>;<perm>;...". Degree and p come from context.
pub fn parse_subgroup_spec(spec: &str, p: u64, degree: usize) -> Result<PermGroup, PermError> {
    let s = spec.trim();
    if s.eq_ignore_ascii_case("sylow") {
        return Ok(super::sylow::sylow_sym(degree, p));
    }
    if s.eq_ignore_ascii_case("q9") {
        let pp = (p * p) as usize;
        if degree < pp || degree % p as usize != 0 {
            return Err(PermError::CompositionTooLarge { support: pp, degree });
        }
        return Ok(super::sylow::grid_tail_group(p, degree / p as usize));
    }
    if let Some(body) = s.strip_prefix("gens:") {
        let mut gens = Vec::new();
        for part in body.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            gens.push(Perm::parse_cycles(part, degree)?);
        }
        return Ok(PermGroup::new(degree, gens));
    }
    for (head, is_f) in [("E(", false), ("F(", true)] {
        if let Some(rest) = s.strip_prefix(head) {
            let Some(body) = rest.strip_suffix(')') else {
                return Err(PermError::MalformedSubgroupSpec(s.into()));
            };
            let ms: Result<Vec<usize>, _> = body
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| PermError::MalformedSubgroupSpec(s.into()))
                })
                .collect();
            let ms = ms?;
            return if is_f { construct_f(p, &ms, degree) } else { construct_e(p, &ms, degree) };
        }
    }
    Err(PermError::MalformedSubgroupSpec(s.into()))
}

/// Expand a group on the m orbits of a block system into its action on the
/// orbits themselves (blocks listed in order of least point). The caller
/// guarantees the blocks are permuted.
pub fn action_on_blocks(g: &Perm, blocks: &[Vec<usize>]) -> Result<Perm, PermError> {
    let mut imgs = Vec::with_capacity(blocks.len());
    for b in blocks {
        let image_point = g.apply(b[0]);
        let target = blocks.iter().position(|c| c.contains(&image_point));
        match target {
            Some(t) => {
                // the whole block must land in the target block
                for &x in b {
                    if !blocks[t].contains(&g.apply(x)) {
                        return Err(PermError::NotABlockSystem);
                    }
                }
                imgs.push(t as u32);
            }
            None => return Err(PermError::NotABlockSystem),
        }
    }
    Perm::from_images(imgs)
}

/// Construct a PermGroup from explicit elements; exposed for tests.
pub fn group_from_elements(degree: usize, elems: &[Perm]) -> PermGroup {
    subgroup_from_elements(degree, elems)
}
