//! Finitely generated permutation groups, materialized as full element sets.
//! No stabilizer chains: every group we touch is small enough to enumerate,
//! and eliminating that machinery removes a large correctness surface.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::perm::Perm;
use super::PermError;

/// Enumeration cap: groups larger than this are refused.
pub const ORDER_CAP: u64 = 1 << 22;

/// Full element list of a group in BFS order from the identity, plus, for
/// each element, one way to write it as (earlier element) * (generator).
#[derive(Debug)]
pub struct Enumeration {
    pub elems: Vec<Perm>,
    pub index: HashMap<Perm, u32>,
    /// word[i] = (j, g) with elems[i] = elems[j] * gens[g]; None for identity.
    pub word: Vec<Option<(u32, u32)>>,
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    enumeration: Arc<OnceLock<Result<Arc<Enumeration>, PermError>>>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PermGroup(degree {}, gens ", self.degree)?;
        for g in &self.gens {
            write!(f, "{} ", g)?;
        }
        write!(f, ")")
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> PermGroup {
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        PermGroup { degree, gens, enumeration: Arc::new(OnceLock::new()) }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, vec![])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }

    /// Full element set, computed once and cached. Construct-then-publish:
    /// concurrent callers race benignly on the same value.
    pub fn enumerate(&self) -> Result<Arc<Enumeration>, PermError> {
        self.enumeration
            .get_or_init(|| {
                let mut elems = vec![Perm::identity(self.degree)];
                let mut index = HashMap::new();
                let mut word = vec![None];
                index.insert(elems[0].clone(), 0u32);
                let mut at = 0usize;
                while at < elems.len() {
                    let cur = elems[at].clone();
                    for (gi, g) in self.gens.iter().enumerate() {
                        let nxt = cur.mul(g);
                        if !index.contains_key(&nxt) {
                            if elems.len() as u64 >= ORDER_CAP {
                                return Err(PermError::OrderCapExceeded { cap: ORDER_CAP });
                            }
                            index.insert(nxt.clone(), elems.len() as u32);
                            word.push(Some((at as u32, gi as u32)));
                            elems.push(nxt);
                        }
                    }
                    at += 1;
                }
                Ok(Arc::new(Enumeration { elems, index, word }))
            })
            .clone()
    }

    pub fn order(&self) -> Result<u64, PermError> {
        Ok(self.enumerate()?.elems.len() as u64)
    }

    pub fn contains(&self, p: &Perm) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.enumerate()?.index.contains_key(p))
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> Result<bool, PermError> {
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_group(&self, other: &PermGroup) -> Result<bool, PermError> {
        Ok(self.order()? == other.order()? && self.is_subgroup_of(other)?)
    }

    pub fn conjugate_by(&self, sigma: &Perm) -> PermGroup {
        PermGroup::new(self.degree, self.gens.iter().map(|g| g.conjugate_by(sigma)).collect())
    }

    pub fn is_p_group(&self, p: u64) -> Result<bool, PermError> {
        let mut n = self.order()?;
        while n % p == 0 {
            n /= p;
        }
        Ok(n == 1)
    }

    /// Elementary abelian of exponent p: pairwise commuting generators, each
    /// of order dividing p. No enumeration needed.
    pub fn is_elementary_abelian(&self, p: u64) -> bool {
        for (i, a) in self.gens.iter().enumerate() {
            if !a.pow(p as i64).is_identity() {
                return false;
            }
            for b in &self.gens[..i] {
                if !a.commutes_with(b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_even(&self) -> bool {
        self.gens.iter().all(|g| g.is_even())
    }

    /// Orbit point-sets (0-based), sorted by least point. Generators only.
    pub fn orbit_sets(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut at = 0;
            while at < orbit.len() {
                let x = orbit[at];
                for g in &self.gens {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orbit.push(y);
                    }
                }
                at += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// Elements fixing the given 0-based point set setwise.
    pub fn setwise_stabilizer(&self, set: &[usize]) -> Result<PermGroup, PermError> {
        let want: std::collections::BTreeSet<usize> = set.iter().copied().collect();
        let en = self.enumerate()?;
        let elems: Vec<Perm> = en
            .elems
            .iter()
            .filter(|g| set.iter().all(|&x| want.contains(&g.apply(x))))
            .cloned()
            .collect();
        Ok(subgroup_from_elements(self.degree, &elems))
    }

    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup, PermError> {
        let en = self.enumerate()?;
        let elems: Vec<Perm> =
            en.elems.iter().filter(|g| g.apply(point) == point).cloned().collect();
        Ok(subgroup_from_elements(self.degree, &elems))
    }

    /// The subgroup of even elements (index 1 or 2).
    pub fn even_subgroup(&self) -> Result<PermGroup, PermError> {
        if self.is_even() {
            return Ok(self.clone());
        }
        let en = self.enumerate()?;
        let elems: Vec<Perm> = en.elems.iter().filter(|g| g.is_even()).cloned().collect();
        Ok(subgroup_from_elements(self.degree, &elems))
    }

    /// All index-p subgroups of a p-group, as preimages of the hyperplanes of
    /// Q/Phi(Q), where the Frattini subgroup Phi(Q) is generated by p-th
    /// powers and commutators.
    pub fn maximal_subgroups_p_group(&self, p: u64) -> Result<Vec<PermGroup>, PermError> {
        if !self.is_p_group(p)? {
            return Err(PermError::NotPGroup { p });
        }
        let en = self.enumerate()?;
        let elems = &en.elems;
        if elems.len() == 1 {
            return Ok(vec![]);
        }

        // Phi = < q^p, [a, b] >
        let mut phi_gens: Vec<Perm> = Vec::new();
        for q in elems.iter() {
            phi_gens.push(q.pow(p as i64));
        }
        for a in elems.iter() {
            for b in elems.iter() {
                phi_gens.push(a.inverse().mul(&b.inverse()).mul(a).mul(b));
            }
        }
        let phi = close_under_mul(self.degree, &phi_gens);

        // coset labels
        let mut coset_of: HashMap<Perm, u32> = HashMap::new();
        let mut next = 0u32;
        for q in elems.iter() {
            if coset_of.contains_key(q) {
                continue;
            }
            for f in &phi {
                coset_of.insert(q.mul(f), next);
            }
            next += 1;
        }

        // basis of the elementary abelian quotient Q/Phi
        let mut basis: Vec<Perm> = Vec::new();
        let mut span: Vec<Perm> = phi.clone();
        let mut span_set: std::collections::HashSet<Perm> = span.iter().cloned().collect();
        for q in elems.iter() {
            if span_set.contains(q) {
                continue;
            }
            basis.push(q.clone());
            let mut grown = Vec::new();
            for s in &span {
                let mut power = Perm::identity(self.degree);
                for _ in 1..p {
                    power = power.mul(q);
                    grown.push(s.mul(&power));
                }
            }
            for g in grown {
                if span_set.insert(g.clone()) {
                    span.push(g);
                }
            }
        }
        let d = basis.len();
        debug_assert_eq!(span.len(), elems.len());

        // coordinates of every coset: walk all exponent vectors
        let pd = (p as usize).pow(d as u32);
        let mut coords_of_coset: Vec<Vec<u64>> = vec![Vec::new(); next as usize];
        for code in 0..pd {
            let mut c = code;
            let mut exps = vec![0u64; d];
            let mut g = Perm::identity(self.degree);
            for i in 0..d {
                exps[i] = (c % p as usize) as u64;
                c /= p as usize;
                g = g.mul(&basis[i].pow(exps[i] as i64));
            }
            let coset = coset_of[&g] as usize;
            debug_assert!(coords_of_coset[coset].is_empty(), "basis not independent mod Phi");
            coords_of_coset[coset] = exps;
        }

        // hyperplanes: functionals with first nonzero coefficient 1, lex order
        let mut out = Vec::new();
        let mut func = vec![0u64; d];
        loop {
            // next functional in lex order
            let mut i = d;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                func[i] += 1;
                if func[i] < p {
                    break;
                }
                func[i] = 0;
            }
            if func.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            let members: Vec<Perm> = elems
                .iter()
                .filter(|q| {
                    let coords = &coords_of_coset[coset_of[*q] as usize];
                    let dot: u64 =
                        coords.iter().zip(func.iter()).map(|(&a, &b)| a * b).sum::<u64>() % p;
                    dot == 0
                })
                .cloned()
                .collect();
            debug_assert!(phi.iter().all(|f| members.contains(f)), "Phi escapes a maximal subgroup");
            out.push(subgroup_from_elements(self.degree, &members));
        }
    }
}

/// Closure under multiplication, BFS order. Input perms must share a degree.
pub fn close_under_mul(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut elems = vec![Perm::identity(degree)];
    let mut seen: std::collections::HashSet<Perm> = elems.iter().cloned().collect();
    let gens: Vec<&Perm> = gens.iter().filter(|g| !g.is_identity()).collect();
    let mut at = 0;
    while at < elems.len() {
        let cur = elems[at].clone();
        for g in &gens {
            let nxt = cur.mul(g);
            if seen.insert(nxt.clone()) {
                elems.push(nxt);
            }
        }
        at += 1;
    }
    elems
}

/// Group on the given element set, with a greedily chosen small generating
/// set. The element list must already be a subgroup.
pub fn subgroup_from_elements(degree: usize, elems: &[Perm]) -> PermGroup {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: std::collections::HashSet<Perm> = std::collections::HashSet::new();
    span.insert(Perm::identity(degree));
    let mut span_size = 1usize;
    for e in elems {
        if span.contains(e) {
            continue;
        }
        gens.push(e.clone());
        let closure = close_under_mul(degree, &gens);
        span = closure.into_iter().collect();
        span_size = span.len();
        if span_size == elems.len() {
            break;
        }
    }
    debug_assert_eq!(span_size, elems.len(), "element list was not a subgroup");
    PermGroup::new(degree, gens)
}

/// Orbit profile: the conjugacy invariant read off the orbit structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitProfile {
    /// Orbit sizes including fixed points, sorted ascending; sums to degree.
    pub sizes: Vec<usize>,
    /// Aligned with `sizes`: does the point stabilizer act trivially on the
    /// orbit (so the induced action is regular)?
    pub regular: Vec<bool>,
    pub fixed_points: usize,
}

impl OrbitProfile {
    /// Count of regular orbits of exactly this size.
    pub fn regular_orbits_of_size(&self, size: usize) -> usize {
        self.sizes
            .iter()
            .zip(self.regular.iter())
            .filter(|(&s, &r)| s == size && r)
            .count()
    }

    pub fn orbits_of_size(&self, size: usize) -> usize {
        self.sizes.iter().filter(|&&s| s == size).count()
    }
}

impl PermGroup {
    /// Orbit profile plus the orbit point-sets (0-based). Needs enumeration
    /// for the regularity flags.
    pub fn orbits(&self) -> Result<(OrbitProfile, Vec<Vec<usize>>), PermError> {
        let sets = self.orbit_sets();
        let en = self.enumerate()?;
        let mut sizes = Vec::new();
        let mut regular = Vec::new();
        let mut fixed = 0usize;
        let mut order: Vec<(usize, Vec<usize>)> = sets.into_iter().map(|s| (s.len(), s)).collect();
        order.sort_by(|a, b| a.0.cmp(&b.0).then(a.1[0].cmp(&b.1[0])));
        let mut out_sets = Vec::new();
        for (len, set) in order {
            if len == 1 {
                fixed += 1;
            }
            let x = set[0];
            // stabilizer of x acts trivially on the orbit?
            let mut reg = true;
            'stab: for g in en.elems.iter() {
                if g.apply(x) == x {
                    for &y in &set {
                        if g.apply(y) != y {
                            reg = false;
                            break 'stab;
                        }
                    }
                }
            }
            sizes.push(len);
            regular.push(reg);
            out_sets.push(set);
        }
        Ok((OrbitProfile { sizes, regular, fixed_points: fixed }, out_sets))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn s3_enumeration() {
        let g = PermGroup::new(3, vec![perm("(1,2)", 3), perm("(1,2,3)", 3)]);
        assert_eq!(g.order().unwrap(), 6);
        assert!(g.contains(&perm("(1,3)", 3)).unwrap());
    }

    #[test]
    fn orbits_trivial_group() {
        let g = PermGroup::trivial(4);
        let (profile, sets) = g.orbits().unwrap();
        assert_eq!(profile.fixed_points, 4);
        assert_eq!(sets.len(), 4);
    }

    #[test]
    fn klein_four_regular_orbit() {
        let g = PermGroup::new(4, vec![perm("(1,2)(3,4)", 4), perm("(1,3)(2,4)", 4)]);
        let (profile, _) = g.orbits().unwrap();
        assert_eq!(profile.sizes, vec![4]);
        assert_eq!(profile.regular, vec![true]);
    }

    #[test]
    fn two_three_orbits_regular() {
        let g = PermGroup::new(6, vec![perm("(1,2,3)", 6), perm("(4,5,6)", 6)]);
        let (profile, _) = g.orbits().unwrap();
        assert_eq!(profile.sizes, vec![3, 3]);
        assert!(profile.regular.iter().all(|&r| r));
        assert_eq!(g.order().unwrap(), 9);
    }

    #[test]
    fn diagonal_three_cycle_not_regular_as_order_three() {
        // <(1,2,3)(4,5,6)> has two orbits of size 3, each regular (the
        // stabilizer of any point is trivial)
        let g = PermGroup::new(6, vec![perm("(1,2,3)(4,5,6)", 6)]);
        let (profile, _) = g.orbits().unwrap();
        assert_eq!(profile.sizes, vec![3, 3]);
        assert!(profile.regular.iter().all(|&r| r));
        assert_eq!(g.order().unwrap(), 3);
    }

    #[test]
    fn maximal_subgroups_elementary_abelian() {
        let g = PermGroup::new(6, vec![perm("(1,2,3)", 6), perm("(4,5,6)", 6)]);
        let maxs = g.maximal_subgroups_p_group(3).unwrap();
        assert_eq!(maxs.len(), 4);
        for m in &maxs {
            assert_eq!(m.order().unwrap(), 3);
        }
    }

    #[test]
    fn maximal_subgroups_dihedral8() {
        let g = PermGroup::new(4, vec![perm("(1,2,3,4)", 4), perm("(1,3)", 4)]);
        assert_eq!(g.order().unwrap(), 8);
        let maxs = g.maximal_subgroups_p_group(2).unwrap();
        assert_eq!(maxs.len(), 3);
        for m in &maxs {
            assert_eq!(m.order().unwrap(), 4);
        }
    }

    #[test]
    fn maximal_subgroup_of_cyclic_p_is_trivial() {
        let g = PermGroup::new(3, vec![perm("(1,2,3)", 3)]);
        let maxs = g.maximal_subgroups_p_group(3).unwrap();
        assert_eq!(maxs.len(), 1);
        assert_eq!(maxs[0].order().unwrap(), 1);
    }

    #[test]
    fn even_subgroup_halves() {
        let g = PermGroup::new(4, vec![perm("(1,2)", 4), perm("(3,4)", 4)]);
        assert_eq!(g.order().unwrap(), 4);
        let f = g.even_subgroup().unwrap();
        assert_eq!(f.order().unwrap(), 2);
        assert!(f.contains(&perm("(1,2)(3,4)", 4)).unwrap());
    }
}
