//! Exhaustive enumeration of the elementary abelian p-subgroups of a small
//! group, by iterative extension: seed with the cyclic subgroups on order-p
//! elements, extend by commuting order-p elements not already inside,
//! deduplicate by element set. Subgroups with no possible extension are
//! flagged maximal (any strictly larger elementary abelian subgroup would
//! provide a commuting order-p element outside).

use std::collections::{HashMap, HashSet, VecDeque};

use super::group::PermGroup;
use super::perm::Perm;
use super::PermError;

pub struct ElemAbelianSubgroup {
    pub group: PermGroup,
    pub order: u64,
    pub maximal: bool,
}

#[derive(Clone)]
struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    fn new(n: usize) -> BitSet {
        BitSet { words: vec![0; (n + 63) / 64] }
    }
    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }
    fn and_with(&mut self, other: &BitSet) {
        for (a, &b) in self.words.iter_mut().zip(other.words.iter()) {
            *a &= b;
        }
    }
    /// Indices set in self but not in other, ascending.
    fn diff_iter<'a>(&'a self, other: &'a BitSet) -> impl Iterator<Item = usize> + 'a {
        self.words.iter().zip(other.words.iter()).enumerate().flat_map(|(w, (&a, &b))| {
            let mut bits = a & !b;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let t = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(w * 64 + t)
                }
            })
        })
    }
    fn is_subset_of(&self, other: &BitSet) -> bool {
        self.words.iter().zip(other.words.iter()).all(|(&a, &b)| a & !b == 0)
    }
}

pub fn enumerate_elem_abelian(
    h: &PermGroup,
    p: u64,
) -> Result<Vec<ElemAbelianSubgroup>, PermError> {
    let en = h.enumerate()?;
    let degree = h.degree();

    // order-p elements, in enumeration order
    let points: Vec<Perm> =
        en.elems.iter().filter(|g| g.order() == p).cloned().collect();
    let k = points.len();
    let point_index: HashMap<&Perm, u32> =
        points.iter().enumerate().map(|(i, g)| (g, i as u32)).collect();

    // commutation bitsets
    let mut commute: Vec<BitSet> = vec![BitSet::new(k); k];
    for i in 0..k {
        commute[i].set(i);
        for j in (i + 1)..k {
            if points[i].commutes_with(&points[j]) {
                commute[i].set(j);
                commute[j].set(i);
            }
        }
    }

    // a subgroup is keyed by the sorted indices of its non-identity elements
    // (all of order p in an elementary abelian group)
    struct Node {
        elems: Vec<u32>,
        members: BitSet,
        cands: BitSet,
    }

    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut queue: VecDeque<Node> = VecDeque::new();
    let mut out: Vec<ElemAbelianSubgroup> = Vec::new();

    let push = |elems: Vec<u32>,
                    seen: &mut HashSet<Vec<u32>>,
                    queue: &mut VecDeque<Node>,
                    commute: &Vec<BitSet>| {
        if seen.contains(&elems) {
            return;
        }
        let mut members = BitSet::new(k);
        for &i in &elems {
            members.set(i as usize);
        }
        let mut cands = commute[elems[0] as usize].clone();
        for &i in &elems[1..] {
            cands.and_with(&commute[i as usize]);
        }
        seen.insert(elems.clone());
        queue.push_back(Node { elems, members, cands });
    };

    for start in 0..k {
        // seed <x>: the p-1 powers of x
        let mut elems: Vec<u32> = Vec::with_capacity(p as usize - 1);
        let mut power = points[start].clone();
        for _ in 1..p {
            elems.push(point_index[&power]);
            power = power.mul(&points[start]);
        }
        elems.sort_unstable();
        push(elems, &mut seen, &mut queue, &commute);
    }

    while let Some(node) = queue.pop_front() {
        let maximal = node.cands.is_subset_of(&node.members);
        if !maximal {
            let cand_list: Vec<usize> = node.cands.diff_iter(&node.members).collect();
            for y in cand_list {
                // extend by y: new elements are x * y^t for x in S u {id}
                let mut elems = node.elems.clone();
                let mut ypow = points[y].clone();
                for _ in 1..p {
                    elems.push(point_index[&ypow]);
                    for &xi in &node.elems {
                        let prod = points[xi as usize].mul(&ypow);
                        elems.push(point_index[&prod]);
                    }
                    ypow = ypow.mul(&points[y]);
                }
                elems.sort_unstable();
                elems.dedup();
                push(elems, &mut seen, &mut queue, &commute);
            }
        }
        let members: Vec<Perm> = std::iter::once(Perm::identity(degree))
            .chain(node.elems.iter().map(|&i| points[i as usize].clone()))
            .collect();
        let group = super::group::subgroup_from_elements(degree, &members);
        out.push(ElemAbelianSubgroup {
            order: members.len() as u64,
            group,
            maximal,
        });
    }
    Ok(out)
}
