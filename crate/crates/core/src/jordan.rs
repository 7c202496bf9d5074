//! Generic and stable generic Jordan types of modules over elementary
//! abelian p-groups: ranks of powers of the operator with indeterminate
//! coefficients over the rational function field, recovered into block
//! multiplicities, plus combinatorial shortcuts for wedge powers of the
//! natural module and the chain computation for hook modules.

use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::brauer::{BrauerError, ModuleRep, MonomialModuleSpec};
use crate::exterior::{binomial, HookModule, MultiIndex};
use crate::ff_linalg::{generic_rank, Field, Mat, MatPoly, MultiPoly, PrimeField};
use crate::permgrp::{Perm, PermError, PermGroup};
use crate::rng::sub_rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JordanError {
    NotElementaryAbelian,
    DependentGenerators,
    RankProfileInvalid(String),
    Brauer(BrauerError),
    Perm(PermError),
}

impl fmt::Display for JordanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JordanError::NotElementaryAbelian => {
                write!(f, "group is not elementary abelian of exponent p")
            }
            JordanError::DependentGenerators => {
                write!(f, "the ordered generators are not independent")
            }
            JordanError::RankProfileInvalid(s) => write!(f, "rank profile invalid: {}", s),
            JordanError::Brauer(e) => write!(f, "{}", e),
            JordanError::Perm(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for JordanError {}

impl From<BrauerError> for JordanError {
    fn from(e: BrauerError) -> Self {
        JordanError::Brauer(e)
    }
}
impl From<PermError> for JordanError {
    fn from(e: PermError) -> Self {
        JordanError::Perm(e)
    }
}

pub const JORDAN_TRIALS: usize = 12;

/// Multiset of unipotent Jordan blocks [1]^{s_1} .. [p]^{s_p}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanType {
    p: u64,
    /// mult[r-1] = number of blocks of size r, for r = 1..p.
    mult: Vec<usize>,
}

impl JordanType {
    pub fn new(p: u64, mult: Vec<usize>) -> JordanType {
        assert_eq!(mult.len(), p as usize);
        JordanType { p, mult }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn blocks(&self) -> &[usize] {
        &self.mult
    }

    pub fn block_count(&self, size: usize) -> usize {
        self.mult[size - 1]
    }

    pub fn dim(&self) -> usize {
        self.mult.iter().enumerate().map(|(i, &s)| (i + 1) * s).sum()
    }

    pub fn stable(&self) -> StableJordanType {
        StableJordanType { p: self.p, mult: self.mult[..self.p as usize - 1].to_vec() }
    }

    pub fn is_generically_free(&self) -> bool {
        self.stable().is_free()
    }

    pub fn add(&self, other: &JordanType) -> JordanType {
        assert_eq!(self.p, other.p);
        JordanType {
            p: self.p,
            mult: self.mult.iter().zip(other.mult.iter()).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &s) in self.mult.iter().enumerate().rev() {
            if s > 0 {
                any = true;
                write!(f, "[{}]^{}", i + 1, s)?;
            }
        }
        if !any {
            write!(f, "[]")?;
        }
        Ok(())
    }
}

impl Serialize for JordanType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        let blocks: std::collections::BTreeMap<String, usize> = self
            .mult
            .iter()
            .enumerate()
            .map(|(i, &s)| ((i + 1).to_string(), s))
            .collect();
        map.serialize_entry("blocks", &blocks)?;
        map.serialize_entry("stable_free", &self.is_generically_free())?;
        map.end()
    }
}

/// A Jordan type with the blocks of full size p dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableJordanType {
    p: u64,
    mult: Vec<usize>,
}

impl StableJordanType {
    pub fn new(p: u64, mult: Vec<usize>) -> StableJordanType {
        assert_eq!(mult.len(), p as usize - 1);
        StableJordanType { p, mult }
    }

    pub fn free(p: u64) -> StableJordanType {
        StableJordanType { p, mult: vec![0; p as usize - 1] }
    }

    /// [1]^s.
    pub fn ones(p: u64, s: usize) -> StableJordanType {
        let mut mult = vec![0; p as usize - 1];
        if p > 1 {
            mult[0] = s;
        }
        StableJordanType { p, mult }
    }

    pub fn blocks(&self) -> &[usize] {
        &self.mult
    }

    pub fn is_free(&self) -> bool {
        self.mult.iter().all(|&s| s == 0)
    }

    /// The complementary type: block size r goes to p - r.
    pub fn reversed(&self) -> StableJordanType {
        let mut mult = self.mult.clone();
        mult.reverse();
        StableJordanType { p: self.p, mult }
    }
}

impl fmt::Display for StableJordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (i, &s) in self.mult.iter().enumerate().rev() {
            if s > 0 {
                any = true;
                write!(f, "[{}]^{}", i + 1, s)?;
            }
        }
        if !any {
            write!(f, "[]")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericJordanType {
    pub jt: JordanType,
    /// Every rank of a power was certified by fraction-free elimination.
    pub certified: bool,
}

/// The generic Jordan type of the module over the ordered generators of E:
/// ranks of the powers of N = sum over i of a_i (rho(g_i) - 1) over the
/// rational function field, turned into block multiplicities by the second
/// difference of the rank profile. N^p vanishes identically in
/// characteristic p, so only p-1 ranks are computed.
pub fn generic_jordan_type(
    m: &ModuleRep,
    e: &PermGroup,
    trials: usize,
    seed: u64,
) -> Result<GenericJordanType, JordanError> {
    let p = m.prime_field().p();
    if !e.is_elementary_abelian(p) {
        return Err(JordanError::NotElementaryAbelian);
    }
    let ngens = e.gens().len();
    if e.order()? != p.pow(ngens as u32) {
        return Err(JordanError::DependentGenerators);
    }
    let dim = m.dim();
    let base = m.prime_field();

    let mut mats = Vec::with_capacity(ngens);
    for g in e.gens() {
        mats.push(m.coordinate_matrix_of(g)?);
    }

    // N = sum a_i (rho_i - 1), entries of degree 1
    let n_op = MatPoly::from_fn(base, ngens, dim, dim, |i, j| {
        let mut acc = MultiPoly::zero(base, ngens);
        for (v, mat) in mats.iter().enumerate() {
            let mut c = mat.get(i, j);
            if i == j {
                c = base.sub(c, 1);
            }
            if c != 0 {
                acc = acc.add(&MultiPoly::var(base, ngens, v).scale(c));
            }
        }
        acc
    });

    let mut ranks = vec![0usize; p as usize + 2];
    ranks[0] = dim;
    let mut certified = true;
    let mut power = n_op.clone();
    for j in 1..p as usize {
        let r = generic_rank(&power, trials, sub_rng(seed, j as u64).gen());
        ranks[j] = r.rank;
        certified &= r.certified;
        if j + 1 < p as usize {
            power = power.mul(&n_op);
        }
    }
    // ranks[p], ranks[p+1] stay 0

    let mut mult = vec![0usize; p as usize];
    for r in 1..=p as usize {
        let above = ranks[r - 1] as i64 - ranks[r] as i64;
        let above_next = ranks[r] as i64 - ranks[r + 1] as i64;
        let s = above - above_next;
        if s < 0 {
            return Err(JordanError::RankProfileInvalid(format!(
                "negative multiplicity at block size {} from ranks {:?}",
                r,
                &ranks[..=p as usize]
            )));
        }
        mult[r - 1] = s as usize;
    }
    let jt = JordanType::new(p, mult);
    if jt.dim() != dim {
        return Err(JordanError::RankProfileInvalid(format!(
            "block sizes sum to {} but dim is {}",
            jt.dim(),
            dim
        )));
    }
    Ok(GenericJordanType { jt, certified })
}

/// Number of r-subsets of {1..n} fixed setwise by every generator.
pub fn fixed_subset_count(e: &PermGroup, n: usize, r: usize) -> usize {
    let dim = binomial(n, r) as usize;
    let mut count = 0usize;
    for t in 0..dim {
        let idx = MultiIndex::unrank(n, r, t as u64);
        let fixed = e.gens().iter().all(|g| {
            idx.indices().iter().all(|&x| idx.contains(g.apply(x as usize - 1) as u32 + 1))
        });
        if fixed {
            count += 1;
        }
    }
    count
}

/// Stable generic Jordan type of a wedge power restricted to E, computed
/// combinatorially: [1]^s with s the number of E-fixed r-subsets. The rest
/// of the generic type consists of full blocks.
pub fn monomial_stable_type(spec: &MonomialModuleSpec, e: &PermGroup) -> StableJordanType {
    let s = fixed_subset_count(e, spec.n, spec.r);
    StableJordanType::ones(spec.p.p(), s)
}

/// Direct computations are skipped above this module dimension.
pub const CHAIN_DIM_CAP: usize = 512;

#[derive(Debug, Clone, Serialize)]
pub struct ChainRow {
    pub i: usize,
    pub hook_dim: u64,
    /// Is the i-th wedge power of the natural module generically free over E
    /// (combinatorial count of fixed subsets)?
    pub middle_free: bool,
    /// Stable type predicted by the recursion through generically free
    /// middles; None for the final row.
    pub recursive_stable: Option<String>,
    /// Stable type measured by the generic Jordan engine; None when the
    /// dimension cap skips the computation.
    pub direct_stable: Option<String>,
    pub direct_free: Option<bool>,
    pub direct_certified: Option<bool>,
    /// Final row only: does the recursion prove the hook module not
    /// generically free? None when inconclusive.
    pub recursive_not_free: Option<bool>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainReport {
    pub p: u64,
    pub k: usize,
    /// Number of E-fixed p-subsets: the stable multiplicity of [1] in the
    /// top wedge power.
    pub top_wedge_ones: usize,
    pub rows: Vec<ChainRow>,
    pub all_agree: bool,
    /// The headline conclusion: the top hook module restricted to E is not
    /// generically free (None when the recursion is inconclusive and the
    /// direct computation was skipped).
    pub top_not_free: Option<bool>,
}

/// Stable types of the chain of hook modules of wedge degree 1..p restricted
/// to E, computed two independent ways: directly by the generic Jordan
/// engine, and by the recursion along the short exact sequences
/// 0 -> hook_i -> wedge_i -> hook_{i-1} -> 0, whose middle terms are
/// generically free for i < p. A generically free middle reverses the stable
/// type; at i = p the measured stable type [1]^s of the wedge power differs
/// from the reversal prediction exactly when the hook module is not
/// generically free.
pub fn stable_chain_report(
    p: u64,
    k: usize,
    e: &PermGroup,
    trials: usize,
    seed: u64,
) -> Result<ChainReport, JordanError> {
    let n = k * p as usize;
    let base = PrimeField::new(p).expect("p prime");
    assert_eq!(e.degree(), n, "subgroup must act on kp points");
    let pu = p as usize;

    let mut rows = Vec::new();
    // stable type of the trivial module seeds the recursion
    let mut rec_prev = StableJordanType::ones(p, 1);
    let mut all_agree = true;
    let mut top_not_free_direct: Option<bool> = None;
    let mut top_not_free_recursive: Option<bool> = None;

    let top_wedge_ones = fixed_subset_count(e, n, pu);

    for i in 1..=pu {
        let hook_dim = binomial(n - 1, i);
        let middle_s = fixed_subset_count(e, n, i);
        let middle_free = middle_s == 0;

        let direct = if (hook_dim as usize) <= CHAIN_DIM_CAP {
            let hook = HookModule::new(base, n, i).expect("1 <= i <= n-1");
            let v = ModuleRep::hook_subspace(hook).restricted_to(e)?;
            Some(generic_jordan_type(&v, e, trials, seed ^ (i as u64))?)
        } else {
            None
        };

        if i < pu {
            // recursion step needs a generically free middle
            let rec_i = if middle_free { Some(rec_prev.reversed()) } else { None };
            let agree = match (&direct, &rec_i) {
                (Some(d), Some(r)) => d.jt.stable() == *r,
                _ => true,
            };
            all_agree &= agree;
            rows.push(ChainRow {
                i,
                hook_dim,
                middle_free,
                recursive_stable: rec_i.as_ref().map(|t| t.to_string()),
                direct_stable: direct.as_ref().map(|d| d.jt.stable().to_string()),
                direct_free: direct.as_ref().map(|d| d.jt.is_generically_free()),
                direct_certified: direct.as_ref().map(|d| d.certified),
                recursive_not_free: None,
                agree,
            });
            match rec_i {
                Some(r) => rec_prev = r,
                None => {
                    // recursion chain broken; downstream rows lose the
                    // recursive route
                    rec_prev = StableJordanType::free(p);
                }
            }
        } else {
            // final row: if the hook were generically free, the wedge power
            // would share the previous hook's stable type
            let wedge_stable = StableJordanType::ones(p, top_wedge_ones);
            let decisive = wedge_stable != rec_prev;
            top_not_free_recursive = if decisive { Some(true) } else { None };
            top_not_free_direct = direct.as_ref().map(|d| !d.jt.is_generically_free());
            let agree = match (&top_not_free_direct, &top_not_free_recursive) {
                (Some(d), Some(r)) => d == r,
                _ => true,
            };
            all_agree &= agree;
            rows.push(ChainRow {
                i,
                hook_dim,
                middle_free,
                recursive_stable: None,
                direct_stable: direct.as_ref().map(|d| d.jt.stable().to_string()),
                direct_free: direct.as_ref().map(|d| d.jt.is_generically_free()),
                direct_certified: direct.as_ref().map(|d| d.certified),
                recursive_not_free: top_not_free_recursive,
                agree,
            });
        }
    }

    let top_not_free = match (top_not_free_direct, top_not_free_recursive) {
        (Some(d), _) => Some(d),
        (None, Some(r)) => Some(r),
        (None, None) => None,
    };
    Ok(ChainReport { p, k, top_wedge_ones, rows, all_agree, top_not_free })
}

/// Exponent coordinates of every element of an elementary abelian group with
/// independent ordered generators.
fn exponent_table(e: &PermGroup, p: u64) -> Result<HashMap<Perm, Vec<u64>>, JordanError> {
    let k = e.gens().len();
    let total = (p as usize).pow(k as u32);
    if e.order()? != total as u64 {
        return Err(JordanError::DependentGenerators);
    }
    let mut out = HashMap::with_capacity(total);
    for code in 0..total {
        let mut c = code;
        let mut exps = vec![0u64; k];
        let mut g = Perm::identity(e.degree());
        for (i, gen) in e.gens().iter().enumerate() {
            exps[i] = (c % p as usize) as u64;
            c /= p as usize;
            g = g.mul(&gen.pow(exps[i] as i64));
        }
        out.insert(g, exps);
    }
    Ok(out)
}

/// The module induced to E from a module of the proper subgroup D given by
/// matrices for D's generators: realized as the tensor product of the
/// regular module of E/D (translation permutation matrices on the coset
/// coordinates) with the D-part action.
pub fn induced_module(
    e: &PermGroup,
    d_gens: &[Perm],
    u_mats: &[Mat],
    p: PrimeField,
) -> Result<ModuleRep, JordanError> {
    if !e.is_elementary_abelian(p.p()) {
        return Err(JordanError::NotElementaryAbelian);
    }
    assert_eq!(d_gens.len(), u_mats.len());
    let k = e.gens().len();
    let exps = exponent_table(e, p.p())?;
    let field = Field::Prime(p);

    // columns: exponent vectors of the D generators
    let d_cols: Vec<Vec<u64>> = d_gens
        .iter()
        .map(|g| exps.get(g).cloned().ok_or(JordanError::DependentGenerators))
        .collect::<Result<_, _>>()?;
    let s = d_cols.len();
    let d_mat = Mat::from_cols(field.clone(), k, &d_cols);
    if d_mat.rank() != s {
        return Err(JordanError::DependentGenerators);
    }
    if s >= k {
        return Err(JordanError::RankProfileInvalid(
            "induction needs a proper subgroup".into(),
        ));
    }

    // extend the D basis to a basis of the exponent space by standard vectors
    let mut cols = d_cols.clone();
    let mut c_positions = Vec::new();
    for i in 0..k {
        let mut cand = vec![0u64; k];
        cand[i] = 1;
        let mut trial = cols.clone();
        trial.push(cand.clone());
        let m = Mat::from_cols(field.clone(), k, &trial);
        if m.rank() == trial.len() {
            cols.push(cand);
            c_positions.push(i);
        }
    }
    let t = c_positions.len();
    debug_assert_eq!(s + t, k);
    // basis matrix [D | C]
    let basis = Mat::from_cols(field.clone(), k, &cols);

    let coset_dim = (p.p() as usize).pow(t as u32);
    let udim = u_mats.first().map_or(1, |m| m.rows());
    let dim = coset_dim * udim;

    let mut gen_mats = Vec::with_capacity(k);
    for gen in e.gens() {
        let v = &exps[gen];
        let y = basis
            .solve(v)
            .expect("shapes agree")
            .expect("basis spans the exponent space");
        let (y_d, y_c) = y.split_at(s);
        // D part: product of the given matrices
        let mut dmat = Mat::identity(field.clone(), udim);
        for (j, &e_j) in y_d.iter().enumerate() {
            dmat = dmat.mul(&u_mats[j].pow(e_j)).unwrap();
        }
        // coset part: translation by y_c on F_p^t
        let mut big = Mat::zero(field.clone(), dim, dim);
        for code in 0..coset_dim {
            // target coset coordinate
            let mut c = code;
            let mut target = 0usize;
            let mut place = 1usize;
            for &shift in y_c.iter().take(t) {
                let digit = c % p.p() as usize;
                c /= p.p() as usize;
                let nd = (digit as u64 + shift) % p.p();
                target += nd as usize * place;
                place *= p.p() as usize;
            }
            for a in 0..udim {
                for b in 0..udim {
                    let val = dmat.get(a, b);
                    if val != 0 {
                        big.set(target * udim + a, code * udim + b, val);
                    }
                }
            }
        }
        gen_mats.push(big);
    }
    Ok(ModuleRep::from_generator_matrices(p, e.clone(), gen_mats, "induced"))
}

/// A pseudorandom E-invariant submodule of the regular module of E, as
/// generator matrices: close random vectors under the translation action.
pub fn random_submodule_of_regular(
    e: &PermGroup,
    p: PrimeField,
    seed: u64,
) -> Result<ModuleRep, JordanError> {
    let en = e.enumerate()?;
    let order = en.elems.len();
    let field = Field::Prime(p);
    // translation matrices: g sends basis vector at x to basis vector at g*x
    let gen_mats: Vec<Mat> = e
        .gens()
        .iter()
        .map(|g| {
            let mut m = Mat::zero(field.clone(), order, order);
            for (i, x) in en.elems.iter().enumerate() {
                let gx = g.mul(x);
                m.set(en.index[&gx] as usize, i, 1);
            }
            m
        })
        .collect();

    let mut rng = sub_rng(seed, 0);
    let start: Vec<u64> = (0..order).map(|_| rng.gen_range(0..p.p())).collect();
    // close under the action
    let mut basis_cols = vec![start];
    let mut grew = true;
    while grew {
        grew = false;
        let current = Mat::from_cols(field.clone(), order, &basis_cols);
        let rank = current.rank();
        for g in &gen_mats {
            for col in basis_cols.clone() {
                let moved = g.mul_vec(&col);
                let mut trial = basis_cols.clone();
                trial.push(moved.clone());
                if Mat::from_cols(field.clone(), order, &trial).rank() > rank {
                    basis_cols.push(moved);
                    grew = true;
                }
            }
            if grew {
                break;
            }
        }
    }
    // reduce to an independent set
    let full = Mat::from_cols(field.clone(), order, &basis_cols);
    let b = full.column_space();
    // restrict each generator: solve B X = G B
    let mats: Vec<Mat> = gen_mats
        .iter()
        .map(|g| {
            let gb = g.mul(&b).unwrap();
            b.solve_mat(&gb).unwrap().expect("submodule is invariant")
        })
        .collect();
    Ok(ModuleRep::from_generator_matrices(p, e.clone(), mats, "random submodule"))
}

/// Replace the ordered generating tuple of E by random independent products
/// of the old generators; the group is unchanged.
pub fn random_generator_change(e: &PermGroup, p: u64, seed: u64) -> PermGroup {
    let k = e.gens().len();
    let mut rng = sub_rng(seed, 1);
    let base = PrimeField::new(p).unwrap();
    let field = Field::Prime(base);
    loop {
        let a = Mat::from_fn(field.clone(), k, k, |_, _| rng.gen_range(0..p));
        if a.rank() != k {
            continue;
        }
        let new_gens: Vec<Perm> = (0..k)
            .map(|i| {
                let mut g = Perm::identity(e.degree());
                for j in 0..k {
                    g = g.mul(&e.gens()[j].pow(a.get(j, i) as i64));
                }
                g
            })
            .collect();
        return PermGroup::new(e.degree(), new_gens);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{construct_e, grid_col_shift, grid_row_shift};

    fn pf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn regular_module_of_cyclic_group() {
        for p in [2u64, 3, 5] {
            let n = p as usize;
            let cycle = Perm::parse_cycles(
                &format!("({})", (1..=n).map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
                n,
            )
            .unwrap();
            let e = PermGroup::new(n, vec![cycle]);
            let v = ModuleRep::natural(pf(p), n).restricted_to(&e).unwrap();
            let t = generic_jordan_type(&v, &e, 8, 11).unwrap();
            let mut expect = vec![0usize; p as usize];
            expect[p as usize - 1] = 1;
            assert_eq!(t.jt.blocks(), &expect[..]);
            assert!(t.certified);
            assert!(t.jt.is_generically_free());
        }
    }

    #[test]
    fn natural_module_generically_free() {
        let e = construct_e(3, &[2], 6).unwrap();
        let v = ModuleRep::natural(pf(3), 6).restricted_to(&e).unwrap();
        let t = generic_jordan_type(&v, &e, 8, 5).unwrap();
        assert_eq!(t.jt.blocks(), &[0, 0, 2]);
        assert!(t.jt.is_generically_free());
    }

    #[test]
    fn hook_degree_one_type() {
        // the 5-dimensional hook module restricted to two 3-cycles
        let e = construct_e(3, &[2], 6).unwrap();
        let hook = HookModule::new(pf(3), 6, 1).unwrap();
        let v = ModuleRep::hook_subspace(hook).restricted_to(&e).unwrap();
        let t = generic_jordan_type(&v, &e, 8, 5).unwrap();
        assert_eq!(t.jt.blocks(), &[0, 1, 1]); // [3][2]
        assert_eq!(t.jt.stable().to_string(), "[2]^1");
        assert!(!t.jt.is_generically_free());
    }

    #[test]
    fn rejects_non_elementary_abelian() {
        let e = PermGroup::new(
            4,
            vec![
                Perm::parse_cycles("(1,2,3,4)", 4).unwrap(),
                Perm::parse_cycles("(1,3)", 4).unwrap(),
            ],
        );
        let v = ModuleRep::natural(pf(2), 4).restricted_to(&e).unwrap();
        assert!(matches!(
            generic_jordan_type(&v, &e, 4, 0),
            Err(JordanError::NotElementaryAbelian)
        ));
        // dependent generators
        let g = Perm::parse_cycles("(1,2,3)", 6).unwrap();
        let dep = PermGroup::new(6, vec![g.clone(), g.pow(2)]);
        let v = ModuleRep::natural(pf(3), 6).restricted_to(&dep).unwrap();
        assert!(matches!(
            generic_jordan_type(&v, &dep, 4, 0),
            Err(JordanError::DependentGenerators)
        ));
    }

    #[test]
    fn fixed_subsets_counts() {
        // two 3-blocks plus three fixed points: three fixed 3-subsets
        let e = construct_e(3, &[2], 9).unwrap();
        assert_eq!(fixed_subset_count(&e, 9, 3), 3);
        // the regular group of order 9 fixes no 3-subset
        let e = PermGroup::new(9, vec![grid_row_shift(3, 9), grid_col_shift(3, 9)]);
        assert_eq!(fixed_subset_count(&e, 9, 3), 0);
        // no maximal class fixes a 2-subset
        let e = construct_e(3, &[2], 6).unwrap();
        assert_eq!(fixed_subset_count(&e, 6, 2), 0);
    }

    #[test]
    fn monomial_type_agrees_with_engine() {
        let e = construct_e(3, &[2], 6).unwrap();
        let spec = MonomialModuleSpec::new(pf(3), 6, 3);
        let combinatorial = monomial_stable_type(&spec, &e);
        let v = ModuleRep::wedge(pf(3), 6, 3).restricted_to(&e).unwrap();
        let t = generic_jordan_type(&v, &e, 8, 23).unwrap();
        assert_eq!(t.jt.stable(), combinatorial);
        assert_eq!(combinatorial.blocks(), &[2, 0]);
    }

    #[test]
    fn chain_small_case() {
        // k = 2: stable types [2], [1], then not generically free
        let e = construct_e(3, &[2], 6).unwrap();
        let report = stable_chain_report(3, 2, &e, 8, 99).unwrap();
        assert!(report.all_agree);
        assert_eq!(report.rows[0].direct_stable.as_deref(), Some("[2]^1"));
        assert_eq!(report.rows[1].direct_stable.as_deref(), Some("[1]^1"));
        assert_eq!(report.top_not_free, Some(true));
        assert_eq!(report.top_wedge_ones, 2);
        assert_eq!(report.rows[2].recursive_not_free, Some(true));
        assert_eq!(report.rows[2].direct_free, Some(false));
    }

    #[test]
    fn direct_sum_additivity() {
        let e = construct_e(3, &[2], 6).unwrap();
        let a = random_submodule_of_regular(&e, pf(3), 17).unwrap();
        let b = random_submodule_of_regular(&e, pf(3), 31).unwrap();
        let ta = generic_jordan_type(&a, &e, 8, 1).unwrap().jt;
        let tb = generic_jordan_type(&b, &e, 8, 2).unwrap().jt;
        let tsum = generic_jordan_type(&a.direct_sum(&b).unwrap(), &e, 8, 3).unwrap().jt;
        assert_eq!(tsum, ta.add(&tb));
    }

    #[test]
    fn induced_modules_are_generically_free() {
        let e = construct_e(3, &[2], 6).unwrap();
        // D = <g1>, U = a couple of different D-modules
        let d_gen = e.gens()[0].clone();
        let field = Field::Prime(pf(3));
        // trivial 1-dimensional D-module
        let u1 = vec![Mat::identity(field.clone(), 1)];
        let m = induced_module(&e, &[d_gen.clone()], &u1, pf(3)).unwrap();
        assert_eq!(m.dim(), 3);
        let t = generic_jordan_type(&m, &e, 8, 7).unwrap();
        assert!(t.jt.is_generically_free(), "type {:?}", t.jt);
        // a 2-dimensional unipotent D-module
        let mut j2 = Mat::identity(field.clone(), 2);
        j2.set(0, 1, 1);
        let m = induced_module(&e, &[d_gen], &[j2], pf(3)).unwrap();
        assert_eq!(m.dim(), 6);
        let t = generic_jordan_type(&m, &e, 8, 8).unwrap();
        assert!(t.jt.is_generically_free(), "type {:?}", t.jt);
        // induction from the whole group is rejected
        let both = e.gens().to_vec();
        let u = vec![Mat::identity(field.clone(), 1), Mat::identity(field, 1)];
        assert!(induced_module(&e, &both, &u, pf(3)).is_err());
    }

    #[test]
    fn generator_change_invariance() {
        let e = construct_e(3, &[2], 6).unwrap();
        let hook = HookModule::new(pf(3), 6, 1).unwrap();
        let v = ModuleRep::hook_subspace(hook);
        let t0 = generic_jordan_type(&v.restricted_to(&e).unwrap(), &e, 8, 0).unwrap().jt;
        for s in 0..5 {
            let e2 = random_generator_change(&e, 3, s);
            assert!(e2.same_group(&e).unwrap());
            let t = generic_jordan_type(&v.restricted_to(&e2).unwrap(), &e2, 8, s).unwrap().jt;
            assert_eq!(t, t0);
        }
    }

    #[test]
    fn jordan_type_json_shape() {
        let t = JordanType::new(3, vec![1, 0, 2]);
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"blocks":{"1":1,"2":0,"3":2},"stable_free":false}"#);
    }
}
