//! Fixed-point spaces, relative trace maps and Brauer quotients of modules
//! over p-subgroups of symmetric groups, with the fast orbit-sum bases
//! available for wedge powers of the natural module.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::exterior::{act_matrix, binomial, ExteriorError, HookModule, MultiIndex, WedgeVector};
use crate::ff_linalg::{Field, Mat, MatError, PrimeField};
use crate::permgrp::{Perm, PermError, PermGroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BrauerError {
    NotPGroup { p: u64 },
    NotSubgroup,
    VectorNotFixed,
    DimensionMismatch,
    ElementOutsideGroup(String),
    NotNormalizing(String),
    Perm(PermError),
    Mat(MatError),
    Exterior(ExteriorError),
}

impl fmt::Display for BrauerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrauerError::NotPGroup { p } => {
                write!(f, "Brauer machinery needs a {}-group", p)
            }
            BrauerError::NotSubgroup => write!(f, "claimed subgroup is not contained"),
            BrauerError::VectorNotFixed => write!(f, "vector is not fixed by the subgroup"),
            BrauerError::DimensionMismatch => write!(f, "vector length does not match module"),
            BrauerError::ElementOutsideGroup(s) => {
                write!(f, "element {} is outside the acting group", s)
            }
            BrauerError::NotNormalizing(s) => write!(f, "element {} does not normalize", s),
            BrauerError::Perm(e) => write!(f, "{}", e),
            BrauerError::Mat(e) => write!(f, "{}", e),
            BrauerError::Exterior(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for BrauerError {}

impl From<PermError> for BrauerError {
    fn from(e: PermError) -> Self {
        BrauerError::Perm(e)
    }
}
impl From<MatError> for BrauerError {
    fn from(e: MatError) -> Self {
        BrauerError::Mat(e)
    }
}
impl From<ExteriorError> for BrauerError {
    fn from(e: ExteriorError) -> Self {
        BrauerError::Exterior(e)
    }
}

#[derive(Clone)]
enum RepKind {
    /// One-dimensional trivial module; any permutation of the right degree acts as 1.
    Trivial { n: usize },
    /// The natural permutation module of dimension n.
    Natural { n: usize },
    /// The wedge power of the natural module, with the signed action.
    Wedge { n: usize, r: usize },
    /// A hook Specht module handled as an explicit subspace of the wedge:
    /// vectors are presented in ambient wedge coordinates.
    HookSub { hook: Arc<HookModule> },
    /// Matrices for the generators of a fixed (small) group; the action of
    /// arbitrary elements comes from a table built along the enumeration.
    Gens {
        group: PermGroup,
        mats: Arc<Vec<Mat>>,
        table: Arc<OnceLock<Result<Arc<Vec<Mat>>, BrauerError>>>,
    },
}

/// A finite-dimensional F_p-representation of (a subgroup of) a symmetric
/// group, given functorially or by generator matrices.
#[derive(Clone)]
pub struct ModuleRep {
    p: PrimeField,
    dim: usize,
    tag: String,
    kind: RepKind,
}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleRep({}, dim {}, p {})", self.tag, self.dim, self.p.p())
    }
}

impl ModuleRep {
    pub fn trivial(p: PrimeField, n: usize) -> ModuleRep {
        ModuleRep { p, dim: 1, tag: "trivial".into(), kind: RepKind::Trivial { n } }
    }

    pub fn natural(p: PrimeField, n: usize) -> ModuleRep {
        ModuleRep { p, dim: n, tag: format!("natural({})", n), kind: RepKind::Natural { n } }
    }

    pub fn wedge(p: PrimeField, n: usize, r: usize) -> ModuleRep {
        ModuleRep {
            p,
            dim: binomial(n, r) as usize,
            tag: format!("wedge({},{})", n, r),
            kind: RepKind::Wedge { n, r },
        }
    }

    /// Hook Specht module as a subspace of the wedge; presentation vectors
    /// are ambient, of length C(n, r).
    pub fn hook_subspace(hook: HookModule) -> ModuleRep {
        ModuleRep {
            p: hook.prime_field(),
            dim: hook.dim(),
            tag: format!("hook({},{})", hook.n(), hook.r()),
            kind: RepKind::HookSub { hook: Arc::new(hook) },
        }
    }

    /// Module defined by one matrix per generator of `group`.
    pub fn from_generator_matrices(
        p: PrimeField,
        group: PermGroup,
        mats: Vec<Mat>,
        tag: impl Into<String>,
    ) -> ModuleRep {
        assert_eq!(mats.len(), group.gens().len());
        let dim = mats.first().map_or(0, |m| m.rows());
        for m in &mats {
            assert_eq!(m.rows(), m.cols());
            assert_eq!(m.rows(), dim);
        }
        ModuleRep {
            p,
            dim,
            tag: tag.into(),
            kind: RepKind::Gens { group, mats: Arc::new(mats), table: Arc::new(OnceLock::new()) },
        }
    }

    /// Restrict a functorial module to a subgroup, yielding square coordinate
    /// matrices for that subgroup's generators.
    pub fn restricted_to(&self, group: &PermGroup) -> Result<ModuleRep, BrauerError> {
        let mats: Result<Vec<Mat>, BrauerError> =
            group.gens().iter().map(|g| self.coordinate_matrix_of(g)).collect();
        Ok(ModuleRep::from_generator_matrices(
            self.p,
            group.clone(),
            mats?,
            format!("{}|", self.tag),
        ))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn prime_field(&self) -> PrimeField {
        self.p
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn field(&self) -> Field {
        Field::Prime(self.p)
    }

    /// Length of the vectors this module's operations work with. Hook
    /// subspaces present their vectors in ambient wedge coordinates.
    pub fn presentation_dim(&self) -> usize {
        match &self.kind {
            RepKind::HookSub { hook } => hook.ambient_dim(),
            _ => self.dim,
        }
    }

    /// Action matrix of sigma on the presentation space.
    pub fn matrix_of(&self, sigma: &Perm) -> Result<Mat, BrauerError> {
        match &self.kind {
            RepKind::Trivial { n } => {
                if sigma.degree() != *n {
                    return Err(BrauerError::Exterior(ExteriorError::DegreeMismatch {
                        perm: sigma.degree(),
                        n: *n,
                    }));
                }
                Ok(Mat::identity(self.field(), 1))
            }
            RepKind::Natural { n } => {
                if sigma.degree() != *n {
                    return Err(BrauerError::Exterior(ExteriorError::DegreeMismatch {
                        perm: sigma.degree(),
                        n: *n,
                    }));
                }
                let mut m = Mat::zero(self.field(), *n, *n);
                for x in 0..*n {
                    m.set(sigma.apply(x), x, 1);
                }
                Ok(m)
            }
            RepKind::Wedge { n, r } => Ok(act_matrix(self.p, *n, *r, sigma)),
            RepKind::HookSub { hook } => Ok(act_matrix(self.p, hook.n(), hook.r(), sigma)),
            RepKind::Gens { group, mats, table } => {
                let en = group.enumerate()?;
                let Some(&idx) = en.index.get(sigma) else {
                    return Err(BrauerError::ElementOutsideGroup(sigma.to_string()));
                };
                let table = table
                    .get_or_init(|| {
                        let mut out: Vec<Mat> = Vec::with_capacity(en.elems.len());
                        out.push(Mat::identity(Field::Prime(self.p), self.dim));
                        for i in 1..en.elems.len() {
                            let (parent, gi) = en.word[i].expect("non-identity has a word");
                            let m = out[parent as usize].mul(&mats[gi as usize])?;
                            out.push(m);
                        }
                        // the generator matrices must satisfy the group's
                        // relations, otherwise the table is inconsistent
                        for (i, e) in en.elems.iter().enumerate() {
                            for (gi, g) in group.gens().iter().enumerate() {
                                let prod = e.mul(g);
                                let j = en.index[&prod] as usize;
                                let check = out[i].mul(&mats[gi])?;
                                if check != out[j] {
                                    return Err(BrauerError::ElementOutsideGroup(
                                        "generator matrices violate the group relations".into(),
                                    ));
                                }
                            }
                        }
                        Ok(Arc::new(out))
                    })
                    .clone()?;
                Ok(table[idx as usize].clone())
            }
        }
    }

    /// Action matrix in honest module coordinates (dim x dim); for hook
    /// subspaces this is the standard-basis action via the rewriting rule.
    pub fn coordinate_matrix_of(&self, sigma: &Perm) -> Result<Mat, BrauerError> {
        match &self.kind {
            RepKind::HookSub { hook } => Ok(hook.gen_matrix(sigma)?),
            _ => self.matrix_of(sigma),
        }
    }

    /// Generator matrices in module coordinates, for modules pinned to a
    /// group by `restricted_to` or `from_generator_matrices`.
    pub fn generator_matrices(&self) -> Result<Vec<Mat>, BrauerError> {
        match &self.kind {
            RepKind::Gens { mats, .. } => Ok(mats.as_ref().clone()),
            _ => Err(BrauerError::ElementOutsideGroup(
                "module has no fixed generator list; restrict it to a group first".into(),
            )),
        }
    }

    /// The group a generator-matrix module is defined over.
    pub fn acting_group(&self) -> Option<&PermGroup> {
        match &self.kind {
            RepKind::Gens { group, .. } => Some(group),
            _ => None,
        }
    }

    pub fn hook(&self) -> Option<&HookModule> {
        match &self.kind {
            RepKind::HookSub { hook } => Some(hook),
            _ => None,
        }
    }

    pub fn is_wedge(&self) -> Option<(usize, usize)> {
        match &self.kind {
            RepKind::Wedge { n, r } => Some((*n, *r)),
            _ => None,
        }
    }

    /// Direct sum of two modules over the same group (generator-matrix kind).
    pub fn direct_sum(&self, other: &ModuleRep) -> Result<ModuleRep, BrauerError> {
        let (RepKind::Gens { group: g1, mats: m1, .. }, RepKind::Gens { group: g2, mats: m2, .. }) =
            (&self.kind, &other.kind)
        else {
            return Err(BrauerError::DimensionMismatch);
        };
        if !g1.same_group(g2)? || g1.gens() != g2.gens() {
            return Err(BrauerError::NotSubgroup);
        }
        let dim = self.dim + other.dim;
        let mats: Result<Vec<Mat>, MatError> = m1
            .iter()
            .zip(m2.iter())
            .map(|(a, b)| {
                let mut m = Mat::identity(Field::Prime(self.p), dim);
                for i in 0..a.rows() {
                    for j in 0..a.cols() {
                        m.set(i, j, a.get(i, j));
                    }
                }
                for i in 0..b.rows() {
                    for j in 0..b.cols() {
                        m.set(self.dim + i, self.dim + j, b.get(i, j));
                    }
                }
                Ok(m)
            })
            .collect();
        Ok(ModuleRep::from_generator_matrices(
            self.p,
            g1.clone(),
            mats?,
            format!("{}+{}", self.tag, other.tag),
        ))
    }

    /// Basis of the fixed space V^Q as columns in presentation coordinates.
    /// For hook subspaces this intersects the subspace with the ambient fixed
    /// space through one stacked linear system.
    pub fn fixed_space(&self, q: &PermGroup) -> Result<Mat, BrauerError> {
        let field = self.field();
        match &self.kind {
            RepKind::HookSub { hook } => {
                let b = hook.basis_matrix();
                if q.gens().is_empty() {
                    return Ok(b.clone());
                }
                let mut stacked = Vec::new();
                for g in q.gens() {
                    let a = self.matrix_of(g)?;
                    let ai = a.sub(&Mat::identity(field.clone(), a.rows()))?;
                    stacked.push(ai.mul(b)?);
                }
                let coords = Mat::vstack(&stacked).nullspace();
                Ok(b.mul(&coords)?)
            }
            _ => {
                if q.gens().is_empty() {
                    return Ok(Mat::identity(field, self.presentation_dim()));
                }
                let mut stacked = Vec::new();
                for g in q.gens() {
                    let a = self.matrix_of(g)?;
                    stacked.push(a.sub(&Mat::identity(field.clone(), a.rows()))?);
                }
                Ok(Mat::vstack(&stacked).nullspace())
            }
        }
    }
}

/// Left coset representatives of R in Q, deterministically: walk Q in
/// enumeration order, greedily opening a new coset for each uncovered
/// element.
pub fn left_coset_reps(q: &PermGroup, r: &PermGroup) -> Result<Vec<Perm>, BrauerError> {
    if !r.is_subgroup_of(q)? {
        return Err(BrauerError::NotSubgroup);
    }
    let qe = q.enumerate()?;
    let re = r.enumerate()?;
    let mut covered: HashSet<Perm> = HashSet::new();
    let mut reps = Vec::new();
    for e in qe.elems.iter() {
        if covered.contains(e) {
            continue;
        }
        reps.push(e.clone());
        for s in re.elems.iter() {
            covered.insert(e.mul(s));
        }
    }
    Ok(reps)
}

/// Matrix of the relative trace map from V^R into V^Q: the sum of the action
/// matrices over coset representatives of Q/R.
pub fn relative_trace_matrix(
    v: &ModuleRep,
    q: &PermGroup,
    r: &PermGroup,
) -> Result<Mat, BrauerError> {
    let reps = left_coset_reps(q, r)?;
    let mut acc = Mat::zero(v.field(), v.presentation_dim(), v.presentation_dim());
    for rep in reps {
        acc = acc.add(&v.matrix_of(&rep)?)?;
    }
    Ok(acc)
}

/// Relative trace of a single R-fixed vector (presentation coordinates).
/// Checks containment R <= Q and R-fixedness of v.
pub fn relative_trace(
    v: &ModuleRep,
    q: &PermGroup,
    r: &PermGroup,
    vec: &[u64],
) -> Result<Vec<u64>, BrauerError> {
    if vec.len() != v.presentation_dim() {
        return Err(BrauerError::DimensionMismatch);
    }
    for g in r.gens() {
        if v.matrix_of(g)?.mul_vec(vec) != vec {
            return Err(BrauerError::VectorNotFixed);
        }
    }
    Ok(relative_trace_matrix(v, q, r)?.mul_vec(vec))
}

/// rank([a]) == rank([a|b]): every column of b lies in the span of a.
pub fn span_contains(a: &Mat, b: &Mat) -> bool {
    if b.cols() == 0 {
        return true;
    }
    let joint = Mat::hstack(&[a.clone(), b.clone()]);
    a.rank() == joint.rank()
}

#[derive(Debug, Clone, Serialize)]
pub struct BrauerReport {
    pub dim_fixed: usize,
    pub dim_kernel: usize,
    pub dim_quotient: usize,
    pub orbit_labels: Vec<String>,
    #[serde(skip)]
    pub fixed_basis: Mat,
    #[serde(skip)]
    pub kernel_basis: Mat,
}

/// The Brauer quotient V(Q) = V^Q / sum of relative traces from proper
/// subgroups. Only maximal subgroups contribute: traces from smaller
/// subgroups factor through them by transitivity.
pub fn brauer_quotient(v: &ModuleRep, q: &PermGroup) -> Result<BrauerReport, BrauerError> {
    let p = v.prime_field().p();
    if !q.is_p_group(p)? {
        return Err(BrauerError::NotPGroup { p });
    }
    let fixed = v.fixed_space(q)?;
    let maxes = q.maximal_subgroups_p_group(p)?;
    let mut trace_cols: Vec<Mat> = Vec::new();
    for r in &maxes {
        let fixed_r = v.fixed_space(r)?;
        if fixed_r.cols() == 0 {
            continue;
        }
        let tr = relative_trace_matrix(v, q, r)?;
        trace_cols.push(tr.mul(&fixed_r)?);
    }
    let kernel_basis = if trace_cols.is_empty() {
        Mat::zero(v.field(), v.presentation_dim(), 0)
    } else {
        Mat::hstack(&trace_cols).column_space()
    };
    debug_assert!(span_contains(&fixed, &kernel_basis));
    let dim_fixed = fixed.cols();
    let dim_kernel = kernel_basis.cols();
    let orbit_labels = match v.is_wedge() {
        Some((n, r)) => {
            let basis = monomial_orbit_basis(&MonomialModuleSpec::new(v.prime_field(), n, r), q)?;
            basis.labels.iter().map(|l| l.to_string()).collect()
        }
        None => Vec::new(),
    };
    Ok(BrauerReport {
        dim_fixed,
        dim_kernel,
        dim_quotient: dim_fixed - dim_kernel,
        orbit_labels,
        fixed_basis: fixed,
        kernel_basis,
    })
}

/// The wedge power of the natural module seen as a monomial module: induced
/// from the sign-times-trivial character of the stabilizer of {1..r}. The
/// inducing character is trivial on p-elements, so over a p-group the
/// monomial basis is an honest permutation basis.
#[derive(Debug, Clone)]
pub struct MonomialModuleSpec {
    pub p: PrimeField,
    pub n: usize,
    pub r: usize,
}

impl MonomialModuleSpec {
    pub fn new(p: PrimeField, n: usize, r: usize) -> MonomialModuleSpec {
        MonomialModuleSpec { p, n, r }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitLabel {
    pub rep: String,
    pub orbit_size: u64,
    pub stab_order: u64,
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:orbit{}:stab{}", self.rep, self.orbit_size, self.stab_order)
    }
}

pub struct OrbitSumBasis {
    pub vectors: Vec<WedgeVector>,
    pub reps: Vec<MultiIndex>,
    pub labels: Vec<OrbitLabel>,
}

/// One vector per orbit of Q on r-subsets: the orbit sum of monomials,
/// realized as the relative trace of the representative monomial over its
/// stabilizer. Together they form a basis of the Q-fixed space.
pub fn monomial_orbit_basis(
    spec: &MonomialModuleSpec,
    q: &PermGroup,
) -> Result<OrbitSumBasis, BrauerError> {
    let (p, n, r) = (spec.p, spec.n, spec.r);
    let qe = q.enumerate()?;
    let order = qe.elems.len() as u64;
    let dim = binomial(n, r) as usize;
    let mut seen = vec![false; dim];
    let mut vectors = Vec::new();
    let mut reps = Vec::new();
    let mut labels = Vec::new();
    for t in 0..dim {
        if seen[t] {
            continue;
        }
        let rep = MultiIndex::unrank(n, r, t as u64);
        let mut vec = WedgeVector::zero(p, n, r);
        let mut orbit_size = 0u64;
        // signed trace over one representative per coset of the stabilizer:
        // the first group element reaching each orbit member contributes its
        // action sign (well-defined since the representative monomial is
        // fixed by its stabilizer)
        for g in qe.elems.iter() {
            let (idx, odd) = crate::exterior::signed_image(g, &rep);
            let rank = idx.rank();
            if !seen[rank] {
                seen[rank] = true;
                orbit_size += 1;
                vec.set_coeff(&idx, if odd { p.from_int(-1) } else { 1 });
            }
        }
        labels.push(OrbitLabel {
            rep: format!("{:?}", rep),
            orbit_size,
            stab_order: order / orbit_size,
        });
        reps.push(rep);
        vectors.push(vec);
    }
    Ok(OrbitSumBasis { vectors, reps, labels })
}

/// Setwise stabilizer order of an r-subset inside Q, plus the subgroup.
fn subset_stabilizer(q: &PermGroup, idx: &MultiIndex) -> Result<Vec<Perm>, BrauerError> {
    let qe = q.enumerate()?;
    let want: HashSet<u32> = idx.indices().iter().copied().collect();
    Ok(qe
        .elems
        .iter()
        .filter(|g| {
            idx.indices().iter().all(|&x| want.contains(&(g.apply(x as usize - 1) as u32 + 1)))
        })
        .cloned()
        .collect())
}

/// The sub-basis of Q-orbit sums spanning the image of the relative trace
/// from R: those orbits containing a subset whose Q-stabilizer lies inside
/// R (equivalently, whose Q- and R-stabilizers agree at that subset).
pub fn trace_image_basis(
    spec: &MonomialModuleSpec,
    q: &PermGroup,
    r: &PermGroup,
) -> Result<(OrbitSumBasis, Vec<bool>), BrauerError> {
    if !r.is_subgroup_of(q)? {
        return Err(BrauerError::NotSubgroup);
    }
    let basis = monomial_orbit_basis(spec, q)?;
    let re = r.enumerate()?;
    let r_set: HashSet<&Perm> = re.elems.iter().collect();
    let mut selected = Vec::with_capacity(basis.vectors.len());
    for (k, rep) in basis.reps.iter().enumerate() {
        // scan the orbit for a subset with Stab_Q inside R
        let mut found = false;
        'orbit: for idx in basis.vectors[k].support() {
            let stab = subset_stabilizer(q, &idx)?;
            if stab.iter().all(|s| r_set.contains(s)) {
                found = true;
                break 'orbit;
            }
        }
        let _ = rep;
        selected.push(found);
    }
    Ok((basis, selected))
}

/// Does g map V^Q into itself and the Brauer kernel into itself? g must
/// normalize Q.
pub fn normalizer_action_check(
    v: &ModuleRep,
    q: &PermGroup,
    g: &Perm,
) -> Result<bool, BrauerError> {
    for gen in q.gens() {
        if !q.contains(&gen.conjugate_by(g))? {
            return Err(BrauerError::NotNormalizing(g.to_string()));
        }
    }
    let report = brauer_quotient(v, q)?;
    let a = v.matrix_of(g)?;
    let moved_fixed = a.mul(&report.fixed_basis)?;
    let moved_kernel = a.mul(&report.kernel_basis)?;
    Ok(span_contains(&report.fixed_basis, &moved_fixed)
        && span_contains(&report.kernel_basis, &moved_kernel))
}

/// Fixed vectors of the permutation action on subsets, per orbit count:
/// used as the independent cross-check of fixed-space dimensions.
pub fn orbit_count_on_subsets(q: &PermGroup, n: usize, r: usize) -> Result<usize, BrauerError> {
    let qe = q.enumerate()?;
    let dim = binomial(n, r) as usize;
    let mut seen = vec![false; dim];
    let mut count = 0usize;
    for t in 0..dim {
        if seen[t] {
            continue;
        }
        count += 1;
        let rep = MultiIndex::unrank(n, r, t as u64);
        for g in qe.elems.iter() {
            let mut images: Vec<u32> =
                rep.indices().iter().map(|&x| g.apply(x as usize - 1) as u32 + 1).collect();
            images.sort_unstable();
            seen[MultiIndex::new(n, images).unwrap().rank()] = true;
        }
    }
    Ok(count)
}

/// Ambient wedge coordinates of a hook-module coordinate matrix are not
/// needed often; this maps presentation vectors of a hook subspace back to
/// wedge vectors for coefficient extraction.
pub fn column_as_wedge(v: &ModuleRep, col: &[u64]) -> Option<WedgeVector> {
    let hook = v.hook()?;
    let mut w = WedgeVector::zero(v.prime_field(), hook.n(), hook.r());
    for (i, &c) in col.iter().enumerate() {
        if c != 0 {
            w.set_coeff(&MultiIndex::unrank(hook.n(), hook.r(), i as u64), c);
        }
    }
    Some(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::{construct_e, grid_col_shift, grid_row_shift, sylow_sym};

    fn pf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn perm(s: &str, n: usize) -> Perm {
        Perm::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn fixed_space_trivial_group_is_everything() {
        let v = ModuleRep::natural(pf(3), 5);
        let f = v.fixed_space(&PermGroup::trivial(5)).unwrap();
        assert_eq!(f.cols(), 5);
    }

    #[test]
    fn fixed_space_of_natural_is_orbit_sums() {
        let v = ModuleRep::natural(pf(3), 6);
        let q = construct_e(3, &[2], 6).unwrap();
        let f = v.fixed_space(&q).unwrap();
        assert_eq!(f.cols(), 2);
    }

    #[test]
    fn fixed_space_of_wedge_counts_orbits() {
        // dim of the fixed space of the wedge cube under the regular group of
        // order 9 equals the number of orbits on 3-subsets
        let v = ModuleRep::wedge(pf(3), 9, 3);
        let q = PermGroup::new(9, vec![grid_row_shift(3, 9), grid_col_shift(3, 9)]);
        let f = v.fixed_space(&q).unwrap();
        let orbits = orbit_count_on_subsets(&q, 9, 3).unwrap();
        assert_eq!(f.cols(), orbits);
        // Burnside count: (84 + 8*3) / 9 = 12
        assert_eq!(orbits, 12);
    }

    #[test]
    fn trace_from_trivial_is_group_sum() {
        let v = ModuleRep::natural(pf(3), 3);
        let q = PermGroup::new(3, vec![perm("(1,2,3)", 3)]);
        let e1 = vec![1, 0, 0];
        let tr = relative_trace(&v, &q, &PermGroup::trivial(3), &e1).unwrap();
        assert_eq!(tr, vec![1, 1, 1]);
    }

    #[test]
    fn trace_of_identity_subgroup_is_identity_map() {
        let v = ModuleRep::natural(pf(3), 3);
        let q = PermGroup::new(3, vec![perm("(1,2,3)", 3)]);
        let fixed = v.fixed_space(&q).unwrap();
        let vec = fixed.col(0);
        let tr = relative_trace(&v, &q, &q, &vec).unwrap();
        assert_eq!(tr, vec);
        // non-fixed vector rejected
        assert!(matches!(
            relative_trace(&v, &q, &q, &[1, 0, 0]),
            Err(BrauerError::VectorNotFixed)
        ));
    }

    #[test]
    fn trace_transitivity_on_chain() {
        // chains R <= S <= Q inside a Sylow 3-subgroup of degree 9
        let q = sylow_sym(9, 3);
        let s = construct_e(3, &[3], 9).unwrap();
        let r = PermGroup::new(9, vec![perm("(1,2,3)", 9)]);
        assert!(r.is_subgroup_of(&s).unwrap());
        assert!(s.is_subgroup_of(&q).unwrap());
        let v = ModuleRep::wedge(pf(3), 9, 2);
        let fixed_r = v.fixed_space(&r).unwrap();
        let direct = relative_trace_matrix(&v, &q, &r).unwrap();
        let via_s = relative_trace_matrix(&v, &q, &s)
            .unwrap()
            .mul(&relative_trace_matrix(&v, &s, &r).unwrap())
            .unwrap();
        for k in 0..fixed_r.cols() {
            let x = fixed_r.col(k);
            assert_eq!(direct.mul_vec(&x), via_s.mul_vec(&x));
        }
    }

    #[test]
    fn brauer_quotient_of_trivial_module() {
        // V^Q = F, the only trace is |Q| * id = 0 in characteristic p
        for p in [2u64, 3, 5] {
            let n = p as usize;
            let v = ModuleRep::trivial(pf(p), n);
            let q = PermGroup::new(n, vec![Perm::parse_cycles(
                &format!("({})", (1..=n).map(|x| x.to_string()).collect::<Vec<_>>().join(",")),
                n,
            )
            .unwrap()]);
            let rep = brauer_quotient(&v, &q).unwrap();
            assert_eq!(rep.dim_fixed, 1);
            assert_eq!(rep.dim_kernel, 0);
            assert_eq!(rep.dim_quotient, 1);
        }
    }

    #[test]
    fn brauer_rejects_non_p_group() {
        let v = ModuleRep::natural(pf(3), 3);
        let s3 = PermGroup::new(3, vec![perm("(1,2)", 3), perm("(1,2,3)", 3)]);
        assert!(matches!(brauer_quotient(&v, &s3), Err(BrauerError::NotPGroup { p: 3 })));
    }

    #[test]
    fn kernel_over_maximal_equals_kernel_over_all_proper() {
        // tiny Q where all proper subgroups are enumerable: C_3 x C_3
        let q = construct_e(3, &[2], 6).unwrap();
        let v = ModuleRep::wedge(pf(3), 6, 3);
        let report = brauer_quotient(&v, &q).unwrap();
        // all proper subgroups: trivial + the four maximal ones
        let mut cols = Vec::new();
        let mut all_proper = q.maximal_subgroups_p_group(3).unwrap();
        all_proper.push(PermGroup::trivial(6));
        for r in &all_proper {
            let f = v.fixed_space(r).unwrap();
            if f.cols() > 0 {
                cols.push(relative_trace_matrix(&v, &q, r).unwrap().mul(&f).unwrap());
            }
        }
        let full = Mat::hstack(&cols);
        assert_eq!(full.rank(), report.dim_kernel);
    }

    #[test]
    fn monomial_basis_trivial_group() {
        let spec = MonomialModuleSpec::new(pf(3), 4, 2);
        let b = monomial_orbit_basis(&spec, &PermGroup::trivial(4)).unwrap();
        assert_eq!(b.vectors.len(), 6);
    }

    #[test]
    fn monomial_basis_single_cycle() {
        let spec = MonomialModuleSpec::new(pf(3), 3, 1);
        let q = PermGroup::new(3, vec![perm("(1,2,3)", 3)]);
        let b = monomial_orbit_basis(&spec, &q).unwrap();
        assert_eq!(b.vectors.len(), 1);
        let all = WedgeVector::monomial(pf(3), 3, &[1])
            .add(&WedgeVector::monomial(pf(3), 3, &[2]))
            .add(&WedgeVector::monomial(pf(3), 3, &[3]));
        assert_eq!(b.vectors[0], all);
    }

    #[test]
    fn monomial_basis_matches_fixed_space() {
        let q = PermGroup::new(9, vec![grid_row_shift(3, 9), grid_col_shift(3, 9)]);
        let spec = MonomialModuleSpec::new(pf(3), 9, 3);
        let b = monomial_orbit_basis(&spec, &q).unwrap();
        let v = ModuleRep::wedge(pf(3), 9, 3);
        let f = v.fixed_space(&q).unwrap();
        assert_eq!(b.vectors.len(), f.cols());
        let cols: Vec<Vec<u64>> = b.vectors.iter().map(|w| w.coeffs().to_vec()).collect();
        let bm = Mat::from_cols(Field::Prime(pf(3)), 84, &cols);
        assert!(span_contains(&bm, &f));
        assert!(span_contains(&f, &bm));
    }

    #[test]
    fn trace_image_basis_extremes() {
        let q = PermGroup::new(9, vec![grid_row_shift(3, 9), grid_col_shift(3, 9)]);
        let spec = MonomialModuleSpec::new(pf(3), 9, 3);
        // R = Q: everything selected
        let (_, sel) = trace_image_basis(&spec, &q, &q).unwrap();
        assert!(sel.iter().all(|&s| s));
        // R = 1: only free orbits selected
        let (basis, sel) = trace_image_basis(&spec, &q, &PermGroup::trivial(9)).unwrap();
        for (k, &s) in sel.iter().enumerate() {
            assert_eq!(s, basis.labels[k].stab_order == 1);
        }
        // cross-check: the selected span equals the image of the trace map
        let r = PermGroup::new(9, vec![grid_row_shift(3, 9)]);
        let (basis, sel) = trace_image_basis(&spec, &q, &r).unwrap();
        let v = ModuleRep::wedge(pf(3), 9, 3);
        let fixed_r = v.fixed_space(&r).unwrap();
        let image = relative_trace_matrix(&v, &q, &r).unwrap().mul(&fixed_r).unwrap();
        let selected_cols: Vec<Vec<u64>> = basis
            .vectors
            .iter()
            .zip(sel.iter())
            .filter(|(_, &s)| s)
            .map(|(w, _)| w.coeffs().to_vec())
            .collect();
        if selected_cols.is_empty() {
            assert_eq!(image.rank(), 0);
        } else {
            let sm = Mat::from_cols(Field::Prime(pf(3)), 84, &selected_cols);
            assert_eq!(sm.rank(), image.rank());
            assert!(span_contains(&sm, &image));
        }
    }

    #[test]
    fn normalizer_check_inside_group() {
        let q = PermGroup::new(9, vec![grid_row_shift(3, 9), grid_col_shift(3, 9)]);
        let v = ModuleRep::wedge(pf(3), 9, 3);
        assert!(normalizer_action_check(&v, &q, &grid_row_shift(3, 9)).unwrap());
        assert!(normalizer_action_check(&v, &q, &Perm::identity(9)).unwrap());
    }

    #[test]
    fn hook_module_brauer_quotient_vanishes_at_sylow_two() {
        // the 10-dimensional hook module of degree 6 in characteristic 2 has
        // zero Brauer quotient at a Sylow 2-subgroup
        let hook = HookModule::new(pf(2), 6, 2).unwrap();
        let v = ModuleRep::hook_subspace(hook);
        let q = sylow_sym(6, 2);
        let rep = brauer_quotient(&v, &q).unwrap();
        assert_eq!(rep.dim_quotient, 0);
    }

    #[test]
    fn hook_module_brauer_quotient_nonzero_at_grid() {
        let hook = HookModule::new(pf(3), 9, 3).unwrap();
        let v = ModuleRep::hook_subspace(hook);
        let q = PermGroup::new(9, vec![grid_row_shift(3, 9), grid_col_shift(3, 9)]);
        let rep = brauer_quotient(&v, &q).unwrap();
        assert!(rep.dim_quotient >= 1, "got {:?}", rep.dim_quotient);
    }

    #[test]
    fn gens_module_table_rejects_bad_relations() {
        // (1,2,3) has order 3 but the matrix has order 2: not a homomorphism
        let q = PermGroup::new(3, vec![perm("(1,2,3)", 3)]);
        let mut bad = Mat::identity(Field::Prime(pf(3)), 2);
        bad.set(0, 0, 0);
        bad.set(0, 1, 1);
        bad.set(1, 0, 1);
        bad.set(1, 1, 0);
        let v = ModuleRep::from_generator_matrices(pf(3), q.clone(), vec![bad], "bad");
        let g = perm("(1,2,3)", 3);
        assert!(v.matrix_of(&g).is_err());
    }
}
