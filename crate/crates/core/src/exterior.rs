//! Wedge powers of the natural permutation module and the hook Specht
//! modules inside them: the monomial basis of increasing multi-indices, the
//! signed symmetric-group action, the boundary maps, the standard basis of
//! the kernel, and the explicit fixed vectors used in the grid computations.

use std::fmt;

use crate::ff_linalg::{Field, Mat, PrimeField};
use crate::permgrp::{grid_row_shift, Perm};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExteriorError {
    BadMultiIndex(String),
    DegreeMismatch { perm: usize, n: usize },
    ShapeMismatch,
    RankOutOfRange { r: usize, n: usize },
    NotInKernel,
    BadParameter(String),
}

impl fmt::Display for ExteriorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExteriorError::BadMultiIndex(s) => write!(f, "bad multi-index: {}", s),
            ExteriorError::DegreeMismatch { perm, n } => {
                write!(f, "permutation degree {} does not match n = {}", perm, n)
            }
            ExteriorError::ShapeMismatch => write!(f, "wedge vectors have different shapes"),
            ExteriorError::RankOutOfRange { r, n } => {
                write!(f, "wedge degree {} out of range for n = {}", r, n)
            }
            ExteriorError::NotInKernel => {
                write!(f, "vector is not annihilated by the boundary map")
            }
            ExteriorError::BadParameter(s) => write!(f, "{}", s),
        }
    }
}

impl std::error::Error for ExteriorError {}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// A strictly increasing tuple (i_1,..,i_r) with 1 <= i_1 < .. < i_r <= n.
/// Ranked lexicographically among all such tuples.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex {
    n: u32,
    indices: Vec<u32>,
}

impl MultiIndex {
    pub fn new(n: usize, indices: Vec<u32>) -> Result<MultiIndex, ExteriorError> {
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return Err(ExteriorError::BadMultiIndex(format!(
                    "{:?} is not strictly increasing",
                    indices
                )));
            }
        }
        if let (Some(&first), Some(&last)) = (indices.first(), indices.last()) {
            if first < 1 || last as usize > n {
                return Err(ExteriorError::BadMultiIndex(format!(
                    "{:?} out of range 1..{}",
                    indices, n
                )));
            }
        }
        Ok(MultiIndex { n: n as u32, indices })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// 1-based entries.
    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn contains(&self, point: u32) -> bool {
        self.indices.binary_search(&point).is_ok()
    }

    /// Lexicographic rank among the C(n, r) increasing r-tuples.
    pub fn rank(&self) -> usize {
        let n = self.n as usize;
        let r = self.indices.len();
        let mut rank = 0u64;
        let mut prev = 0usize;
        for (a, &i) in self.indices.iter().enumerate() {
            for x in (prev + 1)..(i as usize) {
                rank += binomial(n - x, r - a - 1);
            }
            prev = i as usize;
        }
        rank as usize
    }

    pub fn unrank(n: usize, r: usize, mut rank: u64) -> MultiIndex {
        debug_assert!(rank < binomial(n, r));
        let mut indices = Vec::with_capacity(r);
        let mut x = 1usize;
        for a in 0..r {
            loop {
                let below = binomial(n - x, r - a - 1);
                if rank < below {
                    indices.push(x as u32);
                    x += 1;
                    break;
                }
                rank -= below;
                x += 1;
            }
        }
        MultiIndex { n: n as u32, indices }
    }

    /// All r-element multi-indices in rank order.
    pub fn all(n: usize, r: usize) -> Vec<MultiIndex> {
        (0..binomial(n, r)).map(|t| MultiIndex::unrank(n, r, t)).collect()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.indices.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, "]")
    }
}

/// Sort a tuple of points, counting inversions; None when a point repeats.
fn sort_with_sign(points: &[u32]) -> Option<(Vec<u32>, bool)> {
    let mut v = points.to_vec();
    let mut swaps = 0usize;
    // insertion sort; tuples are short
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
        if j > 0 && v[j - 1] == v[j] {
            return None;
        }
    }
    Some((v, swaps % 2 == 1))
}

/// An element of the r-th wedge power of the natural n-dimensional module
/// over F_p, as a dense coefficient vector on the monomial basis.
#[derive(Clone, PartialEq, Eq)]
pub struct WedgeVector {
    p: PrimeField,
    n: usize,
    r: usize,
    coeffs: Vec<u64>,
}

impl WedgeVector {
    pub fn zero(p: PrimeField, n: usize, r: usize) -> WedgeVector {
        WedgeVector { p, n, r, coeffs: vec![0; binomial(n, r) as usize] }
    }

    /// The monomial with the given (possibly unsorted) points: sorting
    /// contributes the sign, repeated points give zero.
    pub fn monomial(p: PrimeField, n: usize, points: &[u32]) -> WedgeVector {
        let mut v = WedgeVector::zero(p, n, points.len());
        if let Some((sorted, odd)) = sort_with_sign(points) {
            let idx = MultiIndex::new(n, sorted).expect("sorted points form a multi-index");
            v.coeffs[idx.rank()] = if odd { p.from_int(-1) } else { 1 % p.p() };
        }
        v
    }

    pub fn basis(p: PrimeField, idx: &MultiIndex) -> WedgeVector {
        let mut v = WedgeVector::zero(p, idx.n(), idx.len());
        v.coeffs[idx.rank()] = 1;
        v
    }

    /// The scalar c in the rank-0 wedge power.
    pub fn scalar(p: PrimeField, n: usize, c: u64) -> WedgeVector {
        let mut v = WedgeVector::zero(p, n, 0);
        v.coeffs[0] = c % p.p();
        v
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn prime_field(&self) -> PrimeField {
        self.p
    }
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, idx: &MultiIndex) -> u64 {
        debug_assert_eq!(idx.n(), self.n);
        debug_assert_eq!(idx.len(), self.r);
        self.coeffs[idx.rank()]
    }

    pub fn set_coeff(&mut self, idx: &MultiIndex, c: u64) {
        self.coeffs[idx.rank()] = c % self.p.p();
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &WedgeVector) -> WedgeVector {
        assert!(self.same_shape(other));
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a = self.p.add(*a, b);
        }
        out
    }

    pub fn sub(&self, other: &WedgeVector) -> WedgeVector {
        assert!(self.same_shape(other));
        let mut out = self.clone();
        for (a, &b) in out.coeffs.iter_mut().zip(other.coeffs.iter()) {
            *a = self.p.sub(*a, b);
        }
        out
    }

    pub fn scale(&self, c: u64) -> WedgeVector {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = self.p.mul(*a, c);
        }
        out
    }

    pub fn neg(&self) -> WedgeVector {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a = self.p.neg(*a);
        }
        out
    }

    fn same_shape(&self, other: &WedgeVector) -> bool {
        self.p == other.p && self.n == other.n && self.r == other.r
    }

    /// Monomial basis indices with nonzero coefficient, in rank order.
    pub fn support(&self) -> Vec<MultiIndex> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(t, _)| MultiIndex::unrank(self.n, self.r, t as u64))
            .collect()
    }

    /// Signed permutation action: sigma . e_i = sign * e_{sort(sigma(i))}.
    pub fn act(&self, sigma: &Perm) -> Result<WedgeVector, ExteriorError> {
        if sigma.degree() != self.n {
            return Err(ExteriorError::DegreeMismatch { perm: sigma.degree(), n: self.n });
        }
        let mut out = WedgeVector::zero(self.p, self.n, self.r);
        for (t, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let idx = MultiIndex::unrank(self.n, self.r, t as u64);
            let images: Vec<u32> =
                idx.indices().iter().map(|&x| sigma.apply(x as usize - 1) as u32 + 1).collect();
            let (sorted, odd) = sort_with_sign(&images).expect("permutation images are distinct");
            let target = MultiIndex::new(self.n, sorted).unwrap().rank();
            let signed = if odd { self.p.neg(c) } else { c };
            out.coeffs[target] = self.p.add(out.coeffs[target], signed);
        }
        Ok(out)
    }

    /// The boundary map: alternating sum over omitted factors. Defined for
    /// r >= 1; the image of a 1-wedge is a scalar.
    pub fn delta(&self) -> WedgeVector {
        assert!(self.r >= 1, "boundary map needs r >= 1");
        let mut out = WedgeVector::zero(self.p, self.n, self.r - 1);
        for (t, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let idx = MultiIndex::unrank(self.n, self.r, t as u64);
            for a in 0..self.r {
                let mut omitted: Vec<u32> = idx.indices().to_vec();
                omitted.remove(a);
                let target = MultiIndex::new(self.n, omitted).unwrap().rank();
                let signed = if a % 2 == 0 { c } else { self.p.neg(c) };
                out.coeffs[target] = self.p.add(out.coeffs[target], signed);
            }
        }
        out
    }

    /// Wedge product; a factor of degree 0 acts as a scalar.
    pub fn wedge(&self, other: &WedgeVector) -> WedgeVector {
        assert_eq!(self.n, other.n);
        assert_eq!(self.p, other.p);
        let mut out = WedgeVector::zero(self.p, self.n, self.r + other.r);
        if out.coeffs.is_empty() {
            return out;
        }
        for (s, &cs) in self.coeffs.iter().enumerate() {
            if cs == 0 {
                continue;
            }
            let si = MultiIndex::unrank(self.n, self.r, s as u64);
            for (t, &ct) in other.coeffs.iter().enumerate() {
                if ct == 0 {
                    continue;
                }
                let ti = MultiIndex::unrank(self.n, other.r, t as u64);
                let mut points: Vec<u32> = si.indices().to_vec();
                points.extend_from_slice(ti.indices());
                if let Some((sorted, odd)) = sort_with_sign(&points) {
                    let target = MultiIndex::new(self.n, sorted).unwrap().rank();
                    let c = self.p.mul(cs, ct);
                    let signed = if odd { self.p.neg(c) } else { c };
                    out.coeffs[target] = self.p.add(out.coeffs[target], signed);
                }
            }
        }
        out
    }

    /// The standard bilinear form: monomials are orthonormal.
    pub fn dot(&self, other: &WedgeVector) -> Result<u64, ExteriorError> {
        if !self.same_shape(other) {
            return Err(ExteriorError::ShapeMismatch);
        }
        let mut acc = 0u64;
        for (&a, &b) in self.coeffs.iter().zip(other.coeffs.iter()) {
            acc = self.p.add(acc, self.p.mul(a, b));
        }
        Ok(acc)
    }
}

impl fmt::Display for WedgeVector {
    /// Text form `c1*[i1,..,ir] + c2*[..]`, coefficients in 0..p-1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{:?}", c, MultiIndex::unrank(self.n, self.r, t as u64))?;
        }
        Ok(())
    }
}

impl fmt::Debug for WedgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Image of the monomial at idx under sigma: the sorted target index and
/// whether the sorting permutation is odd.
pub fn signed_image(sigma: &Perm, idx: &MultiIndex) -> (MultiIndex, bool) {
    let images: Vec<u32> =
        idx.indices().iter().map(|&x| sigma.apply(x as usize - 1) as u32 + 1).collect();
    let (sorted, odd) = sort_with_sign(&images).expect("permutation images are distinct");
    (MultiIndex::new(idx.n(), sorted).unwrap(), odd)
}

/// Matrix of the boundary map from wedge degree r to r-1.
pub fn delta_matrix(p: PrimeField, n: usize, r: usize) -> Mat {
    let rows = binomial(n, r - 1) as usize;
    let cols = binomial(n, r) as usize;
    let mut m = Mat::zero(Field::Prime(p), rows, cols);
    for t in 0..cols {
        let v = WedgeVector::basis(p, &MultiIndex::unrank(n, r, t as u64)).delta();
        for (i, &c) in v.coeffs().iter().enumerate() {
            if c != 0 {
                m.set(i, t, c);
            }
        }
    }
    m
}

/// Matrix of the signed action of sigma on wedge degree r.
pub fn act_matrix(p: PrimeField, n: usize, r: usize, sigma: &Perm) -> Mat {
    let dim = binomial(n, r) as usize;
    let mut m = Mat::zero(Field::Prime(p), dim, dim);
    for t in 0..dim {
        let idx = MultiIndex::unrank(n, r, t as u64);
        let images: Vec<u32> =
            idx.indices().iter().map(|&x| sigma.apply(x as usize - 1) as u32 + 1).collect();
        let (sorted, odd) = sort_with_sign(&images).unwrap();
        let target = MultiIndex::new(n, sorted).unwrap().rank();
        m.set(target, t, if odd { p.from_int(-1) } else { 1 % p.p() });
    }
    m
}

/// Multi-indices avoiding the point 1, in rank order: the index set of the
/// standard basis.
pub fn standard_index_set(n: usize, r: usize) -> Vec<MultiIndex> {
    MultiIndex::all(n, r).into_iter().filter(|i| i.indices()[0] > 1).collect()
}

/// Express a kernel element in the standard basis: the coefficients are
/// exactly the monomial coefficients on indices avoiding 1.
pub fn rewrite_to_standard(
    u: &WedgeVector,
) -> Result<Vec<(MultiIndex, u64)>, ExteriorError> {
    if !u.delta().is_zero() {
        return Err(ExteriorError::NotInKernel);
    }
    Ok(standard_index_set(u.n(), u.r())
        .into_iter()
        .filter_map(|j| {
            let c = u.coeff(&j);
            if c != 0 {
                Some((j, c))
            } else {
                None
            }
        })
        .collect())
}

/// Checks delta(u ^ v) = delta(u) ^ v + (-1)^r u ^ delta(v).
pub fn product_rule_holds(u: &WedgeVector, v: &WedgeVector) -> bool {
    let lhs = u.wedge(v).delta();
    let mut rhs = u.delta().wedge(v);
    let second = u.wedge(&v.delta());
    rhs = if u.r() % 2 == 0 { rhs.add(&second) } else { rhs.sub(&second) };
    lhs == rhs
}

/// The hook Specht module of wedge degree r inside the n-dimensional
/// natural module over F_p, presented by its standard basis: the columns
/// are the boundaries of e_1 ^ e_j for j avoiding 1.
#[derive(Clone)]
pub struct HookModule {
    p: PrimeField,
    n: usize,
    r: usize,
    j_set: Vec<MultiIndex>,
    basis: Mat,
}

impl HookModule {
    pub fn new(p: PrimeField, n: usize, r: usize) -> Result<HookModule, ExteriorError> {
        if r < 1 || r > n - 1 {
            return Err(ExteriorError::RankOutOfRange { r, n });
        }
        let j_set = standard_index_set(n, r);
        debug_assert_eq!(j_set.len() as u64, binomial(n - 1, r));
        let cols: Vec<Vec<u64>> = j_set
            .iter()
            .map(|j| {
                let mut points = vec![1u32];
                points.extend_from_slice(j.indices());
                WedgeVector::monomial(p, n, &points).delta().coeffs().to_vec()
            })
            .collect();
        let basis = Mat::from_cols(Field::Prime(p), binomial(n, r) as usize, &cols);
        Ok(HookModule { p, n, r, j_set, basis })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn r(&self) -> usize {
        self.r
    }
    pub fn prime_field(&self) -> PrimeField {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.j_set.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Basis matrix: ambient_dim x dim, columns independent, all in ker delta.
    pub fn basis_matrix(&self) -> &Mat {
        &self.basis
    }

    pub fn standard_indices(&self) -> &[MultiIndex] {
        &self.j_set
    }

    pub fn standard_basis_vector(&self, k: usize) -> WedgeVector {
        let mut v = WedgeVector::zero(self.p, self.n, self.r);
        for i in 0..self.basis.rows() {
            let c = self.basis.get(i, k);
            if c != 0 {
                v.set_coeff(&MultiIndex::unrank(self.n, self.r, i as u64), c);
            }
        }
        v
    }

    pub fn contains(&self, v: &WedgeVector) -> bool {
        v.n() == self.n && v.r() == self.r && v.delta().is_zero()
    }

    /// Standard-basis coordinates, aligned with `standard_indices`.
    pub fn coords(&self, v: &WedgeVector) -> Result<Vec<u64>, ExteriorError> {
        if !self.contains(v) {
            return Err(ExteriorError::NotInKernel);
        }
        Ok(self.j_set.iter().map(|j| v.coeff(j)).collect())
    }

    pub fn from_coords(&self, x: &[u64]) -> WedgeVector {
        assert_eq!(x.len(), self.dim());
        let mut v = WedgeVector::zero(self.p, self.n, self.r);
        let col = self.basis.mul_vec(x);
        for (i, c) in col.into_iter().enumerate() {
            if c != 0 {
                v.set_coeff(&MultiIndex::unrank(self.n, self.r, i as u64), c);
            }
        }
        v
    }

    /// The action of sigma in standard-basis coordinates: act on each basis
    /// column, then read coordinates off with the rewriting rule.
    pub fn gen_matrix(&self, sigma: &Perm) -> Result<Mat, ExteriorError> {
        let dim = self.dim();
        let mut cols = Vec::with_capacity(dim);
        for k in 0..dim {
            let moved = self.standard_basis_vector(k).act(sigma)?;
            cols.push(self.coords(&moved)?);
        }
        Ok(Mat::from_cols(Field::Prime(self.p), dim, &cols))
    }
}

/// The fixed wedge built from the columns of the p x p grid: the product
/// over c of (e_c + e_{p+c} + .. + e_{(p-1)p+c}), an element of wedge degree
/// p over n = kp coordinates. Every factor has coefficient sum p = 0, and
/// the whole vector is fixed by both grid shifts and by anything supported
/// off the grid.
pub fn vector_w(p: u64, k: usize) -> Result<WedgeVector, ExteriorError> {
    let pf = PrimeField::new(p).map_err(|e| ExteriorError::BadParameter(e.to_string()))?;
    if k < p as usize {
        return Err(ExteriorError::BadParameter(format!("need k >= p, got k = {}", k)));
    }
    let n = k * p as usize;
    let pu = p as usize;
    let mut out = WedgeVector::zero(pf, n, pu);
    let total = pu.pow(pu as u32);
    let mut points = vec![0u32; pu];
    for code in 0..total {
        let mut c = code;
        for a in 0..pu {
            let row = c % pu;
            c /= pu;
            points[a] = (row * pu + a + 1) as u32;
        }
        out = out.add(&WedgeVector::monomial(pf, n, &points));
    }
    Ok(out)
}

/// The alternating sum over subsets X of {1..p} of the monomials that take
/// row 1 on X and row m off X. Lies in the kernel of the boundary map, is
/// fixed by the row shift, and its unique monomial avoiding {1..p} is
/// e_{(m-1)p+1} ^ .. ^ e_{(m-1)p+p} with coefficient +1.
pub fn vector_z(p: u64, m: usize, n: usize) -> Result<WedgeVector, ExteriorError> {
    let pf = PrimeField::new(p).map_err(|e| ExteriorError::BadParameter(e.to_string()))?;
    let pu = p as usize;
    if m < 2 || m > pu {
        return Err(ExteriorError::BadParameter(format!("need 2 <= m <= p, got m = {}", m)));
    }
    if n < pu * pu {
        return Err(ExteriorError::BadParameter(format!("need n >= p^2, got n = {}", n)));
    }
    let mut out = WedgeVector::zero(pf, n, pu);
    for mask in 0u32..(1 << pu) {
        let mut points = vec![0u32; pu];
        for a in 0..pu {
            points[a] = if mask >> a & 1 == 1 {
                (a + 1) as u32
            } else {
                ((m - 1) * pu + a + 1) as u32
            };
        }
        let term = WedgeVector::monomial(pf, n, &points);
        out = if mask.count_ones() % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    Ok(out)
}

/// Sum of the row-shift translates of the standard basis vector at j:
/// sum over l of alpha^l . delta(e_1 ^ e_j).
pub fn vector_wj(p: u64, j: &MultiIndex, n: usize) -> Result<WedgeVector, ExteriorError> {
    let pf = PrimeField::new(p).map_err(|e| ExteriorError::BadParameter(e.to_string()))?;
    let pu = p as usize;
    if n < pu * pu {
        return Err(ExteriorError::BadParameter(format!("need n >= p^2, got n = {}", n)));
    }
    if j.n() != n || j.len() != pu {
        return Err(ExteriorError::BadMultiIndex(format!("{:?} is not a p-index for n", j)));
    }
    if j.contains(1) {
        return Err(ExteriorError::BadMultiIndex("index must avoid the point 1".into()));
    }
    let mut points = vec![1u32];
    points.extend_from_slice(j.indices());
    let base = WedgeVector::monomial(pf, n, &points).delta();
    let alpha = grid_row_shift(p, n);
    let mut out = WedgeVector::zero(pf, n, pu);
    let mut translate = base;
    for _ in 0..pu {
        out = out.add(&translate);
        translate = translate.act(&alpha)?;
    }
    Ok(out)
}

/// Split v into components by c = |support of the monomial inside {1..p}|:
/// returns components 0..=p. Requires wedge degree p.
pub fn filtration_components(v: &WedgeVector) -> Vec<WedgeVector> {
    let pu = v.prime_field().p() as usize;
    assert_eq!(v.r(), pu, "filtration lives in wedge degree p");
    let mut out = vec![WedgeVector::zero(v.prime_field(), v.n(), v.r()); pu + 1];
    for idx in v.support() {
        let c = idx.indices().iter().filter(|&&x| x as usize <= pu).count();
        out[c].set_coeff(&idx, v.coeff(&idx));
    }
    out
}

/// Membership in the filtration step: in the kernel of the boundary map and
/// supported on components >= c.
pub fn in_filtration_step(v: &WedgeVector, c: usize) -> bool {
    if !v.delta().is_zero() {
        return false;
    }
    let comps = filtration_components(v);
    comps[..c].iter().all(|w| w.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgrp::grid_col_shift;

    fn pf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn multiindex_rank_unrank_roundtrip() {
        for n in 1..=8usize {
            for r in 0..=n {
                let all = MultiIndex::all(n, r);
                assert_eq!(all.len() as u64, binomial(n, r));
                for (t, idx) in all.iter().enumerate() {
                    assert_eq!(idx.rank(), t);
                    assert_eq!(&MultiIndex::unrank(n, r, t as u64), idx);
                }
                // lexicographic order
                for w in all.windows(2) {
                    assert!(w[0].indices() < w[1].indices());
                }
            }
        }
    }

    #[test]
    fn act_transposition_on_its_own_wedge() {
        let swap = Perm::parse_cycles("(1,2)", 3).unwrap();
        for p in [2u64, 3] {
            let v = WedgeVector::monomial(pf(p), 3, &[1, 2]);
            let moved = v.act(&swap).unwrap();
            assert_eq!(moved, v.neg());
            if p == 2 {
                assert_eq!(moved, v);
            } else {
                assert_eq!(moved, v.scale(2));
            }
        }
    }

    #[test]
    fn act_identity_and_three_cycle() {
        let v = WedgeVector::monomial(pf(3), 3, &[1, 2]);
        let id = Perm::identity(3);
        assert_eq!(v.act(&id).unwrap(), v);
        let rho = Perm::parse_cycles("(1,2,3)", 3).unwrap();
        let moved = v.act(&rho).unwrap();
        assert_eq!(moved, WedgeVector::monomial(pf(3), 3, &[2, 3]));
        // degree mismatch is an error
        assert!(v.act(&Perm::identity(4)).is_err());
    }

    #[test]
    fn act_is_a_left_action() {
        let a = Perm::parse_cycles("(1,2,3,4)", 5).unwrap();
        let b = Perm::parse_cycles("(2,5)", 5).unwrap();
        let v = WedgeVector::monomial(pf(5), 5, &[1, 3, 4]).add(&WedgeVector::monomial(
            pf(5),
            5,
            &[2, 3, 5],
        ));
        let lhs = v.act(&a.mul(&b)).unwrap();
        let rhs = v.act(&b).unwrap().act(&a).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_of_pair() {
        // boundary of e_1 ^ e_2 is e_2 - e_1
        let v = WedgeVector::monomial(pf(3), 3, &[1, 2]).delta();
        let e1 = MultiIndex::new(3, vec![1]).unwrap();
        let e2 = MultiIndex::new(3, vec![2]).unwrap();
        assert_eq!(v.coeff(&e2), 1);
        assert_eq!(v.coeff(&e1), 2);
    }

    #[test]
    fn delta_of_single_is_scalar_one() {
        let v = WedgeVector::monomial(pf(5), 4, &[3]).delta();
        assert_eq!(v.r(), 0);
        assert_eq!(v.coeffs(), &[1]);
    }

    #[test]
    fn delta_of_triple() {
        let v = WedgeVector::monomial(pf(7), 4, &[1, 2, 3]).delta();
        assert_eq!(v.coeff(&MultiIndex::new(4, vec![2, 3]).unwrap()), 1);
        assert_eq!(v.coeff(&MultiIndex::new(4, vec![1, 3]).unwrap()), 6);
        assert_eq!(v.coeff(&MultiIndex::new(4, vec![1, 2]).unwrap()), 1);
    }

    #[test]
    fn delta_squared_zero_spot() {
        let v = WedgeVector::monomial(pf(3), 6, &[1, 3, 5]).add(&WedgeVector::monomial(
            pf(3),
            6,
            &[2, 4, 6],
        ));
        assert!(v.delta().delta().is_zero());
    }

    #[test]
    fn product_rule_examples() {
        let u = WedgeVector::monomial(pf(3), 4, &[1]);
        let v = WedgeVector::monomial(pf(3), 4, &[2]);
        assert!(product_rule_holds(&u, &v));
        let u = WedgeVector::monomial(pf(3), 4, &[1, 2]);
        let v = WedgeVector::monomial(pf(3), 4, &[3]);
        assert!(product_rule_holds(&u, &v));
        // overlapping supports give zero on both sides but are still checked
        let u = WedgeVector::monomial(pf(3), 4, &[1, 2]);
        let v = WedgeVector::monomial(pf(3), 4, &[2]);
        assert!(product_rule_holds(&u, &v));
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(HookModule::new(pf(3), 9, 3).unwrap().dim(), 56);
        assert_eq!(HookModule::new(pf(5), 10, 2).unwrap().dim(), 36);
        assert!(HookModule::new(pf(3), 4, 4).is_err());
    }

    #[test]
    fn hook_degree_one_basis() {
        // basis {e_j - e_1 : j = 2..n}
        let h = HookModule::new(pf(5), 4, 1).unwrap();
        assert_eq!(h.dim(), 3);
        for (k, j) in h.standard_indices().iter().enumerate() {
            let v = h.standard_basis_vector(k);
            let expect = WedgeVector::monomial(pf(5), 4, j.indices())
                .sub(&WedgeVector::monomial(pf(5), 4, &[1]));
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn hook_basis_columns_in_kernel_and_independent() {
        let h = HookModule::new(pf(3), 6, 2).unwrap();
        assert_eq!(h.basis_matrix().rank(), h.dim());
        for k in 0..h.dim() {
            assert!(h.contains(&h.standard_basis_vector(k)));
        }
    }

    #[test]
    fn rewrite_standard_basis_element() {
        let u = WedgeVector::monomial(pf(3), 4, &[1, 2, 3]).delta();
        let mu = rewrite_to_standard(&u).unwrap();
        assert_eq!(mu.len(), 1);
        assert_eq!(mu[0].0, MultiIndex::new(4, vec![2, 3]).unwrap());
        assert_eq!(mu[0].1, 1);
        let zero = WedgeVector::zero(pf(3), 4, 2);
        assert!(rewrite_to_standard(&zero).unwrap().is_empty());
        // non-kernel input is an error
        let bad = WedgeVector::monomial(pf(3), 4, &[1, 2]);
        assert!(rewrite_to_standard(&bad).is_err());
    }

    #[test]
    fn rewrite_reconstruction() {
        // reconstruct u = sum mu_j delta(e_1 ^ e_j) for a kernel element
        let h = HookModule::new(pf(3), 5, 2).unwrap();
        let u = h.standard_basis_vector(0).add(&h.standard_basis_vector(3).scale(2));
        let mu = rewrite_to_standard(&u).unwrap();
        let mut rebuilt = WedgeVector::zero(pf(3), 5, 2);
        for (j, c) in mu {
            let mut points = vec![1u32];
            points.extend_from_slice(j.indices());
            rebuilt = rebuilt.add(&WedgeVector::monomial(pf(3), 5, &points).delta().scale(c));
        }
        assert_eq!(rebuilt, u);
    }

    #[test]
    fn vector_w_small_cases() {
        // p = 2, k = 2: (e1 + e3) ^ (e2 + e4)
        let w = vector_w(2, 2).unwrap();
        assert_eq!(w.coeff(&MultiIndex::new(4, vec![1, 2]).unwrap()), 1);
        assert_eq!(w.support().len(), 4);
        // p = 3, k = 3: 27 monomials, all nonzero
        let w = vector_w(3, 3).unwrap();
        assert_eq!(w.support().len(), 27);
        assert_eq!(w.coeff(&MultiIndex::new(9, vec![1, 2, 3]).unwrap()), 1);
        assert!(vector_w(3, 2).is_err());
    }

    #[test]
    fn vector_w_fixed_by_grid_shifts() {
        let w = vector_w(3, 3).unwrap();
        assert!(w.delta().is_zero());
        assert_eq!(w.act(&grid_row_shift(3, 9)).unwrap(), w);
        assert_eq!(w.act(&grid_col_shift(3, 9)).unwrap(), w);
        // k = 4: also fixed by a permutation of the tail
        let w = vector_w(3, 4).unwrap();
        let tail = Perm::parse_cycles("(10,11,12)", 12).unwrap();
        assert_eq!(w.act(&tail).unwrap(), w);
    }

    #[test]
    fn vector_z_structure() {
        let z = vector_z(3, 2, 9).unwrap();
        assert_eq!(z.support().len(), 8);
        assert_eq!(z.coeff(&MultiIndex::new(9, vec![4, 5, 6]).unwrap()), 1);
        assert_eq!(z.coeff(&MultiIndex::new(9, vec![1, 2, 3]).unwrap()), 2);
        assert!(z.delta().is_zero());
        assert_eq!(z.act(&grid_row_shift(3, 9)).unwrap(), z);
        assert!(vector_z(3, 1, 9).is_err());
        assert!(vector_z(3, 2, 8).is_err());
    }

    #[test]
    fn vector_wj_properties() {
        let j = MultiIndex::new(9, vec![2, 3, 4]).unwrap();
        let w = vector_wj(3, &j, 9).unwrap();
        assert!(w.delta().is_zero());
        assert_eq!(w.act(&grid_row_shift(3, 9)).unwrap(), w);
        // rewriting round-trips
        let mu = rewrite_to_standard(&w).unwrap();
        let mut rebuilt = WedgeVector::zero(pf(3), 9, 3);
        for (j, c) in mu {
            let mut points = vec![1u32];
            points.extend_from_slice(j.indices());
            rebuilt = rebuilt.add(&WedgeVector::monomial(pf(3), 9, &points).delta().scale(c));
        }
        assert_eq!(rebuilt, w);
        // the point 1 must be avoided
        let bad = MultiIndex::new(9, vec![1, 2, 3]).unwrap();
        assert!(vector_wj(3, &bad, 9).is_err());
    }

    #[test]
    fn filtration_split() {
        let v = WedgeVector::monomial(pf(3), 9, &[1, 2, 4]);
        let comps = filtration_components(&v);
        for (c, comp) in comps.iter().enumerate() {
            assert_eq!(comp.is_zero(), c != 2);
        }
        let zero = WedgeVector::zero(pf(3), 9, 3);
        assert!(filtration_components(&zero).iter().all(|w| w.is_zero()));
        // w has a nonzero component at c = 3, namely e_1 ^ e_2 ^ e_3
        let w = vector_w(3, 3).unwrap();
        let comps = filtration_components(&w);
        assert!(!comps[3].is_zero());
    }

    #[test]
    fn bilinear_form_values() {
        let i = MultiIndex::new(9, vec![1, 2, 3]).unwrap();
        let j = MultiIndex::new(9, vec![1, 2, 4]).unwrap();
        let ei = WedgeVector::basis(pf(3), &i);
        let ej = WedgeVector::basis(pf(3), &j);
        assert_eq!(ei.dot(&ei).unwrap(), 1);
        assert_eq!(ei.dot(&ej).unwrap(), 0);
        let w = vector_w(3, 3).unwrap();
        assert_eq!(w.dot(&ei).unwrap(), 1);
    }
}
