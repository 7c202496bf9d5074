//! Sparse multivariate polynomials over F_p, and matrices of them.
//! Enough arithmetic for building nilpotent operators with indeterminate
//! coefficients and certifying their rank by fraction-free elimination.

use std::collections::BTreeMap;
use std::fmt;

use super::field::{Field, PrimeField};
use super::mat::Mat;

/// Multivariate polynomial over F_p. Terms are kept in a map from exponent
/// vector to a nonzero coefficient; the BTreeMap order (lex on exponent
/// vectors) is the canonical term order.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    base: PrimeField,
    nvars: usize,
    terms: BTreeMap<Vec<u16>, u64>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl MultiPoly {
    pub fn zero(base: PrimeField, nvars: usize) -> MultiPoly {
        MultiPoly { base, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(base: PrimeField, nvars: usize, c: u64) -> MultiPoly {
        let mut poly = MultiPoly::zero(base, nvars);
        let c = c % base.p();
        if c != 0 {
            poly.terms.insert(vec![0; nvars], c);
        }
        poly
    }

    /// The variable x_i.
    pub fn var(base: PrimeField, nvars: usize, i: usize) -> MultiPoly {
        assert!(i < nvars);
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        let mut poly = MultiPoly::zero(base, nvars);
        poly.terms.insert(exps, 1);
        poly
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max().unwrap_or(0)
    }

    fn insert_term(&mut self, exps: Vec<u16>, c: u64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = self.base.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.insert_term(e.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = self.base.neg(*c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> MultiPoly {
        let c = c % self.base.p();
        if c == 0 {
            return MultiPoly::zero(self.base, self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = self.base.mul(*v, c);
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.base, self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let exps: Vec<u16> = ea.iter().zip(eb.iter()).map(|(&x, &y)| x + y).collect();
                out.insert_term(exps, self.base.mul(ca, cb));
            }
        }
        out
    }

    /// Evaluate at a point of any field of the same characteristic. F_p
    /// coefficients embed into F_{p^e} unchanged under the digit encoding.
    pub fn eval(&self, field: &Field, point: &[u64]) -> u64 {
        assert_eq!(point.len(), self.nvars);
        assert_eq!(field.char(), self.base.p());
        let mut acc = 0u64;
        for (exps, &c) in &self.terms {
            let mut t = c;
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    t = field.mul(t, field.pow(point[i], e as u64));
                }
            }
            acc = field.add(acc, t);
        }
        acc
    }

    fn leading(&self) -> Option<(&Vec<u16>, u64)> {
        self.terms.last_key_value().map(|(e, &c)| (e, c))
    }

    /// Exact division: Some(q) with self = q * d, or None when the division
    /// does not come out exact.
    pub fn exact_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        debug_assert_eq!(self.nvars, d.nvars);
        let (d_exp, d_coef) = d.leading()?;
        let d_coef_inv = self.base.inv(d_coef);
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.base, self.nvars);
        while let Some((r_exp, r_coef)) = rem.leading() {
            let mut q_exp = vec![0u16; self.nvars];
            for i in 0..self.nvars {
                if r_exp[i] < d_exp[i] {
                    return None;
                }
                q_exp[i] = r_exp[i] - d_exp[i];
            }
            let q_coef = self.base.mul(r_coef, d_coef_inv);
            // rem -= q_term * d
            for (e, &c) in &d.terms {
                let exps: Vec<u16> = e.iter().zip(q_exp.iter()).map(|(&x, &y)| x + y).collect();
                let t = self.base.mul(c, q_coef);
                rem.insert_term(exps, self.base.neg(t));
            }
            quot.insert_term(q_exp, q_coef);
        }
        Some(quot)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    write!(f, "*a{}", i + 1)?;
                } else if e > 1 {
                    write!(f, "*a{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Dense matrix of multivariate polynomials.
#[derive(Clone)]
pub struct MatPoly {
    base: PrimeField,
    nvars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<MultiPoly>,
}

impl MatPoly {
    pub fn zero(base: PrimeField, nvars: usize, rows: usize, cols: usize) -> MatPoly {
        let entries = vec![MultiPoly::zero(base, nvars); rows * cols];
        MatPoly { base, nvars, rows, cols, entries }
    }

    pub fn from_fn<F: FnMut(usize, usize) -> MultiPoly>(
        base: PrimeField,
        nvars: usize,
        rows: usize,
        cols: usize,
        mut f: F,
    ) -> MatPoly {
        let mut m = MatPoly::zero(base, nvars, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                debug_assert_eq!(e.nvars(), nvars);
                m.entries[i * cols + j] = e;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn base(&self) -> PrimeField {
        self.base
    }
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MultiPoly) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().map(|e| e.total_degree()).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &MatPoly) -> MatPoly {
        assert_eq!(self.cols, other.rows);
        let mut out = MatPoly::zero(self.base, self.nvars, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = a.mul(b);
                    let cur = out.get(i, j).add(&t);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn eval(&self, field: &Field, point: &[u64]) -> Mat {
        Mat::from_fn(field.clone(), self.rows, self.cols, |i, j| self.get(i, j).eval(field, point))
    }

    /// Rank over the rational function field F_p(a_1,..,a_n) by fraction-free
    /// (Bareiss) elimination with full pivoting. Intermediate entries are
    /// minors of the input, so every division is exact. Returns None when the
    /// working term count exceeds `term_budget`.
    pub fn bareiss_rank(&self, term_budget: usize) -> Option<usize> {
        let n = self.rows.min(self.cols);
        let mut m = self.clone();
        let mut prev = MultiPoly::constant(self.base, self.nvars, 1);
        let mut row_perm: Vec<usize> = (0..self.rows).collect();
        let mut col_perm: Vec<usize> = (0..self.cols).collect();
        let at = |m: &MatPoly, rp: &[usize], cp: &[usize], i: usize, j: usize| -> MultiPoly {
            m.get(rp[i], cp[j]).clone()
        };
        for k in 0..n {
            // pivot: fewest terms among nonzero entries of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for i in k..self.rows {
                for j in k..self.cols {
                    let t = at(&m, &row_perm, &col_perm, i, j);
                    if !t.is_zero() {
                        let sz = t.num_terms();
                        if best.map_or(true, |(bs, _, _)| sz < bs) {
                            best = Some((sz, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                return Some(k);
            };
            row_perm.swap(k, pi);
            col_perm.swap(k, pj);
            let pivot = at(&m, &row_perm, &col_perm, k, k);
            let mut total_terms = 0usize;
            for i in (k + 1)..self.rows {
                let mik = at(&m, &row_perm, &col_perm, i, k);
                for j in (k + 1)..self.cols {
                    let mij = at(&m, &row_perm, &col_perm, i, j);
                    let mkj = at(&m, &row_perm, &col_perm, k, j);
                    let num = mij.mul(&pivot).sub(&mik.mul(&mkj));
                    let q = num
                        .exact_div(&prev)
                        .expect("Bareiss division is exact on minors");
                    total_terms += q.num_terms();
                    m.set(row_perm[i], col_perm[j], q);
                }
                m.set(row_perm[i], col_perm[k], MultiPoly::zero(self.base, self.nvars));
            }
            if total_terms > term_budget {
                return None;
            }
            prev = pivot;
        }
        Some(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn poly_arith_basics() {
        let b = base();
        let x = MultiPoly::var(b, 2, 0);
        let y = MultiPoly::var(b, 2, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        // (x+y)^2 = x^2 + 2xy + y^2 over F_3
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(sq.total_degree(), 2);
        // Frobenius: (x+y)^3 = x^3 + y^3 in characteristic 3
        let cube = sq.mul(&s);
        let expect = x.mul(&x).mul(&x).add(&y.mul(&y).mul(&y));
        assert_eq!(cube, expect);
    }

    #[test]
    fn exact_division_roundtrip() {
        let b = base();
        let x = MultiPoly::var(b, 2, 0);
        let y = MultiPoly::var(b, 2, 1);
        let a = x.add(&y.scale(2));
        let c = x.mul(&x).add(&y).add(&MultiPoly::constant(b, 2, 1));
        let prod = a.mul(&c);
        assert_eq!(prod.exact_div(&a), Some(c.clone()));
        assert_eq!(prod.exact_div(&c), Some(a.clone()));
        let off = prod.add(&MultiPoly::constant(b, 2, 1));
        assert_eq!(off.exact_div(&a), None);
    }

    #[test]
    fn eval_matches_substitution() {
        let b = base();
        let x = MultiPoly::var(b, 2, 0);
        let y = MultiPoly::var(b, 2, 1);
        let poly = x.mul(&x).add(&x.mul(&y)).add(&MultiPoly::constant(b, 2, 2));
        let f = Field::prime(3).unwrap();
        // at (1, 2): 1 + 2 + 2 = 5 = 2 mod 3
        assert_eq!(poly.eval(&f, &[1, 2]), 2);
    }

    #[test]
    fn bareiss_full_rank_and_singular() {
        let b = base();
        // [[x, 1], [1, x]] has determinant x^2 - 1, generically invertible
        let x = MultiPoly::var(b, 1, 0);
        let one = MultiPoly::constant(b, 1, 1);
        let m = MatPoly::from_fn(b, 1, 2, 2, |i, j| {
            if i == j {
                x.clone()
            } else {
                one.clone()
            }
        });
        assert_eq!(m.bareiss_rank(usize::MAX), Some(2));
        // [[x, x], [x, x]] has rank 1
        let m2 = MatPoly::from_fn(b, 1, 2, 2, |_, _| x.clone());
        assert_eq!(m2.bareiss_rank(usize::MAX), Some(1));
    }
}
