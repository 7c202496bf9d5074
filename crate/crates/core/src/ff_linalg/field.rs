//! Prime fields F_p and extension fields F_{p^e} with a uniform element
//! encoding: every element is a `u64`. A prime-field element is its residue;
//! an extension-field element is its coefficient vector packed in base p,
//! so the codes 0..p^e-1 are exactly the field elements.

use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    DegreeZero,
    FieldTooLarge { p: u64, e: usize },
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{} is not prime", p),
            FieldError::DegreeZero => write!(f, "extension degree must be at least 1"),
            FieldError::FieldTooLarge { p, e } => {
                write!(f, "field of order {}^{} does not fit in u64", p, e)
            }
        }
    }
}

impl std::error::Error for FieldError {}

/// Trial division; sound for all p ≤ 2^31 - 1, which is the supported range.
fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        // a, b < 2^31 so the product fits in u64.
        (a * b) % self.p
    }

    pub fn pow(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1 % self.p;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero in F_{}", self.p);
        self.pow(a % self.p, self.p - 2)
    }

    /// Reduce a signed integer into 0..p-1.
    pub fn from_int(&self, a: i64) -> u64 {
        let p = self.p as i64;
        (((a % p) + p) % p) as u64
    }
}

/// Discrete log / antilog tables over the multiplicative group, built when
/// the field is small enough. Multiplication becomes two lookups and an add.
#[derive(Debug)]
struct LogTables {
    // log[x] for x in 1..q (index 0 unused)
    log: Vec<u32>,
    // exp[i] = g^i for i in 0..2(q-1), doubled so index sums need no reduction
    exp: Vec<u64>,
}

const TABLE_CAP: u64 = 1 << 20;

#[derive(Clone)]
pub struct ExtField {
    p: u64,
    e: usize,
    q: u64,
    /// Monic irreducible modulus, coefficients low-to-high, length e+1.
    modulus: Vec<u64>,
    base: PrimeField,
    tables: Option<Arc<LogTables>>,
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExtField(p={}, e={}, modulus={:?})", self.p, self.e, self.modulus)
    }
}

impl PartialEq for ExtField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}
impl Eq for ExtField {}

impl ExtField {
    /// Builds F_{p^e} with the deterministic modulus: the first monic
    /// irreducible of degree e when non-leading coefficient vectors are
    /// enumerated as base-p integers (constant term least significant).
    pub fn new(p: u64, e: usize) -> Result<Self, FieldError> {
        let base = PrimeField::new(p)?;
        if e == 0 {
            return Err(FieldError::DegreeZero);
        }
        let mut q: u64 = 1;
        for _ in 0..e {
            q = q.checked_mul(p).ok_or(FieldError::FieldTooLarge { p, e })?;
            if q > (1 << 62) {
                return Err(FieldError::FieldTooLarge { p, e });
            }
        }
        let modulus = least_irreducible(base, e, q);
        let mut fld = ExtField { p, e, q, modulus, base, tables: None };
        if q <= TABLE_CAP && q > 2 {
            fld.tables = Some(Arc::new(fld.build_tables()));
        }
        Ok(fld)
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }
    #[inline]
    pub fn degree(&self) -> usize {
        self.e
    }
    #[inline]
    pub fn order(&self) -> u64 {
        self.q
    }
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    fn decode(&self, mut x: u64) -> Vec<u64> {
        debug_assert!(x < self.q);
        let mut digits = vec![0u64; self.e];
        for d in digits.iter_mut() {
            *d = x % self.p;
            x /= self.p;
        }
        digits
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        let mut x = 0u64;
        for &d in digits.iter().rev() {
            x = x * self.p + d;
        }
        x
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.e == 1 {
            return self.base.add(a, b);
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.e {
            let s = self.base.add(a % self.p, b % self.p);
            out += s * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.e == 1 {
            return self.base.neg(a);
        }
        let mut a = a;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.e {
            out += self.base.neg(a % self.p) * place;
            place *= self.p;
            a /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.tables {
            let i = t.log[a as usize] as usize + t.log[b as usize] as usize;
            return t.exp[i];
        }
        self.mul_schoolbook(a, b)
    }

    fn mul_schoolbook(&self, a: u64, b: u64) -> u64 {
        let da = self.decode(a);
        let db = self.decode(b);
        let mut prod = vec![0u64; 2 * self.e - 1];
        for (i, &ca) in da.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + ca * cb) % self.p;
            }
        }
        self.reduce_poly(&mut prod);
        self.encode(&prod[..self.e])
    }

    /// Reduce a coefficient vector modulo the (monic) defining polynomial.
    fn reduce_poly(&self, c: &mut Vec<u64>) {
        let e = self.e;
        while c.len() > e {
            let k = c.len() - 1;
            let lead = c[k];
            if lead != 0 {
                for i in 0..e {
                    let t = self.base.mul(lead, self.modulus[i]);
                    c[k - e + i] = self.base.sub(c[k - e + i], t);
                }
            }
            c.pop();
        }
        while c.len() < e {
            c.push(0);
        }
    }

    pub fn pow(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a != 0, "division by zero in F_{{{}^{}}}", self.p, self.e);
        if let Some(t) = &self.tables {
            let l = t.log[a as usize] as usize;
            return t.exp[(self.q as usize - 1) - l];
        }
        self.pow(a, self.q - 2)
    }

    fn build_tables(&self) -> LogTables {
        let q = self.q as usize;
        let g = self.find_generator();
        let mut log = vec![0u32; q];
        let mut exp = vec![0u64; 2 * (q - 1)];
        let mut x = 1u64;
        for i in 0..(q - 1) {
            exp[i] = x;
            exp[i + (q - 1)] = x;
            log[x as usize] = i as u32;
            x = self.mul_schoolbook(x, g);
        }
        debug_assert_eq!(x, 1);
        LogTables { log, exp }
    }

    fn find_generator(&self) -> u64 {
        let factors = prime_factors(self.q - 1);
        'outer: for cand in 2..self.q {
            for &f in &factors {
                if self.pow_schoolbook(cand, (self.q - 1) / f) == 1 {
                    continue 'outer;
                }
            }
            return cand;
        }
        unreachable!("multiplicative group of a finite field is cyclic")
    }

    fn pow_schoolbook(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul_schoolbook(acc, a);
            }
            a = self.mul_schoolbook(a, a);
            n >>= 1;
        }
        acc
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// First monic irreducible of degree e over F_p, scanning non-leading
/// coefficient vectors in base-p order. Rabin's criterion.
fn least_irreducible(base: PrimeField, e: usize, q: u64) -> Vec<u64> {
    let p = base.p();
    for k in 0..q {
        let mut coeffs = Vec::with_capacity(e + 1);
        let mut x = k;
        for _ in 0..e {
            coeffs.push(x % p);
            x /= p;
        }
        coeffs.push(1);
        if poly_is_irreducible(base, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist over F_p")
}

fn poly_is_irreducible(base: PrimeField, f: &[u64]) -> bool {
    let e = f.len() - 1;
    if e == 1 {
        return true;
    }
    // x^{p^e} == x mod f, and gcd(x^{p^{e/l}} - x, f) = 1 for primes l | e.
    let x = vec![0, 1];
    let mut t = x.clone();
    for _ in 0..e {
        t = poly_powmod(base, &t, base.p(), f);
    }
    if !poly_mod_normalize(base, poly_sub(base, &t, &x), f).is_empty() {
        return false;
    }
    for l in prime_factors(e as u64) {
        let steps = e / l as usize;
        let mut t = x.clone();
        for _ in 0..steps {
            t = poly_powmod(base, &t, base.p(), f);
        }
        let g = poly_gcd(base, poly_sub(base, &t, &x), f.to_vec());
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn poly_trim(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn poly_sub(base: PrimeField, a: &[u64], b: &[u64]) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = base.sub(x, y);
    }
    poly_trim(out)
}

fn poly_mulmod(base: PrimeField, a: &[u64], b: &[u64], f: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ca * cb) % base.p();
        }
    }
    poly_mod_normalize(base, prod, f)
}

/// Remainder of c mod the monic polynomial f, trimmed.
fn poly_mod_normalize(base: PrimeField, mut c: Vec<u64>, f: &[u64]) -> Vec<u64> {
    let e = f.len() - 1;
    while c.len() > e {
        let k = c.len() - 1;
        let lead = c[k];
        if lead != 0 {
            for i in 0..e {
                let t = base.mul(lead, f[i]);
                c[k - e + i] = base.sub(c[k - e + i], t);
            }
        }
        c.pop();
    }
    poly_trim(c)
}

fn poly_powmod(base: PrimeField, a: &[u64], mut n: u64, f: &[u64]) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut a = a.to_vec();
    while n > 0 {
        if n & 1 == 1 {
            acc = poly_mulmod(base, &acc, &a, f);
        }
        a = poly_mulmod(base, &a, &a, f);
        n >>= 1;
    }
    acc
}

fn poly_gcd(base: PrimeField, mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
    a = poly_trim(a);
    b = poly_trim(b);
    while !b.is_empty() {
        // a mod b, with b made monic on the fly
        let lead_inv = base.inv(*b.last().unwrap());
        let bm: Vec<u64> = b.iter().map(|&c| base.mul(c, lead_inv)).collect();
        let r = poly_mod_normalize(base, a, &bm);
        a = b;
        b = r;
    }
    if a.is_empty() {
        return a;
    }
    let lead_inv = base.inv(*a.last().unwrap());
    a.iter().map(|&c| base.mul(c, lead_inv)).collect()
}

/// A runtime field descriptor: either F_p or F_{p^e}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Field {
    Prime(PrimeField),
    Ext(ExtField),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field, FieldError> {
        Ok(Field::Prime(PrimeField::new(p)?))
    }

    pub fn ext(p: u64, e: usize) -> Result<Field, FieldError> {
        Ok(Field::Ext(ExtField::new(p, e)?))
    }

    /// Characteristic.
    pub fn char(&self) -> u64 {
        match self {
            Field::Prime(f) => f.p(),
            Field::Ext(f) => f.p(),
        }
    }

    /// Number of elements.
    pub fn order(&self) -> u64 {
        match self {
            Field::Prime(f) => f.p(),
            Field::Ext(f) => f.order(),
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        match self {
            Field::Prime(f) => f.add(a, b),
            Field::Ext(f) => f.add(a, b),
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        match self {
            Field::Prime(f) => f.sub(a, b),
            Field::Ext(f) => f.sub(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        match self {
            Field::Prime(f) => f.neg(a),
            Field::Ext(f) => f.neg(a),
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        match self {
            Field::Prime(f) => f.mul(a, b),
            Field::Ext(f) => f.mul(a, b),
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        match self {
            Field::Prime(f) => f.inv(a),
            Field::Ext(f) => f.inv(a),
        }
    }

    pub fn pow(&self, a: u64, n: u64) -> u64 {
        match self {
            Field::Prime(f) => f.pow(a, n),
            Field::Ext(f) => f.pow(a, n),
        }
    }

    pub fn from_int(&self, a: i64) -> u64 {
        let p = self.char() as i64;
        let r = (((a % p) + p) % p) as u64;
        r
    }

    /// Uniformly random element, from any RNG.
    pub fn rand_elem<R: rand::Rng>(&self, rng: &mut R) -> u64 {
        rng.gen_range(0..self.order())
    }
}
