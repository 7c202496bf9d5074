//! Permutations of {1..n} with cycle-notation I/O. Points are 1-based in all
//! I/O; storage is 0-based.

use std::fmt;

use super::PermError;

/// A permutation of {1..n}, stored as the image vector of 0..n-1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    imgs: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { imgs: (0..degree as u32).collect() }
    }

    /// From 0-based images; checks bijectivity.
    pub fn from_images(imgs: Vec<u32>) -> Result<Perm, PermError> {
        let n = imgs.len();
        let mut seen = vec![false; n];
        for &x in &imgs {
            if (x as usize) >= n || seen[x as usize] {
                return Err(PermError::NotABijection);
            }
            seen[x as usize] = true;
        }
        Ok(Perm { imgs })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.imgs.len()
    }

    /// Image of the 0-based point x.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.imgs[x] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.imgs.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// (a * b)(x) = a(b(x)): apply b first. Composition is a left action.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm { imgs: other.imgs.iter().map(|&x| self.imgs[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut imgs = vec![0u32; self.degree()];
        for (i, &x) in self.imgs.iter().enumerate() {
            imgs[x as usize] = i as u32;
        }
        Perm { imgs }
    }

    pub fn pow(&self, mut k: i64) -> Perm {
        let base = if k < 0 {
            k = -k;
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Perm::identity(self.degree());
        let mut b = base;
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        acc
    }

    /// sigma * self * sigma^-1.
    pub fn conjugate_by(&self, sigma: &Perm) -> Perm {
        sigma.mul(self).mul(&sigma.inverse())
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        // compare a(b(x)) with b(a(x)) pointwise, no allocation
        self.imgs
            .iter()
            .enumerate()
            .all(|(x, _)| self.imgs[other.imgs[x] as usize] == other.imgs[self.imgs[x] as usize])
    }

    pub fn order(&self) -> u64 {
        let mut ord = 1u64;
        for c in self.cycles() {
            ord = lcm(ord, c.len() as u64);
        }
        ord
    }

    /// Nontrivial cycles, 0-based points, each starting at its least point,
    /// sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// +1 for even, -1 for odd, computed from the cycle type.
    pub fn sign(&self) -> i32 {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn moved_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&x| self.apply(x) != x).collect()
    }

    /// Re-embed into degree `new_degree`, moving the support up by `offset`.
    pub fn embed_shifted(&self, offset: usize, new_degree: usize) -> Perm {
        assert!(self.degree() + offset <= new_degree);
        let mut imgs: Vec<u32> = (0..new_degree as u32).collect();
        for (i, &x) in self.imgs.iter().enumerate() {
            imgs[i + offset] = x + offset as u32;
        }
        Perm { imgs }
    }

    /// Parse cycle notation: "()" is the identity, otherwise one or more
    /// cycles "(i1,i2,...)" of 1-based points, each cycle with at least two
    /// points, points distinct across all cycles. Whitespace is ignored.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm, PermError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(PermError::MalformedCycles("empty input".into()));
        }
        if s == "()" {
            return Ok(Perm::identity(degree));
        }
        let mut imgs: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut rest = s.as_str();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(PermError::MalformedCycles(format!("expected '(' at {:?}", rest)));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::MalformedCycles("unbalanced '('".into()))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let points: Result<Vec<usize>, _> = body
                .split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| PermError::MalformedCycles(format!("bad integer {:?}", tok)))
                })
                .collect();
            let points = points?;
            if points.len() < 2 {
                return Err(PermError::MalformedCycles(
                    "a cycle needs at least two points".into(),
                ));
            }
            for &pt in &points {
                if pt == 0 || pt > degree {
                    return Err(PermError::PointOutOfRange { point: pt, degree });
                }
                if used[pt - 1] {
                    return Err(PermError::RepeatedPoint(pt));
                }
                used[pt - 1] = true;
            }
            for w in 0..points.len() {
                let from = points[w] - 1;
                let to = points[(w + 1) % points.len()] - 1;
                imgs[from] = to as u32;
            }
        }
        Perm::from_images(imgs)
    }

    /// Canonical cycle notation with 1-based points; identity is "()".
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut out = String::new();
        for c in cycles {
            out.push('(');
            for (i, &pt) in c.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&(pt + 1).to_string());
            }
            out.push(')');
        }
        out
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_cycles())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_cycles())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
