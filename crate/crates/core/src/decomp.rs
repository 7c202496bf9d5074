//! Endomorphism algebras and Fitting-lemma decomposition search. A random
//! endomorphism whose stable kernel and image are both nonzero splits the
//! module; failure to find one in N trials proves nothing and is reported
//! as such.

use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::brauer::ModuleRep;
use crate::ff_linalg::Mat;
use crate::rng::sub_rng;

/// Basis of the algebra of matrices commuting with every generator action.
pub struct EndoAlgebra {
    pub dim_module: usize,
    pub basis: Vec<Mat>,
}

impl EndoAlgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Solve X rho(g) = rho(g) X for all generators: the nullspace of the
/// stacked Sylvester operators in the d^2 matrix entries.
pub fn endomorphism_algebra(gens: &[Mat]) -> EndoAlgebra {
    assert!(!gens.is_empty(), "need at least one generator matrix");
    let d = gens[0].rows();
    let field = gens[0].field().clone();
    let mut blocks = Vec::new();
    for g in gens {
        assert_eq!(g.rows(), d);
        // row (i,j) of the operator X -> X g - g X, X flattened row-major
        let mut block = Mat::zero(field.clone(), d * d, d * d);
        for i in 0..d {
            for j in 0..d {
                let row = i * d + j;
                // (X g)_{ij} = sum_k X_{ik} g_{kj}
                for k in 0..d {
                    let cur = block.get(row, i * d + k);
                    block.set(row, i * d + k, field.add(cur, g.get(k, j)));
                }
                // -(g X)_{ij} = -sum_k g_{ik} X_{kj}
                for k in 0..d {
                    let cur = block.get(row, k * d + j);
                    block.set(row, k * d + j, field.sub(cur, g.get(i, k)));
                }
            }
        }
        blocks.push(block);
    }
    let ns = Mat::vstack(&blocks).nullspace();
    let basis: Vec<Mat> = (0..ns.cols())
        .map(|c| {
            let flat = ns.col(c);
            Mat::from_fn(field.clone(), d, d, |i, j| flat[i * d + j])
        })
        .collect();
    EndoAlgebra { dim_module: d, basis }
}

pub fn endomorphism_algebra_of(v: &ModuleRep) -> Result<EndoAlgebra, crate::brauer::BrauerError> {
    let mats = v.generator_matrices()?;
    Ok(endomorphism_algebra(&mats))
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SplitResult {
    Decomposed {
        dims: Vec<usize>,
        trials: usize,
        #[serde(skip)]
        summands: (Mat, Mat),
    },
    NoSplit {
        trials: usize,
    },
}

impl fmt::Display for SplitResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitResult::Decomposed { dims, trials, .. } => {
                write!(f, "decomposed into dims {:?} after {} trials", dims, trials)
            }
            SplitResult::NoSplit { trials } => {
                write!(f, "no splitting found in {} trials (not a proof of indecomposability)", trials)
            }
        }
    }
}

/// Search for a direct sum decomposition: sample random elements phi of the
/// endomorphism algebra and take the stable kernel / image pair of phi^d.
/// Both nonzero means the module splits as their direct sum. Every returned
/// decomposition is verified exactly: invariance of both summands under all
/// generators, trivial intersection, full sum.
pub fn fitting_split(gens: &[Mat], trials: usize, seed: u64) -> SplitResult {
    let endo = endomorphism_algebra(gens);
    let d = endo.dim_module;
    let field = gens[0].field().clone();
    let p = field.order();
    for t in 0..trials {
        let mut rng = sub_rng(seed, t as u64);
        let mut phi = Mat::zero(field.clone(), d, d);
        for b in &endo.basis {
            let c = rng.gen_range(0..p);
            if c != 0 {
                phi = phi.add(&b.scale(c)).unwrap();
            }
        }
        let stable = phi.pow(d as u64);
        let kernel = stable.nullspace();
        let image = stable.column_space();
        if kernel.cols() == 0 || image.cols() == 0 {
            continue;
        }
        verify_decomposition(gens, &kernel, &image);
        return SplitResult::Decomposed {
            dims: vec![kernel.cols(), image.cols()],
            trials: t + 1,
            summands: (kernel, image),
        };
    }
    SplitResult::NoSplit { trials }
}

/// Panics unless the two column spaces are generator-invariant, intersect
/// trivially and sum to the whole space.
fn verify_decomposition(gens: &[Mat], a: &Mat, b: &Mat) {
    let d = gens[0].rows();
    assert_eq!(a.cols() + b.cols(), d, "summand dimensions must fill the module");
    let joint = Mat::hstack(&[a.clone(), b.clone()]);
    assert_eq!(joint.rank(), d, "summands must intersect trivially and span");
    for g in gens {
        let ga = g.mul(a).unwrap();
        assert!(
            crate::brauer::span_contains(a, &ga),
            "first summand is not invariant"
        );
        let gb = g.mul(b).unwrap();
        assert!(
            crate::brauer::span_contains(b, &gb),
            "second summand is not invariant"
        );
    }
}

pub fn fitting_split_of(
    v: &ModuleRep,
    trials: usize,
    seed: u64,
) -> Result<SplitResult, crate::brauer::BrauerError> {
    let mats = v.generator_matrices()?;
    Ok(fitting_split(&mats, trials, seed))
}
