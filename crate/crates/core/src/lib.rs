//! Exact computation with hook Specht modules of symmetric groups in prime
//! characteristic: finite-field linear algebra, small permutation groups and
//! their elementary abelian subgroup classes, wedge realizations of hook
//! Specht modules, Brauer quotients of p-permutation modules, generic Jordan
//! types over elementary abelian p-groups, and endomorphism-algebra
//! decomposition search.

pub mod ff_linalg;
pub mod rng;

pub mod permgrp;

pub mod exterior;

pub mod brauer;

pub mod jordan;

pub mod decomp;
