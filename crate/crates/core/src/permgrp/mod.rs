//! Permutations, small permutation groups by exhaustive enumeration, and the
//! elementary abelian / Sylow subgroup constructions for symmetric and
//! alternating groups.

use std::fmt;

pub mod classes;
pub mod elem_enum;
pub mod group;
pub mod perm;
pub mod sylow;

pub use classes::{
    classify_elem_abelian, construct_e, construct_f, grid_col_shift, grid_row_shift,
    is_conjugate_to_class, parse_subgroup_spec, ElemAbelianClass, Flavor,
};
pub use elem_enum::{enumerate_elem_abelian, ElemAbelianSubgroup};
pub use group::{subgroup_from_elements, Enumeration, OrbitProfile, PermGroup, ORDER_CAP};
pub use perm::Perm;
pub use sylow::{
    grid_tail_group, nu_factorial, sylow_alt, sylow_sym, verify_sylow_characterization,
    SylowVerifyReport,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    NotABijection,
    MalformedCycles(String),
    RepeatedPoint(usize),
    PointOutOfRange { point: usize, degree: usize },
    OrderCapExceeded { cap: u64 },
    NotPGroup { p: u64 },
    NotElementaryAbelian,
    EmptyComposition,
    CompositionTooLarge { support: usize, degree: usize },
    AltCompositionExcluded,
    AltReducesToSym { p: u64 },
    AltNeedsEvenDegree { n: usize },
    MalformedSubgroupSpec(String),
    NotABlockSystem,
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotABijection => write!(f, "image list is not a bijection"),
            PermError::MalformedCycles(s) => write!(f, "malformed cycle notation: {}", s),
            PermError::RepeatedPoint(p) => write!(f, "point {} appears twice", p),
            PermError::PointOutOfRange { point, degree } => {
                write!(f, "point {} out of range 1..{}", point, degree)
            }
            PermError::OrderCapExceeded { cap } => {
                write!(f, "group order exceeds the enumeration cap {}", cap)
            }
            PermError::NotPGroup { p } => write!(f, "group is not a {}-group", p),
            PermError::NotElementaryAbelian => {
                write!(f, "group is not elementary abelian of the required exponent")
            }
            PermError::EmptyComposition => write!(f, "composition must have a nonzero part"),
            PermError::CompositionTooLarge { support, degree } => {
                write!(f, "composition needs {} points but degree is {}", support, degree)
            }
            PermError::AltCompositionExcluded => write!(
                f,
                "compositions with m1 = 2 are excluded: the even part of E(2, m2, ...) \
                 is properly contained in a representative of F(0, m2+1, ...)"
            ),
            PermError::AltReducesToSym { p } => write!(
                f,
                "for odd p = {} the p-subgroups of the alternating group coincide with \
                 those of the symmetric group; use the symmetric classification",
                p
            ),
            PermError::AltNeedsEvenDegree { n } => {
                write!(f, "alternating classification needs even degree, got {}", n)
            }
            PermError::MalformedSubgroupSpec(s) => {
                write!(f, "cannot parse subgroup spec {:?}", s)
            }
            PermError::NotABlockSystem => write!(f, "orbits are not permuted as blocks"),
        }
    }
}

impl std::error::Error for PermError {}
