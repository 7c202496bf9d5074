//! Brauer machinery against the grid subgroup: trace images miss the
//! leading monomial, the stabilizer dichotomy for the orbit of {1..p}, and
//! the explicit fixed vectors.

use spechtlab_core::brauer::{
    brauer_quotient, column_as_wedge, left_coset_reps, relative_trace_matrix,
    normalizer_action_check, ModuleRep,
};
use spechtlab_core::exterior::{vector_w, vector_wj, vector_z, HookModule, MultiIndex, WedgeVector};
use spechtlab_core::ff_linalg::PrimeField;
use spechtlab_core::permgrp::{
    grid_col_shift, grid_row_shift, grid_tail_group, subgroup_from_elements, Perm, PermGroup,
};

fn pf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn leading_monomial(p: u64, n: usize) -> WedgeVector {
    let points: Vec<u32> = (1..=p as u32).collect();
    WedgeVector::monomial(pf(p), n, &points)
}

#[test]
fn fixed_vector_w_has_unit_leading_coefficient() {
    for k in [3usize, 4] {
        let n = 3 * k;
        let w = vector_w(3, k).unwrap();
        let q = grid_tail_group(3, k);
        // w is fixed by the whole group
        for g in q.gens() {
            assert_eq!(w.act(g).unwrap(), w);
        }
        assert!(w.delta().is_zero());
        assert_eq!(w.dot(&leading_monomial(3, n)).unwrap(), 1);
    }
}

#[test]
fn trace_images_miss_the_leading_monomial() {
    // for every maximal subgroup R of the grid group, no element of the
    // trace of the hook fixed space has a nonzero leading coefficient
    for k in [3usize, 4] {
        let n = 3 * k;
        let q = grid_tail_group(3, k);
        let hook = HookModule::new(pf(3), n, 3).unwrap();
        let v = ModuleRep::hook_subspace(hook);
        let top = leading_monomial(3, n);
        for r in q.maximal_subgroups_p_group(3).unwrap() {
            let fixed_r = v.fixed_space(&r).unwrap();
            let tr = relative_trace_matrix(&v, &q, &r).unwrap();
            let image = tr.mul(&fixed_r).unwrap();
            for c in 0..image.cols() {
                let col = image.col(c);
                let w = column_as_wedge(&v, &col).unwrap();
                assert_eq!(
                    w.dot(&top).unwrap(),
                    0,
                    "k={} maximal subgroup of order {:?}",
                    k,
                    r.order()
                );
            }
        }
        // consequently the fixed vector w is outside the Brauer kernel
        let report = brauer_quotient(&v, &q).unwrap();
        assert!(report.dim_quotient >= 1);
    }
}

#[test]
fn stabilizer_dichotomy_for_the_first_block() {
    // Stab_Q({1..p}) is generated by the row shift and the tail; it lies in
    // a maximal subgroup R exactly when R is that stabilizer
    let k = 4;
    let n = 12;
    let q = grid_tail_group(3, k);
    let delta_set: Vec<usize> = (0..3).collect();
    let stab = q.setwise_stabilizer(&delta_set).unwrap();
    assert_eq!(stab.order().unwrap(), 9); // row shift times the tail 3-cycle
    let alpha = grid_row_shift(3, n);
    assert!(stab.contains(&alpha).unwrap());
    let mut hits = 0;
    for r in q.maximal_subgroups_p_group(3).unwrap() {
        let contains_stab = stab.is_subgroup_of(&r).unwrap();
        if contains_stab {
            hits += 1;
            assert!(r.same_group(&stab).unwrap(), "stabilizer is itself maximal");
        }
    }
    assert_eq!(hits, 1);
}

#[test]
fn alternating_sum_and_translate_traces_vanish_on_leading_monomial() {
    // coefficient of e_1 ^ .. ^ e_p in the trace from the row-shift group to
    // the full grid group is zero, both for the alternating sums z_m and for
    // the translate sums w(j)
    let p = 3u64;
    let n = 9;
    let alpha = PermGroup::new(n, vec![grid_row_shift(p, n)]);
    let grid = PermGroup::new(n, vec![grid_row_shift(p, n), grid_col_shift(p, n)]);
    let top = leading_monomial(p, n);
    let reps = left_coset_reps(&grid, &alpha).unwrap();
    assert_eq!(reps.len(), 3);
    let trace = |v: &WedgeVector| -> WedgeVector {
        let mut acc = WedgeVector::zero(pf(p), n, 3);
        for rep in &reps {
            acc = acc.add(&v.act(rep).unwrap());
        }
        acc
    };
    for m in 2..=3usize {
        let z = vector_z(p, m, n).unwrap();
        assert_eq!(trace(&z).dot(&top).unwrap(), 0, "m={}", m);
    }
    for j_pts in [vec![2u32, 3, 4], vec![4, 5, 6], vec![2, 5, 9], vec![2, 3, 7]] {
        let j = MultiIndex::new(n, j_pts.clone()).unwrap();
        let wj = vector_wj(p, &j, n).unwrap();
        assert_eq!(trace(&wj).dot(&top).unwrap(), 0, "j={:?}", j_pts);
    }
}

#[test]
fn grid_transpose_normalizes_and_preserves_brauer_data() {
    // the transpose of the 3x3 grid swaps the two shifts by conjugation, so
    // it normalizes the grid group without belonging to it
    let n = 9;
    let imgs: Vec<u32> = (0..9u32).map(|x| (x % 3) * 3 + x / 3).collect();
    let tau = Perm::from_images(imgs).unwrap();
    let q = PermGroup::new(n, vec![grid_row_shift(3, n), grid_col_shift(3, n)]);
    assert!(!q.contains(&tau).unwrap());
    assert_eq!(grid_row_shift(3, n).conjugate_by(&tau), grid_col_shift(3, n));
    let hook = HookModule::new(pf(3), n, 3).unwrap();
    let v = ModuleRep::hook_subspace(hook);
    assert!(normalizer_action_check(&v, &q, &tau).unwrap());
    // elements of Q and the identity trivially pass
    assert!(normalizer_action_check(&v, &q, &grid_row_shift(3, n)).unwrap());
    // an element that does not normalize is rejected
    let bad = Perm::parse_cycles("(1,2)", 9).unwrap();
    assert!(normalizer_action_check(&v, &q, &bad).is_err());
}

#[test]
fn fixed_space_dimensions_count_orbits_for_natural_modules() {
    // random small subgroups: the fixed space of the natural module has one
    // orbit sum per orbit
    let groups = vec![
        PermGroup::new(6, vec![Perm::parse_cycles("(1,2)(3,4)", 6).unwrap()]),
        PermGroup::new(
            6,
            vec![
                Perm::parse_cycles("(1,2)(3,4)", 6).unwrap(),
                Perm::parse_cycles("(1,3)(2,4)", 6).unwrap(),
            ],
        ),
        PermGroup::new(8, vec![Perm::parse_cycles("(1,2,3,4)(5,6,7,8)", 8).unwrap()]),
        subgroup_from_elements(5, &[Perm::identity(5)]),
    ];
    for q in groups {
        let n = q.degree();
        let v = ModuleRep::natural(pf(2), n);
        let fixed = v.fixed_space(&q).unwrap();
        assert_eq!(fixed.cols(), q.orbit_sets().len());
    }
}
