use projgl_core::cyclo::CycNum;
use projgl_core::ffpoly::{enumerate_basis_polys, enumerate_irreducibles, ExtFieldCtx, FpPoly};
use projgl_core::glring::RingElt;
use projgl_core::oracle::{brauer_pairing_series, ClassFn, DEFAULT_BUDGET};
use projgl_core::poincare::{kernel_relations, molien_residue_check, series_of_element};

#[test]
fn series_match_the_group_side_pairing() {
    for n in 1..=2u32 {
        let ctx = ExtFieldCtx::new(2, n).unwrap();
        for f in enumerate_basis_polys(2, n as usize, true).unwrap() {
            let x = RingElt::basis(&ctx, &f).unwrap();
            let rho = ClassFn::from_ring_elt(&x, n as usize).unwrap();
            let group = brauer_pairing_series(&ctx, &rho, 10, DEFAULT_BUDGET).unwrap();
            assert_eq!(group, series_of_element(&ctx, &x, 10).unwrap(), "{f}");
        }
    }
}

#[test]
fn closed_forms_match_weight_counts() {
    for (p, n) in [(2u32, 3u32), (3, 1)] {
        let ctx = ExtFieldCtx::new(p, n).unwrap();
        for k in 0..ctx.order() {
            assert!(molien_residue_check(&ctx, k, 20).unwrap().equal(), "p={p} n={n} k={k}");
        }
    }
}

#[test]
fn degree_six_irreducibles_have_relations() {
    let ctx = ExtFieldCtx::new(2, 6).unwrap();
    let polys: Vec<FpPoly> = enumerate_irreducibles(2, 6).unwrap();
    assert_eq!(polys.len(), 9);
    let r = kernel_relations(&ctx, &polys).unwrap();
    assert!(r.dimension >= 2);
    assert!(r.residual_zero && r.series_zero);
    assert_eq!(r.series_order, 64);
    assert!(r.t_fixed.iter().all(|&b| b));
    for a in &r.relations {
        assert!(!a.iter().all(CycNum::is_zero));
    }
}
