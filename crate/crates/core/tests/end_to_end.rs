use kn_core::abelian::abelianization_codim;
use kn_core::catalog;
use kn_core::central::virasoro_ratio;
use kn_core::cohomology::goncharova::goncharova_predicted;
use kn_core::cohomology::goncharova_table;
use kn_core::geom::{verify_against_geometry, Model};
use kn_core::jacobi::verify_jacobi;
use kn_core::moduli::rescale;
use kn_core::rational::{int, rat};
use kn_core::BasisDomain;

#[test]
fn rescaled_families_stay_lie() {
    for name in catalog::names().iter().filter(|n| !n.contains('<')) {
        let fam = catalog::lookup(name).unwrap();
        let Ok(scaled) = rescale(&fam, &rat(9, 4)) else { continue };
        let (lo, hi) = match scaled.domain {
            BasisDomain::All => (-6, 6),
            BasisDomain::AtLeast(b) => (b, b + 12),
        };
        let report = verify_jacobi(&scaled, lo, hi).unwrap();
        assert!(report.verdict.passed(), "{name}: {:?}", report.verdict);
    }
}

#[test]
fn elliptic_constants_from_sampled_curves() {
    let samples = vec![vec![int(1), int(-1)], vec![int(2), rat(1, 2)], vec![int(-3), int(1)]];
    let report = verify_against_geometry(&catalog::elliptic(), Model::Elliptic, -3, 3, &samples).unwrap();
    assert!(report.verdict.passed(), "{:?}", report.verdict);
}

#[test]
fn three_point_constants_symbolically() {
    let report = verify_against_geometry(&catalog::three_point_genus0(), Model::ThreePoint, -4, 4, &[]).unwrap();
    assert!(report.verdict.passed());
}

#[test]
fn witt_residue_cocycle_is_virasoro_up_to_scale() {
    assert_eq!(virasoro_ratio(-6, 6).unwrap(), Some(int(-12)));
}

#[test]
fn graded_cohomology_of_l1() {
    for (q, dims) in goncharova_table(3, 20) {
        for (s, d) in (1..).zip(dims) {
            assert_eq!(d, goncharova_predicted(q, s), "q={q} s={s}");
        }
    }
}

#[test]
fn l1_commutator_codimension_stabilizes() {
    let c = abelianization_codim(&catalog::l1_subalgebra(), 12).unwrap();
    assert!(c.stabilized);
    assert_eq!(c.codim, 2);
}
