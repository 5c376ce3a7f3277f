use num_integer::Integer;
use num_traits::One;

use super::*;
use crate::cyclo::{ev_root, gauss_sum, is_integral};
use crate::laplace::{ev_frac, laplace};
use crate::qcalc::{BivariatePoly, LaurentPoly};
use crate::BigInt;

fn xi(r: u64) -> RootSpec {
    RootSpec::primitive(r)
}

/// `sum_{n odd} xi^{b(n^2-1)/4} [n]^2`, straight from the definition.
fn framed_unknot_sum(b: i64, x: RootSpec) -> CycNumber {
    let r = x.m as i64;
    (1..2 * r)
        .step_by(2)
        .map(|n| ev_root(&(&LaurentPoly::q_pow(b * (n * n - 1) / 4) * &qint(n).pow(2)), x).unwrap())
        .fold(CycNumber::zero(x.m), |a, y| &a + &y)
}

#[test]
fn s3_and_trivial_cases() {
    for r in [3u64, 5, 7] {
        assert_eq!(tau(&Manifold::s3(), xi(r)).unwrap(), CycNumber::one(r));
        assert_eq!(tau_su2(&Manifold::s3(), xi(r)).unwrap(), CycNumber::one(r));
        assert_eq!(tau_prime(&Manifold::s3(), xi(r)).unwrap(), CycNumber::one(r));
        assert_eq!(tau_su2(&Manifold::new(FramedLink::lens(1)), xi(r)).unwrap(), CycNumber::one(r));
    }
    assert_eq!(tau_su2(&Manifold::new(FramedLink::lens(1)), xi(4)).unwrap(), CycNumber::one(16));
    assert!(tau(&Manifold::s3(), xi(4)).is_err());
    assert!(tau(&Manifold::s3(), xi(1)).is_err());
}

#[test]
fn zero_framed_unknot() {
    let want: CycNumber = [1i64, 3, 5].iter().map(|&n| ev_root(&qint(n).pow(2), xi(3)).unwrap()).sum();
    assert_eq!(f_l(&FramedLink::unknot(0), xi(3), Variant::So3).unwrap(), want);
}

#[test]
fn framed_unknot_is_gauss_type() {
    let mut zz = BivariatePoly::zero();
    zz.add_term(0, 1, BigInt::one());
    zz.add_term(0, -1, BigInt::one());
    zz.add_term(0, 0, BigInt::from(-2));
    let qq = LaurentPoly::from_q_coeffs(-1, &[1, -2, 1]);
    for r in (3u64..=15).step_by(2) {
        for b in -6i64..=6 {
            if b == 0 {
                continue;
            }
            let x = xi(r);
            let f = f_l(&FramedLink::unknot(b), x, Variant::So3).unwrap();
            assert!(!f.is_zero(), "b={b} r={r}");
            assert_eq!(f, framed_unknot_sum(b, x), "b={b} r={r}");
            let c = r.gcd(&b.unsigned_abs());
            let via = &gauss_sum(b, x).unwrap() * &ev_frac(&laplace(&zz, b, c).unwrap(), x).unwrap();
            assert_eq!(&f * &ev_root(&qq, x).unwrap(), via, "b={b} r={r}");
        }
    }
}

#[test]
fn disjoint_union_multiplies() {
    let a = FramedLink::trefoil_left(-1);
    let b = FramedLink::hopf(1, 2);
    for r in [3u64, 5] {
        let x = xi(r);
        for v in [Variant::So3, Variant::Su2] {
            let lhs = f_l(&a.disjoint_union(&b), x, v).unwrap();
            assert_eq!(lhs, &f_l(&a, x, v).unwrap() * &f_l(&b, x, v).unwrap());
        }
    }
}

#[test]
fn lens_spaces() {
    for r in [3u64, 5, 7, 9] {
        let x = xi(r);
        for b in [-5i64, -4, -3, -2, 2, 3, 4, 5, 9] {
            let m = Manifold::new(FramedLink::lens(b));
            let want = framed_unknot_sum(b, x).checked_div(&framed_unknot_sum(b.signum(), x)).unwrap();
            assert_eq!(tau(&m, x).unwrap(), want);
            assert_eq!(tau_lens(b, x, Variant::So3).unwrap(), want);
            let tp = tau_prime(&m, x).unwrap();
            if b > 0 {
                assert_eq!(tp, CycNumber::one(r), "b={b}");
            } else {
                let want = tau_lens(b, x, Variant::So3).unwrap().checked_div(&tau_lens(-b, x, Variant::So3).unwrap()).unwrap();
                assert_eq!(tp, want, "b={b}");
            }
        }
    }
    assert_eq!(tau_prime(&Manifold::new(FramedLink::unknot(0)), xi(5)), Err(Error::NotRationalHomologySphere));
}

fn catalog_manifolds() -> Vec<Manifold> {
    ["poincare", "lens(3)", "lens(-2)", "trefoil_right(1)", "figure8(-1)", "hopf(2,-3)", "s3"]
        .iter()
        .map(|s| Manifold::from_catalog(s).unwrap())
        .collect()
}

#[test]
fn blow_up_invariance() {
    for m in catalog_manifolds() {
        for b in [1i64, -1] {
            let blown = Manifold::new(m.surgery().disjoint_union(&FramedLink::unknot(b)));
            for r in [3u64, 5, 7] {
                assert_eq!(tau(&blown, xi(r)).unwrap(), tau(&m, xi(r)).unwrap(), "{:?} r={r}", m.surgery().name());
            }
        }
    }
}

#[test]
fn connected_sum_multiplies() {
    let a = Manifold::from_catalog("poincare").unwrap();
    let b = Manifold::from_catalog("lens(3)").unwrap();
    for r in [5u64, 7] {
        let x = xi(r);
        assert_eq!(tau(&a.connected_sum(&b), x).unwrap(), &tau(&a, x).unwrap() * &tau(&b, x).unwrap());
        assert_eq!(tau_prime(&a.connected_sum(&b), x).unwrap(), &tau_prime(&a, x).unwrap() * &tau_prime(&b, x).unwrap());
    }
}

#[test]
fn galois_equivariance() {
    for m in catalog_manifolds().into_iter().take(4) {
        for r in [5u64, 9] {
            let base = tau(&m, xi(r)).unwrap();
            for j in (2..r).filter(|j| j.gcd(&r) == 1) {
                assert_eq!(tau(&m, RootSpec::new(r, j).unwrap()).unwrap(), base.galois(j).unwrap());
            }
        }
    }
}

#[test]
fn homology_sphere_values_are_integral() {
    let m = Manifold::from_catalog("poincare").unwrap();
    for r in (3u64..=13).step_by(2) {
        let t = tau(&m, xi(r)).unwrap();
        assert!(is_integral(&t, 1), "r={r}: {t}");
        assert_eq!(tau_prime(&m, xi(r)).unwrap(), t);
    }
}

#[test]
fn su2_regression_and_blow_up() {
    let m = Manifold::from_catalog("poincare").unwrap();
    assert_eq!(tau_su2(&m, xi(4)).unwrap(), CycNumber::from_int(16, -1));
    for m in catalog_manifolds().into_iter().take(3) {
        for b in [1i64, -1] {
            let blown = Manifold::new(m.surgery().disjoint_union(&FramedLink::unknot(b)));
            for r in [3u64, 4, 5, 6] {
                assert_eq!(tau_su2(&blown, xi(r)).unwrap(), tau_su2(&m, xi(r)).unwrap(), "r={r}");
            }
        }
    }
}
