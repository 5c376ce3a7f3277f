//! End to end through the public API: catalog link, colored Jones, cyclotomic
//! expansion, unified invariant, and WRT values at roots of unity.

use unified_core::cyclo::{CycNumber, RootSpec};
use unified_core::habiro::{hab_eval, taylor_at, unified_ihs};
use unified_core::jones::{colored_jones, cyclotomic_coeffs, ColoredLink};
use unified_core::links::catalog;
use unified_core::qcalc::qint;
use unified_core::wrt::{tau, tau_prime, Manifold};

#[test]
fn right_trefoil_surgery() {
    let link = catalog("trefoil_right(1)").unwrap();
    let ihs = unified_ihs(&link, 8).unwrap();
    let mf = Manifold::new(link.clone());
    for r in [3u64, 5, 7, 9] {
        let xi = RootSpec::primitive(r);
        assert_eq!(hab_eval(&ihs, xi).unwrap(), tau(&mf, xi).unwrap(), "r={r}");
    }
    assert_eq!(taylor_at(&ihs, 1, 3).unwrap().coeffs[0], CycNumber::one(1));

    let zero = catalog("trefoil_right(0)").unwrap();
    let e = cyclotomic_coeffs(&zero, 4).unwrap();
    for n in 1..=5u32 {
        let j = colored_jones(&ColoredLink::new(zero.clone(), vec![n]).unwrap()).unwrap();
        assert_eq!(e.reconstruct(&[n]), &j * &qint(n as i64));
    }
}

#[test]
fn lens_space_normalization() {
    let mf = Manifold::new(catalog("lens(5)").unwrap());
    for r in [3u64, 7, 9] {
        let xi = RootSpec::primitive(r);
        assert_eq!(tau_prime(&mf, xi).unwrap(), CycNumber::one(r), "r={r}");
    }
    assert!(catalog("nonsense(1)").is_err());
}
