use super::*;
use crate::cyclo::ev_v;
use crate::qcalc::{qint, q_pochhammer};
use crate::Rational;
use alloc::vec;
use proptest::prelude::*;
use std::collections::HashMap;

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn jones(link: &FramedLink, colors: &[u32]) -> LaurentPoly {
    colored_jones(&ColoredLink::new(link.clone(), colors.to_vec()).unwrap()).unwrap()
}

fn q_poly(low: i64, coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_q_coeffs(low, coeffs)
}

// Kauffman bracket of the braid closure with A = v, by summing over all smoothings.
fn bracket(strands: usize, word: &[i32]) -> LaurentPoly {
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let len = word.len();
    let node = |t: usize, p: usize| (t % (len.max(1))) * strands + p;
    let delta = &LaurentPoly::v_monomial(r(-1), 2) - &LaurentPoly::v_monomial(r(1), -2);
    let mut total = LaurentPoly::zero();
    for mask in 0u64..1 << len {
        let mut parent: Vec<usize> = (0..len.max(1) * strands).collect();
        let mut a_exp = 0i64;
        for (t, &g) in word.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            let horizontal = mask >> t & 1 == 1;
            // sigma_i: A for the vertical smoothing; inverse swaps A and A^-1
            a_exp += if horizontal == (g > 0) { -1 } else { 1 };
            let mut join = |x: usize, y: usize| {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                parent[a] = b;
            };
            for p in 0..strands {
                if horizontal && (p == i - 1 || p == i) {
                    continue;
                }
                join(node(t, p), node(t + 1, p));
            }
            if horizontal {
                join(node(t, i - 1), node(t, i));
                join(node(t + 1, i - 1), node(t + 1, i));
            }
        }
        let nodes = len.max(1) * strands;
        let loops = (0..nodes).filter(|&x| find(&mut parent, x) == x).count();
        total = &total + &(&delta.pow(loops as u32) * &LaurentPoly::v_monomial(r(1), a_exp));
    }
    total
}

// Color-2 invariant from the bracket: J = (-1)^c (-A^3)^{-self writhe} <D> v^{3 sum f}.
fn skein_oracle(link: &FramedLink) -> LaurentPoly {
    let c = link.num_components() as i64;
    let w: i64 = link.self_writhes().iter().sum();
    let f: i64 = link.framings().iter().sum();
    let sign = if (c + w) % 2 == 0 { 1 } else { -1 };
    bracket(link.strands(), link.word()).scale(&r(sign)).shift_v(-3 * w + 3 * f)
}

#[test]
fn unknot_is_quantum_integer() {
    for n in 1..=9u32 {
        assert_eq!(jones(&FramedLink::unknot(0), &[n]), qint(n as i64));
        for b in [-2i64, 1, 3] {
            let expected = qint(n as i64).shift_v(b * (n as i64 * n as i64 - 1));
            assert_eq!(jones(&FramedLink::unknot(b), &[n]), expected);
        }
    }
}

#[test]
fn hopf_is_quantum_product() {
    for m in 1..=4u32 {
        for n in 1..=4u32 {
            assert_eq!(jones(&FramedLink::hopf(0, 0), &[m, n]), qint((m * n) as i64), "({m},{n})");
        }
    }
}

#[test]
fn left_trefoil_color_two() {
    let expected = &qint(2) * &q_poly(1, &[1, 0, 1, -1]);
    assert_eq!(jones(&FramedLink::trefoil_left(0), &[2]), expected);
    let right = &qint(2) * &q_poly(-4, &[-1, 1, 0, 1]);
    assert_eq!(jones(&FramedLink::trefoil_right(0), &[2]), right);
}

#[test]
fn figure8_color_two_is_amphichiral_jones() {
    // V = t^2 - t + 1 - t^-1 + t^-2
    let expected = &qint(2) * &q_poly(-2, &[1, -1, 1, -1, 1]);
    assert_eq!(jones(&FramedLink::figure8(0), &[2]), expected);
}

#[test]
fn skein_oracle_on_catalog() {
    for link in [
        FramedLink::unknot(0),
        FramedLink::hopf(0, 0),
        FramedLink::hopf(1, -2),
        FramedLink::trefoil_left(0),
        FramedLink::trefoil_right(2),
        FramedLink::figure8(-1),
        FramedLink::new(3, vec![1, -2, 1, -2, 1, -2], vec![0, 0, 0]).unwrap(),
    ] {
        let cols = vec![2; link.num_components()];
        assert_eq!(jones(&link, &cols), skein_oracle(&link), "{:?}", link.word());
    }
}

#[test]
fn inverse_braiding_is_inverse() {
    // c^{-1} c on V_{n1} (x) V_{n2}, composed entrywise
    let sc = BigPoly;
    let mut rm = RMatrix::new(&sc);
    for n1 in 1..=4u32 {
        for n2 in 1..=4u32 {
            for a in 0..n1 {
                for b in 0..n2 {
                    // positive braiding then the negative letter on V_{n2} (x) V_{n1}
                    let mut out: HashMap<(u32, u32), LaurentPoly> = HashMap::new();
                    for k in 0..=a.min(n2 - 1 - b) {
                        let (p, q) = (b + k, a - k);
                        let c = rm.coeff(true, n1, n2, a, b, k).unwrap();
                        for k2 in 0..=q.min(n2 - 1 - p) {
                            let d = rm.coeff(false, n2, n1, p, q, k2).unwrap();
                            let e = out.entry((q - k2, p + k2)).or_insert_with(LaurentPoly::zero);
                            *e = &*e + &(&c * &d);
                        }
                    }
                    for ((x, y), v) in out {
                        let expected = if (x, y) == (a, b) { LaurentPoly::one() } else { LaurentPoly::zero() };
                        assert_eq!(v, expected, "n=({n1},{n2}) a={a} b={b} -> ({x},{y})");
                    }
                }
            }
        }
    }
}

#[test]
fn markov_moves() {
    let base = FramedLink::trefoil_left(0);
    let conj = FramedLink::new(2, vec![-1, -1, -1, -1, 1], vec![0]).unwrap();
    let stab = FramedLink::new(3, vec![-1, -1, -1, 2], vec![0]).unwrap();
    let stab_neg = FramedLink::new(3, vec![-1, -2, -1, -1], vec![0]).unwrap();
    for n in 1..=4u32 {
        let j = jones(&base, &[n]);
        assert_eq!(jones(&conj, &[n]), j);
        assert_eq!(jones(&stab, &[n]), j);
        assert_eq!(jones(&stab_neg, &[n]), j);
    }
}

#[test]
fn odd_colors_are_q_integral() {
    for link in [FramedLink::trefoil_left(0), FramedLink::trefoil_right(-1), FramedLink::figure8(2)] {
        for n in [1u32, 3, 5] {
            assert!(jones(&link, &[n]).has_integral_q_powers());
        }
    }
    for (m, n) in [(1u32, 3u32), (3, 3), (3, 5), (5, 5)] {
        assert!(jones(&FramedLink::hopf(1, -1), &[m, n]).has_integral_q_powers());
    }
    assert!(!jones(&FramedLink::trefoil_left(0), &[2]).has_integral_q_powers());
}

#[test]
fn capacity_error() {
    let l = ColoredLink::new(FramedLink::figure8(0), vec![200]).unwrap();
    assert!(matches!(
        colored_jones_bounded(&l, 1_000_000),
        Err(Error::CapacityExceeded { dimension: 8_000_000, bound: 1_000_000 })
    ));
}

#[test]
fn empty_link_is_one() {
    assert_eq!(jones(&FramedLink::empty(), &[]), LaurentPoly::one());
}

#[test]
fn evaluation_mode_agrees() {
    let cases: Vec<(FramedLink, Vec<u32>)> = vec![
        (FramedLink::trefoil_left(-1), vec![3]),
        (FramedLink::figure8(1), vec![4]),
        (FramedLink::hopf(2, -1), vec![3, 2]),
        (FramedLink::trefoil_right(0), vec![6]),
    ];
    for (link, cols) in cases {
        let j = jones(&link, &cols);
        for (m, jj) in [(5u64, 1u64), (7, 3), (9, 2), (4, 1), (6, 5)] {
            let xi = RootSpec::new(m, jj).unwrap();
            let l = ColoredLink::new(link.clone(), cols.clone()).unwrap();
            assert_eq!(colored_jones_at(&l, xi, DEFAULT_CAPACITY).unwrap(), ev_v(&j, xi).unwrap());
        }
    }
}

#[test]
fn unknot_expansion() {
    let e = cyclotomic_coeffs(&FramedLink::unknot(0), 4).unwrap();
    assert_eq!(e.get(&[0]).unwrap(), &LaurentPoly::q_pow(1));
    for k in 1..=4u32 {
        assert!(e.get(&[k]).unwrap().is_zero());
    }
    assert!(verify_habiro_integrality(&e).all_pass());
}

#[test]
fn trefoil_expansion() {
    let e = cyclotomic_coeffs(&FramedLink::trefoil_left(0), 6).unwrap();
    assert_eq!(e.get(&[0]).unwrap(), &LaurentPoly::q_pow(1));
    let c1 = e.get(&[1]).unwrap();
    let num = &(&LaurentPoly::one() - &LaurentPoly::q_pow(1)) * c1;
    assert!(num.exact_div(&q_pochhammer(2, 2)).unwrap().is_q_integral());
    assert!(verify_habiro_integrality(&e).all_pass());
    assert!(e.held_out.iter().all(|(_, ok)| *ok));
    for n in 1..=8u32 {
        let target = &jones(&FramedLink::trefoil_left(0), &[n]) * &qint(n as i64);
        if n <= 7 {
            assert_eq!(e.reconstruct(&[n]), target);
        }
    }
}

#[test]
fn figure8_expansion() {
    let e = cyclotomic_coeffs(&FramedLink::figure8(0), 6).unwrap();
    assert!(verify_habiro_integrality(&e).all_pass());
    for n in 1..=7u32 {
        assert_eq!(e.reconstruct(&[n]), &jones(&FramedLink::figure8(0), &[n]) * &qint(n as i64));
    }
}

#[test]
fn split_link_expansion_is_a_product() {
    let t = cyclotomic_coeffs(&FramedLink::trefoil_right(0), 3).unwrap();
    let u = FramedLink::trefoil_right(0).disjoint_union(&FramedLink::figure8(0));
    let f = cyclotomic_coeffs(&FramedLink::figure8(0), 3).unwrap();
    let e = cyclotomic_coeffs(&u, 3).unwrap();
    for k1 in 0..=3u32 {
        for k2 in 0..=3u32 {
            assert_eq!(e.get(&[k1, k2]).unwrap(), &(t.get(&[k1]).unwrap() * f.get(&[k2]).unwrap()));
        }
    }
    assert!(verify_habiro_integrality(&e).all_pass());
}

#[test]
fn borromean_expansion_is_integral() {
    let b = FramedLink::new(3, vec![1, -2, 1, -2, 1, -2], vec![0, 0, 0]).unwrap();
    assert!(b.is_algebraically_split());
    let e = cyclotomic_coeffs(&b, 2).unwrap();
    assert!(verify_habiro_integrality(&e).all_pass());
    assert_eq!(e.reconstruct(&[2, 3, 2]), {
        let j = jones(&b, &[2, 3, 2]);
        &(&(&j * &qint(2)) * &qint(3)) * &qint(2)
    });
}

#[test]
fn expansion_preconditions() {
    assert_eq!(cyclotomic_coeffs(&FramedLink::hopf(0, 0), 2), Err(Error::NotAlgebraicallySplit));
    assert_eq!(cyclotomic_coeffs(&FramedLink::trefoil_left(-1), 2), Err(Error::NotAlgebraicallySplit));
}

fn catalog_link() -> impl Strategy<Value = FramedLink> {
    (0usize..6, -3i64..4, -3i64..4).prop_map(|(i, a, b)| match i {
        0 => FramedLink::unknot(a),
        1 => FramedLink::hopf(a, b),
        2 => FramedLink::trefoil_left(a),
        3 => FramedLink::trefoil_right(a),
        4 => FramedLink::figure8(a),
        _ => FramedLink::poincare(),
    })
}

fn colors_for(link: &FramedLink, seed: &[u32]) -> Vec<u32> {
    (0..link.num_components()).map(|i| seed[i]).collect()
}

fn add_framing(link: &FramedLink, i: usize) -> FramedLink {
    let mut f = link.framings().to_vec();
    f[i] += 1;
    FramedLink::new(link.strands(), link.word().to_vec(), f).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn framing_covariance(link in catalog_link(), seed in proptest::collection::vec(1u32..6, 2), i in 0usize..2) {
        let cols = colors_for(&link, &seed);
        let i = i % link.num_components();
        let n = cols[i] as i64;
        let lhs = jones(&add_framing(&link, i), &cols);
        prop_assert_eq!(lhs, jones(&link, &cols).shift_v(n * n - 1));
    }

    #[test]
    fn disjoint_union_multiplies(a in catalog_link(), b in catalog_link(), seed in proptest::collection::vec(1u32..5, 4)) {
        let ca = colors_for(&a, &seed[..2]);
        let cb = colors_for(&b, &seed[2..]);
        let mut cols = ca.clone();
        cols.extend(&cb);
        prop_assert_eq!(jones(&a.disjoint_union(&b), &cols), &jones(&a, &ca) * &jones(&b, &cb));
    }

    #[test]
    fn random_braids_match_skein(word in proptest::collection::vec((1i32..3, any::<bool>()), 0..7), f in -2i64..3) {
        let word: Vec<i32> = word.into_iter().map(|(g, s)| if s { g } else { -g }).collect();
        let n = (1..=3).find(|&c| FramedLink::new(3, word.clone(), vec![0; c]).is_ok()).unwrap();
        let link = FramedLink::new(3, word, vec![f; n]).unwrap();
        prop_assert_eq!(jones(&link, &vec![2; n]), skein_oracle(&link));
    }
}
