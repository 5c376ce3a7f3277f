use super::*;
use alloc::vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn lm(rows: Vec<Vec<i64>>) -> LinkingMatrix {
    LinkingMatrix::from_rows(rows).unwrap()
}

#[test]
fn component_examples() {
    let link = |s, w: Vec<i32>| FramedLink { strands: s, word: w, framings: vec![], name: None };
    assert_eq!(link(2, vec![1, 1, 1]).components(), vec![vec![0, 1]]);
    assert_eq!(link(2, vec![1, 1]).components(), vec![vec![0], vec![1]]);
    assert_eq!(link(1, vec![]).components(), vec![vec![0]]);
    assert_eq!(link(3, vec![1, -2, 1, -2]).components().len(), 1);
    assert!(link(0, vec![]).components().is_empty());
}

#[test]
fn validation() {
    assert!(FramedLink::new(2, vec![2], vec![0]).is_err());
    assert!(FramedLink::new(2, vec![0], vec![0]).is_err());
    assert!(FramedLink::new(2, vec![1, 1], vec![0]).is_err());
    assert!(FramedLink::new(0, vec![], vec![]).is_ok());
}

#[test]
fn linking_examples() {
    assert_eq!(FramedLink::hopf(0, 0).linking_matrix(), lm(vec![vec![0, 1], vec![1, 0]]));
    assert_eq!(FramedLink::unknot(7).linking_matrix(), lm(vec![vec![7]]));
    assert_eq!(FramedLink::trefoil_left(-1).linking_matrix(), lm(vec![vec![-1]]));
    assert_eq!(FramedLink::hopf(0, 0).mirror().linking_matrix(), lm(vec![vec![0, -1], vec![-1, 0]]));
    let chain = FramedLink::new(3, vec![1, 1, -2, -2], vec![4, 5, 6]).unwrap();
    assert_eq!(chain.linking_matrix(), lm(vec![vec![4, 1, 0], vec![1, 5, -1], vec![0, -1, 6]]));
}

#[test]
fn self_writhe() {
    assert_eq!(FramedLink::trefoil_left(0).self_writhes(), vec![-3]);
    assert_eq!(FramedLink::figure8(0).self_writhes(), vec![0]);
    assert_eq!(FramedLink::hopf(0, 0).self_writhes(), vec![0, 0]);
}

#[test]
fn signature_examples() {
    assert_eq!(signature_counts(&lm(vec![vec![-1]])), (0, 1, 0));
    assert_eq!(signature_counts(&lm(vec![vec![0, 1], vec![1, 0]])), (1, 1, 0));
    assert_eq!(signature_counts(&lm(vec![vec![2, 0], vec![0, -3]])), (1, 1, 0));
    assert_eq!(signature_counts(&lm(vec![vec![0, 0], vec![0, 0]])), (0, 0, 2));
    assert_eq!(signature_counts(&lm(vec![])), (0, 0, 0));
}

#[test]
fn h1_examples() {
    let h = lm(vec![vec![-1]]).h1();
    assert!(h.torsion.is_empty() && h.is_finite());
    let h = lm(vec![vec![12]]).h1();
    assert_eq!(h.torsion, vec![BigInt::from(12)]);
    assert_eq!(h.prime_power_split().unwrap(), vec![3, 4]);
    assert!(lm(vec![vec![0, 1], vec![1, 0]]).h1().torsion.is_empty());
    let h = lm(vec![vec![0]]).h1();
    assert_eq!(h.betti, 1);
    assert_eq!(h.order(), None);
    let h = lm(vec![vec![2, 0], vec![0, 4]]).h1();
    assert_eq!(h.torsion, vec![BigInt::from(2), BigInt::from(4)]);
}

#[test]
fn catalog_entries() {
    let p = catalog("poincare").unwrap();
    assert_eq!((p.strands(), p.word(), p.framings()), (2, &[-1, -1, -1][..], &[-1][..]));
    assert_eq!(catalog("lens(5,1)").unwrap().framings(), &[5]);
    assert_eq!(catalog("lens(5,1)").unwrap().word(), FramedLink::unknot(5).word());
    let f = catalog("figure8(0)").unwrap();
    assert_eq!((f.strands(), f.word(), f.framings()), (3, &[1, -2, 1, -2][..], &[0][..]));
    assert_eq!(catalog("hopf(2, -3)").unwrap().framings(), &[2, -3]);
    assert_eq!(catalog("s3").unwrap().num_components(), 0);
    assert!(matches!(catalog("torus(2,5)"), Err(crate::Error::UnknownName(_))));
    assert!(matches!(catalog("unknot"), Err(crate::Error::UnknownName(_))));
}

#[test]
fn disjoint_union_and_blocks() {
    let u = FramedLink::trefoil_left(-1).disjoint_union(&FramedLink::hopf(2, 3));
    assert_eq!(u.strands(), 4);
    assert_eq!(u.framings(), &[-1, 2, 3]);
    assert!(u.linking_matrix().get(0, 1) == 0 && u.linking_matrix().get(1, 2) == 1);
    let blocks = u.split_blocks();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0].0.word(), &[-1, -1, -1]);
    assert_eq!(blocks[1].0.word(), &[1, 1]);
    assert_eq!(blocks[1].1, vec![1, 2]);
    assert_eq!(FramedLink::unknot(1).disjoint_union(&FramedLink::unknot(2)).split_blocks().len(), 2);
}

// Invariant factors from determinantal divisors: d_1 ... d_k = gcd of k x k minors.
fn determinantal_factors(a: &[Vec<i64>]) -> Vec<BigInt> {
    let n = a.len();
    let mut divisors = vec![BigInt::from(1)];
    for k in 1..=n {
        let mut g = BigInt::zero();
        for rows in subsets(n, k) {
            for cols in subsets(n, k) {
                let minor: Vec<Vec<BigInt>> =
                    rows.iter().map(|&i| cols.iter().map(|&j| BigInt::from(a[i][j])).collect()).collect();
                g = g.gcd(&crate::qcalc::bareiss_det(minor));
            }
        }
        divisors.push(g);
    }
    let mut out = Vec::new();
    for k in 1..=n {
        if divisors[k].is_zero() {
            out.push(BigInt::zero());
        } else {
            out.push(&divisors[k] / &divisors[k - 1]);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

fn symmetric(n: usize) -> impl Strategy<Value = LinkingMatrix> {
    proptest::collection::vec(-6i64..7, n * n).prop_map(move |v| {
        let rows = (0..n).map(|i| (0..n).map(|j| v[i.min(j) * n + i.max(j)]).collect()).collect();
        LinkingMatrix::from_rows(rows).unwrap()
    })
}

fn unimodular(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    proptest::collection::vec((0..n, 0..n, -2i64..3, any::<bool>()), 0..8).prop_map(move |ops| {
        let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect();
        for (i, j, c, flip) in ops {
            if i != j {
                for row in u.iter_mut() {
                    row[j] += c * row[i];
                }
            }
            if flip {
                for row in u.iter_mut() {
                    row[i] = -row[i];
                }
            }
        }
        u
    })
}

fn braid(strands: usize) -> impl Strategy<Value = Vec<i32>> {
    proptest::collection::vec((1..strands as i32, any::<bool>()), 0..10)
        .prop_map(|w| w.into_iter().map(|(g, s)| if s { g } else { -g }).collect())
}

proptest! {
    #[test]
    fn far_commutation_invariance(word in braid(5), pos in 0usize..10) {
        let n = FramedLink { strands: 5, word: word.clone(), framings: vec![], name: None }.components().len();
        let a = FramedLink::new(5, word.clone(), vec![1; n]).unwrap();
        let mut w2 = word;
        if pos + 1 < w2.len() && (w2[pos].abs() - w2[pos + 1].abs()).abs() >= 2 {
            w2.swap(pos, pos + 1);
        }
        let b = FramedLink::new(5, w2, vec![1; n]).unwrap();
        prop_assert_eq!(a.linking_matrix(), b.linking_matrix());
        prop_assert_eq!(a.self_writhes(), b.self_writhes());
    }

    #[test]
    fn negation_swaps_signature(a in symmetric(4)) {
        let (p, n, z) = signature_counts(&a);
        prop_assert_eq!(signature_counts(&a.neg()), (n, p, z));
    }

    #[test]
    fn signature_matches_descartes_count(a in symmetric(3)) {
        // characteristic polynomial x^3 + c2 x^2 + c1 x + c0; count roots by sign changes of
        // the exact coefficients (Descartes is exact for real-rooted polynomials)
        let m = |i: usize, j: usize| a.get(i, j) as i128;
        let tr = m(0, 0) + m(1, 1) + m(2, 2);
        let minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)
            + m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
        let det: i128 = a.determinant().try_into().unwrap();
        let coeffs = [1, -tr, minors, -det];
        let zero = coeffs.iter().rev().take_while(|c| **c == 0).count();
        let nz: Vec<i128> = coeffs[..4 - zero].iter().copied().filter(|c| *c != 0).collect();
        let pos = nz.windows(2).filter(|w| w[0].signum() != w[1].signum()).count();
        prop_assert_eq!(signature_counts(&a), (pos, 3 - zero - pos, zero));
    }

    #[test]
    fn h1_matches_determinantal_divisors(a in symmetric(3)) {
        let expected = determinantal_factors(a.rows());
        let h = a.h1();
        prop_assert_eq!(h.betti, expected.iter().filter(|d| d.is_zero()).count());
        let mut t: Vec<BigInt> = expected.into_iter().filter(|d| !d.is_zero() && *d != BigInt::from(1)).collect();
        t.sort();
        prop_assert_eq!(&h.torsion, &t);
        if h.is_finite() {
            prop_assert_eq!(h.order().unwrap(), a.determinant().abs());
        }
    }

    #[test]
    fn h1_congruence_invariance(a in symmetric(3), u in unimodular(3)) {
        prop_assert_eq!(a.congruent(&u).h1(), a.h1());
        prop_assert_eq!(signature_counts(&a.congruent(&u)), signature_counts(&a));
    }
}
