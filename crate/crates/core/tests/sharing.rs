use num_bigint::BigUint;
use proptest::prelude::*;
use raag::sharing::{
    deal, deal_bits, deal_with_polynomial, dealer_polynomial, feasible_bit_vectors, reconstruct, reconstruct_bits,
    MonicPolynomial, Share, ShareError,
};
use raag::{factor_count, SchemeParams};

fn small(n: usize, t: usize, secret: u64, seed: u64) -> SchemeParams {
    let mut p = SchemeParams::new(n, secret);
    p.threshold = t;
    p.seed = seed;
    p.coefficient_bound = 3;
    p
}

/// All k-subsets of `items`, in lexicographic order.
fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![vec![]];
    }
    if items.len() < k {
        return vec![];
    }
    let mut with: Vec<Vec<T>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0].clone());
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}

fn params_strategy() -> impl Strategy<Value = SchemeParams> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), 1..=n, 0u64..200, any::<u64>()))
        .prop_map(|(n, t, s, seed)| small(n, t, s, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn every_threshold_subset_reconstructs(params in params_strategy()) {
        let f = dealer_polynomial(&params).unwrap();
        let shares = deal(&params).unwrap();
        let points: Vec<(u64, u64)> = shares.iter().map(|s| (s.participant, s.value().unwrap() as u64)).collect();
        for (i, &(x, m)) in points.iter().enumerate() {
            prop_assert_eq!(x, i as u64 + 1);
            prop_assert_eq!(BigUint::from(m), f.evaluate(x));
        }
        for subset in subsets(&points, params.threshold) {
            prop_assert_eq!(reconstruct(&subset, params.threshold).unwrap(), BigUint::from(params.secret));
            let mut reversed = subset.clone();
            reversed.reverse();
            prop_assert_eq!(reconstruct(&reversed, params.threshold).unwrap(), BigUint::from(params.secret));
        }
    }

    #[test]
    fn share_text_round_trip(params in params_strategy()) {
        for share in deal(&params).unwrap() {
            let back: Share = share.to_text().parse().unwrap();
            prop_assert_eq!(back.participant, share.participant);
            prop_assert_eq!(back.value().unwrap(), share.value().unwrap());
        }
    }

    #[test]
    fn fewer_than_t_shares_fit_any_secret(params in params_strategy(), k in 1u64..5) {
        // f + k·Π(x − i) over the first t − 1 indices is monic of the same
        // degree, agrees on those shares and has a different constant term.
        let t = params.threshold;
        prop_assume!(t >= 2);
        let f = dealer_polynomial(&params).unwrap();
        let known: Vec<u64> = (1..t as u64).collect();
        let eval = |x: u64| -> i128 {
            let base = f.evaluate(x).to_string().parse::<i128>().unwrap();
            base + k as i128 * known.iter().map(|&i| x as i128 - i as i128).product::<i128>()
        };
        let shift = k as i128 * known.iter().map(|&i| -(i as i128)).product::<i128>();
        let other = params.secret as i128 + shift;
        prop_assume!(other >= 0);
        // the t-th point lies beyond the known indices, so both values are positive
        let x = t as u64 + 3;
        let mut honest: Vec<(u64, u64)> = known.iter().map(|&i| (i, f.evaluate(i).to_string().parse().unwrap())).collect();
        let mut forged = honest.clone();
        honest.push((x, f.evaluate(x).to_string().parse().unwrap()));
        forged.push((x, eval(x) as u64));
        prop_assert_eq!(reconstruct(&honest, t).unwrap(), BigUint::from(params.secret));
        prop_assert_eq!(reconstruct(&forged, t).unwrap(), BigUint::from(other as u64));
        prop_assert!(other != params.secret as i128);
    }
}

#[test]
fn chosen_polynomial_is_dealt_exactly() {
    let params = small(4, 2, 9, 1);
    let f = MonicPolynomial::new(vec![9, 4]).unwrap();
    let shares = deal_with_polynomial(&params, &f).unwrap();
    let values: Vec<usize> = shares.iter().map(|s| factor_count(&s.graph).unwrap()).collect();
    assert_eq!(values, vec![14, 21, 30, 41]);
    assert!(deal_with_polynomial(&params, &MonicPolynomial::new(vec![9]).unwrap()).is_err());
}

#[test]
fn reconstruct_rejects_bad_input() {
    assert!(matches!(reconstruct(&[(1, 6)], 2), Err(ShareError::WrongShareCount { .. })));
    assert!(matches!(reconstruct(&[(0, 6), (1, 7)], 2), Err(ShareError::ZeroIndex)));
    assert!(matches!(reconstruct(&[(1, 6), (1, 7)], 2), Err(ShareError::DuplicateIndex(1))));
    // f(0) = 5/2 and f(0) = −1
    assert!(matches!(reconstruct(&[(1, 0), (3, 1)], 2), Err(ShareError::Corrupt(_))));
    assert!(matches!(reconstruct(&[(1, 0), (2, 3)], 2), Err(ShareError::Corrupt(_))));
}

#[test]
fn bit_variant_is_consistent() {
    for t in 1..=3 {
        for n in t..=5 {
            for secret in 0..12 {
                let vectors = feasible_bit_vectors(secret, t, n).unwrap();
                let mut params = SchemeParams::new(n, secret);
                params.threshold = t;
                match deal_bits(&params) {
                    Ok(shares) => {
                        let bits: Vec<u8> = shares.iter().map(|s| s.bit().unwrap()).collect();
                        assert!(vectors.contains(&bits));
                        let points: Vec<(u64, u8)> = shares.iter().map(|s| (s.participant, s.bit().unwrap())).collect();
                        for subset in subsets(&points, t) {
                            assert_eq!(reconstruct_bits(&subset, t).unwrap(), BigUint::from(secret));
                        }
                    }
                    Err(ShareError::InfeasibleBits { .. }) => assert!(vectors.is_empty()),
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
}

#[test]
fn oversized_shares_are_refused() {
    let mut params = small(3, 3, 5, 0);
    params.max_vertices = 20;
    assert!(matches!(deal(&params), Err(ShareError::TooLarge { .. })));
}
