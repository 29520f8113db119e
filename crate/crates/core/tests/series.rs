use freejord_core::series::{check_sequence, conjecture_series, predict_dims, DimSequence, LaurentPoly};
use num_bigint::BigInt;

const A005418: [u64; 20] = [
    2, 3, 6, 10, 20, 36, 72, 136, 272, 528, 1056, 2080, 4160, 8256, 16512, 32896, 65792, 131328,
    262656, 524800,
];

#[test]
fn degree_19_counterexample() {
    let d = predict_dims(2, 19).unwrap().to_u64().unwrap();
    assert_eq!(&d[..18], &A005418[..18]);
    assert_eq!(d[18], 262658);

    let report = check_sequence(2, &DimSequence::from_u64(2, &A005418)).unwrap();
    for k in 0..18 {
        assert_eq!(report.residues[k], BigInt::from(0), "degree {}", k + 1);
    }
    assert_eq!(report.residues[18], BigInt::from(2));
    assert_eq!(report.first_nonzero, Some(19));

    let s = conjecture_series(2, &DimSequence::from_u64(2, &A005418[..19]), 19).unwrap();
    let c = s.coeff(19);
    assert_eq!(c.coeff(9), BigInt::from(-1218));
    assert_eq!(c.coeff(8), BigInt::from(45184));
    assert_eq!(c.coeff(-1), BigInt::from(2));
    eprintln!("z^19 coefficient: {c}");
}

#[test]
fn predictions_round_trip_through_residues() {
    for p in 1..=4 {
        let d = predict_dims(p, 20).unwrap();
        let r = check_sequence(p, &d).unwrap();
        assert_eq!(r.first_nonzero, None, "p={p}");
    }
}

#[test]
fn prefix_stability() {
    for p in 1..=3 {
        let long = predict_dims(p, 16).unwrap();
        for n in 1..16 {
            assert_eq!(predict_dims(p, n).unwrap().dims[..], long.dims[..n]);
        }
    }
}

#[test]
fn high_degree_factors_collapse_to_a_sum() {
    // for n > N/2 the product of the factors equals 1 - (t + 1/t) sum a_n z^n
    let n_max = 19;
    let dims = DimSequence::from_u64(2, &A005418[..19]);
    let mut prod = freejord_core::series::TruncatedLaurentSeries::one(n_max);
    let mut coeffs = vec![LaurentPoly::one()];
    for n in 1..=n_max {
        if n >= 10 {
            prod = prod.mul(&freejord_core::series::degree_factor(n, dims.get(n), n_max).unwrap());
        }
        coeffs.push(if n >= 10 {
            LaurentPoly::from_terms([(1, -dims.get(n)), (-1, -dims.get(n))])
        } else {
            LaurentPoly::zero()
        });
    }
    let closed = freejord_core::series::TruncatedLaurentSeries::from_coeffs(n_max, coeffs);
    assert_eq!(prod, closed);
}

#[test]
fn specialisation_at_t_one_is_integral() {
    let d = predict_dims(2, 12).unwrap();
    let s = conjecture_series(2, &d, 12).unwrap();
    let vals = s.at_t_one();
    assert_eq!(vals.len(), 13);
    // at t = 1 the prefactor is (1 - 1) + p z (1/t - 1) = 0
    assert!(vals.iter().all(|v| *v == BigInt::from(0)));
}
