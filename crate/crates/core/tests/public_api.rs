use num_complex::Complex;
use proptest::prelude::*;

use circstates::descriptor::StateDescriptor;
use circstates::entanglement::{
    entanglement_general, entanglement_kerr, entanglement_rics, fock_oracle, max_q_entanglement,
    schmidt_rics, TwoModeState,
};
use circstates::states::{from_rics_basis, kerr_state, to_rics_basis, CircularState};
use circstates::{CVector, Complex64, Error, RicsLabel};

#[test]
fn single_precision_tracks_double() {
    for (n, q, a) in [(2usize, 1usize, 1.0), (5, 2, 1.5), (8, 0, 2.5)] {
        let e32 = entanglement_rics(
            &circstates::states::RicsLabel::new(n, q, Complex::new(a as f32, 0.0)).unwrap(),
        )
        .unwrap()
        .e_bits;
        let e64 = entanglement_rics(&RicsLabel::new(n, q, Complex::new(a, 0.0)).unwrap())
            .unwrap()
            .e_bits;
        assert!(
            (e32 as f64 - e64).abs() < 1e-4,
            "N={n} q={q}: {e32} vs {e64}"
        );
    }
    let k32 = entanglement_kerr(6, Complex::new(2.0f32, 0.0))
        .unwrap()
        .e_bits;
    let k64 = entanglement_kerr(6, Complex64::new(2.0, 0.0))
        .unwrap()
        .e_bits;
    assert!((k32 as f64 - k64).abs() < 1e-4);
}

#[test]
fn kerr_paths_agree() {
    let alpha = Complex64::new(1.7, 0.4);
    for n in 1..=9 {
        let closed = entanglement_kerr(n, alpha).unwrap().e_bits;
        let general = entanglement_general(&TwoModeState::kerr(n, alpha).unwrap())
            .unwrap()
            .e_bits;
        let oracle = fock_oracle(
            &TwoModeState::kerr(n, alpha)
                .unwrap()
                .in_state_fock()
                .unwrap(),
        )
        .unwrap()
        .e_bits;
        assert!((closed - general).abs() < 1e-10, "N={n}");
        assert!((closed - oracle).abs() < 1e-8, "N={n}");
    }
}

#[test]
fn descriptor_drives_the_same_computation() {
    let d = StateDescriptor::from_json(r#"{"kind":"kerr","N":5,"alpha0":[1.5,0]}"#).unwrap();
    let via_desc = entanglement_general(&d.two_mode().unwrap()).unwrap().e_bits;
    let direct = entanglement_kerr(5, Complex64::new(1.5, 0.0))
        .unwrap()
        .e_bits;
    assert!((via_desc - direct).abs() < 1e-10);
    assert_eq!(StateDescriptor::from_json(&d.to_json()).unwrap(), d);
}

#[test]
fn schmidt_weights_sum_to_one_and_pair_classes() {
    let label = RicsLabel::new(7, 3, Complex64::new(2.0, -1.0)).unwrap();
    let s = schmidt_rics(&label).unwrap();
    assert!((s.lambdas.weights().iter().sum::<f64>() - 1.0).abs() < 1e-12);
    for &(a, b) in &s.pairing {
        assert_eq!((a + b) % 7, 3);
    }
}

#[test]
fn max_q_never_below_any_single_q() {
    let alpha = Complex64::new(2.0, 0.0);
    for n in [3, 6, 11] {
        let (arg, best) = max_q_entanglement(alpha, n).unwrap();
        for q in 0..n {
            let e = entanglement_rics(&RicsLabel::new(n, q, alpha).unwrap())
                .unwrap()
                .e_bits;
            assert!(e <= best);
            if e == best {
                assert!(arg <= q);
            }
        }
    }
}

#[test]
fn domain_errors_are_reported() {
    assert!(matches!(
        RicsLabel::new(3, 3, Complex64::new(1.0, 0.0)),
        Err(Error::LabelOutOfRange { .. })
    ));
    assert!(matches!(
        RicsLabel::new(0, 0, Complex64::new(1.0, 0.0)),
        Err(Error::ZeroComponents)
    ));
    let zero = RicsLabel::new(3, 0, Complex64::new(0.0, 0.0)).unwrap();
    assert!(matches!(
        entanglement_rics(&zero),
        Err(Error::ZeroAmplitude)
    ));
    assert!(kerr_state(0, Complex64::new(1.0, 0.0)).is_err());
}

fn arb_state() -> impl Strategy<Value = CircularState<f64>> {
    (1usize..12, 0.1f64..3.5, 0.0f64..std::f64::consts::TAU).prop_flat_map(|(n, r, phase)| {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n).prop_filter_map(
            "non-zero coefficients",
            move |c| {
                let c: Vec<Complex64> = c.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
                CircularState::normalized(Complex64::from_polar(r, phase), CVector::new(c).ok()?)
                    .ok()
            },
        )
    })
}

proptest! {
    #[test]
    fn rics_basis_round_trip(s in arb_state()) {
        let b = to_rics_basis(&s).unwrap();
        prop_assert!((b.norm_sqr() - 1.0).abs() < 1e-10);
        let back = from_rics_basis(s.alpha0(), &b).unwrap();
        prop_assert!(back.coeffs().max_abs_diff(s.coeffs()) < 1e-10);
    }

    #[test]
    fn entanglement_within_log2_n(s in arb_state()) {
        let n = s.n();
        let two_mode = TwoModeState::from_in_state(s);
        let e = entanglement_general(&two_mode).unwrap().e_bits;
        prop_assert!(e >= -1e-9 && e <= (n as f64).log2() + 1e-9);
    }
}
