mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use spectral_forge::reconstruction::reconstruct;

#[test]
fn characteristic_polynomial_on_random_monic_curves() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut seen = std::collections::BTreeSet::new();
    for k in 0..20 {
        let data = common::random_monic(&mut rng);
        seen.insert((data.n(), data.curve.genus()));
        let l = reconstruct(&data).unwrap_or_else(|e| panic!("curve {k} {}: {e}", data.curve.e().to_canonical_string()));
        let ch = l.verify_characteristic();
        assert!(ch.pass, "curve {k}: {}", data.curve.e().to_canonical_string());
        assert!(l.verify_diagonal());
        let pl = l.verify_pole_locus();
        assert!(pl.pass && pl.polynomial, "curve {k}: {:?}", pl.offending);
    }
    assert!(seen.contains(&(2, 2)) && seen.contains(&(2, 1)) && seen.contains(&(3, 1)), "{seen:?}");
}
