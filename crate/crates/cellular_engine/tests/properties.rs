use std::sync::OnceLock;

use cellular_engine::cellmod::cellular_pairing;
use cellular_engine::verify::verify_cell_axioms_with;
use cellular_engine::{cell_module, tensor_power_datum, BasisChoice, CellDatum};
use proptest::prelude::*;
use scalar_arith::{Mat, ScalarContext};
use uq_modules::TiltingCache;

fn data() -> &'static Vec<CellDatum> {
    static DATA: OnceLock<Vec<CellDatum>> = OnceLock::new();
    DATA.get_or_init(|| {
        let mut out = Vec::new();
        for ctx in [
            ScalarContext::Generic,
            ScalarContext::cyclotomic(3).unwrap(),
            ScalarContext::cyclotomic(5).unwrap(),
        ] {
            let cache = TiltingCache::new(ctx);
            for d in [3, 4, 5] {
                out.push(tensor_power_datum(d, &cache, BasisChoice::Echelon).unwrap());
            }
        }
        out
    })
}

fn combination(cd: &CellDatum, coeffs: &[i64]) -> Mat {
    let n = cd.module.dim();
    cd.elements()
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(Mat::zeros(n, n), |acc, (c, &k)| acc.axpy(&cd.ctx().int(k), c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_endomorphisms_satisfy_the_cell_rule(
        which in 0usize..9,
        coeffs in proptest::collection::vec(-3i64..=3, 1..12),
    ) {
        let cd = &data()[which];
        let phi = combination(cd, &coeffs);
        let report = verify_cell_axioms_with(cd, &[phi]);
        prop_assert!(report.pass(), "{:?}", report.witnesses);
    }

    #[test]
    fn pairing_is_contravariant(
        which in 0usize..9,
        coeffs in proptest::collection::vec(-3i64..=3, 1..12),
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let cd = &data()[which];
        let phi = combination(cd, &coeffs);
        let iphi = cd.involution(&phi);
        let cell = &cd.cells[a.index(cd.cells.len())];
        let g = &cell.primitive[a.index(cell.size())];
        let h = &cell.primitive[b.index(cell.size())];
        prop_assert_eq!(
            cellular_pairing(cd, &phi.mul_vec(g), h),
            cellular_pairing(cd, g, &iphi.mul_vec(h))
        );
        let cm = cell_module(cd, cell.lambda).unwrap();
        let (r, ri) = (cm.action(&phi).unwrap(), cm.action(&iphi).unwrap());
        prop_assert_eq!(r.transpose().mul(&cm.gram), cm.gram.mul(&ri));
    }
}
