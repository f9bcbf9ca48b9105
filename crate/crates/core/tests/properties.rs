mod common;

use std::f64::consts::PI;

use common::{random_palindromic, random_poly, random_seifert, rejection_seifert, residual_oracle};
use kcg::bounds::{classify, Genus4, SliceStatus};
use kcg::tabledata::{evaluate_sum, fixtures, parse_table, serialize_table};
use kcg::{census, enhanced_required_factors, gc_bounds, match_candidates, residual};
use kcg::{KnotRecord, KnotSum, KnotTable, LaurentPoly, SeifertMatrix};
use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn product(rng: &mut ChaCha8Rng, max_factors: usize, max_degree: usize) -> LaurentPoly {
    (0..rng.gen_range(1..=max_factors)).fold(LaurentPoly::one(), |acc, _| {
        let d = rng.gen_range(0..=max_degree);
        &acc * &random_poly(rng, d, 9)
    })
}

/// A Seifert matrix of genus 1 to 4, from the symplectic construction or,
/// for small sizes, from rejection sampling.
fn seifert(seed: u64) -> SeifertMatrix {
    let mut r = rng(seed);
    let genus = r.gen_range(1..=4);
    if genus <= 2 && r.gen_bool(0.3) {
        if let Some(v) = rejection_seifert(&mut r, 2 * genus, 3, 20_000) {
            return v;
        }
    }
    random_seifert(&mut r, genus, 3)
}

fn record_from(v: &SeifertMatrix, name: &str) -> KnotRecord {
    let sigma = v.murasugi_signature();
    let mut k = KnotRecord::new(name, 0);
    k.alexander = Some(v.alexander().unwrap());
    k.signature = Some(sigma);
    k.genus3 = Some(v.genus() as u32);
    k.genus4 = Genus4 { lo: sigma.unsigned_abs().div_ceil(2) as u32, hi: Some(v.genus() as u32) };
    k.slice_status = SliceStatus::NotSlice;
    k.seifert = Some(v.clone());
    k
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn factor_expand_round_trip(seed in any::<u64>()) {
        let p = product(&mut rng(seed), 3, 5);
        let f = p.factor().unwrap();
        prop_assert_eq!(f.expand(), p);
        prop_assert_eq!(f.unit(), 1);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_and_value_at_one_are_multiplicative(seed in any::<u64>()) {
        let p = product(&mut rng(seed), 3, 4);
        let f = p.factor().unwrap();
        prop_assert_eq!(f.degree(), p.degree());
        let at_one = f.factors().iter().fold(BigInt::one(), |acc, (q, m)| acc * q.eval_i64(1).pow(*m));
        prop_assert_eq!(at_one * BigInt::from(f.unit()), p.eval_i64(1));
    }

    #[test]
    fn reciprocal_is_an_involution(seed in any::<u64>()) {
        let mut r = rng(seed);
        let d = r.gen_range(0..=8);
        let p = random_poly(&mut r, d, 9);
        prop_assert_eq!(p.reciprocal().reciprocal(), p.clone());
        prop_assert_eq!(p.is_symmetric(), p.reciprocal() == p);
        let sym = &p * &p.reciprocal();
        prop_assert!(sym.is_symmetric());
    }

    #[test]
    fn factor_ignores_units(seed in any::<u64>(), shift in 0usize..5, negate in any::<bool>()) {
        let p = product(&mut rng(seed), 2, 4);
        let sign = if negate { -BigInt::one() } else { BigInt::one() };
        let mut raw = vec![BigInt::from(0); shift];
        raw.extend(p.coeffs().iter().map(|c| c * &sign));
        let q = LaurentPoly::canonicalize(&raw, -(shift as i64)).unwrap();
        prop_assert_eq!(q.factor().unwrap(), p.factor().unwrap());
    }

    #[test]
    fn alexander_polynomial_shape(seed in any::<u64>()) {
        let v = seifert(seed);
        let d = v.alexander().unwrap();
        prop_assert!(d.is_symmetric());
        prop_assert_eq!(d.degree() % 2, 0);
        prop_assert!(d.eval_i64(1).abs().is_one());
        prop_assert!(d.eval_i64(-1).to_i64().unwrap() % 2 != 0);
    }

    #[test]
    fn signature_at_pi_is_murasugi(seed in any::<u64>()) {
        let v = seifert(seed);
        prop_assert_eq!(v.lt_signature(PI).unwrap(), Ratio::from_integer(v.murasugi_signature()));
        prop_assert_eq!(v.mirror().murasugi_signature(), -v.murasugi_signature());
    }

    #[test]
    fn profile_arcs_resample(seed in any::<u64>()) {
        let v = seifert(seed);
        let profile = v.signature_profile().unwrap();
        prop_assert_eq!(profile.endpoint_value_at_pi(), v.murasugi_signature());
        let mut r = rng(seed ^ 0x5eed);
        for arc in profile.arcs() {
            for _ in 0..3 {
                let width = arc.end - arc.start;
                let theta = arc.start + width * r.gen_range(0.05..0.95);
                prop_assert_eq!(v.lt_signature(theta).unwrap(), Ratio::from_integer(arc.value));
            }
        }
    }

    #[test]
    fn exact_and_float_signatures_agree(seed in any::<u64>()) {
        let v = seifert(seed);
        let n = v.size();
        let sym = DMatrix::from_fn(n, n, |i, j| (v.at(i, j) + v.at(j, i)).to_f64().unwrap());
        let norm = sym.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
        let eig = sym.symmetric_eigenvalues();
        prop_assume!(eig.iter().all(|l| l.abs() >= 1e-9 * (1.0 + norm)));
        let count: i64 = eig.iter().map(|l| if *l > 0.0 { 1 } else { -1 }).sum();
        prop_assert_eq!(count, v.murasugi_signature());
    }

    #[test]
    fn jumps_sit_on_roots(seed in any::<u64>()) {
        let v = seifert(seed);
        let d = v.alexander().unwrap();
        let scale: f64 = d.coeffs().iter().map(|c| c.abs().to_f64().unwrap()).sum();
        for j in v.signature_profile().unwrap().nonzero_jumps() {
            let z = num_complex::Complex64::from_polar(1.0, j.angle);
            prop_assert!(d.eval_complex(z).norm() / scale < 1e-6);
            prop_assert_eq!(j.jump % 2, 0);
        }
    }

    #[test]
    fn residual_matches_decomposition_oracle(seed in any::<u64>()) {
        let (delta, blocks) = random_palindromic(&mut rng(seed), 10);
        let g = residual(&delta.factor().unwrap()).unwrap();
        prop_assert_eq!(&g, &residual_oracle(&delta, &blocks));
        prop_assert!(g.is_symmetric());
        prop_assert_eq!(g.degree() % 2, 0);
        prop_assert_eq!(residual(&g.factor().unwrap()).unwrap(), g);
    }

    #[test]
    fn required_factors_chain(seed in any::<u64>()) {
        let v = seifert(seed);
        let delta = v.alexander().unwrap();
        let f = delta.factor().unwrap();
        let r = enhanced_required_factors(&f, Some(&v.signature_profile().unwrap())).unwrap();
        prop_assert!(r.enhanced.checked_div(&r.residual).is_some());
        prop_assert!(delta.checked_div(&r.enhanced).is_some());
        prop_assert!(r.residual.degree() <= r.enhanced.degree() && r.enhanced.degree() <= delta.degree());
        prop_assert!(r.enhanced.is_symmetric() && r.enhanced.degree() % 2 == 0);
        prop_assert!(r.required_multiset().divides(&f));
    }

    #[test]
    fn bounds_respect_signature_and_genus(seed in any::<u64>()) {
        let v = seifert(seed);
        let k = record_from(&v, "k");
        let b = gc_bounds(&k).unwrap();
        prop_assert!(b.lower >= k.signature_bound());
        prop_assert_eq!(b.upper, v.genus() as u32);
        prop_assert!(b.lower <= b.upper);
        prop_assert_eq!(b.is_determined(), b.lower == b.upper);
        prop_assert!(b.contributors.iter().all(|(_, x)| *x == b.lower));
        prop_assert_eq!(gc_bounds(&k).unwrap(), b);
        let _ = classify(&k);
    }

    #[test]
    fn table_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let records: Vec<KnotRecord> = (0..r.gen_range(1..6))
            .map(|i| {
                let mut k = record_from(&seifert(r.gen()), &format!("k{i}"));
                if r.gen_bool(0.5) {
                    k.seifert = None;
                }
                if r.gen_bool(0.3) {
                    k.concordant_to = Some("3_1+-4_1".parse().unwrap());
                }
                k
            })
            .collect();
        let table = KnotTable::from_records(records, "mem").unwrap();
        let back = parse_table(&serialize_table(&table), "mem").unwrap();
        prop_assert!(back.rejected.is_empty());
        prop_assert_eq!(back.table, table);
    }

    #[test]
    fn census_ignores_row_order(seed in any::<u64>()) {
        let mut records: Vec<KnotRecord> = [fixtures::worked_11(), fixtures::undetermined_11(), fixtures::slice_11()]
            .iter()
            .flat_map(|t| t.records().to_vec())
            .collect();
        let before = census(&KnotTable::from_records(records.clone(), "a").unwrap());
        records.shuffle(&mut rng(seed));
        let after = census(&KnotTable::from_records(records, "b").unwrap());
        prop_assert_eq!(before.counts, after.counts);
    }

    #[test]
    fn sums_mirror_coherently(seed in any::<u64>()) {
        let reference = fixtures::reference();
        let mut r = rng(seed);
        let summands = (0..r.gen_range(1..=3))
            .map(|_| {
                let k = &reference.records()[r.gen_range(0..reference.len())];
                kcg::bounds::Summand { name: k.name.clone(), mirrored: r.gen() }
            })
            .collect();
        let e = KnotSum { summands };
        let a = evaluate_sum(&e, reference).unwrap();
        let b = evaluate_sum(&e.mirror(), reference).unwrap();
        prop_assert_eq!(&a.alexander, &b.alexander);
        prop_assert_eq!(a.signature, -b.signature);
        prop_assert_eq!(a.factors.expand(), a.alexander);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn matches_are_sound(seed in any::<u64>()) {
        let reference = fixtures::reference();
        let v = seifert(seed);
        let mut k = record_from(&v, "query");
        k.genus3 = Some(k.genus3.unwrap() + 2);
        k.genus4.hi = k.genus3;
        let required = k.required_factors().unwrap().unwrap();
        for m in match_candidates(&k, reference, 2) {
            prop_assert!(m.alexander.checked_div(&required.enhanced).is_some());
            prop_assert!(m.genus3 < k.genus3.unwrap());
            prop_assert_eq!(Some(m.signature), k.signature);
            let eval = evaluate_sum(&m.expression, reference).unwrap();
            prop_assert_eq!(&eval.alexander, &m.alexander);
            prop_assert_eq!(eval.signature, m.signature);
        }
    }
}
