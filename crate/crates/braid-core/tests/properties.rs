//! Property tests for the word algebra, both normal-form engines, the
//! partition lattice, and the translation maps.

mod common;

use braid_core::bridge;
use braid_core::garside::band::{self, ncp_meet};
use braid_core::garside::classical::{self, normal_form};
use braid_core::harness::SplitMix64;
use braid_core::word::{ArtinWord, TypeBWord};
use common::*;
use proptest::prelude::*;

fn artin_word_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = ArtinWord> {
    (3..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((1..n as i32, proptest::bool::ANY), 0..=max_len).prop_map(
            move |pairs| {
                let letters = pairs
                    .into_iter()
                    .map(|(i, pos)| if pos { i } else { -i })
                    .collect();
                ArtinWord::new(n, letters).expect("in range")
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn permutation_map_is_a_homomorphism(
        w in artin_word_strategy(7, 12),
        tail in proptest::collection::vec((1..6i32, proptest::bool::ANY), 0..12),
    ) {
        let n = w.strands();
        let letters: Vec<i32> = tail
            .into_iter()
            .map(|(i, pos)| {
                let i = (i as usize - 1) % (n - 1) + 1;
                if pos { i as i32 } else { -(i as i32) }
            })
            .collect();
        let v = ArtinWord::new(n, letters).unwrap();
        let combined = w.concat(&v).unwrap();
        prop_assert_eq!(
            combined.permutation(),
            w.permutation().then(&v.permutation())
        );
    }

    #[test]
    fn exponent_sum_negates_under_inversion(w in artin_word_strategy(7, 16)) {
        prop_assert_eq!(w.inverse().exponent_sum(), -w.exponent_sum());
        prop_assert!(w.concat(&w.inverse()).unwrap().free_reduce().is_empty());
    }

    #[test]
    fn parse_render_round_trip(w in artin_word_strategy(9, 16)) {
        let text = w.to_string();
        prop_assert_eq!(ArtinWord::parse(&text, w.strands()).unwrap(), w);
    }

    #[test]
    fn normal_forms_are_left_weighted(w in artin_word_strategy(7, 14)) {
        let nf = normal_form(&w);
        prop_assert!(nf.is_left_weighted());
        // Rebuilding from the canonical word is a fixed point.
        prop_assert_eq!(normal_form(&classical::to_word(&nf)), nf);
    }

    #[test]
    fn normal_form_multiplication_is_consistent(
        w in artin_word_strategy(6, 10),
        tail in proptest::collection::vec((1..5i32, proptest::bool::ANY), 0..10),
    ) {
        let n = w.strands();
        let letters: Vec<i32> = tail
            .into_iter()
            .map(|(i, pos)| {
                let i = (i as usize - 1) % (n - 1) + 1;
                if pos { i as i32 } else { -(i as i32) }
            })
            .collect();
        let v = ArtinWord::new(n, letters).unwrap();
        prop_assert_eq!(
            normal_form(&w).mul(&normal_form(&v)),
            normal_form(&w.concat(&v).unwrap())
        );
        prop_assert!(normal_form(&w).mul(&normal_form(&w).inverse()).is_trivial());
    }
}

#[test]
fn relation_rewrites_preserve_everything() {
    let mut rng = SplitMix64::new(2024);
    for trial in 0..300 {
        let n = 3 + (trial % 5);
        let len = 3 + (trial % 14);
        let w = random_artin_word(n, len, &mut rng);
        let v = rewrite_artin(&w, &mut rng, 12);
        assert_eq!(w.exponent_sum(), v.exponent_sum());
        assert_eq!(w.permutation(), v.permutation());
        assert_eq!(normal_form(&w), normal_form(&v), "w={w} v={v}");
    }
}

#[test]
fn band_relation_rewrites_preserve_normal_form() {
    let mut rng = SplitMix64::new(77);
    for trial in 0..300 {
        let m = 3 + (trial % 5);
        let len = 3 + (trial % 12);
        let w = random_band_word(m, len, &mut rng);
        let v = rewrite_band(&w, &mut rng, 12);
        assert_eq!(band::normal_form(&w), band::normal_form(&v), "w={w} v={v}");
    }
}

#[test]
fn band_normal_forms_are_valid_partitions() {
    let mut rng = SplitMix64::new(5150);
    for trial in 0..200 {
        let m = 3 + (trial % 6);
        let w = random_band_word(m, 2 + trial % 12, &mut rng);
        let nf = band::normal_form(&w);
        assert!(nf.is_left_weighted());
        for f in nf.factors() {
            assert!(f.is_valid());
        }
    }
}

#[test]
fn meet_is_a_lattice_meet() {
    // Exhaustive over all non-crossing partitions at m = 5: idempotent,
    // commutative, associative on a sample, and a lower bound in the
    // refinement order.
    let contains =
        |coarse: &braid_core::garside::band::Ncp, fine: &braid_core::garside::band::Ncp| -> bool {
            fine.blocks().iter().all(|fb| {
                coarse
                    .blocks()
                    .iter()
                    .any(|cb| fb.iter().all(|p| cb.contains(p)))
            })
        };
    let all = all_ncps(5);
    assert_eq!(all.len(), 42); // Catalan number C_5
    for p in &all {
        assert_eq!(&ncp_meet(p, p).unwrap(), p);
    }
    for p in &all {
        for q in &all {
            let m1 = ncp_meet(p, q).unwrap();
            let m2 = ncp_meet(q, p).unwrap();
            assert_eq!(m1, m2);
            assert!(contains(p, &m1));
            assert!(contains(q, &m1));
        }
    }
    let mut rng = SplitMix64::new(9);
    for _ in 0..2000 {
        let pick = |rng: &mut SplitMix64| all[rng.next_below(42) as usize].clone();
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let left = ncp_meet(&ncp_meet(&a, &b).unwrap(), &c).unwrap();
        let right = ncp_meet(&a, &ncp_meet(&b, &c).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}

#[test]
fn phi_is_an_isomorphism_on_words() {
    let mut rng = SplitMix64::new(31337);
    for trial in 0..120 {
        let m = 3 + (trial % 5);
        let w = random_band_word(m, 1 + trial % 10, &mut rng);
        let artin = band::phi_translate(&w);
        // Exponent-sum correspondence: each band generator maps to a word
        // of exponent sum one.
        assert_eq!(artin.exponent_sum(), w.exponent_sum());
        let back = band::phi_inverse(&artin);
        assert_eq!(band::normal_form(&back), band::normal_form(&w));
    }
}

#[test]
fn periodic_braids_reduce_to_canonical_length_at_most_one() {
    use braid_core::garside::classical::min_length_representative;
    let mut rng = SplitMix64::new(0x1D);
    for n in 3..=8usize {
        for &k in &[-3i64, -1, 1, 2, 4] {
            for fam in 0..2 {
                let target = if fam == 0 {
                    ArtinWord::delta(n)
                } else {
                    ArtinWord::epsilon(n)
                };
                let conj = common::random_artin_word(n, 8, &mut rng);
                let x = target.power(k).conjugate_by(&conj).unwrap();
                let (nf, receipt) = min_length_representative(&x).unwrap();
                assert!(
                    nf.canonical_length() <= 1,
                    "periodic braid reduced to length {} at n={n}, k={k}",
                    nf.canonical_length()
                );
                assert_eq!(normal_form(&x.conjugate_by(&receipt).unwrap()), nf);
            }
        }
    }
}

#[test]
fn bridge_images_are_symmetric_and_short() {
    let mut rng = SplitMix64::new(404);
    for trial in 0..100 {
        let n = 4 + (trial % 4);
        let rank = n - 1;
        let len = 1 + trial % 10;
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.next_below(rank as u64) as i32 + 1;
                if rng.next_below(2) == 0 {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let w = bridge::rho_apply(&TypeBWord::new(rank, letters).unwrap());
        let z = bridge::artin_to_sym(&w).unwrap();
        assert!(z.len() <= 2 * w.len());
        // Every normal-form factor of the image is invariant under the half
        // rotation, so the polygonal splitting succeeds.
        assert!(bridge::decompose_polygonal(&z).is_ok());
    }
}
