use proptest::prelude::*;

use standardize_core::curves::DynnikovCoords;
use standardize_core::garside::ArtinGroup;

fn round_systems(n: usize) -> Vec<Vec<(usize, usize)>> {
    let mut single: Vec<Vec<(usize, usize)>> = Vec::new();
    for p in 1..=n {
        for q in p + 1..=n {
            if !(p == 1 && q == n) {
                single.push(vec![(p, q)]);
            }
        }
    }
    let mut systems = single.clone();
    for a in &single {
        for b in &single {
            let (p, q) = a[0];
            let (r, s) = b[0];
            if q < r || (r <= p && q <= s && (p, q) != (r, s)) {
                systems.push(vec![a[0], b[0]]);
            }
        }
    }
    systems
}

fn word_strategy(n: usize, len: usize) -> impl Strategy<Value = Vec<i32>> {
    let gens = (n - 1) as i32;
    prop::collection::vec((1..=gens, any::<bool>()), 0..len)
        .prop_map(|v| v.into_iter().map(|(g, s)| if s { g } else { -g }).collect())
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<i32>)> {
    (3usize..=6).prop_flat_map(|n| (Just(n), 0..round_systems(n).len(), word_strategy(n, 14)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn boundary_coordinates_stay_zero((n, i, w) in case()) {
        let c = DynnikovCoords::round_system(&round_systems(n)[i], n).unwrap();
        let mut d = c.clone();
        for &l in &w {
            d = d.apply_braid(&[l]).unwrap();
            prop_assert!(d.a()[0] == 0.into() && d.a()[n - 1] == 0.into());
        }
    }

    #[test]
    fn action_inverts((n, i, w) in case()) {
        let c = DynnikovCoords::round_system(&round_systems(n)[i], n).unwrap();
        let inv = standardize_core::atoms::inverse_word(&w);
        let d = c.apply_braid(&w).unwrap();
        prop_assert_eq!(d.apply_braid(&inv).unwrap(), c);
    }

    #[test]
    fn action_factors_through_the_group((n, i, w) in case()) {
        let g = ArtinGroup::named(&format!("A{}", n - 1)).unwrap();
        let c = DynnikovCoords::round_system(&round_systems(n)[i], n).unwrap();
        let canonical = g.to_word(&g.normalize(&w).unwrap());
        prop_assert_eq!(c.apply_braid(&w).unwrap(), c.apply_braid(&canonical).unwrap());
    }

    #[test]
    fn length_bounds_and_rounding((n, i, w) in case()) {
        let c = DynnikovCoords::round_system(&round_systems(n)[i], n).unwrap();
        let d = c.apply_braid(&w).unwrap();
        prop_assert!(d.curve_length() <= d.coordinate_weight());
        let beta = d.standardize().unwrap();
        let target = d.apply_braid(&beta).unwrap();
        prop_assert!(target.is_standard());
        prop_assert!(num_bigint::BigInt::from(2 * beta.len()) <= d.curve_length() * ((n - 1) * (n - 1)));
        // standard iff no bending point
        prop_assert_eq!(d.census().first_bending().is_none(), d.is_standard());
    }
}

#[test]
fn braid_relations_hold_on_coordinates() {
    for n in 3..=6 {
        for sys in round_systems(n) {
            let c = DynnikovCoords::round_system(&sys, n).unwrap().apply_braid(&[1, -2, 1, 2, 2]).unwrap();
            for i in 1..n as i32 - 1 {
                let lhs = c.apply_braid(&[i, i + 1, i]).unwrap();
                let rhs = c.apply_braid(&[i + 1, i, i + 1]).unwrap();
                assert_eq!(lhs, rhs);
            }
            for i in 1..n as i32 {
                for j in i + 2..n as i32 {
                    assert_eq!(c.apply_braid(&[i, j]).unwrap(), c.apply_braid(&[j, i]).unwrap());
                }
            }
        }
    }
}
