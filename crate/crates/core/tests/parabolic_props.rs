use std::sync::OnceLock;

use proptest::prelude::*;
use standardize_core::oracle::{EnumerationBudget, PositiveMonoid};
use standardize_core::parabolic::{c_of_presentation, central_element, is_prefix, minimal_standardizer, strip_standardizer};
use standardize_core::{ArtinGroup, AtomSet, ParabolicPresentation};

fn b3() -> &'static (ArtinGroup, PositiveMonoid) {
    static CELL: OnceLock<(ArtinGroup, PositiveMonoid)> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = ArtinGroup::named("B3").unwrap();
        let tree = PositiveMonoid::build(&g, EnumerationBudget::new(6, 100_000).unwrap()).unwrap();
        (g, tree)
    })
}

fn signed_word(rank: i32, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    prop::collection::vec((1..=rank, any::<bool>()).prop_map(|(a, neg)| if neg { -a } else { a }), 0..=max_len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn strip_agrees_with_pn_form(bits in 0u64..8, alpha in signed_word(3, 6)) {
        let (g, _) = b3();
        let p = ParabolicPresentation::new(AtomSet::from_bits(bits), g.normalize(&alpha).unwrap());
        let (b, y) = minimal_standardizer(g, &p).unwrap();
        prop_assert_eq!(strip_standardizer(g, &p).unwrap(), (b.clone(), y));
        let c = c_of_presentation(g, &p).unwrap();
        prop_assert_eq!(g.conjugate(&c, &b).unwrap(), central_element(g, y).value);
        prop_assert_eq!(y.len(), p.x.len());
    }

    #[test]
    fn pn_denominator_prefixes_every_standardizer(bits in 1u64..8, alpha in signed_word(3, 3)) {
        let (g, tree) = b3();
        let p = ParabolicPresentation::new(AtomSet::from_bits(bits), g.normalize(&alpha).unwrap());
        let (b, _) = minimal_standardizer(g, &p).unwrap();
        for u in tree.parabolic_standardizers(&p).unwrap() {
            prop_assert!(is_prefix(g, &b, &u).unwrap());
        }
    }
}
