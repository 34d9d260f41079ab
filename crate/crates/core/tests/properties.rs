mod common;

use common::properties::run;

macro_rules! suite {
    ($($test:ident => $name:literal),* $(,)?) => {
        $(
            #[test]
            fn $test() {
                if let Err(e) = run($name) {
                    panic!("{}: {e}", $name);
                }
            }
        )*

        #[test]
        fn every_suite_has_a_test() {
            let mut here = vec![$($name),*];
            let mut all = common::properties::NAMES.to_vec();
            here.sort();
            all.sort();
            assert_eq!(here, all);
        }
    };
}

suite! {
    ring_axioms => "ring-axioms",
    unit_inverse => "unit-inverse",
    poch_recurrence => "poch-recurrence",
    poch_infinite_vs_finite => "poch-infinite-vs-finite",
    euler_reciprocal => "euler-reciprocal",
    euler_product => "euler-product",
    reciprocal_vanishing => "reciprocal-vanishing",
    negative_power => "negative-power",
    t_limit => "t-limit",
    qbinomial_theorem => "qbinomial-theorem",
}
