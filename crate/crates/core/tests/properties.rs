mod common;

use common::*;
use pollyanna_core::decompose::decompose_auto;
use pollyanna_core::detect::is_member;
use pollyanna_core::oracle::OracleCaps;
use pollyanna_core::properties::{check_property, hypothesis, PropertyId, PropertyParams, Status};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// Members one size past the exhaustive sweep still satisfy every property,
    /// and the report's hypothesis flag agrees with an explicit membership test.
    #[test]
    fn members_satisfy_their_property(g in arb_graph(9), which in 0usize..10) {
        let p = PropertyId::ALL[which];
        let params = PropertyParams::default();
        let dec = decompose_auto(&g, params.t).unwrap();
        let r = check_property(&g, &dec, p, &params, &OracleCaps::default()).unwrap();
        let member = is_member(&g, &hypothesis(p, &params).unwrap()).member;
        prop_assert_eq!(r.hypothesis_met, member);
        prop_assert_eq!(r.holds, r.status == Status::Holds);
        if member {
            prop_assert!(r.status != Status::Fails, "{} fails on {}", p, pollyanna_core::graph6::write_graph6(&g));
            for sc in &r.subclaims {
                prop_assert!(sc.holds, "{}: {}", p, sc.name);
            }
        }
    }
}
