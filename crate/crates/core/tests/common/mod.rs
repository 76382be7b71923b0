#![allow(dead_code)]

use proptest::prelude::*;
use wildmono::ramification::RamFiltration;

/// Random valid filtrations: a tame index prime to `p` on `G_0`, then a
/// descending run of `p`-power orders with random lengths.
pub fn filtration() -> impl Strategy<Value = RamFiltration> {
    (
        prop_oneof![Just(2u64), Just(3u64), Just(5u64)],
        0u32..5,
        1u64..12,
        proptest::collection::vec((1u32..6, 0u32..3), 1..5),
    )
        .prop_map(|(p, top, tame, runs)| {
            let tame = if tame % p == 0 { tame + 1 } else { tame };
            let mut e = top;
            let mut segs = vec![(0u32, 0u32, tame * p.pow(e))];
            let mut next = 1u32;
            for (len, drop) in runs {
                if e == 0 {
                    break;
                }
                segs.push((next, next + len - 1, p.pow(e)));
                next += len;
                e = e.saturating_sub(drop.max(1));
            }
            RamFiltration::new(p, &segs).expect("generated filtration is valid")
        })
}
