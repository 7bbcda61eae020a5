//! Medium WZ grids; the acceptance suite runs the full ranges.

use qcongruence::wz::*;

#[test]
fn relation_grid_medium() {
    for pair in WZPairId::ALL {
        for m in 0..=10 {
            for k in 1..=10 {
                assert!(wz_relation_check(pair, m, k), "{pair:?} m={m} k={k}");
            }
        }
    }
}

#[test]
fn telescoping_medium() {
    for pair in WZPairId::ALL {
        for n in (3..=13).step_by(2) {
            assert!(telescoping_check(pair, n), "{pair:?} n={n}");
        }
    }
}

#[test]
fn boundary_and_tail_medium() {
    for n in (3..=15).step_by(2) {
        assert!(sec2_boundary_vanishes(n), "sec2 boundary n={n}");
        assert!(sec3_boundary_vanishes(n), "sec3 boundary n={n}");
        assert!(sec3_tail_vanishes(n), "sec3 tail n={n}");
    }
}
