//! The two q-WZ pairs behind the theorems: their pair relation
//! F(m,k-1) - F(m,k) = G(m+1,k) - G(m,k) and the telescoping identities it
//! yields. Out-of-range terms vanish (1/(q²;q²)_M = 0 for M < 0, and the
//! Gaussian binomial's zero branch); vanishing is realized by returning the
//! exact zero rational function so the telescoping algebra can treat those
//! terms as additive identities.

use crate::qkit::{q_binomial, q_integer, SignedMonomial};
use crate::ratfunc::{RatFunc, RatSum, TermBuilder};

/// The two pairs: the one proving the (4k+1)-series theorem and the one
/// proving the (3k+1)-series theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WZPairId {
    Sec2,
    Sec3,
}

impl WZPairId {
    pub const ALL: [WZPairId; 2] = [WZPairId::Sec2, WZPairId::Sec3];

    pub fn tag(self) -> &'static str {
        match self {
            WZPairId::Sec2 => "sec2",
            WZPairId::Sec3 => "sec3",
        }
    }

    pub fn parse(s: &str) -> Option<WZPairId> {
        match s {
            "sec2" => Some(WZPairId::Sec2),
            "sec3" => Some(WZPairId::Sec3),
            _ => None,
        }
    }
}

const Q: SignedMonomial = SignedMonomial {
    negative: false,
    e_q: 1,
    e_a: 0,
    e_b: 0,
};

/// F(m,k) of the chosen pair.
pub fn wz_f(pair: WZPairId, m: i64, k: i64) -> RatFunc {
    assert!(m >= 0 && k >= 0, "wz_f is defined on the nonnegative grid");
    match pair {
        WZPairId::Sec2 => {
            if m < k {
                // (q^2;q^2)_{m-k} sits in the denominator
                return RatFunc::zero();
            }
            TermBuilder::new()
                .sign((m + k) as u64)
                .q_power((m - k) * (m - k))
                .num_poly(&q_integer(4 * m as u32 + 1))
                .num_poch(Q, 2, m)
                .num_poch(Q, 2, m)
                .num_poch(Q, 2, m + k)
                .den_poch_q(2, 2, m)
                .den_poch_q(2, 2, m)
                .den_poch_q(2, 2, m - k)
                .den_poch_q(1, 2, k)
                .den_poch_q(1, 2, k)
                .build()
        }
        WZPairId::Sec3 => {
            if m < k {
                return RatFunc::zero();
            }
            let qb = q_binomial(2 * m - 2 * k, m, 1);
            if qb.is_zero() {
                return RatFunc::zero();
            }
            TermBuilder::new()
                .sign(m as u64)
                .num_poly(&q_integer((3 * m - 2 * k + 1) as u32))
                .num_poly(&qb)
                .num_poch(Q, 2, m)
                .num_poch(Q, 2, m - k)
                .den_poch_q(1, 1, m)
                .den_poch_q(2, 2, m - k)
                .build()
        }
    }
}

/// G(m,k) of the chosen pair.
pub fn wz_g(pair: WZPairId, m: i64, k: i64) -> RatFunc {
    assert!(m >= 0 && k >= 0, "wz_g is defined on the nonnegative grid");
    match pair {
        WZPairId::Sec2 => {
            // (q^2;q^2)_{m-1}^2 and (q^2;q^2)_{m-k} in the denominator
            if m == 0 || m < k {
                return RatFunc::zero();
            }
            TermBuilder::new()
                .sign((m + k) as u64)
                .q_power((m - k) * (m - k))
                .num_poch(Q, 2, m)
                .num_poch(Q, 2, m)
                .num_poch(Q, 2, m + k - 1)
                .den_one_minus_q_pow(1, 1)
                .den_poch_q(2, 2, m - 1)
                .den_poch_q(2, 2, m - 1)
                .den_poch_q(2, 2, m - k)
                .den_poch_q(1, 2, k)
                .den_poch_q(1, 2, k)
                .build()
        }
        WZPairId::Sec3 => {
            if m == 0 || m < k {
                return RatFunc::zero();
            }
            let qb = q_binomial(2 * m - 2 * k, m - 1, 1);
            if qb.is_zero() {
                return RatFunc::zero();
            }
            // carries q^{m+1-2k}, negative for large k
            TermBuilder::new()
                .sign((m + 1) as u64)
                .num_poly(&q_integer(m as u32))
                .num_poly(&qb)
                .num_poch(Q, 2, m)
                .num_poch(Q, 2, m - k)
                .q_power(m + 1 - 2 * k)
                .den_poch_q(1, 1, m)
                .den_poch_q(2, 2, m - k)
                .build()
        }
    }
}

/// Verifies F(m,k-1) - F(m,k) = G(m+1,k) - G(m,k) exactly.
pub fn wz_relation_check(pair: WZPairId, m: i64, k: i64) -> bool {
    assert!(m >= 0 && k >= 1);
    let mut acc = RatSum::new();
    acc.add_ratfunc(&wz_f(pair, m, k - 1));
    acc.add_ratfunc(&wz_f(pair, m, k).neg());
    acc.add_ratfunc(&wz_g(pair, m + 1, k).neg());
    acc.add_ratfunc(&wz_g(pair, m, k));
    acc.finish().is_zero()
}

fn sum_f_row(pair: WZPairId, m_max: i64) -> RatFunc {
    let mut acc = RatSum::new();
    for m in 0..=m_max {
        acc.add_ratfunc(&wz_f(pair, m, 0));
    }
    acc.finish()
}

fn sum_g(pair: WZPairId, m: i64, k_from: i64, k_to: i64) -> RatFunc {
    let mut acc = RatSum::new();
    for k in k_from..=k_to {
        acc.add_ratfunc(&wz_g(pair, m, k));
    }
    acc.finish()
}

/// The telescoping identities each proof rests on, verified as exact
/// identities in the rational-function field.
///
/// First pair (odd n >= 3):
///   Σ_{m=0}^{(n-1)/2} F(m,0) - F((n-1)/2,(n-1)/2) = Σ_{k=1}^{(n-1)/2} G((n+1)/2,k).
///
/// Second pair:
///   Σ_{m=0}^{n-1} F(m,0) = Σ_{k=1}^{n-1} G(n,k) = Σ_{k=1}^{(n+1)/2} G(n,k),
/// together with the rewritten product form of the same identity: the sum
/// Σ (-1)^m [3m+1] (q;q²)_m³/(q;q)_m³ equals
/// [n]·C(2n-1,n-1)_q/(-q;q)_{n-1} times the truncated G-style sum.
pub fn telescoping_check(pair: WZPairId, n: i64) -> bool {
    assert!(n >= 3 && n % 2 == 1, "telescoping needs odd n >= 3");
    match pair {
        WZPairId::Sec2 => {
            let half = (n - 1) / 2;
            let lhs = sum_f_row(pair, half).sub(&wz_f(pair, half, half));
            let rhs = sum_g(pair, (n + 1) / 2, 1, half);
            lhs == rhs
        }
        WZPairId::Sec3 => {
            let s_f = sum_f_row(pair, n - 1);
            let s_g_full = sum_g(pair, n, 1, n - 1);
            let s_g_trunc = sum_g(pair, n, 1, (n + 1) / 2);
            if s_f != s_g_full || s_f != s_g_trunc {
                return false;
            }
            let printed_lhs = {
                let mut acc = RatSum::new();
                for m in 0..n {
                    let t = TermBuilder::new()
                        .sign(m as u64)
                        .num_poly(&q_integer(3 * m as u32 + 1))
                        .num_poch(Q, 2, m)
                        .num_poch(Q, 2, m)
                        .num_poch(Q, 2, m)
                        .den_poch_q(1, 1, m)
                        .den_poch_q(1, 1, m)
                        .den_poch_q(1, 1, m)
                        .build();
                    acc.add_ratfunc(&t);
                }
                acc.finish()
            };
            let printed_rhs = {
                let mut inner = RatSum::new();
                for k in 1..=(n + 1) / 2 {
                    let t = TermBuilder::new()
                        .num_poly(&q_binomial(2 * n - 2 * k, n - 1, 1))
                        .num_poch(Q, 2, n - k)
                        .q_power(n + 1 - 2 * k)
                        .den_poch_q(2, 2, n - k)
                        .build();
                    inner.add_ratfunc(&t);
                }
                let prefactor = TermBuilder::new()
                    .num_poly(&q_integer(n as u32))
                    .num_poly(&q_binomial(2 * n - 1, n - 1, 1))
                    .den_poch_neg_q(1, 1, n - 1)
                    .build();
                prefactor.mul(&inner.finish())
            };
            s_f == printed_lhs && printed_lhs == printed_rhs
        }
    }
}

/// Boundary vanishing used in the first pair's telescoping:
/// F(m,(n-1)/2) = 0 for m < (n-1)/2.
pub fn sec2_boundary_vanishes(n: i64) -> bool {
    let half = (n - 1) / 2;
    (0..half).all(|m| wz_f(WZPairId::Sec2, m, half).is_zero())
}

/// Boundary vanishing used in the second pair's telescoping:
/// F(m,n-1) = 0 for m <= n-1.
pub fn sec3_boundary_vanishes(n: i64) -> bool {
    (0..=n - 1).all(|m| wz_f(WZPairId::Sec3, m, n - 1).is_zero())
}

/// Tail vanishing that justifies truncating Σ G(n,k) at k = (n+1)/2:
/// G(n,k) = 0 for (n+1)/2 < k <= n-1.
pub fn sec3_tail_vanishes(n: i64) -> bool {
    ((n + 1) / 2 + 1..=n - 1).all(|k| wz_g(WZPairId::Sec3, n, k).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;
    use crate::poly::MPoly;
    use crate::ratfunc::rf_make;

    #[test]
    fn sec2_base_values() {
        assert!(wz_f(WZPairId::Sec2, 0, 0).is_one());
        assert!(wz_f(WZPairId::Sec2, 0, 1).is_zero());
        assert!(wz_g(WZPairId::Sec2, 0, 1).is_zero());
        // G(1,1) = (1-q)^3 / ((1-q)(1-q)^2) = 1
        assert_eq!(wz_g(WZPairId::Sec2, 1, 1), RatFunc::from_coeff(int(1)));
    }

    #[test]
    fn sec3_direct_expansion_m1() {
        // F(1,0) = -[4] [2 choose 1]_q (1-q)^2 / ((1-q)(1-q^2)) = -[4]
        let f10 = wz_f(WZPairId::Sec3, 1, 0);
        let expected = RatFunc::from_poly(q_integer(4).neg());
        assert_eq!(f10, expected);

        // G(1,0): (-1)^2 [1] [2 choose 0]_q (1-q)^2 q^2 / ((1-q)(1-q^2))
        //       = q^2 / (1+q)
        let g10 = wz_g(WZPairId::Sec3, 1, 0);
        let expected = rf_make(&MPoly::q_pow(2), &MPoly::one().add(&MPoly::q_pow(1))).unwrap();
        assert_eq!(g10, expected);
    }

    #[test]
    fn relation_small_grid() {
        for pair in WZPairId::ALL {
            for m in 0..=6 {
                for k in 1..=6 {
                    assert!(wz_relation_check(pair, m, k), "{pair:?} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn relation_spec_instances() {
        assert!(wz_relation_check(WZPairId::Sec2, 0, 1));
        assert!(wz_relation_check(WZPairId::Sec2, 3, 2));
        assert!(wz_relation_check(WZPairId::Sec3, 2, 1));
    }

    #[test]
    fn telescoping_small() {
        assert!(telescoping_check(WZPairId::Sec2, 3));
        assert!(telescoping_check(WZPairId::Sec2, 5));
        assert!(telescoping_check(WZPairId::Sec3, 3));
        assert!(telescoping_check(WZPairId::Sec3, 5));
    }

    #[test]
    fn vanishing_small() {
        for n in [3i64, 5, 7, 9] {
            assert!(sec2_boundary_vanishes(n));
            assert!(sec3_boundary_vanishes(n));
            assert!(sec3_tail_vanishes(n));
        }
    }
}
