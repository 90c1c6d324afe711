//! Minimum of `xi(a_1..a_k) = sum a_i (a_i + 1)` over integer vectors with
//! every `a_i >= 2` and `sum a_i = A`.

use crate::error::{Error, Result};

/// Enumeration bounds for [`xi_min_bruteforce`].
pub const BRUTEFORCE_MAX_K: u32 = 6;
pub const BRUTEFORCE_MAX_TOTAL: u32 = 40;

fn check_feasible(k: u32, total: u32) -> Result<()> {
    if k == 0 || total < 2 * k {
        return Err(Error::Infeasible { k, total });
    }
    Ok(())
}

/// Closed form: with `A = k a + l`, `0 <= l < k`, the minimum is
/// `k a^2 + (k + 2l) a + 2l`, attained by `k - l` entries `a` and `l`
/// entries `a + 1`.
pub fn xi_min_formula(k: u32, total: u32) -> Result<u64> {
    check_feasible(k, total)?;
    let (k, total) = (u64::from(k), u64::from(total));
    let a = total / k;
    let l = total % k;
    Ok(k * a * a + (k + 2 * l) * a + 2 * l)
}

/// Exhaustive search over nondecreasing vectors.
pub fn xi_min_bruteforce(k: u32, total: u32) -> Result<u64> {
    check_feasible(k, total)?;
    if k > BRUTEFORCE_MAX_K {
        return Err(Error::limit("xi brute force: k", BRUTEFORCE_MAX_K));
    }
    if total > BRUTEFORCE_MAX_TOTAL {
        return Err(Error::limit("xi brute force: A", BRUTEFORCE_MAX_TOTAL));
    }
    let mut best = u64::MAX;
    let mut prefix = Vec::with_capacity(k as usize);
    search(k as usize, total, 2, &mut prefix, &mut best);
    Ok(best)
}

fn search(slots: usize, remaining: u32, floor: u32, prefix: &mut Vec<u32>, best: &mut u64) {
    if slots == 1 {
        if remaining >= floor {
            prefix.push(remaining);
            let value = prefix.iter().map(|&a| u64::from(a) * u64::from(a + 1)).sum();
            *best = (*best).min(value);
            prefix.pop();
        }
        return;
    }
    for a in floor..=remaining {
        if a * slots as u32 > remaining {
            break;
        }
        prefix.push(a);
        search(slots - 1, remaining - a, a, prefix, best);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(xi_min_formula(2, 6), Ok(24));
        assert_eq!(xi_min_formula(1, 5), Ok(30));
        // (2,3,3) -> 6 + 12 + 12; (2,2,4) gives 32
        assert_eq!(xi_min_formula(3, 8), Ok(30));
        assert_eq!(xi_min_bruteforce(3, 8), Ok(30));
        assert_eq!(xi_min_bruteforce(2, 6), Ok(24));
        assert_eq!(xi_min_bruteforce(2, 4), Ok(12));
        assert_eq!(xi_min_bruteforce(3, 6), Ok(18));
    }

    #[test]
    fn infeasible_and_limits() {
        assert_eq!(xi_min_formula(2, 3), Err(Error::Infeasible { k: 2, total: 3 }));
        assert!(matches!(xi_min_bruteforce(0, 3), Err(Error::Infeasible { .. })));
        assert!(matches!(
            xi_min_bruteforce(7, 20),
            Err(Error::LimitExceeded { .. })
        ));
        assert!(matches!(
            xi_min_bruteforce(2, 41),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn exchange_step_decreases_xi() {
        let xi = |u: u64| u * (u + 1);
        for v in 4..=30u64 {
            for u in 2..=v - 2 {
                assert!(xi(u) + xi(v) > xi(u + 1) + xi(v - 1), "u={u} v={v}");
            }
        }
    }
}
