//! Palette bounds of the coloring theorems, as functions of `ω` and `C`.
//!
//! All arithmetic is checked `u128`; `R(a, b)` is replaced by its binomial
//! upper bound, which is exact whenever either argument is at most 2.

use crate::error::{Error, Result};
use crate::oracle::{binomial, ramsey_upper};

fn c(n: usize, k: usize) -> Result<u128> {
    binomial(n as u64, k as u64)
}

fn mul(a: u128, b: u128) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow("bound"))
}

fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow("bound"))
}

fn ramsey(a: usize, b: usize) -> Result<u128> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    ramsey_upper(a as u64, b as u64)
}

/// `2ω + ω²·C(ω-1, t) + C`.
pub fn thm1(omega: usize, t: usize, cc: usize) -> Result<u128> {
    let w = omega as u128;
    add(add(2 * w, mul(w * w, c(omega.saturating_sub(1), t)?)?)?, cc as u128)
}

/// `Σ_{i=1}^{t-1} ω·C(ω, i)`, the largest possible `|S|`.
pub fn s_size(omega: usize, t: usize) -> Result<u128> {
    let mut acc = 0u128;
    for i in 1..t {
        acc = add(acc, mul(omega as u128, c(omega, i)?)?)?;
    }
    Ok(acc)
}

/// `α = R(ω-1, k) + Σ_{i=1}^{t-1} ω·C(ω, i)`.
pub fn thm2_alpha(omega: usize, t: usize, k: usize) -> Result<u128> {
    add(ramsey(omega.saturating_sub(1), k)?, s_size(omega, t)?)
}

/// `m(x) = x + C·x·C(x-1, t)`.
pub fn thm2_m(x: usize, t: usize, cc: usize) -> Result<u128> {
    add(x as u128, mul(mul(cc as u128, x as u128)?, c(x.saturating_sub(1), t)?)?)
}

/// `g(x) = m(x)·(R(x-1, k) + Σ_{i=1}^{t-1} x·C(x, i))`.
pub fn thm2_g(x: usize, t: usize, k: usize, cc: usize) -> Result<u128> {
    mul(thm2_m(x, t, cc)?, thm2_alpha(x, t, k)?)
}

/// `max(α·m(ω), g(ω))`.
pub fn thm2(omega: usize, t: usize, k: usize, cc: usize) -> Result<u128> {
    let lifted = mul(thm2_alpha(omega, t, k)?, thm2_m(omega, t, cc)?)?;
    Ok(lifted.max(thm2_g(omega, t, k, cc)?))
}

/// `C·(2 + Σ_{i=1}^{t-1} C(ω, i) + ω·C(ω-1, t)) + ω`.
pub fn thm3(omega: usize, t: usize, cc: usize) -> Result<u128> {
    let mut groups = 2u128;
    for i in 1..t {
        groups = add(groups, c(omega, i)?)?;
    }
    groups = add(groups, mul(omega as u128, c(omega.saturating_sub(1), t)?)?)?;
    add(mul(cc as u128, groups)?, omega as u128)
}

/// `2ω + ω·C(ω, 2) + 2`.
pub fn thm4(omega: usize) -> Result<u128> {
    let w = omega as u128;
    add(add(2 * w, mul(w, c(omega, 2)?)?)?, 2)
}

/// `α = (ω-1)(k-1)` for the fan-based lifting.
pub fn thm5a_alpha(omega: usize, k: usize) -> u128 {
    (omega.saturating_sub(1) * k.saturating_sub(1)) as u128
}

/// `g(ω) = ω(ω-1)(k-1)`.
pub fn thm5a_g(omega: usize, k: usize) -> u128 {
    omega as u128 * thm5a_alpha(omega, k)
}

/// `max((α+1)·ω, g(ω))`.
pub fn thm5a(omega: usize, k: usize) -> u128 {
    ((thm5a_alpha(omega, k) + 1) * omega as u128).max(thm5a_g(omega, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_arithmetic() {
        assert_eq!(thm3(3, 2, 1).unwrap(), 11);
        assert_eq!(thm4(3).unwrap(), 17);
        assert_eq!(thm2_alpha(4, 2, 2).unwrap(), 19);
        assert_eq!(thm5a_g(4, 2), 12);
        assert_eq!(thm1(4, 2, 0).unwrap(), 8 + 48);
    }

    #[test]
    fn monotone_in_omega() {
        for cc in 0..4 {
            for t in 2..4 {
                for k in 2..4 {
                    for w in 1..12 {
                        assert!(thm1(w, t, cc).unwrap() <= thm1(w + 1, t, cc).unwrap());
                        assert!(thm2(w, t, k, cc).unwrap() <= thm2(w + 1, t, k, cc).unwrap());
                        assert!(thm3(w, t, cc).unwrap() <= thm3(w + 1, t, cc).unwrap());
                        assert!(thm4(w).unwrap() <= thm4(w + 1).unwrap());
                        assert!(thm5a(w, k) <= thm5a(w + 1, k));
                    }
                }
            }
        }
    }

    #[test]
    fn lift_blocks_are_disjoint() {
        let alpha = thm2_alpha(4, 2, 2).unwrap();
        let m = thm2_m(4, 2, 3).unwrap();
        let block = |c: u128| (alpha * (c - 1) + 1)..=(alpha * c);
        for a in 1..=m {
            for b in (a + 1)..=m {
                assert!(block(a).end() < block(b).start());
            }
        }
    }
}
