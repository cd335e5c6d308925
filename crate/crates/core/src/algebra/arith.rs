use num_integer::Integer;

use super::AlgebraError;

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn lcm(a: i64, b: i64) -> i64 {
    a.lcm(&b)
}

/// Inverse of `a` modulo `n`, as the representative in `[0, n)`.
pub fn mod_inverse(a: i64, n: i64) -> Result<i64, AlgebraError> {
    if n <= 0 {
        return Err(AlgebraError::NonPositiveModulus(n));
    }
    let e = (a as i128).extended_gcd(&(n as i128));
    if e.gcd != 1 {
        return Err(AlgebraError::NotCoprime { a, n });
    }
    Ok(e.x.rem_euclid(n as i128) as i64)
}
