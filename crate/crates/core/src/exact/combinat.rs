use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// C(n, k), with C(n, k) = 0 whenever `k < 0`, `k > n` or `n < 0`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc *= n - j;
        acc /= j + 1;
    }
    acc
}

/// (-1)^e from the parity of `e`.
pub fn sign_pow<T: Integer>(e: &T) -> i64 {
    if e.is_even() {
        1
    } else {
        -1
    }
}
