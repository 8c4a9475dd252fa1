use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::ExactInt;

pub const PERMS_MAX_N: i64 = 9;
pub const PARTITIONS_MAX_N: i64 = 12;
pub const ELEM_SYM_MAX_N: i64 = 9;
pub const COMPLETE_HOM_MAX_N: i64 = 8;
pub const COMPLETE_HOM_MAX_K: i64 = 6;

fn capped(what: &'static str, value: i64, cap: i64) -> Result<usize> {
    if value < 0 {
        return Err(Error::NegativeArgument(value));
    }
    if value > cap {
        return Err(Error::CapExceeded { what, requested: value as u128, cap: cap as u128 });
    }
    Ok(value as usize)
}

fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
        }
    }
    cycles
}

/// Visits every permutation of `0..n` (Heap's algorithm).
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            visit(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Number of permutations of `n` objects with exactly `k` cycles, by
/// listing all `n!` permutations. `n <= 9`.
pub fn count_perms_by_cycles(n: i64, k: i64) -> Result<ExactInt> {
    let n = capped("count_perms_by_cycles n", n, PERMS_MAX_N)?;
    let mut count = 0u64;
    for_each_permutation(n, |p| {
        if cycle_count(p) as i64 == k {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// Visits every restricted growth string of length `n`: `a_0 = 0` and
/// `a_i <= 1 + max(a_0..a_{i-1})`. Each one is a set partition, with the
/// number of blocks passed alongside.
fn for_each_rgs(n: usize, visit: &mut impl FnMut(&[usize], usize)) {
    fn go(a: &mut Vec<usize>, n: usize, blocks: usize, visit: &mut impl FnMut(&[usize], usize)) {
        if a.len() == n {
            visit(a, blocks);
            return;
        }
        for b in 0..=blocks {
            a.push(b);
            go(a, n, blocks.max(b + 1), visit);
            a.pop();
        }
    }
    go(&mut Vec::with_capacity(n), n, 0, visit);
}

/// Number of partitions of an `n`-set into `k` nonempty blocks. `n <= 12`.
pub fn count_set_partitions(n: i64, k: i64) -> Result<ExactInt> {
    let n = capped("count_set_partitions n", n, PARTITIONS_MAX_N)?;
    let mut count = 0u64;
    for_each_rgs(n, &mut |_, blocks| {
        if blocks as i64 == k {
            count += 1;
        }
    });
    Ok(BigInt::from(count))
}

/// Number of partitions of an `n`-set. `n <= 12`.
pub fn bell(n: i64) -> Result<ExactInt> {
    let n = capped("bell n", n, PARTITIONS_MAX_N)?;
    let mut count = 0u64;
    for_each_rgs(n, &mut |_, _| count += 1);
    Ok(BigInt::from(count))
}

/// Sum over `k`-element multisets (or sets, when `distinct`) drawn from
/// `1..=n` of the product of their elements.
fn combination_product_sum(n: usize, k: usize, distinct: bool) -> ExactInt {
    fn go(start: usize, n: usize, left: usize, distinct: bool, acc: &BigInt, total: &mut BigInt) {
        if left == 0 {
            *total += acc;
            return;
        }
        for v in start..=n {
            let next = if distinct { v + 1 } else { v };
            go(next, n, left - 1, distinct, &(acc * v), total);
        }
    }
    let mut total = BigInt::zero();
    go(1, n, k, distinct, &BigInt::one(), &mut total);
    total
}

/// `e_k(1, ..., n)`, by enumerating `k`-subsets. `n <= 9`.
pub fn elem_sym(n: i64, k: i64) -> Result<ExactInt> {
    let n = capped("elem_sym n", n, ELEM_SYM_MAX_N)?;
    if k < 0 {
        return Err(Error::NegativeArgument(k));
    }
    Ok(combination_product_sum(n, k as usize, true))
}

/// `h_k(1, ..., n)`, by enumerating `k`-multisets. `n <= 8`, `k <= 6`.
pub fn complete_hom(n: i64, k: i64) -> Result<ExactInt> {
    let n = capped("complete_hom n", n, COMPLETE_HOM_MAX_N)?;
    let k = capped("complete_hom k", k, COMPLETE_HOM_MAX_K)?;
    Ok(combination_product_sum(n, k, false))
}
