//! Lexicographic ranking of permutations via Lehmer codes, plus the
//! parity-halved variant used to index one parity class densely.

use crate::perm::Parity;

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of `seq`, a permutation of `0..seq.len()`.
pub fn lex_rank(seq: &[u8]) -> usize {
    let n = seq.len();
    let mut rank = 0;
    let mut used: u32 = 0;
    for (i, &x) in seq.iter().enumerate() {
        let smaller_unused = x as u32 - (used & ((1u32 << x) - 1)).count_ones();
        rank += smaller_unused as usize * factorial(n - 1 - i);
        used |= 1 << x;
    }
    rank
}

pub fn lex_unrank(n: usize, mut rank: usize) -> Vec<u8> {
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

pub fn seq_parity(seq: &[u8]) -> Parity {
    let mut inversions = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    Parity::from_count(inversions)
}

/// Index of `seq` among permutations of its own parity, in `0..n!/2`.
///
/// Lexicographic neighbours `2k` and `2k+1` differ by swapping the last two
/// entries, so exactly one of them has each parity.
pub fn parity_rank(seq: &[u8]) -> usize {
    lex_rank(seq) / 2
}

pub fn parity_unrank(n: usize, index: usize, parity: Parity) -> Vec<u8> {
    let seq = lex_unrank(n, 2 * index);
    if seq_parity(&seq) == parity {
        seq
    } else {
        lex_unrank(n, 2 * index + 1)
    }
}
