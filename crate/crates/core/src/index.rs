//! Canonical ordering of vertex pairs and triples.
//!
//! Every vector and matrix in this crate that is indexed by edges or by
//! 2-faces uses the lexicographic order defined here: pairs (i, j) with
//! 0 <= i < j <= n sorted by (i, j), and triples (i, j, k) with i < j < k
//! sorted by (i, j, k). All positional lookups must go through this module so
//! that the convention lives in exactly one place.

/// Number of unordered vertex pairs on vertices 0..=n.
pub fn pair_count(n: usize) -> usize {
    (n + 1) * n / 2
}

/// Number of unordered vertex triples on vertices 0..=n.
pub fn triple_count(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        (n + 1) * n * (n - 1) / 6
    }
}

/// All pairs (i, j), i < j <= n, in canonical order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pair_count(n));
    for i in 0..=n {
        for j in (i + 1)..=n {
            out.push((i, j));
        }
    }
    out
}

/// All triples (i, j, k), i < j < k <= n, in canonical order.
pub fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(triple_count(n));
    for i in 0..=n {
        for j in (i + 1)..=n {
            for k in (j + 1)..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Position of the pair {i, j} in the canonical order. The arguments may come
/// in either order but must be distinct and at most n.
pub fn pair_position(n: usize, i: usize, j: usize) -> usize {
    assert!(i != j, "a pair consists of two distinct vertices");
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    assert!(j <= n, "vertex {j} out of range for n = {n}");
    // pairs starting at i', i' < i, number (n - i') each; their total is
    // i*(2n - i + 1)/2, always an exact division
    i * (2 * n - i + 1) / 2 + (j - i - 1)
}

/// Position of the triple {i, j, k} in the canonical order. The arguments may
/// come in any order but must be pairwise distinct and at most n.
pub fn triple_position(n: usize, i: usize, j: usize, k: usize) -> usize {
    let mut v = [i, j, k];
    v.sort_unstable();
    let [i, j, k] = v;
    assert!(
        i != j && j != k,
        "a triple consists of three distinct vertices"
    );
    assert!(k <= n, "vertex {k} out of range for n = {n}");
    // triples starting below i, then pairs {j, k} inside {i+1, ..., n}
    let before: usize = (0..i).map(|a| pair_count(n - a - 1)).sum();
    let m = n - i - 1; // {i+1, ..., n} relabeled to 0..=m
    before + pair_position(m, j - i - 1, k - i - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(pair_count(1), 1);
        assert_eq!(pair_count(4), 10);
        assert_eq!(triple_count(1), 0);
        assert_eq!(triple_count(2), 1);
        assert_eq!(triple_count(4), 10);
        assert_eq!(triple_count(5), 20);
        assert_eq!(triple_count(6), 35);
    }

    #[test]
    fn pair_positions_match_enumeration() {
        for n in 1..=8 {
            let all = pairs(n);
            assert_eq!(all.len(), pair_count(n));
            for (pos, &(i, j)) in all.iter().enumerate() {
                assert_eq!(pair_position(n, i, j), pos);
                assert_eq!(pair_position(n, j, i), pos, "order-insensitive");
            }
        }
    }

    #[test]
    fn triple_positions_match_enumeration() {
        for n in 2..=8 {
            let all = triples(n);
            assert_eq!(all.len(), triple_count(n));
            for (pos, &(i, j, k)) in all.iter().enumerate() {
                assert_eq!(triple_position(n, i, j, k), pos);
                assert_eq!(triple_position(n, k, i, j), pos, "order-insensitive");
            }
        }
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn rejects_degenerate_pair() {
        pair_position(4, 2, 2);
    }
}
