//! Brute-force oracles that share no code with the library.

#![allow(dead_code)]

/// Number of set partitions of an `n`-set with exactly `k` blocks, for every
/// `k`, by walking all restricted growth strings.
pub fn set_partitions_by_blocks(n: usize) -> Vec<u64> {
    let mut counts = vec![0u64; n + 1];
    if n == 0 {
        counts[0] = 1;
        return counts;
    }
    let mut labels = vec![0usize; n];
    fn walk(pos: usize, max_label: usize, labels: &mut [usize], counts: &mut [u64]) {
        if pos == labels.len() {
            counts[max_label + 1] += 1;
            return;
        }
        for label in 0..=max_label + 1 {
            labels[pos] = label;
            walk(pos + 1, max_label.max(label), labels, counts);
        }
    }
    labels[0] = 0;
    walk(1, 0, &mut labels, &mut counts);
    counts
}

/// Number of ordered set partitions of an `n`-set, by choosing the first block
/// as every nonempty subset of the remaining elements and recursing.
pub fn ordered_partitions(n: usize) -> u64 {
    fn count(remaining: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        let mut block = remaining;
        while block != 0 {
            total += count(remaining & !block);
            block = (block - 1) & remaining;
        }
        total
    }
    count(((1u64 << n) - 1) as u32)
}

#[test]
fn oracle_sanity() {
    assert_eq!(set_partitions_by_blocks(3), vec![0, 1, 3, 1]);
    assert_eq!(ordered_partitions(3), 13);
}
