//! Weighted partition tuples.
//!
//! `PartitionSet::new(n, s)` enumerates all tuples (r_0, ..., r_n) of
//! nonnegative integers with r_0 + ... + r_n = s and
//! r_1 + 2 r_2 + ... + n r_n = n. These index the multinomial expansion of
//! composition coefficients; the brute-force composition oracle walks them
//! directly.

/// All tuples (r_0, ..., r_n) with sum s and weighted sum n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSet {
    pub n: usize,
    pub s: usize,
    pub elements: Vec<Vec<usize>>,
}

impl PartitionSet {
    pub fn new(n: usize, s: usize) -> Self {
        let mut elements = Vec::new();
        let mut current = vec![0usize; n + 1];
        // choose r_n, r_{n-1}, ..., r_1 against the remaining weighted sum,
        // then r_0 soaks up whatever of s is left
        fn recurse(
            index: usize,
            weight_left: usize,
            count_left: usize,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if index == 0 {
                if weight_left == 0 {
                    current[0] = count_left;
                    out.push(current.clone());
                }
                return;
            }
            let max_r = (weight_left / index).min(count_left);
            for r in 0..=max_r {
                current[index] = r;
                recurse(index - 1, weight_left - r * index, count_left - r, current, out);
            }
            current[index] = 0;
        }
        if n == 0 {
            // only the tuple (s)
            elements.push(vec![s]);
        } else {
            recurse(n, n, s, &mut current, &mut elements);
        }
        PartitionSet { n, s, elements }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Independent enumeration via integer partitions of n: every partition
    /// of n with at most s parts, each part <= n, maps to one tuple.
    fn by_integer_partitions(n: usize, s: usize) -> HashSet<Vec<usize>> {
        let mut out = HashSet::new();
        let mut parts = Vec::new();
        fn recurse(
            remaining: usize,
            max_part: usize,
            parts: &mut Vec<usize>,
            n: usize,
            s: usize,
            out: &mut HashSet<Vec<usize>>,
        ) {
            if remaining == 0 {
                if parts.len() <= s {
                    let mut tuple = vec![0usize; n + 1];
                    for &p in parts.iter() {
                        tuple[p] += 1;
                    }
                    tuple[0] = s - parts.len();
                    out.insert(tuple);
                }
                return;
            }
            for part in (1..=max_part.min(remaining)).rev() {
                parts.push(part);
                recurse(remaining - part, part, parts, n, s, out);
                parts.pop();
            }
        }
        if n == 0 {
            out.insert(vec![s]);
        } else {
            recurse(n, n, &mut parts, n, s, &mut out);
        }
        out
    }

    #[test]
    fn exhaustive_and_duplicate_free_up_to_8() {
        for n in 0..=8usize {
            for s in 0..=8usize {
                let ps = PartitionSet::new(n, s);
                let as_set: HashSet<_> = ps.elements.iter().cloned().collect();
                assert_eq!(as_set.len(), ps.elements.len(), "duplicates at n={n}, s={s}");
                assert_eq!(as_set, by_integer_partitions(n, s), "mismatch at n={n}, s={s}");
                for tuple in &ps.elements {
                    assert_eq!(tuple.len(), n + 1);
                    assert_eq!(tuple.iter().sum::<usize>(), s);
                    let weighted: usize = tuple.iter().enumerate().map(|(i, r)| i * r).sum();
                    assert_eq!(weighted, n);
                }
            }
        }
    }

    #[test]
    fn known_small_sets() {
        // R_{2,s}: s=1 -> (0,0,1); s=2 -> (0,2,0) and (1,0,1)
        let r21 = PartitionSet::new(2, 1);
        assert_eq!(r21.elements, vec![vec![0, 0, 1]]);
        let r22 = PartitionSet::new(2, 2);
        let set: HashSet<_> = r22.elements.into_iter().collect();
        assert_eq!(
            set,
            HashSet::from([vec![0, 2, 0], vec![1, 0, 1]])
        );
    }
}
