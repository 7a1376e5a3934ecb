//! Word-slice bitset helpers shared by the graph and clique machinery.
//!
//! Vertex sets are `&[u64]` slices, least significant bit first. All graphs
//! at desk scale fit a handful of words; the helpers stay branch-light and
//! allocation-free so the clique and Poincare-Hopf recursions can run on
//! stack scratch.

/// Words needed for `n` bits.
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

pub fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1u64 << (i % 64);
}

pub fn clear_bit(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1u64 << (i % 64));
}

pub fn test_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

pub fn count_ones(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

pub fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// `out = a & b` for equal-length slices.
pub fn and_into(a: &[u64], b: &[u64], out: &mut [u64]) {
    for ((o, &x), &y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

/// Iterator over the set bit positions, ascending.
pub fn iter_bits<'a>(words: &'a [u64]) -> impl Iterator<Item = usize> + 'a {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * 64 + b)
            }
        })
    })
}

/// Mask selecting bits strictly below position `i`, applied in place.
pub fn keep_below(words: &mut [u64], i: usize) {
    let wi = i / 64;
    for (k, w) in words.iter_mut().enumerate() {
        if k > wi {
            *w = 0;
        } else if k == wi {
            let off = i % 64;
            *w &= if off == 0 { 0 } else { u64::MAX >> (64 - off) };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_roundtrip() {
        let mut w = vec![0u64; 2];
        for i in [0, 5, 63, 64, 100, 127] {
            set_bit(&mut w, i);
            assert!(test_bit(&w, i));
        }
        assert_eq!(count_ones(&w), 6);
        assert_eq!(iter_bits(&w).collect::<Vec<_>>(), vec![0, 5, 63, 64, 100, 127]);
        clear_bit(&mut w, 64);
        assert!(!test_bit(&w, 64));
        assert_eq!(count_ones(&w), 5);
    }

    #[test]
    fn below_mask() {
        let mut w = vec![u64::MAX; 2];
        keep_below(&mut w, 70);
        assert_eq!(count_ones(&w), 70);
        let mut v = vec![u64::MAX; 2];
        keep_below(&mut v, 64);
        assert_eq!(count_ones(&v), 64);
        let mut z = vec![u64::MAX; 2];
        keep_below(&mut z, 0);
        assert!(is_empty(&z));
    }
}
