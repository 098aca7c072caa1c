/// Fixed-width membership set over element indices `0..256`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Bits([u64; 4]);

impl Bits {
    pub const fn new() -> Self {
        Bits([0; 4])
    }

    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let (w, b) = (x >> 6, 1u64 << (x & 63));
        let fresh = self.0[w] & b == 0;
        self.0[w] |= b;
        fresh
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.0[x >> 6] & (1u64 << (x & 63)) != 0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Bits) -> Bits {
        let mut out = [0u64; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i] & other.0[i];
        }
        Bits(out)
    }

    pub fn union(&self, other: &Bits) -> Bits {
        let mut out = [0u64; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.0[i] | other.0[i];
        }
        Bits(out)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let t = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + t)
            })
        })
    }
}

impl FromIterator<usize> for Bits {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut b = Bits::new();
        for x in iter {
            b.insert(x);
        }
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iter_is_sorted_and_complete() {
        let b: Bits = [200usize, 3, 64, 0, 63, 255].into_iter().collect();
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 3, 63, 64, 200, 255]);
        assert_eq!(b.len(), 6);
        assert!(b.contains(64) && !b.contains(65));
    }
}
