//! Packed bit vectors and Gaussian elimination over GF(2).

use std::fmt;

const WORD_BITS: usize = 64;

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD_BITS)],
        }
    }

    /// Standard basis vector e_i.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / WORD_BITS] >> (i % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, rhs: &BitVec) {
        assert_eq!(self.len, rhs.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn lowest_set(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|&w| w != 0)
            .map(|i| i * WORD_BITS + self.words[i].trailing_zeros() as usize)
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            word_idx: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BitVec[{}; {:?}]",
            self.len,
            self.ones().collect::<Vec<_>>()
        )
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    word_idx: usize,
    current: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_idx += 1;
            if self.word_idx >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_idx];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some(self.word_idx * WORD_BITS + bit)
    }
}

/// Row space maintained incrementally: one stored row per pivot column.
pub struct RowSpace {
    ncols: usize,
    rows: Vec<(usize, BitVec)>,
}

impl RowSpace {
    pub fn new(ncols: usize) -> Self {
        RowSpace {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the stored rows.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ncols);
        let mut v = v.clone();
        loop {
            let Some(p) = v.lowest_set() else { return v };
            match self.rows.iter().find(|(q, _)| *q == p) {
                Some((_, row)) => v.xor_assign(row),
                None => return v,
            }
        }
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Insert `v`; returns true if the rank grew.
    pub fn insert(&mut self, v: &BitVec) -> bool {
        let reduced = self.reduce(v);
        match reduced.lowest_set() {
            None => false,
            Some(p) => {
                self.rows.push((p, reduced));
                true
            }
        }
    }

    /// The stored (pivot-reduced) rows; a basis of the inserted span.
    pub fn basis(&self) -> impl Iterator<Item = &BitVec> {
        self.rows.iter().map(|(_, v)| v)
    }
}

pub fn rank<'a>(vectors: impl IntoIterator<Item = &'a BitVec>, ncols: usize) -> usize {
    let mut space = RowSpace::new(ncols);
    for v in vectors {
        space.insert(v);
    }
    space.rank()
}

/// Apply a linear map given by its images of the standard basis.
pub fn apply(images: &[BitVec], v: &BitVec) -> BitVec {
    assert_eq!(images.len(), v.len());
    let target_len = images.first().map_or(0, BitVec::len);
    let mut out = BitVec::zeros(target_len);
    for i in v.ones() {
        out.xor_assign(&images[i]);
    }
    out
}

/// Images of the composite x -> outer(inner(x)).
pub fn compose(outer: &[BitVec], inner: &[BitVec]) -> Vec<BitVec> {
    inner.iter().map(|col| apply(outer, col)).collect()
}

pub fn identity_map(dim: usize) -> Vec<BitVec> {
    (0..dim).map(|i| BitVec::unit(dim, i)).collect()
}

/// Count vectors `x` in the span of `basis` with `q(x) = x`, where `q` is
/// a linear map given by its values `images[i] = q(basis[i])`. Walks the
/// span in Gray-code order, so each step is one XOR per operand.
pub fn count_fixed_points(basis: &[BitVec], images: &[BitVec]) -> u64 {
    assert_eq!(basis.len(), images.len());
    assert!(basis.len() < 63, "span too large to enumerate");
    let len = basis.first().map_or(0, BitVec::len);
    let mut cur = BitVec::zeros(len);
    let mut cur_img = BitVec::zeros(len);
    let mut count = 1; // the zero vector is always fixed
    for s in 1u64..1u64 << basis.len() {
        let flip = s.trailing_zeros() as usize;
        cur.xor_assign(&basis[flip]);
        cur_img.xor_assign(&images[flip]);
        if cur == cur_img {
            count += 1;
        }
    }
    count
}

/// Basis of the kernel of the map sending e_i to images[i].
pub fn kernel(images: &[BitVec]) -> Vec<BitVec> {
    let n = images.len();
    // Echelon rows carry the combination of inputs that produced them.
    let mut rows: Vec<(usize, BitVec, BitVec)> = Vec::new();
    let mut kernel_basis = Vec::new();
    for (i, image) in images.iter().enumerate() {
        let mut v = image.clone();
        let mut comb = BitVec::unit(n, i);
        loop {
            match v.lowest_set() {
                None => {
                    kernel_basis.push(comb);
                    break;
                }
                Some(p) => match rows.iter().find(|(q, _, _)| *q == p) {
                    Some((_, rv, rc)) => {
                        v.xor_assign(rv);
                        comb.xor_assign(rc);
                    }
                    None => {
                        rows.push((p, v, comb));
                        break;
                    }
                },
            }
        }
    }
    kernel_basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_roundtrip_across_word_boundary() {
        let mut v = BitVec::zeros(130);
        for i in [0, 1, 63, 64, 65, 127, 128, 129] {
            assert!(!v.get(i));
            v.set(i, true);
            assert!(v.get(i));
        }
        assert_eq!(v.count_ones(), 8);
        v.set(64, false);
        assert!(!v.get(64));
    }

    #[test]
    fn ones_iterates_ascending() {
        let mut v = BitVec::zeros(200);
        let idx = [3, 64, 65, 199];
        for &i in &idx {
            v.set(i, true);
        }
        assert_eq!(v.ones().collect::<Vec<_>>(), idx);
        assert_eq!(v.lowest_set(), Some(3));
        assert_eq!(BitVec::zeros(5).lowest_set(), None);
    }

    #[test]
    fn rowspace_rank_and_membership() {
        let mut space = RowSpace::new(4);
        let a = BitVec::unit(4, 0);
        let mut ab = BitVec::unit(4, 0);
        ab.set(1, true);
        let b = BitVec::unit(4, 1);
        assert!(space.insert(&a));
        assert!(space.insert(&ab));
        assert!(!space.insert(&b)); // b = a + ab already in the span
        assert_eq!(space.rank(), 2);
        assert!(space.contains(&b));
        assert!(!space.contains(&BitVec::unit(4, 2)));
    }

    #[test]
    fn kernel_of_projection() {
        // Map e0 -> f0, e1 -> f0, e2 -> 0: kernel = <e0+e1, e2>.
        let images = vec![BitVec::unit(1, 0), BitVec::unit(1, 0), BitVec::zeros(1)];
        let ker = kernel(&images);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!(apply(&images, v).is_zero());
        }
        assert_eq!(rank(ker.iter(), 3), 2);
    }

    #[test]
    fn fixed_point_census() {
        // q = identity on a 3-dim span: every vector is fixed.
        let basis: Vec<BitVec> = (0..3).map(|i| BitVec::unit(5, i)).collect();
        assert_eq!(count_fixed_points(&basis, &basis.clone()), 8);
        // q = 0: only the zero vector.
        let zeros = vec![BitVec::zeros(5); 3];
        assert_eq!(count_fixed_points(&basis, &zeros), 1);
        // q swaps e0 and e1, fixes e2: fixed points are spanned by e0+e1, e2.
        let swap = vec![BitVec::unit(5, 1), BitVec::unit(5, 0), BitVec::unit(5, 2)];
        assert_eq!(count_fixed_points(&basis, &swap), 4);
    }

    #[test]
    fn compose_matches_sequential_apply() {
        // inner: e0 -> e1, e1 -> e0+e1 ; outer: e0 -> e0, e1 -> e0.
        let inner = vec![BitVec::unit(2, 1), {
            let mut v = BitVec::unit(2, 0);
            v.set(1, true);
            v
        }];
        let outer = vec![BitVec::unit(2, 0), BitVec::unit(2, 0)];
        let comp = compose(&outer, &inner);
        for (i, column) in comp.iter().enumerate() {
            let direct = apply(&outer, &apply(&inner, &BitVec::unit(2, i)));
            assert_eq!(*column, direct);
        }
    }
}
