//! Basis blades `ζ_I`, indexed by subsets `I ⊆ {1, …, 64}`.

use std::cmp::Ordering;
use std::fmt;

/// Largest generator index a blade can hold.
pub const MAX_GENERATORS: usize = 64;

/// A subset of `{1, …, 64}` packed into one machine word; generator `i`
/// lives in bit `i − 1`. The empty set is the scalar blade `ζ_∅ = 1`.
///
/// Blades order by grade first and then by the numeric value of the mask,
/// which is the storage order of [`Zeon`](crate::Zeon) terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Blade(pub u64);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// The single generator `ζ_i` (1-indexed).
    pub fn generator(i: usize) -> Blade {
        assert!(
            (1..=MAX_GENERATORS).contains(&i),
            "generator index {i} outside 1..=64"
        );
        Blade(1u64 << (i - 1))
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Blade {
        indices
            .into_iter()
            .fold(Blade::SCALAR, |b, i| Blade(b.0 | Blade::generator(i).0))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_GENERATORS).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub fn intersection(self, other: Blade) -> Blade {
        Blade(self.0 & other.0)
    }

    pub fn difference(self, other: Blade) -> Blade {
        Blade(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Blade) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Blade) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, i: usize) -> Blade {
        self.union(Blade::generator(i))
    }

    pub fn without(self, i: usize) -> Blade {
        self.difference(Blade::generator(i))
    }

    /// `ζ_I ζ_J`: the union when the index sets are disjoint, `None` when the
    /// product is annihilated by a repeated null-square generator.
    pub fn mul(self, other: Blade) -> Option<Blade> {
        if self.is_disjoint(other) {
            Some(self.union(other))
        } else {
            None
        }
    }

    /// Ascending 1-based generator indices.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i + 1)
            }
        })
    }

    pub fn index_vec(self) -> Vec<usize> {
        self.indices().collect()
    }

    /// Highest generator index present, 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Ordering by grade, then lexicographically by ascending index list.
    /// This is the order used for serialized output.
    pub fn lex_cmp(&self, other: &Blade) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (n, i) in self.indices().enumerate() {
            if n > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_blades_multiply_to_union() {
        let a = Blade::from_indices([1]);
        let b = Blade::from_indices([2]);
        assert_eq!(a.mul(b), Some(Blade::from_indices([1, 2])));
    }

    #[test]
    fn repeated_generator_annihilates() {
        let a = Blade::generator(1);
        assert_eq!(a.mul(a), None);
    }

    #[test]
    fn scalar_blade_is_identity() {
        let b = Blade::from_indices([3, 7]);
        assert_eq!(Blade::SCALAR.mul(b), Some(b));
    }

    #[test]
    fn index_iteration_and_grade() {
        let b = Blade::from_indices([64, 5, 1]);
        assert_eq!(b.index_vec(), vec![1, 5, 64]);
        assert_eq!(b.grade(), 3);
        assert_eq!(b.max_index(), 64);
        assert!(b.contains(5) && !b.contains(4) && !b.contains(0));
        assert_eq!(b.without(5), Blade::from_indices([1, 64]));
    }

    #[test]
    fn storage_and_lex_orders_differ() {
        let a = Blade::from_indices([1, 4]);
        let b = Blade::from_indices([2, 3]);
        assert_eq!(a.cmp(&b), Ordering::Greater);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert!(Blade::generator(9) < a);
    }

    #[test]
    #[should_panic]
    fn generator_zero_rejected() {
        Blade::generator(0);
    }
}
