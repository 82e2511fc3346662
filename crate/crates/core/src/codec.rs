//! Base-`r`, least-significant-digit-first encoding of vectors in `N^m`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hull::Ray;
use crate::{Error, Result};

/// Radix and dimension of an encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis {
    radix: u32,
    dim: usize,
}

impl Basis {
    pub fn new(radix: u32, dim: usize) -> Result<Self> {
        if radix < 2 || dim < 1 {
            return Err(Error::InvalidBasis { radix, dim });
        }
        Ok(Basis { radix, dim })
    }

    pub fn radix(&self) -> u32 {
        self.radix
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `r^k` as an exact integer.
    pub fn power(&self, k: usize) -> BigInt {
        num_traits::pow(BigInt::from(self.radix), k)
    }

    /// Every digit vector of the alphabet, in lexicographic order.
    pub fn alphabet(&self) -> Vec<DigitVector> {
        let mut out = vec![Vec::with_capacity(self.dim)];
        for _ in 0..self.dim {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..self.radix).map(move |d| {
                        let mut v = prefix.clone();
                        v.push(d);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(DigitVector).collect()
    }

    pub(crate) fn check_same(&self, other: &Basis) -> Result<()> {
        if self != other {
            return Err(Error::BasisMismatch {
                left: self.to_string(),
                right: other.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={} m={}", self.radix, self.dim)
    }
}

/// One letter of the alphabet `{0..r-1}^m`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DigitVector(Vec<u32>);

impl DigitVector {
    pub fn new(basis: Basis, digits: Vec<u32>) -> Result<Self> {
        if digits.len() != basis.dim {
            return Err(Error::ArityMismatch {
                expected: basis.dim,
                found: digits.len(),
            });
        }
        if let Some(&d) = digits.iter().find(|&&d| d >= basis.radix) {
            return Err(Error::DigitOutOfRange {
                digit: d as u64,
                radix: basis.radix,
            });
        }
        Ok(DigitVector(digits))
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }
}

impl fmt::Display for DigitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(">")
    }
}

/// A finite sequence of digit vectors; the first letter is least significant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    basis: Basis,
    letters: Vec<DigitVector>,
}

impl Word {
    pub fn empty(basis: Basis) -> Self {
        Word {
            basis,
            letters: Vec::new(),
        }
    }

    pub fn new(basis: Basis, letters: Vec<DigitVector>) -> Result<Self> {
        for l in &letters {
            DigitVector::new(basis, l.0.clone())?;
        }
        Ok(Word { basis, letters })
    }

    /// Builds a word from raw digit tuples, validating each against `basis`.
    pub fn from_digits<I, D>(basis: Basis, letters: I) -> Result<Self>
    where
        I: IntoIterator<Item = D>,
        D: AsRef<[u32]>,
    {
        let letters = letters
            .into_iter()
            .map(|d| DigitVector::new(basis, d.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Word { basis, letters })
    }

    pub(crate) fn from_letters_unchecked(basis: Basis, letters: Vec<DigitVector>) -> Self {
        Word { basis, letters }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn letters(&self) -> &[DigitVector] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.basis, other.basis);
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Word {
            basis: self.basis,
            letters,
        }
    }

    pub fn push(&mut self, letter: DigitVector) {
        self.letters.push(letter);
    }
}

impl fmt::Display for Word {
    /// `@` for the empty word, juxtaposed letters otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("@");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// The affine map `x ↦ scale·x + offset` attached to a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaParams {
    pub scale: BigInt,
    pub offset: Vec<BigInt>,
}

impl GammaParams {
    /// Parameters of `self ∘ inner`.
    pub fn compose(&self, inner: &GammaParams) -> GammaParams {
        GammaParams {
            scale: &self.scale * &inner.scale,
            offset: self
                .offset
                .iter()
                .zip(&inner.offset)
                .map(|(o, i)| o + &self.scale * i)
                .collect(),
        }
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        x.iter()
            .zip(&self.offset)
            .map(|(xi, o)| &self.scale * xi + o)
            .collect()
    }
}

/// `rho(b_1...b_n) = sum r^(i-1) b_i`.
pub fn rho(w: &Word) -> Vec<BigInt> {
    let radix = BigInt::from(w.basis.radix);
    let mut acc = vec![BigInt::zero(); w.basis.dim];
    // Horner from the most significant letter down.
    for letter in w.letters.iter().rev() {
        for (a, &d) in acc.iter_mut().zip(&letter.0) {
            *a = &*a * &radix + d;
        }
    }
    acc
}

/// Shortest word `w` with `rho(w) = x`.
pub fn encode(x: &[BigInt], basis: Basis) -> Result<Word> {
    if x.len() != basis.dim {
        return Err(Error::ArityMismatch {
            expected: basis.dim,
            found: x.len(),
        });
    }
    if let Some(neg) = x.iter().find(|v| v.is_negative()) {
        return Err(Error::NegativeComponent(neg.to_string()));
    }
    let radix = BigInt::from(basis.radix);
    let mut rest = x.to_vec();
    let mut letters = Vec::new();
    while rest.iter().any(|v| !v.is_zero()) {
        let mut digits = Vec::with_capacity(basis.dim);
        for v in rest.iter_mut() {
            let (q, d) = v.div_rem(&radix);
            digits.push(d.to_u32().expect("digit below radix"));
            *v = q;
        }
        letters.push(DigitVector(digits));
    }
    Ok(Word { basis, letters })
}

/// `(r^|w|, rho(w))`.
pub fn gamma_params(w: &Word) -> GammaParams {
    GammaParams {
        scale: w.basis.power(w.len()),
        offset: rho(w),
    }
}

/// The fixpoint `rho(w) / (1 - r^|w|)` of `Γ_w`, as the ray `(-rho(w), r^|w| - 1)`.
pub fn xi_ray(w: &Word) -> Result<Ray> {
    if w.is_empty() {
        return Err(Error::EpsilonXi);
    }
    let mut raw: Vec<BigInt> = rho(w).into_iter().map(|v| -v).collect();
    raw.push(w.basis.power(w.len()) - BigInt::one());
    Ok(Ray::normalize(raw)?.expect("c is positive for a nonempty word"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn b(r: u32, m: usize) -> Basis {
        Basis::new(r, m).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn basis_rejects_degenerate() {
        assert!(Basis::new(1, 1).is_err());
        assert!(Basis::new(2, 0).is_err());
        assert_eq!(b(3, 2).alphabet().len(), 9);
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&Word::empty(b(2, 3))), ints(&[0, 0, 0]));
        let w = Word::from_digits(b(2, 3), [[1, 1, 0], [0, 0, 1]]).unwrap();
        assert_eq!(rho(&w), ints(&[1, 1, 2]));
        let w = Word::from_digits(b(2, 1), [[1], [1], [1]]).unwrap();
        assert_eq!(rho(&w), ints(&[7]));
    }

    #[test]
    fn digit_validation() {
        assert_eq!(
            DigitVector::new(b(2, 1), vec![2]),
            Err(Error::DigitOutOfRange { digit: 2, radix: 2 })
        );
        assert!(matches!(
            DigitVector::new(b(2, 2), vec![1]),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
    }

    #[test]
    fn encode_examples() {
        assert!(encode(&ints(&[0, 0]), b(2, 2)).unwrap().is_empty());
        let w = encode(&ints(&[5]), b(2, 1)).unwrap();
        assert_eq!(w, Word::from_digits(b(2, 1), [[1], [0], [1]]).unwrap());
        let w = encode(&ints(&[4, 1]), b(3, 2)).unwrap();
        assert_eq!(w, Word::from_digits(b(3, 2), [[1, 1], [1, 0]]).unwrap());
        assert!(matches!(
            encode(&ints(&[-1]), b(2, 1)),
            Err(Error::NegativeComponent(_))
        ));
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_params(&Word::empty(b(2, 1)));
        assert_eq!(g.scale, BigInt::one());
        assert_eq!(g.offset, ints(&[0]));
        let g = gamma_params(&Word::from_digits(b(2, 1), [[1]]).unwrap());
        assert_eq!((g.scale, g.offset), (BigInt::from(2), ints(&[1])));
        let g = gamma_params(&Word::from_digits(b(2, 3), [[1, 1, 0], [0, 0, 1]]).unwrap());
        assert_eq!((g.scale, g.offset), (BigInt::from(4), ints(&[1, 1, 2])));
    }

    #[test]
    fn xi_examples() {
        let w = Word::from_digits(b(2, 3), [[1, 1, 0]]).unwrap();
        let ray = xi_ray(&w).unwrap();
        assert_eq!((ray.alpha(), ray.c()), (&ints(&[-1, -1, 0])[..], &BigInt::one()));
        let w = Word::from_digits(b(2, 1), [[1], [0]]).unwrap();
        let ray = xi_ray(&w).unwrap();
        assert_eq!((ray.alpha(), ray.c()), (&ints(&[-1])[..], &BigInt::from(3)));
        assert_eq!(xi_ray(&Word::empty(b(2, 1))), Err(Error::EpsilonXi));
    }

    fn word_strategy(r: u32, m: usize, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(prop::collection::vec(0..r, m), 0..=max_len)
            .prop_map(move |ls| Word::from_digits(Basis::new(r, m).unwrap(), ls).unwrap())
    }

    proptest! {
        #[test]
        fn rho_of_concat(u in word_strategy(3, 2, 6), v in word_strategy(3, 2, 6)) {
            let lhs = rho(&u.concat(&v));
            let scale = u.basis().power(u.len());
            let rhs: Vec<BigInt> = rho(&u).iter().zip(rho(&v)).map(|(a, b)| a + &scale * b).collect();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn gamma_composes(u in word_strategy(2, 3, 5), v in word_strategy(2, 3, 5)) {
            prop_assert_eq!(gamma_params(&u.concat(&v)), gamma_params(&u).compose(&gamma_params(&v)));
        }

        #[test]
        fn encode_inverts_rho(limbs in prop::collection::vec(prop::collection::vec(any::<u64>(), 0..=2), 2),
                              r in 2u32..7) {
            // components up to 2^128, far past machine width
            let x: Vec<BigInt> = limbs.iter()
                .map(|ls| ls.iter().fold(BigInt::zero(), |acc, &l| (acc << 64) + l))
                .collect();
            let w = encode(&x, b(r, 2)).unwrap();
            prop_assert!(w.letters().last().is_none_or(|l| !l.is_zero()));
            prop_assert_eq!(rho(&w), x);
        }

        #[test]
        fn xi_is_fixpoint_of_gamma(w in word_strategy(3, 2, 6).prop_filter("nonempty", |w| !w.is_empty())) {
            let ray = xi_ray(&w).unwrap();
            let c = BigRational::from_integer(ray.c().clone());
            let point: Vec<BigRational> = ray.alpha().iter()
                .map(|a| BigRational::from_integer(a.clone()) / &c).collect();
            let g = gamma_params(&w);
            let scale = BigRational::from_integer(g.scale);
            for (p, o) in point.iter().zip(g.offset) {
                prop_assert_eq!(&scale * p + BigRational::from_integer(o), p.clone());
            }
        }
    }
}
