use super::field::{Elem, Field};
use crate::error::{Error, Result};
use crate::polyring::FieldPoly;

/// A field embedding `GF(p^m) -> GF(p^(mk))`, fixed by the image of the
/// polynomial-basis generator of the small field.
#[derive(Clone, Debug)]
pub struct Embedding {
    small: Field,
    big: Field,
    generator_image: Elem,
}

impl Embedding {
    pub fn new(small: &Field, big: &Field) -> Result<Embedding> {
        if small.p() != big.p() || !big.m().is_multiple_of(small.m()) {
            return Err(Error::FieldMismatch(format!("GF({}) does not embed in GF({})", small.q(), big.q())));
        }
        let generator_image = if small.m() == 1 {
            big.from_int(small.generator().index() as i64)
        } else {
            let lifted = FieldPoly::from_indices(big, small.modulus());
            *lifted
                .roots()
                .first()
                .ok_or_else(|| Error::FieldMismatch("modulus has no root in the extension".into()))?
        };
        Ok(Embedding { small: small.clone(), big: big.clone(), generator_image })
    }

    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn map(&self, a: Elem) -> Elem {
        if self.small.m() == 1 {
            return Elem(a.index());
        }
        let big = &self.big;
        let mut acc = Elem::ZERO;
        for &c in self.small.coeffs(a).iter().rev() {
            acc = big.add(big.mul(acc, self.generator_image), big.from_int(c as i64));
        }
        acc
    }

    /// Inverse image of `b`, if `b` lies in the embedded subfield.
    pub fn preimage(&self, b: Elem) -> Option<Elem> {
        self.small.elements().find(|&a| self.map(a) == b)
    }
}

impl Field {
    /// The degree-`k` extension of this field with its default modulus,
    /// together with an embedding of `self` into it.
    pub fn extension(&self, k: u32) -> Result<Embedding> {
        if k == 1 {
            return Embedding::new(self, self);
        }
        let big = Field::new(self.p(), self.m() * k, None)?;
        Embedding::new(self, &big)
    }

    /// The smallest extension containing a root of `t^2 + t + 1` (so a
    /// primitive cube root of unity when `p != 3`).
    pub fn omega_extension(&self) -> Result<Embedding> {
        let k = if self.omega().is_some() { 1 } else { 2 };
        self.extension(k)
    }
}
