use std::hash::Hash;

use crate::error::{Error, Result};
use crate::ff::{Elem, Field};
use crate::matgrp::Matrix;

/// Largest number of row codes `q^n` for which right-multiplication tables
/// are built.
pub const MAX_ROW_CODES: u64 = 1 << 22;

/// Fixed-width integer holding a packed matrix, one bit field per row.
pub trait PackedKey: Copy + Eq + Ord + Hash + Send + Sync + Default + 'static {
    const BITS: u32;
    fn row(self, i: usize, bits: u32) -> u32;
    fn push_row(self, i: usize, bits: u32, code: u32) -> Self;
    fn to_u128(self) -> u128;
    fn from_u128(v: u128) -> Self;
    /// A well-mixed 64-bit digest, for sharding.
    fn mix(self) -> u64;
}

impl PackedKey for u64 {
    const BITS: u32 = 64;
    #[inline]
    fn row(self, i: usize, bits: u32) -> u32 {
        ((self >> (i as u32 * bits)) & ((1u64 << bits) - 1)) as u32
    }
    #[inline]
    fn push_row(self, i: usize, bits: u32, code: u32) -> Self {
        self | (u64::from(code) << (i as u32 * bits))
    }
    fn to_u128(self) -> u128 {
        u128::from(self)
    }
    fn from_u128(v: u128) -> Self {
        v as u64
    }
    #[inline]
    fn mix(self) -> u64 {
        self.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(29)
    }
}

impl PackedKey for u128 {
    const BITS: u32 = 128;
    #[inline]
    fn row(self, i: usize, bits: u32) -> u32 {
        ((self >> (i as u32 * bits)) & ((1u128 << bits) - 1)) as u32
    }
    #[inline]
    fn push_row(self, i: usize, bits: u32, code: u32) -> Self {
        self | (u128::from(code) << (i as u32 * bits))
    }
    fn to_u128(self) -> u128 {
        self
    }
    fn from_u128(v: u128) -> Self {
        v
    }
    #[inline]
    fn mix(self) -> u64 {
        ((self as u64) ^ ((self >> 64) as u64).rotate_left(17)).mix()
    }
}

/// Packs `n x n` matrices over `GF(q)`: each row is a base-`q` code stored
/// in a `bits`-wide field of the key.
#[derive(Clone, Debug)]
pub struct Encoder {
    field: Field,
    n: usize,
    bits: u32,
}

impl Encoder {
    pub fn new(field: &Field, n: usize) -> Result<Encoder> {
        let q = field.q();
        let overflow = || Error::EncodingOverflow { q, n };
        let codes = q.checked_pow(n as u32).filter(|&c| c <= MAX_ROW_CODES).ok_or_else(overflow)?;
        let bits = 64 - (codes - 1).leading_zeros();
        if bits as usize * n > 128 {
            return Err(overflow());
        }
        Ok(Encoder { field: field.clone(), n, bits: bits.max(1) })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn total_bits(&self) -> u32 {
        self.bits * self.n as u32
    }

    pub fn fits_u64(&self) -> bool {
        self.total_bits() <= 64
    }

    pub fn row_codes(&self) -> u32 {
        self.field.q().pow(self.n as u32) as u32
    }

    pub fn row_code(&self, row: &[Elem]) -> u32 {
        let q = self.field.q();
        row.iter().rev().fold(0u64, |acc, e| acc * q + e.index()) as u32
    }

    pub fn decode_row(&self, mut code: u32) -> Vec<Elem> {
        let q = self.field.q() as u32;
        (0..self.n)
            .map(|_| {
                let e = Elem(u64::from(code % q));
                code /= q;
                e
            })
            .collect()
    }

    pub fn encode<K: PackedKey>(&self, m: &Matrix) -> K {
        m.rows().iter().enumerate().fold(K::default(), |k, (i, r)| k.push_row(i, self.bits, self.row_code(r)))
    }

    pub fn decode<K: PackedKey>(&self, key: K) -> Matrix {
        let rows: Vec<Vec<Elem>> = (0..self.n).map(|i| self.decode_row(key.row(i, self.bits))).collect();
        Matrix::from_rows(&self.field, rows).expect("decoded rows are square")
    }

    /// Table sending each row code `r` to the code of `r * g`.
    pub fn right_table(&self, g: &Matrix) -> Vec<u32> {
        let f = &self.field;
        (0..self.row_codes())
            .map(|code| {
                let row = self.decode_row(code);
                let prod: Vec<Elem> = (0..self.n)
                    .map(|j| (0..self.n).fold(Elem::ZERO, |acc, k| f.add(acc, f.mul(row[k], g.get(k, j)))))
                    .collect();
                self.row_code(&prod)
            })
            .collect()
    }

    /// `key * g` for the generator whose table is `table`.
    #[inline]
    pub fn mul_key<K: PackedKey>(&self, key: K, table: &[u32]) -> K {
        (0..self.n).fold(K::default(), |k, i| k.push_row(i, self.bits, table[key.row(i, self.bits) as usize]))
    }
}
