//! Color identifiers for diagonals and graph edges.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An opaque color. Ordinary colors are `0..n`; [`ColorId::UNCOLOR`] marks
/// the central diagonal of a centrally symmetric triangulation and the edges
/// produced by flipping it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorId(pub u16);

impl ColorId {
    pub const UNCOLOR: ColorId = ColorId(u16::MAX);

    pub fn is_uncolor(self) -> bool {
        self == Self::UNCOLOR
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u16> for ColorId {
    fn from(value: u16) -> Self {
        ColorId(value)
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_uncolor() {
            f.write_str("c*")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for ColorId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if self.is_uncolor() {
            serializer.serialize_str("c*")
        } else {
            serializer.serialize_u16(self.0)
        }
    }
}

struct ColorIdVisitor;

impl Visitor<'_> for ColorIdVisitor {
    type Value = ColorId;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("a color index below 65535 or the string \"c*\"")
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<ColorId, E> {
        if v < u16::MAX as u64 {
            Ok(ColorId(v as u16))
        } else {
            Err(E::invalid_value(de::Unexpected::Unsigned(v), &self))
        }
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<ColorId, E> {
        if v >= 0 {
            self.visit_u64(v as u64)
        } else {
            Err(E::invalid_value(de::Unexpected::Signed(v), &self))
        }
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<ColorId, E> {
        if v == "c*" {
            Ok(ColorId::UNCOLOR)
        } else {
            Err(E::invalid_value(de::Unexpected::Str(v), &self))
        }
    }
}

impl<'de> Deserialize<'de> for ColorId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(ColorIdVisitor)
    }
}

/// A permutation of the ordinary colors `0..n`. The uncolor is always fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColorPermutation {
    images: Vec<ColorId>,
}

impl ColorPermutation {
    /// Builds a permutation from its image list; `images[c]` is the image of
    /// color `c`. Returns `None` unless the list is a bijection of `0..len`.
    pub fn new(images: Vec<ColorId>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for c in &images {
            let slot = seen.get_mut(c.index())?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(ColorPermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        ColorPermutation {
            images: (0..n as u16).map(ColorId).collect(),
        }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: ColorId, b: ColorId) -> Option<Self> {
        if a.index() >= n || b.index() >= n {
            return None;
        }
        let mut p = Self::identity(n);
        p.images.swap(a.index(), b.index());
        Some(p)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, c: ColorId) -> ColorId {
        if c.is_uncolor() {
            c
        } else {
            self.images[c.index()]
        }
    }

    pub fn images(&self) -> &[ColorId] {
        &self.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncolor_serializes_as_c_star() {
        assert_eq!(serde_json::to_string(&ColorId::UNCOLOR).unwrap(), "\"c*\"");
        assert_eq!(serde_json::to_string(&ColorId(3)).unwrap(), "3");
        let back: Vec<ColorId> = serde_json::from_str("[0, \"c*\", 7]").unwrap();
        assert_eq!(back, vec![ColorId(0), ColorId::UNCOLOR, ColorId(7)]);
        assert!(serde_json::from_str::<ColorId>("\"c\"").is_err());
        assert!(serde_json::from_str::<ColorId>("-1").is_err());
    }

    #[test]
    fn permutation_rejects_non_bijections() {
        assert!(ColorPermutation::new(vec![ColorId(0), ColorId(0)]).is_none());
        assert!(ColorPermutation::new(vec![ColorId(2), ColorId(0)]).is_none());
        let p = ColorPermutation::transposition(3, ColorId(0), ColorId(2)).unwrap();
        assert_eq!(p.apply(ColorId(0)), ColorId(2));
        assert_eq!(p.apply(ColorId::UNCOLOR), ColorId::UNCOLOR);
    }
}
