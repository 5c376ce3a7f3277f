use alloc::vec;
use alloc::vec::Vec;

use super::FramedLink;
use crate::{Error, Result};

impl FramedLink {
    pub fn unknot(b: i64) -> Self {
        Self::new(1, vec![], vec![b]).expect("valid").with_name("unknot")
    }

    pub fn hopf(b1: i64, b2: i64) -> Self {
        Self::new(2, vec![1, 1], vec![b1, b2]).expect("valid").with_name("hopf")
    }

    pub fn trefoil_left(b: i64) -> Self {
        Self::new(2, vec![-1, -1, -1], vec![b]).expect("valid").with_name("trefoil_left")
    }

    pub fn trefoil_right(b: i64) -> Self {
        Self::new(2, vec![1, 1, 1], vec![b]).expect("valid").with_name("trefoil_right")
    }

    pub fn figure8(b: i64) -> Self {
        Self::new(3, vec![1, -2, 1, -2], vec![b]).expect("valid").with_name("figure8")
    }

    /// Surgery on the left trefoil with framing `-1`.
    pub fn poincare() -> Self {
        Self::trefoil_left(-1).with_name("poincare")
    }

    /// `L(b, 1)` as surgery on the `b`-framed unknot.
    pub fn lens(b: i64) -> Self {
        Self::unknot(b).with_name("lens")
    }
}

/// Looks up `name` or `name(a, b, ...)`, e.g. `trefoil_left(-1)` or `hopf(2,3)`.
pub fn catalog(spec: &str) -> Result<FramedLink> {
    let spec = spec.trim();
    let unknown = || Error::UnknownName(spec.into());
    let (name, args) = match spec.find('(') {
        Some(i) => {
            let inner = spec[i + 1..].strip_suffix(')').ok_or_else(unknown)?;
            let args = inner
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<i64>().map_err(|_| unknown()))
                .collect::<Result<Vec<_>>>()?;
            (spec[..i].trim(), args)
        }
        None => (spec, Vec::new()),
    };
    let link = match (name, args.as_slice()) {
        ("unknot", [b]) => FramedLink::unknot(*b),
        ("hopf", [b1, b2]) => FramedLink::hopf(*b1, *b2),
        ("trefoil_left", [b]) => FramedLink::trefoil_left(*b),
        ("trefoil_right", [b]) => FramedLink::trefoil_right(*b),
        ("figure8", [b]) => FramedLink::figure8(*b),
        ("poincare", []) => FramedLink::poincare(),
        ("lens", [b, 1]) | ("lens", [b]) => FramedLink::lens(*b),
        ("s3", []) => FramedLink::empty().with_name("s3"),
        _ => return Err(unknown()),
    };
    Ok(link)
}
