use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::RadicalRational;

#[derive(Serialize, Deserialize)]
struct TermJson {
    q: String,
    r: serde_json::Number,
}

#[derive(Serialize, Deserialize)]
struct ValueJson {
    terms: Vec<TermJson>,
    float: f64,
}

impl Serialize for RadicalRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(r, q)| TermJson { q: q.to_string(), r: r.to_string().parse().expect("integer literal") })
            .collect();
        ValueJson { terms, float: self.to_f64() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RadicalRational {
    /// Reads the `terms` array; the `float` field is ignored. Radicands that
    /// fit in 64 bits are re-normalised, larger ones are trusted as squarefree.
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = ValueJson::deserialize(d)?;
        let mut acc = RadicalRational::zero();
        for t in v.terms {
            let q: BigRational = t.q.parse().map_err(|_| D::Error::custom(format!("bad rational `{}`", t.q)))?;
            let r: BigUint =
                t.r.to_string().parse().map_err(|_| D::Error::custom(format!("bad radicand `{}`", t.r)))?;
            if r.is_zero() {
                return Err(D::Error::custom("radicand must be positive"));
            }
            let term = match u64::try_from(&r) {
                Ok(small) => RadicalRational::radical_normalize(&q, small),
                Err(_) => RadicalRational::from_term_unchecked(q, r),
            };
            acc += term;
        }
        Ok(acc)
    }
}
