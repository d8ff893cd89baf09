//! Exact character values and Kronecker-product decompositions for `S_n`,
//! its double cover `S̃_n`, `A_n` and `Ã_n`.
//!
//! All character arithmetic is exact: ordinary values are [`BigInt`]s, spin
//! and alternating values are [`ExactValue`]s (sums of `r · i^e · √q`).
//! Recursive values are memoized in an [`Engine`], which is safe to share
//! between threads.

use std::fmt;
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub mod alternating;
pub mod error;
pub mod group;
pub mod memo;
pub mod oracle;
pub mod ordinary;
pub mod partitions;
pub mod products;
pub mod scans;
pub mod spin;
pub mod surd;

pub use error::{Error, Result};
pub use group::{check_orthogonality, inner_product, CharLabel, CharacterTable, ClassFunction, ClassLabel, GroupContext, GroupKind, OrthogonalityReport};
pub use memo::MemoStore;
pub use ordinary::CharValue;
pub use partitions::{Filter, Partition};
pub use products::{Decomposition, DecompositionEntry};
pub use surd::Surd;

/// Serde adapter writing big integers (or anything `Display + FromStr`) as decimal strings.
pub mod decimal {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }

    /// The same for `Option<T>`.
    pub mod option {
        use super::*;

        pub fn serialize<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
            match v {
                Some(v) => s.collect_str(v),
                None => s.serialize_none(),
            }
        }

        pub fn deserialize<'de, T, D>(d: D) -> Result<Option<T>, D::Error>
        where
            T: FromStr,
            T::Err: Display,
            D: Deserializer<'de>,
        {
            Option::<String>::deserialize(d)?.map(|s| s.parse().map_err(D::Error::custom)).transpose()
        }
    }
}

/// Exact scalar used for all character values.
pub type ExactValue = Surd<BigInt>;

/// A `±` choice: associate characters, halves of split classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn sign(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "plus" | "p" => Ok(Sign::Plus),
            "-" | "minus" | "m" => Ok(Sign::Minus),
            other => Err(Error::InvalidLabel(format!("sign {other:?}"))),
        }
    }
}

/// Memo tables for the two integer recursions, plus assembled character tables.
#[derive(Debug, Default)]
pub struct Engine {
    mn: MemoStore,
    morris: MemoStore,
    tables: DashMap<(GroupKind, usize), Arc<CharacterTable>>,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide engine shared by callers that do not manage their own.
    pub fn global() -> &'static Engine {
        static GLOBAL: OnceLock<Engine> = OnceLock::new();
        GLOBAL.get_or_init(Engine::new)
    }

    /// Memo of `[λ](α)`.
    pub fn mn_store(&self) -> &MemoStore {
        &self.mn
    }

    /// Memo of `⟨λ⟩(σ_α)` for `α` with odd parts.
    pub fn morris_store(&self) -> &MemoStore {
        &self.morris
    }

    /// Character table of `kind` at `n`, assembled once per engine.
    pub fn cached_table(&self, kind: GroupKind, n: usize) -> Result<Arc<CharacterTable>> {
        if let Some(t) = self.tables.get(&(kind, n)) {
            return Ok(Arc::clone(&t));
        }
        let t = Arc::new(self.table(kind, n)?);
        Ok(Arc::clone(self.tables.entry((kind, n)).or_insert(t).value()))
    }

    pub fn clear(&self) {
        self.mn.clear();
        self.morris.clear();
        self.tables.clear();
    }
}
