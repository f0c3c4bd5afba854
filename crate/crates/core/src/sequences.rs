//! Catalan numbers, binomial coefficients and externally supplied sequences.

use std::borrow::Cow;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, ParseLocation, Result};

/// Memoized prefix `C_0, C_1, …` of the Catalan numbers.
///
/// The cache only ever grows. Growth happens under a write lock, so readers
/// never observe a partially extended prefix.
#[derive(Debug, Default)]
pub struct CatalanCache {
    values: RwLock<Vec<BigInt>>,
}

impl CatalanCache {
    pub const fn new() -> Self {
        CatalanCache {
            values: RwLock::new(Vec::new()),
        }
    }

    /// Number of terms currently memoized.
    pub fn len(&self) -> usize {
        self.values.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn ensure(&self, count: usize) {
        if self.values.read().unwrap().len() >= count {
            return;
        }
        let mut values = self.values.write().unwrap();
        if values.is_empty() && count > 0 {
            values.push(BigInt::one());
        }
        // (k+2) C_{k+1} = 2 (2k+1) C_k
        while values.len() < count {
            let k = values.len() - 1;
            let numerator = &values[k] * BigInt::from(2 * (2 * k as u64 + 1));
            let (next, rem) = numerator.div_rem(&BigInt::from(k as u64 + 2));
            debug_assert!(
                rem.is_zero(),
                "Catalan recurrence left a remainder at k = {k}"
            );
            values.push(next);
        }
    }

    /// `C_k`.
    pub fn get(&self, k: usize) -> BigInt {
        self.ensure(k + 1);
        self.values.read().unwrap()[k].clone()
    }

    /// `[C_0, …, C_{count-1}]`.
    pub fn prefix(&self, count: usize) -> Vec<BigInt> {
        self.ensure(count);
        self.values.read().unwrap()[..count].to_vec()
    }
}

static CATALAN: CatalanCache = CatalanCache::new();

/// The `k`-th Catalan number, served from a process-wide cache.
pub fn catalan(k: usize) -> BigInt {
    CATALAN.get(k)
}

/// The first `count` Catalan numbers.
pub fn catalan_prefix(count: usize) -> Vec<BigInt> {
    CATALAN.prefix(count)
}

/// Binomial coefficient `top choose bottom`, zero when `bottom < 0` or
/// `bottom > top`.
pub fn binomial(top: u64, bottom: i64) -> BigInt {
    if bottom < 0 || bottom as u64 > top {
        return BigInt::zero();
    }
    let k = (bottom as u64).min(top - bottom as u64);
    let mut acc = BigInt::one();
    // after step i, acc = binom(top - k + i, i)
    for i in 1..=k {
        acc *= top - k + i;
        acc /= i;
    }
    acc
}

/// The sequence whose Hankel determinants are taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceSource {
    BuiltinCatalan,
    /// A finite, non-empty list `a_0, a_1, …`.
    Explicit(Vec<BigInt>),
}

impl SequenceSource {
    pub fn explicit(terms: Vec<BigInt>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(SequenceSource::Explicit(terms))
    }

    pub fn is_catalan(&self) -> bool {
        matches!(self, SequenceSource::BuiltinCatalan)
    }

    /// `[a_0, …, a_{len-1}]`, or `SequenceTooShort` naming `a_{len-1}`.
    pub fn prefix(&self, len: usize) -> Result<Cow<'_, [BigInt]>> {
        match self {
            SequenceSource::BuiltinCatalan => Ok(Cow::Owned(catalan_prefix(len))),
            SequenceSource::Explicit(terms) if terms.len() >= len => {
                Ok(Cow::Borrowed(&terms[..len]))
            }
            SequenceSource::Explicit(terms) => Err(Error::SequenceTooShort {
                needed_index: len - 1,
                available: terms.len(),
            }),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            SequenceSource::BuiltinCatalan => "catalan",
            SequenceSource::Explicit(_) => "explicit",
        }
    }
}

/// How a sequence is named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceDescriptor {
    Catalan,
    /// Comma-separated decimal integers, e.g. `1,1,2,5`.
    Inline(String),
    /// File with one decimal integer per line; blank lines are skipped.
    File(PathBuf),
}

impl FromStr for SequenceDescriptor {
    type Err = std::convert::Infallible;

    /// `catalan` selects the builtin sequence; anything else is an inline list.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s.trim().eq_ignore_ascii_case("catalan") {
            Ok(SequenceDescriptor::Catalan)
        } else {
            Ok(SequenceDescriptor::Inline(s.to_owned()))
        }
    }
}

pub fn load_sequence(descriptor: &SequenceDescriptor) -> Result<SequenceSource> {
    match descriptor {
        SequenceDescriptor::Catalan => Ok(SequenceSource::BuiltinCatalan),
        SequenceDescriptor::Inline(text) => parse_inline(text),
        SequenceDescriptor::File(path) => load_file(path),
    }
}

fn parse_integer(token: &str, location: ParseLocation) -> Result<BigInt> {
    let digits = token.strip_prefix('-').unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse {
            location,
            token: token.to_owned(),
        });
    }
    Ok(token.parse().expect("validated decimal literal"))
}

fn parse_inline(text: &str) -> Result<SequenceSource> {
    if text.trim().is_empty() {
        return Err(Error::EmptySequence);
    }
    let terms = text
        .split(',')
        .enumerate()
        .map(|(i, tok)| parse_integer(tok.trim(), ParseLocation::Token(i + 1)))
        .collect::<Result<Vec<_>>>()?;
    SequenceSource::explicit(terms)
}

fn load_file(path: &Path) -> Result<SequenceSource> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    let terms = text
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| parse_integer(line.trim(), ParseLocation::Line(i + 1)))
        .collect::<Result<Vec<_>>>()?;
    SequenceSource::explicit(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().copied().map(BigInt::from).collect()
    }

    /// Pascal-triangle oracle, independent of the multiplicative formula.
    fn pascal_row(top: usize) -> Vec<BigInt> {
        let mut row = vec![BigInt::one()];
        for _ in 0..top {
            let mut next = vec![BigInt::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan(0), BigInt::from(1));
        assert_eq!(catalan(5), BigInt::from(42));
        assert_eq!(catalan(9), BigInt::from(4862));
    }

    #[test]
    fn catalan_prefix_examples() {
        assert!(catalan_prefix(0).is_empty());
        assert_eq!(catalan_prefix(3), ints(&[1, 1, 2]));
        assert_eq!(catalan_prefix(7), ints(&[1, 1, 2, 5, 14, 42, 132]));
    }

    #[test]
    fn catalan_matches_central_binomial_up_to_200() {
        for k in 0..=200usize {
            let central = &pascal_row(2 * k)[k];
            let (q, r) = central.div_rem(&BigInt::from(k + 1));
            assert!(r.is_zero(), "k = {k}");
            assert_eq!(catalan(k), q, "k = {k}");
        }
    }

    #[test]
    fn catalan_recurrence_and_positivity() {
        let values = catalan_prefix(120);
        assert_eq!(values[0], BigInt::one());
        for (k, pair) in values.windows(2).enumerate() {
            assert!(pair[0] > BigInt::zero());
            assert_eq!(
                BigInt::from(k + 2) * &pair[1],
                BigInt::from(2 * (2 * k + 1)) * &pair[0]
            );
        }
    }

    #[test]
    fn fresh_cache_grows_monotonically() {
        let cache = CatalanCache::new();
        assert!(cache.is_empty());
        assert_eq!(cache.get(4), BigInt::from(14));
        assert_eq!(cache.len(), 5);
        let _ = cache.prefix(2);
        assert_eq!(cache.len(), 5);
        assert_eq!(cache.prefix(7)[..5], cache.prefix(5)[..]);
    }

    #[test]
    fn concurrent_growth_is_consistent() {
        let cache = CatalanCache::new();
        std::thread::scope(|s| {
            for t in 0..8 {
                let cache = &cache;
                s.spawn(move || {
                    let prefix = cache.prefix(50 + 10 * t);
                    assert_eq!(prefix[..50], catalan_prefix(50)[..]);
                });
            }
        });
        assert_eq!(cache.len(), 120);
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(6, 6), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        for top in 0..=60usize {
            let row = pascal_row(top);
            for (bottom, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(top as u64, bottom as i64), expected);
            }
        }
    }

    #[test]
    fn pascal_rule_with_zero_convention() {
        for t in 1..=60u64 {
            for b in -2..=(t as i64 + 2) {
                assert_eq!(
                    binomial(t, b),
                    binomial(t - 1, b - 1) + binomial(t - 1, b),
                    "t = {t}, b = {b}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn prefixes_are_nested(m in 0usize..80, extra in 0usize..40) {
            let short = catalan_prefix(m);
            let long = catalan_prefix(m + extra);
            prop_assert_eq!(&long[..m], &short[..]);
        }
    }

    #[test]
    fn descriptor_parsing() {
        assert_eq!(
            "catalan".parse::<SequenceDescriptor>().unwrap(),
            SequenceDescriptor::Catalan
        );
        assert_eq!(
            load_sequence(&"catalan".parse().unwrap()).unwrap(),
            SequenceSource::BuiltinCatalan
        );
        assert_eq!(
            load_sequence(&"1,1,2,5".parse().unwrap()).unwrap(),
            SequenceSource::Explicit(ints(&[1, 1, 2, 5]))
        );
        assert_eq!(
            load_sequence(&" -3 , 7".parse().unwrap()).unwrap(),
            SequenceSource::Explicit(ints(&[-3, 7]))
        );
    }

    #[test]
    fn inline_parse_error_reports_token() {
        let err = load_sequence(&"1,x,3".parse().unwrap()).unwrap_err();
        match err {
            Error::Parse { location, token } => {
                assert_eq!(location, ParseLocation::Token(2));
                assert_eq!(token, "x");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            load_sequence(&"1,+2".parse().unwrap()),
            Err(Error::Parse {
                location: ParseLocation::Token(2),
                ..
            })
        ));
        assert!(matches!(
            load_sequence(&"".parse().unwrap()),
            Err(Error::EmptySequence)
        ));
    }

    #[test]
    fn file_loading() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.txt");
        fs::write(&path, "1\n\n  -2  \n30000000000000000000000\n").unwrap();
        let source = load_sequence(&SequenceDescriptor::File(path.clone())).unwrap();
        assert_eq!(
            source,
            SequenceSource::Explicit(vec![
                BigInt::from(1),
                BigInt::from(-2),
                "30000000000000000000000".parse().unwrap(),
            ])
        );

        fs::write(&path, "1\n2\n\nthree\n").unwrap();
        assert!(matches!(
            load_sequence(&SequenceDescriptor::File(path.clone())),
            Err(Error::Parse {
                location: ParseLocation::Line(4),
                ..
            })
        ));

        fs::write(&path, "\n  \n").unwrap();
        assert!(matches!(
            load_sequence(&SequenceDescriptor::File(path)),
            Err(Error::EmptySequence)
        ));

        assert!(matches!(
            load_sequence(&SequenceDescriptor::File(dir.path().join("missing"))),
            Err(Error::Io { .. })
        ));
    }

    #[test]
    fn explicit_prefix_bounds() {
        let source = SequenceSource::explicit(ints(&[1, 1])).unwrap();
        assert_eq!(source.prefix(2).unwrap().len(), 2);
        assert!(matches!(
            source.prefix(4),
            Err(Error::SequenceTooShort {
                needed_index: 3,
                available: 2
            })
        ));
        assert!(matches!(
            SequenceSource::explicit(Vec::new()),
            Err(Error::EmptySequence)
        ));
    }
}
