use crate::characters::ClassFunction;
use crate::error::{Error, Result};

type Producer<'a> = dyn Fn(usize) -> Result<ClassFunction> + Send + Sync + 'a;

/// A sequence of characters `n ↦ χ_{V_n}` declared on `0..=max_n`.
///
/// Producers must be deterministic; different `n` may be evaluated from
/// different threads.
pub struct CharSequence<'a> {
    max_n: usize,
    producer: Box<Producer<'a>>,
}

impl<'a> CharSequence<'a> {
    pub fn new(
        max_n: usize,
        producer: impl Fn(usize) -> Result<ClassFunction> + Send + Sync + 'a,
    ) -> Self {
        CharSequence {
            max_n,
            producer: Box::new(producer),
        }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn at(&self, n: usize) -> Result<ClassFunction> {
        if n > self.max_n {
            return Err(Error::Range {
                what: "sequence index",
                value: n,
                limit: self.max_n,
            });
        }
        let chi = (self.producer)(n)?;
        if chi.n() != n {
            return Err(Error::DegreeMismatch {
                left: chi.n(),
                right: n,
            });
        }
        Ok(chi)
    }
}

impl std::fmt::Debug for CharSequence<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CharSequence(0..={})", self.max_n)
    }
}
