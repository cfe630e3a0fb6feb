//! Prefix generation and the evidence layer: prefix comparison, factor complexity, Sturmian
//! witnesses and empirical letter frequencies.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::constructions::UniformRepresentation;
use crate::word::{iterate_fixed_point, Alphabet, Letter, MorphicSpec, Word};
use crate::{Error, Result};

/// Something that produces a coded infinite word prefix by prefix.
pub trait CodedSequence {
    fn output_alphabet(&self) -> &Alphabet;

    fn prefix(&self, n: usize) -> Word;
}

impl CodedSequence for MorphicSpec {
    fn output_alphabet(&self) -> &Alphabet {
        MorphicSpec::output_alphabet(self)
    }

    fn prefix(&self, n: usize) -> Word {
        iterate_fixed_point(self, n)
    }
}

impl CodedSequence for UniformRepresentation {
    fn output_alphabet(&self) -> &Alphabet {
        self.coding().target()
    }

    fn prefix(&self, n: usize) -> Word {
        self.generate(n)
    }
}

/// Position of the first disagreement between the first `n` output letters, compared by token.
pub fn first_difference<A, B>(a: &A, b: &B, n: usize) -> Option<usize>
where
    A: CodedSequence + ?Sized,
    B: CodedSequence + ?Sized,
{
    let (pa, pb) = (a.prefix(n), b.prefix(n));
    let (ta, tb) = (a.output_alphabet(), b.output_alphabet());
    pa.iter()
        .zip(pb.iter())
        .position(|(&x, &y)| ta.token(x) != tb.token(y))
        .or_else(|| (pa.len() != pb.len()).then(|| pa.len().min(pb.len())))
}

/// True when the first `n` output letters agree.
pub fn prefix_equal<A, B>(a: &A, b: &B, n: usize) -> bool
where
    A: CodedSequence + ?Sized,
    B: CodedSequence + ?Sized,
{
    first_difference(a, b, n).is_none()
}

/// Factor counts `p(1..=n_max)` of a finite prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexityProfile {
    pub n_max: usize,
    /// `counts[n - 1] = p(n)`.
    pub counts: Vec<usize>,
    pub prefix_length: usize,
}

impl ComplexityProfile {
    pub fn p(&self, n: usize) -> usize {
        self.counts[n - 1]
    }

    pub fn validity_margin(&self) -> usize {
        self.prefix_length - self.n_max
    }

    /// True when `p(n) = n + 1` for every recorded `n`.
    pub fn is_sturmian(&self) -> bool {
        self.counts.iter().enumerate().all(|(i, &c)| c == i + 2)
    }
}

struct SuffixAutomaton {
    len: Vec<usize>,
    link: Vec<Option<usize>>,
    next: Vec<BTreeMap<Letter, usize>>,
    last: usize,
}

impl SuffixAutomaton {
    fn build(word: &[Letter]) -> Self {
        let mut sa = SuffixAutomaton {
            len: vec![0],
            link: vec![None],
            next: vec![BTreeMap::new()],
            last: 0,
        };
        for &c in word {
            sa.extend(c);
        }
        sa
    }

    fn add_state(
        &mut self,
        len: usize,
        link: Option<usize>,
        next: BTreeMap<Letter, usize>,
    ) -> usize {
        self.len.push(len);
        self.link.push(link);
        self.next.push(next);
        self.len.len() - 1
    }

    fn extend(&mut self, c: Letter) {
        let cur = self.add_state(self.len[self.last] + 1, None, BTreeMap::new());
        let mut p = Some(self.last);
        while let Some(s) = p {
            if self.next[s].contains_key(&c) {
                break;
            }
            self.next[s].insert(c, cur);
            p = self.link[s];
        }
        match p {
            None => self.link[cur] = Some(0),
            Some(s) => {
                let q = self.next[s][&c];
                if self.len[s] + 1 == self.len[q] {
                    self.link[cur] = Some(q);
                } else {
                    let clone = self.add_state(self.len[s] + 1, self.link[q], self.next[q].clone());
                    let mut p = Some(s);
                    while let Some(t) = p {
                        if self.next[t].get(&c) != Some(&q) {
                            break;
                        }
                        self.next[t].insert(c, clone);
                        p = self.link[t];
                    }
                    self.link[q] = Some(clone);
                    self.link[cur] = Some(clone);
                }
            }
        }
        self.last = cur;
    }

    /// Distinct factors of each length `1..=n_max`. Every non-initial state represents the
    /// factors with lengths in `(len(link), len]`.
    fn factor_counts(&self, n_max: usize) -> Vec<usize> {
        let mut diff = vec![0isize; n_max + 2];
        for state in 1..self.len.len() {
            let lo = self.len[self.link[state].unwrap_or(0)] + 1;
            let hi = self.len[state].min(n_max);
            if lo <= hi {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            }
        }
        let mut acc = 0isize;
        (1..=n_max)
            .map(|n| {
                acc += diff[n];
                acc as usize
            })
            .collect()
    }
}

/// Factor counts of a word, computed with a suffix automaton.
pub fn factor_counts(word: &[Letter], n_max: usize) -> Vec<usize> {
    SuffixAutomaton::build(word).factor_counts(n_max)
}

/// Number of distinct length-`n` factors of the length-`prefix_len` prefix, for `1 ≤ n ≤ n_max`.
///
/// The counts are lower bounds on the complexity of the infinite word. `prefix_len` must be at
/// least `4 · n_max`.
pub fn factor_complexity<S>(seq: &S, n_max: usize, prefix_len: usize) -> Result<ComplexityProfile>
where
    S: CodedSequence + ?Sized,
{
    if prefix_len < 4 * n_max {
        return Err(Error::MarginViolation { n_max, prefix_len });
    }
    let prefix = seq.prefix(prefix_len);
    Ok(ComplexityProfile {
        n_max,
        counts: factor_counts(&prefix, n_max),
        prefix_length: prefix_len,
    })
}

/// Empirical evidence, never a proof, that a sequence is Sturmian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmianWitness {
    pub is_sturmian: bool,
    pub profile: ComplexityProfile,
}

pub fn sturmian_witness<S>(seq: &S, n_max: usize, prefix_len: usize) -> Result<SturmianWitness>
where
    S: CodedSequence + ?Sized,
{
    let profile = factor_complexity(seq, n_max, prefix_len)?;
    Ok(SturmianWitness {
        is_sturmian: profile.is_sturmian(),
        profile,
    })
}

/// Letter counts in the first `prefix_len` output letters divided by `prefix_len`.
pub fn empirical_frequencies<S>(seq: &S, prefix_len: usize) -> Vec<BigRational>
where
    S: CodedSequence + ?Sized,
{
    let alphabet = seq.output_alphabet();
    let prefix = seq.prefix(prefix_len);
    let mut counts = vec![0usize; alphabet.len()];
    for &l in prefix.iter() {
        counts[l] += 1;
    }
    let total = BigInt::from(prefix.len().max(1));
    counts
        .into_iter()
        .map(|c| BigRational::new(BigInt::from(c), total.clone()))
        .collect()
}
