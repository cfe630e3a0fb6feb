//! Automaticity tests and the analyzer that chains them.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::constructions::{
    block_morphism, minimize_uniform, reshuffle_uniformize, BlockMorphism, UniformRepresentation,
};
use crate::linalg::{incidence, is_primitive, left_eigencheck, spectral_report, SpectralReport};
use crate::sequence::{
    factor_complexity, first_difference, sturmian_witness, ComplexityProfile, SturmianWitness,
};
use crate::word::{parikh_vector, Letter, MorphicSpec, Morphism, Word};
use crate::{Error, Result};

/// The integer `q ≥ 2` with `L·M = q·L`, if any.
pub fn eigenvector_criterion(m: &Morphism) -> Result<Option<usize>> {
    if m.is_erasing() {
        return Err(Error::Erasing);
    }
    let data = incidence(m);
    let Some(lambda) = left_eigencheck(&data.length_vector, &data.matrix) else {
        return Ok(None);
    };
    if !lambda.is_integer() {
        return Err(Error::Invariant(format!(
            "left eigenvalue {lambda} of a positive integer vector is not an integer"
        )));
    }
    let q = lambda
        .to_integer()
        .to_usize()
        .ok_or_else(|| Error::Invariant(format!("eigenvalue {lambda} does not fit a usize")))?;
    Ok((q >= 2).then_some(q))
}

/// True when `gcd(L₀, L₁) = 1` on a two-letter alphabet.
///
/// If both letters occur in the images this rules out the eigenvector criterion. It does not
/// when all images are powers of a single letter: `0→00, 1→0` has `L = (2, 1)` and `LM = 2L`.
pub fn gcd_obstruction(m: &Morphism) -> Result<bool> {
    let found = m.alphabet().len();
    if found != 2 {
        return Err(Error::WrongAlphabetSize { expected: 2, found });
    }
    let l = m.length_vector();
    Ok(l[0].gcd(&l[1]) == 1)
}

/// Images cut into words of one length that all share a Parikh vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnagramCertificate {
    pub block_length: usize,
    /// Distinct blocks in order of first appearance.
    pub words: Vec<Word>,
    /// Number of blocks in each image.
    pub counts: Vec<usize>,
    /// Letter counts common to every block.
    pub shared_parikh: Vec<usize>,
    pub degree: usize,
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|&d| n.is_multiple_of(d)).collect()
}

fn try_block_length(m: &Morphism, len: usize) -> Option<AnagramCertificate> {
    let alphabet = m.alphabet();
    let mut shared: Option<Vec<usize>> = None;
    let mut seen = BTreeSet::new();
    let mut words = Vec::new();
    for image in m.images() {
        for block in image.chunks(len) {
            let parikh = parikh_vector(block, alphabet);
            match &shared {
                None => shared = Some(parikh),
                Some(s) if *s != parikh => return None,
                Some(_) => {}
            }
            if seen.insert(block.to_vec()) {
                words.push(Word::from(block));
            }
        }
    }
    let shared_parikh = shared?;
    let counts: Vec<usize> = m.images().iter().map(|w| w.len() / len).collect();
    let degree = counts.iter().zip(&shared_parikh).map(|(n, m)| n * m).sum();
    Some(AnagramCertificate {
        block_length: len,
        words,
        counts,
        shared_parikh,
        degree,
    })
}

/// Searches for a set of anagrams from which every image is built.
///
/// Block lengths dividing the gcd of the image lengths are tried from the smallest `m ≥ 2`
/// upwards, then `m = 1`. A valid `m` stays valid for its multiples, so the first hit is the
/// finest decomposition; the degree does not depend on the choice.
pub fn anagram_decomposition(m: &Morphism) -> Result<Option<AnagramCertificate>> {
    if m.is_erasing() {
        return Err(Error::Erasing);
    }
    let g = m.length_vector().into_iter().fold(0, |acc, l| acc.gcd(&l));
    let mut candidates = divisors(g);
    candidates.rotate_left(1);
    for len in candidates {
        if let Some(cert) = try_block_length(m, len) {
            for w in &cert.words {
                let image = m.apply(w);
                if image.len() != cert.degree * w.len() {
                    return Err(Error::Invariant(format!(
                        "anagram `{}` has image length {}, expected {}",
                        m.alphabet().render(w),
                        image.len(),
                        cert.degree * w.len()
                    )));
                }
            }
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

/// A primitive non-uniform morphism whose dominant eigenvalue is not an integer has no automatic
/// fixed point: its letter frequencies are irrational.
pub fn irrationality_verdict(
    m: &Morphism,
    tolerance: &BigRational,
) -> Result<Option<SpectralReport>> {
    if m.is_erasing() {
        return Err(Error::Erasing);
    }
    if m.uniform_length().is_some() {
        return Ok(None);
    }
    let data = incidence(m);
    if !is_primitive(&data.matrix) {
        return Ok(None);
    }
    let report = spectral_report(&data.matrix, tolerance);
    Ok((!report.dominant_is_integer).then_some(report))
}

/// Analyzer stages in the order they run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stage {
    Uniform,
    Eigenvector,
    Anagram,
    Blocks,
    Irrationality,
    Witness,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Uniform => "uniform",
            Stage::Eigenvector => "eigenvector",
            Stage::Anagram => "anagram",
            Stage::Blocks => "blocks",
            Stage::Irrationality => "irrationality",
            Stage::Witness => "witness",
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// The stage decided the verdict.
    Fired,
    /// The stage ran and did not apply.
    Failed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub stage: Stage,
    /// Block length for the block stage.
    pub parameter: Option<usize>,
    pub outcome: Outcome,
    pub detail: String,
}

/// A positive answer with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automatic {
    /// Length of the certificate morphism.
    pub q: usize,
    /// Smallest `b` with `q` a power of `b`; the sequence is also `b`-automatic.
    pub base: usize,
    pub stage: Stage,
    pub certificate: UniformRepresentation,
    pub anagram: Option<AnagramCertificate>,
    pub blocks: Option<BlockMorphism>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotAutomaticReason {
    IrrationalDominant(SpectralReport),
}

/// Complexity data gathered when nothing is decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evidence {
    pub profile: ComplexityProfile,
    pub subsystems: Vec<SubsystemWitness>,
}

impl Evidence {
    /// True when some invariant subsystem looks Sturmian.
    pub fn has_sturmian_subsystem(&self) -> bool {
        self.subsystems.iter().any(|s| s.witness.is_sturmian)
    }
}

/// A letter set closed under the morphism together with a witness for one of its fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsystemWitness {
    /// Letters of the analyzed morphism, ascending.
    pub letters: Vec<Letter>,
    pub seed: Letter,
    pub witness: SturmianWitness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Automatic(Box<Automatic>),
    NotAutomatic(NotAutomaticReason),
    Unknown(Evidence),
}

impl Verdict {
    pub fn stage(&self) -> Stage {
        match self {
            Verdict::Automatic(a) => a.stage,
            Verdict::NotAutomatic(_) => Stage::Irrationality,
            Verdict::Unknown(_) => Stage::Witness,
        }
    }

    pub fn automatic(&self) -> Option<&Automatic> {
        match self {
            Verdict::Automatic(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Automatic(a) => {
                write!(f, "Automatic({}) via ", a.q)?;
                match (a.stage, &a.blocks, &a.anagram) {
                    (Stage::Blocks, Some(b), _) => {
                        write!(f, "{}-block morphism {}", b.k(), b.numbered())?
                    }
                    (Stage::Anagram, _, Some(w)) => write!(
                        f,
                        "anagram decomposition, block length {}, d={}",
                        w.block_length, w.degree
                    )?,
                    (Stage::Eigenvector, _, _) => {
                        write!(f, "left-eigenvector criterion, q={}", a.q)?
                    }
                    _ => write!(f, "uniform morphism, q={}", a.q)?,
                }
                if a.base != a.q {
                    write!(f, ", hence {}-automatic", a.base)?;
                }
                Ok(())
            }
            Verdict::NotAutomatic(NotAutomaticReason::IrrationalDominant(r)) => write!(
                f,
                "NotAutomatic: primitive, dominant eigenvalue irrational, charpoly {}",
                r.char_poly
            ),
            Verdict::Unknown(e) => {
                f.write_str("Unknown: no criterion applies")?;
                if e.has_sturmian_subsystem() {
                    write!(
                        f,
                        "; Sturmian evidence on an invariant subsystem (p(n)=n+1 for n<={})",
                        e.profile.n_max
                    )?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Prefix length on which every certificate is checked.
    pub depth: usize,
    /// Largest block length tried by the block stage.
    pub kmax: usize,
    pub tolerance: BigRational,
    pub n_max: usize,
    pub prefix_length: usize,
    pub minimize: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            depth: 10_000,
            kmax: 8,
            tolerance: BigRational::new(BigInt::from(1), BigInt::from(1_000_000_000)),
            n_max: 30,
            prefix_length: 10_000,
            minimize: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub verdict: Verdict,
    pub stages: Vec<StageRecord>,
}

/// Smallest `b ≥ 2` such that `q` is a power of `b`.
pub fn multiplicative_root(q: usize) -> usize {
    (2..q)
        .find(|&b| {
            let mut x = b;
            while x < q {
                x *= b;
            }
            x == q
        })
        .unwrap_or(q)
}

struct Analyzer<'a> {
    spec: &'a MorphicSpec,
    options: &'a AnalysisOptions,
    stages: Vec<StageRecord>,
}

impl Analyzer<'_> {
    fn record(&mut self, stage: Stage, parameter: Option<usize>, outcome: Outcome, detail: String) {
        self.stages.push(StageRecord {
            stage,
            parameter,
            outcome,
            detail,
        });
    }

    fn certify(
        &mut self,
        stage: Stage,
        parameter: Option<usize>,
        certificate: UniformRepresentation,
    ) -> Result<Automatic> {
        let certificate = if self.options.minimize {
            minimize_uniform(&certificate)
        } else {
            certificate
        };
        if let Some(i) = first_difference(&certificate, self.spec, self.options.depth) {
            return Err(Error::Invariant(format!(
                "{stage} certificate differs from the fixed point at position {i}"
            )));
        }
        let q = certificate.q();
        self.record(
            stage,
            parameter,
            Outcome::Fired,
            format!(
                "{q}-uniform certificate verified on {} letters",
                self.options.depth
            ),
        );
        Ok(Automatic {
            q,
            base: multiplicative_root(q),
            stage,
            certificate,
            anagram: None,
            blocks: None,
        })
    }

    fn run(&mut self) -> Result<Verdict> {
        let m = self.spec.morphism();

        if m.uniform_length().is_some() {
            let cert = UniformRepresentation::from_spec(self.spec)?;
            return Ok(Verdict::Automatic(Box::new(self.certify(
                Stage::Uniform,
                None,
                cert,
            )?)));
        }
        self.record(
            Stage::Uniform,
            None,
            Outcome::Failed,
            format!("lengths {:?}", m.length_vector()),
        );

        if eigenvector_criterion(m)?.is_some() {
            let cert = reshuffle_uniformize(self.spec)?;
            return Ok(Verdict::Automatic(Box::new(self.certify(
                Stage::Eigenvector,
                None,
                cert,
            )?)));
        }
        let detail = match m.alphabet().len() {
            2 if gcd_obstruction(m)? => "L·M is not a multiple of L (gcd of lengths is 1)",
            _ => "L·M is not a multiple of L",
        };
        self.record(
            Stage::Eigenvector,
            None,
            Outcome::Failed,
            detail.to_string(),
        );

        if let Some(anagram) = anagram_decomposition(m)? {
            // anagram images satisfy the eigenvector criterion with eigenvalue d
            let cert = reshuffle_uniformize(self.spec)?;
            if cert.q() != anagram.degree {
                return Err(Error::Invariant(format!(
                    "anagram degree {} differs from eigenvalue {}",
                    anagram.degree,
                    cert.q()
                )));
            }
            let mut a = self.certify(Stage::Anagram, Some(anagram.block_length), cert)?;
            a.anagram = Some(anagram);
            return Ok(Verdict::Automatic(Box::new(a)));
        }
        self.record(
            Stage::Anagram,
            None,
            Outcome::Failed,
            "no anagram decomposition".to_string(),
        );

        for k in 2..=self.options.kmax {
            let b = match block_morphism(self.spec, k) {
                Ok(b) => b,
                Err(e @ (Error::BlockDivisibility { .. } | Error::BlockBoundExceeded(_))) => {
                    self.record(Stage::Blocks, Some(k), Outcome::Failed, e.to_string());
                    continue;
                }
                Err(e) => return Err(e),
            };
            let blocks = b.morphism().alphabet().len();
            if b.uniform_length().is_none() {
                let detail = format!("{blocks} blocks, induced morphism is not uniform");
                self.record(Stage::Blocks, Some(k), Outcome::Failed, detail);
                continue;
            }
            match b.to_uniform() {
                Ok(cert) => {
                    let mut a = self.certify(Stage::Blocks, Some(k), cert)?;
                    a.blocks = Some(b);
                    return Ok(Verdict::Automatic(Box::new(a)));
                }
                Err(e @ (Error::NotUniform(_) | Error::NotProlongable(_))) => {
                    self.record(Stage::Blocks, Some(k), Outcome::Failed, e.to_string());
                }
                Err(e) => return Err(e),
            }
        }

        if let Some(report) = irrationality_verdict(m, &self.options.tolerance)? {
            self.record(
                Stage::Irrationality,
                None,
                Outcome::Fired,
                format!(
                    "primitive, dominant root of {} is irrational",
                    report.char_poly
                ),
            );
            return Ok(Verdict::NotAutomatic(
                NotAutomaticReason::IrrationalDominant(report),
            ));
        }
        let detail = if is_primitive(&incidence(m).matrix) {
            "dominant eigenvalue is an integer"
        } else {
            "incidence matrix is not primitive"
        };
        self.record(
            Stage::Irrationality,
            None,
            Outcome::Failed,
            detail.to_string(),
        );

        let evidence = self.evidence()?;
        let detail = format!(
            "p(n) for n <= {} on {} letters, {} invariant subsystems",
            self.options.n_max,
            self.options.prefix_length,
            evidence.subsystems.len()
        );
        self.record(Stage::Witness, None, Outcome::Fired, detail);
        Ok(Verdict::Unknown(evidence))
    }

    fn evidence(&self) -> Result<Evidence> {
        let (n_max, len) = (self.options.n_max, self.options.prefix_length);
        let profile = factor_complexity(self.spec, n_max, len)?;
        let m = self.spec.morphism();
        let all = m.reachable_from(self.spec.seed());
        let mut seen = BTreeSet::new();
        let mut subsystems = Vec::new();
        for &l in &all {
            let letters = m.reachable_from(l);
            if letters.len() == all.len() || !seen.insert(letters.clone()) {
                continue;
            }
            let Some(sub) = m.restrict(&letters) else {
                continue;
            };
            let Some(seed) = sub.alphabet().letters().find(|&s| sub.is_prolongable(s)) else {
                continue;
            };
            let sub_spec = MorphicSpec::new(sub, seed, None)?;
            let witness = sturmian_witness(&sub_spec, n_max, len)?;
            subsystems.push(SubsystemWitness {
                seed: letters[seed],
                letters,
                witness,
            });
        }
        Ok(Evidence {
            profile,
            subsystems,
        })
    }
}

/// Runs the stages in order and stops at the first one that decides.
///
/// Positive verdicts carry a certificate checked against the fixed point on `options.depth`
/// letters; a failed check is reported as [`Error::Invariant`].
pub fn analyze(spec: &MorphicSpec, options: &AnalysisOptions) -> Result<Analysis> {
    let mut analyzer = Analyzer {
        spec,
        options,
        stages: Vec::new(),
    };
    let verdict = analyzer.run()?;
    Ok(Analysis {
        verdict,
        stages: analyzer.stages,
    })
}

#[cfg(test)]
mod tests {
    use alloc::vec;

    use super::*;
    use crate::linalg::IntPolynomial;

    fn morphism(letters: &[&str], images: &[&str]) -> Morphism {
        Morphism::from_rules(letters, images).unwrap()
    }

    fn spec(letters: &[&str], images: &[&str]) -> MorphicSpec {
        MorphicSpec::new(morphism(letters, images), 0, None).unwrap()
    }

    fn words(m: &Morphism, cert: &AnagramCertificate) -> Vec<String> {
        cert.words.iter().map(|w| m.alphabet().render(w)).collect()
    }

    #[test]
    fn eigenvector_examples() {
        let istrail = morphism(&["0", "1", "2"], &["12", "102", "0"]);
        assert_eq!(eigenvector_criterion(&istrail), Ok(Some(2)));
        let lysenok = morphism(&["a", "b", "c", "d"], &["aca", "d", "b", "c"]);
        assert_eq!(eigenvector_criterion(&lysenok), Ok(None));
        let uniform = morphism(&["0", "1", "2"], &["012", "201", "111"]);
        assert_eq!(eigenvector_criterion(&uniform), Ok(Some(3)));
        let erasing = morphism(&["0", "1"], &["01", ""]);
        assert_eq!(eigenvector_criterion(&erasing), Err(Error::Erasing));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(
            gcd_obstruction(&morphism(&["0", "1"], &["01", "0"])),
            Ok(true)
        );
        assert_eq!(
            gcd_obstruction(&morphism(&["0", "1"], &["0011", "01"])),
            Ok(false)
        );
        assert_eq!(
            gcd_obstruction(&morphism(&["0", "1"], &["10", "0101"])),
            Ok(false)
        );
        let degenerate = morphism(&["0", "1"], &["00", "0"]);
        assert_eq!(gcd_obstruction(&degenerate), Ok(true));
        assert_eq!(eigenvector_criterion(&degenerate), Ok(Some(2)));
        assert_eq!(
            gcd_obstruction(&morphism(&["0", "1", "2"], &["0", "1", "2"])),
            Err(Error::WrongAlphabetSize {
                expected: 2,
                found: 3
            })
        );
    }

    #[test]
    fn anagram_examples() {
        let psi = morphism(&["a", "b", "c"], &["aabc", "bacaaabc", "bacabacabaca"]);
        let cert = anagram_decomposition(&psi).unwrap().unwrap();
        assert_eq!(words(&psi, &cert), ["aabc", "baca"]);
        assert_eq!(cert.counts, [1, 2, 3]);
        assert_eq!(cert.shared_parikh, [2, 1, 1]);
        assert_eq!(cert.degree, 7);

        let f2 = morphism(&["0", "1"], &["010110", "100101100101"]);
        let cert = anagram_decomposition(&f2).unwrap().unwrap();
        assert_eq!(words(&f2, &cert), ["01", "10"]);
        assert_eq!(cert.degree, 9);

        let tm = morphism(&["0", "1"], &["01", "10"]);
        let cert = anagram_decomposition(&tm).unwrap().unwrap();
        assert_eq!(words(&tm, &cert), ["01", "10"]);
        assert_eq!(cert.degree, 2);

        let fib = morphism(&["0", "1"], &["01", "0"]);
        assert_eq!(anagram_decomposition(&fib), Ok(None));
    }

    #[test]
    fn irrational_examples() {
        let tol = AnalysisOptions::default().tolerance;
        let bs = morphism(&["a", "b", "c", "d"], &["aca", "d", "aba", "c"]);
        let r = irrationality_verdict(&bs, &tol).unwrap().unwrap();
        assert_eq!(
            r.char_poly,
            IntPolynomial::from_descending(&[1, -2, -2, -1, 2])
        );
        let be = morphism(&["x", "y", "z"], &["xzy", "xx", "yy"]);
        let r = irrationality_verdict(&be, &tol).unwrap().unwrap();
        assert_eq!(
            r.char_poly,
            IntPolynomial::from_descending(&[1, -1, -2, -4])
        );
        let tm = morphism(&["0", "1"], &["01", "10"]);
        assert_eq!(irrationality_verdict(&tm, &tol), Ok(None));
        // not primitive
        let s = morphism(&["a", "b", "c"], &["aca", "bc", "b"]);
        assert_eq!(irrationality_verdict(&s, &tol), Ok(None));
    }

    #[test]
    fn roots() {
        assert_eq!(multiplicative_root(2), 2);
        assert_eq!(multiplicative_root(4), 2);
        assert_eq!(multiplicative_root(8), 2);
        assert_eq!(multiplicative_root(9), 3);
        assert_eq!(multiplicative_root(7), 7);
        assert_eq!(multiplicative_root(12), 12);
    }

    #[test]
    fn analyze_lysenok() {
        let s = spec(&["a", "b", "c", "d"], &["aca", "d", "b", "c"]);
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        let auto = a.verdict.automatic().unwrap();
        assert_eq!((auto.q, auto.base, auto.stage), (2, 2, Stage::Blocks));
        assert_eq!(
            a.verdict.to_string(),
            "Automatic(2) via 2-block morphism 1→23,2→21,3→22 (1=ab, 2=ac, 3=ad)"
        );
        let stages: Vec<_> = a.stages.iter().map(|r| (r.stage, r.outcome)).collect();
        assert_eq!(
            stages,
            vec![
                (Stage::Uniform, Outcome::Failed),
                (Stage::Eigenvector, Outcome::Failed),
                (Stage::Anagram, Outcome::Failed),
                (Stage::Blocks, Outcome::Fired),
            ]
        );
    }

    #[test]
    fn analyze_istrail() {
        let m = morphism(&["0", "1", "2"], &["12", "102", "0"]);
        let s = MorphicSpec::new(m, 1, None).unwrap();
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        let auto = a.verdict.automatic().unwrap();
        assert_eq!((auto.q, auto.stage), (2, Stage::Eigenvector));
        assert_eq!(auto.certificate.morphism().alphabet().len(), 4);
        assert_eq!(
            a.verdict.to_string(),
            "Automatic(2) via left-eigenvector criterion, q=2"
        );
    }

    #[test]
    fn analyze_primitive_block_example() {
        let s = spec(&["a", "b", "c"], &["acaba", "bac", "cab"]);
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        let auto = a.verdict.automatic().unwrap();
        assert_eq!((auto.q, auto.base), (4, 2));
        assert!(a.verdict.to_string().ends_with("hence 2-automatic"));
    }

    #[test]
    fn analyze_not_automatic() {
        let s = spec(&["a", "b", "c", "d"], &["aca", "d", "aba", "c"]);
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        assert_eq!(
            a.verdict.to_string(),
            "NotAutomatic: primitive, dominant eigenvalue irrational, charpoly x^4 - 2x^3 - 2x^2 - x + 2"
        );
        let s = spec(&["x", "y", "z"], &["xzy", "xx", "yy"]);
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        assert!(matches!(a.verdict, Verdict::NotAutomatic(_)));
        let fib = spec(&["0", "1"], &["01", "0"]);
        let a = analyze(&fib, &AnalysisOptions::default()).unwrap();
        assert!(matches!(a.verdict, Verdict::NotAutomatic(_)));
    }

    #[test]
    fn analyze_unknown_with_sturmian_subsystem() {
        let s = spec(&["a", "b", "c"], &["aca", "bc", "b"]);
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        let Verdict::Unknown(e) = &a.verdict else {
            panic!("{}", a.verdict)
        };
        assert!(e.has_sturmian_subsystem());
        assert_eq!(e.subsystems.len(), 1);
        assert_eq!(e.subsystems[0].letters, [1, 2]);
        assert_eq!(e.subsystems[0].seed, 1);

        let s = spec(&["a", "c", "d"], &["aca", "cd", "c"]);
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        let Verdict::Unknown(e) = &a.verdict else {
            panic!("{}", a.verdict)
        };
        assert!(e.has_sturmian_subsystem());
    }

    #[test]
    fn uniform_input() {
        let s = spec(&["0", "1"], &["01", "10"]);
        let a = analyze(&s, &AnalysisOptions::default()).unwrap();
        let auto = a.verdict.automatic().unwrap();
        assert_eq!((auto.q, auto.stage), (2, Stage::Uniform));
        assert_eq!(a.stages.len(), 1);
    }
}
