use morphic_core::constructions::{minimize_uniform, UniformRepresentation};
use morphic_core::criteria::{
    anagram_decomposition, analyze, eigenvector_criterion, gcd_obstruction, AnalysisOptions,
    Verdict,
};
use morphic_core::linalg::{char_poly, incidence, integer_roots, IntMatrix, IntPolynomial};
use morphic_core::sequence::prefix_equal;
use morphic_core::word::{
    iterate_fixed_point, parikh_vector, Alphabet, Coding, Letter, MorphicSpec, Morphism, Word,
};
use num_bigint::BigInt;
use proptest::prelude::*;

const CASES: u32 = 500;

fn alphabet(n: usize) -> Alphabet {
    Alphabet::new((0..n).map(|i| i.to_string())).unwrap()
}

fn word(n: usize, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(0..n, len)
}

/// Non-erasing morphism on `n` letters.
fn morphism_on(n: usize, max_len: usize) -> impl Strategy<Value = Morphism> {
    prop::collection::vec(word(n, 1..=max_len), n).prop_map(move |images| {
        Morphism::new(alphabet(n), images.into_iter().map(Word::from).collect()).unwrap()
    })
}

fn morphism(max_letters: usize, max_len: usize) -> impl Strategy<Value = Morphism> {
    (1..=max_letters).prop_flat_map(move |n| morphism_on(n, max_len))
}

/// Morphism prolongable on letter 0: the image of 0 is `0` followed by a non-empty word.
fn prolongable(max_letters: usize, max_len: usize) -> impl Strategy<Value = MorphicSpec> {
    (1..=max_letters)
        .prop_flat_map(move |n| (morphism_on(n, max_len), word(n, 1..=max_len - 1)))
        .prop_map(|(m, tail)| {
            let mut images = m.images().to_vec();
            let mut first = Word::from(vec![0]);
            first.extend_from_slice(&tail);
            images[0] = first;
            let m = Morphism::new(m.alphabet().clone(), images).unwrap();
            MorphicSpec::new(m, 0, None).unwrap()
        })
}

fn uniform_rep() -> impl Strategy<Value = UniformRepresentation> {
    (2..=3usize, 2..=5usize)
        .prop_flat_map(|(q, n)| {
            (
                prop::collection::vec(word(n, q..=q), n),
                prop::collection::vec(0..2usize, n),
                Just(n),
            )
        })
        .prop_map(|(mut images, map, n)| {
            images[0][0] = 0;
            let m =
                Morphism::new(alphabet(n), images.into_iter().map(Word::from).collect()).unwrap();
            let coding = Coding::new(alphabet(n), alphabet(2), map).unwrap();
            UniformRepresentation::new(m, coding, 0).unwrap()
        })
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).unwrap()
}

fn cofactor_det(a: &[Vec<i64>]) -> i64 {
    if a.is_empty() {
        return 1;
    }
    (0..a.len())
        .map(|j| {
            let minor: Vec<Vec<i64>> = a[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * a[0][j] * cofactor_det(&minor)
        })
        .sum()
}

fn relabel(spec: &MorphicSpec, perm: &[Letter]) -> MorphicSpec {
    let m = spec.morphism();
    let n = perm.len();
    let mut images = vec![Word::new(); n];
    for l in m.alphabet().letters() {
        images[perm[l]] = m.image(l).iter().map(|&c| perm[c]).collect();
    }
    MorphicSpec::new(
        Morphism::new(alphabet(n), images).unwrap(),
        perm[spec.seed()],
        None,
    )
    .unwrap()
}

fn light_options() -> AnalysisOptions {
    AnalysisOptions {
        depth: 2000,
        kmax: 4,
        n_max: 10,
        prefix_length: 2000,
        ..Default::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn incidence_is_multiplicative(
        (s, t) in (1..=4usize).prop_flat_map(|n| (morphism_on(n, 4), morphism_on(n, 4)))
    ) {
        let st = s.compose(&t).unwrap();
        prop_assert_eq!(incidence(&st).matrix, incidence(&s).matrix.mul(&incidence(&t).matrix));
    }

    #[test]
    fn length_is_a_homomorphism(
        (m, w) in (1..=4usize).prop_flat_map(|n| (morphism_on(n, 5), word(n, 0..=20)))
    ) {
        let parikh = parikh_vector(&w, m.alphabet());
        let expected: usize = m.length_vector().iter().zip(&parikh).map(|(l, p)| l * p).sum();
        prop_assert_eq!(m.apply(&w).len(), expected);
    }

    #[test]
    fn compose_agrees_with_apply(
        (s, t, w) in (1..=4usize)
            .prop_flat_map(|n| (morphism_on(n, 4), morphism_on(n, 4), word(n, 0..=10)))
    ) {
        prop_assert_eq!(s.compose(&t).unwrap().apply(&w), s.apply(&t.apply(&w)));
    }

    #[test]
    fn powers_add(m in morphism(3, 3), a in 1..=3usize, b in 1..=3usize) {
        let lhs = m.power(a + b).unwrap();
        let rhs = m.power(a).unwrap().compose(&m.power(b).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn prefixes_are_monotone(spec in prolongable(4, 4), n in 0..300usize, extra in 0..300usize) {
        let short = iterate_fixed_point(&spec, n);
        let long = iterate_fixed_point(&spec, n + extra);
        prop_assert_eq!(short.len(), n);
        prop_assert_eq!(&long[..n], &short[..]);
        // a fixed point: applying the morphism to a prefix extends it
        let image = spec.morphism().apply(&short);
        let reach = image.len().min(long.len());
        prop_assert_eq!(&image[..reach], &long[..reach]);
    }

    #[test]
    fn anagram_implies_eigenvector(
        (n, base, perms, picks) in (2..=3usize, 1..=4usize).prop_flat_map(|(n, m)| {
            (
                Just(n),
                word(n, m..=m),
                prop::collection::vec(Just(()).prop_perturb(|_, mut rng| rng.random::<u64>()), 1..=3),
                prop::collection::vec(prop::collection::vec(0..16usize, 1..=3), n),
            )
        })
    ) {
        // W: shuffles of one base word; each image concatenates 1..=3 words of W
        let words: Vec<Vec<Letter>> = perms
            .iter()
            .map(|&seed| {
                let mut w = base.clone();
                let len = w.len();
                for i in (1..len).rev() {
                    let j = (seed.rotate_left(i as u32) % (i as u64 + 1)) as usize;
                    w.swap(i, j);
                }
                w
            })
            .collect();
        let images: Vec<Word> = picks
            .iter()
            .map(|choice| choice.iter().flat_map(|&c| words[c % words.len()].clone()).collect())
            .collect();
        let m = Morphism::new(alphabet(n), images).unwrap();
        let cert = anagram_decomposition(&m).unwrap().expect("built from anagrams");
        let q = eigenvector_criterion(&m).unwrap();
        if cert.degree >= 2 {
            prop_assert_eq!(q, Some(cert.degree));
        } else {
            prop_assert_eq!(q, None);
        }
    }

    #[test]
    fn gcd_obstruction_blocks_criterion(m in morphism_on(2, 8)) {
        // when every image is a power of one letter, e.g. 0→00, 1→0, L is an eigenvector anyway
        let occurs = |l: Letter| m.images().iter().any(|w| w.contains(&l));
        prop_assume!(occurs(0) && occurs(1));
        if gcd_obstruction(&m).unwrap() {
            prop_assert_eq!(eigenvector_criterion(&m).unwrap(), None);
        }
    }

    #[test]
    fn minimize_is_idempotent(u in uniform_rep()) {
        let once = minimize_uniform(&u);
        prop_assert_eq!(minimize_uniform(&once), once.clone());
        prop_assert!(once.morphism().alphabet().len() <= u.morphism().alphabet().len());
        prop_assert!(prefix_equal(&once, &u, 500));
    }

    #[test]
    fn char_poly_matches_cofactor_expansion(
        rows in (1..=5usize).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))
    ) {
        let n = rows.len();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let p = char_poly(&IntMatrix::from_rows(&refs));
        prop_assert_eq!(p.degree(), n);
        prop_assert!(p.is_monic());
        // a monic polynomial of degree n is fixed by its values at n points
        for x in -(n as i64)..=0 {
            let shifted: Vec<Vec<i64>> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| r.iter().enumerate().map(|(j, &v)| if i == j { x - v } else { -v }).collect())
                .collect();
            prop_assert_eq!(to_i64(&p.eval(&BigInt::from(x))), cofactor_det(&shifted));
        }
    }

    #[test]
    fn integer_roots_are_exact(roots in prop::collection::vec(-6i64..=6, 0..=4), c in 2i64..=7) {
        // (x² − c) has no rational root for non-square c
        prop_assume!(c != 4);
        let mut coefficients = vec![BigInt::from(-c), BigInt::from(0), BigInt::from(1)];
        for &r in &roots {
            let mut next = vec![BigInt::from(0); coefficients.len() + 1];
            for (i, a) in coefficients.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            coefficients = next;
        }
        let found = integer_roots(&IntPolynomial::new(coefficients));
        let mut expected: Vec<(BigInt, usize)> = Vec::new();
        let mut sorted = roots.clone();
        sorted.sort();
        for r in sorted {
            match expected.iter_mut().find(|(x, _)| *x == BigInt::from(r)) {
                Some((_, k)) => *k += 1,
                None => expected.push((BigInt::from(r), 1)),
            }
        }
        let mut found_sorted = found.clone();
        found_sorted.sort();
        prop_assert_eq!(found_sorted, expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(CASES))]

    #[test]
    fn verdicts_survive_relabeling(
        (spec, perm) in prolongable(3, 3).prop_flat_map(|s| {
            let n = s.morphism().alphabet().len();
            (Just(s), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        let options = light_options();
        let a = analyze(&spec, &options).unwrap();
        let b = analyze(&relabel(&spec, &perm), &options).unwrap();
        prop_assert_eq!(a.verdict.stage(), b.verdict.stage());
        match (&a.verdict, &b.verdict) {
            (Verdict::Automatic(x), Verdict::Automatic(y)) => {
                prop_assert_eq!((x.q, x.base), (y.q, y.base));
                prop_assert_eq!(
                    x.certificate.morphism().alphabet().len(),
                    y.certificate.morphism().alphabet().len()
                );
            }
            (Verdict::NotAutomatic(_), Verdict::NotAutomatic(_)) => {}
            (Verdict::Unknown(x), Verdict::Unknown(y)) => {
                prop_assert_eq!(&x.profile.counts, &y.profile.counts);
            }
            _ => prop_assert!(false, "verdict kinds differ"),
        }
    }

    #[test]
    fn certificates_replay(spec in prolongable(3, 4)) {
        let analysis = analyze(&spec, &light_options()).unwrap();
        if let Verdict::Automatic(a) = &analysis.verdict {
            let expected = iterate_fixed_point(&spec, 3000);
            let got = a.certificate.generate(3000);
            let render = |alphabet: &Alphabet, w: &Word| -> Vec<String> {
                w.iter().map(|&l| alphabet.token(l).to_string()).collect()
            };
            prop_assert_eq!(
                render(a.certificate.coding().target(), &got),
                render(spec.output_alphabet(), &expected)
            );
            prop_assert_eq!(a.certificate.morphism().uniform_length(), Some(a.q));
        }
    }
}
