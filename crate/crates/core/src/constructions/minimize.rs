use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::UniformRepresentation;
use crate::word::{Alphabet, Coding, Letter, Morphism, Word};

/// Assigns class numbers in order of first appearance.
fn renumber<K: Ord>(keys: impl Iterator<Item = K>) -> (Vec<usize>, usize) {
    let mut ids = BTreeMap::new();
    let classes = keys
        .map(|k| {
            let next = ids.len();
            *ids.entry(k).or_insert(next)
        })
        .collect();
    (classes, ids.len())
}

/// Coarsest representation with the same coded fixed point.
///
/// Letters not reachable from the seed are dropped; the rest are merged by Moore-style partition
/// refinement: start from the partition by coding output and split classes until equivalent
/// letters have position-wise equivalent images. Each class is named after its smallest member.
pub fn minimize_uniform(u: &UniformRepresentation) -> UniformRepresentation {
    let m = u.morphism();
    let letters = m.reachable_from(u.seed());
    let mut local = vec![usize::MAX; m.alphabet().len()];
    for (i, &l) in letters.iter().enumerate() {
        local[l] = i;
    }

    let (mut class, mut count) = renumber(letters.iter().map(|&l| u.coding().map(l)));
    loop {
        let (next, next_count) = renumber(letters.iter().enumerate().map(|(i, &l)| {
            let image: Vec<usize> = m.image(l).iter().map(|&c| class[local[c]]).collect();
            (class[i], image)
        }));
        class = next;
        if next_count == count {
            break;
        }
        count = next_count;
    }

    // classes are numbered by first appearance, so representatives come out in letter order
    let mut representative = vec![usize::MAX; count];
    for (i, &l) in letters.iter().enumerate() {
        if representative[class[i]] == usize::MAX {
            representative[class[i]] = l;
        }
    }
    let alphabet = Alphabet::new(representative.iter().map(|&l| m.alphabet().token(l)))
        .expect("representative tokens are distinct");
    let images = representative
        .iter()
        .map(|&l| {
            m.image(l)
                .iter()
                .map(|&c| class[local[c]])
                .collect::<Word>()
        })
        .collect();
    let morphism = Morphism::new(alphabet.clone(), images).expect("quotient images are in range");
    let map = representative.iter().map(|&l| u.coding().map(l)).collect();
    let coding = Coding::new(alphabet, u.coding().target().clone(), map)
        .expect("quotient coding is in range");
    UniformRepresentation::new(morphism, coding, class[local[u.seed()]])
        .expect("quotient of a uniform representation is uniform with a prolongable seed")
}

/// A letter bijection `u1 → u2` respecting seeds, images position by position, and coding
/// outputs (compared by token). Found by a synchronized breadth-first walk from the seeds.
pub fn iso_equivalent(
    u1: &UniformRepresentation,
    u2: &UniformRepresentation,
) -> Option<Vec<Letter>> {
    let (m1, m2) = (u1.morphism(), u2.morphism());
    let n = m1.alphabet().len();
    if u1.q() != u2.q() || n != m2.alphabet().len() {
        return None;
    }
    let mut forward: Vec<Option<Letter>> = vec![None; n];
    let mut backward: Vec<Option<Letter>> = vec![None; n];
    let mut queue = VecDeque::new();
    forward[u1.seed()] = Some(u2.seed());
    backward[u2.seed()] = Some(u1.seed());
    queue.push_back((u1.seed(), u2.seed()));
    while let Some((a, b)) = queue.pop_front() {
        let out1 = u1.coding().target().token(u1.coding().map(a));
        let out2 = u2.coding().target().token(u2.coding().map(b));
        if out1 != out2 {
            return None;
        }
        for (&x, &y) in m1.image(a).iter().zip(m2.image(b).iter()) {
            match (forward[x], backward[y]) {
                (None, None) => {
                    forward[x] = Some(y);
                    backward[y] = Some(x);
                    queue.push_back((x, y));
                }
                (Some(fx), Some(by)) if fx == y && by == x => {}
                _ => return None,
            }
        }
    }
    forward.into_iter().collect()
}
