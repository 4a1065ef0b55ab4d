use alloc::vec::Vec;

use crate::error::CongruenceError;
use crate::word::{Letter, Word};

/// Default cap on the number of members a [`SubwordSet`] may hold.
pub const DEFAULT_MEMBER_BUDGET: u64 = 1 << 24;

/// The downward-closed set `{u : u ≼ x, |u| ≤ cap}` listed in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubwordSet {
    cap: usize,
    members: Vec<Word>,
}

impl SubwordSet {
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Members in shortlex order, starting with ε.
    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, u: &Word) -> bool {
        self.members.binary_search(u).is_ok()
    }

    /// Members of length exactly `len`, in lexicographic order.
    pub fn of_length(&self, len: usize) -> &[Word] {
        let lo = self.members.partition_point(|w| w.len() < len);
        let hi = self.members.partition_point(|w| w.len() <= len);
        &self.members[lo..hi]
    }

    pub fn into_members(self) -> Vec<Word> {
        self.members
    }
}

const NONE: u32 = u32::MAX;

/// Lists every subword of `x` of length at most `cap`.
///
/// Each subword `u` is tracked with the end of its earliest embedding in `x`,
/// so `u·a` is produced exactly once, from `u`. Layers come out in
/// lexicographic order without sorting.
pub fn subwords_up_to(x: &[Letter], cap: usize, budget: u64) -> Result<SubwordSet, CongruenceError> {
    let k = x.iter().copied().max().map_or(0, |a| a as usize + 1);
    let len = x.len();
    // next[pos * k + a] = first index >= pos holding letter a
    let mut next = alloc::vec![NONE; (len + 1) * k];
    for pos in (0..len).rev() {
        let (row, below) = next.split_at_mut((pos + 1) * k);
        row[pos * k..].copy_from_slice(&below[..k]);
        row[pos * k + x[pos] as usize] = pos as u32;
    }

    let over = || CongruenceError::Resource {
        resource: "subword-set members",
        required: None,
        budget,
    };
    if budget == 0 {
        return Err(over());
    }
    let mut members = alloc::vec![Word::empty()];
    let mut frontier: Vec<(usize, usize)> = alloc::vec![(0, 0)]; // (member index, embedding end)
    for _ in 0..cap {
        let mut next_frontier = Vec::new();
        for &(idx, end) in &frontier {
            for a in 0..k {
                let hit = next[end * k + a];
                if hit == NONE {
                    continue;
                }
                if members.len() as u64 >= budget {
                    return Err(over());
                }
                let mut u = members[idx].clone();
                u.push(a as Letter);
                next_frontier.push((members.len(), hit as usize + 1));
                members.push(u);
            }
        }
        if next_frontier.is_empty() {
            break;
        }
        frontier = next_frontier;
    }
    Ok(SubwordSet { cap, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{is_subword, parse_word, Alphabet, ShortlexWords};
    use alloc::string::{String, ToString};

    fn w(s: &str) -> Word {
        parse_word(s, Alphabet::new(26).unwrap()).unwrap()
    }

    fn render(set: &SubwordSet) -> Vec<String> {
        set.members().iter().map(|u| u.to_string()).collect()
    }

    #[test]
    fn worked_example() {
        let set = subwords_up_to(w("abacb").letters(), 2, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(
            render(&set),
            ["", "a", "b", "c", "aa", "ab", "ac", "ba", "bb", "bc", "cb"]
        );
        let other = subwords_up_to(w("baaacbb").letters(), 2, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(set, other);
        let x3 = subwords_up_to(w("abacb").letters(), 3, DEFAULT_MEMBER_BUDGET).unwrap();
        let y3 = subwords_up_to(w("baaacbb").letters(), 3, DEFAULT_MEMBER_BUDGET).unwrap();
        assert!(x3.contains(&w("aba")) && !y3.contains(&w("aba")));
    }

    #[test]
    fn small_cases() {
        let set = subwords_up_to(&[], 3, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(render(&set), [""]);
        let set = subwords_up_to(w("ab").letters(), 2, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(render(&set), ["", "a", "b", "ab"]);
        assert_eq!(set.of_length(1).len(), 2);
        let set = subwords_up_to(w("abc").letters(), 0, DEFAULT_MEMBER_BUDGET).unwrap();
        assert_eq!(render(&set), [""]);
    }

    #[test]
    fn budget_is_enforced() {
        let err = subwords_up_to(w("abcabc").letters(), 6, 10).unwrap_err();
        assert!(matches!(err, CongruenceError::Resource { budget: 10, .. }));
    }

    #[test]
    fn matches_brute_force_and_is_downward_closed() {
        let k3 = Alphabet::new(3).unwrap();
        for x in ShortlexWords::new(k3, 6) {
            let set = subwords_up_to(x.letters(), 3, DEFAULT_MEMBER_BUDGET).unwrap();
            let brute: Vec<Word> = ShortlexWords::new(k3, 3)
                .filter(|u| is_subword(u.letters(), x.letters()))
                .collect();
            assert_eq!(set.members(), brute.as_slice(), "x = {x}");
            for u in set.members() {
                for i in 0..u.len() {
                    let mut v = u.clone().into_letters();
                    v.remove(i);
                    assert!(set.contains(&Word::from_letters(v)));
                }
            }
        }
    }
}
