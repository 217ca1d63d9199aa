use std::fmt;

use thiserror::Error;

use super::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PatternError {
    #[error("barred index {0} is outside the pattern")]
    BarOutOfRange(usize),
    #[error("pattern values are not a permutation")]
    NotAPermutation,
}

/// A classical pattern, optionally with one barred entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pattern {
    values: Vec<usize>,
    barred: Option<usize>,
}

impl Pattern {
    pub fn classical(values: &[usize]) -> Result<Self, PatternError> {
        Permutation::new(values.to_vec()).map_err(|_| PatternError::NotAPermutation)?;
        Ok(Pattern { values: values.to_vec(), barred: None })
    }

    /// `barred` is the 1-based position of the barred entry.
    pub fn barred(values: &[usize], barred: usize) -> Result<Self, PatternError> {
        Permutation::new(values.to_vec()).map_err(|_| PatternError::NotAPermutation)?;
        if barred == 0 || barred > values.len() {
            return Err(PatternError::BarOutOfRange(barred));
        }
        Ok(Pattern { values: values.to_vec(), barred: Some(barred) })
    }

    /// 2 5 3̄ 1 4
    pub fn baxter_left() -> Self {
        Pattern::barred(&[2, 5, 3, 1, 4], 3).unwrap()
    }

    /// 4 1 3̄ 5 2
    pub fn baxter_right() -> Self {
        Pattern::barred(&[4, 1, 3, 5, 2], 3).unwrap()
    }

    /// 2 1 3̄ 5 4, which characterizes crossing-free Hasse diagrams.
    pub fn hasse_crossing() -> Self {
        Pattern::barred(&[2, 1, 3, 5, 4], 3).unwrap()
    }

    pub fn p2413() -> Self {
        Pattern::classical(&[2, 4, 1, 3]).unwrap()
    }

    pub fn p3142() -> Self {
        Pattern::classical(&[3, 1, 4, 2]).unwrap()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn barred_index(&self) -> Option<usize> {
        self.barred
    }

    /// The pattern with the barred entry deleted and the rest renumbered.
    pub fn reduced(&self) -> Pattern {
        match self.barred {
            None => self.clone(),
            Some(b) => {
                let removed = self.values[b - 1];
                let values = self
                    .values
                    .iter()
                    .enumerate()
                    .filter(|&(idx, _)| idx != b - 1)
                    .map(|(_, &v)| if v > removed { v - 1 } else { v })
                    .collect();
                Pattern { values, barred: None }
            }
        }
    }

    /// Calls `visit` with the positions (0-based, increasing) of every
    /// occurrence of this pattern's unbarred form. Stops early when `visit`
    /// returns `false`; the return value reports whether the search ran to
    /// completion.
    fn for_each_occurrence(&self, text: &[usize], visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        fn rec(
            pat: &[usize],
            text: &[usize],
            start: usize,
            chosen: &mut Vec<usize>,
            visit: &mut dyn FnMut(&[usize]) -> bool,
        ) -> bool {
            let depth = chosen.len();
            if depth == pat.len() {
                return visit(chosen);
            }
            let remaining = pat.len() - depth;
            for pos in start..=text.len().saturating_sub(remaining) {
                let v = text[pos];
                let consistent = chosen
                    .iter()
                    .zip(pat)
                    .all(|(&q, &pv)| (text[q] < v) == (pv < pat[depth]));
                if consistent {
                    chosen.push(pos);
                    let go_on = rec(pat, text, pos + 1, chosen, visit);
                    chosen.pop();
                    if !go_on {
                        return false;
                    }
                }
            }
            true
        }
        if self.values.len() > text.len() {
            return true;
        }
        rec(&self.values, text, 0, &mut Vec::with_capacity(self.values.len()), visit)
    }

    /// Whether `p` contains this pattern, ignoring any bar.
    pub fn occurs_in(&self, p: &Permutation) -> bool {
        let plain = Pattern { values: self.values.clone(), barred: None };
        !plain.for_each_occurrence(p.values(), &mut |_| false)
    }

    pub fn avoided_by(&self, p: &Permutation) -> bool {
        match self.barred {
            None => !self.occurs_in(p),
            Some(b) => {
                let reduced = self.reduced();
                let text = p.values();
                let full = &self.values;
                let bar_value = full[b - 1];
                reduced.for_each_occurrence(text, &mut |occ| {
                    // candidate positions strictly between the neighbours of the bar
                    let lo = if b >= 2 { occ[b - 2] + 1 } else { 0 };
                    let hi = if b - 1 < occ.len() { occ[b - 1] } else { text.len() };
                    (lo..hi).any(|q| {
                        let v = text[q];
                        occ.iter().enumerate().all(|(idx, &pos)| {
                            let pat_idx = if idx < b - 1 { idx } else { idx + 1 };
                            (text[pos] < v) == (full[pat_idx] < bar_value)
                        })
                    })
                })
            }
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, v) in self.values.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            if self.barred == Some(idx + 1) {
                write!(f, "{v}\u{304}")?;
            } else {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl Permutation {
    pub fn contains(&self, pattern: &Pattern) -> bool {
        pattern.occurs_in(self)
    }

    pub fn avoids(&self, pattern: &Pattern) -> bool {
        pattern.avoided_by(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn occurrence_examples() {
        assert!(Pattern::p2413().occurs_in(&p("2 5 3 1 4")));
        assert!(!Pattern::p2413().occurs_in(&p("1 2 3")));
        assert!(Pattern::p3142().occurs_in(&p("4 1 3 5 2")));
        assert!(!Pattern::p2413().occurs_in(&p("4 1 3 5 2")));
    }

    #[test]
    fn barred_examples() {
        let bx = Pattern::baxter_left();
        assert!(bx.avoided_by(&p("2 5 3 1 4")));
        assert!(!bx.avoided_by(&p("2 4 1 3")));
        assert!(bx.avoided_by(&p("1")));
        assert_eq!(bx.reduced().values, vec![2, 4, 1, 3]);
        assert_eq!(Pattern::baxter_right().reduced().values, vec![3, 1, 4, 2]);
        assert_eq!(Pattern::hasse_crossing().reduced().values, vec![2, 1, 4, 3]);
    }

    #[test]
    fn bad_patterns() {
        assert_eq!(Pattern::barred(&[1, 2], 3), Err(PatternError::BarOutOfRange(3)));
        assert_eq!(Pattern::classical(&[1, 1]), Err(PatternError::NotAPermutation));
    }

    #[test]
    fn display_marks_bar() {
        assert_eq!(Pattern::p2413().to_string(), "2 4 1 3");
        assert!(Pattern::baxter_left().to_string().contains('\u{304}'));
    }
}
