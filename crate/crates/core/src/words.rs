//! Shortest words over a set of 3-cycles and their inverses, by breadth-first
//! search in the Cayley graph.
//!
//! A word `l₁ l₂ … lₖ` denotes the left-to-right product: apply `l₁` first.
//! Ties between equally short words go to the lexicographically least one,
//! with letters ordered `g₀, g₀⁻¹, g₁, g₁⁻¹, …`.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::perm::Perm;
use crate::report::{Check, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Letter {
        Letter { generator, inverse }
    }

    pub fn inverted(self) -> Letter {
        Letter::new(self.generator, !self.inverse)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordEntry {
    pub length: usize,
    pub word: Vec<Letter>,
}

pub struct WordTable {
    generators: Vec<Perm>,
    letters: Vec<(Letter, Perm)>,
    entries: HashMap<Perm, WordEntry>,
    order: Vec<Perm>,
}

impl WordTable {
    /// BFS from the identity; inverses of `generators` are added as letters.
    pub fn build(generators: &[Perm]) -> WordTable {
        assert!(!generators.is_empty(), "need at least one generator");
        let n = generators[0].degree();
        let letters: Vec<(Letter, Perm)> = generators
            .iter()
            .enumerate()
            .flat_map(|(i, g)| {
                [
                    (Letter::new(i, false), g.clone()),
                    (Letter::new(i, true), g.inverse()),
                ]
            })
            .collect();
        let identity = Perm::identity(n);
        let mut entries = HashMap::from([(
            identity.clone(),
            WordEntry {
                length: 0,
                word: Vec::new(),
            },
        )]);
        let mut order = vec![identity.clone()];
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            let base = entries[&x].clone();
            for (letter, perm) in &letters {
                let y = x.then(perm);
                if entries.contains_key(&y) {
                    continue;
                }
                let mut word = base.word.clone();
                word.push(*letter);
                entries.insert(
                    y.clone(),
                    WordEntry {
                        length: base.length + 1,
                        word,
                    },
                );
                order.push(y.clone());
                queue.push_back(y);
            }
        }
        WordTable {
            generators: generators.to_vec(),
            letters,
            entries,
            order,
        }
    }

    pub fn a5() -> WordTable {
        WordTable::build(&a5_generators())
    }

    pub fn a6() -> WordTable {
        WordTable::build(&a6_generators())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn get(&self, p: &Perm) -> Option<&WordEntry> {
        self.entries.get(p)
    }

    pub fn length(&self, p: &Perm) -> Option<usize> {
        self.entries.get(p).map(|e| e.length)
    }

    /// Elements in BFS discovery order (non-decreasing length).
    pub fn elements(&self) -> &[Perm] {
        &self.order
    }

    pub fn letter_perm(&self, letter: Letter) -> &Perm {
        let idx = 2 * letter.generator + usize::from(letter.inverse);
        &self.letters[idx].1
    }

    /// Left-to-right product of a word.
    pub fn evaluate(&self, word: &[Letter]) -> Perm {
        let n = self.generators[0].degree();
        word.iter()
            .fold(Perm::identity(n), |acc, &l| acc.then(self.letter_perm(l)))
    }

    /// Right-to-left product of a word (the last letter acts first).
    pub fn evaluate_right_to_left(&self, word: &[Letter]) -> Perm {
        let n = self.generators[0].degree();
        word.iter()
            .rev()
            .fold(Perm::identity(n), |acc, &l| acc.then(self.letter_perm(l)))
    }

    pub fn max_length(&self) -> usize {
        self.entries.values().map(|e| e.length).max().unwrap_or(0)
    }

    pub fn histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_length() + 1];
        for e in self.entries.values() {
            hist[e.length] += 1;
        }
        hist
    }

    /// Elements of maximal length, sorted by cycle notation.
    pub fn maximal(&self) -> Vec<Perm> {
        let max = self.max_length();
        let mut out: Vec<Perm> = self
            .entries
            .iter()
            .filter(|(_, e)| e.length == max)
            .map(|(p, _)| p.clone())
            .collect();
        out.sort();
        out
    }

    pub fn format_letter(&self, letter: Letter) -> String {
        let g = &self.generators[letter.generator];
        if letter.inverse {
            format!("{g}^-1")
        } else {
            g.to_string()
        }
    }

    pub fn format_word(&self, word: &[Letter]) -> String {
        word.iter()
            .map(|&l| self.format_letter(l))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn rows(&self) -> Vec<WordRow> {
        self.order
            .iter()
            .map(|p| {
                let e = &self.entries[p];
                WordRow {
                    element: p.to_string(),
                    length: e.length,
                    word: self.format_word(&e.word),
                }
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        for row in self.rows() {
            writer.serialize(row).expect("in-memory CSV write");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct WordRow {
    pub element: String,
    pub length: usize,
    pub word: String,
}

impl fmt::Debug for WordTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WordTable({} elements, max {})",
            self.len(),
            self.max_length()
        )
    }
}

fn cyc(text: &str, n: usize) -> Perm {
    Perm::parse_cycles(text, n).unwrap()
}

pub fn a5_generators() -> Vec<Perm> {
    vec![cyc("(1,2,3)", 5), cyc("(3,4,5)", 5)]
}

pub fn a6_generators() -> Vec<Perm> {
    vec![cyc("(1,2,3)", 6), cyc("(3,4,5)", 6), cyc("(5,6,1)", 6)]
}

/// `(3,4,5)⁻¹(1,2,3)(3,4,5)(1,2,3)⁻¹(3,4,5)⁻¹(1,2,3)` over the A5 letters.
pub fn a5_worst_word() -> Vec<Letter> {
    let a = Letter::new(0, false);
    let b = Letter::new(1, false);
    vec![b.inverted(), a, b, a.inverted(), b.inverted(), a]
}

/// `(1,2,3)(3,4,5)⁻¹(5,6,1)⁻¹(3,4,5)(1,2,3)⁻¹` over the A6 letters.
pub fn a6_example_word() -> Vec<Letter> {
    let a = Letter::new(0, false);
    let b = Letter::new(1, false);
    let c = Letter::new(2, false);
    vec![a, b.inverted(), c.inverted(), b, a.inverted()]
}

fn histogram_map(table: &WordTable) -> BTreeMap<usize, usize> {
    table.histogram().into_iter().enumerate().collect()
}

/// Checks a product identity under both composition orders and records which
/// one (if any) validates it.
fn product_checks(
    report: &mut Report,
    label: &str,
    table: &WordTable,
    word: &[Letter],
    target: &Perm,
) {
    let l2r = table.evaluate(word);
    let r2l = table.evaluate_right_to_left(word);
    report.push(Check::info(
        format!("{label} left-to-right product"),
        l2r.to_string(),
    ));
    report.push(Check::info(
        format!("{label} right-to-left product"),
        r2l.to_string(),
    ));
    let validating: Vec<&str> = [("left-to-right", &l2r), ("right-to-left", &r2l)]
        .iter()
        .filter(|(_, p)| *p == target)
        .map(|(name, _)| *name)
        .collect();
    report.push(Check::info(
        format!("{label} validating conventions"),
        &validating,
    ));
    report.push(Check::equal(
        format!("{label} product"),
        target.to_string(),
        if validating.is_empty() {
            l2r.to_string()
        } else {
            target.to_string()
        },
    ));
    report.push(Check::equal(
        format!("{label} word length is shortest"),
        table.length(target),
        Some(word.len()),
    ));
}

pub fn a5_report(table: &WordTable) -> Report {
    let mut report = Report::new("A5 words");
    let target = cyc("(1,2)(4,5)", 5);
    let maximal = table.maximal();
    report.push(Check::equal("A5 table size", 60, table.len()));
    report.push(Check::equal("A5 max length", 6, table.max_length()));
    report.push(Check::equal("A5 elements at max length", 1, maximal.len()));
    report.push(Check::equal(
        "A5 element at max length",
        vec![target.to_string()],
        maximal.iter().map(ToString::to_string).collect(),
    ));
    product_checks(
        &mut report,
        "A5 worst-case identity",
        table,
        &a5_worst_word(),
        &target,
    );
    report.push(Check::info("A5 length histogram", histogram_map(table)));
    report
}

pub fn a6_report(table: &WordTable) -> Report {
    let mut report = Report::new("A6 words");
    let target = cyc("(2,4,6)", 6);
    let maximal = table.maximal();
    report.push(Check::equal("A6 table size", 360, table.len()));
    report.push(Check::equal("A6 max length", 5, table.max_length()));
    report.push(Check::equal("A6 elements at max length", 46, maximal.len()));
    report.push(Check::holds(
        "(2,4,6) has max length",
        maximal.contains(&target),
    ));
    product_checks(
        &mut report,
        "A6 (2,4,6) identity",
        table,
        &a6_example_word(),
        &target,
    );
    report.push(Check::info("A6 length histogram", histogram_map(table)));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_sizes_and_identity() {
        let a5 = WordTable::a5();
        let a6 = WordTable::a6();
        assert_eq!(a5.len(), 60);
        assert_eq!(a6.len(), 360);
        assert_eq!(a5.length(&Perm::identity(5)), Some(0));
        assert_eq!(a6.length(&Perm::identity(6)), Some(0));
    }

    #[test]
    fn stored_words_evaluate_to_their_keys() {
        for table in [WordTable::a5(), WordTable::a6()] {
            for p in table.elements() {
                let e = table.get(p).unwrap();
                assert_eq!(&table.evaluate(&e.word), p);
                assert_eq!(e.word.len(), e.length);
            }
        }
    }

    #[test]
    fn tie_break_is_lexicographic() {
        // (1,2,3)^2 = (1,3,2) is one letter via the inverse; it must be stored
        // as the inverse letter rather than anything longer.
        let a5 = WordTable::a5();
        let e = a5.get(&cyc("(1,3,2)", 5)).unwrap();
        assert_eq!(e.word, vec![Letter::new(0, true)]);
        // Among shortest words, stored is least in letter order.
        for p in a5.elements() {
            let stored = &a5.get(p).unwrap().word;
            let len = stored.len();
            let mut all = vec![Vec::<Letter>::new()];
            for _ in 0..len {
                all = all
                    .into_iter()
                    .flat_map(|w| {
                        (0..2).flat_map(move |g| {
                            let w = w.clone();
                            [false, true].into_iter().map(move |inv| {
                                let mut v = w.clone();
                                v.push(Letter::new(g, inv));
                                v
                            })
                        })
                    })
                    .collect();
            }
            let best = all
                .into_iter()
                .filter(|w| &a5.evaluate(w) == p)
                .min()
                .unwrap();
            assert_eq!(&best, stored, "element {p}");
        }
    }

    #[test]
    fn reports() {
        let a5 = a5_report(&WordTable::a5());
        for claim in [
            "A5 max length",
            "A5 elements at max length",
            "A5 element at max length",
            "A5 worst-case identity product",
        ] {
            assert!(a5.get(claim).unwrap().pass, "{claim}");
        }
        let a6 = a6_report(&WordTable::a6());
        for claim in [
            "A6 max length",
            "A6 elements at max length",
            "(2,4,6) has max length",
        ] {
            assert!(a6.get(claim).unwrap().pass, "{claim}");
        }
    }

    #[test]
    fn csv_export() {
        let csv = WordTable::a5().to_csv();
        let mut reader = csv::Reader::from_reader(csv.as_bytes());
        let rows: Vec<WordRow> = reader.deserialize().map(Result::unwrap).collect();
        assert_eq!(rows.len(), 60);
        assert_eq!(rows[0].element, "()");
        assert_eq!(rows[0].length, 0);
    }
}
