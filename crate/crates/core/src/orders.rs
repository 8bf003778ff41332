//! Comparison oracles for the countable orders and relations in scope.
//!
//! Every oracle reports a four-valued [`Comparison`] so posets and linear
//! orders share one interface. `Less` always means strictly below; the
//! strict/non-strict distinction only matters in [`OrderOracle::related`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::rational::ExactRational;
use crate::word::{BitWord, Word};
use crate::ParseError;

/// Largest support [`check_axioms`] accepts; the check is cubic.
pub const MAX_AXIOM_SUPPORT: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    Nat,
    Int,
    Rational,
    WordNat,
    WordBit,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Nat => "nat",
            Tag::Int => "int",
            Tag::Rational => "rational",
            Tag::WordNat => "word",
            Tag::WordBit => "bits",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Tag {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "nat" => Tag::Nat,
            "int" => Tag::Int,
            "rational" => Tag::Rational,
            "word" => Tag::WordNat,
            "bits" => Tag::WordBit,
            _ => return Err(ParseError::new(s, "expected one of nat, int, rational, word, bits")),
        })
    }
}

/// An element of one of the countable domains.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Nat(u64),
    Int(i64),
    Rational(ExactRational),
    WordNat(Word),
    WordBit(BitWord),
}

impl Element {
    pub fn tag(&self) -> Tag {
        match self {
            Element::Nat(_) => Tag::Nat,
            Element::Int(_) => Tag::Int,
            Element::Rational(_) => Tag::Rational,
            Element::WordNat(_) => Tag::WordNat,
            Element::WordBit(_) => Tag::WordBit,
        }
    }

    /// Reads a token in the textual syntax of `tag`.
    pub fn parse(tag: Tag, token: &str) -> Result<Element, ParseError> {
        Ok(match tag {
            Tag::Nat => Element::Nat(
                token
                    .parse()
                    .map_err(|_| ParseError::new(token, "expected a natural number"))?,
            ),
            Tag::Int => Element::Int(
                token
                    .parse()
                    .map_err(|_| ParseError::new(token, "expected an integer"))?,
            ),
            Tag::Rational => Element::Rational(token.parse()?),
            Tag::WordNat => Element::WordNat(token.parse()?),
            Tag::WordBit => Element::WordBit(token.parse()?),
        })
    }

    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Element::WordNat(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_bits(&self) -> Option<&BitWord> {
        match self {
            Element::WordBit(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<&ExactRational> {
        match self {
            Element::Rational(r) => Some(r),
            _ => None,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(n) => write!(f, "{n}"),
            Element::Int(n) => write!(f, "{n}"),
            Element::Rational(r) => write!(f, "{r}"),
            Element::WordNat(w) => write!(f, "{w}"),
            Element::WordBit(w) => write!(f, "{w}"),
        }
    }
}

impl From<Word> for Element {
    fn from(w: Word) -> Self {
        Element::WordNat(w)
    }
}

impl From<BitWord> for Element {
    fn from(w: BitWord) -> Self {
        Element::WordBit(w)
    }
}

impl From<ExactRational> for Element {
    fn from(r: ExactRational) -> Self {
        Element::Rational(r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Comparison {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl Comparison {
    pub fn reverse(self) -> Comparison {
        match self {
            Comparison::Less => Comparison::Greater,
            Comparison::Greater => Comparison::Less,
            other => other,
        }
    }

    fn from_ordering(o: Ordering) -> Comparison {
        match o {
            Ordering::Less => Comparison::Less,
            Ordering::Equal => Comparison::Equal,
            Ordering::Greater => Comparison::Greater,
        }
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Less => "LT",
            Comparison::Equal => "EQ",
            Comparison::Greater => "GT",
            Comparison::Incomparable => "INCOMPARABLE",
        })
    }
}

/// The relations the crate knows how to compare.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// Divisibility on the positive naturals.
    Divides,
    /// Equality; works over any domain.
    Delta,
    /// The usual order on ℤ.
    IntLess,
    /// Prefix order on ω-words.
    SubsetWordNat,
    /// Prefix order on bit-words.
    SubsetWordBit,
    /// Lexicographic order on ω-words with the digit order reversed:
    /// prefixes come first, and at the first disagreement the larger
    /// digit is the smaller word.
    ReversedLex,
    /// Lexicographic order on bit-words, prefixes first.
    LexBit,
    /// The usual order on ℚ.
    RatLess,
}

impl OrderKind {
    pub const ALL: [OrderKind; 8] = [
        OrderKind::Divides,
        OrderKind::Delta,
        OrderKind::IntLess,
        OrderKind::SubsetWordNat,
        OrderKind::SubsetWordBit,
        OrderKind::ReversedLex,
        OrderKind::LexBit,
        OrderKind::RatLess,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Divides => "divides",
            OrderKind::Delta => "delta",
            OrderKind::IntLess => "int",
            OrderKind::SubsetWordNat => "subset",
            OrderKind::SubsetWordBit => "subset-bit",
            OrderKind::ReversedLex => "rl",
            OrderKind::LexBit => "lex",
            OrderKind::RatLess => "rational",
        }
    }

    pub fn is_linear(self) -> bool {
        matches!(
            self,
            OrderKind::IntLess | OrderKind::ReversedLex | OrderKind::LexBit | OrderKind::RatLess
        )
    }

    /// Domain of the oracle; `Delta` defaults to the naturals.
    pub fn default_domain(self) -> Tag {
        match self {
            OrderKind::Divides | OrderKind::Delta => Tag::Nat,
            OrderKind::IntLess => Tag::Int,
            OrderKind::SubsetWordNat | OrderKind::ReversedLex => Tag::WordNat,
            OrderKind::SubsetWordBit | OrderKind::LexBit => Tag::WordBit,
            OrderKind::RatLess => Tag::Rational,
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OrderKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                ParseError::new(
                    s,
                    "expected one of divides, delta, int, subset, subset-bit, rl, lex, rational",
                )
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strictness {
    Strict,
    NonStrict,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("{oracle} compares {expected} elements, got a {found} element")]
    TagMismatch {
        oracle: &'static str,
        expected: Tag,
        found: Tag,
    },
    #[error("0 is not in the domain of divisibility (positive naturals only)")]
    ZeroDivisor,
    #[error("axiom check support has {0} elements, limit is {MAX_AXIOM_SUPPORT}")]
    SupportTooLarge(usize),
}

/// A named relation with a fixed strictness and element domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OrderOracle {
    kind: OrderKind,
    strictness: Strictness,
    domain: Tag,
}

impl OrderOracle {
    pub fn new(kind: OrderKind, strictness: Strictness) -> Self {
        OrderOracle {
            kind,
            strictness,
            domain: kind.default_domain(),
        }
    }

    pub fn strict(kind: OrderKind) -> Self {
        Self::new(kind, Strictness::Strict)
    }

    pub fn non_strict(kind: OrderKind) -> Self {
        Self::new(kind, Strictness::NonStrict)
    }

    /// Equality over an arbitrary domain.
    pub fn delta(domain: Tag, strictness: Strictness) -> Self {
        OrderOracle {
            kind: OrderKind::Delta,
            strictness,
            domain,
        }
    }

    /// Same relation with the other strictness.
    pub fn with_strictness(self, strictness: Strictness) -> Self {
        OrderOracle { strictness, ..self }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn strictness(&self) -> Strictness {
        self.strictness
    }

    pub fn is_strict(&self) -> bool {
        self.strictness == Strictness::Strict
    }

    pub fn domain(&self) -> Tag {
        self.domain
    }

    pub fn is_linear(&self) -> bool {
        self.kind.is_linear()
    }

    /// Reads a domain element, rejecting values outside the domain
    /// (0 under divisibility).
    pub fn parse_element(&self, token: &str) -> Result<Element, ParseError> {
        let e = Element::parse(self.domain, token)?;
        if self.kind == OrderKind::Divides && e == Element::Nat(0) {
            return Err(ParseError::new(token, "divisibility is over the positive naturals"));
        }
        Ok(e)
    }

    pub fn check_domain(&self, e: &Element) -> Result<(), OrderError> {
        if e.tag() != self.domain {
            return Err(OrderError::TagMismatch {
                oracle: self.kind.name(),
                expected: self.domain,
                found: e.tag(),
            });
        }
        if self.kind == OrderKind::Divides && *e == Element::Nat(0) {
            return Err(OrderError::ZeroDivisor);
        }
        Ok(())
    }

    pub fn compare(&self, a: &Element, b: &Element) -> Result<Comparison, OrderError> {
        self.check_domain(a)?;
        self.check_domain(b)?;
        Ok(self.compare_unchecked(a, b))
    }

    /// `compare` for elements already known to lie in the domain.
    pub(crate) fn compare_unchecked(&self, a: &Element, b: &Element) -> Comparison {
        match (self.kind, a, b) {
            (OrderKind::Delta, a, b) => {
                if a == b {
                    Comparison::Equal
                } else {
                    Comparison::Incomparable
                }
            }
            (OrderKind::Divides, Element::Nat(x), Element::Nat(y)) => divides(*x, *y),
            (OrderKind::IntLess, Element::Int(x), Element::Int(y)) => Comparison::from_ordering(x.cmp(y)),
            (OrderKind::RatLess, Element::Rational(x), Element::Rational(y)) => {
                Comparison::from_ordering(x.cmp(y))
            }
            (OrderKind::SubsetWordNat, Element::WordNat(x), Element::WordNat(y)) => {
                prefix_order(x.entries(), y.entries())
            }
            (OrderKind::SubsetWordBit, Element::WordBit(x), Element::WordBit(y)) => {
                prefix_order(x.bits(), y.bits())
            }
            (OrderKind::ReversedLex, Element::WordNat(x), Element::WordNat(y)) => {
                Comparison::from_ordering(reversed_lex(x, y))
            }
            (OrderKind::LexBit, Element::WordBit(x), Element::WordBit(y)) => {
                Comparison::from_ordering(x.bits().cmp(y.bits()))
            }
            _ => unreachable!("elements outside the oracle domain"),
        }
    }

    /// `a R b`: strictly below, or equal when the oracle is non-strict.
    pub fn related(&self, a: &Element, b: &Element) -> Result<bool, OrderError> {
        self.check_domain(a)?;
        self.check_domain(b)?;
        Ok(self.related_unchecked(a, b))
    }

    pub(crate) fn related_unchecked(&self, a: &Element, b: &Element) -> bool {
        match self.compare_unchecked(a, b) {
            Comparison::Less => true,
            Comparison::Equal => self.strictness == Strictness::NonStrict,
            _ => false,
        }
    }
}

impl fmt::Display for OrderOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.strictness {
            Strictness::Strict => "strict",
            Strictness::NonStrict => "non-strict",
        };
        if self.kind == OrderKind::Delta {
            write!(f, "delta[{}] ({s})", self.domain)
        } else {
            write!(f, "{} ({s})", self.kind)
        }
    }
}

fn divides(x: u64, y: u64) -> Comparison {
    if x == y {
        Comparison::Equal
    } else if y.is_multiple_of(x) {
        Comparison::Less
    } else if x.is_multiple_of(y) {
        Comparison::Greater
    } else {
        Comparison::Incomparable
    }
}

fn prefix_order<T: PartialEq>(x: &[T], y: &[T]) -> Comparison {
    if x == y {
        Comparison::Equal
    } else if y.starts_with(x) {
        Comparison::Less
    } else if x.starts_with(y) {
        Comparison::Greater
    } else {
        Comparison::Incomparable
    }
}

/// Prefixes first; at the first disagreement the larger digit wins the
/// smaller place.
pub fn reversed_lex(x: &Word, y: &Word) -> Ordering {
    for (a, b) in x.entries().iter().zip(y.entries()) {
        if a != b {
            return b.cmp(a);
        }
    }
    x.len().cmp(&y.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `compare(a, a) = EQ`.
    Reflexivity,
    /// `compare(a, b)` and `compare(b, a)` are mirror images.
    Duality,
    /// `a ≤ b ∧ b ≤ a ⇒ a = b`, and `EQ` only for equal elements.
    Antisymmetry,
    Transitivity,
    /// Every pair is comparable.
    Totality,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Reflexivity => "reflexivity",
            Axiom::Duality => "duality",
            Axiom::Antisymmetry => "antisymmetry",
            Axiom::Transitivity => "transitivity",
            Axiom::Totality => "totality",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub elements: Vec<Element>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated by (", self.axiom)?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn count(&self, axiom: Axiom) -> usize {
        self.violations.iter().filter(|v| v.axiom == axiom).count()
    }
}

/// Checks the axioms the oracle claims on a finite support: partial-order
/// axioms of the reflexive closure always, totality for linear oracles.
pub fn check_axioms(o: &OrderOracle, support: &[Element]) -> Result<AxiomReport, OrderError> {
    check_axioms_with(o, support, o.is_linear())
}

/// As [`check_axioms`], with totality checked whenever `require_total`.
pub fn check_axioms_with(
    o: &OrderOracle,
    support: &[Element],
    require_total: bool,
) -> Result<AxiomReport, OrderError> {
    if support.len() > MAX_AXIOM_SUPPORT {
        return Err(OrderError::SupportTooLarge(support.len()));
    }
    let n = support.len();
    let mut table = vec![Comparison::Incomparable; n * n];
    for (i, a) in support.iter().enumerate() {
        for (j, b) in support.iter().enumerate() {
            table[i * n + j] = o.compare(a, b)?;
        }
    }
    let cmp = |i: usize, j: usize| table[i * n + j];
    let le = |i: usize, j: usize| matches!(cmp(i, j), Comparison::Less | Comparison::Equal);

    let mut violations = Vec::new();
    let mut push = |axiom, idx: &[usize]| {
        violations.push(Violation {
            axiom,
            elements: idx.iter().map(|&i| support[i].clone()).collect(),
        })
    };

    for i in 0..n {
        if cmp(i, i) != Comparison::Equal {
            push(Axiom::Reflexivity, &[i]);
        }
        for j in (i + 1)..n {
            if cmp(i, j) != cmp(j, i).reverse() {
                push(Axiom::Duality, &[i, j]);
            }
            let equal = support[i] == support[j];
            if (le(i, j) && le(j, i) && !equal) || (cmp(i, j) == Comparison::Equal && !equal) {
                push(Axiom::Antisymmetry, &[i, j]);
            }
            if require_total && cmp(i, j) == Comparison::Incomparable {
                push(Axiom::Totality, &[i, j]);
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !le(i, j) {
                continue;
            }
            for k in 0..n {
                if le(j, k) && !le(i, k) {
                    push(Axiom::Transitivity, &[i, j, k]);
                }
            }
        }
    }
    Ok(AxiomReport { violations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Element {
        Element::WordNat(s.parse().unwrap())
    }

    fn b(s: &str) -> Element {
        Element::WordBit(s.parse().unwrap())
    }

    /// All ω-words with length ≤ `max_len` and entries ≤ `max_entry`.
    fn words(max_len: usize, max_entry: u64) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for x in 0..=max_entry {
                    next.push(p.child(x));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    /// Direct transcription of the defining formula:
    /// x ≤ y iff ∃n (x = y↾n ∨ (x↾n = y↾n ∧ x(n) > y(n))).
    fn rl_le_by_definition(x: &Word, y: &Word) -> bool {
        let (xs, ys) = (x.entries(), y.entries());
        (0..=xs.len().max(ys.len())).any(|n| {
            let prefix = n <= ys.len() && xs == &ys[..n];
            let branch = n < xs.len() && n < ys.len() && xs[..n] == ys[..n] && xs[n] > ys[n];
            prefix || branch
        })
    }

    #[test]
    fn reversed_lex_examples() {
        let rl = OrderOracle::non_strict(OrderKind::ReversedLex);
        assert_eq!(rl.compare(&w("e"), &w("5")).unwrap(), Comparison::Less);
        assert_eq!(rl.compare(&w("0"), &w("1")).unwrap(), Comparison::Greater);
        assert_eq!(rl.compare(&w("0"), &w("1.0")).unwrap(), Comparison::Greater);
        assert_eq!(rl.compare(&w("1.0"), &w("1.1.0")).unwrap(), Comparison::Greater);
        assert_eq!(rl.compare(&w("2.3"), &w("2.3")).unwrap(), Comparison::Equal);
    }

    #[test]
    fn reversed_lex_matches_definition() {
        let rl = OrderOracle::non_strict(OrderKind::ReversedLex);
        let ws = words(2, 2);
        for x in &ws {
            for y in &ws {
                let c = rl.compare(&x.clone().into(), &y.clone().into()).unwrap();
                let le = matches!(c, Comparison::Less | Comparison::Equal);
                assert_eq!(le, rl_le_by_definition(x, y), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn divides_and_delta() {
        let d = OrderOracle::strict(OrderKind::Divides);
        assert_eq!(d.compare(&Element::Nat(3), &Element::Nat(6)).unwrap(), Comparison::Less);
        assert_eq!(d.compare(&Element::Nat(4), &Element::Nat(6)).unwrap(), Comparison::Incomparable);
        assert_eq!(d.compare(&Element::Nat(0), &Element::Nat(6)), Err(OrderError::ZeroDivisor));
        assert!(d.parse_element("0").is_err());

        let delta = OrderOracle::non_strict(OrderKind::Delta);
        assert!(delta.related(&Element::Nat(4), &Element::Nat(4)).unwrap());
        assert!(!delta.related(&Element::Nat(4), &Element::Nat(5)).unwrap());
        let delta_words = OrderOracle::delta(Tag::WordNat, Strictness::NonStrict);
        assert!(delta_words.related(&w("1.2"), &w("1.2")).unwrap());
    }

    #[test]
    fn related_respects_strictness() {
        let sub = OrderOracle::strict(OrderKind::SubsetWordNat);
        assert!(!sub.related(&w("1.1.0"), &w("1.1")).unwrap());
        assert!(sub.related(&w("1.1"), &w("1.1.0")).unwrap());
        assert!(!sub.related(&w("1.1"), &w("1.1")).unwrap());
        assert!(sub.with_strictness(Strictness::NonStrict).related(&w("1.1"), &w("1.1")).unwrap());
    }

    #[test]
    fn tag_mismatch_is_an_error() {
        let rl = OrderOracle::strict(OrderKind::ReversedLex);
        let err = rl.compare(&Element::Nat(1), &w("e")).unwrap_err();
        assert!(matches!(err, OrderError::TagMismatch { found: Tag::Nat, .. }));
    }

    #[test]
    fn lex_bit_prefix_smaller() {
        let lex = OrderOracle::strict(OrderKind::LexBit);
        assert_eq!(lex.compare(&b("1"), &b("101")).unwrap(), Comparison::Less);
        assert_eq!(lex.compare(&b("101"), &b("11")).unwrap(), Comparison::Less);
        assert_eq!(lex.compare(&b("e"), &b("0")).unwrap(), Comparison::Less);
        assert_eq!(lex.compare(&b("01"), &b("0")).unwrap(), Comparison::Greater);
    }

    #[test]
    fn axioms_reversed_lex_exhaustive() {
        let support: Vec<Element> = words(3, 3).into_iter().map(Element::from).collect();
        assert_eq!(support.len(), 85);
        let report = check_axioms(&OrderOracle::strict(OrderKind::ReversedLex), &support).unwrap();
        assert!(report.is_empty(), "{:?}", report.violations.first());
    }

    #[test]
    fn axioms_subset_bit_totality() {
        let support: Vec<Element> = ["e", "0", "1", "01"].into_iter().map(b).collect();
        let o = OrderOracle::non_strict(OrderKind::SubsetWordBit);
        assert!(check_axioms(&o, &support).unwrap().is_empty());
        let report = check_axioms_with(&o, &support, true).unwrap();
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::Totality && v.elements == [b("0"), b("1")]));
        assert_eq!(report.violations.len(), report.count(Axiom::Totality));
        assert_eq!(report.violations[0].to_string(), "totality violated by (0, 1)");
    }

    #[test]
    fn axioms_divides_one_to_twenty() {
        let support: Vec<Element> = (1..=20).map(Element::Nat).collect();
        let o = OrderOracle::non_strict(OrderKind::Divides);
        assert!(check_axioms(&o, &support).unwrap().is_empty());
    }

    #[test]
    fn rational_equality_is_structural() {
        let support: Vec<Element> = ["1/2", "2/4", "3"]
            .into_iter()
            .map(|t| Element::parse(Tag::Rational, t).unwrap())
            .collect();
        let o = OrderOracle::non_strict(OrderKind::RatLess);
        assert!(check_axioms(&o, &support).unwrap().is_empty());
    }

    #[test]
    fn support_limit() {
        let support: Vec<Element> = (1..=(MAX_AXIOM_SUPPORT as u64 + 1)).map(Element::Nat).collect();
        let o = OrderOracle::non_strict(OrderKind::Divides);
        assert!(matches!(check_axioms(&o, &support), Err(OrderError::SupportTooLarge(_))));
    }

    #[test]
    fn names_round_trip() {
        for k in OrderKind::ALL {
            assert_eq!(k.name().parse::<OrderKind>().unwrap(), k);
        }
        assert!("foo".parse::<OrderKind>().is_err());
    }
}
