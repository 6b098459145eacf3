//! Group elements of A(Γ) as words, and the piling machinery behind the word,
//! word-choice, geodesic-length and conjugacy problems.
//!
//! A piling has one stack per vertex. Pushing `x^ε` either cancels against an
//! `x^-ε` sitting on top of stack `x`, or adds `x^ε` to stack `x` and a tie
//! bead to the stack of every vertex that does not commute with `x`. Ties are
//! anonymous: when a letter cancels, every non-commuting stack loses its top
//! tie. The stacks left behind describe the reduced element, and reading
//! signed beads off the stack bottoms in vertex order yields the shortlex
//! normal form.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::SimplicialGraph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed token `{0}` (expected `<label>` or `<label>^-1`)")]
    MalformedToken(String),
    #[error("letter refers to vertex {index}, but the graph has {n} vertices")]
    OutOfRange { index: usize, n: usize },
    #[error("the promised word equals neither candidate")]
    PromiseViolated,
}

/// `+` sorts before `-`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator or its inverse. Ordered by vertex index, then sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub vertex: usize,
    pub sign: Sign,
}

impl Letter {
    pub fn pos(vertex: usize) -> Letter {
        Letter { vertex, sign: Sign::Pos }
    }

    pub fn neg(vertex: usize) -> Letter {
        Letter { vertex, sign: Sign::Neg }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            vertex: self.vertex,
            sign: self.sign.flip(),
        }
    }
}

/// A finite sequence of letters; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn letter(l: Letter) -> Word {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// `c · self · c⁻¹`
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    /// Exponent sum of each of the `n` generators.
    pub fn abelianization(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0; n];
        for l in &self.0 {
            v[l.vertex] += l.sign.value();
        }
        v
    }

    /// Parses whitespace-separated tokens `<label>` or `<label>^-1`.
    pub fn parse_with(
        text: &str,
        mut lookup: impl FnMut(&str) -> Option<usize>,
    ) -> Result<Word, WordError> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (label, sign) = match token.split_once('^') {
                None => (token, Sign::Pos),
                Some((label, "-1")) if !label.is_empty() => (label, Sign::Neg),
                Some(_) => return Err(WordError::MalformedToken(token.to_string())),
            };
            let vertex =
                lookup(label).ok_or_else(|| WordError::UnknownGenerator(label.to_string()))?;
            letters.push(Letter { vertex, sign });
        }
        Ok(Word(letters))
    }

    pub fn parse(g: &SimplicialGraph, text: &str) -> Result<Word, WordError> {
        Word::parse_with(text, |l| g.index_of(l))
    }

    /// Renders with labels supplied by `label`.
    pub fn format_with<'a, L: fmt::Display>(
        &'a self,
        label: impl Fn(usize) -> L + 'a,
    ) -> impl fmt::Display + 'a {
        WordDisplay { word: self, label }
    }

    pub fn to_text(&self, g: &SimplicialGraph) -> String {
        self.format_with(|v| g.label(v).into_owned()).to_string()
    }

    pub fn check(&self, g: &SimplicialGraph) -> Result<(), WordError> {
        let n = g.vertex_count();
        match self.0.iter().find(|l| l.vertex >= n) {
            Some(l) => Err(WordError::OutOfRange { index: l.vertex, n }),
            None => Ok(()),
        }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

struct WordDisplay<'a, F> {
    word: &'a Word,
    label: F,
}

impl<L: fmt::Display, F: Fn(usize) -> L> fmt::Display for WordDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", (self.label)(l.vertex))?;
            if l.sign == Sign::Neg {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bead {
    Pos,
    Neg,
    Tie,
}

impl Bead {
    fn signed(sign: Sign) -> Bead {
        match sign {
            Sign::Pos => Bead::Pos,
            Sign::Neg => Bead::Neg,
        }
    }

    fn sign(self) -> Option<Sign> {
        match self {
            Bead::Pos => Some(Sign::Pos),
            Bead::Neg => Some(Sign::Neg),
            Bead::Tie => None,
        }
    }
}

/// The group A(Γ) for a fixed graph, with the non-commuting neighbourhoods
/// precomputed so that repeated piling operations stay cheap.
#[derive(Debug, Clone)]
pub struct ArtinGroup<'g> {
    graph: &'g SimplicialGraph,
    blocking: Vec<Vec<usize>>,
}

impl<'g> ArtinGroup<'g> {
    pub fn new(graph: &'g SimplicialGraph) -> Self {
        let blocking = (0..graph.vertex_count())
            .map(|v| graph.non_neighbors(v).collect())
            .collect();
        ArtinGroup { graph, blocking }
    }

    pub fn graph(&self) -> &'g SimplicialGraph {
        self.graph
    }

    pub fn rank(&self) -> usize {
        self.blocking.len()
    }

    pub fn empty_piling(&self) -> Piling<'_> {
        Piling {
            blocking: &self.blocking,
            stacks: vec![Vec::new(); self.rank()],
        }
    }

    pub fn push_word(&self, w: &Word) -> Result<Piling<'_>, WordError> {
        w.check(self.graph)?;
        let mut p = self.empty_piling();
        for &l in w.letters() {
            p.push(l);
        }
        Ok(p)
    }

    fn piling(&self, w: &Word) -> Piling<'_> {
        self.push_word(w)
            .unwrap_or_else(|e| panic!("word does not belong to this group: {e}"))
    }

    /// Shortlex-least geodesic representative of `w`.
    ///
    /// Panics if `w` mentions a vertex outside the graph.
    pub fn normal_form(&self, w: &Word) -> Word {
        self.piling(w).read()
    }

    pub fn is_trivial(&self, w: &Word) -> bool {
        self.piling(w).is_empty()
    }

    pub fn words_equal(&self, u: &Word, w: &Word) -> bool {
        self.is_trivial(&u.concat(&w.inverse()))
    }

    pub fn geodesic_length(&self, w: &Word) -> usize {
        self.piling(w).bead_count()
    }

    /// Decides which of `a`, `b` the word `c` equals, given the promise that it
    /// equals one of them.
    pub fn word_choice(&self, a: &Word, b: &Word, c: &Word) -> Result<Choice, WordError> {
        if self.words_equal(c, a) {
            Ok(Choice::A)
        } else if self.words_equal(c, b) {
            Ok(Choice::B)
        } else {
            Err(WordError::PromiseViolated)
        }
    }

    /// Returns `(r, c)` with `r = c·w·c⁻¹` cyclically reduced and in normal form.
    pub fn cyclically_reduce(&self, w: &Word) -> (Word, Word) {
        let mut current = self.normal_form(w);
        let mut conjugator = Word::identity();
        'outer: loop {
            let firsts = self.piling(&current).first_letters();
            for x in firsts {
                // x⁻¹ · current · x
                let candidate = self.normal_form(&current.conjugate_by(&Word::letter(x.inverse())));
                if candidate.len() < current.len() {
                    current = candidate;
                    conjugator = Word::letter(x.inverse()).concat(&conjugator);
                    continue 'outer;
                }
            }
            return (current, self.normal_form(&conjugator));
        }
    }

    pub fn cyclic_reduction(&self, w: &Word) -> Word {
        self.cyclically_reduce(w).0
    }

    /// Some `c` with `c·u·c⁻¹ = w`, if `u` and `w` are conjugate.
    ///
    /// Both words are cyclically reduced; the conjugacy class of a cyclically
    /// reduced element is then explored by rotating first letters of its
    /// geodesic representatives, keyed on normal forms.
    pub fn conjugator(&self, u: &Word, w: &Word) -> Option<Word> {
        let n = self.rank();
        let (ru, cu) = self.cyclically_reduce(u);
        let (rw, cw) = self.cyclically_reduce(w);
        if ru.len() != rw.len() || ru.abelianization(n) != rw.abelianization(n) {
            return None;
        }
        // ru = cu·u·cu⁻¹, rw = cw·w·cw⁻¹; if d·ru·d⁻¹ = rw then
        // w = (cw⁻¹·d·cu)·u·(cw⁻¹·d·cu)⁻¹.
        let finish = |d: &Word| self.normal_form(&cw.inverse().concat(d).concat(&cu));
        if ru == rw {
            return Some(finish(&Word::identity()));
        }
        let mut seen: HashMap<Word, Word> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(ru.clone(), Word::identity());
        queue.push_back(ru);
        while let Some(current) = queue.pop_front() {
            let d = seen[&current].clone();
            for x in self.piling(&current).first_letters() {
                let step = Word::letter(x.inverse());
                let next = self.normal_form(&current.conjugate_by(&step));
                if next.len() != current.len() || seen.contains_key(&next) {
                    continue;
                }
                let d_next = self.normal_form(&step.concat(&d));
                if next == rw {
                    return Some(finish(&d_next));
                }
                seen.insert(next.clone(), d_next);
                queue.push_back(next);
            }
        }
        None
    }

    pub fn are_conjugate(&self, u: &Word, w: &Word) -> bool {
        self.conjugator(u, w).is_some()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Choice {
    A,
    B,
}

/// Per-vertex bead stacks for one word. Built by [`ArtinGroup::push_word`].
#[derive(Debug, Clone)]
pub struct Piling<'a> {
    blocking: &'a [Vec<usize>],
    stacks: Vec<Vec<Bead>>,
}

impl Piling<'_> {
    pub fn push(&mut self, letter: Letter) {
        let x = letter.vertex;
        if self.stacks[x].last() == Some(&Bead::signed(letter.sign.flip())) {
            self.stacks[x].pop();
            for &y in &self.blocking[x] {
                let top = self.stacks[y].pop();
                debug_assert_eq!(top, Some(Bead::Tie));
            }
        } else {
            self.stacks[x].push(Bead::signed(letter.sign));
            for &y in &self.blocking[x] {
                self.stacks[y].push(Bead::Tie);
            }
        }
    }

    pub fn stack(&self, v: usize) -> &[Bead] {
        &self.stacks[v]
    }

    pub fn is_empty(&self) -> bool {
        self.stacks.iter().all(Vec::is_empty)
    }

    /// Number of signed beads, i.e. the geodesic length of the element.
    pub fn bead_count(&self) -> usize {
        self.stacks
            .iter()
            .flatten()
            .filter(|b| **b != Bead::Tie)
            .count()
    }

    /// Letters that can begin a geodesic representative, in letter order.
    pub fn first_letters(&self) -> Vec<Letter> {
        self.stacks
            .iter()
            .enumerate()
            .filter_map(|(v, s)| {
                s.first()
                    .and_then(|b| b.sign())
                    .map(|sign| Letter { vertex: v, sign })
            })
            .collect()
    }

    /// Letters that can end a geodesic representative, in letter order.
    pub fn last_letters(&self) -> Vec<Letter> {
        self.stacks
            .iter()
            .enumerate()
            .filter_map(|(v, s)| {
                s.last()
                    .and_then(|b| b.sign())
                    .map(|sign| Letter { vertex: v, sign })
            })
            .collect()
    }

    /// Reads the shortlex normal form: repeatedly take the least vertex whose
    /// stack bottom is a signed bead, removing it and the ties it placed.
    pub fn read(&self) -> Word {
        let n = self.stacks.len();
        let mut bottom = vec![0usize; n];
        let mut out = Vec::with_capacity(self.bead_count());
        loop {
            let next = (0..n).find(|&v| {
                self.stacks[v]
                    .get(bottom[v])
                    .is_some_and(|b| *b != Bead::Tie)
            });
            let Some(v) = next else { break };
            let sign = self.stacks[v][bottom[v]].sign().expect("signed bead");
            out.push(Letter { vertex: v, sign });
            bottom[v] += 1;
            for &y in &self.blocking[v] {
                debug_assert_eq!(self.stacks[y].get(bottom[y]), Some(&Bead::Tie));
                bottom[y] += 1;
            }
        }
        debug_assert!((0..n).all(|v| bottom[v] == self.stacks[v].len()));
        Word(out)
    }
}

/// Pushes the letters of `w` into an empty piling.
pub fn push_word<'a>(group: &'a ArtinGroup<'_>, w: &Word) -> Result<Piling<'a>, WordError> {
    group.push_word(w)
}

pub fn normal_form(g: &SimplicialGraph, w: &Word) -> Word {
    ArtinGroup::new(g).normal_form(w)
}

pub fn is_trivial(g: &SimplicialGraph, w: &Word) -> bool {
    ArtinGroup::new(g).is_trivial(w)
}

pub fn words_equal(g: &SimplicialGraph, u: &Word, w: &Word) -> bool {
    ArtinGroup::new(g).words_equal(u, w)
}

pub fn word_choice(g: &SimplicialGraph, a: &Word, b: &Word, c: &Word) -> Result<Choice, WordError> {
    ArtinGroup::new(g).word_choice(a, b, c)
}

pub fn geodesic_length(g: &SimplicialGraph, w: &Word) -> usize {
    ArtinGroup::new(g).geodesic_length(w)
}

pub fn cyclic_reduction(g: &SimplicialGraph, w: &Word) -> Word {
    ArtinGroup::new(g).cyclic_reduction(w)
}

pub fn are_conjugate(g: &SimplicialGraph, u: &Word, w: &Word) -> bool {
    ArtinGroup::new(g).are_conjugate(u, w)
}
