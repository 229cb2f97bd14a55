//! Concrete finite groups: multiplication table, inverses, canonical words.
//!
//! `enumerate_group` runs coset enumeration over the trivial subgroup and
//! renumbers the cosets by shortlex BFS over `a < b < a⁻¹ < b⁻¹` starting at
//! the identity, so element 0 is always the identity and output is
//! deterministic for fixed input text.

use crate::presentation::Presentation;
use crate::todd_coxeter::{self, EnumerationError};
use crate::word::{Letter, Word};
use serde_json::json;

/// Index of a group element in the canonical ordering.
pub type Element = usize;

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    /// Row-major `order × order` multiplication table.
    mul: Vec<Element>,
    inv: Vec<Element>,
    a: Element,
    b: Element,
    /// Shortlex normal form over `a < b < a⁻¹ < b⁻¹`, one per element.
    normal_forms: Vec<Word>,
    /// Shortlex-minimal positive word (letters `a`, `b` only), one per element.
    positive_words: Vec<Word>,
    /// Display names: run-length rendering of the positive word, identity = "1".
    names: Vec<String>,
}

impl Group {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        0
    }

    pub fn a(&self) -> Element {
        self.a
    }

    pub fn b(&self) -> Element {
        self.b
    }

    pub fn mul(&self, x: Element, y: Element) -> Element {
        self.mul[x * self.order + y]
    }

    pub fn inv(&self, x: Element) -> Element {
        self.inv[x]
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.order
    }

    pub fn normal_form(&self, x: Element) -> &Word {
        &self.normal_forms[x]
    }

    /// Shortlex-minimal word in the positive generators only.
    pub fn positive_word(&self, x: Element) -> &Word {
        &self.positive_words[x]
    }

    pub fn name(&self, x: Element) -> &str {
        &self.names[x]
    }

    /// Evaluates a word from the identity; inverse letters go through `inv`.
    pub fn eval_word(&self, word: &Word) -> Element {
        let mut cur = self.identity();
        for &l in word.letters() {
            cur = self.apply_letter(cur, l);
        }
        cur
    }

    /// Right multiplication `x · l` for a single letter.
    pub fn apply_letter(&self, x: Element, l: Letter) -> Element {
        match l {
            Letter::A => self.mul(x, self.a),
            Letter::B => self.mul(x, self.b),
            Letter::AInv => self.mul(x, self.inv[self.a]),
            Letter::BInv => self.mul(x, self.inv[self.b]),
        }
    }

    /// Least n ≥ 1 with xⁿ = 1.
    pub fn element_order(&self, x: Element) -> usize {
        let mut cur = x;
        let mut n = 1;
        while cur != self.identity() {
            cur = self.mul(cur, x);
            n += 1;
        }
        n
    }

    /// Closure of `gens` ∪ {identity} under multiplication (and hence, the
    /// group being finite, under inverses). Returned sorted.
    pub fn generated_subgroup(&self, gens: &[Element]) -> Vec<Element> {
        let mut seen = vec![false; self.order];
        seen[self.identity()] = true;
        let mut queue: Vec<Element> = vec![self.identity()];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        let mut result: Vec<Element> = seen
            .iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| i)
            .collect();
        result.sort_unstable();
        result
    }

    pub fn is_abelian(&self) -> bool {
        // generated by a and b, so it suffices to check that they commute
        self.mul(self.a, self.b) == self.mul(self.b, self.a)
    }

    /// JSON dump of the full table data. The identity's name is the empty
    /// string here; exports elsewhere render it as "1".
    pub fn dump_json(&self) -> serde_json::Value {
        let mul: Vec<Vec<Element>> = (0..self.order)
            .map(|x| (0..self.order).map(|y| self.mul(x, y)).collect())
            .collect();
        let names: Vec<&str> = (0..self.order)
            .map(|x| if x == 0 { "" } else { self.name(x) })
            .collect();
        json!({
            "order": self.order,
            "a": self.a,
            "b": self.b,
            "mul": mul,
            "inv": self.inv,
            "names": names,
        })
    }
}

/// Enumerates the finite group presented by `p`, or reports that the coset
/// limit was exceeded (the presentation may define an infinite group).
pub fn enumerate_group(p: &Presentation, max_cosets: usize) -> Result<Group, EnumerationError> {
    let table = todd_coxeter::enumerate(p, max_cosets)?;
    let n = table.rows.len();
    let act = |c: u32, l: Letter| table.rows[c as usize][l.index()];

    // Canonical numbering: BFS from the identity over all four letters in
    // shortlex order. FIFO order makes discovery order shortlex order.
    let mut number = vec![usize::MAX; n];
    let mut coset_of = vec![0u32; n];
    let mut normal_forms: Vec<Word> = Vec::with_capacity(n);
    number[table.identity as usize] = 0;
    coset_of[0] = table.identity;
    normal_forms.push(Word::empty());
    let mut head = 0;
    while head < normal_forms.len() {
        let coset = coset_of[head];
        let prefix = normal_forms[head].clone();
        for l in Letter::ALL {
            let t = act(coset, l);
            if number[t as usize] == usize::MAX {
                let next = normal_forms.len();
                number[t as usize] = next;
                coset_of[next] = t;
                let mut w = prefix.clone();
                w.0.push(l);
                normal_forms.push(w);
            }
        }
        head += 1;
    }
    if normal_forms.len() != n {
        // cosets of the trivial subgroup are always reachable from the identity
        return Err(EnumerationError::InconsistentTable);
    }

    // Positive words: a second BFS restricted to the letters a, b.
    let mut positive_words: Vec<Option<Word>> = vec![None; n];
    positive_words[0] = Some(Word::empty());
    let mut queue: Vec<Element> = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let prefix = positive_words[x].clone().unwrap();
        for l in Letter::GENERATORS {
            let t = number[act(coset_of[x], l) as usize];
            if positive_words[t].is_none() {
                let mut w = prefix.clone();
                w.0.push(l);
                positive_words[t] = Some(w);
                queue.push(t);
            }
        }
    }
    let positive_words: Vec<Word> = positive_words
        .into_iter()
        .map(|w| w.expect("a, b generate the group"))
        .collect();
    let names: Vec<String> = positive_words
        .iter()
        .map(|w| w.run_length_string())
        .collect();

    // Multiplication: walk the table by the normal form of the right factor.
    let mut mul = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            let mut cur = coset_of[x];
            for &l in normal_forms[y].letters() {
                cur = act(cur, l);
            }
            mul[x * n + y] = number[cur as usize];
        }
    }
    let mut inv = vec![0usize; n];
    for x in 0..n {
        inv[x] = (0..n)
            .find(|&y| mul[x * n + y] == 0)
            .expect("every element has an inverse");
    }
    let a = number[act(table.identity, Letter::A) as usize];
    let b = number[act(table.identity, Letter::B) as usize];

    Ok(Group {
        order: n,
        mul,
        inv,
        a,
        b,
        normal_forms,
        positive_words,
        names,
    })
}
