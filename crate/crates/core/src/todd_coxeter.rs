//! HLT-style Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! The enumerator scans every live coset against every relator, filling gaps
//! with new cosets, and repeats until a pass makes no change. Coincidences are
//! merged through a union-find with a FIFO queue; between passes the table is
//! compacted (lookahead-style) when enough rows have died. Everything is
//! processed in index order, so the outcome is deterministic for fixed input.

use crate::presentation::Presentation;
use crate::word::{Letter, Word};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("coset limit of {limit} exceeded; the group may be infinite or larger than the limit allows")]
    CosetLimitExceeded { limit: usize },
    #[error("internal error: inconsistent coset table")]
    InconsistentTable,
}

const NONE: u32 = u32::MAX;

/// The completed table: one row per element, columns in `Letter` order.
pub(crate) struct CompletedTable {
    pub rows: Vec<[u32; 4]>,
    pub identity: u32,
}

pub(crate) fn enumerate(
    presentation: &Presentation,
    max_cosets: usize,
) -> Result<CompletedTable, EnumerationError> {
    let mut table = Table::new(max_cosets);
    let relators: Vec<&Word> = presentation.relators.iter().collect();

    loop {
        let defs_before = table.definitions;
        let merges_before = table.merges;
        let mut cursor = 0;
        while cursor < table.rows.len() {
            if table.is_live(cursor as u32) {
                for relator in &relators {
                    table.scan_and_fill(cursor as u32, relator)?;
                    if !table.is_live(cursor as u32) {
                        break;
                    }
                }
                if table.is_live(cursor as u32) {
                    table.fill_row(cursor as u32)?;
                }
            }
            cursor += 1;
        }
        if table.definitions == defs_before && table.merges == merges_before {
            break;
        }
        // Lookahead compaction: drop dead rows before rescanning.
        if table.dead_fraction() > 0.25 {
            table.compact();
        }
    }

    table.compact();
    table.verify(&relators)?;
    Ok(CompletedTable {
        rows: table.rows,
        identity: table.start,
    })
}

struct Table {
    rows: Vec<[u32; 4]>,
    parent: Vec<u32>,
    pending: VecDeque<(u32, u32)>,
    live: usize,
    max_cosets: usize,
    definitions: u64,
    merges: u64,
    start: u32,
}

impl Table {
    fn new(max_cosets: usize) -> Table {
        Table {
            rows: vec![[NONE; 4]],
            parent: vec![0],
            pending: VecDeque::new(),
            live: 1,
            max_cosets,
            definitions: 0,
            merges: 0,
            start: 0,
        }
    }

    fn find(&mut self, mut c: u32) -> u32 {
        while self.parent[c as usize] != c {
            let p = self.parent[c as usize];
            self.parent[c as usize] = self.parent[p as usize];
            c = self.parent[c as usize];
        }
        c
    }

    fn is_live(&mut self, c: u32) -> bool {
        self.find(c) == c
    }

    fn lookup(&mut self, c: u32, l: Letter) -> Option<u32> {
        let c = self.find(c);
        let t = self.rows[c as usize][l.index()];
        if t == NONE {
            None
        } else {
            Some(self.find(t))
        }
    }

    fn dead_fraction(&self) -> f64 {
        1.0 - self.live as f64 / self.rows.len() as f64
    }

    fn new_coset(&mut self) -> Result<u32, EnumerationError> {
        if self.rows.len() >= self.max_cosets {
            return Err(EnumerationError::CosetLimitExceeded {
                limit: self.max_cosets,
            });
        }
        let c = self.rows.len() as u32;
        self.rows.push([NONE; 4]);
        self.parent.push(c);
        self.live += 1;
        self.definitions += 1;
        Ok(c)
    }

    /// Records `c · l = d` together with the inverse entry, queuing a
    /// coincidence if either slot already holds a different coset.
    fn set_entry(&mut self, c: u32, l: Letter, d: u32) {
        let c = self.find(c);
        let d = self.find(d);
        let existing = self.rows[c as usize][l.index()];
        if existing != NONE {
            let existing = self.find(existing);
            if existing != d {
                self.pending.push_back((existing, d));
            }
        } else {
            self.rows[c as usize][l.index()] = d;
        }
        let back = self.rows[d as usize][l.inverse().index()];
        if back != NONE {
            let back = self.find(back);
            if back != c {
                self.pending.push_back((back, c));
            }
        } else {
            self.rows[d as usize][l.inverse().index()] = c;
        }
    }

    fn process_coincidences(&mut self) {
        while let Some((x, y)) = self.pending.pop_front() {
            let x = self.find(x);
            let y = self.find(y);
            if x == y {
                continue;
            }
            let (keep, dead) = if x < y { (x, y) } else { (y, x) };
            self.parent[dead as usize] = keep;
            self.live -= 1;
            self.merges += 1;
            let row = std::mem::replace(&mut self.rows[dead as usize], [NONE; 4]);
            for (idx, &target) in row.iter().enumerate() {
                if target == NONE {
                    continue;
                }
                let l = Letter::ALL[idx];
                let target = self.find(target);
                self.set_entry(keep, l, target);
            }
        }
    }

    /// Scans the relator at coset `c`, filling every gap (HLT). Restarts the
    /// scan after coincidence processing until it closes without incident.
    fn scan_and_fill(&mut self, c: u32, relator: &Word) -> Result<(), EnumerationError> {
        'restart: loop {
            let c = self.find(c);
            let letters = relator.letters();
            let mut forward = c;
            let mut i = 0;
            while i < letters.len() {
                match self.lookup(forward, letters[i]) {
                    Some(next) => {
                        forward = next;
                        i += 1;
                    }
                    None => break,
                }
            }
            if i == letters.len() {
                if forward != c {
                    self.pending.push_back((forward, c));
                    self.process_coincidences();
                }
                return Ok(());
            }
            let mut backward = c;
            let mut j = letters.len();
            while j > i {
                match self.lookup(backward, letters[j - 1].inverse()) {
                    Some(prev) => {
                        backward = prev;
                        j -= 1;
                    }
                    None => break,
                }
            }
            if j == i {
                // scan met itself: the two ends name the same coset
                if forward != backward {
                    self.pending.push_back((forward, backward));
                    self.process_coincidences();
                    continue 'restart;
                }
                return Ok(());
            }
            if j == i + 1 {
                // gap of one: deduction
                self.set_entry(forward, letters[i], backward);
                if !self.pending.is_empty() {
                    self.process_coincidences();
                    continue 'restart;
                }
                return Ok(());
            }
            // gap of two or more: define one coset and rescan
            let fresh = self.new_coset()?;
            self.set_entry(forward, letters[i], fresh);
            debug_assert!(self.pending.is_empty());
        }
    }

    /// Ensures every letter image of `c` is defined.
    fn fill_row(&mut self, c: u32) -> Result<(), EnumerationError> {
        for l in Letter::ALL {
            let c = self.find(c);
            if self.lookup(c, l).is_none() {
                let fresh = self.new_coset()?;
                self.set_entry(c, l, fresh);
                self.process_coincidences();
            }
        }
        Ok(())
    }

    /// Renumbers live cosets to 0..live, preserving index order.
    fn compact(&mut self) {
        let mut remap = vec![NONE; self.rows.len()];
        let mut next = 0u32;
        for c in 0..self.rows.len() as u32 {
            if self.find(c) == c {
                remap[c as usize] = next;
                next += 1;
            }
        }
        let mut new_rows = Vec::with_capacity(next as usize);
        for c in 0..self.rows.len() as u32 {
            if self.find(c) != c {
                continue;
            }
            let mut row = [NONE; 4];
            for (idx, slot) in row.iter_mut().enumerate() {
                let t = self.rows[c as usize][idx];
                if t != NONE {
                    *slot = remap[self.find(t) as usize];
                }
            }
            new_rows.push(row);
        }
        self.start = remap[self.find(self.start) as usize];
        self.rows = new_rows;
        self.parent = (0..self.rows.len() as u32).collect();
        self.live = self.rows.len();
    }

    /// Final check: the table is complete, inverse-consistent, and every
    /// relator closes at every coset. Only a bug could make this fail.
    fn verify(&mut self, relators: &[&Word]) -> Result<(), EnumerationError> {
        for c in 0..self.rows.len() {
            for l in Letter::ALL {
                let t = self.rows[c][l.index()];
                if t == NONE || self.rows[t as usize][l.inverse().index()] != c as u32 {
                    return Err(EnumerationError::InconsistentTable);
                }
            }
            for relator in relators {
                let mut cur = c as u32;
                for &l in relator.letters() {
                    cur = self.rows[cur as usize][l.index()];
                }
                if cur != c as u32 {
                    return Err(EnumerationError::InconsistentTable);
                }
            }
        }
        Ok(())
    }
}
