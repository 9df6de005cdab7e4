//! Exhaustive generation of labeled digraphs on a fixed vertex count.
//!
//! Digraphs are identified with bitmasks over the allowed arc slots in
//! row-major order, so ascending masks give a deterministic enumeration
//! order. Acyclic digraphs are produced by skipping whole ranges of masks
//! that contain a cyclic prefix.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Largest number of arc slots a mask can address.
const MAX_SLOTS: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct EnumerationFilter {
    pub n: usize,
    pub loopless: bool,
    pub acyclic: bool,
}

impl EnumerationFilter {
    pub fn all(n: usize) -> Self {
        Self { n, loopless: false, acyclic: false }
    }

    pub fn loopless(n: usize) -> Self {
        Self { n, loopless: true, acyclic: false }
    }

    pub fn acyclic(n: usize) -> Self {
        Self { n, loopless: true, acyclic: true }
    }
}

/// The arc slots available under a filter, and the mask <-> digraph map.
#[derive(Debug, Clone)]
pub struct DigraphSpace {
    filter: EnumerationFilter,
    slots: Vec<(usize, usize)>,
}

impl DigraphSpace {
    /// Validates `filter.n` against the caps.
    pub fn new(filter: EnumerationFilter, caps: &Caps) -> Result<Self> {
        let n = filter.n;
        let cap = if filter.acyclic { caps.acyclic } else { caps.general };
        if n > cap {
            return Err(Error::CapExceeded { what: "digraph enumeration", requested: n, cap });
        }
        // loops can never appear in an acyclic digraph, so their slots are dropped
        let skip_loops = filter.loopless || filter.acyclic;
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !(skip_loops && u == v))
            .collect();
        if slots.len() > MAX_SLOTS {
            return Err(Error::CapExceeded {
                what: "arc slots in a digraph mask",
                requested: slots.len(),
                cap: MAX_SLOTS,
            });
        }
        Ok(Self { filter, slots })
    }

    pub fn filter(&self) -> EnumerationFilter {
        self.filter
    }

    pub fn n(&self) -> usize {
        self.filter.n
    }

    pub fn slots(&self) -> &[(usize, usize)] {
        &self.slots
    }

    /// Exclusive upper bound of the mask range.
    pub fn mask_limit(&self) -> u64 {
        1u64 << self.slots.len()
    }

    pub fn digraph(&self, mask: u64) -> Digraph {
        let n = self.n();
        let mut out = vec![VertexSet::new(n); n];
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = self.slots[i];
            out[u].insert(v);
        }
        Digraph::from_out_neighborhoods(out).expect("rows sized to n")
    }

    /// Mask of `d` in this space, if every arc of `d` has a slot here.
    pub fn mask_of(&self, d: &Digraph) -> Option<u64> {
        if d.n() != self.n() {
            return None;
        }
        let mut mask = 0u64;
        for arc in d.arcs() {
            let i = self.slots.iter().position(|&s| s == arc)?;
            mask |= 1 << i;
        }
        Some(mask)
    }

    /// Smallest admissible mask in `[from, limit)`.
    pub fn next_at_or_after(&self, from: u64, limit: u64) -> Option<u64> {
        if !self.filter.acyclic {
            return (from < limit).then_some(from);
        }
        let mut y = from;
        while y < limit {
            match self.first_cyclic_bit(y) {
                None => return Some(y),
                Some(b) => {
                    // every mask agreeing with y on bits >= b contains the cycle
                    y = ((y >> b) + 1) << b;
                }
            }
        }
        None
    }

    /// Adds arcs from the highest slot down and returns the slot whose
    /// arc first closes a cycle.
    fn first_cyclic_bit(&self, mask: u64) -> Option<usize> {
        let n = self.n();
        let mut reach = [0u64; 64];
        let mut m = mask;
        while m != 0 {
            let b = 63 - m.leading_zeros() as usize;
            m &= !(1u64 << b);
            let (u, v) = self.slots[b];
            if u == v || reach[v] >> u & 1 == 1 {
                return Some(b);
            }
            let add = reach[v] | 1 << v;
            for (w, row) in reach.iter_mut().enumerate().take(n) {
                if w == u || *row >> u & 1 == 1 {
                    *row |= add;
                }
            }
        }
        None
    }

    /// Admissible masks in ascending order.
    pub fn masks(&self) -> Masks<'_> {
        self.masks_in(0, self.mask_limit())
    }

    /// Admissible masks in `[lo, hi)`, ascending.
    pub fn masks_in(&self, lo: u64, hi: u64) -> Masks<'_> {
        Masks { space: self, next: lo, limit: hi }
    }

    /// Splits the mask range into contiguous chunks, runs `work` on each in
    /// parallel and returns the results in chunk order.
    pub fn par_chunks<A, F>(&self, work: F) -> Vec<A>
    where
        A: Send,
        F: Fn(Masks<'_>) -> A + Sync,
    {
        let limit = self.mask_limit();
        let chunk_bits = self.slots.len().saturating_sub(8).min(16);
        let chunk = 1u64 << chunk_bits;
        let chunks = limit.div_ceil(chunk);
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * chunk;
                work(self.masks_in(lo, (lo + chunk).min(limit)))
            })
            .collect()
    }
}

pub struct Masks<'a> {
    space: &'a DigraphSpace,
    next: u64,
    limit: u64,
}

impl Masks<'_> {
    pub fn space(&self) -> &DigraphSpace {
        self.space
    }
}

impl Iterator for Masks<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let m = self.space.next_at_or_after(self.next, self.limit)?;
        self.next = m + 1;
        Some(m)
    }
}

/// Stream of every digraph matching a filter, by ascending mask.
pub struct Digraphs {
    space: DigraphSpace,
    next: u64,
}

impl Digraphs {
    pub fn space(&self) -> &DigraphSpace {
        &self.space
    }
}

impl Iterator for Digraphs {
    type Item = Digraph;

    fn next(&mut self) -> Option<Digraph> {
        let m = self.space.next_at_or_after(self.next, self.space.mask_limit())?;
        self.next = m + 1;
        Some(self.space.digraph(m))
    }
}

/// Every labeled digraph on `filter.n` vertices matching the filter, once
/// each. Refuses vertex counts above the caps.
pub fn enumerate_digraphs(filter: EnumerationFilter, caps: &Caps) -> Result<Digraphs> {
    Ok(Digraphs { space: DigraphSpace::new(filter, caps)?, next: 0 })
}
