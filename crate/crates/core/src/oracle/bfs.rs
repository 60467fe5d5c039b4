//! Breadth-first search over all `2^m` orientations.
//!
//! The inversion graph is the Cayley graph of `(Z/2)^m` generated by the
//! inversion masks, so one search from the zero state gives every distance:
//! `dist(a, b) = dist(0, a ^ b)`. Each state stores its distance modulo 3 in
//! two bits (`3` = unreached). Neighbouring states differ in distance by at
//! most one, so the residue is enough to walk a shortest path back.

use rayon::prelude::*;

use super::generators::GeneratorSet;

const UNREACHED: u8 = 3;
/// States per `u64` of the residue array.
const PER_WORD: usize = 32;

/// Result of a search from the zero state.
#[derive(Clone, Debug)]
pub struct Exploration {
    m: usize,
    gens: Vec<u64>,
    codes: Vec<u64>,
    /// Number of states in each completed layer.
    layer_sizes: Vec<u64>,
    /// Smallest state of the last labelled layer.
    farthest: u64,
    complete: bool,
}

impl Exploration {
    /// Runs the search to exhaustion, or until `stop_at` has been reached and
    /// its whole layer labelled.
    pub(crate) fn run(gens: &GeneratorSet, stop_at: Option<u64>) -> Exploration {
        let m = gens.m();
        assert!(m <= 40, "exhaustive search needs m <= 40");
        let states: u64 = 1u64 << m;
        let code_words = (states as usize).div_ceil(PER_WORD);
        let bit_words = (states as usize).div_ceil(64);
        let mut codes = vec![u64::MAX; code_words];
        let mut frontier = vec![0u64; bit_words];
        let mut next = vec![0u64; bit_words];
        let gen_list: Vec<u64> = gens.raw_masks().to_vec();

        set_code(&mut codes, 0, 0);
        frontier[0] = 1;
        let mut layer_sizes = vec![1u64];
        let mut reached: u64 = 1;
        let mut depth = 0usize;
        let mut complete = false;

        loop {
            if let Some(t) = stop_at {
                if code(&codes, t) != UNREACHED {
                    break;
                }
            }
            let frontier_size = *layer_sizes.last().unwrap();
            let unreached = states - reached;
            if unreached == 0 {
                complete = true;
                break;
            }
            let push = frontier_size.saturating_mul(gen_list.len() as u64) < unreached / 4;
            if push {
                let from: Vec<u64> = iter_bits(&frontier).collect();
                let mut found: Vec<u64> = from
                    .par_iter()
                    .flat_map_iter(|&x| {
                        let codes = &codes;
                        gen_list.iter().filter_map(move |&g| {
                            let y = x ^ g;
                            (code(codes, y) == UNREACHED).then_some(y)
                        })
                    })
                    .collect();
                found.sort_unstable();
                found.dedup();
                for y in found {
                    next[(y / 64) as usize] |= 1u64 << (y % 64);
                }
            } else {
                let codes_ref = &codes;
                let frontier_ref = &frontier;
                let gens_ref = &gen_list;
                next.par_chunks_mut(256).enumerate().for_each(|(ci, chunk)| {
                    for (k, word) in chunk.iter_mut().enumerate() {
                        let base = ((ci * 256 + k) * 64) as u64;
                        let mut out = 0u64;
                        for b in 0..64u64 {
                            let y = base + b;
                            if y >= states || code(codes_ref, y) != UNREACHED {
                                continue;
                            }
                            if gens_ref.iter().any(|&g| bit(frontier_ref, y ^ g)) {
                                out |= 1u64 << b;
                            }
                        }
                        *word = out;
                    }
                });
            }

            let label = ((depth + 1) % 3) as u64;
            let count: u64 = codes
                .par_chunks_mut(2)
                .zip(next.par_iter())
                .map(|(cw, &nw)| {
                    if nw == 0 {
                        return 0;
                    }
                    for b in 0..64usize {
                        if nw >> b & 1 == 1 {
                            let w = b / PER_WORD;
                            let shift = (b % PER_WORD) * 2;
                            cw[w] = (cw[w] & !(3u64 << shift)) | (label << shift);
                        }
                    }
                    nw.count_ones() as u64
                })
                .sum();
            if count == 0 {
                complete = true;
                break;
            }
            reached += count;
            depth += 1;
            layer_sizes.push(count);
            std::mem::swap(&mut frontier, &mut next);
            next.par_iter_mut().for_each(|w| *w = 0);
        }

        let farthest = iter_bits(&frontier).next().unwrap_or(0);
        Exploration {
            m,
            gens: gen_list,
            codes,
            layer_sizes,
            farthest,
            complete,
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Whether every reachable state has been labelled.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn states_visited(&self) -> u64 {
        self.layer_sizes.iter().sum()
    }

    pub fn layer_sizes(&self) -> &[u64] {
        &self.layer_sizes
    }

    /// Largest distance from zero seen so far; the diameter once complete.
    pub fn eccentricity(&self) -> usize {
        self.layer_sizes.len() - 1
    }

    /// Smallest state in the outermost layer.
    pub fn farthest(&self) -> u64 {
        self.farthest
    }

    /// Distance from zero to `state`, or `None` if unreached.
    pub fn distance(&self, state: u64) -> Option<usize> {
        if code(&self.codes, state) == UNREACHED {
            return None;
        }
        Some(self.path(state).len())
    }

    /// Lexicographically smallest shortest generator sequence from 0 to
    /// `target` (comparing masks as integers), or `None` if unreached.
    pub fn path_to(&self, target: u64) -> Option<Vec<u64>> {
        if code(&self.codes, target) == UNREACHED {
            return None;
        }
        let len = self.path(target).len();
        // dist(x, target) = dist(0, x ^ target); walk forward choosing the
        // smallest mask that decreases it.
        let mut out = Vec::with_capacity(len);
        let mut x = 0u64;
        let mut remaining = len;
        while remaining > 0 {
            let want = ((remaining - 1) % 3) as u8;
            let g = *self
                .gens
                .iter()
                .find(|&&g| code(&self.codes, x ^ g ^ target) == want)
                .expect("a shortest-path successor exists");
            out.push(g);
            x ^= g;
            remaining -= 1;
        }
        debug_assert_eq!(x, target);
        Some(out)
    }

    /// Some shortest path from `state` back to 0, read off the residues.
    fn path(&self, state: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut x = state;
        while x != 0 {
            // Neighbours sit at distance d - 1, d or d + 1, which have
            // distinct residues, so residue d - 1 identifies a predecessor.
            let want = (code(&self.codes, x) + 2) % 3;
            let g = *self
                .gens
                .iter()
                .find(|&&g| code(&self.codes, x ^ g) == want)
                .expect("predecessor exists");
            out.push(g);
            x ^= g;
        }
        out
    }
}

#[inline]
fn code(codes: &[u64], s: u64) -> u8 {
    let s = s as usize;
    ((codes[s / PER_WORD] >> ((s % PER_WORD) * 2)) & 3) as u8
}

fn set_code(codes: &mut [u64], s: u64, c: u8) {
    let s = s as usize;
    let shift = (s % PER_WORD) * 2;
    let w = &mut codes[s / PER_WORD];
    *w = (*w & !(3u64 << shift)) | ((c as u64) << shift);
}

#[inline]
fn bit(bits: &[u64], s: u64) -> bool {
    bits[(s / 64) as usize] >> (s % 64) & 1 == 1
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = u64> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let t = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                Some(wi as u64 * 64 + t)
            }
        })
    })
}
