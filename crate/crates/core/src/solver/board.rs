//! Search-side game state: raw bitmask edges over the original vertex
//! numbering, plus the set of unpicked vertices.

use smallvec::SmallVec;

use crate::game::{Game, Player, Position, Status};

pub(crate) type Edges = SmallVec<[u128; 12]>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Board {
    pub blue: Edges,
    pub red: Edges,
    pub free: u128,
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

/// Union of the unit edges in `edges`.
#[inline]
pub(crate) fn units(edges: &[u128]) -> u128 {
    edges.iter().filter(|e| e.count_ones() == 1).fold(0, |acc, e| acc | e)
}

#[inline]
pub(crate) fn has_unit(edges: &[u128]) -> bool {
    edges.iter().any(|e| e.count_ones() == 1)
}

/// Some vertex lies in two distinct size-2 edges: picking it makes two
/// threats at once.
#[inline]
pub(crate) fn double_threat_vertex(edges: &[u128]) -> Option<usize> {
    let mut seen = 0u128;
    for &e in edges.iter().filter(|e| e.count_ones() == 2) {
        let both = seen & e;
        if both != 0 {
            return Some(both.trailing_zeros() as usize);
        }
        seen |= e;
    }
    None
}

impl Board {
    pub fn from_game(game: &Game) -> Board {
        Board {
            blue: game.blue().iter().map(|e| e.bits()).collect(),
            red: game.red().iter().map(|e| e.bits()).collect(),
            free: game.vertex_set().bits(),
        }
    }

    /// Board of an ongoing position, in the original game's numbering.
    pub fn from_position(pos: &Position) -> Board {
        debug_assert_eq!(pos.status(), Status::Ongoing);
        let l = pos.picked(Player::Left).bits();
        let r = pos.picked(Player::Right).bits();
        let g = pos.game();
        Board {
            blue: g.blue().iter().map(|e| e.bits()).filter(|e| e & r == 0).map(|e| e & !l).collect(),
            red: g.red().iter().map(|e| e.bits()).filter(|e| e & l == 0).map(|e| e & !r).collect(),
            free: pos.free().bits(),
        }
    }

    #[inline]
    pub fn own(&self, p: Player) -> &Edges {
        match p {
            Player::Left => &self.blue,
            Player::Right => &self.red,
        }
    }

    /// Does picking `v` fill an edge of `mover`?
    #[inline]
    pub fn completes(&self, v: usize, mover: Player) -> bool {
        self.own(mover).iter().any(|&e| e == bit(v))
    }

    /// `mover` picks `v`. The caller handles the case where this fills an edge.
    pub fn play(&self, v: usize, mover: Player) -> Board {
        let b = bit(v);
        let shrink = |es: &Edges| -> Edges { es.iter().map(|&e| e & !b).collect() };
        let kill = |es: &Edges| -> Edges { es.iter().copied().filter(|&e| e & b == 0).collect() };
        let (blue, red) = match mover {
            Player::Left => (shrink(&self.blue), kill(&self.red)),
            Player::Right => (kill(&self.blue), shrink(&self.red)),
        };
        Board { blue, red, free: self.free & !b }
    }

    /// Free vertices lying in no live edge.
    pub fn dead(&self) -> u128 {
        let live = self.blue.iter().chain(self.red.iter()).fold(0, |acc, e| acc | e);
        self.free & !live
    }

    /// Sorts, deduplicates, and drops same-color supersets.
    pub fn normalize(&mut self) {
        prune(&mut self.blue);
        prune(&mut self.red);
    }

    /// Sorts and deduplicates only.
    pub fn sort(&mut self) {
        self.blue.sort_unstable();
        self.blue.dedup();
        self.red.sort_unstable();
        self.red.dedup();
    }

    /// Removes twin pairs to a fixpoint: each pair is credited one to each
    /// player, which kills every edge containing them. Dead vertices go in
    /// pairs. Requires that no unit edge exists. Returns false when the
    /// signatures do not fit (more than 128 edges of one color).
    pub fn reduce_twins(&mut self) -> bool {
        if self.blue.len() > 128 || self.red.len() > 128 {
            return false;
        }
        loop {
            let mut sigs: SmallVec<[(u128, u128, u8); 64]> = SmallVec::new();
            let mut f = self.free;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                let b = bit(v);
                let mut sb = 0u128;
                for (i, &e) in self.blue.iter().enumerate() {
                    if e & b != 0 {
                        sb |= 1 << i;
                    }
                }
                let mut sr = 0u128;
                for (i, &e) in self.red.iter().enumerate() {
                    if e & b != 0 {
                        sr |= 1 << i;
                    }
                }
                sigs.push((sb, sr, v as u8));
            }
            sigs.sort_unstable();
            let mut removed = 0u128;
            let mut dead_edges_b = 0u128;
            let mut dead_edges_r = 0u128;
            let mut i = 0;
            while i + 1 < sigs.len() {
                let (sb, sr, u) = sigs[i];
                let (tb, tr, v) = sigs[i + 1];
                if sb == tb && sr == tr {
                    removed |= bit(u as usize) | bit(v as usize);
                    dead_edges_b |= sb;
                    dead_edges_r |= sr;
                    i += 2;
                } else {
                    i += 1;
                }
            }
            if removed == 0 {
                return true;
            }
            self.free &= !removed;
            let keep = |es: &Edges, dead: u128| -> Edges {
                es.iter().enumerate().filter(|(i, _)| dead >> i & 1 == 0).map(|(_, &e)| e).collect()
            };
            self.blue = keep(&self.blue, dead_edges_b);
            self.red = keep(&self.red, dead_edges_r);
        }
    }

    /// Memo key: both edge lists (already sorted), the dead-vertex count and
    /// the mover.
    pub fn key(&self, mover: Player) -> Box<[u128]> {
        let dead = self.dead().count_ones() as u128;
        let header = (self.blue.len() as u128) | (self.red.len() as u128) << 32 | dead << 64 | (mover as u128) << 96;
        let mut k = Vec::with_capacity(1 + self.blue.len() + self.red.len());
        k.push(header);
        k.extend_from_slice(&self.blue);
        k.extend_from_slice(&self.red);
        k.into_boxed_slice()
    }

    /// Key that keeps the exact free set (for searches where dead vertex
    /// identity must not be collapsed).
    pub fn exact_key(&self, mover: Player) -> Box<[u128]> {
        let mut k = self.key(mover).into_vec();
        k.push(self.free);
        k.into_boxed_slice()
    }

    /// Vertices that survive dominance pruning (no unit edges assumed):
    /// drop `u` if another free vertex lies in every edge containing `u`,
    /// keeping the lowest index among twins.
    pub fn undominated(&self) -> u128 {
        let edges: SmallVec<[u128; 24]> = self.blue.iter().chain(self.red.iter()).copied().collect();
        let verts: SmallVec<[usize; 64]> = iter_bits(self.free).collect();
        let mut keep = self.free;
        for &u in &verts {
            let bu = bit(u);
            // intersection of all edges containing u
            let mut common = self.free & !bu;
            let mut any = false;
            for &e in edges.iter() {
                if e & bu != 0 {
                    common &= e;
                    any = true;
                    if common == 0 {
                        break;
                    }
                }
            }
            let _ = any;
            if common == 0 {
                continue;
            }
            // u is dominated by every v in `common`; prune unless every such
            // v is a twin with a higher index
            let mut pruned = false;
            for v in iter_bits(common) {
                let bv = bit(v);
                let twin = edges.iter().all(|&e| (e & bu != 0) == (e & bv != 0));
                if !twin || v < u {
                    pruned = true;
                    break;
                }
            }
            if pruned {
                keep &= !bu;
            }
        }
        keep
    }
}

/// Ascending iterator over set bits.
pub(crate) fn iter_bits(mut x: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(v)
        }
    })
}

fn prune(edges: &mut Edges) {
    edges.sort_unstable_by_key(|e| (e.count_ones(), *e));
    edges.dedup();
    let mut kept: Edges = SmallVec::new();
    for &e in edges.iter() {
        if !kept.iter().any(|&f| f & !e == 0) {
            kept.push(e);
        }
    }
    kept.sort_unstable();
    *edges = kept;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn board(n: usize, blue: &[u128], red: &[u128]) -> Board {
        Board { blue: blue.iter().copied().collect(), red: red.iter().copied().collect(), free: (1u128 << n) - 1 }
    }

    #[test]
    fn play_shrinks_own_and_kills_other() {
        let b = board(3, &[0b011], &[0b110]);
        let after = b.play(1, Player::Left);
        assert_eq!(after.blue.as_slice(), &[0b001]);
        assert!(after.red.is_empty());
        assert_eq!(after.free, 0b101);
    }

    #[test]
    fn normalize_drops_supersets() {
        let mut b = board(3, &[0b111, 0b011, 0b011], &[]);
        b.normalize();
        assert_eq!(b.blue.as_slice(), &[0b011]);
    }

    #[test]
    fn twins_and_dead_pairs_are_removed() {
        // blue {0,1}; 2,3 dead
        let mut b = board(4, &[0b0011], &[]);
        assert!(b.reduce_twins());
        assert_eq!(b.free, 0);
        assert!(b.blue.is_empty());
        // three dead vertices leave one
        let mut b = board(4, &[0b0001], &[]);
        b.reduce_twins();
        assert_eq!(b.free.count_ones(), 2);
        assert_eq!(b.dead().count_ones(), 1);
    }

    #[test]
    fn undominated_keeps_the_hub() {
        // blue {0,1},{0,2}: 1 and 2 are dominated by 0
        let b = board(3, &[0b011, 0b101], &[]);
        assert_eq!(b.undominated(), 0b001);
        // twins {0,1}: keep lower index
        let b = board(2, &[0b11], &[]);
        assert_eq!(b.undominated(), 0b01);
    }

    #[test]
    fn double_threats() {
        assert_eq!(double_threat_vertex(&[0b011, 0b110]), Some(1));
        assert_eq!(double_threat_vertex(&[0b0011, 0b1100]), None);
        assert_eq!(double_threat_vertex(&[0b111, 0b110]), None);
    }
}
