//! Seeded generators for test batteries. Every task draws from its own
//! ChaCha stream, so results do not depend on scheduling.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::Game;
use crate::vertex_set::VertexSet;

/// Generator for stream `stream` of master seed `seed`.
pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Shape of random games.
#[derive(Debug, Clone, Copy)]
pub struct GameShape {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub max_blue_size: usize,
    pub max_red_size: usize,
    pub max_edges: usize,
    /// Chance that an edge is a unit edge (when the size bound allows more).
    pub unit_chance: f64,
}

impl GameShape {
    pub fn new(max_vertices: usize, max_edge: usize) -> GameShape {
        GameShape {
            min_vertices: 1,
            max_vertices,
            max_blue_size: max_edge,
            max_red_size: max_edge,
            max_edges: max_vertices + 2,
            unit_chance: 0.1,
        }
    }

    pub fn min_vertices(mut self, n: usize) -> Self {
        self.min_vertices = n;
        self
    }

    pub fn max_edges(mut self, m: usize) -> Self {
        self.max_edges = m;
        self
    }

    pub fn unit_chance(mut self, p: f64) -> Self {
        self.unit_chance = p;
        self
    }

    pub fn sizes(mut self, blue: usize, red: usize) -> Self {
        self.max_blue_size = blue;
        self.max_red_size = red;
        self
    }
}

/// A random edge on `0..n` with between 1 and `max_size` vertices.
pub fn random_edge<R: Rng>(rng: &mut R, n: usize, max_size: usize, unit_chance: f64) -> VertexSet {
    let cap = max_size.min(n).max(1);
    let size = if cap == 1 || rng.gen_bool(unit_chance) { 1 } else { rng.gen_range(2..=cap) };
    let mut verts: Vec<usize> = (0..n).collect();
    verts.shuffle(rng);
    verts[..size].iter().copied().collect()
}

/// Random edges of one color.
pub fn random_edges<R: Rng>(
    rng: &mut R,
    n: usize,
    max_size: usize,
    max_edges: usize,
    unit_chance: f64,
) -> Vec<VertexSet> {
    if max_size == 0 || n == 0 {
        return Vec::new();
    }
    let m = rng.gen_range(0..=max_edges);
    (0..m).map(|_| random_edge(rng, n, max_size, unit_chance)).collect()
}

pub fn random_game<R: Rng>(rng: &mut R, shape: &GameShape) -> Game {
    let n = rng.gen_range(shape.min_vertices..=shape.max_vertices);
    let blue = random_edges(rng, n, shape.max_blue_size, shape.max_edges, shape.unit_chance);
    let red = random_edges(rng, n, shape.max_red_size, shape.max_edges, shape.unit_chance);
    Game::anonymous(n, blue, red).expect("generated edges are valid")
}

/// Every game on `n` anonymous vertices whose edges are drawn from all
/// vertex subsets of size 1..=`max_edge`, in a fixed order.
pub fn all_games(n: usize, max_edge: usize) -> impl Iterator<Item = Game> {
    let candidates: Vec<VertexSet> = (1u128..(1 << n)).map(VertexSet).filter(|s| s.len() <= max_edge).collect();
    let m = candidates.len();
    assert!(2 * m < 64, "too many candidate edges to enumerate");
    (0u64..(1 << (2 * m))).map(move |code| {
        let pick =
            |bits: u64| -> Vec<VertexSet> { (0..m).filter(|i| bits >> i & 1 == 1).map(|i| candidates[i]).collect() };
        Game::anonymous(n, pick(code & ((1 << m) - 1)), pick(code >> m)).expect("valid")
    })
}

/// Games on `n` anonymous vertices with edges of size at most 2, one per
/// isomorphism class. A game is coded by its pair edges (blue in the low
/// half, red in the high half) and its unit edges (blue low, red high).
pub struct SmallGameClasses {
    n: usize,
    pairs: Vec<(usize, usize)>,
    /// per permutation: image of every vertex, and of every pair index
    perms: Vec<(Vec<usize>, Vec<usize>)>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

impl SmallGameClasses {
    pub fn new(n: usize) -> SmallGameClasses {
        assert!(n <= 6, "isomorphism enumeration is limited to 6 vertices");
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).expect("pair");
        let perms = permutations(n)
            .into_iter()
            .map(|p| {
                let pair_img = pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect();
                (p, pair_img)
            })
            .collect();
        SmallGameClasses { n, pairs, perms }
    }

    fn map_bits(bits: u64, img: &[usize]) -> u64 {
        let mut out = 0;
        let mut b = bits;
        while b != 0 {
            let i = b.trailing_zeros() as usize;
            out |= 1 << img[i];
            b &= b - 1;
        }
        out
    }

    fn map_pairs(&self, code: u64, perm: usize) -> u64 {
        let m = self.pairs.len();
        let img = &self.perms[perm].1;
        let mask = (1u64 << m) - 1;
        Self::map_bits(code & mask, img) | Self::map_bits(code >> m, img) << m
    }

    fn map_units(&self, code: u64, perm: usize) -> u64 {
        let img = &self.perms[perm].0;
        let mask = (1u64 << self.n) - 1;
        Self::map_bits(code & mask, img) | Self::map_bits(code >> self.n, img) << self.n
    }

    /// Pair-edge codes that are the least in their orbit.
    pub fn pair_codes(&self) -> Vec<u64> {
        let total = 1u64 << (2 * self.pairs.len());
        (0..total).filter(|&c| (0..self.perms.len()).all(|p| self.map_pairs(c, p) >= c)).collect()
    }

    /// Unit-edge codes that complete `pair_code` to a class representative.
    pub fn unit_codes(&self, pair_code: u64) -> Vec<u64> {
        let stabilizer: Vec<usize> =
            (0..self.perms.len()).filter(|&p| self.map_pairs(pair_code, p) == pair_code).collect();
        (0..1u64 << (2 * self.n)).filter(|&u| stabilizer.iter().all(|&p| self.map_units(u, p) >= u)).collect()
    }

    pub fn game(&self, pair_code: u64, unit_code: u64) -> Game {
        let m = self.pairs.len();
        let pair = |i: usize| VertexSet::singleton(self.pairs[i].0).with(self.pairs[i].1);
        let mut blue = Vec::new();
        let mut red = Vec::new();
        for v in 0..self.n {
            if unit_code >> v & 1 == 1 {
                blue.push(VertexSet::singleton(v));
            }
            if unit_code >> (self.n + v) & 1 == 1 {
                red.push(VertexSet::singleton(v));
            }
        }
        for i in 0..m {
            if pair_code >> i & 1 == 1 {
                blue.push(pair(i));
            }
            if pair_code >> (m + i) & 1 == 1 {
                red.push(pair(i));
            }
        }
        Game::anonymous(self.n, blue, red).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: u64 = rng_for(7, 1).gen();
        let b: u64 = rng_for(7, 1).gen();
        let c: u64 = rng_for(7, 2).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn isomorphism_classes_of_small_games() {
        // labeled (2,2) games on 2 vertices: 64; swapping the vertices
        // fixes 16 of them, so there are (64 + 16) / 2 = 40 classes
        let c = SmallGameClasses::new(2);
        let total: usize = c.pair_codes().iter().map(|&p| c.unit_codes(p).len()).sum();
        assert_eq!(total, 40);
        let c = SmallGameClasses::new(3);
        let total: usize = c.pair_codes().iter().map(|&p| c.unit_codes(p).len()).sum();
        assert_eq!(total, burnside(3));
    }

    /// Orbit count by Burnside's lemma: the average number of labeled games
    /// fixed by a permutation, where a permutation fixes 2^(2 * cycles) codes
    /// for the cycles it induces on units and on pairs.
    fn burnside(n: usize) -> usize {
        let verts: Vec<usize> = (0..n).collect();
        let mut sum = 0;
        let mut count = 0;
        permute(&verts, &mut |p: &[usize]| {
            count += 1;
            let cycles = |items: Vec<Vec<usize>>, img: &dyn Fn(&[usize]) -> Vec<usize>| {
                let mut seen = vec![false; items.len()];
                let mut c = 0;
                for i in 0..items.len() {
                    if seen[i] {
                        continue;
                    }
                    c += 1;
                    let mut j = i;
                    while !seen[j] {
                        seen[j] = true;
                        let mut next = img(&items[j]);
                        next.sort();
                        j = items.iter().position(|x| *x == next).unwrap();
                    }
                }
                c
            };
            let img = |x: &[usize]| x.iter().map(|&v| p[v]).collect::<Vec<_>>();
            let units: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
            let pairs: Vec<Vec<usize>> = (0..n).flat_map(|a| (a + 1..n).map(move |b| vec![a, b])).collect();
            sum += 1usize << (2 * (cycles(units, &img) + cycles(pairs, &img)));
        });
        sum / count
    }

    fn permute(items: &[usize], f: &mut dyn FnMut(&[usize])) {
        fn rec(cur: &mut Vec<usize>, rest: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
            if rest.is_empty() {
                f(cur);
                return;
            }
            for i in 0..rest.len() {
                let x = rest.remove(i);
                cur.push(x);
                rec(cur, rest, f);
                cur.pop();
                rest.insert(i, x);
            }
        }
        rec(&mut Vec::new(), &mut items.to_vec(), f);
    }

    #[test]
    fn enumeration_counts() {
        // 3 candidate edges on 2 vertices with size <= 2, two colors
        assert_eq!(all_games(2, 2).count(), 64);
        assert_eq!(all_games(1, 2).count(), 4);
    }

    #[test]
    fn shapes_are_respected() {
        let mut rng = rng_for(1, 0);
        let shape = GameShape::new(6, 3).sizes(3, 2);
        for _ in 0..200 {
            let g = random_game(&mut rng, &shape);
            assert!(g.num_vertices() <= 6);
            assert!(g.max_edge(crate::game::Player::Left) <= 3);
            assert!(g.max_edge(crate::game::Player::Right) <= 2);
        }
    }
}
