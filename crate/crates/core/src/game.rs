//! Games, positions and the edge-update algebra.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::GameError;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    #[inline]
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Player::Left => "Left",
            Player::Right => "Right",
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An achievement positional game: a vertex set with blue edges (Left's
/// winning sets) and red edges (Right's winning sets).
///
/// Edges are kept sorted and deduplicated, so two games built from the same
/// data in any order compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Game {
    names: Vec<String>,
    blue: Vec<VertexSet>,
    red: Vec<VertexSet>,
}

fn check_name(name: &str) -> Result<(), GameError> {
    if name.is_empty() || name.chars().any(char::is_whitespace) {
        return Err(GameError::InvalidName(name.to_string()));
    }
    Ok(())
}

fn canonical_edges(mut edges: Vec<VertexSet>) -> Vec<VertexSet> {
    edges.sort_unstable();
    edges.dedup();
    edges
}

impl Game {
    /// Builds a game from vertex names and edges given as name lists.
    pub fn new(vertices: Vec<String>, blue: Vec<Vec<String>>, red: Vec<Vec<String>>) -> Result<Game, GameError> {
        let index = Self::index_names(&vertices)?;
        let resolve = |edges: Vec<Vec<String>>, offset: usize| -> Result<Vec<VertexSet>, GameError> {
            edges
                .into_iter()
                .enumerate()
                .map(|(i, e)| {
                    if e.is_empty() {
                        return Err(GameError::EmptyEdge(offset + i));
                    }
                    e.iter()
                        .map(|n| index.get(n.as_str()).copied().ok_or_else(|| GameError::UnknownVertex(n.clone())))
                        .collect::<Result<VertexSet, _>>()
                })
                .collect()
        };
        let nblue = blue.len();
        let blue = resolve(blue, 0)?;
        let red = resolve(red, nblue)?;
        Ok(Game { names: vertices, blue: canonical_edges(blue), red: canonical_edges(red) })
    }

    /// Convenience constructor for literals in tests and gadgets.
    pub fn from_names(vertices: &[&str], blue: &[&[&str]], red: &[&[&str]]) -> Result<Game, GameError> {
        let own = |es: &[&[&str]]| es.iter().map(|e| e.iter().map(|s| s.to_string()).collect()).collect();
        Game::new(vertices.iter().map(|s| s.to_string()).collect(), own(blue), own(red))
    }

    /// Builds a game from vertex names and edges given as index sets.
    pub fn from_sets(names: Vec<String>, blue: Vec<VertexSet>, red: Vec<VertexSet>) -> Result<Game, GameError> {
        Self::index_names(&names)?;
        let all = VertexSet::full(names.len());
        for (i, e) in blue.iter().chain(red.iter()).enumerate() {
            if e.is_empty() {
                return Err(GameError::EmptyEdge(i));
            }
            if !e.is_subset(all) {
                let v = e.difference(all).first().unwrap_or(0);
                return Err(GameError::VertexOutOfRange(v));
            }
        }
        Ok(Game { names, blue: canonical_edges(blue), red: canonical_edges(red) })
    }

    /// A game on `n` vertices named `v0 .. v{n-1}`.
    pub fn anonymous(n: usize, blue: Vec<VertexSet>, red: Vec<VertexSet>) -> Result<Game, GameError> {
        Game::from_sets((0..n).map(|i| format!("v{i}")).collect(), blue, red)
    }

    pub fn empty() -> Game {
        Game { names: Vec::new(), blue: Vec::new(), red: Vec::new() }
    }

    fn index_names(names: &[String]) -> Result<HashMap<&str, usize>, GameError> {
        if names.len() > MAX_VERTICES {
            return Err(GameError::TooManyVertices(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            check_name(n)?;
            if index.insert(n.as_str(), i).is_some() {
                return Err(GameError::DuplicateVertex(n.clone()));
            }
        }
        Ok(index)
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.names.len())
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolves a list of vertex names into a set.
    pub fn set_of(&self, names: &[&str]) -> Result<VertexSet, GameError> {
        names.iter().map(|n| self.index_of(n).ok_or_else(|| GameError::UnknownVertex(n.to_string()))).collect()
    }

    pub fn blue(&self) -> &[VertexSet] {
        &self.blue
    }

    pub fn red(&self) -> &[VertexSet] {
        &self.red
    }

    /// The winning sets of `player`.
    pub fn edges(&self, player: Player) -> &[VertexSet] {
        match player {
            Player::Left => &self.blue,
            Player::Right => &self.red,
        }
    }

    /// Largest edge size of either color (0 for an edgeless game).
    pub fn rank(&self) -> usize {
        self.blue.iter().chain(&self.red).map(|e| e.len()).max().unwrap_or(0)
    }

    pub fn max_edge(&self, player: Player) -> usize {
        self.edges(player).iter().map(|e| e.len()).max().unwrap_or(0)
    }

    /// The same board with colors exchanged.
    pub fn swap_colors(&self) -> Game {
        Game { names: self.names.clone(), blue: self.red.clone(), red: self.blue.clone() }
    }

    /// Names of the members of `set`, in index order.
    pub fn names_of(&self, set: VertexSet) -> Vec<&str> {
        set.iter().map(|v| self.names[v].as_str()).collect()
    }

    /// Drops edges that contain another edge of the same color. Returns the
    /// pruned game and the removed edges; the outcome is unchanged because a
    /// superset edge can never be filled before its subset.
    pub fn prune_supersets(&self) -> (Game, Vec<(Player, VertexSet)>) {
        let mut removed = Vec::new();
        let mut keep = |edges: &[VertexSet], owner: Player| -> Vec<VertexSet> {
            edges
                .iter()
                .copied()
                .filter(|&e| {
                    let dominated = edges.iter().any(|&f| f != e && f.is_subset(e));
                    if dominated {
                        removed.push((owner, e));
                    }
                    !dominated
                })
                .collect()
        };
        let blue = keep(&self.blue, Player::Left);
        let red = keep(&self.red, Player::Right);
        (Game { names: self.names.clone(), blue, red }, removed)
    }

    /// Restricts the game to `keep`, renumbering surviving vertices in order.
    /// Edges must already lie inside `keep`.
    fn compact(&self, keep: VertexSet, blue: Vec<VertexSet>, red: Vec<VertexSet>) -> Game {
        let mut map = vec![usize::MAX; self.names.len()];
        let mut names = Vec::with_capacity(keep.len());
        for v in keep.iter() {
            map[v] = names.len();
            names.push(self.names[v].clone());
        }
        let remap = |e: VertexSet| -> VertexSet { e.iter().map(|v| map[v]).collect() };
        Game {
            names,
            blue: canonical_edges(blue.into_iter().map(remap).collect()),
            red: canonical_edges(red.into_iter().map(remap).collect()),
        }
    }

    /// The updated game after Left picked `left` and Right picked `right`.
    pub fn update(&self, left: VertexSet, right: VertexSet) -> Result<Game, GameError> {
        if left.intersects(right) {
            return Err(GameError::OverlappingPicks);
        }
        let all = self.vertex_set();
        if let Some(v) = left.union(right).difference(all).first() {
            return Err(GameError::VertexOutOfRange(v));
        }
        let blue = updated_edges(&self.blue, left, right);
        let red = updated_edges(&self.red, right, left);
        match (blue, red) {
            (Ok(blue), Ok(red)) => Ok(self.compact(all.difference(left.union(right)), blue, red)),
            (Err(_), Err(_)) => Err(GameError::BothFilled),
            (Err(_), _) => Err(GameError::AlreadyWon(Player::Left)),
            (_, Err(_)) => Err(GameError::AlreadyWon(Player::Right)),
        }
    }

    /// `update` with picks given by name.
    pub fn update_named(&self, left: &[&str], right: &[&str]) -> Result<Game, GameError> {
        self.update(self.set_of(left)?, self.set_of(right)?)
    }

    /// Removes vertices in `dead` together with every edge touching them.
    /// Used by reductions that delete whole structures.
    pub fn delete_vertices(&self, dead: VertexSet) -> Game {
        let blue = self.blue.iter().copied().filter(|e| !e.intersects(dead)).collect();
        let red = self.red.iter().copied().filter(|e| !e.intersects(dead)).collect();
        self.compact(self.vertex_set().difference(dead), blue, red)
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_edges = |es: &[VertexSet]| -> Vec<Vec<&str>> { es.iter().map(|&e| self.names_of(e)).collect() };
        f.debug_struct("Game")
            .field("vertices", &self.names)
            .field("blue", &fmt_edges(&self.blue))
            .field("red", &fmt_edges(&self.red))
            .finish()
    }
}

/// Returned by [`updated_edges`] when an edge has been completely picked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeFilled(pub VertexSet);

/// Drops every edge meeting `kill`, then removes `owned` from the survivors.
pub fn updated_edges(edges: &[VertexSet], owned: VertexSet, kill: VertexSet) -> Result<Vec<VertexSet>, EdgeFilled> {
    let mut out = Vec::with_capacity(edges.len());
    for &e in edges {
        if e.intersects(kill) {
            continue;
        }
        let rest = e.difference(owned);
        if rest.is_empty() {
            return Err(EdgeFilled(e));
        }
        out.push(rest);
    }
    Ok(canonical_edges(out))
}

/// Vertex renames applied to the second operand of [`disjoint_union`].
pub type RenameMap = Vec<(String, String)>;

/// Disjoint union. Names of `other` that collide with names of `g` get a
/// `#2`, `#3`, ... suffix; the renames are returned.
pub fn disjoint_union(g: &Game, other: &Game) -> Result<(Game, RenameMap), GameError> {
    let n = g.num_vertices();
    if n + other.num_vertices() > MAX_VERTICES {
        return Err(GameError::TooManyVertices(n + other.num_vertices()));
    }
    let mut taken: HashSet<String> = g.names.iter().cloned().collect();
    taken.extend(other.names.iter().cloned());
    let mut renames = Vec::new();
    let mut names = g.names.clone();
    let mut own: HashSet<&str> = g.names.iter().map(String::as_str).collect();
    for name in &other.names {
        if own.contains(name.as_str()) {
            let mut k = 2;
            let fresh = loop {
                let candidate = format!("{name}#{k}");
                if !taken.contains(&candidate) {
                    break candidate;
                }
                k += 1;
            };
            taken.insert(fresh.clone());
            renames.push((name.clone(), fresh.clone()));
            names.push(fresh);
        } else {
            names.push(name.clone());
        }
        own.insert(name.as_str());
    }
    let shift = |e: &VertexSet| VertexSet(e.0 << n);
    let blue = g.blue.iter().copied().chain(other.blue.iter().map(shift)).collect();
    let red = g.red.iter().copied().chain(other.red.iter().map(shift)).collect();
    Ok((Game { names, blue: canonical_edges(blue), red: canonical_edges(red) }, renames))
}

/// Terminal status of a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ongoing,
    Won(Player),
    Draw,
}

/// A game in progress: the original game plus both players' picks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Position {
    game: Game,
    picked_left: VertexSet,
    picked_right: VertexSet,
    to_move: Player,
}

impl Position {
    pub fn start(game: Game, first: Player) -> Position {
        Position { game, picked_left: VertexSet::EMPTY, picked_right: VertexSet::EMPTY, to_move: first }
    }

    /// Builds a position from pick sets. Rejects overlapping picks, counts
    /// that do not match `to_move`, and positions where both players have
    /// filled an edge.
    pub fn new(
        game: Game,
        picked_left: VertexSet,
        picked_right: VertexSet,
        to_move: Player,
    ) -> Result<Position, GameError> {
        if picked_left.intersects(picked_right) {
            return Err(GameError::OverlappingPicks);
        }
        if let Some(v) = picked_left.union(picked_right).difference(game.vertex_set()).first() {
            return Err(GameError::VertexOutOfRange(v));
        }
        let diff = picked_left.len() as isize - picked_right.len() as isize;
        let ok = match diff {
            0 => true,
            1 => to_move == Player::Right,
            -1 => to_move == Player::Left,
            _ => false,
        };
        if !ok {
            return Err(GameError::TurnMismatch);
        }
        let pos = Position { game, picked_left, picked_right, to_move };
        if pos.filled(Player::Left) && pos.filled(Player::Right) {
            return Err(GameError::BothFilled);
        }
        Ok(pos)
    }

    pub fn game(&self) -> &Game {
        &self.game
    }

    pub fn picked(&self, player: Player) -> VertexSet {
        match player {
            Player::Left => self.picked_left,
            Player::Right => self.picked_right,
        }
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn free(&self) -> VertexSet {
        self.game.vertex_set().difference(self.picked_left.union(self.picked_right))
    }

    fn filled(&self, player: Player) -> bool {
        let mine = self.picked(player);
        self.game.edges(player).iter().any(|e| e.is_subset(mine))
    }

    pub fn status(&self) -> Status {
        if self.filled(Player::Left) {
            Status::Won(Player::Left)
        } else if self.filled(Player::Right) {
            Status::Won(Player::Right)
        } else if self.free().is_empty() {
            Status::Draw
        } else {
            Status::Ongoing
        }
    }

    /// The player to move picks `v`.
    pub fn play(&mut self, v: usize) -> Result<Status, GameError> {
        if self.status() != Status::Ongoing {
            return Err(GameError::GameOver);
        }
        if v >= self.game.num_vertices() {
            return Err(GameError::VertexOutOfRange(v));
        }
        if !self.free().contains(v) {
            return Err(GameError::VertexTaken(v));
        }
        match self.to_move {
            Player::Left => self.picked_left.insert(v),
            Player::Right => self.picked_right.insert(v),
        }
        self.to_move = self.to_move.opponent();
        Ok(self.status())
    }

    pub fn play_named(&mut self, name: &str) -> Result<Status, GameError> {
        let v = self.game.index_of(name).ok_or_else(|| GameError::UnknownVertex(name.to_string()))?;
        self.play(v)
    }

    /// The normal form of an ongoing position.
    pub fn updated_game(&self) -> Result<Game, GameError> {
        self.game.update(self.picked_left, self.picked_right)
    }
}
