mod common;

use apg_core::hypergraph::{antichain, minimal_transversals, TRANSVERSAL_LIMIT};
use apg_core::outcome::union_cell;
use apg_core::simplify::twin_reduce;
use apg_core::{disjoint_union, leq_l, parse_apg, write_apg, Game, Outcome, Player, Solver, VertexSet};
use proptest::prelude::*;

fn edges(n: usize, max: usize) -> impl Strategy<Value = Vec<VertexSet>> {
    let full = (1u128 << n) - 1;
    prop::collection::vec(1u128..=full, 0..max).prop_map(|v| v.into_iter().map(VertexSet).collect())
}

/// Games on 1..=`max_n` vertices with edges of any size.
fn game(max_n: usize) -> impl Strategy<Value = Game> {
    (1..=max_n).prop_flat_map(|n| {
        (edges(n, 5), edges(n, 5)).prop_map(move |(b, r)| Game::anonymous(n, b, r).expect("edges in range"))
    })
}

fn picks(n: usize) -> impl Strategy<Value = (VertexSet, VertexSet)> {
    prop::collection::vec(0u8..3, n).prop_map(|owner| {
        let mut l = VertexSet::EMPTY;
        let mut r = VertexSet::EMPTY;
        for (v, o) in owner.into_iter().enumerate() {
            match o {
                1 => l.insert(v),
                2 => r.insert(v),
                _ => {}
            }
        }
        (l, r)
    })
}

fn names(g: &Game, set: VertexSet) -> Vec<&str> {
    g.names_of(set)
}

proptest! {
    #[test]
    fn apg_text_round_trips(g in game(8)) {
        prop_assert_eq!(parse_apg(&write_apg(&g)).unwrap(), g);
    }

    #[test]
    fn updates_compose(
        (g, (l1, r1), (l2, r2)) in game(7).prop_flat_map(|g| {
            let n = g.num_vertices();
            (Just(g), picks(n), picks(n))
        })
    ) {
        // the second batch only uses vertices the first left free
        let l2 = l2.difference(l1.union(r1));
        let r2 = r2.difference(l1.union(r1));
        let direct = g.update(l1.union(l2), r1.union(r2));
        let stepwise = g.update(l1, r1).and_then(|h| h.update_named(&names(&g, l2), &names(&g, r2)));
        // a fill at either step is a fill of the combined picks
        prop_assert_eq!(direct.is_ok(), stepwise.is_ok());
        if let (Ok(a), Ok(b)) = (&direct, &stepwise) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn swapping_colors_swaps_the_outcome(g in game(6)) {
        let mut s = Solver::default();
        let sw = g.swap_colors();
        prop_assert_eq!(sw.swap_colors(), g.clone());
        prop_assert_eq!(s.outcome(&sw).unwrap(), s.outcome(&g).unwrap().swapped());
    }

    #[test]
    fn a_drawn_component_changes_nothing(g in game(5), pad in 0usize..4) {
        let idle = Game::anonymous(pad, vec![], vec![]).unwrap();
        let (u, _) = disjoint_union(&g, &idle).unwrap();
        let mut s = Solver::default();
        prop_assert_eq!(s.outcome(&u).unwrap(), s.outcome(&g).unwrap());
    }

    #[test]
    fn solver_matches_exhaustive_play(g in game(6)) {
        prop_assert_eq!(Solver::default().outcome(&g).unwrap(), common::naive_outcome(&g));
    }

    #[test]
    fn twin_reduction_keeps_the_outcome(g in game(7)) {
        let (h, steps) = twin_reduce(&g);
        prop_assert_eq!(h.num_vertices() + 2 * steps.len(), g.num_vertices());
        let mut s = Solver::default();
        prop_assert_eq!(s.outcome(&h).unwrap(), s.outcome(&g).unwrap());
    }

    #[test]
    fn delay_is_finite_exactly_for_first_player_wins(g in game(6)) {
        let mut s = Solver::default();
        for p in [Player::Left, Player::Right] {
            let wins = s.solve(&g, p).unwrap().is_win_for(p);
            prop_assert_eq!(s.delay(&g, p).unwrap().is_finite(), wins);
        }
    }

    #[test]
    fn transversals_are_minimal_and_hitting(n in 1usize..7, es in edges(6, 6)) {
        let all = VertexSet::full(n);
        let es: Vec<VertexSet> = es.into_iter().map(|e| e.intersection(all)).filter(|e| !e.is_empty()).collect();
        let tr = minimal_transversals(n, &es, TRANSVERSAL_LIMIT).unwrap();
        prop_assert_eq!(antichain(&tr).len(), tr.len());
        for t in &tr {
            prop_assert!(es.iter().all(|e| e.intersects(*t)));
            for v in t.iter() {
                let smaller = t.without(v);
                prop_assert!(!es.iter().all(|e| e.intersects(smaller)));
            }
        }
        if !es.is_empty() {
            let mut back = minimal_transversals(n, &tr, TRANSVERSAL_LIMIT).unwrap();
            let mut want = antichain(&es);
            back.sort();
            want.sort();
            prop_assert_eq!(back, want);
        }
    }
}

#[test]
fn left_order_is_a_partial_order() {
    for a in Outcome::ALL {
        assert!(leq_l(a, a));
        for b in Outcome::ALL {
            if leq_l(a, b) && leq_l(b, a) {
                assert_eq!(a, b);
            }
            for c in Outcome::ALL {
                if leq_l(a, b) && leq_l(b, c) {
                    assert!(leq_l(a, c), "{a} {b} {c}");
                }
            }
        }
    }
    assert!(leq_l(Outcome::R, Outcome::L));
    assert!(!leq_l(Outcome::N, Outcome::D) && !leq_l(Outcome::D, Outcome::N));
}

#[test]
fn union_table_respects_symmetry() {
    let sorted = |v: &[Outcome]| {
        let mut v = v.to_vec();
        v.sort_by_key(|o| o.symbol());
        v
    };
    for a in Outcome::ALL {
        for b in Outcome::ALL {
            assert_eq!(sorted(union_cell(a, b)), sorted(union_cell(b, a)), "{a} {b}");
            let swapped: Vec<Outcome> = union_cell(a, b).iter().map(|o| o.swapped()).collect();
            assert_eq!(sorted(&swapped), sorted(union_cell(a.swapped(), b.swapped())), "{a} {b}");
        }
    }
}
