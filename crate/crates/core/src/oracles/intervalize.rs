use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{ColoredGraph, Event, IntervalModel};

/// Decides whether a coloured graph has an interval supergraph on which its
/// colouring stays proper, by searching event sequences. A vertex opens only
/// when no open vertex shares its colour and closes only once all its
/// neighbours have opened; two intervals meet iff both are open at once.
/// Closing is never harmful, so closable vertices close immediately and
/// only the choice of the next vertex to open branches. `budget` caps the
/// number of visited states.
pub fn intervalize_exact(cg: &ColoredGraph, budget: u64) -> Result<Option<IntervalModel>> {
    let g = cg.graph();
    let n = g.n();
    if n > 64 {
        return Err(Error::BudgetExceeded {
            budget: 64,
            unit: "vertices",
        });
    }
    let nbrs: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0, |m, &u| m | 1 << u))
        .collect();
    let mut s = Sweep {
        colours: cg.colours(),
        nbrs,
        n,
        failed: HashSet::new(),
        events: Vec::new(),
        steps: 0,
        budget,
    };
    if s.go(0, 0)? {
        Ok(Some(
            IntervalModel::from_events(n, &s.events).expect("accepted sequences are complete"),
        ))
    } else {
        Ok(None)
    }
}

struct Sweep<'a> {
    colours: &'a [usize],
    nbrs: Vec<u64>,
    n: usize,
    failed: HashSet<(u64, u64)>,
    events: Vec<Event>,
    steps: u64,
    budget: u64,
}

impl Sweep<'_> {
    fn go(&mut self, mut closed: u64, mut open: u64) -> Result<bool> {
        self.steps += 1;
        if self.steps > self.budget {
            return Err(Error::BudgetExceeded {
                budget: self.budget,
                unit: "states",
            });
        }
        let mark = self.events.len();
        loop {
            let opened = closed | open;
            let Some(v) = (0..self.n).find(|&v| open >> v & 1 == 1 && self.nbrs[v] & !opened == 0)
            else {
                break;
            };
            open &= !(1 << v);
            closed |= 1 << v;
            self.events.push(Event::Close(v));
        }
        let all = if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        };
        if closed == all {
            return Ok(true);
        }
        if !self.failed.contains(&(closed, open)) {
            for v in 0..self.n {
                let fresh = (closed | open) >> v & 1 == 0;
                let clash =
                    (0..self.n).any(|u| open >> u & 1 == 1 && self.colours[u] == self.colours[v]);
                if !fresh || clash {
                    continue;
                }
                self.events.push(Event::Open(v));
                if self.go(closed, open | 1 << v)? {
                    return Ok(true);
                }
                self.events.pop();
            }
            self.failed.insert((closed, open));
        }
        self.events.truncate(mark);
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{validate_interval_model, Graph};

    fn run(g: Graph, colours: Vec<usize>) -> Option<IntervalModel> {
        let cg = ColoredGraph::new(g, colours).unwrap();
        let m = intervalize_exact(&cg, 1_000_000).unwrap();
        if let Some(m) = &m {
            assert_eq!(validate_interval_model(&cg, m), Ok(()));
        }
        m
    }

    #[test]
    fn small_cases() {
        assert!(run(Graph::new(1), vec![1]).is_some());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(run(star, vec![1, 2, 2, 2]).is_some());
        assert!(run(Graph::cycle(4), vec![1, 2, 1, 2]).is_none());
        assert!(run(Graph::cycle(4), vec![1, 2, 3, 2]).is_some());
        // Colour-2 children of a colour-1 centre, each with a colour-1 leaf:
        // a leaf must stick out past the centre, and only two children can
        // reach its two ends.
        let spider = |legs: usize| {
            let edges: Vec<(usize, usize)> = (0..legs)
                .flat_map(|k| [(0, 1 + 2 * k), (1 + 2 * k, 2 + 2 * k)])
                .collect();
            let colours = (0..=2 * legs)
                .map(|v| if v % 2 == 1 { 2 } else { 1 })
                .collect();
            (Graph::from_edges(2 * legs + 1, &edges).unwrap(), colours)
        };
        let (g, c) = spider(2);
        assert!(run(g, c).is_some());
        let (g, c) = spider(3);
        assert!(run(g, c).is_none());
    }

    #[test]
    fn budget_is_reported() {
        let cg = ColoredGraph::new(Graph::path(10), (0..10).map(|v| v % 2 + 1).collect()).unwrap();
        assert!(matches!(
            intervalize_exact(&cg, 2),
            Err(Error::BudgetExceeded { budget: 2, .. })
        ));
    }
}
