use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::ColoredGraph;
use crate::error::{ParseCode, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Event {
    Open(usize),
    Close(usize),
}

/// One closed interval `[l, r]` per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalModel {
    intervals: Vec<(i64, i64)>,
}

impl IntervalModel {
    pub fn new(intervals: Vec<(i64, i64)>) -> Self {
        IntervalModel { intervals }
    }

    /// Uses the position of each event in the sequence as its coordinate.
    /// Vertices that never open or close get `None` and are reported by the
    /// validator.
    pub fn from_events(n: usize, events: &[Event]) -> Result<Self, IntervalError> {
        let mut open = vec![None; n];
        let mut close = vec![None; n];
        for (x, e) in events.iter().enumerate() {
            let (slot, v) = match *e {
                Event::Open(v) => (&mut open, v),
                Event::Close(v) => (&mut close, v),
            };
            if v >= n {
                return Err(IntervalError::Missing(v));
            }
            if slot[v].replace(x as i64).is_some() {
                return Err(IntervalError::SharedEndpoint(v, v));
            }
        }
        let intervals = (0..n)
            .map(|v| match (open[v], close[v]) {
                (Some(l), Some(r)) => Ok((l, r)),
                _ => Err(IntervalError::Missing(v)),
            })
            .collect::<Result<_, _>>()?;
        Ok(IntervalModel { intervals })
    }

    /// One `l r` line per vertex, in vertex order.
    pub fn parse(text: &str) -> crate::error::Result<Self> {
        let mut intervals = Vec::new();
        for (k, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums: Vec<i64> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse().map_err(|_| {
                        ParseError::new(ParseCode::Token, k + 1, format!("bad endpoint {tok:?}"))
                    })
                })
                .collect::<Result<_, _>>()?;
            let [l, r] = nums[..] else {
                return Err(ParseError::new(ParseCode::Arity, k + 1, "expected `l r`").into());
            };
            intervals.push((l, r));
        }
        Ok(IntervalModel { intervals })
    }

    pub fn intervals(&self) -> &[(i64, i64)] {
        &self.intervals
    }

    pub fn interval(&self, v: usize) -> (i64, i64) {
        self.intervals[v]
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intersects(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.intervals[u], self.intervals[v]);
        a.0.max(b.0) <= a.1.min(b.1)
    }

    /// `u` lies strictly inside `v`.
    pub fn strictly_inside(&self, u: usize, v: usize) -> bool {
        let (a, b) = (self.intervals[u], self.intervals[v]);
        b.0 < a.0 && a.1 < b.1
    }

    /// The event sequence that reproduces the endpoint order.
    pub fn events(&self) -> Vec<Event> {
        let mut pts: Vec<(i64, Event)> = Vec::with_capacity(2 * self.len());
        for (v, &(l, r)) in self.intervals.iter().enumerate() {
            pts.push((l, Event::Open(v)));
            pts.push((r, Event::Close(v)));
        }
        pts.sort_by_key(|&(x, e)| (x, matches!(e, Event::Close(_))));
        pts.into_iter().map(|(_, e)| e).collect()
    }
}

impl fmt::Display for IntervalModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (l, r) in &self.intervals {
            writeln!(f, "{l} {r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntervalError {
    #[error("vertex {0} has no interval")]
    Missing(usize),
    #[error("interval of vertex {0} does not have l < r")]
    Degenerate(usize),
    #[error("vertices {0} and {1} share an endpoint")]
    SharedEndpoint(usize, usize),
    #[error("edge ({0}, {1}) joins disjoint intervals")]
    EdgeApart(usize, usize),
    #[error("vertices {0} and {1} share colour {2} and their intervals meet")]
    ColourClash(usize, usize, usize),
}

/// Checks that the model is an interval supergraph of `g` in which no two
/// intervals of the same colour meet, with `2n` distinct endpoints.
pub fn validate_interval_model(
    g: &ColoredGraph,
    model: &IntervalModel,
) -> Result<(), IntervalError> {
    let n = g.graph().n();
    if model.len() < n {
        return Err(IntervalError::Missing(model.len()));
    }
    let mut owner: HashMap<i64, usize> = HashMap::with_capacity(2 * n);
    for v in 0..n {
        let (l, r) = model.interval(v);
        if l >= r {
            return Err(IntervalError::Degenerate(v));
        }
        for x in [l, r] {
            if let Some(u) = owner.insert(x, v) {
                return Err(IntervalError::SharedEndpoint(u, v));
            }
        }
    }
    for (u, v) in g.graph().edges() {
        if !model.intersects(u, v) {
            return Err(IntervalError::EdgeApart(u, v));
        }
    }
    // Sweep: at most one open interval per colour.
    let mut open_of: HashMap<usize, usize> = HashMap::new();
    for e in IntervalModel::new(model.intervals[..n].to_vec()).events() {
        match e {
            Event::Open(v) => {
                let c = g.colour(v);
                if let Some(u) = open_of.insert(c, v) {
                    return Err(IntervalError::ColourClash(u.min(v), u.max(v), c));
                }
            }
            Event::Close(v) => {
                open_of.remove(&g.colour(v));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn coloured(n: usize, edges: &[(usize, usize)], colours: &[usize]) -> ColoredGraph {
        ColoredGraph::new(Graph::from_edges(n, edges).unwrap(), colours.to_vec()).unwrap()
    }

    #[test]
    fn path_with_alternating_colours() {
        let g = coloured(3, &[(0, 1), (1, 2)], &[1, 2, 1]);
        let m = IntervalModel::new(vec![(0, 2), (1, 4), (3, 5)]);
        assert_eq!(validate_interval_model(&g, &m), Ok(()));
        let apart = IntervalModel::new(vec![(0, 1), (2, 4), (3, 5)]);
        assert_eq!(
            validate_interval_model(&g, &apart),
            Err(IntervalError::EdgeApart(0, 1))
        );
        let clash = IntervalModel::new(vec![(0, 3), (1, 5), (2, 4)]);
        assert_eq!(
            validate_interval_model(&g, &clash),
            Err(IntervalError::ColourClash(0, 2, 1))
        );
    }

    #[test]
    fn endpoint_rules() {
        let g = coloured(2, &[(0, 1)], &[1, 2]);
        assert_eq!(
            validate_interval_model(&g, &IntervalModel::new(vec![(0, 2), (2, 3)])),
            Err(IntervalError::SharedEndpoint(0, 1))
        );
        assert_eq!(
            validate_interval_model(&g, &IntervalModel::new(vec![(1, 1), (0, 3)])),
            Err(IntervalError::Degenerate(0))
        );
        assert_eq!(
            validate_interval_model(&g, &IntervalModel::new(vec![(0, 2)])),
            Err(IntervalError::Missing(1))
        );
    }

    #[test]
    fn events_round_trip() {
        use Event::*;
        let ev = [Open(1), Open(0), Close(1), Open(2), Close(0), Close(2)];
        let m = IntervalModel::from_events(3, &ev).unwrap();
        assert_eq!(m.intervals(), &[(1, 4), (0, 2), (3, 5)]);
        assert_eq!(m.events(), ev);
        assert!(m.intersects(0, 2) && !m.intersects(1, 2));
        assert!(!m.strictly_inside(0, 1));
        assert_eq!(
            IntervalModel::from_events(2, &[Open(0), Close(0)]),
            Err(IntervalError::Missing(1))
        );
    }
}
