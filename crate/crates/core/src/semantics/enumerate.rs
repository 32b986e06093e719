use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::conditions::holds_at;
use super::{Frame, FrameCondition, FrameKind, Neighbourhood, SRelation, WorldSet};

/// Strict partial orders on `n` labeled worlds, as successor sets.
fn strict_orders(n: usize) -> Vec<Vec<WorldSet>> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for code in 0u64..(1u64 << pairs.len()) {
        let mut succ = vec![WorldSet::empty(); n];
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if code >> i & 1 == 1 {
                succ[a].insert(b);
            }
        }
        let transitive = (0..n).all(|a| succ[a].iter().all(|b| succ[b].is_subset(&succ[a])));
        let irreflexive = (0..n).all(|a| !succ[a].contains(a));
        if transitive && irreflexive {
            out.push(succ);
        }
    }
    out
}

/// Antichains of nonempty subsets of `{0..n}`, including the empty one.
fn antichains(n: usize) -> Vec<Vec<WorldSet>> {
    let subsets: Vec<u64> = (1u64..(1u64 << n)).collect();
    let mut out = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    fn go(i: usize, subsets: &[u64], current: &mut Vec<u64>, out: &mut Vec<Vec<WorldSet>>) {
        if i == subsets.len() {
            out.push(current.iter().map(|&m| WorldSet::from_mask(m)).collect());
            return;
        }
        go(i + 1, subsets, current, out);
        let s = subsets[i];
        if current.iter().all(|&c| c & s != c && c & s != s) {
            current.push(s);
            go(i + 1, subsets, current, out);
            current.pop();
        }
    }
    go(0, &subsets, &mut current, &mut out);
    out
}

/// All assignments of a value from `choices` to each slot in `slots`.
fn product<T: Clone>(slots: usize, choices: &[T]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..slots {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    out
}

fn names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("w{i}")).collect()
}

/// For a fixed `R`, the admissible `S_w` rows at each world.
fn local_options(n: usize, kind: FrameKind, succ: &[WorldSet], conds: &[FrameCondition]) -> Vec<Vec<SRow>> {
    let subsets: Vec<WorldSet> = (0u64..(1u64 << n)).map(WorldSet::from_mask).collect();
    let families: Vec<Neighbourhood> = if kind == FrameKind::Verbrugge {
        antichains(n).into_iter().map(Neighbourhood::Generators).collect()
    } else {
        Vec::new()
    };
    (0..n)
        .map(|w| {
            let xs: Vec<usize> = succ[w].iter().collect();
            let rows: Vec<SRow> = match kind {
                FrameKind::Veltman => product(xs.len(), &subsets)
                    .into_iter()
                    .map(|pick| {
                        let mut row = vec![WorldSet::empty(); n];
                        for (x, ys) in xs.iter().zip(pick) {
                            row[*x] = ys;
                        }
                        SRow::Veltman(row)
                    })
                    .collect(),
                FrameKind::Verbrugge => product(xs.len(), &families)
                    .into_iter()
                    .map(|pick| {
                        let mut row = vec![Neighbourhood::default(); n];
                        for (x, f) in xs.iter().zip(pick) {
                            row[*x] = f;
                        }
                        SRow::Verbrugge(row)
                    })
                    .collect(),
            };
            rows.into_iter()
                .filter(|row| {
                    if conds.is_empty() {
                        return true;
                    }
                    let probe = assemble(n, succ, w, row);
                    conds
                        .iter()
                        .all(|&c| holds_at(&probe, w, c).expect("kinds agree"))
                })
                .collect()
        })
        .collect()
}

#[derive(Clone)]
enum SRow {
    Veltman(Vec<WorldSet>),
    Verbrugge(Vec<Neighbourhood>),
}

/// A frame whose only nonempty `S` row is `row` at `w`.
fn assemble(n: usize, succ: &[WorldSet], w: usize, row: &SRow) -> Frame {
    let s = match row {
        SRow::Veltman(r) => {
            let mut rows = vec![vec![WorldSet::empty(); n]; n];
            rows[w] = r.clone();
            SRelation::Veltman(rows)
        }
        SRow::Verbrugge(r) => {
            let mut rows = vec![vec![Neighbourhood::default(); n]; n];
            rows[w] = r.clone();
            SRelation::Verbrugge(rows)
        }
    };
    Frame::new_unchecked(names(n), succ.to_vec(), s)
}

/// Lazily yields every frame of one kind on `n` labeled worlds satisfying
/// the given conditions. Worlds are named `w0, w1, ..`.
pub struct FrameStream {
    n: usize,
    kind: FrameKind,
    conds: Vec<FrameCondition>,
    orders: Vec<Vec<WorldSet>>,
    order_ix: usize,
    options: Vec<Vec<SRow>>,
    odometer: Option<Vec<usize>>,
}

impl FrameStream {
    fn load_order(&mut self) {
        while self.order_ix < self.orders.len() {
            self.options = local_options(self.n, self.kind, &self.orders[self.order_ix], &self.conds);
            if self.options.iter().all(|o| !o.is_empty()) {
                self.odometer = Some(vec![0; self.n]);
                return;
            }
            self.order_ix += 1;
        }
        self.odometer = None;
    }

    fn advance(&mut self) {
        if let Some(odo) = &mut self.odometer {
            for i in 0..odo.len() {
                odo[i] += 1;
                if odo[i] < self.options[i].len() {
                    return;
                }
                odo[i] = 0;
            }
        }
        self.order_ix += 1;
        self.load_order();
    }
}

impl Iterator for FrameStream {
    type Item = Frame;

    fn next(&mut self) -> Option<Frame> {
        let odo = self.odometer.as_ref()?;
        let n = self.n;
        let s = match self.kind {
            FrameKind::Veltman => SRelation::Veltman(
                (0..n)
                    .map(|w| match &self.options[w][odo[w]] {
                        SRow::Veltman(r) => r.clone(),
                        SRow::Verbrugge(_) => unreachable!(),
                    })
                    .collect(),
            ),
            FrameKind::Verbrugge => SRelation::Verbrugge(
                (0..n)
                    .map(|w| match &self.options[w][odo[w]] {
                        SRow::Verbrugge(r) => r.clone(),
                        SRow::Veltman(_) => unreachable!(),
                    })
                    .collect(),
            ),
        };
        let frame = Frame::new_unchecked(names(n), self.orders[self.order_ix].clone(), s);
        self.advance();
        Some(frame)
    }
}

/// Every frame on `n ≥ 1` labeled worlds of the given kind satisfying all
/// of `conditions`. Conditions of the other kind are ignored.
/// Verbrugge families are produced as antichains of generators.
pub fn enumerate_frames(n: usize, kind: FrameKind, conditions: &[FrameCondition]) -> FrameStream {
    let mut conds: Vec<FrameCondition> = conditions.iter().copied().filter(|c| c.kind() == kind).collect();
    conds.sort();
    conds.dedup();
    let mut stream = FrameStream {
        n,
        kind,
        conds,
        orders: if n == 0 { Vec::new() } else { strict_orders(n) },
        order_ix: 0,
        options: Vec::new(),
        odometer: None,
    };
    stream.load_order();
    stream
}

pub fn count_frames(n: usize, kind: FrameKind, conditions: &[FrameCondition]) -> usize {
    enumerate_frames(n, kind, conditions).count()
}

type CacheKey = (usize, FrameKind, Vec<FrameCondition>);

/// All frames with `1..=max_worlds` worlds meeting the conditions, memoized
/// per process.
pub fn frames_up_to(max_worlds: usize, kind: FrameKind, conditions: &[FrameCondition]) -> Arc<Vec<Frame>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<Vec<Frame>>>>> = OnceLock::new();
    let mut conds: Vec<FrameCondition> = conditions.iter().copied().filter(|c| c.kind() == kind).collect();
    conds.sort();
    conds.dedup();
    let key = (max_worlds, kind, conds.clone());
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.lock().expect("cache lock").get(&key) {
        return hit.clone();
    }
    let frames: Vec<Frame> = (1..=max_worlds).flat_map(|n| enumerate_frames(n, kind, &conds)).collect();
    let frames = Arc::new(frames);
    cache.lock().expect("cache lock").insert(key, frames.clone());
    frames
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::check_condition;

    #[test]
    fn small_counts() {
        assert_eq!(count_frames(1, FrameKind::Veltman, &[]), 1);
        assert_eq!(count_frames(2, FrameKind::Veltman, &[]), 9);
        assert_eq!(count_frames(3, FrameKind::Veltman, &[]), 3505);
        assert_eq!(count_frames(1, FrameKind::Verbrugge, &[]), 1);
        assert_eq!(count_frames(2, FrameKind::Verbrugge, &[]), 11);
        assert_eq!(strict_orders(3).len(), 19);
        assert_eq!(strict_orders(4).len(), 219);
        assert_eq!(antichains(3).len(), 19);
    }

    #[test]
    fn filtered_frames_meet_conditions() {
        let conds = [FrameCondition::FcJ1, FrameCondition::FcJ5];
        let all = enumerate_frames(3, FrameKind::Veltman, &[]);
        let expected = all
            .filter(|f| conds.iter().all(|&c| check_condition(f, c).unwrap()))
            .count();
        let got: Vec<Frame> = enumerate_frames(3, FrameKind::Veltman, &conds).collect();
        assert_eq!(got.len(), expected);
        assert!(got.iter().all(|f| conds.iter().all(|&c| check_condition(f, c).unwrap())));
    }

    #[test]
    fn cache_returns_shared_catalog() {
        let a = frames_up_to(2, FrameKind::Veltman, &[FrameCondition::FcJ1]);
        let b = frames_up_to(2, FrameKind::Veltman, &[FrameCondition::FcJ1, FrameCondition::FcJ1]);
        assert!(Arc::ptr_eq(&a, &b));
    }
}
