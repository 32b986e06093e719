use std::fmt;
use std::str::FromStr;

use super::{Frame, FrameKind, SRelation, WorldSet};
use crate::Error;

/// First-order frame conditions matching individual axiom schemata.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FrameCondition {
    /// `x R y ⇒ y S_x y`
    FcJ1,
    /// `FcJ4Plus` and every `S_w` transitive
    FcJ2Plus,
    /// `y S_x z ⇒ x R z`
    FcJ4Plus,
    /// `x R y R z ⇒ y S_x z`
    FcJ5,
    /// `x R y ⇒ y S_x {y}`
    GfcJ1,
    /// `GfcJ4` and closure of `S_w` under unions of chosen successors
    GfcJ2,
    /// `y S_x V ⇒ V ∩ R[x] ≠ ∅`
    GfcJ4,
    /// `y S_x V ⇒ y S_x (V ∩ R[x])`
    GfcJ4Plus,
    /// `x R y R z ⇒ y S_x {z}`
    GfcJ5,
}

impl FrameCondition {
    pub const ALL: [FrameCondition; 9] = [
        FrameCondition::FcJ1,
        FrameCondition::FcJ2Plus,
        FrameCondition::FcJ4Plus,
        FrameCondition::FcJ5,
        FrameCondition::GfcJ1,
        FrameCondition::GfcJ2,
        FrameCondition::GfcJ4,
        FrameCondition::GfcJ4Plus,
        FrameCondition::GfcJ5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FrameCondition::FcJ1 => "FC-J1",
            FrameCondition::FcJ2Plus => "FC-J2+",
            FrameCondition::FcJ4Plus => "FC-J4+",
            FrameCondition::FcJ5 => "FC-J5",
            FrameCondition::GfcJ1 => "GFC-J1",
            FrameCondition::GfcJ2 => "GFC-J2",
            FrameCondition::GfcJ4 => "GFC-J4",
            FrameCondition::GfcJ4Plus => "GFC-J4+",
            FrameCondition::GfcJ5 => "GFC-J5",
        }
    }

    pub fn kind(self) -> FrameKind {
        match self {
            FrameCondition::FcJ1
            | FrameCondition::FcJ2Plus
            | FrameCondition::FcJ4Plus
            | FrameCondition::FcJ5 => FrameKind::Veltman,
            _ => FrameKind::Verbrugge,
        }
    }
}

impl fmt::Display for FrameCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for FrameCondition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for FrameCondition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let wanted = s.trim().to_ascii_uppercase();
        FrameCondition::ALL
            .into_iter()
            .find(|c| c.name() == wanted)
            .ok_or_else(|| Error::InvalidFrame(format!("unknown frame condition `{s}`")))
    }
}

/// How worlds of `V` outside `R[w]` are treated in the union condition of
/// `GfcJ2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum UnionReading {
    /// Only members of `V ∩ R[w]` need a chosen successor set.
    #[default]
    Restricted,
    /// Every member of `V` needs a chosen successor set.
    AllOfV,
}

pub fn check_condition(frame: &Frame, c: FrameCondition) -> Result<bool, Error> {
    check_condition_with(frame, c, UnionReading::default())
}

pub fn check_condition_with(frame: &Frame, c: FrameCondition, reading: UnionReading) -> Result<bool, Error> {
    for w in 0..frame.len() {
        if !holds_at_with(frame, w, c, reading)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates `c` at the single world `w`. Every condition only inspects
/// `R` and `S_w`, so a frame satisfies `c` iff it holds at each world.
pub fn holds_at(frame: &Frame, w: usize, c: FrameCondition) -> Result<bool, Error> {
    holds_at_with(frame, w, c, UnionReading::default())
}

pub fn holds_at_with(frame: &Frame, w: usize, c: FrameCondition, reading: UnionReading) -> Result<bool, Error> {
    if c.kind() != frame.kind() {
        return Err(Error::KindMismatch {
            condition: c.name().to_string(),
            kind: frame.kind().to_string(),
        });
    }
    let n = frame.len();
    let rw = frame.succ(w);
    let all = frame.all();
    Ok(match frame.s_relation() {
        SRelation::Veltman(rows) => {
            let s = &rows[w];
            match c {
                FrameCondition::FcJ1 => rw.iter().all(|y| s[y].contains(y)),
                FrameCondition::FcJ4Plus => s.iter().all(|ys| ys.is_subset(rw)),
                FrameCondition::FcJ5 => rw.iter().all(|y| frame.succ(y).is_subset(&s[y])),
                FrameCondition::FcJ2Plus => {
                    s.iter().all(|ys| ys.is_subset(rw))
                        && (0..n).all(|x| s[x].iter().all(|y| s[y].is_subset(&s[x])))
                }
                _ => unreachable!(),
            }
        }
        SRelation::Verbrugge(rows) => {
            let s = &rows[w];
            let outside = all.difference(rw);
            match c {
                FrameCondition::GfcJ1 => rw.iter().all(|x| s[x].member(&WorldSet::singleton(x))),
                FrameCondition::GfcJ4 => s.iter().all(|f| !f.member(&outside)),
                FrameCondition::GfcJ5 => rw
                    .iter()
                    .all(|x| frame.succ(x).iter().all(|z| s[x].member(&WorldSet::singleton(z)))),
                FrameCondition::GfcJ4Plus => s.iter().all(|f| {
                    // f ⊆ f(· ∩ R[w]) iff no member avoids some clause of the
                    // restricted family
                    f.clauses(n)
                        .iter()
                        .all(|c| !f.member(&all.difference(&c.intersection(rw))))
                }),
                FrameCondition::GfcJ2 => {
                    if !s.iter().all(|f| !f.member(&outside)) {
                        return Ok(false);
                    }
                    s.iter().all(|f| {
                        f.clauses(n).iter().all(|c| {
                            // T ranges over the maximal non-members of f
                            let t = all.difference(c);
                            let ys: WorldSet = rw.iter().filter(|&y| s[y].member(&t)).collect();
                            let base = match reading {
                                UnionReading::Restricted => ys.union(&outside),
                                UnionReading::AllOfV => ys,
                            };
                            !f.member(&base)
                        })
                    })
                }
                _ => unreachable!(),
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(items: &[usize]) -> WorldSet {
        items.iter().copied().collect()
    }

    fn remark_frame() -> Frame {
        let names = vec!["w".to_string(), "x".to_string(), "y".to_string()];
        let succ = vec![ws(&[1, 2]), ws(&[2]), ws(&[])];
        let mut s = vec![vec![WorldSet::empty(); 3]; 3];
        s[0][1] = ws(&[1]);
        s[0][2] = ws(&[2]);
        s[1][2] = ws(&[2]);
        Frame::new(names, succ, SRelation::Veltman(s)).unwrap()
    }

    #[test]
    fn remark_frame_conditions() {
        let f = remark_frame();
        assert!(check_condition(&f, FrameCondition::FcJ1).unwrap());
        assert!(!check_condition(&f, FrameCondition::FcJ5).unwrap());
        assert!(check_condition(&f, FrameCondition::FcJ4Plus).unwrap());
        assert!(matches!(
            check_condition(&f, FrameCondition::GfcJ1),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn one_world_frames_satisfy_everything() {
        let v = Frame::new(
            vec!["a".into()],
            vec![WorldSet::empty()],
            SRelation::Veltman(vec![vec![WorldSet::empty()]]),
        )
        .unwrap();
        let g = v.to_verbrugge();
        for c in FrameCondition::ALL {
            let fr = if c.kind() == FrameKind::Veltman { &v } else { &g };
            assert!(check_condition(fr, c).unwrap(), "{c}");
        }
    }

    #[test]
    fn names_round_trip() {
        for c in FrameCondition::ALL {
            assert_eq!(c.name().parse::<FrameCondition>().unwrap(), c);
        }
        assert!("FC-J9".parse::<FrameCondition>().is_err());
    }
}
