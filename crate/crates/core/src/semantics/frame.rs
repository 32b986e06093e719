use std::fmt;

use super::WorldSet;
use crate::Error;

/// Which satisfaction clause for `▷` a frame uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FrameKind {
    /// `S_w ⊆ R[w] × W`.
    Veltman,
    /// `S_w ⊆ R[w] × (P(W) \ {∅})`, closed upwards.
    Verbrugge,
}

impl fmt::Display for FrameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameKind::Veltman => "veltman",
            FrameKind::Verbrugge => "verbrugge",
        })
    }
}

/// An upward-closed family of nonempty world sets, i.e. `{V : x S_w V}`
/// for fixed `w` and `x`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Neighbourhood {
    /// `V` is a member iff some generator is a subset of `V`.
    Generators(Vec<WorldSet>),
    /// `V` is a member iff `V` is nonempty and meets every clause.
    Hitting(Vec<WorldSet>),
}

impl Default for Neighbourhood {
    fn default() -> Self {
        Neighbourhood::Generators(Vec::new())
    }
}

impl Neighbourhood {
    pub fn member(&self, v: &WorldSet) -> bool {
        match self {
            Neighbourhood::Generators(gs) => gs.iter().any(|g| !g.is_empty() && g.is_subset(v)),
            Neighbourhood::Hitting(cs) => !v.is_empty() && cs.iter().all(|c| c.intersects(v)),
        }
    }

    /// True iff no set is a member.
    pub fn is_void(&self) -> bool {
        match self {
            Neighbourhood::Generators(gs) => gs.iter().all(WorldSet::is_empty),
            Neighbourhood::Hitting(cs) => cs.iter().any(WorldSet::is_empty),
        }
    }

    /// A CNF over "meets" constraints describing the family, together with
    /// the implicit nonemptiness constraint `W`.
    pub fn clauses(&self, n: usize) -> Vec<WorldSet> {
        let mut out = match self {
            Neighbourhood::Hitting(cs) => cs.clone(),
            Neighbourhood::Generators(gs) => minimal_transversals(gs),
        };
        out.push(WorldSet::full(n));
        out
    }

    /// Minimal generators: an antichain of member sets whose upward closure
    /// is the family. Exponential for `Hitting` families with many clauses.
    pub fn generators(&self) -> Vec<WorldSet> {
        match self {
            Neighbourhood::Generators(gs) => minimize(gs.iter().filter(|g| !g.is_empty()).cloned().collect()),
            Neighbourhood::Hitting(cs) => {
                if cs.is_empty() {
                    // every nonempty set; singletons generate it
                    return Vec::new();
                }
                minimal_transversals(cs)
            }
        }
    }
}

impl fmt::Debug for Neighbourhood {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Neighbourhood::Generators(gs) => write!(f, "gen{gs:?}"),
            Neighbourhood::Hitting(cs) => write!(f, "hit{cs:?}"),
        }
    }
}

fn minimize(mut sets: Vec<WorldSet>) -> Vec<WorldSet> {
    sets.sort_by_key(|s| (s.len(), s.clone()));
    sets.dedup();
    let mut out: Vec<WorldSet> = Vec::new();
    for s in sets {
        if !out.iter().any(|m| m.is_subset(&s)) {
            out.push(s);
        }
    }
    out
}

/// Minimal sets meeting every set in `family` (Berge's algorithm).
pub(crate) fn minimal_transversals(family: &[WorldSet]) -> Vec<WorldSet> {
    let mut current = vec![WorldSet::empty()];
    for g in family {
        let mut next = Vec::new();
        for t in &current {
            if t.intersects(g) {
                next.push(t.clone());
            } else {
                for e in g.iter() {
                    let mut t2 = t.clone();
                    t2.insert(e);
                    next.push(t2);
                }
            }
        }
        current = minimize(next);
    }
    current
}

/// The accessibility structure `{S_w}` of a frame.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum SRelation {
    /// `pairs[w][x] = {y : x S_w y}`.
    Veltman(Vec<Vec<WorldSet>>),
    /// `families[w][x] = {V : x S_w V}`.
    Verbrugge(Vec<Vec<Neighbourhood>>),
}

/// A finite Veltman or Verbrugge frame over worlds `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frame {
    names: Vec<String>,
    succ: Vec<WorldSet>,
    s: SRelation,
}

impl Frame {
    /// Builds and validates a frame. `succ[w]` is `R[w]`.
    pub fn new(names: Vec<String>, succ: Vec<WorldSet>, s: SRelation) -> Result<Frame, Error> {
        let frame = Frame { names, succ, s };
        frame.validate()?;
        Ok(frame)
    }

    pub(crate) fn new_unchecked(names: Vec<String>, succ: Vec<WorldSet>, s: SRelation) -> Frame {
        Frame { names, succ, s }
    }

    fn validate(&self) -> Result<(), Error> {
        let n = self.names.len();
        if n == 0 {
            return Err(Error::InvalidFrame("no worlds".into()));
        }
        if self.succ.len() != n {
            return Err(Error::InvalidFrame("R has the wrong number of rows".into()));
        }
        let all = WorldSet::full(n);
        for w in 0..n {
            if !self.succ[w].is_subset(&all) {
                return Err(Error::InvalidFrame(format!("R[{}] mentions unknown worlds", self.names[w])));
            }
            if self.succ[w].contains(w) {
                return Err(Error::InvalidFrame(format!("R is reflexive at {}", self.names[w])));
            }
            for x in self.succ[w].iter() {
                if !self.succ[x].is_subset(&self.succ[w]) {
                    return Err(Error::InvalidFrame(format!(
                        "R is not transitive through {} -> {}",
                        self.names[w], self.names[x]
                    )));
                }
            }
        }
        match &self.s {
            SRelation::Veltman(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidFrame("S has the wrong shape".into()));
                }
                for w in 0..n {
                    for x in 0..n {
                        let ys = &rows[w][x];
                        if !ys.is_empty() && !self.succ[w].contains(x) {
                            return Err(Error::InvalidFrame(format!(
                                "S_{} relates {} which is not an R-successor",
                                self.names[w], self.names[x]
                            )));
                        }
                        if !ys.is_subset(&all) {
                            return Err(Error::InvalidFrame("S mentions unknown worlds".into()));
                        }
                    }
                }
            }
            SRelation::Verbrugge(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(Error::InvalidFrame("S has the wrong shape".into()));
                }
                for w in 0..n {
                    for x in 0..n {
                        let fam = &rows[w][x];
                        if !fam.is_void() && !self.succ[w].contains(x) {
                            return Err(Error::InvalidFrame(format!(
                                "S_{} relates {} which is not an R-successor",
                                self.names[w], self.names[x]
                            )));
                        }
                        let sets = match fam {
                            Neighbourhood::Generators(g) => g,
                            Neighbourhood::Hitting(c) => c,
                        };
                        if sets.iter().any(|s| !s.is_subset(&all)) {
                            return Err(Error::InvalidFrame("S mentions unknown worlds".into()));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> FrameKind {
        match self.s {
            SRelation::Veltman(_) => FrameKind::Veltman,
            SRelation::Verbrugge(_) => FrameKind::Verbrugge,
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn world(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `R[w]`.
    pub fn succ(&self, w: usize) -> &WorldSet {
        &self.succ[w]
    }

    pub fn s_relation(&self) -> &SRelation {
        &self.s
    }

    pub fn all(&self) -> WorldSet {
        WorldSet::full(self.len())
    }

    /// `{y : x S_w y}` for Veltman frames.
    pub fn veltman_s(&self, w: usize, x: usize) -> Option<&WorldSet> {
        match &self.s {
            SRelation::Veltman(rows) => Some(&rows[w][x]),
            SRelation::Verbrugge(_) => None,
        }
    }

    /// `{V : x S_w V}` for Verbrugge frames.
    pub fn verbrugge_s(&self, w: usize, x: usize) -> Option<&Neighbourhood> {
        match &self.s {
            SRelation::Verbrugge(rows) => Some(&rows[w][x]),
            SRelation::Veltman(_) => None,
        }
    }

    /// The Verbrugge frame with `x S_w V` iff `x S_w y` for some `y ∈ V`.
    /// Satisfaction is unchanged.
    pub fn to_verbrugge(&self) -> Frame {
        match &self.s {
            SRelation::Verbrugge(_) => self.clone(),
            SRelation::Veltman(rows) => {
                let fams = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|ys| {
                                if ys.is_empty() {
                                    Neighbourhood::default()
                                } else {
                                    Neighbourhood::Hitting(vec![ys.clone()])
                                }
                            })
                            .collect()
                    })
                    .collect();
                Frame::new_unchecked(self.names.clone(), self.succ.clone(), SRelation::Verbrugge(fams))
            }
        }
    }

    /// Replaces every Verbrugge family by its explicit minimal generators.
    pub fn with_generators(&self) -> Frame {
        match &self.s {
            SRelation::Veltman(_) => self.clone(),
            SRelation::Verbrugge(rows) => {
                let n = self.len();
                let fams = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|f| match f {
                                Neighbourhood::Hitting(cs) if cs.is_empty() => {
                                    Neighbourhood::Generators((0..n).map(WorldSet::singleton).collect())
                                }
                                _ if f.is_void() => Neighbourhood::default(),
                                _ => Neighbourhood::Generators(f.generators()),
                            })
                            .collect()
                    })
                    .collect();
                Frame::new_unchecked(self.names.clone(), self.succ.clone(), SRelation::Verbrugge(fams))
            }
        }
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Frame")
            .field("worlds", &self.names)
            .field("R", &self.succ)
            .field(
                "S",
                &match &self.s {
                    SRelation::Veltman(r) => format!("{r:?}"),
                    SRelation::Verbrugge(r) => format!("{r:?}"),
                },
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(items: &[usize]) -> WorldSet {
        items.iter().copied().collect()
    }

    #[test]
    fn rejects_cycles_and_stray_pairs() {
        let names: Vec<String> = vec!["a".into(), "b".into()];
        let refl = Frame::new(
            names.clone(),
            vec![ws(&[0]), ws(&[])],
            SRelation::Veltman(vec![vec![ws(&[]); 2]; 2]),
        );
        assert!(refl.is_err());
        let cyc = Frame::new(
            names.clone(),
            vec![ws(&[1]), ws(&[0])],
            SRelation::Veltman(vec![vec![ws(&[]); 2]; 2]),
        );
        assert!(cyc.is_err());
        let stray = Frame::new(
            names,
            vec![ws(&[]), ws(&[])],
            SRelation::Veltman(vec![vec![ws(&[1]), ws(&[])], vec![ws(&[]); 2]]),
        );
        assert!(stray.is_err());
    }

    #[test]
    fn transversals_give_equivalent_cnf() {
        let gens = vec![ws(&[0, 1]), ws(&[2])];
        let g = Neighbourhood::Generators(gens);
        let h = Neighbourhood::Hitting(minimal_transversals(&[ws(&[0, 1]), ws(&[2])]));
        let cnf = Neighbourhood::Hitting(g.clauses(3));
        for mask in 0u64..8 {
            let v = WorldSet::from_mask(mask);
            assert_eq!(g.member(&v), cnf.member(&v), "{v:?}");
            assert_eq!(h.member(&v), g.member(&v), "{v:?}");
        }
        let back = Neighbourhood::Generators(h.generators());
        for mask in 0u64..8 {
            let v = WorldSet::from_mask(mask);
            assert_eq!(back.member(&v), h.member(&v));
        }
    }
}
