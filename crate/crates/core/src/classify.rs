//! Homeomorphism and rational homology cobordism classification of the Sol
//! manifolds `M_{a,b}`, and the exhaustive census over a box of parameters.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::abelian::json::group_to_json;
use crate::abelian::FinAbGroup;
use crate::cobordism::ParityCase;
use crate::dinv::{d_sol_profile, multiset_to_json, rational_to_json, DInvariantProfile, Quarter};
use crate::error::{Error, Result};
use crate::manifolds::{normalize_ab, SolManifold};
use crate::scalar::Scalar;
use crate::spinc::{self_conjugate_classes, ClassLabel};

/// `M_{a,b}` and `M_{a',b'}` are homeomorphic iff they share an orbit under
/// `(a,b) -> (-b,-a)`.
pub fn homeomorphic<Z: Scalar>(a: &Z, b: &Z, a2: &Z, b2: &Z) -> bool {
    normalize_ab(a, b) == normalize_ab(a2, b2)
}

/// Moves the `(odd, even)` parity case to `(even, odd)`.
pub fn parity_representative<Z: Scalar>(a: &Z, b: &Z) -> (Z, Z) {
    if a.is_odd() && b.is_even() {
        (-b.clone(), -a.clone())
    } else {
        (a.clone(), b.clone())
    }
}

/// The three blocks of `d(M, -)` on structures with `c1 != 0` in the
/// even/even case: two known multisets and one block known only by its sum.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockFamily<Z: Scalar> {
    pub known: [Vec<Quarter<Z>>; 2],
    pub q_sum: Quarter<Z>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    Known(usize),
    Unknown,
}

impl<Z: Scalar> BlockFamily<Z> {
    fn from_profile(p: &DInvariantProfile<Z>) -> Self {
        let mut known = [p.s_b.clone(), p.s_a.clone()];
        known.sort();
        BlockFamily { known, q_sum: p.q_sum.clone() }
    }

    fn sum_of(&self, block: Block) -> Quarter<Z> {
        match block {
            Block::Known(i) => self.known[i].iter().cloned().sum(),
            Block::Unknown => self.q_sum.clone(),
        }
    }

    fn compatible(&self, x: Block, other: &Self, y: Block) -> bool {
        match (x, y) {
            (Block::Known(i), Block::Known(j)) => self.known[i] == other.known[j],
            _ => self.sum_of(x) == other.sum_of(y),
        }
    }

    /// Whether some bijection of blocks respects every known multiset and
    /// every known sum.
    pub fn matches(&self, other: &Self) -> bool {
        let blocks = [Block::Known(0), Block::Known(1), Block::Unknown];
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        perms.iter().any(|p| (0..3).all(|i| self.compatible(blocks[i], other, blocks[p[i]])))
    }
}

/// Invariants of the rational homology cobordism class, computed on the
/// parity representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature<Z: Scalar> {
    pub a: Z,
    pub b: Z,
    pub h1: FinAbGroup<Z>,
    pub total_sum: Quarter<Z>,
    pub parity: ParityCase,
    pub self_conjugate_d: Vec<Quarter<Z>>,
    pub blocks: BlockFamily<Z>,
    pub degenerate: bool,
}

impl<Z: Scalar> Signature<Z> {
    pub fn to_json(&self) -> Value {
        json!({
            "h1": group_to_json(&self.h1),
            "total_sum": rational_to_json(&self.total_sum),
            "parity": self.parity.to_string(),
            "self_conjugate_d": multiset_to_json(&self.self_conjugate_d),
            "blocks": {
                "known": [multiset_to_json(&self.blocks.known[0]), multiset_to_json(&self.blocks.known[1])],
                "q_sum": rational_to_json(&self.blocks.q_sum),
            },
            "degenerate": self.degenerate,
        })
    }
}

fn self_conjugate_d<Z: Scalar>(p: &DInvariantProfile<Z>, classes: &BTreeSet<ClassLabel>) -> Result<Vec<Quarter<Z>>> {
    let mut out = Vec::new();
    for label in classes {
        let block = p
            .block(label.name())
            .ok_or_else(|| Error::Invalid(format!("self-conjugate class {label} has unknown d-invariants")))?;
        out.extend(block.iter().cloned());
    }
    out.sort();
    Ok(out)
}

/// Self-conjugate classes depend only on the parity case.
pub fn self_conjugate_table() -> Result<BTreeMap<ParityCase, BTreeSet<ClassLabel>>> {
    ParityCase::ALL
        .iter()
        .map(|&case| {
            let (a, b) = case.sample();
            Ok((case, self_conjugate_classes(&a, &b)?))
        })
        .collect()
}

fn signature_with<Z: Scalar>(a: &Z, b: &Z, table: &BTreeMap<ParityCase, BTreeSet<ClassLabel>>) -> Result<Signature<Z>> {
    let (a, b) = parity_representative(a, b);
    let parity = ParityCase::of(&a, &b)?;
    let profile = d_sol_profile(&a, &b)?;
    let m = SolManifold::m_ab(a.clone(), b.clone());
    Ok(Signature {
        h1: m.h1(),
        total_sum: profile.total_sum.clone(),
        parity,
        self_conjugate_d: self_conjugate_d(&profile, &table[&parity])?,
        blocks: BlockFamily::from_profile(&profile),
        degenerate: m.is_degenerate(),
        a,
        b,
    })
}

pub fn signature<Z: Scalar>(a: &Z, b: &Z) -> Result<Signature<Z>> {
    signature_with(a, b, &self_conjugate_table()?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Witness {
    H1,
    TotalSum,
    Parity,
    SelfConjugateD,
    BlockMatching,
}

impl Witness {
    pub fn name(self) -> &'static str {
        match self {
            Witness::H1 => "h1",
            Witness::TotalSum => "total_sum",
            Witness::Parity => "parity",
            Witness::SelfConjugateD => "self_conjugate_d",
            Witness::BlockMatching => "block_matching",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Homeomorphic,
    Distinguished(Witness),
    /// No invariant separates the pair although it is not homeomorphic.
    Unresolved,
}

impl Verdict {
    pub fn witness(&self) -> Option<Witness> {
        match self {
            Verdict::Distinguished(w) => Some(*w),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Homeomorphic => "HOMEOMORPHIC",
            Verdict::Distinguished(_) => "DISTINGUISHED",
            Verdict::Unresolved => "UNRESOLVED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Distinguished(w) => write!(f, "DISTINGUISHED by {w}"),
            v => f.write_str(v.label()),
        }
    }
}

/// The first invariant, in a fixed order, on which two signatures differ.
pub fn separating_invariant<Z: Scalar>(x: &Signature<Z>, y: &Signature<Z>) -> Option<Witness> {
    if x.h1 != y.h1 {
        return Some(Witness::H1);
    }
    if x.total_sum != y.total_sum {
        return Some(Witness::TotalSum);
    }
    if x.parity != y.parity {
        return Some(Witness::Parity);
    }
    if x.self_conjugate_d != y.self_conjugate_d {
        return Some(Witness::SelfConjugateD);
    }
    if x.parity == ParityCase::EvenEven && !x.blocks.matches(&y.blocks) {
        return Some(Witness::BlockMatching);
    }
    None
}

fn verdict_of<Z: Scalar>(x: &Signature<Z>, y: &Signature<Z>) -> Verdict {
    if homeomorphic(&x.a, &x.b, &y.a, &y.b) {
        Verdict::Homeomorphic
    } else {
        separating_invariant(x, y).map_or(Verdict::Unresolved, Verdict::Distinguished)
    }
}

/// Decides whether `M_{a,b}` and `M_{a',b'}` are integer homology
/// cobordant.
pub fn cobordant<Z: Scalar>(a: &Z, b: &Z, a2: &Z, b2: &Z) -> Result<Verdict> {
    let table = self_conjugate_table()?;
    Ok(verdict_of(&signature_with(a, b, &table)?, &signature_with(a2, b2, &table)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusClass {
    pub representative: (i64, i64),
    pub members: Vec<(i64, i64)>,
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairOutcome {
    pub first: (i64, i64),
    pub second: (i64, i64),
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusFailure {
    pub first: (i64, i64),
    pub second: (i64, i64),
    pub verdict: Verdict,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub bound: i64,
    pub points: Vec<(i64, i64)>,
    pub classes: Vec<CensusClass>,
    pub pairs: Vec<PairOutcome>,
    pub witness_counts: BTreeMap<Witness, usize>,
    pub homeomorphic_pairs: usize,
    pub failures: Vec<CensusFailure>,
    pub degenerate_failures: Vec<CensusFailure>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let pair = |p: (i64, i64)| json!([p.0, p.1]);
        let failure = |f: &CensusFailure| json!({"first": pair(f.first), "second": pair(f.second), "verdict": f.verdict.to_string(), "reason": f.reason});
        let counts: serde_json::Map<String, Value> =
            self.witness_counts.iter().map(|(w, n)| (w.name().to_string(), json!(n))).collect();
        json!({
            "bound": self.bound,
            "points": self.points.len(),
            "classes": self.classes.iter().map(|c| json!({
                "representative": pair(c.representative),
                "members": c.members.iter().map(|&m| pair(m)).collect::<Vec<_>>(),
                "degenerate": c.degenerate,
            })).collect::<Vec<_>>(),
            "pairs_checked": self.pairs.len(),
            "homeomorphic_pairs": self.homeomorphic_pairs,
            "witness_counts": counts,
            "failures": self.failures.iter().map(failure).collect::<Vec<_>>(),
            "degenerate_failures": self.degenerate_failures.iter().map(failure).collect::<Vec<_>>(),
        })
    }

    /// One row per unordered pair.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("a,b,a2,b2,verdict,witness\n");
        for p in &self.pairs {
            let w = p.verdict.witness().map_or("", Witness::name);
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                p.first.0,
                p.first.1,
                p.second.0,
                p.second.1,
                p.verdict.label(),
                w
            ));
        }
        out
    }
}

impl fmt::Display for CensusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "census |a|,|b| <= {}: {} manifolds, {} homeomorphism classes, {} pairs",
            self.bound,
            self.points.len(),
            self.classes.len(),
            self.pairs.len()
        )?;
        writeln!(f, "  homeomorphic pairs: {}", self.homeomorphic_pairs)?;
        for (w, n) in &self.witness_counts {
            writeln!(f, "  distinguished by {w}: {n}")?;
        }
        writeln!(f, "  failures: {}", self.failures.len())?;
        for x in self.failures.iter().take(20) {
            writeln!(f, "    M_{{{},{}}} vs M_{{{},{}}}: {}", x.first.0, x.first.1, x.second.0, x.second.1, x.reason)?;
        }
        write!(f, "  failures involving degenerate members: {}", self.degenerate_failures.len())
    }
}

/// Checks every unordered pair with `|a|, |b|, |a'|, |b'| <= bound`: the
/// verdict must be `HOMEOMORPHIC` exactly on homeomorphic pairs, whose
/// signatures must then agree.
pub fn census(bound: i64, parallel: bool) -> Result<CensusReport> {
    if bound < 0 {
        return Err(Error::Invalid(format!("census bound must be nonnegative, got {bound}")));
    }
    let table = self_conjugate_table()?;
    let points: Vec<(i64, i64)> = (-bound..=bound).flat_map(|a| (-bound..=bound).map(move |b| (a, b))).collect();
    let signatures: Vec<Signature<i64>> = if parallel {
        points.par_iter().map(|&(a, b)| signature_with(&a, &b, &table)).collect::<Result<_>>()?
    } else {
        points.iter().map(|&(a, b)| signature_with(&a, &b, &table)).collect::<Result<_>>()?
    };

    let row = |i: usize| -> Vec<(PairOutcome, Option<String>)> {
        (i + 1..points.len())
            .map(|j| {
                let (x, y) = (&signatures[i], &signatures[j]);
                let verdict = verdict_of(x, y);
                let reason = match verdict {
                    Verdict::Homeomorphic if separating_invariant(x, y).is_some() => {
                        Some("homeomorphic pair with different signatures".to_string())
                    }
                    Verdict::Unresolved => Some("not homeomorphic but no invariant separates".to_string()),
                    _ => None,
                };
                (PairOutcome { first: points[i], second: points[j], verdict }, reason)
            })
            .collect()
    };
    let rows: Vec<Vec<(PairOutcome, Option<String>)>> = if parallel {
        (0..points.len()).into_par_iter().map(row).collect()
    } else {
        (0..points.len()).map(row).collect()
    };

    let degenerate: BTreeSet<(i64, i64)> =
        points.iter().zip(&signatures).filter(|(_, s)| s.degenerate).map(|(p, _)| *p).collect();
    let mut pairs = Vec::new();
    let mut witness_counts = BTreeMap::new();
    let mut homeomorphic_pairs = 0;
    let mut failures = Vec::new();
    let mut degenerate_failures = Vec::new();
    for (outcome, reason) in rows.into_iter().flatten() {
        match outcome.verdict {
            Verdict::Homeomorphic => homeomorphic_pairs += 1,
            Verdict::Distinguished(w) => *witness_counts.entry(w).or_insert(0) += 1,
            Verdict::Unresolved => {}
        }
        if let Some(reason) = reason {
            let f = CensusFailure { first: outcome.first, second: outcome.second, verdict: outcome.verdict, reason };
            if degenerate.contains(&f.first) || degenerate.contains(&f.second) {
                degenerate_failures.push(f);
            } else {
                failures.push(f);
            }
        }
        pairs.push(outcome);
    }

    let mut by_class: BTreeMap<(i64, i64), Vec<(i64, i64)>> = BTreeMap::new();
    for &(a, b) in &points {
        by_class.entry(normalize_ab(&a, &b)).or_default().push((a, b));
    }
    let classes = by_class
        .into_iter()
        .map(|(representative, members)| CensusClass {
            degenerate: members.iter().any(|m| degenerate.contains(m)),
            representative,
            members,
        })
        .collect();

    Ok(CensusReport {
        bound,
        points,
        classes,
        pairs,
        witness_counts,
        homeomorphic_pairs,
        failures,
        degenerate_failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        assert_eq!(cobordant(&2i64, &3, &-3, &-2).unwrap(), Verdict::Homeomorphic);
        assert_eq!(cobordant(&2i64, &4, &2, &6).unwrap(), Verdict::Distinguished(Witness::TotalSum));
        assert_eq!(cobordant(&1i64, &1, &2, &2).unwrap(), Verdict::Distinguished(Witness::H1));
        assert_eq!(cobordant(&2i64, &4, &4, &6).unwrap(), Verdict::Distinguished(Witness::BlockMatching));
        assert_eq!(cobordant(&2i64, &1, &4, &3).unwrap(), Verdict::Distinguished(Witness::SelfConjugateD));
        assert_eq!(cobordant(&2i64, &4, &4, &2).unwrap(), Verdict::Distinguished(Witness::TotalSum));
        assert_eq!(cobordant(&2i64, &2, &6, &6).unwrap(), Verdict::Distinguished(Witness::BlockMatching));
        assert!(homeomorphic(&3i64, &5, &-5, &-3));
        assert!(!homeomorphic(&2i64, &4, &4, &2));
    }

    #[test]
    fn signatures() {
        use num_rational::Ratio;
        let s = signature(&2i64, &3).unwrap();
        assert_eq!(s.total_sum, Ratio::from_integer(-2));
        assert_eq!(s.self_conjugate_d, [0, 0, 1, 1].map(Ratio::from_integer).to_vec());
        assert_eq!(signature(&1i64, &3).unwrap().self_conjugate_d.len(), 8);
        assert_eq!(signature(&2i64, &2).unwrap().self_conjugate_d, vec![Ratio::from_integer(0); 4]);
    }

    #[test]
    fn odd_even_is_moved() {
        let s = signature(&1i64, &2).unwrap();
        assert_eq!((s.a, s.b), (-2, -1));
        assert_eq!(s.parity, ParityCase::EvenOdd);
    }

    #[test]
    fn small_census() {
        let r = census(1, false).unwrap();
        assert_eq!(r.classes.len(), 6);
        assert!(r.passed());
        assert_eq!(r.pairs.len(), 36);
    }
}
