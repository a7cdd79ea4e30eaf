//! Reproduction suite: recomputes every tabulated result and compares it
//! with the reference values held in [`ReferenceData`].

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::abelian::{unimodular_inverse, CyclicProduct, Matrix};
use crate::cobordism::{check_diagram, match_row, table_samples, H2Constants, ParityCase};
use crate::contfrac::splice_chain;
use crate::dinv::{d_dihedral, d_sol_profile, d_sum_check, lescop_sol};
use crate::error::Result;
use crate::manifolds::{h1_dihedral, h1_sol, DihedralManifold, SolManifold};
use crate::spinc::{chern_classes, extension_data, partition, self_conjugate_classes, ClassLabel};

/// The printed factorization matrices `F`, `C`, `D` for `H1(S_phi)` and
/// `F'`, `C'`, `D'` for `H1(W_{-b})`, with the printed `F' Delta F^-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub params: [i64; 4],
    pub f: Vec<Vec<i64>>,
    pub c: Vec<Vec<i64>>,
    pub d: Vec<Vec<i64>>,
    pub f_prime: Vec<Vec<i64>>,
    pub c_prime: Vec<Vec<i64>>,
    pub d_prime: Vec<Vec<i64>>,
    pub f_delta_f_inv: Vec<Vec<i64>>,
}

impl Factorization {
    /// The printed matrices, valid for `b` even and `d` odd.
    pub fn printed(a: i64, b: i64, c: i64, d: i64) -> Self {
        Factorization {
            params: [a, b, c, d],
            f: vec![vec![0, 0, 0, 1], vec![0, 1, 0, 0], vec![0, 2, 1, 0], vec![1, 0, -a, 2 * c]],
            c: vec![vec![-b / 2, (1 - d) / 2, d, b], vec![0, 0, 0, 1], vec![0, 1, -2, 0], vec![1, 0, 0, -2]],
            d: diag(&[1, 1, 4, 4 * c]),
            f_prime: vec![vec![0, 0, 0, 1], vec![0, 1, 0, 0], vec![0, 2, 1, 0], vec![1, 0, -a, 0]],
            c_prime: vec![vec![0, (1 - d) / 2, d, -b / 2], vec![1, 0, 0, 0], vec![0, 1, -2, 0], vec![0, 0, 0, 1]],
            d_prime: diag(&[1, 1, 4, -2 * c]),
            f_delta_f_inv: vec![vec![0, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![-2 * c, 0, 0, 1]],
        }
    }
}

fn diag(entries: &[i64]) -> Vec<Vec<i64>> {
    (0..entries.len()).map(|i| (0..entries.len()).map(|j| if i == j { entries[i] } else { 0 }).collect()).collect()
}

/// One row of the extension table, in `H^2` coordinates of the diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionRow {
    pub c1_u_b: Vec<i64>,
    pub c1_u_a: Vec<i64>,
    pub c1_s_b: Vec<Vec<i64>>,
    pub c1_s_a: Vec<Vec<i64>>,
    pub image_b: Vec<Vec<i64>>,
    pub image_a: Vec<Vec<i64>>,
    pub c1_theta: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceData {
    /// `(b, c)` and the torsion of `H1(D_{-b/c})`.
    pub dihedral_h1: Vec<((i64, i64), Vec<i64>)>,
    /// `(a, b)` and the torsion of `H1(M_{a,b})`.
    pub sol_h1: Vec<((i64, i64), Vec<i64>)>,
    pub factorization: Factorization,
    pub diagrams: Vec<(ParityCase, H2Constants)>,
    /// `c1` on `S_ba`, `S_b`, `S_a`, `S_empty`.
    pub chern: Vec<(ParityCase, [Vec<i64>; 4])>,
    pub extension: Vec<(ParityCase, ExtensionRow)>,
    pub self_conjugate: Vec<(ParityCase, Vec<ClassLabel>)>,
    /// `n` and `d(D_n)` as `(numerator, denominator)` pairs.
    pub dihedral_d: Vec<(i64, [(i64, i64); 4])>,
    /// `(a, b)` and the sum of all sixteen d-invariants.
    pub d_sums: Vec<((i64, i64), i64)>,
}

impl Default for ReferenceData {
    fn default() -> Self {
        let v = |x: &[i64]| x.to_vec();
        let s = |x: &[&[i64]]| x.iter().map(|e| e.to_vec()).collect::<Vec<_>>();
        ReferenceData {
            dihedral_h1: vec![((2, 1), v(&[2, 2])), ((3, 1), v(&[4])), ((4, 3), v(&[2, 6])), ((5, 2), v(&[8]))],
            sol_h1: vec![((2, 2), v(&[4, 4])), ((1, 1), v(&[2, 2, 4])), ((2, 3), v(&[4, 4])), ((3, 5), v(&[2, 2, 4]))],
            factorization: Factorization::printed(1, 2, 1, 3),
            diagrams: ParityCase::ALL.iter().map(|&c| (c, H2Constants::standard(c))).collect(),
            chern: vec![
                (ParityCase::EvenEven, [v(&[0, 0]), v(&[2, 0]), v(&[0, 2]), v(&[2, 2])]),
                (ParityCase::EvenOdd, [v(&[2, 2]), v(&[2, 0]), v(&[0, 0]), v(&[0, 2])]),
                (ParityCase::OddOdd, [v(&[0, 0, 2]), v(&[0, 0, 0]), v(&[0, 0, 0]), v(&[0, 0, 2])]),
            ],
            extension: vec![
                (
                    ParityCase::EvenEven,
                    ExtensionRow {
                        c1_u_b: v(&[0, 0]),
                        c1_u_a: v(&[0, 0]),
                        c1_s_b: s(&[&[0, 0], &[2, 0]]),
                        c1_s_a: s(&[&[0, 0], &[0, 2]]),
                        image_b: s(&[&[0, 0], &[2, 0]]),
                        image_a: s(&[&[0, 0], &[0, 2]]),
                        c1_theta: v(&[0, 0]),
                    },
                ),
                (
                    ParityCase::EvenOdd,
                    ExtensionRow {
                        c1_u_b: v(&[2]),
                        c1_u_a: v(&[0, 0]),
                        c1_s_b: s(&[&[0, 2], &[1, 2]]),
                        c1_s_a: s(&[&[0, 0], &[2, 2]]),
                        image_b: s(&[&[0, 2], &[2, 2]]),
                        image_a: s(&[&[0, 0], &[2, 2]]),
                        c1_theta: v(&[2, 2]),
                    },
                ),
                (
                    ParityCase::OddOdd,
                    ExtensionRow {
                        c1_u_b: v(&[2]),
                        c1_u_a: v(&[2]),
                        c1_s_b: s(&[&[0, 2], &[1, 2]]),
                        c1_s_a: s(&[&[1, 0], &[0, 2]]),
                        image_b: s(&[&[0, 0, 2], &[0, 1, 2]]),
                        image_a: s(&[&[0, 1, 0], &[0, 0, 2]]),
                        c1_theta: v(&[0, 0, 2]),
                    },
                ),
            ],
            self_conjugate: vec![
                (ParityCase::EvenEven, vec![ClassLabel::Sba]),
                (ParityCase::EvenOdd, vec![ClassLabel::Sa]),
                (ParityCase::OddOdd, vec![ClassLabel::Sb, ClassLabel::Sa]),
            ],
            dihedral_d: vec![
                (4, [(0, 1), (0, 1), (3, 2), (1, 2)]),
                (3, [(0, 1), (0, 1), (5, 4), (1, 4)]),
                (-5, [(0, 1), (0, 1), (-3, 4), (-7, 4)]),
            ],
            d_sums: vec![((2, 4), -4), ((4, 2), 4), ((2, 3), -2), ((1, 1), 0)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckItem {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub items: Vec<CheckItem>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.items.iter().filter(|i| !i.passed).map(|i| i.name).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "items": self.items.iter().map(|i| json!({"name": i.name, "passed": i.passed, "detail": i.detail})).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in &self.items {
            writeln!(f, "[{}] {:22} {}", if i.passed { "pass" } else { "FAIL" }, i.name, i.detail)?;
        }
        let failed = self.failures().len();
        write!(f, "{} of {} items passed", self.items.len() - failed, self.items.len())
    }
}

fn item(name: &'static str, run: impl FnOnce() -> Result<(bool, String)>) -> CheckItem {
    match run() {
        Ok((passed, detail)) => CheckItem { name, passed, detail },
        Err(e) => CheckItem { name, passed: false, detail: format!("error: {e}") },
    }
}

fn mat(rows: &[Vec<i64>]) -> Result<Matrix<i64>> {
    Matrix::from_rows(rows.to_vec())
}

fn torsion(g: &crate::abelian::FinAbGroup<i64>) -> Vec<i64> {
    g.torsion().to_vec()
}

fn h1_dihedral_item(r: &ReferenceData) -> Result<(bool, String)> {
    for ((b, c), expected) in &r.dihedral_h1 {
        let m = DihedralManifold::new(*b, *c)?;
        if torsion(&m.h1()) != *expected {
            return Ok((false, format!("D_{{{b}/{c}}}: computed {}", m.h1())));
        }
    }
    let mut count = 0;
    for b in -30i64..=30 {
        for c in 1i64..=10 {
            if let Ok(m) = DihedralManifold::new(b, c) {
                count += 1;
                if !h1_dihedral(&m).agrees() {
                    return Ok((false, format!("closed form fails at b = {b}, c = {c}")));
                }
            }
        }
    }
    Ok((true, format!("{} samples, {count} swept", r.dihedral_h1.len())))
}

fn h1_sol_item(r: &ReferenceData) -> Result<(bool, String)> {
    for ((a, b), expected) in &r.sol_h1 {
        let m = SolManifold::m_ab(*a, *b);
        if torsion(&m.h1()) != *expected {
            return Ok((false, format!("M_{{{a},{b}}}: computed {}", m.h1())));
        }
    }
    let mut parities = BTreeSet::new();
    let mut count = 0;
    for m in sol_matrices(8) {
        count += 1;
        parities.insert(m.d().rem_euclid(2));
        if !h1_sol(&m).agrees() {
            return Ok((false, format!("closed form fails at {:?}", m.params())));
        }
    }
    Ok((parities.len() == 2, format!("{count} gluing matrices, both parities of d")))
}

/// Gluing matrices `[[a, c], [d, b]]` of determinant -1 with `c >= 1` and
/// entries in `[-n, n]`.
pub fn sol_matrices(n: i64) -> Vec<SolManifold<i64>> {
    let mut out = Vec::new();
    for a in -n..=n {
        for b in -n..=n {
            for c in 1..=n {
                let ab1 = a * b + 1;
                if ab1 % c != 0 || (ab1 / c).abs() > n {
                    continue;
                }
                if let Ok(m) = SolManifold::new(a, b, c, ab1 / c) {
                    out.push(m);
                }
            }
        }
    }
    out
}

fn factorization_item(r: &ReferenceData) -> Result<(bool, String)> {
    let fz = &r.factorization;
    let [a, b, c, d] = fz.params;
    let m = SolManifold::new(a, b, c, d)?;
    let p = m.presentation();
    let p_prime = crate::cobordism::cobordism_presentation(&m, crate::cobordism::CobordismSide::WMinusB);
    let (f, cc, dd) = (mat(&fz.f)?, mat(&fz.c)?, mat(&fz.d)?);
    let (f2, c2, d2) = (mat(&fz.f_prime)?, mat(&fz.c_prime)?, mat(&fz.d_prime)?);
    let first = f.try_mul(&p)?.try_mul(&cc)? == dd;
    let second = f2.try_mul(&p_prime)?.try_mul(&c2)? == d2;
    let unimodular = [&f, &cc, &f2, &c2].iter().all(|x| x.is_unimodular());
    let delta = Matrix::diagonal(4, 4, &[1, 1, 1, 0]);
    let conj = f2.try_mul(&delta)?.try_mul(&unimodular_inverse(&f)?)? == mat(&fz.f_delta_f_inv)?;
    Ok((
        first && second && unimodular && conj,
        format!("F P C = D: {first}, F' P' C' = D': {second}, unimodular: {unimodular}, F' Delta F^-1: {conj}"),
    ))
}

fn table_item() -> Result<(bool, String)> {
    let mut matched = 0;
    let samples = table_samples();
    for s in &samples {
        let m = SolManifold::new(s[0], s[1], s[2], s[3])?;
        let row = match_row(&m)?;
        if !row.matched() {
            return Ok((false, format!("row {:?} not matched at {:?}", row.parity, s)));
        }
        matched += 1;
    }
    Ok((true, format!("{matched} of {} rows matched jointly", samples.len())))
}

fn diagrams_item(r: &ReferenceData) -> Result<(bool, String)> {
    for (case, constants) in &r.diagrams {
        let check = check_diagram::<i64>(constants.build(*case)?)?;
        if !check.passed() {
            return Ok((
                false,
                format!(
                    "case {case}: entrywise {:?}, up to isomorphism {}, image orders {:?}",
                    check.equals_dual_of_reference, check.matches_dual_of_computed, check.image_orders
                ),
            ));
        }
    }
    Ok((true, "three diagrams, image orders (8, 8, 4)".into()))
}

fn normalized_set(g: &CyclicProduct<i64>, xs: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    xs.iter().map(|x| g.normalize(x)).collect()
}

fn chern_item(r: &ReferenceData) -> Result<(bool, String)> {
    for (case, expected) in &r.chern {
        let (a, b) = case.sample();
        let part = partition(&a, &b)?;
        if part.sizes() != [4, 4, 4, 4] {
            return Ok((false, format!("case {case}: partition sizes {:?}", part.sizes())));
        }
        let chern = chern_classes(&a, &b)?;
        for (label, value) in ClassLabel::ALL.iter().zip(expected) {
            let diff = part.doubled_difference(*label);
            let base = chern.get(ClassLabel::Sba);
            let shifted = part.group.add(chern.get(*label), &part.group.neg(base));
            if chern.get(*label) != &part.group.normalize(value) || diff.len() != 1 || !diff.contains(&shifted) {
                return Ok((false, format!("case {case}: {label} has c1 {:?}", chern.get(*label))));
            }
        }
    }
    Ok((true, "all cells reproduced, classes of size 4, doubled differences singletons".into()))
}

fn extension_item(r: &ReferenceData) -> Result<(bool, String)> {
    for (case, row) in &r.extension {
        let (a, b) = case.sample();
        let e = extension_data(&a, &b)?;
        let part = partition(&a, &b)?;
        let h = crate::cobordism::h2_diagram::<i64>(case.bits().0, case.bits().1)?;
        let (db, da) = (h.iota_d_minus_b.target(), h.iota_d_a.target());
        let (wb, wa) = (h.iota_w_minus_b.source(), h.iota_w_a.source());
        let cells = [
            ("c1(u_b)", e.c1_u_b == db.normalize(&row.c1_u_b)),
            ("c1(u_a)", e.c1_u_a == da.normalize(&row.c1_u_a)),
            ("c1(s_b)", e.preimage_b == normalized_set(wb, &row.c1_s_b)),
            ("c1(s_a)", e.preimage_a == normalized_set(wa, &row.c1_s_a)),
            ("image_b", e.image_b == normalized_set(&part.group, &row.image_b)),
            ("image_a", e.image_a == normalized_set(&part.group, &row.image_a)),
            ("c1(theta)", e.c1_theta == part.group.normalize(&row.c1_theta)),
        ];
        if let Some((cell, _)) = cells.iter().find(|(_, ok)| !ok) {
            return Ok((false, format!("case {case}: cell {cell} differs")));
        }
    }
    for (case, expected) in &r.self_conjugate {
        let (a, b) = case.sample();
        let got: Vec<ClassLabel> = self_conjugate_classes(&a, &b)?.into_iter().collect();
        if got != *expected {
            return Ok((false, format!("case {case}: self-conjugate classes {got:?}")));
        }
    }
    Ok((true, "three rows and self-conjugate classes reproduced".into()))
}

fn d_comp_item(r: &ReferenceData) -> Result<(bool, String)> {
    for (n, expected) in &r.dihedral_d {
        let mut got = d_dihedral(n).to_vec();
        let mut want: Vec<Ratio<i64>> = expected.iter().map(|&(p, q)| Ratio::new(p, q)).collect();
        got.sort();
        want.sort();
        if got != want {
            return Ok((false, format!("d(D_{n}) computed as {got:?}")));
        }
    }
    for a in -30i64..=30 {
        for b in -30i64..=30 {
            let Ok(p) = d_sol_profile(&a, &b) else { continue };
            let sum = |v: &[Ratio<i64>]| v.iter().copied().sum::<Ratio<i64>>();
            let blocks = (sum(&p.s_b), sum(&p.s_a), sum(&p.s_ba));
            if blocks != (Ratio::from(-b), Ratio::from(a), Ratio::from(0)) {
                return Ok((false, format!("block sums at ({a}, {b}): {blocks:?}")));
            }
            let nonzero = |n: i64| {
                let d = d_dihedral(&n);
                let mut v = vec![d[2], d[2], d[3], d[3]];
                v.sort();
                v
            };
            if p.s_b != nonzero(-b) || p.s_a != nonzero(a) {
                return Ok((false, format!("blocks at ({a}, {b}) differ from the dihedral values")));
            }
        }
    }
    Ok((true, "dihedral samples and blocks for |a|, |b| <= 30".into()))
}

fn d_sum_item(r: &ReferenceData) -> Result<(bool, String)> {
    for ((a, b), total) in &r.d_sums {
        let got = d_sum_check(a, b)?;
        if !got.passed || got.total != Ratio::from(*total) {
            return Ok((false, format!("({a}, {b}): {got}")));
        }
    }
    for a in -30i64..=30 {
        for b in -30i64..=30 {
            if d_sol_profile(&a, &b).is_err() {
                continue;
            }
            if !d_sum_check(&a, &b)?.passed || lescop_sol(&a, &b) != Ratio::from(b - a) {
                return Ok((false, format!("sum formula fails at ({a}, {b})")));
            }
        }
    }
    Ok((true, "total 2(a - b) and lambda_L = b - a for |a|, |b| <= 30".into()))
}

fn splice_item() -> Result<(bool, String)> {
    let mut count = 0;
    for m in sol_matrices(8) {
        let [a, b, c, d] = m.params();
        if a == 0 || b == 0 || d == 0 {
            continue;
        }
        let chain = splice_chain(&a, &b, &c, &d)?;
        if !chain.gluing_identity_holds(&a, &b, &c, &d) {
            return Ok((false, format!("identity fails at {:?}", [a, b, c, d])));
        }
        count += 1;
    }
    Ok((true, format!("{count} gluing matrices")))
}

/// Runs every item against `reference`.
pub fn run(reference: &ReferenceData) -> VerifyReport {
    VerifyReport {
        items: vec![
            item("h1_dihedral", || h1_dihedral_item(reference)),
            item("h1_sol", || h1_sol_item(reference)),
            item("factorization", || factorization_item(reference)),
            item("inclusion_table", table_item),
            item("h2_diagrams", || diagrams_item(reference)),
            item("chern_classes", || chern_item(reference)),
            item("extending_theta", || extension_item(reference)),
            item("d_comp", || d_comp_item(reference)),
            item("d_sum", || d_sum_item(reference)),
            item("splice_identity", splice_item),
        ],
    }
}

pub fn run_default() -> VerifyReport {
    run(&ReferenceData::default())
}
