//! Spin^c structures on `M_{a,b}` as an `H^2`-torsor: the partition by
//! extendability over `W_{-b}` and `W_a`, first Chern classes and
//! conjugation.
//!
//! Elements are offsets from a base structure `theta` that extends over both
//! cobordisms, written in the coordinates of the stored `H^2` diagram.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::abelian::json::vector_to_json;
use crate::abelian::{enumeration_cap, CyclicProduct, GroupHom};
use crate::cobordism::{h2_diagram, H2Diagram, ParityCase};
use crate::dinv::d_dihedral;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Extends over both cobordisms.
    Sba,
    /// Extends over `W_{-b}` only.
    Sb,
    /// Extends over `W_a` only.
    Sa,
    /// Extends over neither.
    Sempty,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 4] = [ClassLabel::Sba, ClassLabel::Sb, ClassLabel::Sa, ClassLabel::Sempty];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::Sba => "S_ba",
            ClassLabel::Sb => "S_b",
            ClassLabel::Sa => "S_a",
            ClassLabel::Sempty => "S_empty",
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Element<Z> = Vec<Z>;
pub type ElementSet<Z> = BTreeSet<Element<Z>>;

fn set_to_json<Z: Scalar>(s: &ElementSet<Z>) -> Value {
    Value::Array(s.iter().map(|x| vector_to_json(x)).collect())
}

fn show_set<Z: Scalar>(s: &ElementSet<Z>) -> String {
    let parts: Vec<String> = s.iter().map(|x| show(x)).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn show<Z: Scalar>(x: &[Z]) -> String {
    format!("({})", x.iter().map(ToString::to_string).join(","))
}

/// Twice every element of `s`.
pub fn doubled<Z: Scalar>(g: &CyclicProduct<Z>, s: &ElementSet<Z>) -> ElementSet<Z> {
    s.iter().map(|x| g.scale(&Z::of(2), x)).collect()
}

/// `2 H^2`.
pub fn twice_group<Z: Scalar>(g: &CyclicProduct<Z>) -> Result<ElementSet<Z>> {
    Ok(g.elements(enumeration_cap())?.iter().map(|x| g.scale(&Z::of(2), x)).collect())
}

#[derive(Clone, Debug)]
pub struct SpincPartition<Z> {
    pub case: ParityCase,
    pub group: CyclicProduct<Z>,
    /// Offset of the base structure; the smallest element of `S_ba`.
    pub theta: Element<Z>,
    pub image_w_minus_b: ElementSet<Z>,
    pub image_w_a: ElementSet<Z>,
    pub classes: BTreeMap<ClassLabel, ElementSet<Z>>,
}

impl<Z: Scalar> SpincPartition<Z> {
    pub fn from_diagram(diagram: &H2Diagram<Z>) -> Result<Self> {
        let group = diagram.sol_group().clone();
        let image_w_minus_b = diagram.iota_w_minus_b.image()?;
        let image_w_a = diagram.iota_w_a.image()?;
        let mut classes: BTreeMap<ClassLabel, ElementSet<Z>> =
            ClassLabel::ALL.iter().map(|&l| (l, BTreeSet::new())).collect();
        for x in group.elements(enumeration_cap())? {
            let label = match (image_w_minus_b.contains(&x), image_w_a.contains(&x)) {
                (true, true) => ClassLabel::Sba,
                (true, false) => ClassLabel::Sb,
                (false, true) => ClassLabel::Sa,
                (false, false) => ClassLabel::Sempty,
            };
            classes.get_mut(&label).expect("all labels present").insert(x);
        }
        let theta =
            classes[&ClassLabel::Sba].iter().next().cloned().ok_or_else(|| Error::Invalid("S_ba is empty".into()))?;
        Ok(SpincPartition { case: diagram.case, group, theta, image_w_minus_b, image_w_a, classes })
    }

    pub fn class(&self, label: ClassLabel) -> &ElementSet<Z> {
        &self.classes[&label]
    }

    pub fn label_of(&self, x: &[Z]) -> ClassLabel {
        let x = self.group.normalize(x);
        ClassLabel::ALL.into_iter().find(|l| self.classes[l].contains(&x)).expect("partition covers the group")
    }

    pub fn sizes(&self) -> [usize; 4] {
        ClassLabel::ALL.map(|l| self.classes[&l].len())
    }

    /// `2 * (class - theta)`.
    pub fn doubled_difference(&self, label: ClassLabel) -> ElementSet<Z> {
        let g = &self.group;
        self.classes[&label].iter().map(|x| g.scale(&Z::of(2), &g.add(x, &g.neg(&self.theta)))).collect()
    }

    pub fn to_json(&self) -> Value {
        let classes: serde_json::Map<String, Value> =
            self.classes.iter().map(|(l, s)| (l.name().to_string(), set_to_json(s))).collect();
        json!({
            "parity_case": self.case.to_string(),
            "group": self.group.orders().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "theta": vector_to_json(&self.theta),
            "classes": classes,
        })
    }
}

impl<Z: Scalar> fmt::Display for SpincPartition<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parity case {}, H^2 = {}, theta = {}", self.case, self.group, show(&self.theta))?;
        for (l, s) in &self.classes {
            writeln!(f, "  {:7} {}", l.name(), show_set(s))?;
        }
        Ok(())
    }
}

pub fn partition<Z: Scalar>(a: &Z, b: &Z) -> Result<SpincPartition<Z>> {
    let case = ParityCase::of(a, b)?;
    let (pa, pb) = case.bits();
    SpincPartition::from_diagram(&h2_diagram(pa, pb)?)
}

/// One admissible assignment of d-invariants to `Spin^c(D_n)`, written as
/// offsets from the structure `u` obtained by restricting an extension of
/// `theta`.
#[derive(Clone, Debug)]
struct DihedralModel<Z: Scalar> {
    c1_base: Element<Z>,
    d: BTreeMap<Element<Z>, Ratio<Z>>,
}

/// All assignments compatible with `d(D_n) = {0, 0, (n+2)/4, (n-2)/4}`,
/// conjugation invariance, and `c1 = 0` exactly on self-conjugate
/// structures: when `2 H^2` is trivial every structure is self-conjugate and
/// any arrangement is allowed; otherwise `u` has some `c1 in 2 H^2`, the two
/// self-conjugate structures carry `(n +- 2)/4` and the others carry 0.
fn dihedral_models<Z: Scalar>(g: &CyclicProduct<Z>, n: &Z) -> Result<Vec<DihedralModel<Z>>> {
    let elements = g.elements(enumeration_cap())?;
    let values = d_dihedral(n);
    let zero_c1 = twice_group(g)?.len() == 1;
    let mut out = Vec::new();
    if zero_c1 {
        let arrangements: BTreeSet<Vec<Ratio<Z>>> = values.iter().cloned().permutations(values.len()).collect();
        for arrangement in arrangements {
            out.push(DihedralModel {
                c1_base: g.zero_element(),
                d: elements.iter().cloned().zip(arrangement).collect(),
            });
        }
        return Ok(out);
    }
    let (p, m) = (values[2].clone(), values[3].clone());
    let zero = Ratio::from_integer(Z::zero());
    for base in twice_group(g)? {
        let self_conjugate: Vec<&Element<Z>> =
            elements.iter().filter(|x| g.is_zero_element(&g.add(&base, &g.scale(&Z::of(2), x)))).collect();
        if self_conjugate.len() != 2 {
            continue;
        }
        for (first, second) in [(p.clone(), m.clone()), (m.clone(), p.clone())] {
            let d = elements
                .iter()
                .map(|x| {
                    let v = if *x == *self_conjugate[0] {
                        first.clone()
                    } else if *x == *self_conjugate[1] {
                        second.clone()
                    } else {
                        zero.clone()
                    };
                    (x.clone(), v)
                })
                .collect();
            out.push(DihedralModel { c1_base: base.clone(), d });
        }
    }
    Ok(out)
}

/// Extension and restriction data for `theta`: Chern classes of the
/// restrictions `u_b`, `u_a` to the dihedral ends, their preimages in
/// `H^2(W)`, the images of those in `H^2(M)`, and `c1(theta)`.
#[derive(Clone, Debug)]
pub struct ExtensionData<Z> {
    pub case: ParityCase,
    pub c1_u_b: Element<Z>,
    pub c1_u_a: Element<Z>,
    pub preimage_b: ElementSet<Z>,
    pub preimage_a: ElementSet<Z>,
    pub image_b: ElementSet<Z>,
    pub image_a: ElementSet<Z>,
    pub c1_theta: Element<Z>,
    /// Number of pairs of dihedral assignments consistent on `S_ba`.
    pub consistent_models: usize,
}

impl<Z: Scalar> ExtensionData<Z> {
    pub fn to_json(&self) -> Value {
        json!({
            "parity_case": self.case.to_string(),
            "c1_u_b": vector_to_json(&self.c1_u_b),
            "c1_u_a": vector_to_json(&self.c1_u_a),
            "c1_s_b": set_to_json(&self.preimage_b),
            "c1_s_a": set_to_json(&self.preimage_a),
            "image_b": set_to_json(&self.image_b),
            "image_a": set_to_json(&self.image_a),
            "c1_theta": vector_to_json(&self.c1_theta),
        })
    }
}

impl<Z: Scalar> fmt::Display for ExtensionData<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "parity case {}", self.case)?;
        writeln!(f, "  c1(u_b) = {}, c1(u_a) = {}", show(&self.c1_u_b), show(&self.c1_u_a))?;
        writeln!(f, "  c1(s_b) in {}, c1(s_a) in {}", show_set(&self.preimage_b), show_set(&self.preimage_a))?;
        writeln!(f, "  images   {} and {}", show_set(&self.image_b), show_set(&self.image_a))?;
        write!(f, "  c1(theta) = {}", show(&self.c1_theta))
    }
}

fn preimages<Z: Scalar>(h: &GroupHom<Z>, x: &[Z]) -> Result<ElementSet<Z>> {
    h.preimage(x)
}

/// Derives `c1(theta)` from d-invariant bookkeeping. For every `alpha` in
/// `Im iota_W_-b ∩ Im iota_W_a`, the structure `theta + alpha` has the same
/// d-invariant as both dihedral restrictions of its extensions; only some
/// assignments of dihedral d-invariants survive this, and they pin
/// `c1(u_b)`, `c1(u_a)` and hence `c1(theta)`.
pub fn extension_data<Z: Scalar>(a: &Z, b: &Z) -> Result<ExtensionData<Z>> {
    let case = ParityCase::of(a, b)?;
    let (pa, pb) = case.bits();
    let diagram: H2Diagram<Z> = h2_diagram(pa, pb)?;
    let part = SpincPartition::from_diagram(&diagram)?;
    let m_group = diagram.sol_group().clone();
    let models_b = dihedral_models(diagram.iota_d_minus_b.target(), &-b.clone())?;
    let models_a = dihedral_models(diagram.iota_d_a.target(), a)?;

    // For alpha in S_ba, the restrictions of all extensions of theta + alpha.
    let mut restrictions = Vec::new();
    for alpha in part.class(ClassLabel::Sba) {
        let rb: ElementSet<Z> =
            preimages(&diagram.iota_w_minus_b, alpha)?.iter().map(|beta| diagram.iota_d_minus_b.apply(beta)).collect();
        let ra: ElementSet<Z> =
            preimages(&diagram.iota_w_a, alpha)?.iter().map(|beta| diagram.iota_d_a.apply(beta)).collect();
        restrictions.push((rb, ra));
    }

    let twice = twice_group(&m_group)?;
    let mut c1_pairs = BTreeSet::new();
    let mut candidates = BTreeSet::new();
    let mut consistent_models = 0;
    for mb in &models_b {
        for ma in &models_a {
            let consistent = restrictions
                .iter()
                .all(|(rb, ra)| rb.iter().cartesian_product(ra.iter()).all(|(xb, xa)| mb.d[xb] == ma.d[xa]));
            if !consistent {
                continue;
            }
            consistent_models += 1;
            c1_pairs.insert((mb.c1_base.clone(), ma.c1_base.clone()));
            let ib = image_of_preimage(&diagram.iota_w_minus_b, &diagram.iota_d_minus_b, &mb.c1_base)?;
            let ia = image_of_preimage(&diagram.iota_w_a, &diagram.iota_d_a, &ma.c1_base)?;
            candidates.extend(ib.intersection(&ia).filter(|x| twice.contains(*x)).cloned());
        }
    }
    if c1_pairs.len() != 1 || candidates.len() != 1 {
        return Err(Error::Invalid(format!(
            "c1(theta) not determined in case {case}: {} restriction classes, {} candidates",
            c1_pairs.len(),
            candidates.len()
        )));
    }
    let (c1_u_b, c1_u_a) = c1_pairs.into_iter().next().expect("one pair");
    let preimage_b = preimages(&diagram.iota_d_minus_b, &c1_u_b)?;
    let preimage_a = preimages(&diagram.iota_d_a, &c1_u_a)?;
    let image_b = preimage_b.iter().map(|x| diagram.iota_w_minus_b.apply(x)).collect();
    let image_a = preimage_a.iter().map(|x| diagram.iota_w_a.apply(x)).collect();
    Ok(ExtensionData {
        case,
        c1_u_b,
        c1_u_a,
        preimage_b,
        preimage_a,
        image_b,
        image_a,
        c1_theta: candidates.into_iter().next().expect("one candidate"),
        consistent_models,
    })
}

fn image_of_preimage<Z: Scalar>(to_m: &GroupHom<Z>, to_d: &GroupHom<Z>, c1: &[Z]) -> Result<ElementSet<Z>> {
    Ok(preimages(to_d, c1)?.iter().map(|x| to_m.apply(x)).collect())
}

/// First Chern class of each class, from `c1(theta + alpha) = c1(theta) + 2 alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernAssignment<Z> {
    pub case: ParityCase,
    pub values: BTreeMap<ClassLabel, Element<Z>>,
}

impl<Z: Scalar> ChernAssignment<Z> {
    pub fn get(&self, label: ClassLabel) -> &Element<Z> {
        &self.values[&label]
    }

    pub fn to_json(&self) -> Value {
        let m: serde_json::Map<String, Value> =
            self.values.iter().map(|(l, v)| (l.name().to_string(), vector_to_json(v))).collect();
        json!({"parity_case": self.case.to_string(), "c1": m})
    }
}

impl<Z: Scalar> fmt::Display for ChernAssignment<Z> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(l, v)| format!("{l} -> {}", show(v))).collect();
        write!(f, "{}", parts.join(", "))
    }
}

/// `c1` on every element of `H^2(M)`, relative to `theta`.
pub fn chern_function<Z: Scalar>(part: &SpincPartition<Z>, c1_theta: &[Z]) -> Result<BTreeMap<Element<Z>, Element<Z>>> {
    let g = &part.group;
    Ok(g.elements(enumeration_cap())?
        .into_iter()
        .map(|x| {
            let offset = g.add(&x, &g.neg(&part.theta));
            let c1 = g.add(c1_theta, &g.scale(&Z::of(2), &offset));
            (x, c1)
        })
        .collect())
}

pub fn chern_classes<Z: Scalar>(a: &Z, b: &Z) -> Result<ChernAssignment<Z>> {
    let part = partition(a, b)?;
    let ext = extension_data(a, b)?;
    let c1 = chern_function(&part, &ext.c1_theta)?;
    let mut values = BTreeMap::new();
    for label in ClassLabel::ALL {
        let seen: BTreeSet<&Element<Z>> = part.class(label).iter().map(|x| &c1[x]).collect();
        if seen.len() != 1 {
            return Err(Error::Invalid(format!("c1 is not constant on {label}")));
        }
        values.insert(label, seen.into_iter().next().expect("one value").clone());
    }
    Ok(ChernAssignment { case: part.case, values })
}

/// Classes of self-conjugate structures, i.e. those with `c1 = 0`.
pub fn self_conjugate_classes<Z: Scalar>(a: &Z, b: &Z) -> Result<BTreeSet<ClassLabel>> {
    let chern = chern_classes(a, b)?;
    Ok(chern.values.iter().filter(|(_, v)| v.iter().all(Z::is_zero)).map(|(l, _)| *l).collect())
}

/// Offsets `delta` in `S_ba` that can serve as `conj(theta) - theta`:
/// `c1(theta) + 2 delta = -c1(theta)`.
pub fn conjugation_shifts<Z: Scalar>(part: &SpincPartition<Z>, c1_theta: &[Z]) -> ElementSet<Z> {
    let g = &part.group;
    part.class(ClassLabel::Sba)
        .iter()
        .map(|x| g.add(x, &g.neg(&part.theta)))
        .filter(|delta| g.is_zero_element(&g.add(&g.scale(&Z::of(2), c1_theta), &g.scale(&Z::of(2), delta))))
        .collect()
}

/// For every admissible conjugation `theta + alpha -> theta + delta - alpha`:
/// it maps each class onto itself and negates `c1`.
pub fn conjugation_respects_classes<Z: Scalar>(part: &SpincPartition<Z>, c1_theta: &[Z]) -> Result<bool> {
    let g = &part.group;
    let c1 = chern_function(part, c1_theta)?;
    let shifts = conjugation_shifts(part, c1_theta);
    if shifts.is_empty() {
        return Ok(false);
    }
    for delta in &shifts {
        for x in g.elements(enumeration_cap())? {
            let offset = g.add(&x, &g.neg(&part.theta));
            let conj = g.add(&part.theta, &g.add(delta, &g.neg(&offset)));
            if part.label_of(&x) != part.label_of(&conj) || c1[&conj] != g.neg(&c1[&x]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
