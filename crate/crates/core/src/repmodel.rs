//! Representations of products of simple groups with torus factors.
//!
//! An [`IrrepSpec`] records the complexification of a real irreducible as a
//! tensor product of complex irreducibles of the simple factors, possibly
//! twisted by a circle charge, together with how the real form is presented.
//! Canonical normal forms (factor ordering, weights minimized over diagram
//! automorphisms, the B2/C2 and A3/D3 identifications) make table rows
//! comparable by string equality.
//!
//! String grammar, parsed and emitted bidirectionally:
//!
//! ```text
//! spec    := [ "U1(" int ")" " * " ] factor ( " * " factor )* [ " : " marker ] [ " @quot" ]
//! factor  := family rank "[" uint ( "," uint )* "]"      e.g.  A5[0,0,1,0,0]
//! marker  := "R-intrinsic" | "R-form" | "C-realification" | "H-form"
//! ```

use crate::liecore::{
    self, dual_weight, fs_type, weyl_dim, FSType, Family, HighestWeight, SimpleGroupType,
};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("{0}")]
    Lie(#[from] liecore::LieError),
    #[error("{got} weights for {want} simple factors")]
    WeightCount { got: usize, want: usize },
    #[error("{got} charges for torus rank {want}")]
    ChargeCount { got: usize, want: usize },
    #[error("H tensor field requires every non-trivial factor to be quaternionic")]
    BadHTensor,
    #[error("real-form presentation requires the underlying complex type to be real")]
    BadRealForm,
    #[error("non-trivial torus charges force complex type and realification")]
    BadTorusPresentation,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A product of simple compact groups with a torus factor.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GroupSpec {
    pub simple_factors: Vec<SimpleGroupType>,
    pub torus_rank: usize,
}

impl GroupSpec {
    pub fn trivial() -> Self {
        GroupSpec { simple_factors: vec![], torus_rank: 0 }
    }

    pub fn torus(rank: usize) -> Self {
        GroupSpec { simple_factors: vec![], torus_rank: rank }
    }

    pub fn simple(t: SimpleGroupType) -> Self {
        GroupSpec { simple_factors: vec![t], torus_rank: 0 }
    }

    /// SO(k) as a group spec (identity component data only).
    pub fn so(k: usize) -> Self {
        match k {
            0 | 1 => Self::trivial(),
            2 => Self::torus(1),
            3 => Self::simple(SimpleGroupType::a(1)),
            4 => GroupSpec {
                simple_factors: vec![SimpleGroupType::a(1), SimpleGroupType::a(1)],
                torus_rank: 0,
            },
            5 => Self::simple(SimpleGroupType::b(2)),
            6 => Self::simple(SimpleGroupType::a(3)),
            k if k % 2 == 1 => Self::simple(SimpleGroupType::b(k / 2)),
            k => Self::simple(SimpleGroupType::d(k / 2)),
        }
    }

    pub fn su(k: usize) -> Self {
        if k <= 1 {
            Self::trivial()
        } else {
            Self::simple(SimpleGroupType::a(k - 1))
        }
    }

    pub fn u(k: usize) -> Self {
        if k == 0 {
            Self::trivial()
        } else if k == 1 {
            Self::torus(1)
        } else {
            GroupSpec { simple_factors: vec![SimpleGroupType::a(k - 1)], torus_rank: 1 }
        }
    }

    pub fn sp(k: usize) -> Self {
        match k {
            0 => Self::trivial(),
            1 => Self::simple(SimpleGroupType::a(1)),
            2 => Self::simple(SimpleGroupType::b(2)),
            k => Self::simple(SimpleGroupType::c(k)),
        }
    }

    pub fn product(parts: impl IntoIterator<Item = GroupSpec>) -> Self {
        let mut out = Self::trivial();
        for p in parts {
            out.simple_factors.extend(p.simple_factors);
            out.torus_rank += p.torus_rank;
        }
        out.simple_factors.sort();
        out
    }

    pub fn dim(&self) -> i64 {
        self.torus_rank as i64 + self.simple_factors.iter().map(|t| t.group_dim()).sum::<i64>()
    }

    pub fn is_trivial(&self) -> bool {
        self.simple_factors.is_empty() && self.torus_rank == 0
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        if self.torus_rank == 1 {
            parts.push("U1".to_string());
        } else if self.torus_rank > 1 {
            parts.push(format!("U1^{}", self.torus_rank));
        }
        for t in &self.simple_factors {
            parts.push(t.to_string());
        }
        write!(f, "{}", parts.join("x"))
    }
}

/// The algebra over which the factor representations are tensored.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum TensorField {
    R,
    C,
    H,
}

/// How the real irreducible is presented relative to its complexification.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Presentation {
    IntrinsicallyReal,
    RealForm,
    Realification,
}

/// The three disjoint classes of real irreducibles.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RealIrrepCase {
    CaseAReal,
    CaseBQuaternionic,
    CaseCComplex,
}

/// Which pipeline branch realizes the representation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum RealizationRoute {
    Simple,
    RealTensor,
    QuaternionicTensor,
    ComplexRealification,
}

/// An irreducible representation of a product group.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct IrrepSpec {
    pub group: GroupSpec,
    /// One highest weight per simple factor, aligned with the group.
    pub weights: Vec<HighestWeight>,
    /// One integer charge per torus factor.
    pub u1_charges: Vec<i64>,
    pub tensor_field: TensorField,
    pub presentation: Presentation,
    /// Marks known ineffective combinations (e.g. Sp(1)Sp(n) quotients); not
    /// part of the comparison key.
    pub effective_kernel_note: bool,
}

/// Type of a complex tensor product in terms of the factor types.
pub fn tensor_type(a: FSType, b: FSType) -> FSType {
    use FSType::*;
    match (a, b) {
        (Complex, _) | (_, Complex) => Complex,
        (Real, Real) | (Quaternionic, Quaternionic) => Real,
        _ => Quaternionic,
    }
}

impl IrrepSpec {
    pub fn simple(t: SimpleGroupType, w: HighestWeight) -> Self {
        let fs = fs_type(&t, &w);
        let presentation = match fs {
            FSType::Real => Presentation::RealForm,
            _ => Presentation::Realification,
        };
        IrrepSpec {
            group: GroupSpec::simple(t),
            weights: vec![w],
            u1_charges: vec![],
            tensor_field: TensorField::C,
            presentation,
            effective_kernel_note: false,
        }
    }

    pub fn validate(&self) -> Result<(), RepError> {
        if self.weights.len() != self.group.simple_factors.len() {
            return Err(RepError::WeightCount {
                got: self.weights.len(),
                want: self.group.simple_factors.len(),
            });
        }
        if self.u1_charges.len() != self.group.torus_rank {
            return Err(RepError::ChargeCount {
                got: self.u1_charges.len(),
                want: self.group.torus_rank,
            });
        }
        for (t, w) in self.group.simple_factors.iter().zip(&self.weights) {
            w.check(t)?;
        }
        if self.tensor_field == TensorField::H {
            for (fs, w) in self.factor_types().iter().zip(&self.weights) {
                if !w.is_zero() && *fs != FSType::Quaternionic {
                    return Err(RepError::BadHTensor);
                }
            }
            if self.presentation != Presentation::RealForm {
                return Err(RepError::BadHTensor);
            }
        }
        if self.presentation == Presentation::RealForm && self.total_type() != FSType::Real {
            return Err(RepError::BadRealForm);
        }
        if self.u1_charges.iter().any(|&c| c != 0)
            && self.presentation != Presentation::Realification
        {
            return Err(RepError::BadTorusPresentation);
        }
        Ok(())
    }

    pub fn factor_types(&self) -> Vec<FSType> {
        self.group
            .simple_factors
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| fs_type(t, w))
            .collect()
    }

    /// Type of the underlying complex irreducible (factor types multiplied
    /// under the tensor rule; any non-zero circle charge forces complex).
    pub fn total_type(&self) -> FSType {
        if self.u1_charges.iter().any(|&c| c != 0) {
            return FSType::Complex;
        }
        let mut acc = FSType::Real;
        for (fs, w) in self.factor_types().iter().zip(&self.weights) {
            if !w.is_zero() {
                acc = tensor_type(acc, *fs);
            }
        }
        acc
    }

    pub fn classify_real_irrep(&self) -> RealIrrepCase {
        match self.total_type() {
            FSType::Real => RealIrrepCase::CaseAReal,
            FSType::Quaternionic => RealIrrepCase::CaseBQuaternionic,
            FSType::Complex => RealIrrepCase::CaseCComplex,
        }
    }

    /// Complex degree of the underlying complex irreducible.
    pub fn complex_degree(&self) -> u128 {
        self.group
            .simple_factors
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| weyl_dim(t, w))
            .product()
    }

    /// Real dimension of the orthogonal representation.
    pub fn real_degree(&self) -> u128 {
        let d = self.complex_degree();
        match self.presentation {
            Presentation::Realification => 2 * d,
            _ => d,
        }
    }

    pub fn realization_route(&self) -> RealizationRoute {
        let nontrivial: Vec<FSType> = self
            .factor_types()
            .into_iter()
            .zip(&self.weights)
            .filter(|(_, w)| !w.is_zero())
            .map(|(fs, _)| fs)
            .collect();
        let has_charge = self.u1_charges.iter().any(|&c| c != 0);
        if nontrivial.len() <= 1 && !has_charge {
            return RealizationRoute::Simple;
        }
        if has_charge || nontrivial.contains(&FSType::Complex) {
            return RealizationRoute::ComplexRealification;
        }
        let quats = nontrivial.iter().filter(|fs| **fs == FSType::Quaternionic).count();
        let reals = nontrivial.len() - quats;
        if quats == 2 && reals == 0 {
            RealizationRoute::QuaternionicTensor
        } else {
            // Quaternionic pairs collapse to their real form inside a real
            // tensor; a lone quaternionic factor enters by realification.
            RealizationRoute::RealTensor
        }
    }

    /// Canonical presentation marker used in normal forms (the three-valued
    /// collapse of field and presentation).
    pub fn canonical_marker(&self) -> &'static str {
        match self.total_type() {
            FSType::Real => {
                if self.tensor_field == TensorField::H {
                    "H-form"
                } else {
                    "R-form"
                }
            }
            _ => "C-realification",
        }
    }

    /// Canonical form: weights minimized over diagram automorphisms, the
    /// B2/C2 and A3/D3 identifications applied, factors sorted, charges
    /// normalized to +1, field/presentation recomputed canonically.
    pub fn canonical(&self) -> IrrepSpec {
        let mut factors: Vec<(SimpleGroupType, HighestWeight)> = self
            .group
            .simple_factors
            .iter()
            .zip(&self.weights)
            .map(|(t, w)| canonical_factor(*t, w.clone()))
            .collect();
        factors.sort();
        let group = GroupSpec {
            simple_factors: factors.iter().map(|(t, _)| *t).collect(),
            torus_rank: self.group.torus_rank,
        };
        let weights = factors.into_iter().map(|(_, w)| w).collect();
        let u1_charges = self.u1_charges.iter().map(|&c| if c == 0 { 0 } else { 1 }).collect();
        let mut out = IrrepSpec {
            group,
            weights,
            u1_charges,
            tensor_field: self.tensor_field,
            presentation: self.presentation,
            effective_kernel_note: self.effective_kernel_note,
        };
        let total = out.total_type();
        out.presentation = match total {
            FSType::Real => Presentation::RealForm,
            _ => Presentation::Realification,
        };
        out.tensor_field = match total {
            FSType::Real => {
                let quats = out
                    .factor_types()
                    .iter()
                    .zip(&out.weights)
                    .filter(|(fs, w)| !w.is_zero() && **fs == FSType::Quaternionic)
                    .count();
                let others = out.weights.iter().filter(|w| !w.is_zero()).count() - quats;
                if quats == 2 && others == 0 && out.group.torus_rank == 0 {
                    TensorField::H
                } else {
                    TensorField::R
                }
            }
            _ => TensorField::C,
        };
        out
    }

    /// Canonical comparison key (ignores the effectivity note).
    pub fn normal_key(&self) -> String {
        let c = self.canonical();
        let mut s = String::new();
        if c.group.torus_rank > 0 {
            s.push_str("U1(1) * ");
        }
        for (i, (t, w)) in c.group.simple_factors.iter().zip(&c.weights).enumerate() {
            if i > 0 {
                s.push_str(" * ");
            }
            s.push_str(&format!("{t}{w}"));
        }
        s.push_str(" : ");
        s.push_str(c.canonical_marker());
        s
    }

    pub fn parse(input: &str) -> Result<IrrepSpec, RepError> {
        parse_spec(input)
    }
}

impl fmt::Display for IrrepSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for &c in &self.u1_charges {
            parts.push(format!("U1({c})"));
        }
        for (t, w) in self.group.simple_factors.iter().zip(&self.weights) {
            parts.push(format!("{t}{w}"));
        }
        let marker = match (self.tensor_field, self.presentation) {
            (TensorField::R, Presentation::IntrinsicallyReal) => "R-intrinsic",
            (_, Presentation::IntrinsicallyReal) => "R-intrinsic",
            (TensorField::H, _) => "H-form",
            (_, Presentation::RealForm) => "R-form",
            (_, Presentation::Realification) => "C-realification",
        };
        write!(f, "{} : {}", parts.join(" * "), marker)?;
        if self.effective_kernel_note {
            write!(f, " @quot")?;
        }
        Ok(())
    }
}

/// Minimize a factor weight over the diagram automorphism group, after the
/// low-rank identifications C2 -> B2 and D3 -> A3.
fn canonical_factor(t: SimpleGroupType, w: HighestWeight) -> (SimpleGroupType, HighestWeight) {
    let (t, w) = match (t.family, t.rank) {
        (Family::C, 2) => (SimpleGroupType::b(2), HighestWeight(vec![w.0[1], w.0[0]])),
        (Family::D, 3) => (SimpleGroupType::a(3), HighestWeight(vec![w.0[1], w.0[0], w.0[2]])),
        _ => (t, w),
    };
    // Orbit of the weight under the automorphism group generated by the
    // diagram automorphisms; take the lexicographic minimum.
    let gens = t.diagram_automorphisms();
    let mut orbit = std::collections::BTreeSet::new();
    orbit.insert(w.0.clone());
    let mut stack = vec![w.0.clone()];
    while let Some(v) = stack.pop() {
        for g in &gens {
            let mut u = vec![0u32; v.len()];
            for (i, &gi) in g.iter().enumerate() {
                u[gi] = v[i];
            }
            if orbit.insert(u.clone()) {
                stack.push(u);
            }
        }
    }
    (t, HighestWeight(orbit.into_iter().next().unwrap()))
}

fn parse_spec(input: &str) -> Result<IrrepSpec, RepError> {
    let err = |pos: usize, msg: &str| RepError::Parse { pos, msg: msg.to_string() };
    let mut effective_kernel_note = false;
    let mut body = input.trim();
    if let Some(stripped) = body.strip_suffix("@quot") {
        effective_kernel_note = true;
        body = stripped.trim_end();
    }
    let (body, marker) = match body.rsplit_once(" : ") {
        Some((b, m)) => (b.trim(), Some(m.trim())),
        None => (body, None),
    };
    let mut charges = Vec::new();
    let mut factors: Vec<(SimpleGroupType, HighestWeight)> = Vec::new();
    for (k, raw) in body.split('*').enumerate() {
        let part = raw.trim();
        let pos = input.find(part).unwrap_or(k);
        if part.is_empty() {
            return Err(err(pos, "empty factor"));
        }
        if let Some(rest) = part.strip_prefix("U1(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| err(pos, "expected ')'"))?;
            let c: i64 =
                inner.trim().parse().map_err(|_| err(pos, "bad torus charge"))?;
            charges.push(c);
            continue;
        }
        let fam = match part.chars().next().unwrap() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return Err(err(pos, "expected family letter A-G or U1(...)")),
        };
        let bracket = part.find('[').ok_or_else(|| err(pos, "expected '['"))?;
        let rank: usize =
            part[1..bracket].parse().map_err(|_| err(pos, "bad rank"))?;
        let t = SimpleGroupType::new(fam, rank)?;
        let inner = part[bracket + 1..]
            .strip_suffix(']')
            .ok_or_else(|| err(pos, "expected ']'"))?;
        let coeffs: Result<Vec<u32>, _> =
            inner.split(',').map(|c| c.trim().parse::<u32>()).collect();
        let w = HighestWeight(coeffs.map_err(|_| err(pos, "bad weight coefficient"))?);
        w.check(&t)?;
        factors.push((t, w));
    }
    if factors.is_empty() {
        return Err(err(0, "no simple factor"));
    }
    let group = GroupSpec {
        simple_factors: factors.iter().map(|(t, _)| *t).collect(),
        torus_rank: charges.len(),
    };
    let weights = factors.into_iter().map(|(_, w)| w).collect();
    let mut spec = IrrepSpec {
        group,
        weights,
        u1_charges: charges,
        tensor_field: TensorField::C,
        presentation: Presentation::Realification,
        effective_kernel_note,
    };
    match marker {
        Some("R-intrinsic") => {
            spec.tensor_field = TensorField::R;
            spec.presentation = Presentation::IntrinsicallyReal;
        }
        Some("R-form") => {
            spec.tensor_field = TensorField::R;
            spec.presentation = Presentation::RealForm;
        }
        Some("C-realification") => {
            spec.tensor_field = TensorField::C;
            spec.presentation = Presentation::Realification;
        }
        Some("H-form") => {
            spec.tensor_field = TensorField::H;
            spec.presentation = Presentation::RealForm;
        }
        Some(other) => {
            return Err(RepError::Parse { pos: input.len(), msg: format!("unknown marker {other:?}") })
        }
        None => {
            // Infer the canonical marker.
            let total = spec.total_type();
            spec.presentation = match total {
                FSType::Real => Presentation::RealForm,
                _ => Presentation::Realification,
            };
            let c = spec.canonical();
            spec.tensor_field = c.tensor_field;
        }
    }
    Ok(spec)
}

/// Summary of the real irreducible underlying a spec.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RealRep {
    pub real_degree: u128,
    pub fs: FSType,
    pub effective_dim_group: i64,
}

impl RealRep {
    pub fn of(spec: &IrrepSpec) -> RealRep {
        RealRep {
            real_degree: spec.real_degree(),
            fs: spec.total_type(),
            effective_dim_group: spec.group.dim(),
        }
    }
}

/// Dual of a spec: every factor weight dualized, charges negated.  The
/// realification of a representation and of its dual are isomorphic.
pub fn dual_spec(spec: &IrrepSpec) -> IrrepSpec {
    let weights = spec
        .group
        .simple_factors
        .iter()
        .zip(&spec.weights)
        .map(|(t, w)| dual_weight(t, w))
        .collect();
    IrrepSpec {
        group: spec.group.clone(),
        weights,
        u1_charges: spec.u1_charges.iter().map(|c| -c).collect(),
        ..spec.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> IrrepSpec {
        IrrepSpec::parse(s).unwrap()
    }

    #[test]
    fn tensor_type_table() {
        use FSType::*;
        assert_eq!(tensor_type(Real, Real), Real);
        assert_eq!(tensor_type(Quaternionic, Quaternionic), Real);
        assert_eq!(tensor_type(Real, Quaternionic), Quaternionic);
        assert_eq!(tensor_type(Complex, Quaternionic), Complex);
        // Commutative and associative over all triples.
        let all = [Real, Complex, Quaternionic];
        for a in all {
            for b in all {
                assert_eq!(tensor_type(a, b), tensor_type(b, a));
                for c in all {
                    assert_eq!(
                        tensor_type(tensor_type(a, b), c),
                        tensor_type(a, tensor_type(b, c))
                    );
                }
            }
        }
    }

    #[test]
    fn classify_cases() {
        // C^2 of SU(2) alone.
        let s = spec("A1[1]");
        assert_eq!(s.classify_real_irrep(), RealIrrepCase::CaseBQuaternionic);
        // Sp(1) x Sp(3)-vector over H.
        let s = spec("A1[1] * C3[1,0,0] : H-form");
        assert_eq!(s.classify_real_irrep(), RealIrrepCase::CaseAReal);
        // U(1) charge with the Spin(12) half-spin.
        let s = spec("U1(1) * D6[0,0,0,0,0,1]");
        assert_eq!(s.classify_real_irrep(), RealIrrepCase::CaseCComplex);
    }

    #[test]
    fn real_degrees() {
        // SO(3) weight [4] is R^5.
        assert_eq!(spec("A1[4]").real_degree(), 5);
        // Sp(1) (x)_H Spin(11): real dimension of H^16 is 64.
        assert_eq!(spec("A1[1] * B5[0,0,0,0,1] : H-form").real_degree(), 64);
        // U(1) x E7 on C^56 realifies to 112.
        assert_eq!(spec("U1(1) * E7[0,0,0,0,0,0,1]").real_degree(), 112);
    }

    #[test]
    fn routes() {
        assert_eq!(
            spec("B2[1,0] * B3[1,0,0] : R-form").realization_route(),
            RealizationRoute::RealTensor
        );
        assert_eq!(
            spec("A1[2] * A1[1]").realization_route(),
            RealizationRoute::RealTensor
        );
        assert_eq!(
            spec("A1[1] * A1[5] : H-form").realization_route(),
            RealizationRoute::QuaternionicTensor
        );
        assert_eq!(
            spec("U1(1) * A5[0,0,1,0,0]").realization_route(),
            RealizationRoute::ComplexRealification
        );
        assert_eq!(spec("C3[0,0,1]").realization_route(), RealizationRoute::Simple);
    }

    #[test]
    fn canonical_merges_equivalent_rows() {
        // Duality: C^5 (x) C^5 and its conjugate presentations agree.
        let a = spec("A4[1,0,0,0] * A4[1,0,0,0]");
        let b = spec("A4[0,0,0,1] * A4[0,0,0,1]");
        assert_eq!(a.normal_key(), b.normal_key());
        // C2 = B2: the Sp(2) vector is the Spin(5) spin representation.
        let a = spec("C2[1,0]");
        let b = spec("B2[0,1]");
        assert_eq!(a.normal_key(), b.normal_key());
        // D6 half-spins are exchanged by the diagram automorphism.
        let a = spec("U1(1) * D6[0,0,0,0,0,1]");
        let b = spec("U1(1) * D6[0,0,0,0,1,0]");
        assert_eq!(a.normal_key(), b.normal_key());
        // Sp(1)Sp(2) vs Sp(1) x Sp(2) differ only by the effectivity note.
        let a = spec("A1[1] * B2[0,1] : H-form @quot");
        let b = spec("A1[1] * B2[0,1] : H-form");
        assert_eq!(a.normal_key(), b.normal_key());
        assert!(a.effective_kernel_note && !b.effective_kernel_note);
    }

    #[test]
    fn grammar_roundtrip() {
        for s in [
            "U1(1) * A5[0,0,1,0,0] : C-realification",
            "A1[1] * B5[0,0,0,0,1] : H-form",
            "A1[2] * A1[1] * B2[0,1] : R-form @quot",
            "G2[1,0] : R-form",
        ] {
            let parsed = spec(s);
            assert_eq!(parsed.to_string(), s);
            parsed.validate().unwrap();
        }
    }

    #[test]
    fn invalid_specs_rejected() {
        // H tensor with a non-quaternionic factor.
        let mut s = spec("A1[2] * A1[1]");
        s.tensor_field = TensorField::H;
        s.presentation = Presentation::RealForm;
        assert!(s.validate().is_err());
        // Charges force realification.
        let mut s = spec("U1(1) * A1[2]");
        s.presentation = Presentation::RealForm;
        assert!(s.validate().is_err());
        assert!(IrrepSpec::parse("Z3[1]").is_err());
    }

    #[test]
    fn dual_preserves_real_degree_and_key() {
        for s in ["A4[2,0,0,0]", "U1(1) * A2[1,0]", "A9[0,1,0,0,0,0,0,0,0]"] {
            let a = spec(s);
            let d = dual_spec(&a);
            assert_eq!(a.real_degree(), d.real_degree());
            assert_eq!(a.normal_key(), d.normal_key());
        }
    }
}
