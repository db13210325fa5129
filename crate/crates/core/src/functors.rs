//! The functors `S: C -> A₂` and `T: A₂ -> C`, the natural isomorphism
//! `M: Id -> ST` with its inverse, and total certificate checks for the
//! equivalence.

use std::fmt;

use crate::categories::{
    ensure_valid, A2Morphism, A2Object, CMorphism, CObject, CategoryError, Side, Violation,
};
use crate::exactlin::{LinearMap, Subspace};

/// `S(V; A, B) = (A₁ ⇄ V ⇄ A₂)` with the inclusions as `δ` and the
/// projections along `B₁`, `B₂` as `γ`. `E_∓` are coordinate spaces in the
/// canonical bases of `A₁`, `A₂`.
pub fn s_on_object(x: &CObject) -> Result<A2Object, CategoryError> {
    ensure_valid(x.validate())?;
    let out = A2Object::new(
        x.a1().inclusion(),
        x.a1().projection_along(x.b1())?,
        x.a2().inclusion(),
        x.a2().projection_along(x.b2())?,
    );
    debug_assert!(out.is_valid());
    Ok(out)
}

/// `S(φ) = (φ∘i₁, φ, φ∘i₂)` with the outer components read in the canonical
/// coordinates of the target's `A₁`, `A₂`.
pub fn s_on_morphism(f: &CMorphism) -> Result<A2Morphism, CategoryError> {
    ensure_valid(f.validate())?;
    let (src, tgt) = (f.source(), f.target());
    let e_minus = tgt.a1().coordinates_of(&f.map().restrict(src.a1())?)?;
    let e_plus = tgt.a2().coordinates_of(&f.map().restrict(src.a2())?)?;
    let out = A2Morphism::new(
        s_on_object(src)?,
        s_on_object(tgt)?,
        e_minus,
        f.map().clone(),
        e_plus,
    );
    debug_assert!(out.is_valid());
    Ok(out)
}

/// `T(E) = (E₀; im δ₋, im δ₊; ker γ₋, ker γ₊)`.
pub fn t_on_object(e: &A2Object) -> Result<CObject, CategoryError> {
    ensure_valid(e.validate())?;
    let out = CObject::new(
        e.n_zero(),
        e.delta_minus().image_basis(),
        e.delta_plus().image_basis(),
        e.gamma_minus().kernel_basis(),
        e.gamma_plus().kernel_basis(),
    );
    debug_assert!(out.is_valid());
    Ok(out)
}

/// `T(e₋, e₀, e₊) = e₀`.
pub fn t_on_morphism(f: &A2Morphism) -> Result<CMorphism, CategoryError> {
    ensure_valid(f.validate())?;
    let out = CMorphism::new(
        t_on_object(f.source())?,
        t_on_object(f.target())?,
        f.e_zero().clone(),
    );
    debug_assert!(out.is_valid());
    Ok(out)
}

/// `S(T(e))`, computed by running both functors.
pub fn st_on_object(e: &A2Object) -> Result<A2Object, CategoryError> {
    s_on_object(&t_on_object(e)?)
}

pub fn st_on_morphism(f: &A2Morphism) -> Result<A2Morphism, CategoryError> {
    s_on_morphism(&t_on_morphism(f)?)
}

fn image_of(e: &A2Object, side: Side) -> Subspace {
    e.delta(side).image_basis()
}

/// `M(E): E -> ST(E)` with components `(δ₋, 1, δ₊)`, the outer two read in
/// the canonical coordinates of `im δ∓`.
pub fn nat_iso_m(e: &A2Object) -> Result<A2Morphism, CategoryError> {
    let target = st_on_object(e)?;
    let component = |side: Side| image_of(e, side).coordinates_of(e.delta(side));
    Ok(A2Morphism::new(
        e.clone(),
        target,
        component(Side::Minus)?,
        LinearMap::identity(e.n_zero()),
        component(Side::Plus)?,
    ))
}

/// `M(E)⁻¹: ST(E) -> E` with components `(γ₋, 1, γ₊)` restricted to `im δ∓`.
pub fn nat_iso_m_inv(e: &A2Object) -> Result<A2Morphism, CategoryError> {
    let source = st_on_object(e)?;
    let component = |side: Side| e.gamma(side).restrict(&image_of(e, side));
    Ok(A2Morphism::new(
        source,
        e.clone(),
        component(Side::Minus)?,
        LinearMap::identity(e.n_zero()),
        component(Side::Plus)?,
    ))
}

/// One failed check inside a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Finding {
    pub check: &'static str,
    pub detail: String,
}

impl Finding {
    fn new(check: &'static str, detail: impl Into<String>) -> Self {
        Finding {
            check,
            detail: detail.into(),
        }
    }

    fn from_violations(check: &'static str, vs: Vec<Violation>) -> Vec<Finding> {
        vs.into_iter()
            .map(|v| Finding::new(check, v.to_string()))
            .collect()
    }

    fn from_error(check: &'static str, err: CategoryError) -> Finding {
        match err {
            CategoryError::Invalid(vs) => {
                let lines: Vec<String> = vs.iter().map(ToString::to_string).collect();
                Finding::new(check, format!("invalid input: {}", lines.join("; ")))
            }
            other => Finding::new(check, other.to_string()),
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

/// Result of a certification run. Empty finding lists mean certified.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NaturalityCertificate {
    pub object_findings: Vec<Finding>,
    pub morphism_findings: Vec<Finding>,
}

impl NaturalityCertificate {
    pub fn is_certified(&self) -> bool {
        self.object_findings.is_empty() && self.morphism_findings.is_empty()
    }

    pub fn merge(&mut self, other: NaturalityCertificate) {
        self.object_findings.extend(other.object_findings);
        self.morphism_findings.extend(other.morphism_findings);
    }

    pub fn findings(&self) -> impl Iterator<Item = &Finding> {
        self.object_findings.iter().chain(&self.morphism_findings)
    }
}

/// Checks `T(S(x)) = x` on the nose and `T(S(f)) = f` for every supplied
/// morphism. Also records any validator failure of `S(x)`.
pub fn certify_ts_identity(x: &CObject, morphisms: &[CMorphism]) -> NaturalityCertificate {
    let mut cert = NaturalityCertificate::default();
    match s_on_object(x) {
        Err(err) => cert
            .object_findings
            .push(Finding::from_error("s-object", err)),
        Ok(sx) => {
            cert.object_findings
                .extend(Finding::from_violations("s-object-valid", sx.validate()));
            match t_on_object(&sx) {
                Err(err) => cert
                    .object_findings
                    .push(Finding::from_error("ts-object", err)),
                Ok(tsx) if &tsx != x => cert
                    .object_findings
                    .push(Finding::new("ts-object", "T(S(x)) differs from x")),
                Ok(_) => {}
            }
        }
    }
    for (k, f) in morphisms.iter().enumerate() {
        match s_on_morphism(f).and_then(|sf| t_on_morphism(&sf)) {
            Err(err) => cert
                .morphism_findings
                .push(Finding::from_error("ts-morphism", err)),
            Ok(tsf) => {
                if tsf.map() != f.map() {
                    cert.morphism_findings.push(Finding::new(
                        "ts-morphism",
                        format!("morphism {k}: underlying map changed"),
                    ));
                } else if &tsf != f {
                    cert.morphism_findings.push(Finding::new(
                        "ts-morphism",
                        format!("morphism {k}: endpoints changed"),
                    ));
                }
            }
        }
    }
    cert
}

/// Checks that `T(e)` is a valid C object, that `M(e)` and `M(e)⁻¹` are
/// valid A₂ morphisms, and that they compose to identities in both orders.
pub fn certify_st_isomorphism(e: &A2Object) -> NaturalityCertificate {
    let mut cert = NaturalityCertificate::default();
    let findings = &mut cert.object_findings;
    match t_on_object(e) {
        Err(err) => {
            findings.push(Finding::from_error("t-object", err));
            return cert;
        }
        Ok(te) => findings.extend(Finding::from_violations("t-object-valid", te.validate())),
    }
    let (m, m_inv) = match (nat_iso_m(e), nat_iso_m_inv(e)) {
        (Ok(m), Ok(m_inv)) => (m, m_inv),
        (Err(err), _) | (_, Err(err)) => {
            findings.push(Finding::from_error("nat-iso", err));
            return cert;
        }
    };
    findings.extend(Finding::from_violations("nat-iso-valid", m.validate()));
    findings.extend(Finding::from_violations(
        "nat-iso-inv-valid",
        m_inv.validate(),
    ));
    match m_inv.compose(&m) {
        Ok(c) if c == A2Morphism::identity(e) => {}
        Ok(_) => findings.push(Finding::new("nat-iso-left", "M^-1 * M is not the identity")),
        Err(err) => findings.push(Finding::from_error("nat-iso-left", err)),
    }
    match m.compose(&m_inv) {
        Ok(c) if c == A2Morphism::identity(m.target()) => {}
        Ok(_) => findings.push(Finding::new(
            "nat-iso-right",
            "M * M^-1 is not the identity",
        )),
        Err(err) => findings.push(Finding::from_error("nat-iso-right", err)),
    }
    cert
}

/// Checks `ST(f) ∘ M(source) = M(target) ∘ f` componentwise.
pub fn certify_naturality(f: &A2Morphism) -> NaturalityCertificate {
    let mut cert = NaturalityCertificate::default();
    let sides = (|| -> Result<_, CategoryError> {
        let lhs = st_on_morphism(f)?.compose(&nat_iso_m(f.source())?)?;
        let rhs = nat_iso_m(f.target())?.compose(f)?;
        Ok((lhs, rhs))
    })();
    match sides {
        Err(err) => cert
            .morphism_findings
            .push(Finding::from_error("naturality", err)),
        Ok((lhs, rhs)) => {
            let names = ["minus", "zero", "plus"];
            for (k, name) in names.iter().enumerate() {
                if lhs.components()[k] != rhs.components()[k] {
                    cert.morphism_findings.push(Finding::new(
                        "naturality",
                        format!("component {name} of ST(f)*M != M*f"),
                    ));
                }
            }
        }
    }
    cert
}

/// Functor laws on composable pairs `(f, g)`, meaning `g ∘ f`:
/// `S(g∘f) = S(g)∘S(f)`, `T(g∘f) = T(g)∘T(f)` and preservation of
/// identities at every endpoint.
pub fn certify_functoriality(
    c_pairs: &[(CMorphism, CMorphism)],
    a2_pairs: &[(A2Morphism, A2Morphism)],
) -> NaturalityCertificate {
    let mut cert = NaturalityCertificate::default();
    let out = &mut cert.morphism_findings;
    for (k, (f, g)) in c_pairs.iter().enumerate() {
        let check = || -> Result<bool, CategoryError> {
            Ok(s_on_morphism(&g.compose(f)?)? == s_on_morphism(g)?.compose(&s_on_morphism(f)?)?)
        };
        match check() {
            Ok(true) => {}
            Ok(false) => out.push(Finding::new("s-composition", format!("pair {k}"))),
            Err(err) => out.push(Finding::from_error("s-composition", err)),
        }
        for obj in [f.source(), f.target(), g.target()] {
            let ok = s_on_morphism(&CMorphism::identity(obj))
                .and_then(|sid| Ok(sid == A2Morphism::identity(&s_on_object(obj)?)));
            match ok {
                Ok(true) => {}
                Ok(false) => out.push(Finding::new("s-identity", format!("pair {k}"))),
                Err(err) => out.push(Finding::from_error("s-identity", err)),
            }
        }
    }
    for (k, (f, g)) in a2_pairs.iter().enumerate() {
        let check = || -> Result<bool, CategoryError> {
            Ok(t_on_morphism(&g.compose(f)?)? == t_on_morphism(g)?.compose(&t_on_morphism(f)?)?)
        };
        match check() {
            Ok(true) => {}
            Ok(false) => out.push(Finding::new("t-composition", format!("pair {k}"))),
            Err(err) => out.push(Finding::from_error("t-composition", err)),
        }
        for obj in [f.source(), f.target(), g.target()] {
            let ok = t_on_morphism(&A2Morphism::identity(obj))
                .and_then(|tid| Ok(tid == CMorphism::identity(&t_on_object(obj)?)));
            match ok {
                Ok(true) => {}
                Ok(false) => out.push(Finding::new("t-identity", format!("pair {k}"))),
                Err(err) => out.push(Finding::from_error("t-identity", err)),
            }
        }
    }
    cert
}
