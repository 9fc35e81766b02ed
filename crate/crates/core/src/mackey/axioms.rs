use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::qlin::QMatrix;

use super::MackeyFunctor;

/// The identities a Mackey functor must satisfy, grouped as the checker
/// reports them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    /// Every level and structure map is present with the right shape.
    Shape,
    /// `R^H_H = I^H_H = id` and `C_h = id` on `M(H)` for `h ∈ H`.
    Identity,
    /// `R^H_L = R^K_L R^H_K` and `I^H_L = I^H_K I^K_L`.
    Transitivity,
    /// Conjugations compose like the group: `C_s C_g = C_{sg}`.
    Associativity,
    /// `C_g R^H_K = R^{gH}_{gK} C_g` and likewise for induction.
    Equivariance,
    /// The double coset formula for `R^H_K I^H_L`.
    Mackey,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub violations: Vec<Violation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self) -> BTreeSet<Axiom> {
        self.violations.iter().map(|v| v.axiom).collect()
    }

    fn push(&mut self, axiom: Axiom, detail: String) {
        self.violations.push(Violation { axiom, detail });
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all axioms hold");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}", v.axiom, v.detail)?;
        }
        Ok(())
    }
}

/// Exhaustive exact verification of the Mackey functor axioms over all
/// subgroup pairs and triples and all double cosets.
pub fn check_axioms(m: &MackeyFunctor) -> AxiomReport {
    let mut report = AxiomReport::default();
    if let Err(e) = m.check_shapes() {
        report.push(Axiom::Shape, e.to_string());
        return report;
    }
    let lat = m.lattice();
    let g = lat.group();
    let name = |h| lat.name(h);

    for h in lat.ids() {
        let id = QMatrix::identity(m.dim(h));
        if *m.res(h, h) != id {
            report.push(Axiom::Identity, format!("R^{0}_{0} is not the identity", name(h)));
        }
        if *m.ind(h, h) != id {
            report.push(Axiom::Identity, format!("I^{0}_{0} is not the identity", name(h)));
        }
        for &x in lat.elements(h) {
            if *m.conj(x, h) != id {
                report.push(Axiom::Identity, format!("C_{} is not the identity on {}", g.label(x), name(h)));
            }
        }
    }

    for h in lat.ids() {
        for k in lat.subgroups_of(h) {
            for l in lat.subgroups_of(k) {
                if *m.res(h, l) != m.res(k, l) * m.res(h, k) {
                    report.push(
                        Axiom::Transitivity,
                        format!("R^{}_{} != R^{}_{} R^{}_{}", name(h), name(l), name(k), name(l), name(h), name(k)),
                    );
                }
                if *m.ind(l, h) != m.ind(k, h) * m.ind(l, k) {
                    report.push(
                        Axiom::Transitivity,
                        format!("I^{}_{} != I^{}_{} I^{}_{}", name(h), name(l), name(h), name(k), name(k), name(l)),
                    );
                }
            }
        }
    }

    for (pos, &s) in g.generators().iter().enumerate() {
        for x in 0..g.order() {
            let sx = g.mul(s, x);
            for h in lat.ids() {
                if m.conj_gen(pos, lat.conj(x, h)) * m.conj(x, h) != *m.conj(sx, h) {
                    report.push(
                        Axiom::Associativity,
                        format!("C_{} C_{} != C_{} on {}", g.label(s), g.label(x), g.label(sx), name(h)),
                    );
                }
            }
        }
    }

    for x in 0..g.order() {
        for h in lat.ids() {
            let xh = lat.conj(x, h);
            for k in lat.subgroups_of(h) {
                let xk = lat.conj(x, k);
                if m.conj(x, k) * m.res(h, k) != m.res(xh, xk) * m.conj(x, h) {
                    report.push(
                        Axiom::Equivariance,
                        format!("C_{} does not commute with R^{}_{}", g.label(x), name(h), name(k)),
                    );
                }
                if m.conj(x, h) * m.ind(k, h) != m.ind(xk, xh) * m.conj(x, k) {
                    report.push(
                        Axiom::Equivariance,
                        format!("C_{} does not commute with I^{}_{}", g.label(x), name(h), name(k)),
                    );
                }
            }
        }
    }

    for h in lat.ids() {
        let subs = lat.subgroups_of(h);
        for &k in &subs {
            for &l in &subs {
                let lhs = m.res(h, k) * m.ind(l, h);
                let mut rhs = QMatrix::zeros(m.dim(k), m.dim(l));
                for x in lat.double_cosets(k, h, l) {
                    let xi = g.inv(x);
                    // K ∩ xLx⁻¹ and L ∩ x⁻¹Kx
                    let top = lat.intersect(k, lat.conj(x, l));
                    let bottom = lat.intersect(l, lat.conj(xi, k));
                    rhs = &rhs + &(&(m.ind(top, k) * m.conj(x, bottom)) * m.res(l, bottom));
                }
                if lhs != rhs {
                    report.push(
                        Axiom::Mackey,
                        format!("R^{0}_{1} I^{0}_{2} differs from the double coset sum", name(h), name(k), name(l)),
                    );
                }
            }
        }
    }
    report
}
