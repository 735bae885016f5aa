//! Directed graphs whose graph algebras realize single-factor profiles, and
//! the K-theoretic check that certifies them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::digraph::{condition_k, DirectedGraph};
use super::ktheory::{graph_ktheory, sink_ideal_analysis};
use crate::abelian::FgAbelianGroup;
use crate::artin::{is_graph_algebra, normal_form, ComponentClass, ExtNat, InvariantProfile, OMin, Parity};

/// What a realizable profile with at most one factor is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RealizationTarget {
    /// The empty profile: the scalars.
    Scalars,
    Component(ComponentClass),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Realization {
    Realized { graph: DirectedGraph, target: RealizationTarget },
    /// Not a graph algebra; `reason` names the violated requirement.
    NotRealizable { reason: &'static str },
    /// A graph algebra with several tensor factors; no construction shipped.
    NotImplemented,
}

/// The single factor of `p` up to isomorphism, if it has at most one.
pub fn single_factor_target(p: &InvariantProfile) -> Option<RealizationTarget> {
    let nf = normal_form(p);
    let omin = ExtNat::from(u128::from(nf.omin == OMin::One));
    if nf.t + omin + nf.total_n() > ExtNat::ONE {
        return None;
    }
    let target = if nf.t == ExtNat::ONE {
        ComponentClass::Toeplitz
    } else if omin == ExtNat::ONE {
        ComponentClass::InfiniteComp
    } else if nf.z == ExtNat::ONE {
        ComponentClass::FiniteExt(0)
    } else if let Some((&k, _)) = nf.m.iter().next() {
        let k = k as i64;
        ComponentClass::FiniteExt(if nf.parity == Parity::Odd { -k } else { k })
    } else {
        return Some(RealizationTarget::Scalars);
    };
    Some(RealizationTarget::Component(target))
}

fn graph_algebra_failure(p: &InvariantProfile) -> Option<&'static str> {
    if is_graph_algebra(p).holds() {
        return None;
    }
    Some(if p.t() > ExtNat::ONE {
        "t > 1"
    } else if p.t() == ExtNat::ONE {
        "t = 1 with further factors"
    } else if !(p.n(-1) + p.n(1)).is_finite() {
        "N_{-1} + N_1 is infinite"
    } else {
        "sum of N_k over |k| != 1 exceeds 1"
    })
}

/// Template graph for one factor.
pub fn template(target: RealizationTarget) -> DirectedGraph {
    match target {
        RealizationTarget::Scalars => DirectedGraph::new(1),
        RealizationTarget::Component(ComponentClass::Toeplitz) => {
            let mut g = DirectedGraph::new(2);
            g.add_edges(0, 0, 1).add_edges(0, 1, 1);
            g
        }
        RealizationTarget::Component(ComponentClass::InfiniteComp) => {
            let mut g = DirectedGraph::new(1);
            g.add_edges(0, 0, 1).set_infinite_emitter(0);
            g
        }
        RealizationTarget::Component(ComponentClass::FiniteExt(chi)) if chi < 0 => {
            let n = chi.unsigned_abs();
            let mut g = DirectedGraph::new(2);
            g.add_edges(0, 0, n + 1).add_edges(0, 1, n + 1);
            g
        }
        RealizationTarget::Component(ComponentClass::FiniteExt(0)) => {
            // u → a; a and b carry two loops each and are joined both ways;
            // a also feeds the sink w. Then [p_b] = −[p_a], [p_w] = 0 and
            // [1] = [p_u] = [p_a].
            let (u, a, b, w) = (0, 1, 2, 3);
            let mut g = DirectedGraph::new(4);
            g.add_edges(u, a, 1)
                .add_edges(a, a, 2)
                .add_edges(a, b, 1)
                .add_edges(a, w, 1)
                .add_edges(b, a, 1)
                .add_edges(b, b, 2);
            g
        }
        RealizationTarget::Component(ComponentClass::FiniteExt(chi)) => {
            // [p_w] = −n[p_v], [p_u] = (n − 2)[p_v], so [1] = −[p_v] and
            // [p_w] = n[1].
            let n = chi.unsigned_abs();
            let (u, v, w) = (0, 1, 2);
            let mut g = DirectedGraph::new(3);
            g.add_edges(u, v, 3 * n - 2)
                .add_edges(u, w, 2)
                .add_edges(v, v, n + 1)
                .add_edges(v, w, 1);
            g
        }
    }
}

pub fn realize(p: &InvariantProfile) -> Realization {
    if let Some(reason) = graph_algebra_failure(p) {
        return Realization::NotRealizable { reason };
    }
    match single_factor_target(p) {
        Some(target) => Realization::Realized { graph: template(target), target },
        None => Realization::NotImplemented,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    /// Reported but not part of the verdict.
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub target: RealizationTarget,
    pub checks: Vec<Check>,
    pub kappa: Option<BigInt>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed || c.informational)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("profile is not a graph algebra ({0})")]
    NotGraphAlgebra(&'static str),
    #[error("profile has more than one tensor factor")]
    NotSingleFactor,
}

fn coords(c: &[BigInt]) -> String {
    let parts: Vec<String> = c.iter().map(|x| format!("{x}")).collect();
    format!("({})", parts.join(", "))
}

fn check(name: &'static str, passed: bool, detail: String) -> Check {
    Check { name, passed, detail, informational: false }
}

/// Checks the K-theoretic fingerprint of `p`'s single factor against `dg`.
pub fn verify_realization(dg: &DirectedGraph, p: &InvariantProfile) -> Result<VerificationReport, VerifyError> {
    if let Some(reason) = graph_algebra_failure(p) {
        return Err(VerifyError::NotGraphAlgebra(reason));
    }
    let target = single_factor_target(p).ok_or(VerifyError::NotSingleFactor)?;
    let k = graph_ktheory(dg);
    let mut checks = Vec::new();
    checks.push(check(
        "k0_integers_unit_generator",
        k.unit_generator_sign().is_some(),
        format!("K0 = {}, unit {}", k.k0, coords(&k.unit_class)),
    ));
    checks.push(check("k1_zero", k.k1_rank == 0, format!("K1 = {}", k.k1())));
    let mut kappa = None;
    match target {
        RealizationTarget::Scalars => {
            checks.push(check("single_vertex", dg.n() == 1, format!("{} vertices", dg.n())));
        }
        RealizationTarget::Component(ComponentClass::InfiniteComp) => {
            let sinks = dg.sinks();
            checks.push(check("no_sink", sinks.is_empty(), format!("sinks {sinks:?}")));
            let ck = condition_k(dg);
            checks.push(check("condition_k", ck, format!("{ck}")));
            let sc = dg.regular_part_strongly_connected();
            checks.push(Check {
                name: "regular_part_strongly_connected",
                passed: sc,
                detail: format!("{sc}"),
                informational: true,
            });
        }
        RealizationTarget::Component(class) => {
            let chi = match class {
                ComponentClass::FiniteExt(chi) => chi,
                _ => 0,
            };
            match sink_ideal_analysis(dg) {
                Ok(s) => {
                    checks.push(check("unique_sink", true, format!("sink {}", s.sink)));
                    checks.push(check(
                        "kappa_equals_chi",
                        s.kappa == Some(BigInt::from(chi)),
                        format!("kappa {}, chi {chi}", s.kappa.as_ref().map_or_else(|| String::from("undefined"), |k| format!("{k}"))),
                    ));
                    let q0 = FgAbelianGroup::cyclic(u128::from(chi.unsigned_abs()));
                    checks.push(check("quotient_k0", s.quotient.k0 == q0, format!("{} vs {q0}", s.quotient.k0)));
                    let q1 = usize::from(chi == 0);
                    checks.push(check(
                        "quotient_k1",
                        s.quotient.k1_rank == q1,
                        format!("{} vs {}", s.quotient.k1(), FgAbelianGroup::free(q1)),
                    ));
                    kappa = s.kappa;
                }
                Err(e) => {
                    checks.push(check("unique_sink", false, format!("{e}")));
                    for name in ["kappa_equals_chi", "quotient_k0", "quotient_k1"] {
                        checks.push(check(name, false, String::from("no ideal row")));
                    }
                }
            }
        }
    }
    Ok(VerificationReport { target, checks, kappa })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn p() -> InvariantProfile {
        InvariantProfile::new()
    }

    fn realized(p: &InvariantProfile) -> (DirectedGraph, VerificationReport) {
        match realize(p) {
            Realization::Realized { graph, .. } => {
                let report = verify_realization(&graph, p).unwrap();
                assert!(report.passed(), "{report:?}");
                (graph, report)
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn every_template_certifies() {
        for n in 1..=12i64 {
            for chi in [-n, n] {
                let (_, r) = realized(&p().with_n(chi, 1u128));
                assert_eq!(r.kappa, Some(BigInt::from(chi)));
            }
        }
        assert_eq!(realized(&p().with_n(0, 1u128)).1.kappa, Some(BigInt::zero()));
        assert_eq!(realized(&p().with_t(1u128)).1.kappa, Some(BigInt::zero()));
        realized(&p().with_o(1u128));
        realized(&p().with_o(ExtNat::Omega));
        realized(&p());
    }

    #[test]
    fn minus_four_template_shape() {
        let (g, r) = realized(&p().with_n(-4, 1u128));
        assert_eq!(g.n(), 2);
        assert_eq!(g.multiplicity(0, 0), 5);
        assert_eq!(g.multiplicity(0, 1), 5);
        assert_eq!(r.kappa, Some(BigInt::from(-4)));
    }

    #[test]
    fn plus_one_kappa() {
        assert_eq!(realized(&p().with_n(1, 1u128)).1.kappa, Some(BigInt::one()));
    }

    #[test]
    fn outcomes() {
        assert!(matches!(realize(&p().with_n(-2, 2u128)), Realization::NotRealizable { .. }));
        assert!(matches!(realize(&p().with_t(2u128)), Realization::NotRealizable { reason: "t > 1" }));
        assert_eq!(realize(&p().with_n(-1, 2u128)), Realization::NotImplemented);
    }

    #[test]
    fn wrong_graph_fails() {
        let mut o2 = DirectedGraph::new(1);
        o2.add_edges(0, 0, 2);
        let r = verify_realization(&o2, &p().with_n(-1, 1u128)).unwrap();
        assert!(!r.passed());
        assert!(r.checks.iter().any(|c| c.name == "unique_sink" && !c.passed));
        assert_eq!(verify_realization(&o2, &p().with_n(-1, 2u128)), Err(VerifyError::NotSingleFactor));
    }
}
