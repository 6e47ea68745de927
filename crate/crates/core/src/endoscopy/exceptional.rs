//! Endoscopic data of the triality forms and the exceptional groups.

use super::ids;
use super::{node, Action, Base, EndoDatum, Factor, FactorKind as K, OutGen, Ramification as R};
use crate::arith::QParam;
use crate::cases::{CaseId, GroupCase, XiClass, XiTag};
use crate::diagrams::{affine_diagram, automorphism_group, components, order, DynkinType, Series};

fn principal(c: GroupCase) -> EndoDatum {
    let qs = c.quasi_split();
    EndoDatum::new(
        ids::principal(),
        vec![node(0)],
        Action::trivial(),
        vec![Factor::new(K::Group(qs.id), c.n, Base::F)],
    )
}

fn inner_phase(c: GroupCase) -> u32 {
    u32::from(matches!(c.id, CaseId::E6Inner | CaseId::E7Inner))
}

/// Data with trivial Galois action: one per Ω̂-orbit of a vertex other than
/// that of α̂_0, with G'_SC read off the remaining diagram.
fn trivial_action(c: GroupCase, ty: DynkinType, out: &mut Vec<EndoDatum>) {
    let d = affine_diagram(ty.dual());
    let omega = automorphism_group(&d).omega;
    let orbit_of = |i: usize| {
        let mut o: Vec<usize> = omega.iter().map(|p| p[i]).collect();
        o.sort_unstable();
        o.dedup();
        o
    };
    let skip = orbit_of(0);
    let mut seen = skip.clone();
    for i in 0..d.len() {
        if seen.contains(&i) {
            continue;
        }
        let orbit = orbit_of(i);
        seen.extend(&orbit);
        let factors = components(&d, &[i]).into_iter().map(|(t, _)| Factor::split(t.dual())).collect();
        let gens: Vec<OutGen> = omega
            .iter()
            .filter(|p| p[i] == i && order(p) > 1)
            .take(1)
            .map(|p| OutGen::new("omega", order(p), 0).twisted(inner_phase(c)))
            .collect();
        let label = d.nodes()[i].trim_start_matches('a').to_string();
        out.push(
            EndoDatum::new(ids::nodes("triv", &label, 0), vec![d.nodes()[i].clone()], Action::trivial(), factors)
                .with_out(gens),
        );
    }
}

pub(super) fn data(c: GroupCase, q: QParam) -> Vec<EndoDatum> {
    let mut out = vec![principal(c)];
    let t = |s, r| DynkinType::new(s, r).expect("valid type");
    let xi = |class, index| XiTag { class, index };
    match c.id {
        CaseId::D4TrialityA | CaseId::D4TrialityB | CaseId::D4TrialityC => {
            let stab = if c.id == CaseId::D4TrialityA { R::Unramified } else { R::Ramified };
            let a1 = Factor::split(t(Series::A, 1));
            out.push(EndoDatum::new(ids::nodes("triv", "2", 0), vec![node(2)], Action::trivial(), vec![a1; 4]));
            let act = Action::new("cubic", &[("generator", "triality")], stab);
            out.push(EndoDatum::new(
                ids::nodes("cubic", "134", 0),
                vec![node(1), node(3), node(4)],
                act,
                vec![Factor::split(t(Series::A, 2))],
            ));
        }
        CaseId::E6Split | CaseId::E6Inner => {
            trivial_action(c, t(Series::E, 6), &mut out);
            let orbit = || vec![node(0), node(1), node(6)];
            let gen = || vec![OutGen::new("theta3", 3, 0).twisted(inner_phase(c))];
            if q.minus(3) == 1 {
                for v in 0..6 {
                    let act = Action::new("ramified-cubic", &[("tau", "theta3")], R::Ramified);
                    out.push(
                        EndoDatum::new(ids::nodes("ram3", "016", v), orbit(), act, vec![Factor::new(K::Group(CaseId::D4TrialityB), 4, Base::F)])
                            .with_out(gen())
                            .with_xi(xi(XiClass::Ram, v)),
                    );
                }
            }
            let act = Action::new("unramified-cubic", &[("frobenius", "theta3")], R::Unramified);
            out.push(
                EndoDatum::new(ids::nodes("nr3", "016", 0), orbit(), act, vec![Factor::new(K::Group(CaseId::D4TrialityA), 4, Base::F)])
                    .with_out(gen()),
            );
        }
        CaseId::E6Unram => {
            let act = Action::new("quadratic", &[("tau", "theta")], R::Trivial);
            out.push(EndoDatum::new(ids::nodes("theta", "4", 0), vec![node(4)], act, vec![Factor::split(t(Series::A, 2))]));
            if q.minus(3) == 0 {
                for v in 0..2 {
                    let act = Action::new("dihedral-cubic-over-E0", &[("tau", "theta"), ("rho", "theta3")], R::Ramified);
                    out.push(
                        EndoDatum::new(
                            ids::nodes("dih3", "016", v),
                            vec![node(0), node(1), node(6)],
                            act,
                            vec![Factor::new(K::Group(CaseId::D4TrialityC), 4, Base::F)],
                        )
                        .with_xi(xi(XiClass::NotOne, v)),
                    );
                }
            }
        }
        CaseId::E7Split | CaseId::E7Inner => {
            trivial_action(c, t(Series::E, 7), &mut out);
            let gen = || vec![OutGen::new("omega", 2, 0).twisted(inner_phase(c))];
            for e in 0..2 {
                let act = Action::new("ramified-quadratic", &[("sigma", "omega")], R::Ramified);
                out.push(
                    EndoDatum::new(ids::nodes("ram2", "07", e), vec![node(0), node(7)], act, vec![Factor::new(K::Group(CaseId::E6Ram), 6, Base::F)])
                        .with_out(gen())
                        .with_xi(xi(XiClass::Ram, e)),
                );
            }
            let act = Action::new("unramified-quadratic", &[("frobenius", "omega")], R::Unramified);
            out.push(
                EndoDatum::new(ids::nodes("nr2", "07", 0), vec![node(0), node(7)], act, vec![Factor::new(K::Group(CaseId::E6Unram), 6, Base::F)])
                    .with_out(gen()),
            );
        }
        CaseId::E8 => trivial_action(c, t(Series::E, 8), &mut out),
        CaseId::F4 => trivial_action(c, t(Series::F, 4), &mut out),
        CaseId::G2 => trivial_action(c, t(Series::G, 2), &mut out),
        _ => {}
    }
    out
}
