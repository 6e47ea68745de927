//! Registry of endoscopic data for the classical series.

use super::ids;
use super::{node, Action, Base, EndoDatum, Factor, FactorKind as K, OutGen, Ramification as R};
use crate::arith::{euler_phi, pronic_root, square_root, triangle_root, QParam};
use crate::cases::{CaseId, GroupCase, XiClass, XiTag};
use crate::transfer_maps::{d_res_exponent, res_b_exponent, su_ram_exponent};

fn xi(class: XiClass, index: u32) -> XiTag {
    XiTag { class, index }
}

fn principal(c: GroupCase) -> EndoDatum {
    let qs = c.quasi_split();
    EndoDatum::new(
        ids::principal(),
        vec![node(0)],
        Action::trivial(),
        vec![Factor::new(K::Group(qs.id), c.n, Base::F)],
    )
}

fn nodes(ms: &[u64]) -> Vec<String> {
    ms.iter().map(|&m| node(m)).collect()
}

/// Phase of sgn(-1)^e as an element of Z/2.
fn sgn_phase(q: QParam, e: u64) -> u32 {
    if q.minus(4) == 1 {
        0
    } else {
        (e % 2) as u32
    }
}

pub(super) fn data(c: GroupCase, q: QParam) -> Vec<EndoDatum> {
    let mut out = vec![principal(c)];
    let n = u64::from(c.n);
    use CaseId as C;
    match c.id {
        C::ASplit | C::AInner | C::AUnram | C::AUnramInner => type_a_tori(c, q, &mut out),
        C::ARam | C::ARamInner => type_a_ram(c, n, &mut out),
        C::BSplit | C::BInner => type_b(c, q, n, &mut out),
        C::CSplit | C::CInner => type_c(c, n, &mut out),
        C::DSplitEven | C::DInnerClassicalEven | C::DInnerNonclassicalEven => d_split_even(c, q, n, &mut out),
        C::DSplitOdd | C::DInnerClassicalOdd | C::DInnerNonclassicalOdd => d_split_odd(c, q, n, &mut out),
        C::DQsUnramEven | C::DQsUnramEvenInner => d_unram_even(c, n, &mut out),
        C::DQsUnramOdd | C::DQsUnramOddInner => d_unram_odd(c, q, n, &mut out),
        C::DQsRamEven | C::DQsRamEvenInner => d_ram_even(c, n, &mut out),
        C::DQsRamOdd | C::DQsRamOddInner => d_ram_odd(c, n, &mut out),
        _ => unreachable!("not a classical case"),
    }
    out
}

fn smallest_prime(n: u64) -> u64 {
    (2..=n).find(|p| n.is_multiple_of(*p)).unwrap_or(n)
}

/// Elliptic tori: the only data with nonzero stable part in type A apart
/// from the principal one.
fn type_a_tori(c: GroupCase, q: QParam, out: &mut Vec<EndoDatum>) {
    let n = u64::from(c.n);
    let phi = euler_phi(n).expect("n > 0");
    let inner = c.info().inner.is_some();
    let twist = if inner { n / smallest_prime(n) } else { 0 };
    let rot = || vec![OutGen::new("rot", c.n, 0).twisted(twist as u32)];
    let split = matches!(c.id, CaseId::ASplit | CaseId::AInner);
    let all: Vec<String> = (0..n).map(node).collect();
    let (count, shape) = if split {
        (q.minus(n) * n * phi, "cyclic-ramified")
    } else {
        (q.plus(n) * (1 + u64::from(n % 2 == 0)) * phi, "dihedral")
    };
    for k in 0..count as u32 {
        let action = Action::new(shape, &[("inertia", "rot")], R::Ramified);
        out.push(
            EndoDatum::new(ids::torus(k), all.clone(), action, vec![Factor::f(K::Torus, n)])
                .with_out(rot())
                .with_xi(xi(XiClass::RamN, k)),
        );
    }
    if split {
        for u in 0..phi as u32 {
            let action = Action::new("cyclic-unramified", &[("frobenius", "rot")], R::Unramified);
            out.push(
                EndoDatum::new(format!("torus-nr#{u}"), all.clone(), action, vec![Factor::f(K::Torus, n)])
                    .with_out(rot()),
            );
        }
    }
}

fn type_a_ram(c: GroupCase, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id == CaseId::ARamInner);
    let swap = || OutGen::new("swap", 2, 0).twisted(inner);
    let ram = || Action::new("ramified-quadratic", &[("sigma", "reflection")], R::Ramified);
    for m in 1..=n / 2 {
        let d = EndoDatum::new(
            ids::orbit("E", m, 0),
            nodes(&[0, m]),
            ram(),
            vec![Factor::f(K::SuRam, m), Factor::f(K::SuRam, n - m)],
        );
        out.push(if 2 * m == n { d.with_out(vec![swap()]) } else { d });
    }
    if n.is_multiple_of(2) {
        let h = n / 2;
        let biq = |s| Action::new("biquadratic", &[("tau", "reflection"), ("rho", "half-turn")], s);
        out.push(
            EndoDatum::new(ids::orbit("Q", h, 0), nodes(&[0, h]), biq(R::Ramified), vec![Factor::f(K::SuRam, h).over(Base::E0)])
                .with_out(vec![OutGen::new("rho", 2, 0).twisted(inner)]),
        );
        out.push(
            EndoDatum::new(ids::orbit("Q0", h, 0), nodes(&[0, h]), biq(R::Unramified), vec![Factor::f(K::SuRam, h).over(Base::E0)])
                .with_out(vec![OutGen::new("rho", 2, 0).twisted(inner)]),
        );
    }
}

fn type_b(c: GroupCase, q: QParam, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id == CaseId::BInner);
    let omega = |natural| OutGen::new("omega", 2, natural).twisted(inner);
    for m in 1..=n / 2 {
        let d = EndoDatum::new(
            ids::orbit("triv", m, 0),
            nodes(&[m]),
            Action::trivial(),
            vec![Factor::f(K::B, m), Factor::f(K::B, n - m)],
        );
        out.push(if 2 * m == n { d.with_out(vec![omega(0)]) } else { d });
    }
    for m in 0..=n / 2 {
        let mid = 2 * m == n;
        let orbit = if mid { nodes(&[m]) } else { nodes(&[m, n - m]) };
        let nr = Action::new("unramified-quadratic", &[("frobenius", "omega")], if mid { R::Trivial } else { R::Unramified });
        let mut factors = vec![Factor::f(K::B, m).over(Base::E0)];
        if !mid {
            factors.push(Factor::f(K::SuUnram, n - 2 * m));
        }
        out.push(EndoDatum::new(ids::orbit("E0", m, 0), orbit.clone(), nr, factors).with_out(vec![omega(0)]));
        let natural = match (pronic_root(m), triangle_root(n - 2 * m)) {
            (Some(i), Some(j)) => sgn_phase(q, res_b_exponent(i) + su_ram_exponent(j)),
            _ => 0,
        };
        for e in 0..2 {
            let ram = Action::new("ramified-quadratic", &[("sigma", "omega")], if mid { R::Trivial } else { R::Ramified });
            let factors = vec![Factor::f(K::B, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
            out.push(
                EndoDatum::new(ids::orbit("ram", m, e), orbit.clone(), ram, factors)
                    .with_out(vec![omega(natural)])
                    .with_xi(xi(XiClass::Ram, e)),
            );
        }
    }
}

fn type_c(c: GroupCase, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id == CaseId::CInner);
    let omega = || vec![OutGen::new("omega", 2, 0).twisted(inner)];
    for m in 2..=n {
        let rest = Factor::f(K::C, n - m);
        out.push(
            EndoDatum::new(ids::orbit("triv", m, 0), nodes(&[m]), Action::trivial(), vec![Factor::f(K::DSplit, m), rest])
                .with_out(omega())
                .with_xi(xi(XiClass::N, 0)),
        );
        let nr = Action::new("unramified-quadratic", &[("frobenius", "omega")], R::Trivial);
        out.push(
            EndoDatum::new(ids::orbit("E0", m, 0), nodes(&[m]), nr, vec![Factor::f(K::DUnram, m), rest])
                .with_out(omega())
                .with_xi(xi(XiClass::N, 1)),
        );
    }
    let nr = Action::new("unramified-quadratic", &[("frobenius", "omega")], R::Unramified);
    out.push(
        EndoDatum::new(ids::orbit("E0", 1, 0), nodes(&[0, 1]), nr, vec![Factor::f(K::DUnram, 1), Factor::f(K::C, n - 1)])
            .with_out(omega()),
    );
    for m in 1..=n {
        let (orbit, stab) = if m == 1 { (nodes(&[0, 1]), R::Ramified) } else { (nodes(&[m]), R::Trivial) };
        for e in 0..2 {
            let ram = Action::new("ramified-quadratic", &[("sigma", "omega")], stab);
            out.push(
                EndoDatum::new(ids::orbit("ram", m, e), orbit.clone(), ram, vec![Factor::f(K::DRam, m), Factor::f(K::C, n - m)])
                    .with_out(omega())
                    .with_xi(xi(XiClass::N, e)),
            );
        }
    }
}

/// Inner phases on the generators θθ', δ of Ω̂ for the forms of split even D.
fn split_even_inner(c: GroupCase, n: u64) -> (u32, u32) {
    match c.id {
        CaseId::DInnerClassicalEven => (0, 1),
        CaseId::DInnerNonclassicalEven => (1, ((n / 2) % 2) as u32),
        _ => (0, 0),
    }
}

fn d_split_even(c: GroupCase, q: QParam, n: u64, out: &mut Vec<EndoDatum>) {
    let (it, id) = split_even_inner(c, n);
    let tt = || OutGen::new("tt", 2, 0).twisted(it);
    let delta = |s| OutGen::new("delta", 2, s).twisted(id);
    let dtt = |s| OutGen::new("delta-tt", 2, s).twisted(id + it);
    let h = n / 2;
    let sym = |m: u64| if m == h { vec![tt(), delta(0)] } else { vec![tt()] };
    let pair = |m: u64| if m == h { nodes(&[m]) } else { nodes(&[m, n - m]) };

    for m in 2..=h {
        out.push(
            EndoDatum::new(ids::orbit("triv", m, 0), nodes(&[m]), Action::trivial(), vec![Factor::f(K::DSplit, m), Factor::f(K::DSplit, n - m)])
                .with_out(sym(m)),
        );
    }
    for m in 1..=h {
        let (orbit, nr_stab, ram_stab) = if m == 1 {
            (nodes(&[0, 1]), R::Unramified, R::Ramified)
        } else {
            (nodes(&[m]), R::Trivial, R::Trivial)
        };
        let nr = Action::new("unramified-quadratic", &[("frobenius", "tt")], nr_stab);
        out.push(
            EndoDatum::new(ids::orbit("tt-nr", m, 0), orbit.clone(), nr, vec![Factor::f(K::DUnram, m), Factor::f(K::DUnram, n - m)])
                .with_out(sym(m)),
        );
        for e in 0..2 {
            let ram = Action::new("ramified-quadratic", &[("sigma", "tt")], ram_stab);
            out.push(
                EndoDatum::new(ids::orbit("tt-ram", m, e), orbit.clone(), ram, vec![Factor::f(K::DRam, m), Factor::f(K::DRam, n - m)])
                    .with_out(sym(m)),
            );
        }
    }
    // unramified quadratic through δ or δθθ'
    for (tag, image) in [("d-nr", "delta"), ("dtt-nr", "delta-tt")] {
        for m in 0..=h {
            let stab = if m == h { R::Trivial } else { R::Unramified };
            let nr = Action::new("unramified-quadratic", &[("frobenius", image)], stab);
            let mut factors = vec![Factor::f(K::DSplit, m).over(Base::E0)];
            if m < h {
                factors.push(Factor::f(K::SuUnram, n - 2 * m));
            }
            let out_gens = if m == h { vec![tt(), delta(0)] } else { vec![tt()] };
            out.push(EndoDatum::new(ids::orbit(tag, m, 0), pair(m), nr, factors).with_out(out_gens));
        }
    }
    for v in 0..2 {
        let biq = Action::new("biquadratic", &[("frobenius", "delta"), ("inertia", "tt")], R::Trivial);
        out.push(
            EndoDatum::new(ids::orbit("biq-nr", h, v), nodes(&[h]), biq, vec![Factor::f(K::DRam, h).over(Base::E0)])
                .with_out(vec![tt(), delta(0)]),
        );
    }
    for m in 1..h {
        for v in 0..2 {
            let biq = Action::new("biquadratic", &[("frobenius", "delta"), ("inertia", "tt")], R::Unramified);
            let factors = vec![Factor::f(K::DRam, m).over(Base::E0), Factor::f(K::SuUnram, n - 2 * m)];
            out.push(EndoDatum::new(ids::orbit("biq-nr", m, v), pair(m), biq, factors).with_out(vec![tt()]));
        }
    }
    // ramified quadratic through δ or δθθ', and biquadratic with δ on a
    // ramified quadratic subfield
    for m in 0..=h {
        let natural = match (square_root(m), triangle_root(n - 2 * m)) {
            (Some(i), Some(j)) if i % 2 == 0 => sgn_phase(q, d_res_exponent(i) + su_ram_exponent(j)),
            _ => 0,
        };
        let stab = if m == h { R::Trivial } else { R::Ramified };
        for (tag, image) in [("d-ram", "delta"), ("dtt-ram", "delta-tt")] {
            let orbit = match (m, tag) {
                (0, "dtt-ram") => nodes(&[0, n - 1]),
                _ => pair(m),
            };
            let gens = match (m, tag) {
                (0, "d-ram") => vec![delta(natural)],
                (0, _) => vec![dtt(natural)],
                _ => vec![tt(), delta(natural)],
            };
            for e in 0..2 {
                let ram = Action::new("ramified-quadratic", &[("sigma", image)], stab);
                let factors = vec![Factor::f(K::DSplit, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
                out.push(EndoDatum::new(ids::orbit(tag, m, e), orbit.clone(), ram, factors).with_out(gens.clone()));
            }
        }
        // m = 1 lies in the same four-element orbit as m = 0
        if m == 1 {
            continue;
        }
        let (orbit, bstab) = if m == 0 { (nodes(&[0, 1, n - 1, n]), R::Mixed) } else { (pair(m), stab) };
        for v in 0..4 {
            let biq = Action::new("biquadratic", &[("sigma", "delta"), ("inertia", "tt")], bstab);
            let factors = vec![Factor::f(K::DUnram, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
            out.push(
                EndoDatum::new(ids::orbit("biq-ram", m, v), orbit.clone(), biq, factors).with_out(vec![tt(), delta(natural)]),
            );
        }
    }
}

fn d_split_odd(c: GroupCase, q: QParam, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id != CaseId::DSplitOdd);
    let tt = || vec![OutGen::new("tt", 2, 0).twisted(inner)];
    let h = (n - 1) / 2;
    let orbit = |m: u64| if m == 1 { nodes(&[0, 1, n - 1, n]) } else { nodes(&[m, n - m]) };
    for m in 2..=h {
        out.push(
            EndoDatum::new(ids::orbit("triv", m, 0), nodes(&[m]), Action::trivial(), vec![Factor::f(K::DSplit, m), Factor::f(K::DSplit, n - m)])
                .with_out(tt()),
        );
    }
    for m in 1..=h {
        let (ob, stab) = if m == 1 { (nodes(&[0, 1]), R::Ramified) } else { (nodes(&[m]), R::Trivial) };
        for e in 0..2 {
            let ram = Action::new("ramified-quadratic", &[("sigma", "tt")], stab);
            out.push(
                EndoDatum::new(ids::orbit("tt-ram", m, e), ob.clone(), ram, vec![Factor::f(K::DRam, m), Factor::f(K::DRam, n - m)])
                    .with_out(tt()),
            );
        }
    }
    let quartic = q.minus(4) == 1;
    for m in 1..=h {
        let factors = vec![Factor::f(K::DRam, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
        if quartic {
            for v in 0..8 {
                let act = Action::new("cyclic-4-ramified", &[("inertia", "theta")], R::Ramified);
                out.push(EndoDatum::new(ids::orbit("cyc4", m, v), orbit(m), act, factors.clone()).with_out(tt()));
            }
        }
        for v in 0..2 {
            let act = Action::new("cyclic-4-unramified", &[("frobenius", "theta")], R::Unramified);
            out.push(EndoDatum::new(ids::orbit("cyc4-nr", m, v), orbit(m), act, factors.clone()).with_out(tt()));
        }
    }
}

fn d_unram_even(c: GroupCase, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id == CaseId::DQsUnramEvenInner);
    let tt = || vec![OutGen::new("tt", 2, 0).twisted(inner)];
    let h = n / 2;
    for m in 2..=n - 1 {
        let (orbit, stab) = if m == n - 1 { (nodes(&[n - 1, n]), R::Unramified) } else { (nodes(&[m]), R::Trivial) };
        let act = Action::new("unramified-quadratic", &[("frobenius", "theta")], stab);
        out.push(
            EndoDatum::new(ids::orbit("E0", m, 0), orbit, act, vec![Factor::f(K::DSplit, m), Factor::f(K::DUnram, n - m)])
                .with_out(tt()),
        );
    }
    for m in 1..=n - 1 {
        let (orbit, stab) = match m {
            1 => (nodes(&[0, 1]), R::Ramified),
            _ if m == n - 1 => (nodes(&[n - 1, n]), R::Ramified),
            _ => (nodes(&[m]), R::Trivial),
        };
        let act = Action::new("biquadratic", &[("frobenius", "theta"), ("sigma", "tt")], stab);
        out.push(
            EndoDatum::new(ids::orbit("Q", m, 0), orbit, act, vec![Factor::f(K::DRam, m), Factor::f(K::DRam, n - m)])
                .with_out(tt()),
        );
    }
    for (tag, kind) in [("z4-nr", K::DUnram), ("z4-ram", K::DRam)] {
        let act = Action::new("cyclic-4-over-E0", &[("frobenius", "delta")], R::Trivial);
        out.push(EndoDatum::new(ids::orbit(tag, h, 0), nodes(&[h]), act, vec![Factor::f(kind, h).over(Base::E0)]).with_out(tt()));
    }
}

fn d_unram_odd(c: GroupCase, q: QParam, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id == CaseId::DQsUnramOddInner);
    let tt = || vec![OutGen::new("tt", 2, 0).twisted(inner)];
    if q.plus(4) == 0 {
        return;
    }
    for m in 1..=(n - 1) / 2 {
        let orbit = if m == 1 { nodes(&[0, 1, n - 1, n]) } else { nodes(&[m, n - m]) };
        for v in 0..4 {
            let act = Action::new("dihedral-4-over-E0", &[("frobenius", "theta"), ("inertia", "delta")], R::Ramified);
            let factors = vec![Factor::f(K::DRam, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
            out.push(EndoDatum::new(ids::orbit("dih", m, v), orbit.clone(), act, factors).with_out(tt()));
        }
    }
}

fn d_ram_even(c: GroupCase, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id == CaseId::DQsRamEvenInner);
    let tt = || vec![OutGen::new("tt", 2, 0).twisted(inner)];
    let h = n / 2;
    for m in 1..=h {
        let (orbit, stab) = match m {
            1 => (nodes(&[0, 1, n - 1, n]), R::Ramified),
            _ if m == h => (nodes(&[h]), R::Trivial),
            _ => (nodes(&[m, n - m]), R::Ramified),
        };
        for v in 0..2 {
            let act = Action::new("quartic-containing-E", &[("sigma", "delta")], stab);
            let factors = vec![Factor::f(K::DRam, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
            out.push(EndoDatum::new(ids::orbit("ram4", m, v), orbit.clone(), act, factors).with_out(tt()));
        }
    }
}

fn d_ram_odd(c: GroupCase, n: u64, out: &mut Vec<EndoDatum>) {
    let inner = u32::from(c.id == CaseId::DQsRamOddInner);
    let tt = || vec![OutGen::new("tt", 2, 0).twisted(inner)];
    for m in 2..=n - 1 {
        let (orbit, stab) = if m == n - 1 { (nodes(&[n - 1, n]), R::Ramified) } else { (nodes(&[m]), R::Trivial) };
        let e = Action::new("ramified-quadratic", &[("sigma", "theta")], stab);
        out.push(
            EndoDatum::new(ids::orbit("E-t", m, 0), orbit.clone(), e, vec![Factor::f(K::DSplit, m), Factor::f(K::DRam, n - m)])
                .with_out(tt()),
        );
        let b = Action::new("biquadratic", &[("sigma", "theta"), ("frobenius", "tt")], stab);
        out.push(
            EndoDatum::new(ids::orbit("Q-t", m, 0), orbit, b, vec![Factor::f(K::DUnram, m), Factor::f(K::DRam, n - m)])
                .with_out(tt()),
        );
    }
    let b = Action::new("biquadratic", &[("sigma", "theta"), ("frobenius", "tt")], R::Unramified);
    out.push(
        EndoDatum::new(ids::orbit("Q-t", 0, 0), nodes(&[0, 1]), b, vec![Factor::f(K::DRam, n)]).with_out(tt()),
    );
    for m in 0..=(n - 1) / 2 {
        let orbit = nodes(&[m, n - m]);
        let e = Action::new("ramified-quadratic", &[("sigma", "delta")], R::Ramified);
        let gens = if m == 0 { Vec::new() } else { tt() };
        let factors = vec![Factor::f(K::DSplit, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
        out.push(EndoDatum::new(ids::orbit("E-d", m, 0), orbit.clone(), e, factors).with_out(gens));
        if m == 1 {
            continue;
        }
        let (orbit, stab) = if m == 0 { (nodes(&[0, 1, n - 1, n]), R::Mixed) } else { (orbit, R::Ramified) };
        let b = Action::new("biquadratic", &[("sigma", "delta"), ("frobenius", "tt")], stab);
        let factors = vec![Factor::f(K::DUnram, m).over(Base::ERam), Factor::f(K::SuRam, n - 2 * m)];
        out.push(EndoDatum::new(ids::orbit("Q-d", m, 0), orbit, b, factors).with_out(tt()));
    }
}
