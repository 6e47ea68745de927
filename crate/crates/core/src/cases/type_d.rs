//! Spin(2n) in all its forms.

use super::labels::{expand, Branch, Label, XEntry, XiClass, YEntry};
use super::manifest::{CaseId, GroupCase};
use crate::arith::{delta_square, square_root, tri, triangle_root, QParam};
use crate::endoscopy::ids;
use crate::transfer_maps::{d_res_exponent, su_ram_exponent};

fn entry(label: Label, refs: Vec<String>) -> YEntry {
    YEntry { label, dim: 1, endo_ref: refs }
}

fn push_each(out: &mut Vec<YEntry>, l: Label, class: XiClass, refs: Vec<String>) {
    for (t, r) in expand(l, class, refs.len() as u32).zip(refs) {
        out.push(entry(t, vec![r]));
    }
}

fn xe(label: Label, mult: u64) -> XEntry {
    XEntry { label, mult }
}

/// k >= h >= 0 with k² + h² = s.
fn squares(s: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&h| 2 * h * h <= s)
        .filter_map(|h| square_root(s - h * h).map(|k| (k, h)))
        .collect()
}

/// k >= h >= 0 with T_k + T_h = s.
fn triangles(s: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&h| 2 * tri(h) <= s)
        .filter_map(|h| triangle_root(s - tri(h)).map(|k| (k, h)))
        .collect()
}

/// (i, j) with 2i² + T_j = n.
fn minus_pairs(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&i| 2 * i * i <= n)
        .filter_map(|i| triangle_root(n - 2 * i * i).map(|j| (i, j)))
        .collect()
}

/// Exponent of sgn(-1) carried by the outer automorphism δ on a datum of
/// the second family of split even D.
pub(crate) fn split_even_delta_exponent(i: u64, j: u64) -> u64 {
    (d_res_exponent(i) + su_ram_exponent(j)) % 2
}

fn xx_plus(c: GroupCase) -> Vec<XEntry> {
    let n = u64::from(c.n);
    let pm = |k, h| Label::pair(Branch::Plus, k, h);
    let mut out = Vec::new();
    match c.id {
        CaseId::DSplitEven => {
            for (k, h) in squares(2 * n) {
                match (k == h, h) {
                    (true, _) => out.push(xe(pm(k, h), 1)),
                    (false, 0) => out.extend(expand(pm(k, h), XiClass::Full, 4).map(|l| xe(l, 1))),
                    _ => out.extend(expand(pm(k, h), XiClass::Full, 2).map(|l| xe(l, 1))),
                }
            }
        }
        CaseId::DInnerClassicalEven => {
            for (k, h) in squares(2 * n).into_iter().filter(|&(_, h)| h >= 2) {
                if k == h {
                    out.push(xe(pm(k, h), 1));
                } else {
                    out.extend(expand(pm(k, h), XiClass::Full, 2).map(|l| xe(l, 1)));
                }
            }
        }
        CaseId::DInnerNonclassicalEven | CaseId::DQsUnramEvenInner => {
            let branch = if c.id == CaseId::DQsUnramEvenInner { Branch::Plain } else { Branch::Plus };
            for (k, h) in squares(2 * n).into_iter().filter(|&(k, h)| k == h) {
                out.push(xe(Label::pair(branch, k, h), 1));
            }
        }
        CaseId::DQsUnramEven => {
            for (k, h) in squares(2 * n) {
                let l = Label::pair(Branch::Plain, k, h);
                match (k == h, h) {
                    (true, _) => out.push(xe(l, 1)),
                    (false, 0) => out.extend(expand(l, XiClass::Zero, 2).map(|l| xe(l, 1))),
                    _ => out.push(xe(l, 2)),
                }
            }
        }
        CaseId::DQsRamOdd | CaseId::DQsRamOddInner => {
            let inner = c.id == CaseId::DQsRamOddInner;
            for (k, h) in squares(2 * n).into_iter().filter(|&(k, _)| k % 2 == 1) {
                if k == h {
                    out.push(xe(pm(k, h), 1));
                } else if !inner {
                    out.extend(expand(pm(k, h), XiClass::Zero, 2).map(|l| xe(l, 1)));
                }
            }
        }
        _ => {}
    }
    out
}

fn xx_minus(c: GroupCase, q: QParam) -> Vec<XEntry> {
    let n = u64::from(c.n);
    let split4 = q.minus(4) == 1;
    let mn = |k, h| Label::pair(Branch::Minus, k, h);
    let both = |k: u64, h: u64, f: &dyn Fn(u64) -> bool| f(tri(k)) && f(tri(h));
    let mut out = Vec::new();
    // card 0 means a single entry without a character
    let mut add = |l: Label, class, card| {
        if card == 0 {
            out.push(xe(l, 1));
        } else {
            out.extend(expand(l, class, card).map(|l| xe(l, 1)));
        }
    };
    for (k, h) in triangles(2 * n) {
        match c.id {
            CaseId::DSplitEven => {
                let ok = if split4 {
                    both(k, h, &|t| t % 2 == 0)
                } else {
                    both(k, h, &|t| t % 4 == 0)
                };
                if ok {
                    if k == h {
                        add(mn(k, h), XiClass::Tilde, 4);
                    } else {
                        add(mn(k, h), XiClass::Full, 8);
                    }
                }
            }
            CaseId::DInnerClassicalEven => {
                if !split4 && both(k, h, &|t| t % 4 == 2) {
                    if k == h {
                        add(mn(k, h), XiClass::Tilde, 4);
                    } else {
                        add(mn(k, h), XiClass::Full, 8);
                    }
                }
            }
            CaseId::DInnerNonclassicalEven if k == h => add(mn(k, h), XiClass::Tilde, 2),
            CaseId::DSplitOdd if split4 && k > h && both(k, h, &|t| t % 2 == 0) => {
                add(Label::pair(Branch::Plain, k, h), XiClass::Full, 8)
            }
            CaseId::DQsUnramOdd if !split4 && both(k, h, &|t| t % 2 == 0) => {
                add(Label::pair(Branch::Plain, k, h), XiClass::Zero, 4)
            }
            CaseId::DQsRamEven if k > h && both(k, h, &|t| t % 2 == 1) => {
                add(Label::pair(Branch::Plain, k, h), XiClass::Zero, 2)
            }
            CaseId::DQsRamOdd if both(k, h, &|t| t % 2 == 1) => {
                let card = if k == h { 0 } else { 2 };
                add(mn(k, h), XiClass::Zero, card);
            }
            CaseId::DQsRamOddInner if k == h => add(mn(k, h), XiClass::Zero, 0),
            _ => {}
        }
    }
    out
}

pub(super) fn x(c: GroupCase, q: QParam) -> Vec<XEntry> {
    let mut out = xx_plus(c);
    out.extend(xx_minus(c, q));
    out
}

/// The two data behind (i, j) with i > j > 0.
fn plus_refs(i: u64, j: u64) -> Vec<String> {
    let m = j * j;
    if i.is_multiple_of(2) {
        vec![ids::orbit("triv", m, 0), ids::orbit("tt-nr", m, 0)]
    } else {
        vec![ids::orbit("tt-ram", m, 0), ids::orbit("tt-ram", m, 1)]
    }
}

fn split_even_y(c: GroupCase, q: QParam, out: &mut Vec<YEntry>) {
    let n = u64::from(c.n);
    let inner = c.id == CaseId::DInnerClassicalEven;
    let nonclassical = c.id == CaseId::DInnerNonclassicalEven;
    let pm = |i, j| Label::pair(Branch::Plus, i, j);
    for (i, j) in squares(n) {
        if j == 0 {
            out.push(entry(pm(i, j), vec![ids::principal()]));
        } else if nonclassical {
        } else if i > j {
            push_each(out, pm(i, j), XiClass::Full, plus_refs(i, j));
        } else if !inner {
            let m = n / 2;
            let refs = if i % 2 == 0 {
                vec![
                    ids::orbit("triv", m, 0),
                    ids::orbit("tt-nr", m, 0),
                    ids::orbit("d-nr", m, 0),
                    ids::orbit("dtt-nr", m, 0),
                ]
            } else {
                vec![
                    ids::orbit("tt-ram", m, 0),
                    ids::orbit("tt-ram", m, 1),
                    ids::orbit("biq-nr", m, 0),
                    ids::orbit("biq-nr", m, 1),
                ]
            };
            push_each(out, pm(i, j), XiClass::Full, refs);
        }
    }
    let minus_sign = q.minus(4) == 0;
    for (i, j) in minus_pairs(n).into_iter().filter(|&(i, _)| i % 2 == 0) {
        let l = Label::pair(Branch::Minus, i, j);
        let natural = u64::from(minus_sign) * split_even_delta_exponent(i, j);
        let m = i * i;
        if nonclassical {
            if i == 0 {
                let delta_lives = natural == (n / 2) % 2;
                let tag = if delta_lives { "d-ram" } else { "dtt-ram" };
                push_each(out, l, XiClass::Tilde, vec![ids::orbit(tag, 0, 0), ids::orbit(tag, 0, 1)]);
            }
            continue;
        }
        let wanted = u64::from(inner);
        if natural != wanted {
            continue;
        }
        let mut refs = vec![
            ids::orbit("d-ram", m, 0),
            ids::orbit("d-ram", m, 1),
            ids::orbit("dtt-ram", m, 0),
            ids::orbit("dtt-ram", m, 1),
        ];
        if i == 0 {
            push_each(out, l, XiClass::Tilde, refs);
        } else {
            refs.extend((0..4).map(|v| ids::orbit("biq-ram", m, v)));
            push_each(out, l, XiClass::Full, refs);
        }
    }
}

pub(super) fn y(c: GroupCase, q: QParam) -> Vec<YEntry> {
    let n = u64::from(c.n);
    let split4 = q.minus(4) == 1;
    let mut out = Vec::new();
    let var = |tag: &str, m, k: u32| (0..k).map(|v| ids::orbit(tag, m, v)).collect::<Vec<_>>();
    match c.id {
        CaseId::DSplitEven | CaseId::DInnerClassicalEven | CaseId::DInnerNonclassicalEven => {
            split_even_y(c, q, &mut out)
        }
        CaseId::DSplitOdd if split4 => {
            for (i, j) in minus_pairs(n).into_iter().filter(|&(i, _)| i % 2 == 1) {
                push_each(&mut out, Label::pair(Branch::Plain, i, j), XiClass::Full, var("cyc4", i * i, 8));
            }
        }
        CaseId::DQsUnramEven | CaseId::DQsUnramEvenInner => {
            let inner = c.id == CaseId::DQsUnramEvenInner;
            for (i, j) in squares(n) {
                let l = Label::pair(Branch::Plain, i, j);
                let tag = if i % 2 == 0 { "E0" } else { "Q" };
                if j == 0 {
                    out.push(entry(l, vec![ids::principal()]));
                } else if inner {
                } else if i > j {
                    out.push(YEntry {
                        label: l,
                        dim: 2,
                        endo_ref: vec![ids::orbit(tag, j * j, 0), ids::orbit(tag, i * i, 0)],
                    });
                } else {
                    let z4 = if i % 2 == 0 { "z4-nr" } else { "z4-ram" };
                    let refs = vec![ids::orbit(tag, n / 2, 0), ids::orbit(z4, n / 2, 0)];
                    push_each(&mut out, l, XiClass::Zero, refs);
                }
            }
        }
        CaseId::DQsUnramOdd if !split4 => {
            for (i, j) in minus_pairs(n).into_iter().filter(|&(i, _)| i % 2 == 1) {
                push_each(&mut out, Label::pair(Branch::Plain, i, j), XiClass::Zero, var("dih", i * i, 4));
            }
        }
        CaseId::DQsRamEven => {
            for (i, j) in minus_pairs(n).into_iter().filter(|&(i, _)| i % 2 == 1) {
                push_each(&mut out, Label::pair(Branch::Plain, i, j), XiClass::Zero, var("ram4", i * i, 2));
            }
        }
        CaseId::DQsRamOdd | CaseId::DQsRamOddInner => {
            let inner = c.id == CaseId::DQsRamOddInner;
            for (i, j) in squares(n) {
                let l = Label::pair(Branch::Plus, i, j);
                if j == 0 {
                    out.push(entry(l, vec![ids::principal()]));
                } else if !inner {
                    let e = if i % 2 == 0 { i } else { j };
                    let refs = vec![ids::orbit("E-t", e * e, 0), ids::orbit("Q-t", e * e, 0)];
                    push_each(&mut out, l, XiClass::Zero, refs);
                }
            }
            for (i, j) in minus_pairs(n).into_iter().filter(|&(i, _)| i % 2 == 0) {
                let l = Label::pair(Branch::Minus, i, j);
                if i == 0 {
                    out.push(entry(l, vec![ids::orbit("E-d", 0, 0)]));
                } else if !inner {
                    let refs = vec![ids::orbit("E-d", i * i, 0), ids::orbit("Q-d", i * i, 0)];
                    push_each(&mut out, l, XiClass::Zero, refs);
                }
            }
        }
        _ => {}
    }
    out
}

pub(super) fn st(c: GroupCase) -> u64 {
    let n = u64::from(c.n);
    match c.id {
        CaseId::DSplitEven | CaseId::DQsUnramEven | CaseId::DQsRamOdd => delta_square(n),
        _ => 0,
    }
}

pub(super) fn is_stable(c: GroupCase, l: &Label) -> bool {
    match (c.id, l.ab()) {
        (CaseId::DSplitEven | CaseId::DQsRamOdd, Some((Branch::Plus, k, h))) => k == h,
        (CaseId::DQsUnramEven, Some((_, k, h))) => k == h,
        _ => false,
    }
}
