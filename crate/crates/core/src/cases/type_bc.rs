//! Spin(2n+1) and Sp(2n), split and inner.

use super::labels::{expand, Branch, Label, XEntry, XiClass, YEntry};
use super::manifest::{CaseId, GroupCase};
use crate::arith::{delta_2triangle, pronic, pronic_root, square_root, tri, triangle_root, QParam};
use crate::endoscopy::ids;
use crate::transfer_maps::{res_b_exponent, su_ram_exponent};

fn entry(label: Label, id: String) -> YEntry {
    YEntry { label, dim: 1, endo_ref: vec![id] }
}

fn ones(labels: impl IntoIterator<Item = Label>) -> Vec<XEntry> {
    labels.into_iter().map(|label| XEntry { label, mult: 1 }).collect()
}

/// k even, h odd, k² + h² = 2n+1.
fn b_xx_nr(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .step_by(2)
        .take_while(|&k| k * k <= 2 * n + 1)
        .filter_map(|k| square_root(2 * n + 1 - k * k).map(|h| (k, h)))
        .collect()
}

/// k >= h, T_k + T_h = 2n+1.
fn b_xx_ram(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&h| 2 * tri(h) <= 2 * n + 1)
        .filter_map(|h| triangle_root(2 * n + 1 - tri(h)).map(|k| (k, h)))
        .collect()
}

/// i <= j, i(i+1) + j(j+1) = n.
fn b_yy_nr(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&i| 2 * pronic(i) <= n)
        .filter_map(|i| pronic_root(n - pronic(i)).map(|j| (i, j)))
        .collect()
}

/// 2i(i+1) + T_j = n.
fn b_yy_ram(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&i| 2 * pronic(i) <= n)
        .filter_map(|i| triangle_root(n - 2 * pronic(i)).map(|j| (i, j)))
        .collect()
}

/// Parity of the exponent of sgn(-1) for the ramified data.
fn b_ram_exponent(i: u64, j: u64) -> u64 {
    (res_b_exponent(i) + su_ram_exponent(j)) % 2
}

/// k >= h, 2n = k(k+1) + h(h+1).
fn c_xx(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&h| 2 * pronic(h) <= 2 * n)
        .filter_map(|h| pronic_root(2 * n - pronic(h)).map(|k| (k, h)))
        .collect()
}

/// n = i(i+1) + j².
fn c_yy(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&j| j * j <= n)
        .filter_map(|j| pronic_root(n - j * j).map(|i| (i, j)))
        .collect()
}

pub(super) fn x(c: GroupCase, q: QParam) -> Vec<XEntry> {
    let n = u64::from(c.n);
    let split4 = q.minus(4) == 1;
    match c.id {
        CaseId::BSplit | CaseId::BInner => {
            let inner = c.id == CaseId::BInner;
            let mut out = Vec::new();
            for (k, h) in b_xx_nr(n) {
                let l = Label::pair(Branch::Nr, k, h);
                match (k, inner) {
                    (0, true) => {}
                    (0, false) => out.extend(expand(l, XiClass::Nr, 2)),
                    _ => out.push(l),
                }
            }
            for (k, h) in b_xx_ram(n) {
                let (tk, th) = (tri(k), tri(h));
                let keep = match (inner, split4) {
                    (false, true) => true,
                    (false, false) => tk % 4 == 0 || th % 4 == 0,
                    (true, true) => false,
                    (true, false) => tk % 4 == 2 || th % 4 == 2,
                };
                if keep {
                    out.extend(expand(Label::pair(Branch::Ram, k, h), XiClass::Ram, 2));
                }
            }
            ones(out)
        }
        CaseId::CSplit => ones(c_xx(n).into_iter().flat_map(|(k, h)| {
            let l = Label::pair(Branch::Plain, k, h);
            if k == h {
                vec![l]
            } else {
                expand(l, XiClass::N, 2).collect()
            }
        })),
        CaseId::CInner => ones(
            c_xx(n)
                .into_iter()
                .filter(|&(k, h)| k == h)
                .map(|(k, h)| Label::pair(Branch::Plain, k, h)),
        ),
        _ => Vec::new(),
    }
}

pub(super) fn y(c: GroupCase, q: QParam) -> Vec<YEntry> {
    let n = u64::from(c.n);
    let split4 = q.minus(4) == 1;
    let mut out = Vec::new();
    match c.id {
        CaseId::BSplit | CaseId::BInner => {
            let inner = c.id == CaseId::BInner;
            for (i, j) in b_yy_nr(n) {
                let l = Label::pair(Branch::Nr, i, j);
                let m = pronic(i);
                if i == 0 {
                    out.push(entry(l, ids::principal()));
                } else if i < j {
                    out.push(entry(l, ids::orbit("triv", m, 0)));
                } else if !inner {
                    let mut t = expand(l, XiClass::Nr, 2);
                    out.push(entry(t.next().unwrap(), ids::orbit("triv", m, 0)));
                    out.push(entry(t.next().unwrap(), ids::orbit("E0", m, 0)));
                }
            }
            for (i, j) in b_yy_ram(n) {
                let odd = b_ram_exponent(i, j) == 1;
                let keep = if inner { !split4 && odd } else { split4 || !odd };
                if keep {
                    let l = Label::pair(Branch::Ram, i, j);
                    for (e, t) in expand(l, XiClass::Ram, 2).enumerate() {
                        out.push(entry(t, ids::orbit("ram", pronic(i), e as u32)));
                    }
                }
            }
        }
        CaseId::CSplit | CaseId::CInner => {
            for (i, j) in c_yy(n) {
                let l = Label::pair(Branch::Plain, i, j);
                let m = j * j;
                if j == 0 {
                    out.push(entry(l, ids::principal()));
                } else if c.id == CaseId::CSplit {
                    let mut t = expand(l, XiClass::N, 2);
                    if j % 2 == 0 {
                        out.push(entry(t.next().unwrap(), ids::orbit("triv", m, 0)));
                        out.push(entry(t.next().unwrap(), ids::orbit("E0", m, 0)));
                    } else {
                        for (e, t) in t.enumerate() {
                            out.push(entry(t, ids::orbit("ram", m, e as u32)));
                        }
                    }
                }
            }
        }
        _ => {}
    }
    out
}

pub(super) fn st(c: GroupCase) -> u64 {
    delta_2triangle(u64::from(c.n))
}

pub(super) fn is_stable(c: GroupCase, l: &Label) -> bool {
    match (c.id, l.ab()) {
        (CaseId::BSplit, Some((Branch::Nr, k, h))) => k.abs_diff(h) == 1,
        (CaseId::CSplit, Some((_, k, h))) => k == h,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(n: u64, f: impl Fn(u64, u64) -> bool) -> Vec<(u64, u64)> {
        let b = 2 * n + 2;
        let mut v: Vec<_> = (0..=b).flat_map(|a| (0..=b).map(move |c| (a, c))).filter(|&(a, c)| f(a, c)).collect();
        v.sort_unstable();
        v
    }

    fn sorted(mut v: Vec<(u64, u64)>) -> Vec<(u64, u64)> {
        v.sort_unstable();
        v
    }

    #[test]
    fn brute_force_oracle() {
        for n in 2..80 {
            assert_eq!(sorted(b_xx_nr(n)), scan(n, |k, h| k % 2 == 0 && k * k + h * h == 2 * n + 1));
            assert_eq!(sorted(b_xx_ram(n)), scan(n, |k, h| k >= h && tri(k) + tri(h) == 2 * n + 1));
            assert_eq!(sorted(b_yy_nr(n)), scan(n, |i, j| i <= j && pronic(i) + pronic(j) == n));
            assert_eq!(sorted(b_yy_ram(n)), scan(n, |i, j| 2 * pronic(i) + tri(j) == n));
            assert_eq!(sorted(c_xx(n)), scan(n, |k, h| k >= h && pronic(k) + pronic(h) == 2 * n));
            assert_eq!(sorted(c_yy(n)), scan(n, |i, j| pronic(i) + j * j == n));
        }
    }

    #[test]
    fn diophantine_sets_match_in_size() {
        for n in 2..400 {
            assert_eq!(b_xx_nr(n).len(), b_yy_nr(n).len(), "B nr n={n}");
            assert_eq!(b_xx_ram(n).len(), b_yy_ram(n).len(), "B ram n={n}");
            assert_eq!(c_xx(n).len(), c_yy(n).len(), "C n={n}");
        }
    }
}
