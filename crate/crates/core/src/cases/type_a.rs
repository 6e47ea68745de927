//! SL(n), SU(n) for unramified and ramified E, and their inner forms.

use super::labels::{expand, Branch, Label, XEntry, XiClass, YEntry};
use super::manifest::{CaseId, GroupCase};
use crate::arith::{delta_2triangle, delta_triangle, euler_phi, pronic, tri, triangle_root, QParam};
use crate::endoscopy::ids;

fn n(c: GroupCase) -> u64 {
    u64::from(c.n)
}

/// Size of the character set indexing the torus data, zero when no such
/// data exist.
pub(crate) fn torus_count(c: GroupCase, q: QParam) -> u64 {
    let n = n(c);
    let phi = euler_phi(n).expect("n > 0");
    match c.id {
        CaseId::ASplit => q.minus(n) * n * phi,
        CaseId::AUnram => {
            let extra = u64::from(n.is_multiple_of(2));
            q.plus(n) * (1 + extra) * phi
        }
        _ => 0,
    }
}

fn torus_labels(c: GroupCase, q: QParam) -> impl Iterator<Item = Label> {
    (0..torus_count(c, q) as u32).map(|i| Label::char(XiClass::RamN, i))
}

/// The set of (k,h) with h^2 + k(k+1) = n.
pub(crate) fn ram_xx(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&k| pronic(k) <= n)
        .filter_map(|k| crate::arith::square_root(n - pronic(k)).map(|h| (k, h)))
        .collect()
}

/// The set of (i,j) with i <= j and T_i + T_j = n.
pub(crate) fn ram_yy(n: u64) -> Vec<(u64, u64)> {
    (0..)
        .take_while(|&i| 2 * tri(i) <= n)
        .filter_map(|i| triangle_root(n - tri(i)).map(|j| (i, j)))
        .collect()
}

pub(super) fn x(c: GroupCase, q: QParam) -> Vec<XEntry> {
    let n = n(c);
    let one = |label| XEntry { label, mult: 1 };
    match c.id {
        CaseId::ASplit | CaseId::AUnram => torus_labels(c, q).map(one).collect(),
        CaseId::ARam => ram_xx(n)
            .into_iter()
            .flat_map(|(k, h)| {
                let l = Label::pair(Branch::Plain, k, h);
                if h == 0 && delta_2triangle(n) == 1 {
                    expand(l, XiClass::N, 2).collect::<Vec<_>>()
                } else {
                    vec![l]
                }
            })
            .map(one)
            .collect(),
        CaseId::ARamInner => ram_xx(n)
            .into_iter()
            .filter(|&(_, h)| h != 0)
            .map(|(k, h)| one(Label::pair(Branch::Plain, k, h)))
            .collect(),
        _ => Vec::new(),
    }
}

pub(super) fn y(c: GroupCase, q: QParam) -> Vec<YEntry> {
    let n = n(c);
    let entry = |label, id: String| YEntry { label, dim: 1, endo_ref: vec![id] };
    match c.id {
        CaseId::ASplit | CaseId::AUnram => torus_labels(c, q)
            .enumerate()
            .map(|(i, l)| entry(l, ids::torus(i as u32)))
            .collect(),
        CaseId::ARam | CaseId::ARamInner => {
            let inner = c.id == CaseId::ARamInner;
            let mut out = Vec::new();
            for (i, j) in ram_yy(n) {
                let l = Label::pair(Branch::Plain, i, j);
                if i == 0 {
                    out.push(entry(l, ids::principal()));
                } else if i < j {
                    out.push(entry(l, ids::orbit("E", tri(i), 0)));
                } else if !inner {
                    let mut tagged = expand(l, XiClass::N, 2);
                    out.push(entry(tagged.next().unwrap(), ids::orbit("E", tri(i), 0)));
                    out.push(entry(tagged.next().unwrap(), ids::orbit("Q", tri(i), 0)));
                }
            }
            out
        }
        _ => Vec::new(),
    }
}

pub(super) fn st(c: GroupCase) -> u64 {
    match c.id {
        CaseId::ARam => delta_triangle(n(c)),
        _ => 0,
    }
}

pub(super) fn is_stable(c: GroupCase, l: &Label) -> bool {
    match (c.id, l.ab()) {
        (CaseId::ARam, Some((_, k, h))) => h == k || h == k + 1,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_oracle() {
        for n in 3..120 {
            let b = 2 * n + 2;
            let xx: Vec<_> = (0..=b).flat_map(|k| (0..=b).map(move |h| (k, h))).filter(|&(k, h)| h * h + pronic(k) == n).collect();
            let yy: Vec<_> = (0..=b).flat_map(|i| (0..=b).map(move |j| (i, j))).filter(|&(i, j)| i <= j && tri(i) + tri(j) == n).collect();
            assert_eq!(ram_xx(n), xx, "n={n}");
            assert_eq!(ram_yy(n), yy, "n={n}");
        }
    }

    #[test]
    fn ram_sets_small() {
        assert_eq!(ram_xx(6), vec![(1, 2), (2, 0)]);
        assert_eq!(ram_yy(6), vec![(0, 3), (2, 2)]);
        for n in 1..300 {
            assert_eq!(ram_xx(n).len(), ram_yy(n).len(), "n={n}");
        }
    }
}
