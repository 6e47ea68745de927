use super::*;
use crate::transfer_maps::phi;
use std::collections::BTreeSet;

fn q(v: u64) -> QParam {
    QParam::new(v).unwrap()
}

fn gc(id: CaseId, n: u32) -> GroupCase {
    GroupCase::new(id, n).unwrap()
}

fn labels(xs: &[XEntry]) -> Vec<String> {
    xs.iter().map(|x| x.label.to_string()).collect()
}

/// Primes hitting every unit class mod 60.
const PRIMES: [u64; 16] = [61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 137, 151, 179];

fn all_cases(max_n: u32) -> impl Iterator<Item = (GroupCase, QParam)> {
    CaseId::ALL.iter().flat_map(move |&id| {
        id.info().rank.ranks(max_n).flat_map(move |n| {
            PRIMES.iter().map(move |&p| (gc(id, n), q(p))).filter(|(c, q)| c.id.exists(*q))
        })
    })
}

#[test]
fn b12_example() {
    let c = gc(CaseId::BSplit, 12);
    let xs = enumerate_X(c, q(13)).unwrap();
    assert_eq!(
        labels(&xs),
        ["nr(0,5,Xi^nr#0)", "nr(0,5,Xi^nr#1)", "nr(4,3)", "ram(5,4,Xi^ram#0)", "ram(5,4,Xi^ram#1)"]
    );
    let ys = enumerate_Y(c, q(13)).unwrap();
    assert_eq!(ys.iter().map(|y| y.dim).sum::<u64>(), 5);
    assert_eq!(labels(&x_st(c, q(13)).unwrap()), ["nr(4,3)"]);
    assert_eq!(dim_fc_st(c, q(13)).unwrap(), 1);
}

#[test]
fn a_ram_example() {
    let c = gc(CaseId::ARam, 6);
    let xs = enumerate_X(c, q(7)).unwrap();
    assert_eq!(labels(&xs), ["(1,2)", "(2,0,Xi_n#0)", "(2,0,Xi_n#1)"]);
    let ys: Vec<String> = enumerate_Y(c, q(7)).unwrap().iter().map(|y| y.label.to_string()).collect();
    assert_eq!(ys, ["(0,3)", "(2,2,Xi_n#0)", "(2,2,Xi_n#1)"]);
    assert_eq!(labels(&x_st(c, q(7)).unwrap()), ["(1,2)"]);
}

#[test]
fn exceptional_examples() {
    let e8 = GroupCase::fixed(CaseId::E8).unwrap();
    assert_eq!(dim_fc(e8, q(61)).unwrap(), 13);
    assert_eq!(dim_fc(e8, q(7)).unwrap(), 7);
    let f4 = GroupCase::fixed(CaseId::F4).unwrap();
    assert_eq!(dim_fc_st(f4, q(13)).unwrap(), 7);
    let g2 = GroupCase::fixed(CaseId::G2).unwrap();
    let ys = enumerate_Y(g2, q(7)).unwrap();
    let dims: Vec<(String, u64)> = ys.iter().map(|y| (y.label.to_string(), y.dim)).collect();
    assert_eq!(dims, [("0".into(), 1), ("2".into(), 1), ("1".into(), 2)]);
    let e6 = GroupCase::fixed(CaseId::E6Split).unwrap();
    assert!(enumerate_X(e6, q(5)).unwrap().is_empty());
    assert_eq!(dim_fc(e6, q(7)).unwrap(), 14);
}

#[test]
fn zero_cases() {
    for n in 2..30 {
        assert_eq!(dim_fc(gc(CaseId::AInner, n), q(61)).unwrap(), 0);
    }
    assert_eq!(dim_fc_st(gc(CaseId::DSplitEven, 16), q(7)).unwrap(), 1);
    assert!(x_st(gc(CaseId::DSplitOdd, 9), q(13)).unwrap().is_empty());
}

#[test]
fn errors() {
    assert!(matches!(dim_fc_st(gc(CaseId::BInner, 4), q(7)), Err(CaseError::NotQuasiSplit(_))));
    let tb = GroupCase::fixed(CaseId::D4TrialityB).unwrap();
    assert!(matches!(enumerate_X(tb, q(5)), Err(CaseError::Unavailable { .. })));
}

#[test]
fn labels_are_distinct() {
    for (c, q) in all_cases(60) {
        let xs = enumerate_X(c, q).unwrap();
        let set: BTreeSet<_> = xs.iter().map(|x| &x.label).collect();
        assert_eq!(set.len(), xs.len(), "{c} q={q}");
        let ys = enumerate_Y(c, q).unwrap();
        let set: BTreeSet<_> = ys.iter().map(|y| &y.label).collect();
        assert_eq!(set.len(), ys.len(), "{c} q={q}");
    }
}

#[test]
fn stable_part_matches_closed_form() {
    for (c, q) in all_cases(200).filter(|(c, _)| c.info().is_quasi_split()) {
        let s: u64 = x_st(c, q).unwrap().iter().map(|x| x.mult).sum();
        assert_eq!(s, dim_fc_st(c, q).unwrap(), "{c} q={q}");
    }
}

#[test]
fn phi_is_a_bijection() {
    for (c, q) in all_cases(200) {
        let xs = enumerate_X(c, q).unwrap();
        let ys = enumerate_Y(c, q).unwrap();
        let targets: BTreeSet<&Label> = ys.iter().map(|y| &y.label).collect();
        let mut images = BTreeSet::new();
        for x in &xs {
            let y = phi(c, q, &x.label).unwrap();
            assert!(targets.contains(&y), "{c} q={q}: {} -> {y} not in Y", x.label);
            let dim = ys.iter().find(|e| e.label == y).unwrap().dim;
            assert_eq!(dim, x.mult, "{c} q={q}: {} -> {y}", x.label);
            assert!(images.insert(y), "{c} q={q}: not injective at {}", x.label);
        }
        assert_eq!(images.len(), ys.len(), "{c} q={q}");
    }
}

#[test]
fn phi_sends_stable_to_principal() {
    for (c, q) in all_cases(200).filter(|(c, _)| c.info().is_quasi_split()) {
        let st: BTreeSet<Label> = x_st(c, q).unwrap().iter().map(|x| phi(c, q, &x.label).unwrap()).collect();
        let principal: BTreeSet<Label> = enumerate_Y(c, q)
            .unwrap()
            .into_iter()
            .filter(|y| y.endo_ref == [crate::endoscopy::ids::principal()])
            .map(|y| y.label)
            .collect();
        assert_eq!(st, principal, "{c} q={q}");
    }
}
