use super::*;
use crate::cases::{dim_fc, enumerate_Y};
use std::collections::BTreeMap;

const PRIMES: [u64; 16] = [61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 137, 151, 179];

fn sweep(max_n: u32) -> impl Iterator<Item = (GroupCase, QParam)> {
    CaseId::ALL.iter().flat_map(move |&id| {
        id.info().rank.ranks(max_n).flat_map(move |n| {
            PRIMES
                .iter()
                .map(move |&p| (GroupCase::new(id, n).unwrap(), QParam::new(p).unwrap()))
                .filter(|(c, q)| c.id.exists(*q))
        })
    })
}

#[test]
fn three_sides_agree() {
    let mut bad = Vec::new();
    for (c, q) in sweep(60) {
        let x = dim_fc(c, q).unwrap();
        let e = dim_fc_endo(c, q).unwrap();
        let y: u64 = enumerate_Y(c, q).unwrap().iter().map(|y| y.dim).sum();
        if x != e || x != y {
            bad.push(format!("{c} q={q}: X={x} E={e} Y={y}"));
        }
    }
    assert!(bad.is_empty(), "{} mismatches, first: {:#?}", bad.len(), &bad[..bad.len().min(40)]);
}

#[test]
fn refs_match_contributions() {
    let mut bad = Vec::new();
    for (c, q) in sweep(40) {
        let data = enumerate_endo(c, q).unwrap();
        let by_id: BTreeMap<_, _> = data.iter().map(|d| (d.id.clone(), d)).collect();
        let mut got: BTreeMap<String, Ratio> = BTreeMap::new();
        for y in enumerate_Y(c, q).unwrap() {
            for r in &y.endo_ref {
                if !by_id.contains_key(r) {
                    bad.push(format!("{c} q={q}: {} refs missing {r}", y.label));
                }
                *got.entry(r.clone()).or_default() += Ratio::new(y.dim, y.endo_ref.len() as u64);
            }
        }
        for d in &data {
            let g = got.get(&d.id).copied().unwrap_or_default();
            if g != Ratio::from_integer(d.contribution) {
                bad.push(format!("{c} q={q}: {} contributes {} ({}) but Y gives {g}", d.id, d.contribution, d.verdict));
            }
        }
    }
    assert!(bad.is_empty(), "{} problems, first: {:#?}", bad.len(), &bad[..bad.len().min(40)]);
}

type Ratio = num_rational::Ratio<u64>;

fn q(v: u64) -> QParam {
    QParam::new(v).unwrap()
}

fn types(d: &EndoDatum) -> Vec<String> {
    let mut v: Vec<String> = d.factors.iter().map(|f| f.ty.map(|t| t.to_string()).unwrap_or_default()).collect();
    v.sort();
    v
}

fn find<'a>(data: &'a [EndoDatum], id: &str) -> &'a EndoDatum {
    data.iter().find(|d| d.id == id).unwrap_or_else(|| panic!("no datum {id}"))
}

#[test]
fn g2_data() {
    let data = enumerate_endo(GroupCase::fixed(CaseId::G2).unwrap(), q(7)).unwrap();
    assert_eq!(data.len(), 3);
    assert_eq!(data[0].id, "principal");
    assert_eq!(types(find(&data, "triv:1#0")), ["A2"]);
    assert_eq!(types(find(&data, "triv:2#0")), ["A1", "A1"]);
    assert!(data.iter().all(|d| d.action.stabilizer == Ramification::Trivial));
}

#[test]
fn e7_ramified_datum() {
    let data = enumerate_endo(GroupCase::fixed(CaseId::E7Split).unwrap(), q(7)).unwrap();
    let d = find(&data, "ram2:07#0");
    assert_eq!(d.orbit, ["a0", "a7"]);
    assert_eq!(d.out_order, 2);
    assert_eq!(d.factors[0].kind, FactorKind::Group(CaseId::E6Ram));
}

#[test]
fn b_trivial_datum() {
    let data = enumerate_endo(GroupCase::new(CaseId::BSplit, 9).unwrap(), q(7)).unwrap();
    assert_eq!(types(find(&data, "triv:m=3#0")), ["B3", "B6"]);
}

#[test]
fn centre_examples() {
    let c = GroupCase::new(CaseId::BSplit, 8).unwrap();
    let data = enumerate_endo(c, q(7)).unwrap();
    let nr = find(&data, "E0:m=2#0");
    assert_eq!(nr.orbit.len(), 2);
    assert_eq!(centre_criterion(nr, c, q(7)), CentreVerdict::DiscardedNotTotallyRamified);
    assert_eq!(centre_criterion(find(&data, "triv:m=2#0"), c, q(7)), CentreVerdict::Retained);
    let c = GroupCase::new(CaseId::CSplit, 6).unwrap();
    let data = enumerate_endo(c, q(7)).unwrap();
    let d = find(&data, "ram:m=1#0");
    assert_eq!(d.orbit, ["a0", "a1"]);
    assert_eq!(centre_criterion(d, c, q(7)), CentreVerdict::Retained);
}

#[test]
fn endo_dimension_examples() {
    assert_eq!(dim_fc_endo(GroupCase::fixed(CaseId::E8).unwrap(), q(61)).unwrap(), 13);
    assert_eq!(dim_fc_endo(GroupCase::new(CaseId::BSplit, 12).unwrap(), q(13)).unwrap(), 5);
    assert_eq!(dim_fc_endo(GroupCase::new(CaseId::ASplit, 3).unwrap(), q(7)).unwrap(), 6);
    let e8 = enumerate_endo(GroupCase::fixed(CaseId::E8).unwrap(), q(61)).unwrap();
    assert_eq!(e8.iter().filter(|d| d.verdict == Verdict::Retained).count(), 1);
}

#[test]
fn extension_examples() {
    let ask = |base, shape, n, p| extension_exists(ExtensionQuery { base, shape, n, q: q(p) }).unwrap();
    assert_eq!(ask(Base::F, ExtensionShape::CyclicN, 4, 13), (1, 4));
    assert_eq!(ask(Base::E0, ExtensionShape::DihedralOverQuadratic, 5, 19), (1, 1));
    assert_eq!(ask(Base::ERam, ExtensionShape::Cyclic4ContainingE, 4, 7), (0, 0));
    let bad = ExtensionQuery { base: Base::E0, shape: ExtensionShape::CyclicN, n: 3, q: q(7) };
    assert!(extension_exists(bad).is_err());
}

#[test]
fn trivial_action_factors_match_the_diagram() {
    use crate::diagrams::{affine_diagram, remove_orbit, DynkinType, Series};
    let cases = [(CaseId::BSplit, Series::B), (CaseId::CSplit, Series::C), (CaseId::DSplitEven, Series::D)];
    for (id, series) in cases {
        for n in (8..=24).step_by(2) {
            let dual = affine_diagram(DynkinType::new(series, n).unwrap().dual());
            let data = enumerate_endo(GroupCase::new(id, n).unwrap(), q(13)).unwrap();
            for m in 4..=u64::from(n) - 4 {
                let Some(d) = data.iter().find(|d| d.id == ids::orbit("triv", m, 0)) else {
                    continue;
                };
                let mut want: Vec<String> =
                    remove_orbit(&dual, &[m as usize]).into_iter().map(|t| t.dual().to_string()).collect();
                want.sort();
                assert_eq!(types(d), want, "{id:?} n={n} m={m}");
            }
        }
    }
}

#[test]
fn unavailable_case() {
    let c = GroupCase::fixed(CaseId::D4TrialityC).unwrap();
    assert!(enumerate_endo(c, q(7)).is_err());
    assert!(enumerate_endo(c, q(5)).is_ok());
}
