use macvertex::partitions::{dominance_leq, dominance_lt, is_admissible, partitions_of, staircase, Partition};
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn construction_rejects_increasing_parts() {
    assert!(Partition::new(vec![1, 2]).is_err());
    assert_eq!(p(&[3, 1, 0]).size(), 4);
    assert_eq!(p(&[3, 1, 0]).length(), 2);
    assert_eq!(p(&[3, 1, 0]).len(), 3);
}

#[test]
fn dominance_examples() {
    assert!(dominance_leq(&p(&[1, 1]), &p(&[2, 0])));
    assert!(!dominance_leq(&p(&[2, 0]), &p(&[1, 1])));
    assert!(dominance_leq(&p(&[2, 2, 0, 0]), &p(&[3, 1, 0, 0])));
    assert!(dominance_lt(&p(&[2, 2]), &p(&[3, 1])));
    assert!(!dominance_lt(&p(&[2, 2, 0]), &p(&[2, 2])));
}

#[test]
fn staircase_examples() {
    assert_eq!(staircase(4, 1).unwrap(), p(&[3, 3, 2, 2, 1, 1, 0, 0]));
    assert_eq!(staircase(4, 3).unwrap(), p(&[9, 9, 6, 6, 3, 3, 0, 0]));
    let s = staircase(1, 5).unwrap();
    assert_eq!(s, p(&[0, 0]));
    assert_eq!(s.size(), 0);
    assert!(staircase(0, 1).is_err());
}

#[test]
fn staircase_sizes() {
    for n in 1..=6 {
        for ell in 1..=4 {
            assert_eq!(staircase(n, ell).unwrap().size(), ell * n * (n - 1));
        }
    }
}

#[test]
fn admissibility_examples() {
    assert!(is_admissible(&staircase(3, 2).unwrap(), 2, 2));
    assert!(!is_admissible(&p(&[1, 1, 1]), 1, 2));
    assert!(is_admissible(&p(&[0, 0]), 3, 2));
}

#[test]
fn enumeration_examples() {
    assert_eq!(partitions_of(2, 2), vec![p(&[1, 1]), p(&[2])]);
    assert_eq!(partitions_of(4, 4).len(), 5);
    assert_eq!(partitions_of(0, 3), vec![Partition::empty()]);
    assert_eq!(partitions_of(5, 2), vec![p(&[3, 2]), p(&[4, 1]), p(&[5])]);
}

#[test]
fn staircase_is_the_unique_minimal_admissible_partition() {
    for (n, ell) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        let stair = staircase(n, ell).unwrap();
        let admissible: Vec<Partition> = partitions_of(ell * n * (n - 1), 2 * n)
            .into_iter()
            .map(|l| l.padded(2 * n).unwrap())
            .filter(|l| is_admissible(l, ell, 2))
            .collect();
        assert!(admissible.contains(&stair));
        for l in &admissible {
            assert!(dominance_leq(&stair, l), "({n},{ell}): {l} is not above the staircase");
        }
        let minimal: Vec<&Partition> = admissible
            .iter()
            .filter(|l| !admissible.iter().any(|m| dominance_lt(m, l)))
            .collect();
        assert_eq!(minimal, vec![&stair]);
    }
}

#[test]
fn lexicographic_order_extends_dominance() {
    for d in 1..=8 {
        let parts = partitions_of(d, d);
        for (i, a) in parts.iter().enumerate() {
            for b in &parts[..i] {
                assert!(!dominance_lt(a, b), "{a} is listed after {b} but below it");
            }
        }
    }
}

#[test]
fn z_lambda_values() {
    assert_eq!(p(&[1]).z_lambda(), 1.into());
    assert_eq!(p(&[1, 1]).z_lambda(), 2.into());
    // 2^2 * 2! * 1
    assert_eq!(p(&[2, 2, 1]).z_lambda(), 8.into());
}

#[test]
fn serde_keeps_trailing_zeros() {
    let a = p(&[2, 1, 0, 0]);
    let s = serde_json::to_string(&a).unwrap();
    assert_eq!(s, "[2,1,0,0]");
    assert_eq!(serde_json::from_str::<Partition>(&s).unwrap(), a);
    assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
}

fn same_size_triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1usize..=9).prop_flat_map(|d| {
        let all = partitions_of(d, d);
        let pick = prop::sample::select(all);
        (pick.clone(), pick.clone(), pick)
    })
}

proptest! {
    #[test]
    fn dominance_is_a_partial_order((a, b, c) in same_size_triple()) {
        prop_assert!(dominance_leq(&a, &a));
        if dominance_leq(&a, &b) && dominance_leq(&b, &a) {
            prop_assert_eq!(a.trimmed(), b.trimmed());
        }
        if dominance_leq(&a, &b) && dominance_leq(&b, &c) {
            prop_assert!(dominance_leq(&a, &c));
        }
    }

    #[test]
    fn padding_preserves_size_and_order((a, b, _c) in same_size_triple(), extra in 0usize..3) {
        let n = a.len().max(b.len()) + extra;
        let (pa, pb) = (a.padded(n).unwrap(), b.padded(n).unwrap());
        prop_assert_eq!(pa.size(), a.size());
        prop_assert_eq!(pa.len(), n);
        prop_assert_eq!(dominance_leq(&pa, &pb), dominance_leq(&a, &b));
    }
}
