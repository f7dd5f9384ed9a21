use hookhom::arith::{binom_exact, binom_mod_p, l_p, p_divides_r, r_gcd, Prime};
use hookhom::partitions::{dominance_leq, enumerate_partitions, Partition};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13, 101]).prop_map(|p| Prime::new(p).unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=12, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn lucas_matches_exact(n in 0u64..3000, k in 0u64..3000, p in prime()) {
        prop_assert_eq!(binom_mod_p(n, k, p), p.reduce(&binom_exact(n, k as i64)));
    }

    #[test]
    fn r_divides_x(x in 1u64..300, y in 1u64..40) {
        prop_assert!(BigInt::from(x).is_multiple_of(&r_gcd(x, y)));
    }

    #[test]
    fn shortcut_matches_gcd(x in 0u64..300, y in 1u64..40, p in prime()) {
        let direct = r_gcd(x, y).is_multiple_of(&BigInt::from(p.get()));
        prop_assert_eq!(p_divides_r(x, y, p), direct);
    }

    #[test]
    fn l_p_is_digit_count(y in 1u64..1_000_000, p in prime()) {
        let l = l_p(y, p).unwrap();
        prop_assert!(p.get().pow(l) > y);
        prop_assert!(p.get().pow(l - 1) <= y);
    }

    #[test]
    fn transpose_involution_and_size(lambda in partition()) {
        let t = lambda.transpose();
        prop_assert_eq!(t.r(), lambda.r());
        prop_assert_eq!(t.transpose(), lambda);
    }

    #[test]
    fn printed_partitions_reparse(lambda in partition()) {
        prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
    }
}

#[test]
fn dominance_reverses_under_transpose() {
    for r in 1..=8 {
        let all = enumerate_partitions(r, r as usize);
        for a in &all {
            for b in &all {
                assert_eq!(
                    dominance_leq(a, b).unwrap(),
                    dominance_leq(&b.transpose(), &a.transpose()).unwrap()
                );
            }
        }
    }
}
