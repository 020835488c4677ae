use latrect::oracle::{f_oracle_geometric, f_oracle_quadruples};
use latrect::{compute_table, f_baseline, Algorithm};

#[test]
fn oracles_agree_with_everything_up_to_60() {
    let table = compute_table(60).unwrap();
    for n in 1..=60u64 {
        let want = f_oracle_quadruples(n).unwrap();
        assert_eq!(f_oracle_geometric(n).unwrap(), want, "geometric, n = {n}");
        assert_eq!(table[n as usize - 1], want, "table, n = {n}");
        for a in Algorithm::CONCRETE {
            assert_eq!(a.run(n).unwrap(), want, "{a}, n = {n}");
        }
    }
}

#[test]
fn quadruple_oracle_agrees_up_to_200() {
    let table = compute_table(200).unwrap();
    for n in 61..=200u64 {
        let want = f_oracle_quadruples(n).unwrap();
        assert_eq!(f_baseline(n).unwrap(), want, "baseline, n = {n}");
        assert_eq!(table[n as usize - 1], want, "table, n = {n}");
    }
}

#[test]
fn oracles_refuse_large_n() {
    assert!(f_oracle_quadruples(201).is_err());
    assert!(f_oracle_geometric(61).is_err());
}
