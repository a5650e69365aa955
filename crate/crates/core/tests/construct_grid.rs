mod common;

use std::collections::BTreeSet;

use common::{all_words, code_of, fast_non_overlapping, has_run};
use noc_core::construct::{
    construction_i, construction_i_prime, construction_ia, construction_ii, construction_ii_prime, phi_code,
    ForbiddenSet,
};
use noc_core::count::{s_count, s_gf, vcal_count, vcal_gf};
use noc_core::verify::{is_non_expandable, is_non_overlapping, EnumCap};
use noc_core::{Alphabet, Bipartition, Code, PartSizes};
use num_bigint::{BigInt, BigUint};

fn canonical(q: usize, i: usize) -> Bipartition {
    Bipartition::canonical(Alphabet::new(q).unwrap(), i).unwrap()
}

/// Every bipartition of `Z_q`, by the bitmask of `I`.
fn all_bipartitions(q: usize) -> Vec<Bipartition> {
    let a = Alphabet::new(q).unwrap();
    (1..(1u32 << q) - 1)
        .map(|mask| {
            let i: Vec<u8> = (0..q as u8).filter(|s| mask >> s & 1 == 1).collect();
            Bipartition::from_i(a, &i).unwrap()
        })
        .collect()
}

/// Cross-checks the library verifier where the quadratic scan is cheap.
fn assert_non_overlapping(code: &Code, what: &str) {
    assert!(fast_non_overlapping(code), "{what} is overlapping");
    if code.len() <= 600 {
        assert!(is_non_overlapping(code), "{what}: library verifier disagrees");
    }
}

#[test]
fn fixed_length_grid_is_non_overlapping_and_counted() {
    for q in 2..=4 {
        for n in 2..=12 {
            for i in 1..q {
                let bp = canonical(q, i);
                let sizes = PartSizes::split(q as u32, i as u32).unwrap();
                for k in 1..n {
                    let code = construction_i_prime(n, &bp, k).unwrap();
                    let what = format!("I' q={q} n={n} |I|={i} k={k}");
                    assert_non_overlapping(&code, &what);
                    assert_eq!(BigUint::from(code.len()), s_count(sizes, k, n).unwrap(), "{what}");
                    if k <= 4 && n <= 10 {
                        let gf = s_gf(sizes, k).unwrap().coefficient(n).unwrap();
                        assert_eq!(gf, BigInt::from(code.len()), "{what}");
                    }
                }
            }
            for k in 1..n {
                let code = construction_i(n, q, k).unwrap();
                assert_non_overlapping(&code, &format!("I q={q} n={n} k={k}"));
            }
        }
    }
}

#[test]
fn variable_length_grid_is_non_overlapping_and_counted() {
    for q in 2..=4 {
        for k in 3..=5 {
            for n in 2 * k + 2..=12 {
                for i in 1..q {
                    let bp = canonical(q, i);
                    let sizes = bp.sizes();
                    let code = construction_ii_prime(n, &bp, k).unwrap();
                    let what = format!("II' q={q} n={n} |I|={i} k={k}");
                    assert_non_overlapping(&code, &what);
                    assert_eq!(BigUint::from(code.len()), vcal_count(sizes, k, n).unwrap(), "{what}");
                    assert_eq!(vcal_gf(sizes, k).unwrap().coefficient(n).unwrap(), BigInt::from(code.len()));
                }
            }
        }
    }
    for k in 3..=5 {
        for n in 2 * k + 2..=16 {
            assert_non_overlapping(&construction_ii(n, k).unwrap(), &format!("II n={n} k={k}"));
        }
    }
}

#[test]
fn partial_forbidden_sets_stay_non_overlapping() {
    let bp = Bipartition::new(Alphabet::new(4).unwrap(), &[0, 1], &[2, 3]).unwrap();
    let blocks: Vec<Vec<u8>> = vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
    for mask in 1u32..16 {
        let chosen = (0..4).filter(|b| mask >> b & 1 == 1).map(|b| blocks[b].clone());
        let c = ForbiddenSet::new(2, code_of(4, chosen).into_words()).unwrap();
        for n in 3..=8usize {
            let code = construction_ia(n, &bp, &c).unwrap();
            assert_non_overlapping(&code, &format!("I.A mask={mask} n={n}"));
        }
    }
}

#[test]
fn ia_with_full_power_equals_i_prime() {
    for q in 2..=4 {
        for i in 1..q {
            let bp = canonical(q, i);
            for n in 2..=8 {
                for k in 1..n {
                    let c = ForbiddenSet::power(bp.i(), k).unwrap();
                    assert_eq!(construction_ia(n, &bp, &c).unwrap(), construction_i_prime(n, &bp, k).unwrap());
                }
            }
        }
    }
}

#[test]
fn i_prime_is_the_expansion_of_binary_construction_i() {
    for q in 2..=4 {
        for bp in all_bipartitions(q) {
            for n in 2..=10 {
                for k in 1..n {
                    let binary = construction_i(n, 2, k).unwrap();
                    assert_eq!(phi_code(&binary, &bp).unwrap(), construction_i_prime(n, &bp, k).unwrap());
                }
            }
        }
    }
}

#[test]
fn construction_i_matches_i_prime_with_zero_part() {
    for q in 2..=4 {
        let bp = Bipartition::from_i(Alphabet::new(q).unwrap(), &[0]).unwrap();
        for n in 2..=10 {
            for k in 1..n {
                assert_eq!(construction_i(n, q, k).unwrap(), construction_i_prime(n, &bp, k).unwrap());
            }
        }
    }
}

#[test]
fn sizes_depend_only_on_part_sizes() {
    for q in 3..=4 {
        for n in 3..=9 {
            for k in 1..n {
                let mut by_size: std::collections::BTreeMap<usize, BTreeSet<usize>> = Default::default();
                for bp in all_bipartitions(q) {
                    let len = construction_i_prime(n, &bp, k).unwrap().len();
                    by_size.entry(bp.i().len()).or_default().insert(len);
                }
                assert!(by_size.values().all(|s| s.len() == 1), "q={q} n={n} k={k}: {by_size:?}");
            }
        }
    }
}

#[test]
fn ii_prime_layers_decompose() {
    for q in 2..=3 {
        for bp in all_bipartitions(q) {
            let k = 3;
            let code = construction_ii_prime(10, &bp, k).unwrap();
            for len in 8..=10 {
                let expected: BTreeSet<Vec<u8>> = all_words(q, len)
                    .into_iter()
                    .filter(|w| {
                        let (head, rest) = w.split_at(k);
                        let (r, tail) = rest.split_at(len - 2 * k);
                        head.iter().all(|&s| bp.in_j(s))
                            && tail.iter().all(|&s| bp.in_i(s))
                            && bp.in_i(r[0])
                            && bp.in_j(r[r.len() - 1])
                            && !has_run(r, k, |s| bp.in_i(s))
                            && !has_run(r, k, |s| bp.in_j(s))
                    })
                    .collect();
                let layer: BTreeSet<Vec<u8>> = code.layer(len).iter().map(|w| w.symbols().to_vec()).collect();
                assert_eq!(layer, expected, "q={q} I={:?} len={len}", bp.i());
            }
        }
    }
}

#[test]
fn levenshtein_bound_is_attained_when_n_divides_q() {
    for (n, q) in [(2, 2), (2, 4), (2, 6), (3, 3), (3, 6), (4, 4), (2, 8), (4, 8), (5, 5), (6, 6)] {
        let bp = canonical(q, q / n);
        let c = ForbiddenSet::power(bp.i(), 1).unwrap();
        let code = construction_ia(n, &bp, &c).unwrap();
        let lev = noc_core::bounds::levenshtein_bound(n, q as u32).unwrap();
        assert!(lev.exact.is_integer(), "n={n} q={q}");
        assert_eq!(BigInt::from(code.len()), lev.exact.to_integer(), "n={n} q={q}");
    }
}

#[test]
fn constructions_are_non_expandable() {
    for q in 2..=3 {
        for n in 3..=8usize {
            let mut ks: BTreeSet<usize> = (1..n.div_ceil(2)).collect();
            ks.insert(n - 1);
            for i in 1..q {
                let bp = canonical(q, i);
                for &k in &ks {
                    let code = construction_i_prime(n, &bp, k).unwrap();
                    assert_eq!(is_non_expandable(&code, EnumCap::DEFAULT), Ok(true), "q={q} n={n} |I|={i} k={k}");
                }
            }
        }
    }
}

#[test]
fn u_set_enumeration_matches_recurrence() {
    // I = {0}, J = {1, 2}: I^k-free words starting and ending in J
    for k in 1..=3 {
        for n in 1..=8 {
            let count =
                all_words(3, n).iter().filter(|w| w[0] != 0 && w[n - 1] != 0 && !has_run(w, k, |s| s == 0)).count();
            let sizes = PartSizes::new(1, 2).unwrap();
            assert_eq!(BigUint::from(count), noc_core::count::u_count(sizes, k, n).unwrap(), "k={k} n={n}");
        }
    }
}

#[test]
fn r_enumeration_matches_recurrence() {
    for q in 2..=4usize {
        for i in 1..q {
            let in_i = |s: u8| (s as usize) < i;
            for k in 2..=4 {
                for n in 2..=8 {
                    let count = all_words(q, n)
                        .iter()
                        .filter(|w| {
                            in_i(w[0]) && !in_i(w[n - 1]) && !has_run(w, k, in_i) && !has_run(w, k, |s| !in_i(s))
                        })
                        .count();
                    let sizes = PartSizes::split(q as u32, i as u32).unwrap();
                    let r = noc_core::count::r_count(sizes, k, n).unwrap();
                    assert_eq!(BigUint::from(count), r, "q={q} |I|={i} k={k} n={n}");
                }
            }
        }
    }
}

#[test]
fn insertion_interpretation() {
    for q in 2..=3usize {
        for i in 1..q {
            let bp = canonical(q, i);
            for k in 1..=3 {
                for n in k + 3..=9 {
                    let build = |m: usize| -> BTreeSet<Vec<u8>> {
                        if m < 2 || k > m - 1 {
                            return BTreeSet::new();
                        }
                        construction_i_prime(m, &bp, k).unwrap().iter().map(|w| w.symbols().to_vec()).collect()
                    };
                    let s_n = build(n);
                    let mut p: BTreeSet<Vec<u8>> = BTreeSet::new();
                    for w in build(n - 1) {
                        for a in 0..q as u8 {
                            let mut x = w[..n - 2].to_vec();
                            x.push(a);
                            x.push(w[n - 2]);
                            p.insert(x);
                        }
                    }
                    assert!(s_n.is_subset(&p), "q={q} |I|={i} k={k} n={n}");
                    let mut extra: BTreeSet<Vec<u8>> = BTreeSet::new();
                    for s in build(n - k - 1) {
                        for block in all_words(q, k).into_iter().filter(|b| b.iter().all(|&x| bp.in_i(x))) {
                            for &j in bp.j() {
                                let mut x = s.clone();
                                x.extend_from_slice(&block);
                                x.push(j);
                                extra.insert(x);
                            }
                        }
                    }
                    let diff: BTreeSet<Vec<u8>> = p.difference(&s_n).cloned().collect();
                    assert_eq!(diff, extra, "q={q} |I|={i} k={k} n={n}");
                }
            }
        }
    }
}
