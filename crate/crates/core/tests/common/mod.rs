#![allow(dead_code)]

use num_bigint::BigInt;
use symtensor::LieRing;

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Abelian ring of the given rank with every generator of order t
/// (t = 0 for free abelian).
pub fn abelian(rank: usize, t: i64) -> LieRing {
    LieRing::new(vec![BigInt::from(t); rank], []).unwrap()
}

/// Heisenberg ring: [x1, x2] = x3, x3 central, all orders t.
pub fn heisenberg(t: i64) -> LieRing {
    LieRing::new(vec![BigInt::from(t); 3], [((1, 2), ints(&[0, 0, 1]))]).unwrap()
}

/// Two-dimensional solvable ring [x1, x2] = x1 with both orders t.
pub fn solvable(t: i64) -> LieRing {
    LieRing::new(vec![BigInt::from(t); 2], [((1, 2), ints(&[1, 0]))]).unwrap()
}

/// Free nilpotent ring of class 2 on `gens` generators, reduced mod t:
/// generators x_1..x_g followed by the central elements z_{ij} = [x_i, x_j]
/// for i < j in lexicographic order.
pub fn free_nilpotent_two(gens: usize, t: i64) -> LieRing {
    let pairs: Vec<(usize, usize)> = (1..=gens)
        .flat_map(|i| (i + 1..=gens).map(move |j| (i, j)))
        .collect();
    let rank = gens + pairs.len();
    let brackets = pairs.iter().enumerate().map(|(idx, &(i, j))| {
        let mut value = vec![BigInt::from(0); rank];
        value[gens + idx] = BigInt::from(1);
        ((i, j), value)
    });
    LieRing::new(vec![BigInt::from(t); rank], brackets).unwrap()
}

/// The finite test corpus: names plus rings, all with at most 3^6 elements.
pub fn corpus() -> Vec<(&'static str, LieRing)> {
    vec![
        ("abelian rank 2 mod 2", abelian(2, 2)),
        ("abelian rank 3 mod 6", abelian(3, 6)),
        ("heisenberg mod 2", heisenberg(2)),
        ("heisenberg mod 3", heisenberg(3)),
        ("heisenberg mod 4", heisenberg(4)),
        ("solvable mod 2", solvable(2)),
        ("solvable mod 3", solvable(3)),
        ("free nilpotent cl.2 on 2 mod 2", free_nilpotent_two(2, 2)),
        ("free nilpotent cl.2 on 2 mod 3", free_nilpotent_two(2, 3)),
        ("free nilpotent cl.2 on 3 mod 2", free_nilpotent_two(3, 2)),
        ("free nilpotent cl.2 on 3 mod 3", free_nilpotent_two(3, 3)),
    ]
}
