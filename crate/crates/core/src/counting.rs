//! Closed-form counts used to cross-check enumerations.

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The Catalan number `C_m = binom(2m, m) / (m + 1)`.
pub fn catalan(m: u64) -> u128 {
    binomial(2 * m, m) / (m as u128 + 1)
}

/// Triangulations of a convex `(n+3)`-gon.
pub fn associahedron_vertices(n: u64) -> u128 {
    catalan(n + 1)
}

/// Colored triangulations of a convex `(n+3)`-gon (pseudo-Catalan number).
pub fn colorful_associahedron_vertices(n: u64) -> u128 {
    factorial(n) * catalan(n + 1)
}

/// Flags of the colorful associahedron, `(n!)^2 C_{n+1}`.
pub fn colorful_associahedron_flags(n: u64) -> u128 {
    factorial(n) * factorial(n) * catalan(n + 1)
}

/// Centrally symmetric triangulations of a `(2n+4)`-gon, `(n+2) C_{n+1}`.
pub fn cyclohedron_vertices(n: u64) -> u128 {
    (n as u128 + 2) * catalan(n + 1)
}

/// Colored centrally symmetric triangulations, `n! binom(2n+2, n+1)`.
pub fn colorful_cyclohedron_vertices(n: u64) -> u128 {
    factorial(n) * binomial(2 * n + 2, n + 1)
}

/// Edges of the colorful cyclohedron's exchange graph, `(2n+2)! / (2 (n+1)!)`.
pub fn colorful_cyclohedron_edges(n: u64) -> u128 {
    factorial(2 * n + 2) / (2 * factorial(n + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let cat: Vec<u128> = (0..8).map(catalan).collect();
        assert_eq!(cat, vec![1, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(binomial(8, 4), 70);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
    }

    #[test]
    fn cyclohedron_forms_agree() {
        for n in 1..8 {
            assert_eq!(
                factorial(n) * cyclohedron_vertices(n),
                colorful_cyclohedron_vertices(n)
            );
            assert_eq!(
                (n as u128 + 1) * colorful_cyclohedron_vertices(n) / 2,
                colorful_cyclohedron_edges(n)
            );
        }
    }
}
