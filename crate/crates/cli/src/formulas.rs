use powergraph_core::numth::{
    cyclic_edge_counts, divisor_order_sum, divisor_totient_square_sum, factorize, totient,
};

use crate::{Failure, Outcome};

const MAX_N: u64 = 1 << 31;

pub fn run(n: u64) -> Outcome {
    if !(1..=MAX_N).contains(&n) {
        return Err(Failure(format!("N must satisfy 1 <= N <= 2^31, got {n}")));
    }
    let f = factorize(n)?;
    let counts = cyclic_edge_counts(&f)?;
    let prime = |p: Option<u64>| p.map_or_else(|| "none".to_string(), |p| p.to_string());
    let factors: Vec<String> = f
        .factors()
        .iter()
        .map(|&(p, a)| if a == 1 { p.to_string() } else { format!("{p}^{a}") })
        .collect();
    let rows = [
        ("n", n.to_string()),
        ("factorization", if factors.is_empty() { "1".into() } else { factors.join(" * ") }),
        ("phi(n)", totient(&f)?.to_string()),
        ("least prime q", prime(f.least_prime())),
        ("greatest prime p", prime(f.greatest_prime())),
        ("sum phi(d) d", divisor_order_sum(&f)?.to_string()),
        ("sum phi(d)^2", divisor_totient_square_sum(&f)?.to_string()),
        ("directed edges", counts.directed.to_string()),
        ("bidirectional edges", counts.bidirectional.to_string()),
        ("undirected edges", counts.undirected.to_string()),
    ];
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    for (key, value) in rows {
        println!("{key:<width$}  {value}");
    }
    Ok(true)
}
