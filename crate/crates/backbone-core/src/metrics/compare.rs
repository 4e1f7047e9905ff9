//! Similarity measures between an original graph and its backbone:
//! normalized mutual information of partitions, Spearman rank correlation
//! of centrality vectors, and the diameter quotient.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::metrics::{diameter_largest_component, MetricsError, Partition};

fn entropy(sizes: &[usize], n: f64) -> f64 {
    sizes
        .iter()
        .filter(|&&s| s > 0)
        .map(|&s| {
            let p = s as f64 / n;
            -p * p.ln()
        })
        .sum()
}

/// Normalized mutual information `2 I(p1; p2) / (H(p1) + H(p2))` with
/// natural-log entropies over the joint block-contingency table.
///
/// Equal partitions score 1 (also when both are trivial); if exactly one
/// partition has zero entropy and they differ, the score is 0.
pub fn nmi(p1: &Partition, p2: &Partition) -> Result<f64, MetricsError> {
    if p1.len() != p2.len() {
        return Err(MetricsError::LengthMismatch(p1.len(), p2.len()));
    }
    if p1 == p2 {
        return Ok(1.0);
    }
    let n = p1.len() as f64;
    let h1 = entropy(&p1.block_sizes(), n);
    let h2 = entropy(&p2.block_sizes(), n);
    if h1 == 0.0 || h2 == 0.0 {
        return Ok(0.0);
    }

    let mut contingency: HashMap<(usize, usize), usize> = HashMap::new();
    for v in 0..p1.len() {
        *contingency.entry((p1.block_of(v), p2.block_of(v))).or_insert(0) += 1;
    }
    let sizes1 = p1.block_sizes();
    let sizes2 = p2.block_sizes();
    // summing the cell terms in sorted value order makes the result exactly
    // symmetric in the two arguments (the term multiset is)
    let mut terms: Vec<f64> = contingency
        .into_iter()
        .map(|((a, b), count)| {
            let joint = count as f64 / n;
            joint * (joint / (sizes1[a] as f64 / n * (sizes2[b] as f64 / n))).ln()
        })
        .collect();
    terms.sort_unstable_by(f64::total_cmp);
    let mutual_info: f64 = terms.into_iter().sum();

    Ok((2.0 * mutual_info / (h1 + h2)).clamp(0.0, 1.0))
}

/// Fractional (average) ranks, 1-based.
fn fractional_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).expect("finite values"));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        // positions i..=j share the average of ranks i+1..=j+1
        let avg = (i + j + 2) as f64 / 2.0;
        for &idx in &order[i..=j] {
            ranks[idx] = avg;
        }
        i = j + 1;
    }
    ranks
}

/// Spearman's rank correlation: the Pearson correlation of fractional
/// ranks. Constant input vectors have no defined rank correlation.
pub fn spearman_rho(x: &[f64], y: &[f64]) -> Result<f64, MetricsError> {
    if x.len() != y.len() {
        return Err(MetricsError::LengthMismatch(x.len(), y.len()));
    }
    if x.len() < 2 {
        return Err(MetricsError::TooFewObservations);
    }
    let constant = |v: &[f64]| v.iter().all(|&a| a == v[0]);
    if constant(x) || constant(y) {
        return Err(MetricsError::ConstantVector);
    }
    let rx = fractional_ranks(x);
    let ry = fractional_ranks(y);
    let n = rx.len() as f64;
    let mean_x = rx.iter().sum::<f64>() / n;
    let mean_y = ry.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (a, b) in rx.iter().zip(&ry) {
        let dx = a - mean_x;
        let dy = b - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    // sqrt of the product (not product of sqrts) makes rho(x, x) exactly 1
    Ok(cov / (var_x * var_y).sqrt())
}

/// Original diameter divided by backbone diameter, both over the largest
/// component. Undefined when the backbone's diameter is zero.
pub fn diameter_quotient(original: &Graph, sparsified: &Graph) -> Result<f64, MetricsError> {
    let orig = diameter_largest_component(original)?;
    let sparse = diameter_largest_component(sparsified)?;
    if sparse == 0 {
        return Err(MetricsError::ZeroDiameter);
    }
    Ok(orig as f64 / sparse as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nmi_identical_partitions() {
        let p = Partition::from_assignment(&[0, 0, 1, 1, 2]);
        assert_eq!(nmi(&p, &p).unwrap(), 1.0);
        let trivial = Partition::from_assignment(&[0, 0, 0]);
        assert_eq!(nmi(&trivial, &trivial).unwrap(), 1.0);
    }

    #[test]
    fn nmi_zero_entropy_convention() {
        let singletons = Partition::singletons(4);
        let one_block = Partition::from_assignment(&[0, 0, 0, 0]);
        assert_eq!(nmi(&singletons, &one_block).unwrap(), 0.0);
        assert_eq!(nmi(&one_block, &singletons).unwrap(), 0.0);
    }

    #[test]
    fn nmi_independent_partitions() {
        let p1 = Partition::from_assignment(&[0, 0, 1, 1]);
        let p2 = Partition::from_assignment(&[0, 1, 0, 1]);
        assert!(nmi(&p1, &p2).unwrap().abs() < 1e-15);
    }

    #[test]
    fn nmi_rejects_mismatched_lengths() {
        let p1 = Partition::singletons(3);
        let p2 = Partition::singletons(4);
        assert!(matches!(nmi(&p1, &p2), Err(MetricsError::LengthMismatch(3, 4))));
    }

    #[test]
    fn spearman_identity_and_reversal() {
        let x = [1.0, 2.0, 3.0, 4.0];
        assert_eq!(spearman_rho(&x, &x).unwrap(), 1.0);
        let y = [4.0, 3.0, 2.0, 1.0];
        assert_eq!(spearman_rho(&x, &y).unwrap(), -1.0);
    }

    #[test]
    fn spearman_with_ties_matches_hand_computation() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y = [1.0, 2.0, 3.0, 3.0];
        // ranks of y: 1, 2, 3.5, 3.5 -> Pearson with (1,2,3,4)
        let rho = spearman_rho(&x, &y).unwrap();
        let expect = 0.9486832980505138; // 3/sqrt(10) via direct Pearson on ranks
        assert!((rho - expect).abs() < 1e-12);
    }

    #[test]
    fn spearman_rejects_constant_vector() {
        let x = [1.0, 2.0, 3.0];
        let y = [5.0, 5.0, 5.0];
        assert_eq!(spearman_rho(&x, &y), Err(MetricsError::ConstantVector));
    }

    #[test]
    fn quotient_examples() {
        let c4 = Graph::from_edges(4, (0..4).map(|i| (i, (i + 1) % 4)));
        assert_eq!(diameter_quotient(&c4, &c4).unwrap(), 1.0);
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert!((diameter_quotient(&c4, &p4).unwrap() - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn quotient_rejects_zero_sparse_diameter() {
        let c4 = Graph::from_edges(4, (0..4).map(|i| (i, (i + 1) % 4)));
        let empty = Graph::from_edges(4, []);
        assert_eq!(diameter_quotient(&c4, &empty), Err(MetricsError::ZeroDiameter));
    }
}
