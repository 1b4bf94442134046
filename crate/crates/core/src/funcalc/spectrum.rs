//! The jet spectrum: eigenvalues with their maximal Jordan block lengths.
//!
//! A matrix is characterized up to similarity not by its eigenvalue set but
//! by the multiset of pairs `(λ, k)` with one pair per Jordan block. The
//! pairs are recovered from rank sequences: with `r_j = rank((a − λe)^j)`,
//! the count of blocks of size at least `j` is `r_{j−1} − r_j`, which is
//! the most stable desk-scale route and directly yields the multiset.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{eigenvalues, rank_abs, CMat};

/// Multiset of `(eigenvalue, block length)` pairs, `Σk = n`.
#[derive(Debug, Clone, PartialEq)]
pub struct JetSpectrum {
    pub pairs: Vec<(Complex64, usize)>,
}

impl JetSpectrum {
    pub fn new(mut pairs: Vec<(Complex64, usize)>) -> Self {
        sort_pairs(&mut pairs);
        JetSpectrum { pairs }
    }

    pub fn total_length(&self) -> usize {
        self.pairs.iter().map(|(_, k)| k).sum()
    }

    /// Multiset equality with eigenvalues matched within `tol`.
    pub fn matches(&self, other: &JetSpectrum, tol: f64) -> bool {
        if self.pairs.len() != other.pairs.len() {
            return false;
        }
        let mut used = vec![false; other.pairs.len()];
        for (lambda, k) in &self.pairs {
            let mut found = false;
            for (j, (mu, l)) in other.pairs.iter().enumerate() {
                if !used[j] && k == l && (lambda - mu).norm() <= tol {
                    used[j] = true;
                    found = true;
                    break;
                }
            }
            if !found {
                return false;
            }
        }
        true
    }
}

fn sort_pairs(pairs: &mut [(Complex64, usize)]) {
    pairs.sort_by(|a, b| {
        (a.0.re, a.0.im, std::cmp::Reverse(a.1))
            .partial_cmp(&(b.0.re, b.0.im, std::cmp::Reverse(b.1)))
            .unwrap()
    });
}

/// Single-linkage clusters of the eigenvalue list at linking radius `r`.
fn cluster(ev: &[Complex64], r: f64) -> Vec<Vec<Complex64>> {
    let n = ev.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn root(label: &mut [usize], mut i: usize) -> usize {
        while label[i] != i {
            label[i] = label[label[i]];
            i = label[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (ev[i] - ev[j]).norm() <= r {
                let (a, b) = (root(&mut label, i), root(&mut label, j));
                if a != b {
                    label[a] = b;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<Complex64>> = Default::default();
    for i in 0..n {
        let r = root(&mut label, i);
        groups.entry(r).or_default().push(ev[i]);
    }
    groups.into_values().collect()
}

/// Block sizes of the cluster at `λ̂` from the rank staircase, or `None`
/// when the staircase is inconsistent with the multiplicity.
///
/// The `j`-th power is thresholded at `tol·σ_max(a − λ̂e)^j`: powers of the
/// nilpotent part vanish exactly, so their singular values are pure noise
/// and a cutoff relative to the power's own largest singular value would
/// count them as rank.
fn block_sizes(a: &CMat, lambda: Complex64, multiplicity: usize, tol: f64) -> Option<Vec<usize>> {
    let n = a.nrows();
    let shifted = a - CMat::identity(n, n) * lambda;
    let scale = crate::linalg::sigma_max(&shifted);
    let mut counts = Vec::new(); // counts[j] = #blocks of size ≥ j+1
    let mut power = CMat::identity(n, n);
    let mut prev_rank = n;
    let mut cutoff = 1.0;
    for _ in 0..multiplicity {
        power = &power * &shifted;
        cutoff *= scale;
        let r = rank_abs(&power, tol * cutoff);
        if r > prev_rank {
            return None;
        }
        counts.push(prev_rank - r);
        prev_rank = r;
        if r + multiplicity == n {
            break;
        }
    }
    if prev_rank + multiplicity != n {
        return None;
    }
    // the staircase must be non-increasing
    if counts.windows(2).any(|w| w[1] > w[0]) {
        return None;
    }
    let mut sizes = Vec::new();
    for j in 0..counts.len() {
        let next = counts.get(j + 1).copied().unwrap_or(0);
        for _ in 0..counts[j] - next {
            sizes.push(j + 1);
        }
    }
    if sizes.iter().sum::<usize>() != multiplicity {
        return None;
    }
    Some(sizes)
}

/// Jet spectrum of `a`: eigenvalue clusters with Jordan block lengths.
///
/// Eigenvalues are clustered by single linkage starting at radius `tol`;
/// when backward error spreads a defective cluster wider than that, the
/// radius escalates by doubling until the rank staircases validate, but
/// never beyond a tenth of the remaining cluster separation — past that
/// the data is declared ambiguous. Reported eigenvalues are cluster
/// centroids, which enjoy the averaged first-order accuracy.
pub fn jet_spectrum(a: &CMat, tol: f64) -> Result<JetSpectrum> {
    let n = a.nrows();
    if n == 0 {
        return Ok(JetSpectrum::new(Vec::new()));
    }
    let ev = eigenvalues(a)?;
    let scale = ev.iter().map(|l| l.norm()).fold(1.0, f64::max);

    // Escalate the linking radius and keep the coarsest clustering that
    // both validates every rank staircase and keeps its clusters at least
    // 10 linking radii apart. Backward error scatters a defective
    // eigenvalue into satellites that masquerade as simple singletons at
    // fine radii; the merged reading validates only for genuinely
    // defective clusters (for separated simple eigenvalues the merged
    // staircase cannot close), so the coarsest validated reading is the
    // Jordan-true one.
    let mut best: Option<Vec<(Complex64, usize)>> = None;
    let mut radius = tol.max(1e-14) * scale;
    for _ in 0..60 {
        let clusters = cluster(&ev, radius);
        let centroids: Vec<Complex64> = clusters
            .iter()
            .map(|c| c.iter().sum::<Complex64>() / c.len() as f64)
            .collect();

        let mut pairs = Vec::new();
        let mut valid = true;
        for (centroid, members) in centroids.iter().zip(&clusters) {
            match block_sizes(a, *centroid, members.len(), tol) {
                Some(sizes) => {
                    for k in sizes {
                        pairs.push((*centroid, k));
                    }
                }
                None => {
                    valid = false;
                    break;
                }
            }
        }
        if valid {
            let mut min_sep = f64::INFINITY;
            for i in 0..centroids.len() {
                for j in i + 1..centroids.len() {
                    min_sep = min_sep.min((centroids[i] - centroids[j]).norm());
                }
            }
            if min_sep >= 10.0 * radius {
                best = Some(pairs);
            }
        }
        if clusters.len() == 1 {
            break;
        }
        radius *= 2.0;
    }
    best.map(JetSpectrum::new).ok_or_else(|| {
        Error::ClusterResolution(
            "no clustering both validated its rank staircases and kept clusters \
             10 linking radii apart; reduce tol or provide exact data"
                .into(),
        )
    })
}
