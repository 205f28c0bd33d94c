//! Jordan-form data of punctual fibers and the orbit-closure order.
//!
//! An orbit in the Quot atlas is labelled by, at each support point, the
//! Jordan partition of the local nilpotent action. `O_1` lies in the closure
//! of `O_2` iff the support-length data agree and, point by point,
//! `rank(J_1^j) <= rank(J_2^j)` for every `j >= 1`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::point::{RepPoint, SupportLengthData};
use crate::roots::split_roots;
use crate::scalar::GR;

/// Block sizes of a nilpotent Jordan form, weakly decreasing, all positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into weakly decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// `(n)`, a single Jordan block.
    pub fn single_block(n: usize) -> Self {
        if n == 0 {
            Partition(Vec::new())
        } else {
            Partition(vec![n])
        }
    }

    /// `(1, ..., 1)`, the zero nilpotent.
    pub fn trivial(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `rank(J^j) = sum_i max(lambda_i - j, 0)`.
    pub fn block_rank(&self, j: usize) -> usize {
        self.0.iter().map(|&l| l.saturating_sub(j)).sum()
    }

    /// `rank(J^j)` for `j = 1, 2, ...` while nonzero.
    pub fn rank_sequence(&self) -> Vec<usize> {
        (1..).map(|j| self.block_rank(j)).take_while(|&r| r > 0).collect()
    }

    /// Nilpotent Jordan matrix with these blocks, shifted by `eigenvalue`.
    pub fn jordan_matrix(&self, eigenvalue: &GR) -> Matrix {
        let n = self.size();
        let mut m = Matrix::scalar(n, eigenvalue.clone());
        let mut start = 0;
        for &b in &self.0 {
            for k in start..start + b - 1 {
                m[(k, k + 1)] = GR::from(1);
            }
            start += b;
        }
        m
    }

    /// Every partition of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                rec(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Recovers the partition from `rank(N^j)` for `j = 0, 1, ...`
    /// (the sequence must start with the size and end with zero).
    fn from_ranks(ranks: &[usize]) -> Self {
        // blocks of size >= j number ranks[j-1] - ranks[j]
        let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        let mut parts = Vec::new();
        for (j, count) in at_least.iter().enumerate() {
            let exactly = count - at_least.get(j + 1).copied().unwrap_or(0);
            parts.extend(core::iter::repeat_n(j + 1, exactly));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

/// Per support point, the Jordan partition of the local nilpotent action.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanData {
    entries: Vec<(Vec<GR>, Partition)>,
}

impl JordanData {
    /// Sorts points canonically and rejects repeated or empty entries.
    pub fn new(mut entries: Vec<(Vec<GR>, Partition)>) -> Result<Self> {
        entries.sort();
        if entries.iter().any(|(_, p)| p.size() == 0) {
            return Err(Error::InvalidSupport(String::from("empty partition")));
        }
        if entries.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidSupport(String::from("repeated point")));
        }
        Ok(JordanData { entries })
    }

    pub fn entries(&self) -> &[(Vec<GR>, Partition)] {
        &self.entries
    }

    pub fn support(&self) -> SupportLengthData {
        SupportLengthData::new(self.entries.iter().map(|(p, part)| (p.clone(), part.size())).collect())
            .expect("validated on construction")
    }

    pub fn rank(&self) -> usize {
        self.entries.iter().map(|(_, p)| p.size()).sum()
    }
}

/// A `GL_r`-orbit, identified by its Jordan-form data.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrbitLabel {
    pub jordan: JordanData,
}

impl OrbitLabel {
    pub fn new(jordan: JordanData) -> Self {
        OrbitLabel { jordan }
    }

    /// Orbit of a single nilpotent type at one point.
    pub fn at_point(point: Vec<GR>, partition: Partition) -> Result<Self> {
        Ok(OrbitLabel { jordan: JordanData::new(vec![(point, partition)])? })
    }
}

/// Jordan-form data of a single matrix.
pub fn jordan_data(t: &RepPoint) -> Result<JordanData> {
    if t.arity() != 1 {
        return Err(Error::NotUnivariate { arity: t.arity() });
    }
    let m = &t.matrices()[0];
    let r = t.rank();
    let mut entries = Vec::new();
    for (gamma, mult) in split_roots(&m.char_poly()?)? {
        let shifted = m.sub(&Matrix::scalar(r, gamma.clone()))?;
        // rank((m - gamma)^j) = (r - mult) + local rank on the generalized eigenspace
        let mut local = vec![mult];
        let mut power = shifted.clone();
        loop {
            let rk = power.rank() - (r - mult);
            local.push(rk);
            if rk == 0 {
                break;
            }
            power = power.mul(&shifted)?;
        }
        entries.push((vec![gamma], Partition::from_ranks(&local)));
    }
    JordanData::new(entries)
}

/// `j1 ≼ j2`: identical support-length data and pointwise
/// `rank(J1^j) <= rank(J2^j)` for every `j >= 1`.
pub fn precede(j1: &JordanData, j2: &JordanData) -> bool {
    if j1.entries.len() != j2.entries.len() {
        return false;
    }
    j1.entries.iter().zip(&j2.entries).all(|((p1, a), (p2, b))| {
        p1 == p2 && a.size() == b.size() && (1..=a.size()).all(|j| a.block_rank(j) <= b.block_rank(j))
    })
}

/// Whether `inner` lies in the closure of `outer`.
pub fn orbit_closure_contains(outer: &OrbitLabel, inner: &OrbitLabel) -> bool {
    precede(&inner.jordan, &outer.jordan)
}

/// One Jordan block per point.
pub fn maximal_orbit(s: &SupportLengthData) -> OrbitLabel {
    orbit_with(s, Partition::single_block)
}

/// The zero nilpotent at each point.
pub fn minimal_orbit(s: &SupportLengthData) -> OrbitLabel {
    orbit_with(s, Partition::trivial)
}

fn orbit_with(s: &SupportLengthData, f: impl Fn(usize) -> Partition) -> OrbitLabel {
    let entries = s.entries().iter().map(|(p, l)| (p.clone(), f(*l))).collect();
    OrbitLabel { jordan: JordanData::new(entries).expect("support data is already canonical") }
}

/// Per point, `rank(N^j)` for `j = 1, ...` until zero.
pub fn filtration_ranks(j: &JordanData) -> Vec<(Vec<GR>, Vec<usize>)> {
    j.entries.iter().map(|(p, part)| (p.clone(), part.rank_sequence())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn at0(p: &[usize]) -> JordanData {
        JordanData::new(vec![(vec![GR::from(0)], part(p))]).unwrap()
    }

    #[test]
    fn jordan_data_examples() {
        let m = Matrix::block_diag(&[part(&[3]).jordan_matrix(&GR::from(0)), Matrix::zeros(1, 1)]);
        assert_eq!(jordan_data(&RepPoint::single(m).unwrap()).unwrap(), at0(&[3, 1]));

        let d = RepPoint::single(Matrix::diag(&[GR::from(1), GR::from(2)])).unwrap();
        let expected = JordanData::new(vec![(vec![GR::from(1)], part(&[1])), (vec![GR::from(2)], part(&[1]))]).unwrap();
        assert_eq!(jordan_data(&d).unwrap(), expected);

        assert_eq!(jordan_data(&RepPoint::single(Matrix::zeros(4, 4)).unwrap()).unwrap(), at0(&[1, 1, 1, 1]));
    }

    #[test]
    fn jordan_data_round_trips_every_partition() {
        for n in 1..=6 {
            for p in Partition::all(n) {
                let t = RepPoint::single(p.jordan_matrix(&GR::i())).unwrap();
                let jd = jordan_data(&t).unwrap();
                assert_eq!(jd.entries(), &[(vec![GR::i()], p)]);
            }
        }
    }

    #[test]
    fn precede_examples() {
        assert!(precede(&at0(&[2, 2]), &at0(&[3, 1])));
        assert!(!precede(&at0(&[3, 1]), &at0(&[2, 2])));
        assert!(precede(&at0(&[2, 1]), &at0(&[2, 1])));
        let elsewhere = JordanData::new(vec![(vec![GR::from(1)], part(&[2, 1]))]).unwrap();
        assert!(!precede(&at0(&[2, 1]), &elsewhere));
    }

    #[test]
    fn closure_examples() {
        let big = OrbitLabel::new(at0(&[4]));
        let small = OrbitLabel::new(at0(&[1, 1, 1, 1]));
        assert!(orbit_closure_contains(&big, &small));
        assert!(!orbit_closure_contains(&small, &big));
        assert!(orbit_closure_contains(&big, &big));
    }

    #[test]
    fn extremes() {
        let s = SupportLengthData::new(vec![(vec![GR::from(0)], 3)]).unwrap();
        assert_eq!(maximal_orbit(&s).jordan, at0(&[3]));
        assert_eq!(minimal_orbit(&s).jordan, at0(&[1, 1, 1]));

        let s = SupportLengthData::new(vec![(vec![GR::from(1)], 1), (vec![GR::from(0)], 2)]).unwrap();
        let max = maximal_orbit(&s).jordan;
        assert_eq!(max.entries()[0], (vec![GR::from(0)], part(&[2])));
        assert_eq!(max.entries()[1], (vec![GR::from(1)], part(&[1])));
        assert_eq!(minimal_orbit(&s).jordan.entries()[0].1, part(&[1, 1]));
    }

    #[test]
    fn filtration_examples() {
        assert_eq!(part(&[3]).rank_sequence(), vec![2, 1]);
        assert!(part(&[1, 1, 1]).rank_sequence().is_empty());
        assert_eq!(part(&[2, 1]).rank_sequence(), vec![1]);
        assert_eq!(filtration_ranks(&at0(&[3])), vec![(vec![GR::from(0)], vec![2, 1])]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::new(vec![0, 1]), Err(Error::InvalidPartition));
    }
}
