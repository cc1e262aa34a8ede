//! The degree-14 permutation model of `PSL(2,13)` and the combinatorics of
//! finite-index subgroups of the modular group: legitimate pairs, cusp
//! widths, level, genus, primitivity, and the congruence obstruction.
//!
//! Composition is left-to-right: `(a·b)(x) = b(a(x))`. The printed cycle
//! computations are only reproducible under one convention; this is the one
//! that works, and [`catalog::verify_catalog`] double-checks it empirically
//! against every printed product (retrying the opposite convention and
//! reporting, should a printed cycle ever disagree).

pub mod catalog;

use crate::cyclo::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

pub const DEGREE: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermError {
    Parse(String),
    NotAnInvolution,
    NotOrderThree,
    NotTransitive,
    NonIntegralGenus(String),
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::Parse(s) => write!(f, "cycle parse error: {s}"),
            PermError::NotAnInvolution => write!(f, "first element of the pair must square to 1"),
            PermError::NotOrderThree => write!(f, "second element of the pair must cube to 1"),
            PermError::NotTransitive => write!(f, "the pair does not generate transitively"),
            PermError::NonIntegralGenus(s) => write!(f, "genus formula returned {s}"),
        }
    }
}

impl std::error::Error for PermError {}

/// A permutation of `{1, …, 14}` (stored 0-indexed).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Permutation14 {
    images: [u8; DEGREE],
}

impl fmt::Debug for Permutation14 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation14({})", self.to_cycles())
    }
}

impl Permutation14 {
    pub fn identity() -> Permutation14 {
        let mut images = [0u8; DEGREE];
        for (i, v) in images.iter_mut().enumerate() {
            *v = i as u8;
        }
        Permutation14 { images }
    }

    /// Build from 1-indexed images.
    pub fn from_images_1(images: [u8; DEGREE]) -> Result<Permutation14, PermError> {
        let mut seen = [false; DEGREE];
        let mut out = [0u8; DEGREE];
        for (i, &v) in images.iter().enumerate() {
            if !(1..=DEGREE as u8).contains(&v) {
                return Err(PermError::Parse(format!("image {v} out of range")));
            }
            if seen[(v - 1) as usize] {
                return Err(PermError::Parse(format!("repeated image {v}")));
            }
            seen[(v - 1) as usize] = true;
            out[i] = v - 1;
        }
        Ok(Permutation14 { images: out })
    }

    /// Parse disjoint-cycle text over 1..14, e.g. `(1, 12)(2, 11)`; fixed
    /// points may be omitted.
    pub fn parse_cycles(text: &str) -> Result<Permutation14, PermError> {
        let mut p = Permutation14::identity();
        let mut moved = [false; DEGREE];
        let body: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = body.as_str();
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(PermError::Parse(format!("expected '(' in {text:?}")));
            };
            let Some(end) = stripped.find(')') else {
                return Err(PermError::Parse(format!("unclosed cycle in {text:?}")));
            };
            let cycle_str = &stripped[..end];
            rest = &stripped[end + 1..];
            if cycle_str.is_empty() {
                // "()" denotes the identity
                continue;
            }
            let mut cycle = Vec::new();
            for part in cycle_str.split(',') {
                if part.is_empty() {
                    return Err(PermError::Parse("empty cycle point".into()));
                }
                let v: usize = part
                    .parse()
                    .map_err(|_| PermError::Parse(format!("bad point {part:?}")))?;
                if !(1..=DEGREE).contains(&v) {
                    return Err(PermError::Parse(format!("point {v} out of range")));
                }
                if moved[v - 1] {
                    return Err(PermError::Parse(format!("point {v} repeated")));
                }
                moved[v - 1] = true;
                cycle.push(v - 1);
            }
            for i in 0..cycle.len() {
                p.images[cycle[i]] = cycle[(i + 1) % cycle.len()] as u8;
            }
        }
        Ok(p)
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// Apply `self` first, then `other`.
    pub fn compose(&self, other: &Permutation14) -> Permutation14 {
        let mut images = [0u8; DEGREE];
        for i in 0..DEGREE {
            images[i] = other.images[self.images[i] as usize];
        }
        Permutation14 { images }
    }

    pub fn inverse(&self) -> Permutation14 {
        let mut images = [0u8; DEGREE];
        for i in 0..DEGREE {
            images[self.images[i] as usize] = i as u8;
        }
        Permutation14 { images }
    }

    pub fn order(&self) -> u32 {
        let mut acc = *self;
        let mut k = 1;
        while acc != Permutation14::identity() {
            acc = acc.compose(self);
            k += 1;
        }
        k
    }

    /// `[a, b] = a⁻¹·b⁻¹·a·b`.
    pub fn commutator(&self, other: &Permutation14) -> Permutation14 {
        self.inverse()
            .compose(&other.inverse())
            .compose(self)
            .compose(other)
    }

    pub fn pow(&self, k: u32) -> Permutation14 {
        let mut acc = Permutation14::identity();
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Permutation14::identity()
    }

    pub fn fixed_points(&self) -> usize {
        (0..DEGREE).filter(|&i| self.apply(i) == i).count()
    }

    /// Cycle lengths in decreasing order, including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = [false; DEGREE];
        let mut lens = Vec::new();
        for start in 0..DEGREE {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            loop {
                seen[x] = true;
                len += 1;
                x = self.apply(x);
                if x == start {
                    break;
                }
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Cycle notation matching the printed style, fixed points omitted.
    pub fn to_cycles(&self) -> String {
        let mut seen = [false; DEGREE];
        let mut out = String::new();
        for start in 0..DEGREE {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            let pts: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            out.push('(');
            out.push_str(&pts.join(", "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Orbit of a point under a generator list.
fn orbit(gens: &[Permutation14], start: usize) -> Vec<usize> {
    let mut seen = [false; DEGREE];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    let mut out = vec![start];
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.apply(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out
}

pub fn is_transitive(gens: &[Permutation14]) -> bool {
    orbit(gens, 0).len() == DEGREE
}

/// Order of the generated group by orbit–stabilizer recursion with
/// Schreier generators.
pub fn group_order(gens: &[Permutation14]) -> u64 {
    fn rec(gens: Vec<Permutation14>) -> u64 {
        let Some(base) = (0..DEGREE).find(|&x| gens.iter().any(|g| g.apply(x) != x)) else {
            return 1;
        };
        // transversal[p] maps base to p
        let mut transversal: HashMap<usize, Permutation14> = HashMap::new();
        transversal.insert(base, Permutation14::identity());
        let mut queue = VecDeque::from([base]);
        let mut orbit_pts = vec![base];
        while let Some(p) = queue.pop_front() {
            let up = transversal[&p];
            for g in &gens {
                let q = g.apply(p);
                if !transversal.contains_key(&q) {
                    transversal.insert(q, up.compose(g));
                    orbit_pts.push(q);
                    queue.push_back(q);
                }
            }
        }
        let mut stab: HashSet<Permutation14> = HashSet::new();
        for &p in &orbit_pts {
            let up = transversal[&p];
            for g in &gens {
                let q = g.apply(p);
                let sg = up.compose(g).compose(&transversal[&q].inverse());
                if !sg.is_identity() {
                    stab.insert(sg);
                }
            }
        }
        orbit_pts.len() as u64 * rec(stab.into_iter().collect())
    }
    rec(gens.to_vec())
}

/// Full element enumeration (usable as a cross-check at this degree).
pub fn enumerate_order(gens: &[Permutation14], bound: usize) -> Option<usize> {
    let mut seen = HashSet::new();
    seen.insert(Permutation14::identity());
    let mut queue = VecDeque::from([Permutation14::identity()]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q = p.compose(g);
            if seen.insert(q) {
                if seen.len() > bound {
                    return None;
                }
                queue.push_back(q);
            }
        }
    }
    Some(seen.len())
}

/// True iff the (transitive) group has no nontrivial block system. Blocks
/// are sought by seeding every pair `{1, k}` and closing the induced
/// partition under the generators.
pub fn primitivity(gens: &[Permutation14]) -> Result<bool, PermError> {
    if !is_transitive(gens) {
        return Err(PermError::NotTransitive);
    }
    for k in 1..DEGREE {
        // union-find refinement of the partition generated by {0, k}
        let mut parent: Vec<usize> = (0..DEGREE).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let r = find(parent, parent[x]);
                parent[x] = r;
            }
            parent[x]
        }
        let mut queue = VecDeque::from([(0usize, k)]);
        parent[k] = 0;
        while let Some((a, b)) = queue.pop_front() {
            for g in gens {
                let (x, y) = (g.apply(a), g.apply(b));
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[ry] = rx;
                    queue.push_back((x, y));
                }
            }
        }
        let block_size = (0..DEGREE).filter(|&x| find(&mut parent, x) == find(&mut parent, 0)).count();
        if block_size < DEGREE {
            // a proper block strictly containing 0 and k
            debug_assert!(block_size >= 2);
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cusp and genus data of the finite-index subgroup encoded by a
/// legitimate pair `(s, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupStats {
    pub mu: usize,
    pub e2: usize,
    pub e3: usize,
    /// Cycle lengths of `t = s·p`, decreasing.
    pub cusp_widths: Vec<usize>,
    pub h: usize,
    pub level: u64,
    pub genus: u64,
}

/// Verify legitimacy (`s² = p³ = 1`, transitive) and compute the full
/// statistics of the associated index-14 subgroup.
pub fn asd_stats(s: &Permutation14, p: &Permutation14) -> Result<SubgroupStats, PermError> {
    if !s.pow(2).is_identity() {
        return Err(PermError::NotAnInvolution);
    }
    if !p.pow(3).is_identity() {
        return Err(PermError::NotOrderThree);
    }
    if !is_transitive(&[*s, *p]) {
        return Err(PermError::NotTransitive);
    }
    let t = s.compose(p);
    let widths = t.cycle_type();
    let h = widths.len();
    let level = widths.iter().fold(1u64, |acc, &w| num_integer::lcm(acc, w as u64));
    let e2 = s.fixed_points();
    let e3 = p.fixed_points();
    let genus = genus_from_signature(DEGREE, h, e2, e3)?;
    Ok(SubgroupStats { mu: DEGREE, e2, e3, cusp_widths: widths, h, level, genus })
}

/// `g = 1 + μ/12 − h/2 − e2/4 − e3/3`, demanded to be a non-negative
/// integer.
pub fn genus_from_signature(mu: usize, h: usize, e2: usize, e3: usize) -> Result<u64, PermError> {
    let r = |n: i64, d: i64| Rat::new(BigInt::from(n), BigInt::from(d));
    let g = r(1, 1) + r(mu as i64, 12) - r(h as i64, 2) - r(e2 as i64, 4) - r(e3 as i64, 3);
    rat_to_genus(g)
}

fn rat_to_genus(g: Rat) -> Result<u64, PermError> {
    if !g.denom().is_one() || g.numer().is_negative() {
        return Err(PermError::NonIntegralGenus(g.to_string()));
    }
    Ok(g.numer().to_string().parse().unwrap())
}

/// Riemann–Hurwitz genus of the quotient by a `(2,3,n)`-generated group of
/// the given order: `2g − 2 = order·(1 − 1/2 − 1/3 − 1/n)`.
pub fn rh_genus(group_order: u64, n: u64) -> Result<u64, PermError> {
    let r = |num: i64, den: i64| Rat::new(BigInt::from(num), BigInt::from(den));
    let chi = r(group_order as i64, 1)
        * (r(1, 1) - r(1, 2) - r(1, 3) - r(1, n as i64));
    let g = (chi + r(2, 1)) / r(2, 1);
    rat_to_genus(g)
}

/// The index-m variant `6χ = m − 6h − 3e₂ − 4e₃`; returns `(χ, g)`.
pub fn wohlfahrt_characteristic(
    m: u64,
    h: u64,
    e2: u64,
    e3: u64,
) -> Result<(i64, u64), PermError> {
    let six_chi = m as i64 - 6 * h as i64 - 3 * e2 as i64 - 4 * e3 as i64;
    if six_chi % 6 != 0 {
        return Err(PermError::NonIntegralGenus(format!("6χ = {six_chi}")));
    }
    let chi = six_chi / 6;
    if (chi + 2) % 2 != 0 || chi + 2 < 0 {
        return Err(PermError::NonIntegralGenus(format!("χ = {chi}")));
    }
    Ok((chi, ((chi + 2) / 2) as u64))
}

/// Index of the principal congruence subgroup of the given level in the
/// projective modular group.
pub fn gamma_index(level: u64) -> u64 {
    match level {
        1 => 1,
        2 => 6,
        l => {
            // l³/2 · ∏_{p | l} (1 − 1/p²), exactly
            let mut num = BigInt::from(l).pow(3);
            let mut den = BigInt::from(2);
            let mut m = l;
            let mut p = 2;
            while p * p <= m {
                if m % p == 0 {
                    num *= BigInt::from(p * p - 1);
                    den *= BigInt::from(p * p);
                    while m % p == 0 {
                        m /= p;
                    }
                }
                p += 1;
            }
            if m > 1 {
                num *= BigInt::from(m * m - 1);
                den *= BigInt::from(m * m);
            }
            let q = &num / &den;
            assert!((&q * &den) == num, "index formula must be integral");
            q.to_string().parse().unwrap()
        }
    }
}

/// Verdict of the level/index divisibility obstruction: a congruence
/// subgroup of level `l` contains the principal congruence subgroup of
/// level `l`, so its index must divide that subgroup's index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CongruenceVerdict {
    /// Divisibility fails: certified non-congruence.
    ObstructionTriggered { gamma_index: u64 },
    /// Divisibility holds: consistent with congruence (not a proof).
    Consistent { gamma_index: u64 },
}

pub fn congruence_test(level: u64, index: u64) -> CongruenceVerdict {
    let gi = gamma_index(level);
    if gi % index == 0 {
        CongruenceVerdict::Consistent { gamma_index: gi }
    } else {
        CongruenceVerdict::ObstructionTriggered { gamma_index: gi }
    }
}

#[cfg(test)]
mod tests;
