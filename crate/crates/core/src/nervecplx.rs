//! Finite abstract simplicial complexes on at most 64 vertices, stored by
//! their maximal faces as vertex bitmasks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// Maximal faces, sorted, none contained in another.
    facets: Vec<u64>,
}

fn is_subset(a: u64, b: u64) -> bool {
    a & !b == 0
}

fn maximal(mut faces: Vec<u64>) -> Vec<u64> {
    faces.retain(|&f| f != 0);
    faces.sort_unstable();
    faces.dedup();
    let keep: Vec<u64> = faces
        .iter()
        .copied()
        .filter(|&f| !faces.iter().any(|&o| o != f && is_subset(f, o)))
        .collect();
    keep
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertex_count: 0,
            facets: Vec::new(),
        }
    }

    /// The complex generated by `faces` (each a vertex bitmask).
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = u64>) -> Self {
        assert!(vertex_count <= 64, "at most 64 vertices are supported");
        let faces: Vec<u64> = faces.into_iter().collect();
        debug_assert!(faces
            .iter()
            .all(|&f| vertex_count == 64 || f >> vertex_count == 0));
        SimplicialComplex {
            vertex_count,
            facets: maximal(faces),
        }
    }

    /// The full simplex Δ_n on n+1 vertices.
    pub fn simplex(n: usize) -> Self {
        let k = n + 1;
        Self::from_faces(k, [mask(k)])
    }

    /// The boundary ∂Δ_n, an (n-1)-sphere.
    pub fn simplex_boundary(n: usize) -> Self {
        let k = n + 1;
        let all = mask(k);
        Self::from_faces(k, (0..k).map(|v| all & !(1 << v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[u64] {
        &self.facets
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Dimension; -1 for the empty complex.
    pub fn dim(&self) -> i64 {
        self.facets
            .iter()
            .map(|f| f.count_ones() as i64 - 1)
            .max()
            .unwrap_or(-1)
    }

    pub fn contains_simplex(&self, s: u64) -> bool {
        s == 0 || self.facets.iter().any(|&f| is_subset(s, f))
    }

    /// Every simplex of `self` is a simplex of `other`.
    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|&f| other.contains_simplex(f))
    }

    /// All nonempty simplices, grouped by dimension.
    pub fn simplices_by_dim(&self) -> Vec<Vec<u64>> {
        let mut all = BTreeSet::new();
        for &f in &self.facets {
            let mut sub = f;
            loop {
                if sub != 0 {
                    all.insert(sub);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        let mut out = vec![Vec::new(); (self.dim() + 1).max(0) as usize];
        for s in all {
            out[s.count_ones() as usize - 1].push(s);
        }
        out
    }

    /// Contains every k-subset of the vertices met by some simplex.
    pub fn has_full_skeleton(&self, k: usize) -> bool {
        let verts = self.facets.iter().fold(0u64, |a, &f| a | f);
        subsets_of_size(verts, k + 1).all(|s| self.contains_simplex(s))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|&m| {
                let vs: Vec<String> = (0..64)
                    .filter(|v| m >> v & 1 == 1)
                    .map(|v| v.to_string())
                    .collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

fn subsets_of_size(set: u64, k: usize) -> impl Iterator<Item = u64> {
    let verts: Vec<u32> = (0..64).filter(|v| set >> v & 1 == 1).collect();
    let n = verts.len();
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.iter().fold(0u64, |m, &i| m | 1 << verts[i]);
        // advance to the next k-combination
        let mut t = k;
        loop {
            if t == 0 {
                done = true;
                break;
            }
            t -= 1;
            if idx[t] < n - k + t {
                idx[t] += 1;
                for u in t + 1..k {
                    idx[u] = idx[u - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Nerve of a family of sets: vertex λ for each member, and a simplex for
/// every subfamily with a common point.
pub fn nerve<T: Ord>(family: &[BTreeSet<T>]) -> SimplicialComplex {
    // every simplex lies in the star of one of its common points
    let mut stars: BTreeMap<&T, u64> = BTreeMap::new();
    for (k, member) in family.iter().enumerate() {
        for x in member {
            *stars.entry(x).or_default() |= 1 << k;
        }
    }
    SimplicialComplex::from_faces(family.len(), stars.into_values())
}

/// Join on the disjoint union of the vertex sets; the vertices of `k2` are
/// shifted past those of `k1`.
pub fn join(k1: &SimplicialComplex, k2: &SimplicialComplex) -> SimplicialComplex {
    let n = k1.vertex_count + k2.vertex_count;
    assert!(n <= 64, "join exceeds 64 vertices");
    let shift = k1.vertex_count;
    if k1.is_empty() || k2.is_empty() {
        let faces: Vec<u64> = k1
            .facets
            .iter()
            .copied()
            .chain(k2.facets.iter().map(|&f| f << shift))
            .collect();
        return SimplicialComplex::from_faces(n, faces);
    }
    let mut faces = Vec::with_capacity(k1.facets.len() * k2.facets.len());
    for &a in &k1.facets {
        for &b in &k2.facets {
            faces.push(a | b << shift);
        }
    }
    SimplicialComplex::from_faces(n, faces)
}

/// Rank over the 2-element field of vectors given as bitsets of `words` words.
fn rank_gf2(mut rows: Vec<Vec<u64>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, Vec::len) * 64;
    for col in 0..width {
        let (w, b) = (col / 64, col % 64);
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Reduced Betti numbers b̃_0..b̃_d over the 2-element field.
pub fn betti_z2(k: &SimplicialComplex) -> Vec<usize> {
    let by_dim = k.simplices_by_dim();
    let d = by_dim.len();
    // rank of ∂_q : C_q -> C_{q-1}, with ∂_0 the augmentation
    let mut ranks = vec![0usize; d + 1];
    for q in 0..d {
        if q == 0 {
            ranks[0] = usize::from(!by_dim[0].is_empty());
            continue;
        }
        let index: BTreeMap<u64, usize> = by_dim[q - 1]
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i))
            .collect();
        let words = by_dim[q - 1].len().div_ceil(64);
        let rows: Vec<Vec<u64>> = by_dim[q]
            .iter()
            .map(|&s| {
                let mut row = vec![0u64; words];
                let mut rest = s;
                while rest != 0 {
                    let v = rest.trailing_zeros();
                    rest &= rest - 1;
                    let i = index[&(s & !(1 << v))];
                    row[i / 64] |= 1 << (i % 64);
                }
                row
            })
            .collect();
        ranks[q] = rank_gf2(rows);
    }
    (0..d)
        .map(|q| by_dim[q].len() - ranks[q] - ranks[q + 1])
        .collect()
}

/// Reduced homology over the 2-element field is that of the d-sphere.
pub fn is_homology_sphere(k: &SimplicialComplex, d: usize) -> bool {
    let b = betti_z2(k);
    b.len() == d + 1 && b.iter().enumerate().all(|(q, &x)| x == usize::from(q == d))
}

/// A member of one of the families in a commuting model: (family, index).
pub type Member = (usize, usize);

/// First simplex on which the nerve of the union and the join of the
/// per-family nerves disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveViolation {
    pub simplex: Vec<Member>,
    pub in_union_nerve: bool,
    pub in_join: bool,
}

impl fmt::Display for NerveViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .simplex
            .iter()
            .map(|(a, b)| format!("F{a}[{b}]"))
            .collect();
        write!(
            f,
            "simplex {{{}}}: in nerve of union = {}, in join = {}",
            parts.join(","),
            self.in_union_nerve,
            self.in_join
        )
    }
}

/// Compares the nerve of F_1 ∪ ... ∪ F_n with the join of the nerves N(F_i)
/// when nonemptiness of common fixed sets is decided by `oracle`.
/// `sizes[i]` is the number of members of F_i.
pub fn commuting_nerve_model<O>(sizes: &[usize], oracle: O) -> Result<(), NerveViolation>
where
    O: Fn(&[Member]) -> bool,
{
    let members: Vec<Member> = sizes
        .iter()
        .enumerate()
        .flat_map(|(f, &n)| (0..n).map(move |k| (f, k)))
        .collect();
    assert!(members.len() < 32, "commuting model is limited to 31 members");
    let pick = |bits: u64| -> Vec<Member> {
        (0..members.len())
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| members[i])
            .collect()
    };
    for bits in 1u64..(1 << members.len()) {
        let simplex = pick(bits);
        let in_union = oracle(&simplex);
        let in_join = (0..sizes.len()).all(|f| {
            let part: Vec<Member> = simplex.iter().copied().filter(|m| m.0 == f).collect();
            part.is_empty() || oracle(&part)
        });
        if in_union != in_join {
            return Err(NerveViolation {
                simplex,
                in_union_nerve: in_union,
                in_join,
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[u32]]) -> Vec<BTreeSet<u32>> {
        v.iter().map(|s| s.iter().copied().collect()).collect()
    }

    #[test]
    fn nerve_examples() {
        let k = nerve(&sets(&[&[1, 2], &[2, 3], &[1, 3]]));
        assert_eq!(k, SimplicialComplex::simplex_boundary(2));
        let k = nerve(&sets(&[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4]]));
        assert_eq!(k, SimplicialComplex::simplex(2));
        assert!(nerve::<u32>(&[]).is_empty());
    }

    #[test]
    fn join_examples() {
        let j = join(&SimplicialComplex::simplex(1), &SimplicialComplex::simplex(2));
        assert_eq!(j, SimplicialComplex::simplex(4));
        let b = SimplicialComplex::simplex_boundary(1);
        let c = join(&b, &b);
        assert_eq!(c.facets().len(), 4);
        assert_eq!(c.dim(), 1);
        assert!(is_homology_sphere(&c, 1));
        let k = SimplicialComplex::simplex_boundary(3);
        assert_eq!(join(&k, &SimplicialComplex::empty()), k);
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_z2(&SimplicialComplex::simplex_boundary(3)), [0, 0, 1]);
        let b2 = SimplicialComplex::simplex_boundary(2);
        assert!(is_homology_sphere(&join(&b2, &b2), 3));
        assert!(betti_z2(&SimplicialComplex::simplex(5))
            .iter()
            .all(|&x| x == 0));
        // two disjoint edges: one extra component
        let k = SimplicialComplex::from_faces(4, [0b0011, 0b1100]);
        assert_eq!(betti_z2(&k), [1, 0]);
    }

    #[test]
    fn commuting_model_examples() {
        assert!(commuting_nerve_model(&[3, 2], |_| true).is_ok());
        let err = commuting_nerve_model(&[2, 2], |s| {
            !(s.contains(&(0, 0)) && s.contains(&(1, 1)))
        })
        .unwrap_err();
        assert!(err.in_join && !err.in_union_nerve);
        assert!(commuting_nerve_model(&[3], |s| s.len() < 3).is_ok());
    }

    #[test]
    fn skeleton_check() {
        let b = SimplicialComplex::simplex_boundary(2);
        assert!(b.has_full_skeleton(1));
        assert!(!b.has_full_skeleton(2));
    }
}
