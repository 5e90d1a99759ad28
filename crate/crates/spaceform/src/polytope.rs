//! Orbit polytopes `conv(G·1)` in R⁴, exact facet certification, f-vectors,
//! and fundamental-domain certificates.
//!
//! The vertex set of each polytope is the group itself, embedded as unit
//! quaternions. Facets are found two independent ways:
//!
//! * **orbit construction** — seed normals are swept through the
//!   192-element group of signed coordinate permutations with even
//!   permutation part (`{±1}⁴⋊𝔄₄`), and every image is certified directly:
//!   `⟨v,x⟩ ≤ 1` on all vertices with equality on an affinely 3-dimensional
//!   set;
//! * **brute force** — every 4-subset of vertices is solved exactly for a
//!   supporting hyperplane `⟨v,x⟩ = 1` and kept only if valid. No convex-hull
//!   library, no floating point, no tolerance.
//!
//! A fundamental-domain certificate checks that chosen facets share the
//! vertex `1`, that the union `V` of their vertices meets its own inverse set
//! only in `1`, that the facet count equals (number of cells)·|G|, that the
//! cells form a ridge-connected union, and — independently — that no two
//! cells lie in the same orbit, by exhaustive translation. Groups act on
//! facets by left multiplication, which never leaves the vertex set.

use crate::group::{Group, GroupError, GroupTag};
use crate::quaternion::Quaternion;
use crate::scalar::{QuadScalar, ScalarError};
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

/// A point (or normal vector) of R⁴ with exact coordinates.
pub type Point = [QuadScalar; 4];

/// Errors from polytope construction and certification.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolytopeError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Group(#[from] GroupError),
    /// Polytopes are built for the three quaternion groups only.
    #[error("no orbit polytope is defined for {0}")]
    UnsupportedGroup(GroupTag),
    /// A seed normal is not a valid supporting hyperplane (transcription bug).
    #[error("seed normal {seed} is invalid: {reason}")]
    InvalidSeedNormal { seed: usize, reason: String },
    /// An orbit image of a valid seed failed certification (internal bug).
    #[error("orbit-image normal failed certification: {reason}")]
    InvalidNormal { reason: String },
    /// A signed even permutation did not preserve the vertex set.
    #[error("a signed even coordinate permutation moved a vertex off the vertex set")]
    SymmetryBreaksVertices,
    /// Two construction paths produced the same facet twice.
    #[error("duplicate facet encountered during construction")]
    DuplicateFacet,
    /// A vertex of the group lies on no facet.
    #[error("vertex {0} lies on no facet")]
    VertexNotOnFacet(u16),
    /// A facet has the wrong vertex count for its polytope family.
    #[error("facet has {got} vertices where {expected} were required")]
    FacetVertexCount { expected: usize, got: usize },
    /// A 2-face turned out not to be a triangle, voiding the edge rule.
    #[error("2-face {vertices:?} is not a triangle")]
    NonTriangleTwoFace { vertices: Vec<u16> },
    /// A 2-face is not shared by exactly two facets.
    #[error("2-face {vertices:?} lies in {count} facets instead of 2")]
    TwoFaceFacetCount { vertices: Vec<u16>, count: usize },
    /// The alternating sum of face counts is wrong for a 3-sphere boundary.
    #[error("Euler check failed: {v} - {e} + {f} - {c} != 0")]
    EulerFailure { v: usize, e: usize, f: usize, c: usize },
    /// A proposed fundamental-domain cell is not a facet.
    #[error("cell {cell:?} is not a facet of the polytope")]
    NotAFacet { cell: Vec<u16> },
    /// The fundamental-domain criteria failed; the certificate shows which.
    #[error("fundamental-domain criteria failed: {0:?}")]
    CriterionFailed(Box<FundamentalDomainCertificate>),
    /// Left translation by a group element moved a facet off the facet set.
    #[error("facet {facet} translated by element {element} is not a facet")]
    NotStable { facet: usize, element: u16 },
}

/// One facet: the supporting normal with `⟨normal, x⟩ = 1` on the facet, and
/// the sorted indices of the vertices lying on it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Facet {
    pub normal: Point,
    pub vertices: Vec<u16>,
}

/// Face counts of a 4-polytope boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FVector {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub cells: usize,
}

/// Outcome of the fundamental-domain checks. The certificate is valid iff
/// every boolean is true; [`Polytope::verify_fundamental_domain`] only
/// returns it on success and otherwise embeds it in an error.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FundamentalDomainCertificate {
    pub group: GroupTag,
    /// Index of each domain cell in the polytope's facet list.
    pub facet_indices: Vec<usize>,
    /// Sorted union of the cells' vertex indices.
    pub vertex_union: Vec<u16>,
    /// Names of the union's elements, parallel to `vertex_union`.
    pub vertex_union_names: Vec<String>,
    /// Every cell contains the base vertex `1`.
    pub base_vertex_shared: bool,
    /// `V ∩ V⁻¹ = {1}` for the vertex union `V`.
    pub v_cap_v_inverse_trivial: bool,
    /// (number of cells)·|G| equals the facet count.
    pub facet_count_matches: bool,
    /// The cells form a connected union through 2-dimensional intersections.
    pub union_connected: bool,
    /// No translate `g·Δᵢ` equals another cell (or itself for `g ≠ 1`).
    pub orbit_distinct: bool,
}

impl FundamentalDomainCertificate {
    pub fn is_valid(&self) -> bool {
        self.base_vertex_shared
            && self.v_cap_v_inverse_trivial
            && self.facet_count_matches
            && self.union_connected
            && self.orbit_distinct
    }
}

// ---------------------------------------------------------------------------
// Exact linear algebra on R⁴ points
// ---------------------------------------------------------------------------

fn try_dot(a: &Point, b: &Point) -> Result<QuadScalar, ScalarError> {
    let mut acc = a[0].try_mul(&b[0])?;
    for t in 1..4 {
        acc = acc.try_add(&a[t].try_mul(&b[t])?)?;
    }
    Ok(acc)
}

/// Solves `rows · n = (1,1,1,1)ᵀ` exactly. Returns `None` when the rows are
/// linearly dependent (the 4-subset is affinely degenerate or its affine hull
/// passes through the origin) — exactly the subsets a hull search skips.
fn solve_hyperplane(rows: &[Point; 4]) -> Result<Option<Point>, ScalarError> {
    // Gauss–Jordan on the 4×5 augmented system.
    let mut m: Vec<Vec<QuadScalar>> = rows
        .iter()
        .map(|r| {
            let mut row: Vec<QuadScalar> = r.to_vec();
            row.push(QuadScalar::one());
            row
        })
        .collect();
    for col in 0..4 {
        let Some(pivot) = (col..4).find(|&r| !m[r][col].is_zero()) else {
            return Ok(None);
        };
        m.swap(col, pivot);
        let inv = m[col][col].inv()?;
        for cell in m[col].iter_mut().skip(col) {
            *cell = cell.try_mul(&inv)?;
        }
        let pivot_row = m[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (cell, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    let sub = factor.try_mul(p)?;
                    *cell = cell.try_sub(&sub)?;
                }
            }
        }
    }
    let mut n: Point = std::array::from_fn(|_| QuadScalar::zero());
    for (t, row) in m.iter().enumerate() {
        n[t] = row[4].clone();
    }
    Ok(Some(n))
}

fn linear_rank(mut rows: Vec<Point>) -> Result<usize, ScalarError> {
    let mut rank = 0;
    for col in 0..4 {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv()?;
        for cell in rows[rank].iter_mut().skip(col) {
            *cell = cell.try_mul(&inv)?;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for t in col..4 {
                    let sub = factor.try_mul(&pivot_row[t])?;
                    row[t] = row[t].try_sub(&sub)?;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Ok(rank)
}

/// Dimension of the affine hull of a point set.
fn affine_rank(points: &[Point]) -> Result<usize, ScalarError> {
    let Some((first, rest)) = points.split_first() else {
        return Ok(0);
    };
    let mut diffs = Vec::with_capacity(rest.len());
    for p in rest {
        let mut d: Point = std::array::from_fn(|_| QuadScalar::zero());
        for t in 0..4 {
            d[t] = p[t].try_sub(&first[t])?;
        }
        diffs.push(d);
    }
    linear_rank(diffs)
}

// ---------------------------------------------------------------------------
// Signed even coordinate permutations
// ---------------------------------------------------------------------------

/// A signed coordinate permutation: `(S·x)[t] = ±x[perm[t]]`.
#[derive(Debug, Clone, Copy)]
pub struct SignedPerm {
    perm: [usize; 4],
    negate: [bool; 4],
}

impl SignedPerm {
    pub fn apply(&self, p: &Point) -> Point {
        std::array::from_fn(|t| {
            let v = p[self.perm[t]].clone();
            if self.negate[t] {
                -v
            } else {
                v
            }
        })
    }
}

fn permutation_is_even(perm: &[usize; 4]) -> bool {
    let mut inversions = 0;
    for a in 0..4 {
        for b in a + 1..4 {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// The 192 signed coordinate permutations with even permutation part,
/// `{±1}⁴⋊𝔄₄` — the symmetry group used to sweep seed normals.
pub fn signed_even_permutations() -> Vec<SignedPerm> {
    let mut perms = Vec::with_capacity(192);
    let indices = [0usize, 1, 2, 3];
    // All 24 permutations by simple recursion, filtered to the even 12.
    let mut stack = vec![(Vec::new(), indices.to_vec())];
    while let Some((chosen, remaining)) = stack.pop() {
        if remaining.is_empty() {
            let perm: [usize; 4] = chosen.clone().try_into().unwrap();
            if !permutation_is_even(&perm) {
                continue;
            }
            for mask in 0..16u8 {
                let negate = std::array::from_fn(|t| mask >> t & 1 == 1);
                perms.push(SignedPerm { perm, negate });
            }
            continue;
        }
        for (pos, &idx) in remaining.iter().enumerate() {
            let mut chosen = chosen.clone();
            chosen.push(idx);
            let mut remaining = remaining.clone();
            remaining.remove(pos);
            stack.push((chosen, remaining));
        }
    }
    perms
}

// ---------------------------------------------------------------------------
// Seed normals
// ---------------------------------------------------------------------------

/// Seed facet normals for the orbit construction. The octahedral polytope
/// needs two seeds, the icosahedral one seven; the tetrahedral 24-cell has no
/// published normals and is built from the brute-force search instead.
pub fn seed_normals(tag: GroupTag) -> Option<Vec<Point>> {
    match tag {
        GroupTag::O => {
            let s2 = QuadScalar::sqrt(2).expect("2 is a supported radicand");
            // c + m·√2
            let lin = |c: i64, m: i64| {
                QuadScalar::from_int(c).try_add(&QuadScalar::from_int(m).try_mul(&s2).unwrap())
                    .unwrap()
            };
            Some(vec![
                [lin(3, -2), lin(-1, 1), lin(-1, 1), lin(1, 0)],
                [lin(2, -1), lin(2, -1), lin(-2, 2), lin(0, 0)],
            ])
        }
        GroupTag::I => {
            let phi = QuadScalar::phi();
            // c + m·φ
            let lin = |c: i64, m: i64| {
                QuadScalar::from_int(c).try_add(&QuadScalar::from_int(m).try_mul(&phi).unwrap())
                    .unwrap()
            };
            Some(vec![
                [lin(4, -2), lin(4, -2), lin(0, 0), lin(0, 0)],
                [lin(2, -1), lin(5, -3), lin(1, 0), lin(0, 0)],
                [lin(-3, 2), lin(-4, 3), lin(-1, 1), lin(0, 0)],
                [lin(-3, 2), lin(-3, 2), lin(-3, 2), lin(1, 0)],
                [lin(-1, 1), lin(-1, 1), lin(-1, 1), lin(5, -3)],
                [lin(2, -1), lin(2, -1), lin(2, -1), lin(-4, 3)],
                [lin(-3, 2), lin(2, -1), lin(-1, 1), lin(4, -2)],
            ])
        }
        _ => None,
    }
}

// ---------------------------------------------------------------------------
// Polytope
// ---------------------------------------------------------------------------

/// The boundary complex of `conv(G·1)`: certified facets plus the orbit
/// decomposition of their normals under the signed even permutations.
#[derive(Debug, Clone)]
pub struct Polytope {
    group: Arc<Group>,
    facets: Vec<Facet>,
    orbit_sizes: Vec<usize>,
}

fn vertex_coords(group: &Group) -> Vec<Point> {
    group.quaternions().iter().map(Quaternion::coords).collect()
}

/// Certifies one normal against every vertex: valid iff `⟨n,x⟩ ≤ 1`
/// everywhere, with the equality set affinely 3-dimensional. Returns the
/// sorted equality set, or an explanation of the failure.
fn certify_normal(coords: &[Point], normal: &Point) -> Result<Result<Vec<u16>, String>, ScalarError> {
    let one = QuadScalar::one();
    let mut equality = Vec::new();
    for (idx, v) in coords.iter().enumerate() {
        let d = try_dot(normal, v)?;
        match d.cmp(&one) {
            std::cmp::Ordering::Greater => {
                return Ok(Err(format!("vertex {idx} lies strictly outside the half-space")));
            }
            std::cmp::Ordering::Equal => equality.push(idx as u16),
            std::cmp::Ordering::Less => {}
        }
    }
    let points: Vec<Point> = equality.iter().map(|&i| coords[i as usize].clone()).collect();
    let rank = affine_rank(&points)?;
    if rank != 3 {
        return Ok(Err(format!(
            "equality set has {} vertices of affine rank {rank}, need rank 3",
            equality.len()
        )));
    }
    Ok(Ok(equality))
}

/// Enumerates facets by exhaustive 4-subset search — the independent oracle.
///
/// Every 4-subset of vertices is solved exactly for `⟨v,x⟩ = 1`; solvable
/// systems whose normal is valid on all vertices contribute their full
/// equality set. Quartic in the group order: fine for orders 24 and 48,
/// noticeably slow (minutes) for order 120, which is why the icosahedral
/// oracle sits behind an opt-in flag.
pub fn brute_force_facets(group: &Arc<Group>) -> Result<Vec<Facet>, PolytopeError> {
    let coords = vertex_coords(group);
    let n = coords.len();
    let mut facets: Vec<Facet> = Vec::new();
    let mut masks: Vec<u128> = Vec::new();
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                'candidate: for d in c + 1..n {
                    let mask = 1u128 << a | 1u128 << b | 1u128 << c | 1u128 << d;
                    // Inside a known facet: nothing new can come of it.
                    if masks.iter().any(|&f| f & mask == mask) {
                        continue;
                    }
                    let rows =
                        [coords[a].clone(), coords[b].clone(), coords[c].clone(), coords[d].clone()];
                    let Some(normal) = solve_hyperplane(&rows)? else {
                        continue;
                    };
                    let one = QuadScalar::one();
                    let mut equality = Vec::new();
                    for (idx, v) in coords.iter().enumerate() {
                        let dot = try_dot(&normal, v)?;
                        match dot.cmp(&one) {
                            std::cmp::Ordering::Greater => continue 'candidate,
                            std::cmp::Ordering::Equal => equality.push(idx as u16),
                            std::cmp::Ordering::Less => {}
                        }
                    }
                    let points: Vec<Point> =
                        equality.iter().map(|&i| coords[i as usize].clone()).collect();
                    if affine_rank(&points)? != 3 {
                        continue;
                    }
                    if seen.insert(equality.clone()) {
                        let mut m = 0u128;
                        for &v in &equality {
                            m |= 1u128 << v;
                        }
                        masks.push(m);
                        facets.push(Facet { normal, vertices: equality });
                    }
                }
            }
        }
    }
    facets.sort_by(|x, y| x.vertices.cmp(&y.vertices));
    Ok(facets)
}

fn orbit_facets(group: &Arc<Group>, seeds: &[Point]) -> Result<Vec<Facet>, PolytopeError> {
    let coords = vertex_coords(group);
    let maps = signed_even_permutations();
    let mut facets: Vec<Facet> = Vec::new();
    let mut seen_normals: HashSet<Point> = HashSet::new();
    let mut seen_vertex_sets: HashSet<Vec<u16>> = HashSet::new();
    for (seed_idx, seed) in seeds.iter().enumerate() {
        if let Err(reason) = certify_normal(&coords, seed)? {
            return Err(PolytopeError::InvalidSeedNormal { seed: seed_idx, reason });
        }
        // The maps form a group, so one sweep over the seed is the full orbit.
        for map in &maps {
            let image = map.apply(seed);
            if !seen_normals.insert(image.clone()) {
                continue;
            }
            match certify_normal(&coords, &image)? {
                Ok(vertices) => {
                    if !seen_vertex_sets.insert(vertices.clone()) {
                        return Err(PolytopeError::DuplicateFacet);
                    }
                    facets.push(Facet { normal: image, vertices });
                }
                Err(reason) => return Err(PolytopeError::InvalidNormal { reason }),
            }
        }
    }
    facets.sort_by(|x, y| x.vertices.cmp(&y.vertices));
    Ok(facets)
}

/// Builds the orbit polytope of a quaternion group: the disphenoidal
/// 288-cell for the order-48 group, the 600-cell for the order-120 group,
/// and the 24-cell (via the exhaustive search) for the order-24 group.
pub fn build_orbit_polytope(group: &Arc<Group>) -> Result<Polytope, PolytopeError> {
    let facets = match group.tag() {
        GroupTag::T => brute_force_facets(group)?,
        GroupTag::O | GroupTag::I => {
            let seeds = seed_normals(group.tag()).expect("seeds exist for these groups");
            orbit_facets(group, &seeds)?
        }
        other => return Err(PolytopeError::UnsupportedGroup(other)),
    };
    Polytope::from_facets(Arc::clone(group), facets)
}

impl Polytope {
    /// Wraps certified facets, checking global invariants: the symmetry group
    /// preserves the vertex set, facets are pairwise distinct, every vertex
    /// lies on a facet, and (for the order-48 and order-120 polytopes) every
    /// facet is a tetrahedron. Also partitions the facet normals into orbits
    /// under the signed even permutations.
    fn from_facets(group: Arc<Group>, facets: Vec<Facet>) -> Result<Self, PolytopeError> {
        let vertex_lookup: HashMap<&Quaternion, u16> = group
            .quaternions()
            .iter()
            .enumerate()
            .map(|(i, q)| (q, i as u16))
            .collect();
        let maps = signed_even_permutations();
        for map in &maps {
            for q in group.quaternions() {
                let image = Quaternion::from_coords(map.apply(&q.coords()));
                if !vertex_lookup.contains_key(&image) {
                    return Err(PolytopeError::SymmetryBreaksVertices);
                }
            }
        }

        let mut normals: HashSet<Point> = HashSet::new();
        let mut vertex_sets: HashSet<&[u16]> = HashSet::new();
        let mut covered = vec![false; group.order()];
        let expected_size = match group.tag() {
            GroupTag::O | GroupTag::I => Some(4),
            _ => None,
        };
        for f in &facets {
            if !normals.insert(f.normal.clone()) || !vertex_sets.insert(&f.vertices) {
                return Err(PolytopeError::DuplicateFacet);
            }
            if let Some(expected) = expected_size {
                if f.vertices.len() != expected {
                    return Err(PolytopeError::FacetVertexCount {
                        expected,
                        got: f.vertices.len(),
                    });
                }
            }
            for &v in &f.vertices {
                covered[v as usize] = true;
            }
        }
        if let Some(missing) = covered.iter().position(|&c| !c) {
            return Err(PolytopeError::VertexNotOnFacet(missing as u16));
        }

        // Orbit partition of the normals under the symmetry maps.
        let index_of: HashMap<&Point, usize> =
            facets.iter().enumerate().map(|(i, f)| (&f.normal, i)).collect();
        let mut orbit = vec![usize::MAX; facets.len()];
        let mut orbit_sizes = Vec::new();
        for start in 0..facets.len() {
            if orbit[start] != usize::MAX {
                continue;
            }
            let label = orbit_sizes.len();
            let mut size = 0;
            let mut stack = vec![start];
            orbit[start] = label;
            while let Some(f) = stack.pop() {
                size += 1;
                for map in &maps {
                    let image = map.apply(&facets[f].normal);
                    let &target = index_of
                        .get(&image)
                        .ok_or(PolytopeError::SymmetryBreaksVertices)?;
                    if orbit[target] == usize::MAX {
                        orbit[target] = label;
                        stack.push(target);
                    }
                }
            }
            orbit_sizes.push(size);
        }
        orbit_sizes.sort_unstable_by(|a, b| b.cmp(a));

        Ok(Self { group, facets, orbit_sizes })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Sizes of the facet-normal orbits under the signed even permutations,
    /// in decreasing order.
    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    fn facet_masks(&self) -> Vec<u128> {
        self.facets
            .iter()
            .map(|f| f.vertices.iter().fold(0u128, |m, &v| m | 1u128 << v))
            .collect()
    }

    /// Face counts `(vertices, edges, 2-faces, facets)`, built from pairwise
    /// facet intersections. Every 2-face must be a triangle lying in exactly
    /// two facets, and the alternating sum must vanish as it does for every
    /// 3-sphere boundary complex.
    pub fn f_vector(&self) -> Result<FVector, PolytopeError> {
        let coords = vertex_coords(&self.group);
        let masks = self.facet_masks();
        // 2-faces: rank-2 pairwise intersections, with multiplicity over
        // facet pairs to certify the two-facets-per-ridge rule.
        let mut two_faces: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
        for i in 0..masks.len() {
            for j in i + 1..masks.len() {
                let common = masks[i] & masks[j];
                if common.count_ones() < 3 {
                    continue;
                }
                let vertices: Vec<u16> =
                    (0..128).filter(|&v| common >> v & 1 == 1).map(|v| v as u16).collect();
                let points: Vec<Point> =
                    vertices.iter().map(|&v| coords[v as usize].clone()).collect();
                if affine_rank(&points)? == 2 {
                    *two_faces.entry(vertices).or_insert(0) += 1;
                }
            }
        }
        let mut edges: BTreeSet<(u16, u16)> = BTreeSet::new();
        for (vertices, &pairs) in &two_faces {
            if vertices.len() != 3 {
                return Err(PolytopeError::NonTriangleTwoFace { vertices: vertices.clone() });
            }
            // k facets through this 2-face yield C(k,2) pairs; demand k = 2.
            if pairs != 1 {
                let count = (8 * pairs + 1).isqrt().div_ceil(2);
                return Err(PolytopeError::TwoFaceFacetCount {
                    vertices: vertices.clone(),
                    count,
                });
            }
            for a in 0..3 {
                for b in a + 1..3 {
                    edges.insert((vertices[a], vertices[b]));
                }
            }
        }
        let f = FVector {
            vertices: self.group.order(),
            edges: edges.len(),
            faces: two_faces.len(),
            cells: self.facets.len(),
        };
        if f.vertices + f.faces != f.edges + f.cells {
            return Err(PolytopeError::EulerFailure {
                v: f.vertices,
                e: f.edges,
                f: f.faces,
                c: f.cells,
            });
        }
        Ok(f)
    }

    fn translate(&self, g: u16, vertices: &[u16]) -> Vec<u16> {
        let mut out: Vec<u16> = vertices.iter().map(|&v| self.group.mul(g, v)).collect();
        out.sort_unstable();
        out
    }

    /// Checks that left translation by every group element maps the facet
    /// set onto itself.
    pub fn g_stability_check(&self) -> Result<(), PolytopeError> {
        let known: HashSet<&[u16]> = self.facets.iter().map(|f| f.vertices.as_slice()).collect();
        for g in 0..self.group.order() as u16 {
            for (idx, f) in self.facets.iter().enumerate() {
                if !known.contains(self.translate(g, &f.vertices).as_slice()) {
                    return Err(PolytopeError::NotStable { facet: idx, element: g });
                }
            }
        }
        Ok(())
    }

    /// True iff the group acts freely on facets (no `g ≠ 1` fixes a facet
    /// setwise) and on vertices.
    pub fn free_facet_action_check(&self) -> bool {
        for g in 1..self.group.order() as u16 {
            for v in 0..self.group.order() as u16 {
                if self.group.mul(g, v) == v {
                    return false;
                }
            }
            for f in &self.facets {
                if self.translate(g, &f.vertices) == f.vertices {
                    return false;
                }
            }
        }
        true
    }

    /// Certifies a fundamental domain given as a list of cells, each a list
    /// of vertex indices. On success every certificate flag is true;
    /// otherwise the failing certificate is wrapped in
    /// [`PolytopeError::CriterionFailed`].
    pub fn verify_fundamental_domain(
        &self,
        cells: &[Vec<u16>],
    ) -> Result<FundamentalDomainCertificate, PolytopeError> {
        let coords = vertex_coords(&self.group);
        let facet_index: HashMap<&[u16], usize> = self
            .facets
            .iter()
            .enumerate()
            .map(|(i, f)| (f.vertices.as_slice(), i))
            .collect();
        let mut sorted_cells = Vec::with_capacity(cells.len());
        let mut facet_indices = Vec::with_capacity(cells.len());
        for cell in cells {
            let mut sorted = cell.clone();
            sorted.sort_unstable();
            let Some(&idx) = facet_index.get(sorted.as_slice()) else {
                return Err(PolytopeError::NotAFacet { cell: cell.clone() });
            };
            facet_indices.push(idx);
            sorted_cells.push(sorted);
        }

        let base_vertex_shared = sorted_cells.iter().all(|c| c.contains(&0));

        let union: BTreeSet<u16> = sorted_cells.iter().flatten().copied().collect();
        let v_cap_v_inverse_trivial =
            union.iter().all(|&v| v == 0 || !union.contains(&self.group.inv(v)));

        let facet_count_matches = cells.len() * self.group.order() == self.facets.len();

        // Ridge graph on the cells: adjacent iff the common vertices span an
        // affine plane.
        let mut adjacency = vec![Vec::new(); cells.len()];
        for i in 0..sorted_cells.len() {
            for j in i + 1..sorted_cells.len() {
                let common: Vec<Point> = sorted_cells[i]
                    .iter()
                    .filter(|v| sorted_cells[j].contains(v))
                    .map(|&v| coords[v as usize].clone())
                    .collect();
                if common.len() >= 3 && affine_rank(&common)? == 2 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        let mut reached = vec![false; cells.len()];
        if !cells.is_empty() {
            let mut stack = vec![0usize];
            reached[0] = true;
            while let Some(c) = stack.pop() {
                for &n in &adjacency[c] {
                    if !reached[n] {
                        reached[n] = true;
                        stack.push(n);
                    }
                }
            }
        }
        let union_connected = reached.iter().all(|&r| r);

        // Exhaustive translation: no g carries one cell onto another, and no
        // g ≠ 1 fixes a cell — so the cells head pairwise distinct free
        // orbits, independently of the V∩V⁻¹ criterion.
        let mut orbit_distinct = true;
        'outer: for (i, cell) in sorted_cells.iter().enumerate() {
            for g in 0..self.group.order() as u16 {
                let image = self.translate(g, cell);
                for (j, other) in sorted_cells.iter().enumerate() {
                    if (i != j || g != 0) && image == *other {
                        orbit_distinct = false;
                        break 'outer;
                    }
                }
            }
        }

        let cert = FundamentalDomainCertificate {
            group: self.group.tag(),
            facet_indices,
            vertex_union_names: union
                .iter()
                .map(|&v| self.group.element_name(v).to_string())
                .collect(),
            vertex_union: union.into_iter().collect(),
            base_vertex_shared,
            v_cap_v_inverse_trivial,
            facet_count_matches,
            union_connected,
            orbit_distinct,
        };
        if cert.is_valid() {
            Ok(cert)
        } else {
            Err(PolytopeError::CriterionFailed(Box::new(cert)))
        }
    }
}

/// The published fundamental-domain cells for each quaternion group, as
/// vertex-index lists: six tetrahedra for the order-48 group, five for the
/// order-120 group, and a single octahedron for the order-24 group.
pub fn fundamental_domain_cells(group: &Group) -> Result<Vec<Vec<u16>>, GroupError> {
    let cells: Vec<Vec<&str>> = match group.tag() {
        GroupTag::O => vec![
            vec!["one", "tau_i", "tau_j", "omega_0"],
            vec!["one", "tau_j", "tau_k", "omega_0"],
            vec!["one", "tau_k", "tau_i", "omega_0"],
            vec!["one", "tau_i", "omega_k", "tau_j"],
            vec!["one", "tau_j", "omega_i", "tau_k"],
            vec!["one", "tau_i", "omega_j", "tau_k"],
        ],
        GroupTag::I => vec![
            vec!["one", "sigma_k_minus", "sigma_k_plus", "sigma_i_plus"],
            vec!["one", "sigma_k_minus", "sigma_i_plus", "sigma_j_plus"],
            vec!["one", "sigma_k_minus", "sigma_j_plus", "sigma_j_minus"],
            vec!["one", "sigma_k_minus", "sigma_j_minus", "sigma_i_minus"],
            vec!["one", "sigma_k_minus", "sigma_i_minus", "sigma_k_plus"],
        ],
        GroupTag::T => vec![vec!["one", "omega_0", "omega_j", "omega_i", "omega_ij", "k"]],
        other => return Err(GroupError::UnknownName(format!("no fundamental domain for {other}"))),
    };
    cells
        .into_iter()
        .map(|cell| cell.into_iter().map(|name| group.named(name)).collect())
        .collect()
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.vertices, self.edges, self.faces, self.cells)
    }
}
