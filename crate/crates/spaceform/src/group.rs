//! Finite quaternion groups and the abstract symmetric group `S₃`.
//!
//! The binary tetrahedral, octahedral and icosahedral groups (orders 24, 48,
//! 120) are generated as breadth-first closures of exact unit quaternions, with
//! deterministic element order: the identity comes first, then elements in
//! discovery order with the generator list fixed. After generation the group
//! is frozen into lookup tables — a full multiplication table, an inverse
//! table, and a dictionary of named elements — so every later module works
//! with small element indices instead of quaternions.
//!
//! `S₃` is built abstractly from the presentation
//! `⟨s_α, s_β | s_α² = s_β² = 1, s_αs_βs_α = s_βs_αs_β⟩` with elements ordered
//! `[1, s_α, s_β, s_αs_β, s_βs_α, w₀]`, `w₀` the longest element.

use crate::quaternion::Quaternion;
use crate::scalar::QuadScalar;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// Errors from group generation and presentation checking.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    /// A generator is not an exact unit quaternion.
    #[error("generator {0} does not have unit norm")]
    NotUnitNorm(String),
    /// The closure exceeded the configured bound — wrong generators.
    #[error("group closure exceeded the bound of {0} elements")]
    BoundExceeded(usize),
    /// A product of two elements escaped the generated set (internal bug).
    #[error("multiplication table closure failed at indices ({0}, {1})")]
    ClosureFailure(u16, u16),
    /// The multiplication table violates associativity (internal bug).
    #[error("associativity fails at indices ({0}, {1}, {2})")]
    AssociativityFailure(u16, u16, u16),
    /// A quaternion expected inside a group was not found there.
    #[error("element {0} does not belong to the group")]
    ElementNotInGroup(String),
    /// A named element was requested that the group does not define.
    #[error("group has no element named {0:?}")]
    UnknownName(String),
    /// A word used a symbol absent from the assignment.
    #[error("word refers to unbound symbol {0:?}")]
    UnboundSymbol(String),
    /// The requested generator images do not extend to a homomorphism.
    #[error("generator images do not define a homomorphism: {0}")]
    NotAHomomorphism(String),
}

/// Identifies which of the five groups a value belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GroupTag {
    /// Quaternion group of order 8.
    Q8,
    /// Binary tetrahedral group, order 24.
    T,
    /// Binary octahedral group, order 48.
    O,
    /// Binary icosahedral group, order 120.
    I,
    /// Symmetric group on three letters, order 6.
    S3,
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GroupTag::Q8 => "Q8",
            GroupTag::T => "T",
            GroupTag::O => "O",
            GroupTag::I => "I",
            GroupTag::S3 => "S3",
        };
        write!(f, "{name}")
    }
}

/// A finite group frozen into lookup tables.
///
/// `elements` is non-empty exactly for the quaternion groups; `S₃` carries
/// only element names. Index 0 is always the identity.
pub struct Group {
    tag: GroupTag,
    order: usize,
    /// Quaternion value of each element (quaternion groups only).
    elements: Vec<Quaternion>,
    /// Human-readable element names (always present for S₃; generated
    /// placeholders for quaternion groups without a dictionary name).
    element_names: Vec<String>,
    /// Row-major multiplication table: `table[a·order + b] = a·b`.
    table: Vec<u16>,
    /// Inverse of each element.
    inverse: Vec<u16>,
    /// Dictionary of named elements.
    named: BTreeMap<&'static str, u16>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.tag, self.order)
    }
}

impl Group {
    /// The group's tag.
    pub fn tag(&self) -> GroupTag {
        self.tag
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Product of two elements by table lookup.
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.table[a as usize * self.order + b as usize]
    }

    /// Inverse of an element.
    pub fn inv(&self, a: u16) -> u16 {
        self.inverse[a as usize]
    }

    /// Power of an element; negative exponents invert first.
    pub fn pow(&self, a: u16, e: i64) -> u16 {
        let (mut base, mut e) = if e < 0 { (self.inv(a), -e) } else { (a, e) };
        let mut acc = 0u16;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The quaternion realizing an element, if this is a quaternion group.
    pub fn quaternion(&self, idx: u16) -> Option<&Quaternion> {
        self.elements.get(idx as usize)
    }

    /// All element quaternions (empty for `S₃`).
    pub fn quaternions(&self) -> &[Quaternion] {
        &self.elements
    }

    /// A display name for an element: its dictionary name when it has one,
    /// otherwise a positional placeholder.
    pub fn element_name(&self, idx: u16) -> &str {
        &self.element_names[idx as usize]
    }

    /// Index of a named element.
    pub fn named(&self, name: &str) -> Result<u16, GroupError> {
        self.named.get(name).copied().ok_or_else(|| GroupError::UnknownName(name.to_string()))
    }

    /// The full name dictionary, sorted by name.
    pub fn names(&self) -> &BTreeMap<&'static str, u16> {
        &self.named
    }

    /// Looks up a quaternion, if it is an element of this group.
    pub fn index_of(&self, q: &Quaternion) -> Option<u16> {
        self.elements.iter().position(|e| e == q).map(|i| i as u16)
    }

    /// Whether every element of `sub` occurs in `self` (exact quaternion
    /// match). Meaningful only between quaternion groups.
    pub fn contains_subgroup(&self, sub: &Group) -> bool {
        let here: std::collections::HashSet<&Quaternion> = self.elements.iter().collect();
        !sub.elements.is_empty() && sub.elements.iter().all(|q| here.contains(q))
    }

    /// Evaluates a word `(symbol, exponent)*` left-to-right under an
    /// assignment of symbols to element indices.
    pub fn word_eval(
        &self,
        assignment: &BTreeMap<&str, u16>,
        word: &[(&str, i64)],
    ) -> Result<u16, GroupError> {
        let mut acc = 0u16;
        for &(sym, exp) in word {
            let &base = assignment
                .get(sym)
                .ok_or_else(|| GroupError::UnboundSymbol(sym.to_string()))?;
            acc = self.mul(acc, self.pow(base, exp));
        }
        Ok(acc)
    }

    /// Exhaustive group-axiom audit of the frozen tables: identity row and
    /// column, two-sided inverses, and full associativity. Cubic in the order,
    /// affordable up to order 120.
    pub fn verify_axioms(&self) -> Result<(), GroupError> {
        let n = self.order as u16;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::AssociativityFailure(0, a, 0));
            }
            let ai = self.inv(a);
            if self.mul(a, ai) != 0 || self.mul(ai, a) != 0 {
                return Err(GroupError::AssociativityFailure(a, ai, 0));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::AssociativityFailure(a, b, c));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Breadth-first closure of a set of unit quaternions into a [`Group`].
///
/// Element 0 is the identity; new elements are appended in discovery order,
/// scanning the current frontier in index order and the generators in list
/// order, multiplying on the right. The result is the same sequence on every
/// run, which downstream golden files rely on.
pub fn generate_group(
    tag: GroupTag,
    generators: &[Quaternion],
    bound: usize,
) -> Result<Group, GroupError> {
    for g in generators {
        if !g.is_unit() {
            return Err(GroupError::NotUnitNorm(g.to_string()));
        }
    }
    let mut elements = vec![Quaternion::one()];
    let mut index: HashMap<Quaternion, u16> = HashMap::new();
    index.insert(Quaternion::one(), 0);
    let mut frontier: Vec<u16> = vec![0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            for g in generators {
                let p = &elements[idx as usize] * g;
                if !index.contains_key(&p) {
                    if elements.len() >= bound {
                        return Err(GroupError::BoundExceeded(bound));
                    }
                    let new_idx = elements.len() as u16;
                    index.insert(p.clone(), new_idx);
                    elements.push(p);
                    next.push(new_idx);
                }
            }
        }
        frontier = next;
    }

    let order = elements.len();
    let mut table = vec![0u16; order * order];
    for a in 0..order {
        for b in 0..order {
            let p = &elements[a] * &elements[b];
            let &idx = index
                .get(&p)
                .ok_or(GroupError::ClosureFailure(a as u16, b as u16))?;
            table[a * order + b] = idx;
        }
    }
    let mut inverse = vec![0u16; order];
    for (a, q) in elements.iter().enumerate() {
        // Unit quaternions invert by conjugation.
        let &idx = index
            .get(&q.conj())
            .ok_or(GroupError::ClosureFailure(a as u16, a as u16))?;
        inverse[a] = idx;
    }

    let named = named_elements(tag, &elements);
    let element_names = make_element_names(order, &named);
    let group = Group { tag, order, elements, element_names, table, inverse, named };
    group.verify_axioms()?;
    Ok(group)
}

fn make_element_names(order: usize, named: &BTreeMap<&'static str, u16>) -> Vec<String> {
    let mut names: Vec<String> = (0..order).map(|i| format!("g{i}")).collect();
    // Prefer dictionary names; on collision the lexicographically first wins,
    // which is deterministic because the map iterates sorted.
    let mut seen = vec![false; order];
    for (&name, &idx) in named {
        if !seen[idx as usize] {
            names[idx as usize] = name.to_string();
            seen[idx as usize] = true;
        }
    }
    names
}

/// Square root of one half, `1/√2 = √2/2`.
fn inv_sqrt2() -> QuadScalar {
    QuadScalar::quad(0, 1, 1, 2, 2)
}

/// `(1 + u)/√2` for a basis unit `u` — the order-8 elements of the binary
/// octahedral group.
fn tau(u: Quaternion) -> Quaternion {
    let s = inv_sqrt2();
    let p = &Quaternion::one() + &u;
    Quaternion::new(&p.w * &s, &p.x * &s, &p.y * &s, &p.z * &s)
}

/// Standard generators of the binary polyhedral groups.
pub mod generators {
    use super::*;

    /// `ϖ = (−1 + i + j + k)/2`, an element of order 3.
    pub fn varpi() -> Quaternion {
        Quaternion::from_ints(-1, 1, 1, 1, 2)
    }

    /// `γ = (1 + i)/√2`, an element of order 8 with `γ² = i`.
    pub fn gamma() -> Quaternion {
        tau(Quaternion::i())
    }

    /// `σ = (φ⁻¹ + i + φ·j)/2`, an element of order 5.
    pub fn sigma() -> Quaternion {
        let half = QuadScalar::from_ratio(1, 2);
        let phi = QuadScalar::phi();
        let phi_inv = &phi - &QuadScalar::one();
        Quaternion::new(
            &phi_inv * &half,
            half.clone(),
            &phi * &half,
            QuadScalar::zero(),
        )
    }
}

/// Builds the quaternion group `Q₈ = ⟨i, j⟩` of order 8.
pub fn build_q8() -> Result<Group, GroupError> {
    generate_group(GroupTag::Q8, &[Quaternion::i(), Quaternion::j()], 16)
}

/// Builds the binary tetrahedral group `T = ⟨i, ϖ⟩` of order 24.
pub fn build_t() -> Result<Group, GroupError> {
    generate_group(GroupTag::T, &[Quaternion::i(), generators::varpi()], 240)
}

/// Builds the binary octahedral group `O = ⟨ϖ, γ⟩` of order 48.
pub fn build_o() -> Result<Group, GroupError> {
    generate_group(GroupTag::O, &[generators::varpi(), generators::gamma()], 240)
}

/// Builds the binary icosahedral group `I = ⟨i, σ⟩` of order 120.
pub fn build_i() -> Result<Group, GroupError> {
    generate_group(GroupTag::I, &[Quaternion::i(), generators::sigma()], 240)
}

/// The named constants each group exposes, as exact quaternions.
///
/// Names used throughout the chain-complex catalog:
/// `omega_0 = (1+i+j+k)/2`, `omega_i = (1−i+j+k)/2`, `omega_j = (1+i−j+k)/2`,
/// `omega_k = (1+i+j−k)/2`, `omega_ij = (1−i−j+k)/2`,
/// `tau_u = (1+u)/√2` for `u ∈ {i, j, k}`,
/// `sigma_i_plus = (φ + φ⁻¹i + j)/2`, `sigma_i_minus = (φ + φ⁻¹i − j)/2`,
/// `sigma_j_plus = (φ + φ⁻¹j − k)/2`, `sigma_j_minus = (φ − φ⁻¹j − k)/2`,
/// `sigma_k_plus = (φ + i + φ⁻¹k)/2`, `sigma_k_minus = (φ + i − φ⁻¹k)/2`.
fn named_quaternions(tag: GroupTag) -> Vec<(&'static str, Quaternion)> {
    let mut names: Vec<(&'static str, Quaternion)> = vec![
        ("one", Quaternion::one()),
        ("minus_one", -Quaternion::one()),
        ("i", Quaternion::i()),
        ("j", Quaternion::j()),
        ("k", Quaternion::k()),
    ];
    if tag == GroupTag::Q8 {
        return names;
    }
    names.extend([
        ("varpi", generators::varpi()),
        ("omega_0", Quaternion::from_ints(1, 1, 1, 1, 2)),
        ("omega_i", Quaternion::from_ints(1, -1, 1, 1, 2)),
        ("omega_j", Quaternion::from_ints(1, 1, -1, 1, 2)),
        ("omega_k", Quaternion::from_ints(1, 1, 1, -1, 2)),
        ("omega_ij", Quaternion::from_ints(1, -1, -1, 1, 2)),
    ]);
    match tag {
        GroupTag::O => {
            names.extend([
                ("gamma", generators::gamma()),
                ("tau_i", tau(Quaternion::i())),
                ("tau_j", tau(Quaternion::j())),
                ("tau_k", tau(Quaternion::k())),
            ]);
        }
        GroupTag::I => {
            let half = QuadScalar::from_ratio(1, 2);
            let one = QuadScalar::one();
            let phi = QuadScalar::phi();
            let phi_inv = &phi - &one;
            let h = |c: &QuadScalar| c * &half;
            let z = QuadScalar::zero;
            names.extend([
                ("sigma", generators::sigma()),
                ("sigma_i_plus", Quaternion::new(h(&phi), h(&phi_inv), half.clone(), z())),
                ("sigma_i_minus", Quaternion::new(h(&phi), h(&phi_inv), -h(&one), z())),
                ("sigma_j_plus", Quaternion::new(h(&phi), z(), h(&phi_inv), -h(&one))),
                ("sigma_j_minus", Quaternion::new(h(&phi), z(), -h(&phi_inv), -h(&one))),
                ("sigma_k_plus", Quaternion::new(h(&phi), h(&one), z(), h(&phi_inv))),
                ("sigma_k_minus", Quaternion::new(h(&phi), h(&one), z(), -h(&phi_inv))),
            ]);
        }
        _ => {}
    }
    names
}

fn named_elements(tag: GroupTag, elements: &[Quaternion]) -> BTreeMap<&'static str, u16> {
    let mut map = BTreeMap::new();
    for (name, q) in named_quaternions(tag) {
        if let Some(idx) = elements.iter().position(|e| *e == q) {
            map.insert(name, idx as u16);
        }
    }
    map
}

/// Builds `S₃` abstractly with elements `[1, s_α, s_β, s_αs_β, s_βs_α, w₀]`.
pub fn build_s3() -> Group {
    const E: u16 = 0;
    const A: u16 = 1; // s_α
    const B: u16 = 2; // s_β
    const AB: u16 = 3; // s_αs_β
    const BA: u16 = 4; // s_βs_α
    const W: u16 = 5; // w₀ = s_αs_βs_α = s_βs_αs_β

    // Right multiplication by the two generators on normal forms.
    let right_a = [A, E, BA, W, B, AB];
    let right_b = [B, AB, E, A, W, BA];
    // Each element as a word in the generators (α = multiply by s_α, …).
    let words: [&[u16]; 6] = [&[], &[A], &[B], &[A, B], &[B, A], &[A, B, A]];

    let order = 6;
    let mut table = vec![0u16; order * order];
    for a in 0..order as u16 {
        for b in 0..order as u16 {
            let mut acc = a;
            for &gen in words[b as usize] {
                acc = if gen == A { right_a[acc as usize] } else { right_b[acc as usize] };
            }
            table[a as usize * order + b as usize] = acc;
        }
    }
    let mut inverse = vec![0u16; order];
    for a in 0..order as u16 {
        for b in 0..order as u16 {
            if table[a as usize * order + b as usize] == E {
                inverse[a as usize] = b;
            }
        }
    }
    let named: BTreeMap<&'static str, u16> = [
        ("one", E),
        ("s_alpha", A),
        ("s_beta", B),
        ("s_alpha_s_beta", AB),
        ("s_beta_s_alpha", BA),
        ("w_0", W),
    ]
    .into_iter()
    .collect();
    let element_names =
        ["1", "s_alpha", "s_beta", "s_alpha_s_beta", "s_beta_s_alpha", "w_0"]
            .into_iter()
            .map(str::to_string)
            .collect();
    let group = Group {
        tag: GroupTag::S3,
        order,
        elements: Vec::new(),
        element_names,
        table,
        inverse,
        named,
    };
    group.verify_axioms().expect("the six-element normal-form table is a group");
    group
}

/// Outcome of evaluating the polyhedral presentation
/// `⟨r, s, t | r^ℓ = s^m = t^n = rst⟩` with `r := s·t`.
#[derive(Debug, Clone, Serialize)]
pub struct PresentationReport {
    /// The group checked.
    pub group: GroupTag,
    /// The exponent triple `(ℓ, m, n)`.
    pub exponents: (u32, u32, u32),
    /// Indices of `r = s·t`, `s`, `t`.
    pub r: u16,
    pub s: u16,
    pub t: u16,
    /// Whether `r^ℓ`, `s^m`, `t^n`, `rst` all coincide.
    pub all_equal: bool,
    /// The common value (index of `r^ℓ`), meaningful when `all_equal`.
    pub common_value: u16,
    /// Whether the common value is the central element `−1`.
    pub common_is_minus_one: bool,
}

/// Evaluates the polyhedral presentation relations on concrete elements.
///
/// `r` is forced to `s·t`: when `ℓ = 2` the relation `r² = rst` cancels to
/// `r = st`, so the triple is determined by `(s, t)` alone.
pub fn check_presentation(
    group: &Group,
    s: u16,
    t: u16,
    exponents: (u32, u32, u32),
) -> Result<PresentationReport, GroupError> {
    let n = group.order() as u16;
    if s >= n || t >= n {
        return Err(GroupError::ElementNotInGroup(format!("index {}", s.max(t))));
    }
    let (l, m, nn) = exponents;
    let r = group.mul(s, t);
    let rl = group.pow(r, i64::from(l));
    let sm = group.pow(s, i64::from(m));
    let tn = group.pow(t, i64::from(nn));
    let rst = group.mul(group.mul(r, s), t);
    let all_equal = rl == sm && sm == tn && tn == rst;
    let common_is_minus_one = group
        .named("minus_one")
        .map(|idx| all_equal && rl == idx)
        .unwrap_or(false);
    Ok(PresentationReport {
        group: group.tag(),
        exponents,
        r,
        s,
        t,
        all_equal,
        common_value: rl,
        common_is_minus_one,
    })
}

/// The quotient homomorphism from the binary octahedral group onto `S₃`.
///
/// Determined by `τ_i ↦ s_β` and `τ_k ↦ s_α`, which generate the whole group;
/// every other image follows by breadth-first extension. The returned vector
/// maps each element index of `O` to an element index of `S₃`. The kernel is
/// the quaternion subgroup `Q₈`, so each fiber has exactly 8 elements; the map
/// is re-verified to be multiplicative on all 48² pairs.
pub fn quotient_map_o_to_s3(o: &Group, s3: &Group) -> Result<Vec<u16>, GroupError> {
    assert_eq!(o.tag(), GroupTag::O);
    assert_eq!(s3.tag(), GroupTag::S3);
    let tau_i = o.named("tau_i")?;
    let tau_k = o.named("tau_k")?;
    let gens = [
        (tau_i, s3.named("s_beta")?),
        (tau_k, s3.named("s_alpha")?),
    ];

    let mut image: Vec<Option<u16>> = vec![None; o.order()];
    image[0] = Some(0);
    let mut frontier = vec![0u16];
    while let Some(x) = frontier.pop() {
        let ix = image[x as usize].expect("frontier elements have images");
        for &(g, ig) in &gens {
            let y = o.mul(x, g);
            let iy = s3.mul(ix, ig);
            match image[y as usize] {
                None => {
                    image[y as usize] = Some(iy);
                    frontier.push(y);
                }
                Some(prev) if prev != iy => {
                    return Err(GroupError::NotAHomomorphism(format!(
                        "inconsistent image at element {y}"
                    )));
                }
                _ => {}
            }
        }
    }
    let image: Vec<u16> = image
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                GroupError::NotAHomomorphism(format!("generators do not reach element {i}"))
            })
        })
        .collect::<Result<_, _>>()?;

    for a in 0..o.order() as u16 {
        for b in 0..o.order() as u16 {
            let lhs = image[o.mul(a, b) as usize];
            let rhs = s3.mul(image[a as usize], image[b as usize]);
            if lhs != rhs {
                return Err(GroupError::NotAHomomorphism(format!(
                    "multiplicativity fails at ({a}, {b})"
                )));
            }
        }
    }
    Ok(image)
}

/// Abelianization `G/[G,G]` computed directly from the multiplication table.
///
/// Returns the invariant factors (empty for a perfect group). The commutator
/// subgroup is generated by all commutators and closed under multiplication;
/// the quotient is read off from its cosets.
pub fn abelianization(group: &Group) -> Vec<u64> {
    let n = group.order() as u16;
    // The commutator subgroup: collect all commutators (the set is closed
    // under inversion since [a,b]⁻¹ = [b,a]), then close under right
    // multiplication by them with a breadth-first scan.
    let mut is_comm_gen = vec![false; group.order()];
    for a in 0..n {
        for b in 0..n {
            let c = group.mul(group.mul(a, b), group.mul(group.inv(a), group.inv(b)));
            is_comm_gen[c as usize] = true;
        }
    }
    let comm_gens: Vec<u16> = (0..n).filter(|&c| is_comm_gen[c as usize]).collect();
    let mut in_comm = vec![false; group.order()];
    in_comm[0] = true;
    let mut members = vec![0u16];
    let mut cursor = 0;
    while cursor < members.len() {
        let x = members[cursor];
        cursor += 1;
        for &g in &comm_gens {
            let p = group.mul(x, g);
            if !in_comm[p as usize] {
                in_comm[p as usize] = true;
                members.push(p);
            }
        }
    }

    // Cosets of the commutator subgroup.
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut reps: Vec<u16> = Vec::new();
    for g in 0..n {
        if coset_of[g as usize] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for &m in &members {
            coset_of[group.mul(g, m) as usize] = id;
        }
    }
    let q = reps.len() as u64;
    if q == 1 {
        return Vec::new();
    }
    // The quotient is a finite abelian group; identify it by element orders.
    // Its exponent equals the maximal coset order, and for cyclic quotients
    // (the only case arising here) that is the whole story.
    let coset_mul = |a: usize, b: usize| coset_of[group.mul(reps[a], reps[b]) as usize];
    let mut exponent = 1u64;
    for c in 0..reps.len() {
        let mut acc = c;
        let mut ord = 1u64;
        while acc != coset_of[0] as usize {
            acc = coset_mul(acc, c);
            ord += 1;
        }
        exponent = num_integer::lcm(exponent, ord);
    }
    assert_eq!(
        exponent, q,
        "non-cyclic abelianization; invariant-factor splitting not implemented"
    );
    vec![q]
}

/// Convenience bundle of the fully built groups shared across modules.
pub struct Groups {
    pub q8: Arc<Group>,
    pub t: Arc<Group>,
    pub o: Arc<Group>,
    pub i: Arc<Group>,
    pub s3: Arc<Group>,
}

impl Groups {
    /// Builds all five groups. Each build re-verifies the group axioms.
    pub fn build() -> Result<Self, GroupError> {
        Ok(Self {
            q8: Arc::new(build_q8()?),
            t: Arc::new(build_t()?),
            o: Arc::new(build_o()?),
            i: Arc::new(build_i()?),
            s3: Arc::new(build_s3()),
        })
    }

    /// The quaternion group with the given tag.
    pub fn by_tag(&self, tag: GroupTag) -> &Arc<Group> {
        match tag {
            GroupTag::Q8 => &self.q8,
            GroupTag::T => &self.t,
            GroupTag::O => &self.o,
            GroupTag::I => &self.i,
            GroupTag::S3 => &self.s3,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(build_q8().unwrap().order(), 8);
        assert_eq!(build_t().unwrap().order(), 24);
        assert_eq!(build_o().unwrap().order(), 48);
        assert_eq!(build_i().unwrap().order(), 120);
    }

    #[test]
    fn generation_is_deterministic() {
        let a = build_o().unwrap();
        let b = build_o().unwrap();
        assert_eq!(a.quaternions(), b.quaternions());
    }

    #[test]
    fn subgroup_chain() {
        let q8 = build_q8().unwrap();
        let t = build_t().unwrap();
        let o = build_o().unwrap();
        let i = build_i().unwrap();
        assert!(t.contains_subgroup(&q8));
        assert!(o.contains_subgroup(&t));
        assert!(i.contains_subgroup(&t));
        assert!(!i.contains_subgroup(&o)); // 48 does not divide 120
    }

    #[test]
    fn minus_one_is_central() {
        for g in [build_t().unwrap(), build_o().unwrap(), build_i().unwrap()] {
            let m = g.named("minus_one").unwrap();
            for a in 0..g.order() as u16 {
                assert_eq!(g.mul(m, a), g.mul(a, m));
            }
        }
    }

    #[test]
    fn tetrahedral_halves() {
        // The 16 elements of T outside Q₈ are exactly (±1 ± i ± j ± k)/2.
        let t = build_t().unwrap();
        let half = QuadScalar::from_ratio(1, 2);
        let count = t
            .quaternions()
            .iter()
            .filter(|q| q.w.abs() == half)
            .count();
        assert_eq!(count, 16);
    }

    #[test]
    fn octahedral_outer_shell() {
        // O ∖ T consists of 24 elements (±u ± v)/√2 with u ≠ v basis units.
        let o = build_o().unwrap();
        let t = build_t().unwrap();
        let outside: Vec<_> = o
            .quaternions()
            .iter()
            .filter(|q| t.index_of(q).is_none())
            .collect();
        assert_eq!(outside.len(), 24);
        let h = QuadScalar::quad(0, 1, 1, 2, 2); // 1/√2
        for q in outside {
            let nonzero: Vec<_> = q
                .coords()
                .iter()
                .filter(|c| !num_traits::Zero::is_zero(*c))
                .cloned()
                .collect();
            assert_eq!(nonzero.len(), 2);
            assert!(nonzero.iter().all(|c| c.abs() == h));
        }
    }

    #[test]
    fn presentations_hold_with_common_value_minus_one() {
        let t = build_t().unwrap();
        let o = build_o().unwrap();
        let i = build_i().unwrap();

        let rep = check_presentation(
            &o,
            o.named("omega_0").unwrap(),
            o.named("tau_i").unwrap(),
            (2, 3, 4),
        )
        .unwrap();
        assert!(rep.all_equal && rep.common_is_minus_one);

        let rep = check_presentation(
            &t,
            t.named("omega_0").unwrap(),
            t.named("omega_k").unwrap(),
            (2, 3, 3),
        )
        .unwrap();
        assert!(rep.all_equal && rep.common_is_minus_one);

        // For the icosahedral group, t = σ_i⁺ and s is recovered from
        // σ_i⁻ = s·t⁻², that is s = σ_i⁻·t².
        let tt = i.named("sigma_i_plus").unwrap();
        let s = i.mul(i.named("sigma_i_minus").unwrap(), i.pow(tt, 2));
        let rep = check_presentation(&i, s, tt, (2, 3, 5)).unwrap();
        assert!(rep.all_equal && rep.common_is_minus_one);
    }

    #[test]
    fn generator_words_resolve_to_named_elements() {
        let o = build_o().unwrap();
        let mut assign = BTreeMap::new();
        assign.insert("s", o.named("omega_0").unwrap());
        assign.insert("t", o.named("tau_i").unwrap());
        let eval = |word: &[(&str, i64)]| o.word_eval(&assign, word).unwrap();
        assert_eq!(eval(&[("t", -1), ("s", 1), ("t", -1)]), o.named("omega_i").unwrap());
        assert_eq!(eval(&[("s", -1), ("t", 2)]), o.named("omega_j").unwrap());
        assert_eq!(eval(&[("t", -1), ("s", 1), ("t", 1)]), o.named("omega_k").unwrap());
        assert_eq!(eval(&[("t", -1), ("s", 1)]), o.named("tau_j").unwrap());
        assert_eq!(eval(&[("s", 1), ("t", -1)]), o.named("tau_k").unwrap());
        assert_eq!(eval(&[]), 0);

        let t = build_t().unwrap();
        let mut assign = BTreeMap::new();
        assign.insert("s", t.named("omega_0").unwrap());
        assign.insert("t", t.named("omega_k").unwrap());
        let eval = |word: &[(&str, i64)]| t.word_eval(&assign, word).unwrap();
        assert_eq!(eval(&[("t", -1), ("s", 1)]), t.named("omega_i").unwrap());
        assert_eq!(eval(&[("s", 1), ("t", -1)]), t.named("omega_j").unwrap());
        assert_eq!(eval(&[("t", -1)]), t.named("omega_ij").unwrap());

        let i = build_i().unwrap();
        let tt = i.named("sigma_i_plus").unwrap();
        let s = i.mul(i.named("sigma_i_minus").unwrap(), i.pow(tt, 2));
        let mut assign = BTreeMap::new();
        assign.insert("s", s);
        assign.insert("t", tt);
        let eval = |word: &[(&str, i64)]| i.word_eval(&assign, word).unwrap();
        assert_eq!(eval(&[("t", 1), ("s", -1), ("t", 1)]), i.named("sigma_j_plus").unwrap());
        assert_eq!(eval(&[("s", -1), ("t", 1)]), i.named("sigma_j_minus").unwrap());
        assert_eq!(eval(&[("s", 1), ("t", -1)]), i.named("sigma_k_plus").unwrap());
        assert_eq!(eval(&[("s", -1), ("t", 2)]), i.named("sigma_k_minus").unwrap());
    }

    #[test]
    fn unbound_symbol_is_reported() {
        let t = build_t().unwrap();
        let assign = BTreeMap::new();
        assert_eq!(
            t.word_eval(&assign, &[("s", 1)]),
            Err(GroupError::UnboundSymbol("s".to_string()))
        );
    }

    #[test]
    fn s3_structure() {
        let s3 = build_s3();
        assert_eq!(s3.order(), 6);
        let a = s3.named("s_alpha").unwrap();
        let b = s3.named("s_beta").unwrap();
        let w = s3.named("w_0").unwrap();
        assert_eq!(s3.mul(a, a), 0);
        assert_eq!(s3.mul(b, b), 0);
        assert_eq!(s3.mul(s3.mul(a, b), a), w); // s_αs_βs_α = w₀
        assert_eq!(s3.mul(s3.mul(b, a), b), w); // s_βs_αs_β = w₀
        assert_eq!(s3.mul(w, w), 0);
        assert_eq!(s3.mul(a, b), s3.named("s_alpha_s_beta").unwrap());
        assert_eq!(s3.mul(b, a), s3.named("s_beta_s_alpha").unwrap());
    }

    #[test]
    fn quotient_map_images_and_fibers() {
        let o = build_o().unwrap();
        let s3 = build_s3();
        let pi = quotient_map_o_to_s3(&o, &s3).unwrap();

        let check = |o_name: &str, s3_name: &str| {
            assert_eq!(
                pi[o.named(o_name).unwrap() as usize],
                s3.named(s3_name).unwrap(),
                "wrong image for {o_name}"
            );
        };
        check("tau_i", "s_beta");
        check("tau_j", "w_0");
        check("tau_k", "s_alpha");
        check("omega_i", "s_beta_s_alpha");
        check("omega_j", "s_beta_s_alpha");
        check("omega_k", "s_beta_s_alpha");
        check("omega_0", "s_alpha_s_beta");
        check("minus_one", "one");

        // Surjective with all fibers of size 8, and the kernel is Q₈.
        let mut fiber = [0usize; 6];
        for &im in &pi {
            fiber[im as usize] += 1;
        }
        assert_eq!(fiber, [8; 6]);
        let q8 = build_q8().unwrap();
        for (idx, &im) in pi.iter().enumerate() {
            let in_kernel = im == 0;
            let in_q8 = q8.index_of(o.quaternion(idx as u16).unwrap()).is_some();
            assert_eq!(in_kernel, in_q8, "kernel mismatch at element {idx}");
        }
    }

    #[test]
    fn abelianizations() {
        assert_eq!(abelianization(&build_t().unwrap()), vec![3]);
        assert_eq!(abelianization(&build_o().unwrap()), vec![2]);
        assert_eq!(abelianization(&build_i().unwrap()), Vec::<u64>::new());
        assert_eq!(abelianization(&build_s3()), vec![2]);
    }

    #[test]
    fn named_dictionary_is_complete() {
        let o = build_o().unwrap();
        for name in ["one", "minus_one", "i", "j", "k", "varpi", "gamma", "omega_0", "omega_i", "omega_j", "omega_k", "omega_ij", "tau_i", "tau_j", "tau_k"] {
            assert!(o.named(name).is_ok(), "O lacks {name}");
        }
        let i = build_i().unwrap();
        for name in ["one", "minus_one", "i", "j", "k", "varpi", "sigma", "omega_0", "omega_i", "omega_j", "omega_k", "omega_ij", "sigma_i_plus", "sigma_i_minus", "sigma_j_plus", "sigma_j_minus", "sigma_k_plus", "sigma_k_minus"] {
            assert!(i.named(name).is_ok(), "I lacks {name}");
        }
        let t = build_t().unwrap();
        for name in ["one", "minus_one", "i", "j", "k", "varpi", "omega_0", "omega_i", "omega_j", "omega_k", "omega_ij"] {
            assert!(t.named(name).is_ok(), "T lacks {name}");
        }
    }

    #[test]
    fn gamma_squares_to_i() {
        let o = build_o().unwrap();
        let g = o.named("gamma").unwrap();
        assert_eq!(o.mul(g, g), o.named("i").unwrap());
        // γ coincides with τ_i.
        assert_eq!(g, o.named("tau_i").unwrap());
    }
}
