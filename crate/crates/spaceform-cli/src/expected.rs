//! Versioned tables of expected values against which every verification
//! command compares its computed results.
//!
//! All expectations live in a single embedded JSON file so that the numbers
//! the tool certifies are auditable in one place, independent of the code
//! that recomputes them.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Deserialize;
use spaceform::{DegreeHomology, GroupTag};

/// Expected torsion pattern of the group cohomology in positive even degrees.
#[derive(Debug, Deserialize)]
pub struct CohomologyTorsion {
    /// Order of the cyclic torsion group in degrees 4, 8, 12, ...
    pub at_multiples_of_four: u64,
    /// Order of the cyclic torsion group in degrees 2, 6, 10, ...;
    /// `None` when those degrees vanish outright.
    pub at_two_mod_four: Option<u64>,
}

/// The full table of expected values, deserialized from the embedded file.
#[derive(Debug, Deserialize)]
pub struct Expected {
    pub orders: BTreeMap<String, usize>,
    pub f_vectors: BTreeMap<String, [usize; 4]>,
    pub facet_orbit_sizes: BTreeMap<String, Vec<usize>>,
    pub domain_cell_counts: BTreeMap<String, usize>,
    pub domain_vertex_counts: BTreeMap<String, usize>,
    pub quotient_homology: BTreeMap<String, Vec<(usize, Vec<u64>)>>,
    pub augmented_middle_determinant: BTreeMap<String, i64>,
    pub abelianization: BTreeMap<String, Vec<u64>>,
    pub cohomology_torsion: BTreeMap<String, CohomologyTorsion>,
    pub flag_integral_homology: Vec<(usize, Vec<u64>)>,
    pub flag_mod2_betti: Vec<usize>,
    pub flag_action_s_alpha: [[u8; 2]; 2],
    pub flag_action_s_beta: [[u8; 2]; 2],
}

const EXPECTED_JSON: &str = include_str!("../data/expected.json");

/// The parsed expected-value tables (parsed once, shared thereafter).
pub fn expected() -> &'static Expected {
    static CELL: OnceLock<Expected> = OnceLock::new();
    CELL.get_or_init(|| {
        serde_json::from_str(EXPECTED_JSON).expect("embedded expected-value table must parse")
    })
}

impl Expected {
    fn key(tag: GroupTag) -> String {
        tag.to_string()
    }

    pub fn order(&self, tag: GroupTag) -> usize {
        self.orders[&Self::key(tag)]
    }

    pub fn f_vector(&self, tag: GroupTag) -> [usize; 4] {
        self.f_vectors[&Self::key(tag)]
    }

    pub fn facet_orbits(&self, tag: GroupTag) -> &[usize] {
        &self.facet_orbit_sizes[&Self::key(tag)]
    }

    pub fn domain_cells(&self, tag: GroupTag) -> usize {
        self.domain_cell_counts[&Self::key(tag)]
    }

    pub fn domain_vertices(&self, tag: GroupTag) -> usize {
        self.domain_vertex_counts[&Self::key(tag)]
    }

    pub fn quotient_table(&self, tag: GroupTag) -> Vec<DegreeHomology> {
        to_degree_homology(&self.quotient_homology[&Self::key(tag)])
    }

    pub fn determinant(&self, tag: GroupTag) -> i64 {
        self.augmented_middle_determinant[&Self::key(tag)]
    }

    pub fn abelianization(&self, tag: GroupTag) -> &[u64] {
        &self.abelianization[&Self::key(tag)]
    }

    pub fn cohomology(&self, tag: GroupTag) -> &CohomologyTorsion {
        &self.cohomology_torsion[&Self::key(tag)]
    }

    pub fn flag_integral(&self) -> Vec<DegreeHomology> {
        to_degree_homology(&self.flag_integral_homology)
    }

    /// Expected group cohomology table through degree `q_max`:
    /// rank one in degree 0, the tabulated cyclic torsion in positive even
    /// degrees, zero elsewhere.
    pub fn cohomology_table(&self, tag: GroupTag, q_max: usize) -> Vec<DegreeHomology> {
        let pattern = self.cohomology(tag);
        (0..=q_max)
            .map(|q| {
                if q == 0 {
                    DegreeHomology { betti: 1, torsion: vec![] }
                } else if q % 4 == 0 {
                    DegreeHomology { betti: 0, torsion: vec![pattern.at_multiples_of_four] }
                } else if q % 4 == 2 {
                    let torsion = pattern.at_two_mod_four.map_or(vec![], |t| vec![t]);
                    DegreeHomology { betti: 0, torsion }
                } else {
                    DegreeHomology { betti: 0, torsion: vec![] }
                }
            })
            .collect()
    }

    /// Expected homology (Z, 0, ..., 0, Z) of a length-`4n` sphere complex.
    pub fn sphere_table(&self, n: usize) -> Vec<DegreeHomology> {
        let top = 4 * n - 1;
        (0..=top)
            .map(|k| DegreeHomology {
                betti: usize::from(k == 0 || k == top),
                torsion: vec![],
            })
            .collect()
    }
}

fn to_degree_homology(raw: &[(usize, Vec<u64>)]) -> Vec<DegreeHomology> {
    raw.iter()
        .map(|(betti, torsion)| DegreeHomology { betti: *betti, torsion: torsion.clone() })
        .collect()
}
