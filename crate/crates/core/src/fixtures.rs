//! Built-in triangulations shipped with the crate.

use crate::complex::{OrientedComplex, TriangulatedManifold};
use crate::io::{parse_manifold, parse_oriented_complex};

/// `(name, facet file contents)` for every bundled fixture.
pub const ALL: &[(&str, &str)] = &[
    ("tetrahedron_boundary", include_str!("../fixtures/tetrahedron_boundary.txt")),
    ("simplex4_boundary", include_str!("../fixtures/simplex4_boundary.txt")),
    ("simplex5_boundary", include_str!("../fixtures/simplex5_boundary.txt")),
    ("bipyramid_s2", include_str!("../fixtures/bipyramid_s2.txt")),
    ("octahedron", include_str!("../fixtures/octahedron.txt")),
    ("pentagonal_bipyramid", include_str!("../fixtures/pentagonal_bipyramid.txt")),
    ("hexagonal_bipyramid", include_str!("../fixtures/hexagonal_bipyramid.txt")),
    ("sphere4_join", include_str!("../fixtures/sphere4_join.txt")),
    ("local_h1_alpha", include_str!("../fixtures/local_h1_alpha.txt")),
    ("local_h1_beta", include_str!("../fixtures/local_h1_beta.txt")),
    ("local_h2_alpha", include_str!("../fixtures/local_h2_alpha.txt")),
    ("local_h2_beta", include_str!("../fixtures/local_h2_beta.txt")),
    ("rp2_6", include_str!("../fixtures/rp2_6.txt")),
];

pub fn text(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

fn manifold(name: &str) -> TriangulatedManifold {
    parse_manifold(text(name).expect("known fixture")).expect("bundled fixture is valid")
}

fn local(name: &str) -> OrientedComplex {
    parse_oriented_complex(text(name).expect("known fixture")).expect("bundled fixture is valid")
}

/// 4-vertex 2-sphere.
pub fn tetrahedron_boundary() -> TriangulatedManifold {
    manifold("tetrahedron_boundary")
}

/// 5-vertex 3-sphere.
pub fn simplex4_boundary() -> TriangulatedManifold {
    manifold("simplex4_boundary")
}

/// 6-vertex 4-sphere.
pub fn simplex5_boundary() -> TriangulatedManifold {
    manifold("simplex5_boundary")
}

/// 5-vertex 2-sphere with apexes 4 and 5 over the triangle (1,2,3).
pub fn bipyramid_s2() -> TriangulatedManifold {
    manifold("bipyramid_s2")
}

pub fn octahedron() -> TriangulatedManifold {
    manifold("octahedron")
}

pub fn pentagonal_bipyramid() -> TriangulatedManifold {
    manifold("pentagonal_bipyramid")
}

pub fn hexagonal_bipyramid() -> TriangulatedManifold {
    manifold("hexagonal_bipyramid")
}

/// 7-vertex 4-sphere `∂(1,2,3,7) * ∂(4,5,6)`, which admits the middle move
/// `((1,2,3),(4,5,6))`.
pub fn sphere4_join() -> TriangulatedManifold {
    manifold("sphere4_join")
}

pub fn local_h1_alpha() -> OrientedComplex {
    local("local_h1_alpha")
}

pub fn local_h1_beta() -> OrientedComplex {
    local("local_h1_beta")
}

pub fn local_h2_alpha() -> OrientedComplex {
    local("local_h2_alpha")
}

pub fn local_h2_beta() -> OrientedComplex {
    local("local_h2_beta")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn closed_fixtures_validate() {
        for name in [
            "tetrahedron_boundary",
            "simplex4_boundary",
            "simplex5_boundary",
            "bipyramid_s2",
            "octahedron",
            "pentagonal_bipyramid",
            "hexagonal_bipyramid",
            "sphere4_join",
        ] {
            let k = manifold(name);
            assert!(k.is_cycle(), "{name}");
        }
        assert!(matches!(parse_manifold(text("rp2_6").unwrap()), Err(Error::NotOrientable(_))));
    }

    #[test]
    fn local_fixtures_have_boundary() {
        for c in [local_h1_alpha(), local_h1_beta(), local_h2_alpha(), local_h2_beta()] {
            assert!(!c.facet_boundary().is_zero());
        }
    }
}
