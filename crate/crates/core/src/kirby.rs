//! The algebraic shadow of the Kirby diagram `k(m,n) ∪ u`: a dotted
//! unknotted circle plus an mn-framed torus knot T(m,n), its surgery
//! presentation after trading the dot for a 0-framed circle, and the
//! homology orders of the rational ball and its boundary.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::euclid::{a_image, CoprimePair};
use crate::plumbing::check_pq;

/// One dotted circle and one framed torus knot.
///
/// The framing is always `m*n` and the algebraic intersection of the knot
/// with the disk bounded by the dotted circle is `m + n` (the knot runs
/// over the two bands of the punctured torus m and n times).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct KirbyDiagram {
    pub m: i64,
    pub n: i64,
    pub framing: i64,
    pub linking: i64,
    pub dotted: bool,
}

impl KirbyDiagram {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        CoprimePair::new(m, n)?;
        Ok(KirbyDiagram {
            m,
            n,
            framing: m * n,
            linking: m + n,
            dotted: true,
        })
    }

    /// The diagram for `(p,q)`: `(m,n) = A(p-q, q)`.
    pub fn for_pq(p: i64, q: i64) -> Result<Self> {
        check_pq(p, q)?;
        let mn = a_image(CoprimePair::new(p - q, q)?);
        KirbyDiagram::new(mn.first(), mn.second())
    }

    /// Trade the dotted circle for a 0-framed circle: the boundary is
    /// unchanged and the linking matrix is `[[mn, m+n], [m+n, 0]]`.
    pub fn surgery(&self) -> SurgeryPresentation {
        SurgeryPresentation {
            matrix: vec![
                vec![self.framing, self.linking],
                vec![self.linking, 0],
            ],
        }
    }

    /// Order of the first homology of the ball: one generator, one
    /// relation of degree `m + n`.
    pub fn ball_h1_order(&self) -> i64 {
        self.m + self.n
    }
}

/// Framed components with pairwise linking numbers; framings on the
/// diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurgeryPresentation {
    matrix: Vec<Vec<i64>>,
}

impl SurgeryPresentation {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<Self> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::NotSymmetric);
        }
        for i in 0..n {
            for j in 0..i {
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SurgeryPresentation { matrix })
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn determinant(&self) -> i128 {
        fn det(m: &[Vec<i64>], cols: &[usize]) -> i128 {
            let row = m.len() - cols.len();
            if cols.is_empty() {
                return 1;
            }
            let mut total = 0i128;
            for (k, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = m[row][c] as i128 * det(m, &rest);
                total += if k % 2 == 0 { term } else { -term };
            }
            total
        }
        let cols: Vec<usize> = (0..self.matrix.len()).collect();
        det(&self.matrix, &cols)
    }

    /// `|H_1|` of the boundary: |det| of the linking matrix, with 0
    /// encoding infinite order.
    pub fn boundary_h1_order(&self) -> i128 {
        self.determinant().abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let d = KirbyDiagram::for_pq(9, 2).unwrap();
        assert_eq!((d.m, d.n), (4, 5));
        assert_eq!(d.framing, 20);
        assert_eq!(d.linking, 9);
        assert!(d.dotted);

        let d = KirbyDiagram::for_pq(2, 1).unwrap();
        assert_eq!((d.m, d.n, d.framing, d.linking), (1, 1, 1, 2));

        // A(3,2) = (2,3), the pair exhibited for L_{5,2}
        let d = KirbyDiagram::for_pq(5, 2).unwrap();
        assert_eq!((d.m, d.n, d.framing, d.linking), (2, 3, 6, 5));

        assert!(KirbyDiagram::for_pq(9, 3).is_err());
    }

    #[test]
    fn surgery_matrices() {
        let s = KirbyDiagram::for_pq(9, 2).unwrap().surgery();
        assert_eq!(s.matrix(), &[vec![20, 9], vec![9, 0]]);
        assert_eq!(s.boundary_h1_order(), 81);

        let s = KirbyDiagram::for_pq(2, 1).unwrap().surgery();
        assert_eq!(s.matrix(), &[vec![1, 2], vec![2, 0]]);
        assert_eq!(s.boundary_h1_order(), 4);

        let s = KirbyDiagram::for_pq(5, 2).unwrap().surgery();
        assert_eq!(s.boundary_h1_order(), 25);
    }

    #[test]
    fn ball_orders() {
        assert_eq!(KirbyDiagram::for_pq(9, 2).unwrap().ball_h1_order(), 9);
        assert_eq!(KirbyDiagram::for_pq(2, 1).unwrap().ball_h1_order(), 2);
        assert_eq!(KirbyDiagram::for_pq(5, 2).unwrap().ball_h1_order(), 5);
    }

    #[test]
    fn symmetry_in_m_n() {
        let d1 = KirbyDiagram::new(4, 5).unwrap();
        let d2 = KirbyDiagram::new(5, 4).unwrap();
        assert_eq!(d1.framing, d2.framing);
        assert_eq!(d1.linking, d2.linking);
        assert_eq!(d1.ball_h1_order(), d2.ball_h1_order());
        assert_eq!(
            d1.surgery().boundary_h1_order(),
            d2.surgery().boundary_h1_order()
        );
    }

    #[test]
    fn presentation_validation() {
        assert!(SurgeryPresentation::new(vec![vec![1, 2], vec![3, 0]]).is_err());
        assert!(SurgeryPresentation::new(vec![vec![1, 2]]).is_err());
        let s = SurgeryPresentation::new(vec![vec![20, 9], vec![9, 0]]).unwrap();
        assert_eq!(s.determinant(), -81);
    }

    #[test]
    fn serialization_round_trip() {
        let d = KirbyDiagram::for_pq(9, 2).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.contains("\"framing\":20"));
        let back: KirbyDiagram = serde_json::from_str(&json).unwrap();
        assert_eq!(d, back);
    }
}
