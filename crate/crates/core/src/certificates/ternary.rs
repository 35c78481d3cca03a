//! Explicit identities and substitution witnesses for ternary forms
//! `ax² + 2bxy + 2pxz + cy² + 2qyz + rz²`.

use crate::error::{Error, Result};
use crate::matrix::{IndexSet, RVector, SymMatrix};
use crate::minors::det;
use crate::rational::Rational;

use super::{squares_identity_holds, SosCertificate, SquareTerm, Witness};

/// `scale · Q = Σ terms` for one nested pair (1×1 minor `M₁` on `pivot`,
/// 2×2 minor `M₂` on `pair`), with `scale = M₁M₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvatarIdentity {
    pub pivot: usize,
    pub pair: IndexSet,
    pub scale: Rational,
    pub terms: Vec<SquareTerm>,
}

impl AvatarIdentity {
    pub fn holds(&self, a: &SymMatrix) -> bool {
        squares_identity_holds(a, &self.scale, &self.terms)
    }

    /// The identity divided through by its scale, so it states `Q = Σ …`.
    pub fn normalized_terms(&self) -> Vec<SquareTerm> {
        self.terms
            .iter()
            .map(|t| SquareTerm::new(&t.weight / &self.scale, t.form.clone()))
            .collect()
    }

    /// A certificate for `Q` when the normalized weights are all
    /// nonnegative. Zero-weight squares are dropped.
    pub fn certificate(&self) -> Option<SosCertificate> {
        let terms: Vec<SquareTerm> = self
            .normalized_terms()
            .into_iter()
            .filter(|t| !t.weight.is_zero())
            .collect();
        if terms.iter().any(|t| t.weight.is_negative()) {
            return None;
        }
        SosCertificate::new(3, terms).ok()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AvatarSlot {
    Applicable(AvatarIdentity),
    /// `M₁M₂ = 0`, the identity would have a vanishing scale.
    NotApplicable { pivot: usize, pair: IndexSet },
}

impl AvatarSlot {
    pub fn identity(&self) -> Option<&AvatarIdentity> {
        match self {
            AvatarSlot::Applicable(id) => Some(id),
            AvatarSlot::NotApplicable { .. } => None,
        }
    }
}

/// (pivot, partner) in the fixed reporting order
/// (a; ac−b²), (a; ar−p²), (c; ac−b²), (c; cr−q²), (r; ar−p²), (r; cr−q²).
const AVATAR_ORDER: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

fn require_ternary(a: &SymMatrix) -> Result<()> {
    if a.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: a.dim(),
        });
    }
    Ok(())
}

/// All six nested-pair identities. With pivot i, partner j and remaining
/// index k, writing `M₁ = aᵢᵢ`, `M₂ = aᵢᵢaⱼⱼ − aᵢⱼ²` and
/// `t = aᵢᵢaⱼₖ − aᵢⱼaᵢₖ`:
///
/// `M₁M₂·Q = M₂(Σₗ aᵢₗxₗ)² + (M₂xⱼ + t xₖ)² + M₁Δ xₖ²`.
pub fn avatar_identities_ternary(a: &SymMatrix) -> Result<Vec<AvatarSlot>> {
    require_ternary(a)?;
    let delta = det(a);
    let slots = AVATAR_ORDER
        .iter()
        .map(|&(i, j)| {
            let k = 3 - i - j;
            let pair = IndexSet::new(vec![i, j], 3).expect("distinct indices");
            let m1 = a.get(i, i).clone();
            let m2 = &m1 * a.get(j, j) - a.get(i, j).square();
            let scale = &m1 * &m2;
            if scale.is_zero() {
                return AvatarSlot::NotApplicable { pivot: i, pair };
            }
            let t = &m1 * a.get(j, k) - a.get(i, j) * a.get(i, k);
            let mut second = vec![Rational::zero(); 3];
            second[j] = m2.clone();
            second[k] = t;
            let terms = vec![
                SquareTerm::new(m2, RVector::new(a.row(i).to_vec())),
                SquareTerm::new(Rational::one(), RVector::new(second)),
                SquareTerm::new(&m1 * &delta, RVector::unit(3, k)),
            ];
            AvatarSlot::Applicable(AvatarIdentity {
                pivot: i,
                pair,
                scale,
                terms,
            })
        })
        .collect();
    Ok(slots)
}

/// The finite family of substitution vectors used to refute nonnegativity
/// of a ternary form, in order: coordinate vectors; for each 2×2 block
/// `[[α, β], [β, γ]]` on (x,y), (x,z), (y,z) the vectors (β, −α), (γ, −β),
/// (1, 1), (1, −1); then the three cyclic cofactor vectors, whose values are
/// `(ac−b²)Δ`, `(cr−q²)Δ` and `(ar−p²)Δ`.
fn candidate_vectors(a: &SymMatrix) -> Vec<RVector> {
    let e = |i, j| a.get(i, j).clone();
    let (pa, pb, pp, pc, pq, pr) = (e(0, 0), e(0, 1), e(0, 2), e(1, 1), e(1, 2), e(2, 2));
    let mut out: Vec<RVector> = (0..3).map(|i| RVector::unit(3, i)).collect();

    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (alpha, beta, gamma) = (e(i, i), e(i, j), e(j, j));
        let pairs = [
            (beta.clone(), -&alpha),
            (gamma, -&beta),
            (Rational::one(), Rational::one()),
            (Rational::one(), -Rational::one()),
        ];
        for (u, v) in pairs {
            let mut x = vec![Rational::zero(); 3];
            x[i] = u;
            x[j] = v;
            out.push(RVector::new(x));
        }
    }

    let bq_cp = &pb * &pq - &pc * &pp;
    let bp_aq = &pb * &pp - &pa * &pq;
    let ac_b2 = &pa * &pc - pb.square();
    let cr_q2 = &pc * &pr - pq.square();
    let pq_br = &pp * &pq - &pb * &pr;
    let ar_p2 = &pa * &pr - pp.square();
    out.push(RVector::new(vec![bq_cp.clone(), bp_aq.clone(), ac_b2]));
    out.push(RVector::new(vec![cr_q2, pq_br.clone(), bq_cp]));
    out.push(RVector::new(vec![pq_br, ar_p2, bp_aq]));
    out
}

/// First vector of the substitution family with a strictly negative value,
/// or `None` when the family does not refute nonnegativity.
pub fn negative_witness_ternary(a: &SymMatrix) -> Result<Option<Witness>> {
    require_ternary(a)?;
    for x in candidate_vectors(a) {
        if let Some(w) = Witness::new(a, x)? {
            if w.value().is_negative() {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::{psd_certificate, verify_certificate, PsdOutcome};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> SymMatrix {
        SymMatrix::from_i64(rows).unwrap()
    }

    #[test]
    fn worked_avatar_instance() {
        // a=2 b=1 p=0 c=2 q=1 r=2, Δ = 4
        let a = m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        let slots = avatar_identities_ternary(&a).unwrap();
        assert_eq!(slots.len(), 6);
        let first = slots[0].identity().unwrap();
        assert_eq!(first.pivot, 0);
        assert_eq!(first.pair.to_string(), "{1,2}");
        assert_eq!(first.scale, Rational::from(6));
        let expected = vec![
            SquareTerm::new(Rational::from(3), RVector::from_i64(&[2, 1, 0])),
            SquareTerm::new(Rational::from(1), RVector::from_i64(&[0, 3, 2])),
            SquareTerm::new(Rational::from(8), RVector::from_i64(&[0, 0, 1])),
        ];
        assert_eq!(first.terms, expected);
        for slot in &slots {
            let id = slot.identity().unwrap();
            assert!(id.holds(&a), "pivot {} pair {}", id.pivot, id.pair);
            assert!(verify_certificate(&a, &id.certificate().unwrap()).unwrap());
        }
    }

    #[test]
    fn paper_order_of_pairs() {
        let a = m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        let labels: Vec<(usize, String)> = avatar_identities_ternary(&a)
            .unwrap()
            .iter()
            .map(|s| {
                let id = s.identity().unwrap();
                (id.pivot + 1, id.pair.to_string())
            })
            .collect();
        let expected: Vec<(usize, String)> = [
            (1, "{1,2}"),
            (1, "{1,3}"),
            (2, "{1,2}"),
            (2, "{2,3}"),
            (3, "{1,3}"),
            (3, "{2,3}"),
        ]
        .iter()
        .map(|(p, s)| (*p, s.to_string()))
        .collect();
        assert_eq!(labels, expected);
    }

    #[test]
    fn identity_avatar_is_plain_squares() {
        let id = SymMatrix::identity(3);
        let first = avatar_identities_ternary(&id).unwrap()[0].identity().unwrap().clone();
        assert!(first.scale.is_one());
        let cert = first.certificate().unwrap();
        assert_eq!(cert.terms().len(), 3);
        for (k, t) in cert.terms().iter().enumerate() {
            assert!(t.weight.is_one());
            assert_eq!(t.form, RVector::unit(3, k));
        }
    }

    #[test]
    fn zero_pivot_slots_not_applicable() {
        let a = m(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let slots = avatar_identities_ternary(&a).unwrap();
        assert!(matches!(slots[0], AvatarSlot::NotApplicable { pivot: 0, .. }));
        assert!(matches!(slots[1], AvatarSlot::NotApplicable { pivot: 0, .. }));
        // M₂ = ac - b² = 0 kills (c; ac-b²) too
        assert!(matches!(slots[2], AvatarSlot::NotApplicable { pivot: 1, .. }));
        assert!(slots[3].identity().is_some());
    }

    #[test]
    fn wrong_dimension() {
        assert!(avatar_identities_ternary(&SymMatrix::identity(2)).is_err());
        assert!(negative_witness_ternary(&SymMatrix::identity(4)).is_err());
    }

    #[test]
    fn ternary_witness_examples() {
        let w = negative_witness_ternary(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]))
            .unwrap()
            .unwrap();
        assert_eq!(w.x(), &RVector::from_i64(&[0, 0, 1]));
        assert_eq!(w.value(), &Rational::from(-1));

        let w = negative_witness_ternary(&m(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 1]]))
            .unwrap()
            .unwrap();
        assert_eq!(w.x(), &RVector::from_i64(&[2, -1, 0]));
        assert_eq!(w.value(), &Rational::from(-3));

        assert!(negative_witness_ternary(&SymMatrix::identity(3)).unwrap().is_none());
    }

    #[test]
    fn cyclic_vectors_give_minor_times_det() {
        let a = m(&[&[3, 1, -2], &[1, 4, 1], &[-2, 1, 5]]);
        let vs = candidate_vectors(&a);
        let delta = det(&a);
        let cyc = &vs[vs.len() - 3..];
        let minors = [
            Rational::from(3 * 4 - 1),
            Rational::from(4 * 5 - 1),
            Rational::from(3 * 5 - 4),
        ];
        for (x, minor) in cyc.iter().zip(minors) {
            assert_eq!(a.evaluate_form(x).unwrap(), minor * &delta);
        }
    }

    fn ternary() -> impl Strategy<Value = SymMatrix> {
        proptest::collection::vec((-4i64..=4, 1i64..=3), 6).prop_map(|v| {
            let idx = [[0, 1, 2], [1, 3, 4], [2, 4, 5]];
            SymMatrix::from_fn(3, |i, j| Rational::from(v[idx[i][j]]))
        })
    }

    proptest! {
        #[test]
        fn every_applicable_avatar_expands(a in ternary()) {
            for slot in avatar_identities_ternary(&a).unwrap() {
                if let AvatarSlot::Applicable(id) = slot {
                    prop_assert!(id.holds(&a));
                }
            }
        }

        #[test]
        fn ternary_witness_implies_congruence_witness(a in ternary()) {
            if let Some(w) = negative_witness_ternary(&a).unwrap() {
                prop_assert!(w.value().is_negative());
                prop_assert!(matches!(psd_certificate(&a), PsdOutcome::Witness(_)));
            }
        }
    }
}
