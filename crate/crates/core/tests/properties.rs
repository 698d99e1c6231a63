use proptest::prelude::*;

use grasslab::ringline::{act, make_point, phi, Frame, Gl2Element};
use grasslab::{Field, FpMatrix, Subspace};

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![2u32, 3, 5, 7]).prop_map(|p| Field::new(p).unwrap())
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = FpMatrix> {
    (field(), prop::collection::vec(0i64..7, rows * cols))
        .prop_map(move |(f, data)| FpMatrix::from_vec(f, rows, cols, data).unwrap())
}

fn any_matrix() -> impl Strategy<Value = FpMatrix> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))
}

proptest! {
    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.rank, r.pivots.len());
    }

    #[test]
    fn rref_preserves_row_space(m in any_matrix()) {
        let r = m.rref();
        prop_assert_eq!(Subspace::row_space(&r.matrix), Subspace::row_space(&m));
        for row in m.row_iter() {
            prop_assert!(Subspace::row_space(&r.matrix).contains_vector(row));
        }
    }

    #[test]
    fn invert_round_trip(m in (1usize..5).prop_flat_map(|n| matrix(n, n))) {
        match m.invert() {
            Ok(inv) => {
                prop_assert!(m.matmul(&inv).unwrap().is_identity());
                prop_assert!(inv.matmul(&m).unwrap().is_identity());
            }
            Err(_) => prop_assert!(m.rank() < m.rows()),
        }
    }

    #[test]
    fn canonical_form_ignores_basis_choice(m in matrix(3, 5), g in prop::collection::vec(0i64..7, 9)) {
        let g = FpMatrix::from_vec(m.field(), 3, 3, g).unwrap();
        prop_assume!(g.is_invertible());
        prop_assert_eq!(Subspace::row_space(&g.matmul(&m).unwrap()), Subspace::row_space(&m));
    }

    #[test]
    fn dimension_formula(a in matrix(3, 5), b in prop::collection::vec(0i64..7, 15)) {
        let b = FpMatrix::from_vec(a.field(), 3, 5, b).unwrap();
        let (x, y) = (Subspace::row_space(&a), Subspace::row_space(&b));
        let (s, i) = (x.sum(&y).unwrap(), x.intersect(&y).unwrap());
        prop_assert_eq!(s.dim() + i.dim(), x.dim() + y.dim());
        prop_assert!(s.contains(&x).unwrap() && x.contains(&i).unwrap());
        prop_assert_eq!(x.annihilator().annihilator(), x.clone());
        prop_assert_eq!(x.annihilator().dim() + x.dim(), 5);
    }

    #[test]
    fn make_point_left_invariant(
        ab in matrix(2, 4),
        g in prop::collection::vec(0i64..7, 4),
    ) {
        let f = ab.field();
        let g = FpMatrix::from_vec(f, 2, 2, g).unwrap();
        prop_assume!(g.is_invertible());
        let (a, b) = (ab.select_cols(0..2), ab.select_cols(2..4));
        match make_point(&a, &b) {
            Ok(pt) => {
                let moved = make_point(&g.matmul(&a).unwrap(), &g.matmul(&b).unwrap()).unwrap();
                prop_assert_eq!(moved, pt);
            }
            Err(e) => prop_assert_eq!(e, grasslab::Error::NotAdmissible),
        }
    }

    #[test]
    fn action_law_and_equivariance(
        f in field(),
        seeds in prop::collection::vec(0i64..7, 16 * 2 + 8),
    ) {
        let m1 = FpMatrix::from_vec(f, 4, 4, seeds[..16].to_vec()).unwrap();
        let m2 = FpMatrix::from_vec(f, 4, 4, seeds[16..32].to_vec()).unwrap();
        let ab = FpMatrix::from_vec(f, 2, 4, seeds[32..].to_vec()).unwrap();
        prop_assume!(m1.is_invertible() && m2.is_invertible() && ab.rank() == 2);
        let (p1, p2) = (Gl2Element::from_matrix(m1).unwrap(), Gl2Element::from_matrix(m2).unwrap());
        let pt = make_point(&ab.select_cols(0..2), &ab.select_cols(2..4)).unwrap();
        prop_assert_eq!(act(&p1.compose(&p2), &pt).unwrap(), act(&p2, &act(&p1, &pt).unwrap()).unwrap());
        let fr = Frame::standard(f, 2);
        let h = grasslab::ringline::hat(&p1, &fr).unwrap();
        prop_assert_eq!(phi(&act(&p1, &pt).unwrap(), &fr).unwrap(), phi(&pt, &fr).unwrap().map(&h).unwrap());
    }
}
