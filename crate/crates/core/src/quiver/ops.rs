use super::{QuiverRep, RepMorphism};
use crate::linalg::Matrix;

/// Builds the representation carried by subspaces `basis[v]` of `ambient`
/// (one basis per column), which must be closed under the arrows.
fn restrict_to_subspaces(ambient: &QuiverRep, basis: &[Matrix]) -> QuiverRep {
    let f = ambient.field();
    let quiver = ambient.quiver();
    let dims = basis.iter().map(Matrix::cols).collect();
    let mats = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let moved = ambient.mat(i).mul(&basis[a.source], f);
            basis[a.target]
                .solve(&moved, f)
                .expect("subspace family is closed under the arrows")
        })
        .collect();
    QuiverRep::new(quiver.clone(), f, dims, mats).expect("restriction has consistent shapes")
}

/// Kernel of `f` with its inclusion into the source.
pub fn kernel(f: &RepMorphism) -> (QuiverRep, RepMorphism) {
    let field = f.source().field();
    let basis: Vec<Matrix> = f.comps().iter().map(|c| c.nullspace(field)).collect();
    let k = restrict_to_subspaces(f.source(), &basis);
    let inclusion = RepMorphism::new_unchecked(k.clone(), f.source().clone(), basis);
    (k, inclusion)
}

/// Image of `f` with its inclusion into the target.
pub fn image(f: &RepMorphism) -> (QuiverRep, RepMorphism) {
    let field = f.source().field();
    let basis: Vec<Matrix> = f.comps().iter().map(|c| c.column_space(field)).collect();
    let im = restrict_to_subspaces(f.target(), &basis);
    let inclusion = RepMorphism::new_unchecked(im.clone(), f.target().clone(), basis);
    (im, inclusion)
}

/// Cokernel of `f` with the projection from the target.
pub fn cokernel(f: &RepMorphism) -> (QuiverRep, RepMorphism) {
    let field = f.source().field();
    let y = f.target();
    let quiver = y.quiver();
    let mut sections = Vec::with_capacity(y.dims().len());
    let mut projections = Vec::with_capacity(y.dims().len());
    for (v, c) in f.comps().iter().enumerate() {
        let img = c.column_space(field);
        let comp = img.complement(field);
        let change = img
            .hstack(&comp)
            .inverse(field)
            .expect("image plus complement is a basis");
        projections.push(change.rows_range(img.cols()..y.dim(v)));
        sections.push(comp);
    }
    let dims = sections.iter().map(Matrix::cols).collect();
    let mats = quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            projections[a.target]
                .mul(y.mat(i), field)
                .mul(&sections[a.source], field)
        })
        .collect();
    let q = QuiverRep::new(quiver.clone(), field, dims, mats).expect("quotient shapes agree");
    let projection = RepMorphism::new_unchecked(y.clone(), q.clone(), projections);
    (q, projection)
}

/// Sum of all simple subrepresentations: at each vertex, the common kernel
/// of the arrows leaving it. The socle's own arrows are zero.
pub fn socle(x: &QuiverRep) -> QuiverRep {
    let f = x.field();
    let quiver = x.quiver();
    let basis: Vec<Matrix> = (0..quiver.vertex_count())
        .map(|v| {
            let stacked = quiver
                .outgoing(v)
                .fold(Matrix::zeros(0, x.dim(v)), |acc, (i, _)| acc.vstack(x.mat(i)));
            stacked.nullspace(f)
        })
        .collect();
    restrict_to_subspaces(x, &basis)
}
