//! Product ultrafilters on a product algebra: the rectangle-generated
//! filter, the slice criterion for membership, and the dual comparison
//! under coordinate swap.

use ba_kernel::{Element, Product};
use names::Filter;

use crate::{Result, Ultrafilter, UltraError};

/// The filter generated by rectangles with large sides. In the finite
/// setting this is the principal filter at the rectangle of the two
/// selected atoms, and is itself an ultrafilter.
pub fn rectangle_filter(
    prod: &Product,
    u0: &Ultrafilter,
    u1: &Ultrafilter,
) -> Result<Ultrafilter> {
    check_sides(prod, u0, u1)?;
    let algebra = prod.algebra();
    let mut generators = vec![algebra.one()];
    for b in u0.algebra()?.elements() {
        if u0.contains(b)? {
            for c in u1.algebra()?.elements() {
                if u1.contains(c)? {
                    generators.push(prod.rectangle(b, c));
                }
            }
        }
    }
    let bottom = algebra.big_meet(generators)?;
    Ultrafilter::explicit(Filter::principal(algebra, bottom)?)
}

/// Membership in the product ultrafilter by the slice criterion: the join
/// of the left atoms whose right slice is large must itself be large.
pub fn product_filter_membership(
    prod: &Product,
    x: Element,
    u0: &Ultrafilter,
    u1: &Ultrafilter,
) -> Result<bool> {
    check_sides(prod, u0, u1)?;
    let left = u0.algebra()?;
    let right = u1.algebra()?;
    let mut big_slices = Vec::new();
    for i in 0..prod.left_atom_count() {
        // The slice of x over left atom i: the right-hand element whose
        // atoms are exactly those paired with i inside x.
        let mut slice_atoms = Vec::new();
        for j in 0..prod.right_atom_count() {
            if prod.algebra().atom(prod.atom_index(i, j)).leq(x) {
                slice_atoms.push(j);
            }
        }
        let slice = right.element_from_atoms(&slice_atoms)?;
        if u1.contains(slice)? {
            big_slices.push(i);
        }
    }
    u0.contains(left.element_from_atoms(&big_slices)?)
}

/// One compared product element: rectangle-filter membership against the
/// slice criterion, and the swapped dual.
#[derive(Debug, Clone)]
pub struct RectangleProductReport {
    pub cases: usize,
    pub agree: bool,
    pub is_ultra: bool,
    pub dual_swap_matches: bool,
}

impl RectangleProductReport {
    pub fn ok(&self) -> bool {
        self.agree && self.is_ultra && self.dual_swap_matches
    }
}

/// Sweeps every element of the product algebra: the rectangle filter and
/// the slice criterion must induce the same membership predicate, and the
/// dual product (coordinates swapped) must match under the swap map.
pub fn rectangle_product_report(
    prod: &Product,
    dual: &Product,
    u0: &Ultrafilter,
    u1: &Ultrafilter,
) -> Result<RectangleProductReport> {
    let filter = rectangle_filter(prod, u0, u1)?;
    let is_ultra = filter.laws()?.all();
    let mut agree = true;
    let mut dual_swap_matches = true;
    let mut cases = 0;
    for x in prod.algebra().elements() {
        cases += 1;
        let by_filter = filter.contains(x)?;
        let by_slices = product_filter_membership(prod, x, u0, u1)?;
        if by_filter != by_slices {
            agree = false;
        }
        // Transport x across the coordinate swap and apply the dual
        // criterion with the ultrafilters exchanged.
        let mut swapped_atoms = Vec::new();
        for k in 0..prod.algebra().atom_count() {
            if prod.algebra().atom(k).leq(x) {
                let (i, j) = prod.atom_pair(k);
                swapped_atoms.push(dual.atom_index(j, i));
            }
        }
        let swapped = dual.algebra().element_from_atoms(&swapped_atoms)?;
        if product_filter_membership(dual, swapped, u1, u0)? != by_slices {
            dual_swap_matches = false;
        }
    }
    Ok(RectangleProductReport {
        cases,
        agree,
        is_ultra,
        dual_swap_matches,
    })
}

fn check_sides(prod: &Product, u0: &Ultrafilter, u1: &Ultrafilter) -> Result<()> {
    if u0.algebra()?.atom_count() != prod.left_atom_count()
        || u1.algebra()?.atom_count() != prod.right_atom_count()
    {
        return Err(UltraError::BadInput(
            "ultrafilter algebras do not match the product sides".to_string(),
        ));
    }
    Ok(())
}
