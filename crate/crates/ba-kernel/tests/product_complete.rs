//! Product and iteration embeddings preserve arbitrary joins (checked over
//! every subset, through 4 atoms per factor), and the product construction
//! agrees with the definitional regular-open oracle on the pair pre-order.

use ba_kernel::{iteration_algebra, product_algebra, Algebra, Element, Poset};

fn all_subsets(algebra: &Algebra) -> Vec<Vec<Element>> {
    let elements: Vec<Element> = algebra.elements().collect();
    let mut out = Vec::with_capacity(1 << elements.len());
    for pick in 0u64..(1 << elements.len()) {
        out.push(
            elements
                .iter()
                .enumerate()
                .filter(|(i, _)| pick >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect(),
        );
    }
    out
}

#[test]
fn product_embeddings_are_complete() {
    for (n0, n1) in [(1, 1), (2, 2), (2, 3), (4, 4), (3, 4)] {
        let b0 = Algebra::new(n0).unwrap();
        let b1 = Algebra::new(n1).unwrap();
        let p = product_algebra(&b0, &b1).unwrap();
        let target = p.algebra();

        for subset in all_subsets(&b0) {
            let join_then_embed = p.embed_left(b0.big_join(subset.iter().copied()).unwrap());
            let embed_then_join = target
                .big_join(subset.iter().map(|&e| p.embed_left(e)))
                .unwrap();
            assert_eq!(join_then_embed, embed_then_join);
        }
        for subset in all_subsets(&b1) {
            let join_then_embed = p.embed_right(b1.big_join(subset.iter().copied()).unwrap());
            let embed_then_join = target
                .big_join(subset.iter().map(|&e| p.embed_right(e)))
                .unwrap();
            assert_eq!(join_then_embed, embed_then_join);
        }

        // Meets and complements too: the embeddings are Boolean, not just
        // join-complete.
        for x in b0.elements() {
            assert_eq!(!p.embed_left(x), p.embed_left(!x));
            for y in b0.elements() {
                assert_eq!(p.embed_left(x) & p.embed_left(y), p.embed_left(x & y));
            }
        }

        // Rectangles commute.
        for x in b0.elements() {
            for y in b1.elements() {
                assert_eq!(p.embed_left(x) & p.embed_right(y), p.rectangle(x, y));
            }
        }
    }
}

#[test]
fn iteration_base_embedding_is_complete() {
    let b0 = Algebra::new(2).unwrap();
    let fibers = vec![Algebra::new(2).unwrap(), Algebra::new(3).unwrap()];
    let it = iteration_algebra(&b0, &fibers).unwrap();
    for subset in all_subsets(&b0) {
        let join_then_embed = it.embed_base(b0.big_join(subset.iter().copied()).unwrap());
        let embed_then_join = it
            .algebra()
            .big_join(subset.iter().map(|&e| it.embed_base(e)))
            .unwrap();
        assert_eq!(join_then_embed, embed_then_join);
    }
    for x in b0.elements() {
        assert_eq!(!it.embed_base(x), it.embed_base(!x));
    }
}

#[test]
fn product_matches_pair_preorder_oracle() {
    // Nodes: pairs of nonzero elements, ordered coordinatewise. The
    // regular-open count of that poset must be 2^(product atoms).
    let b0 = Algebra::new(2).unwrap();
    let b1 = Algebra::new(2).unwrap();
    let p = product_algebra(&b0, &b1).unwrap();

    let pairs: Vec<(Element, Element)> = b0
        .nonzero_elements()
        .flat_map(|x| b1.nonzero_elements().map(move |y| (x, y)))
        .collect();
    let mut leq = Vec::new();
    for (i, &(x0, y0)) in pairs.iter().enumerate() {
        for (j, &(x1, y1)) in pairs.iter().enumerate() {
            if i != j && x0.leq(x1) && y0.leq(y1) {
                leq.push((i, j));
            }
        }
    }
    let nodes = (0..pairs.len()).map(|i| format!("n{i}")).collect();
    let poset = Poset::new(nodes, &leq).unwrap();
    let oracle = poset.ro_oracle().unwrap();
    assert_eq!(oracle.algebra().atom_count(), p.algebra().atom_count());
    assert_eq!(oracle.count(), 1 << p.algebra().atom_count());
}
