//! Skeleton comparison of groupoids and small-group isomorphism.

use std::collections::HashMap;

use crate::groupoid::core::Groupoid;

/// Largest group order for which [`groups_isomorphic`] searches.
pub const GROUP_ISO_LIMIT: usize = 16;

/// True iff there is a bijection of isomorphism classes preserving
/// automorphism-group orders.
pub fn equivalent(g: &Groupoid, h: &Groupoid) -> bool {
    skeleton_orders(g) == skeleton_orders(h)
}

/// Sorted automorphism-group orders, one per isomorphism class.
pub fn skeleton_orders(g: &Groupoid) -> Vec<usize> {
    let mut orders: Vec<usize> = g.iso_classes().iter().map(|c| c.aut_order).collect();
    orders.sort_unstable();
    orders
}

/// Like [`equivalent`] but also matching vertex groups up to isomorphism.
/// `None` when some vertex group exceeds [`GROUP_ISO_LIMIT`].
pub fn equivalent_strict(g: &Groupoid, h: &Groupoid) -> Option<bool> {
    let tables = |x: &Groupoid| -> Vec<Vec<Vec<u32>>> {
        x.iso_classes()
            .iter()
            .map(|c| x.automorphism_table(c.representative))
            .collect()
    };
    let (tg, mut th) = (tables(g), tables(h));
    if tg.len() != th.len() {
        return Some(false);
    }
    if tg.iter().chain(&th).any(|t| t.len() > GROUP_ISO_LIMIT) {
        return None;
    }
    // greedy matching is exact here: isomorphism is an equivalence relation
    for a in &tg {
        match th.iter().position(|b| groups_isomorphic(a, b) == Some(true)) {
            Some(i) => {
                th.swap_remove(i);
            }
            None => return Some(false),
        }
    }
    Some(true)
}

/// Isomorphism of groups given by tables `mult[h][g] = hg`, by search over
/// images of a generating set. `None` above [`GROUP_ISO_LIMIT`].
pub fn groups_isomorphic(a: &[Vec<u32>], b: &[Vec<u32>]) -> Option<bool> {
    let n = a.len();
    if n > GROUP_ISO_LIMIT || b.len() > GROUP_ISO_LIMIT {
        return None;
    }
    if n != b.len() {
        return Some(false);
    }
    if element_orders(a) != element_orders(b) {
        return Some(false);
    }
    let gens = generators(a);
    let ea = identity(a);
    let eb = identity(b);
    let mut images = vec![0usize; gens.len()];
    loop {
        if let Some(map) = extend(a, b, ea, eb, &gens, &images) {
            let mut seen = vec![false; n];
            if map.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                return Some(true);
            }
        }
        // odometer over image tuples
        let mut k = 0;
        loop {
            if k == images.len() {
                return Some(false);
            }
            images[k] += 1;
            if images[k] < n {
                break;
            }
            images[k] = 0;
            k += 1;
        }
    }
}

fn identity(t: &[Vec<u32>]) -> usize {
    (0..t.len())
        .find(|&e| (0..t.len()).all(|g| t[e][g] as usize == g))
        .expect("group identity")
}

fn element_orders(t: &[Vec<u32>]) -> Vec<usize> {
    let e = identity(t);
    let mut orders: Vec<usize> = (0..t.len())
        .map(|g| {
            let (mut x, mut k) = (g, 1);
            while x != e {
                x = t[g][x] as usize;
                k += 1;
            }
            k
        })
        .collect();
    orders.sort_unstable();
    orders
}

/// Greedy generating set: add the least element outside the current subgroup.
fn generators(t: &[Vec<u32>]) -> Vec<usize> {
    let e = identity(t);
    let mut gens = Vec::new();
    let mut sub = vec![e];
    let closure = |gens: &[usize]| -> Vec<usize> {
        let mut seen = vec![false; t.len()];
        seen[e] = true;
        let mut stack = vec![e];
        let mut out = vec![e];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = t[g][x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                    out.push(y);
                }
            }
        }
        out
    };
    while sub.len() < t.len() {
        let g = (0..t.len())
            .find(|x| !sub.contains(x))
            .expect("element outside subgroup");
        gens.push(g);
        sub = closure(&gens);
    }
    gens
}

/// The homomorphism sending `gens[i] ↦ images[i]`, if it is well defined.
fn extend(
    a: &[Vec<u32>],
    b: &[Vec<u32>],
    ea: usize,
    eb: usize,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let mut map: HashMap<usize, usize> = HashMap::from([(ea, eb)]);
    let mut stack = vec![ea];
    while let Some(x) = stack.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = a[g][x] as usize;
            let fy = b[img][map[&x]] as usize;
            match map.get(&y) {
                Some(&v) if v != fy => return None,
                Some(_) => {}
                None => {
                    map.insert(y, fy);
                    stack.push(y);
                }
            }
        }
    }
    let mut out = vec![0; a.len()];
    for (x, y) in map {
        out[x] = y;
    }
    // a well-defined map on words is multiplicative once consistent on every edge
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupoid::core::{cyclic_table, permutations};

    fn product_table(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let m = b.len();
        let n = a.len() * m;
        (0..n)
            .map(|h| (0..n).map(|g| a[h / m][g / m] * m as u32 + b[h % m][g % m]).collect())
            .collect()
    }

    fn symmetric_table(k: usize) -> Vec<Vec<u32>> {
        let perms = permutations(k);
        let pos: HashMap<Vec<u32>, u32> = perms.iter().cloned().zip(0..).collect();
        perms
            .iter()
            .map(|h| {
                perms
                    .iter()
                    .map(|g| pos[&g.iter().map(|&i| h[i as usize]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_groups() {
        let z4 = cyclic_table(4);
        let v4 = product_table(&cyclic_table(2), &cyclic_table(2));
        assert_eq!(groups_isomorphic(&z4, &z4), Some(true));
        assert_eq!(groups_isomorphic(&z4, &v4), Some(false));
        let z6 = cyclic_table(6);
        let z2z3 = product_table(&cyclic_table(2), &cyclic_table(3));
        assert_eq!(groups_isomorphic(&z6, &z2z3), Some(true));
        assert_eq!(groups_isomorphic(&z6, &symmetric_table(3)), Some(false));
        // Z/4 × Z/4 and Z/2 × Z/8 share order 16 but not element orders
        let z4z4 = product_table(&z4, &z4);
        assert_eq!(
            groups_isomorphic(&z4z4, &product_table(&cyclic_table(2), &cyclic_table(8))),
            Some(false)
        );
        assert_eq!(groups_isomorphic(&z4z4, &z4z4), Some(true));
        assert_eq!(groups_isomorphic(&symmetric_table(4), &symmetric_table(4)), None);
    }

    #[test]
    fn skeletons() {
        let g = Groupoid::connected_cyclic(2, 3);
        assert!(equivalent(&g, &g));
        assert!(equivalent(&g, &Groupoid::cyclic_group(3)));
        assert_eq!(equivalent_strict(&g, &Groupoid::cyclic_group(3)), Some(true));
        assert!(!equivalent(&Groupoid::discrete(2), &Groupoid::cyclic_group(2)));
        let v4 = Groupoid::one_object_group(product_table(&cyclic_table(2), &cyclic_table(2))).unwrap();
        assert!(equivalent(&v4, &Groupoid::cyclic_group(4)));
        assert_eq!(equivalent_strict(&v4, &Groupoid::cyclic_group(4)), Some(false));
    }
}
