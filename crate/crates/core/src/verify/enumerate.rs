use crate::lattice::{Elem, Lattice};

/// Ground sets up to this size have every non-empty subset enumerated.
pub const ALL_SUBSETS_MAX: usize = 12;
/// Posets up to this size have every chain enumerated.
pub const ALL_CHAINS_MAX: usize = 8;

/// Non-empty families drawn from `items`: every subset when there are at
/// most [`ALL_SUBSETS_MAX`] items, otherwise all singletons, pairs, triples
/// and the full set.
pub fn families(items: &[Elem]) -> Vec<Vec<Elem>> {
    let n = items.len();
    if n <= ALL_SUBSETS_MAX {
        return (1u32..(1 << n))
            .map(|mask| {
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| items[i])
                    .collect()
            })
            .collect();
    }
    let mut out: Vec<Vec<Elem>> = Vec::new();
    for i in 0..n {
        out.push(vec![items[i]]);
        for j in (i + 1)..n {
            out.push(vec![items[i], items[j]]);
            for k in (j + 1)..n {
                out.push(vec![items[i], items[j], items[k]]);
            }
        }
    }
    out.push(items.to_vec());
    out
}

/// Non-empty chains inside `items` (ordered bottom-up): all of them when
/// there are at most [`ALL_CHAINS_MAX`] items, otherwise the maximal chains
/// of the sub-order together with all one- and two-element chains.
pub fn chains(lat: &Lattice, items: &[Elem]) -> Vec<Vec<Elem>> {
    let mut sorted = items.to_vec();
    // A linear extension, so subsets that are chains come out bottom-up.
    sorted.sort_by_key(|&x| (items.iter().filter(|&&y| lat.lt(y, x)).count(), x));
    let n = sorted.len();
    if n <= ALL_CHAINS_MAX {
        return (1u32..(1 << n))
            .map(|mask| {
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| sorted[i])
                    .collect::<Vec<_>>()
            })
            .filter(|c| lat.is_chain(c))
            .collect();
    }
    let mut out: Vec<Vec<Elem>> = Vec::new();
    for (i, &a) in sorted.iter().enumerate() {
        out.push(vec![a]);
        for &b in &sorted[i + 1..] {
            if lat.lt(a, b) {
                out.push(vec![a, b]);
            }
        }
    }
    let covers = |x: Elem| -> Vec<Elem> {
        sorted
            .iter()
            .copied()
            .filter(|&y| lat.lt(x, y) && !sorted.iter().any(|&z| lat.lt(x, z) && lat.lt(z, y)))
            .collect()
    };
    let mut stack: Vec<Vec<Elem>> = sorted
        .iter()
        .copied()
        .filter(|&x| !sorted.iter().any(|&y| lat.lt(y, x)))
        .map(|x| vec![x])
        .collect();
    while let Some(chain) = stack.pop() {
        let next = covers(*chain.last().expect("chains are non-empty"));
        if next.is_empty() {
            if chain.len() > 2 {
                out.push(chain);
            }
            continue;
        }
        for y in next {
            let mut longer = chain.clone();
            longer.push(y);
            stack.push(longer);
        }
    }
    out
}
