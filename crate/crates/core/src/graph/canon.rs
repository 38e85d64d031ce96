//! Canonical labelling by colour refinement plus individualisation.
//!
//! Exhaustive (no automorphism pruning), so only suitable for small graphs.

use super::Graph;

type Partition = Vec<Vec<usize>>;

fn refine(adj: &[Vec<bool>], mut cells: Partition) -> Partition {
    loop {
        let n = adj.len();
        let mut cell_of = vec![0; n];
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0; cells.len()];
                    for (u, &e) in adj[v].iter().enumerate() {
                        if e {
                            sig[cell_of[u]] += 1;
                        }
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut group: Vec<usize> = Vec::new();
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut group));
                }
                group.push(keyed[i].1);
            }
            next.push(group);
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn certificate(adj: &[Vec<bool>], order: &[usize]) -> Vec<bool> {
    let n = order.len();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(adj[order[i]][order[j]]);
        }
    }
    bits
}

fn search(adj: &[Vec<bool>], cells: Partition, best: &mut Option<(Vec<bool>, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let cert = certificate(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| cert > *b) {
            *best = Some((cert, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut child: Partition = Vec::with_capacity(cells.len() + 1);
        child.extend(cells[..target].iter().cloned());
        child.push(vec![v]);
        child.push(cells[target].iter().copied().filter(|&u| u != v).collect());
        child.extend(cells[target + 1..].iter().cloned());
        search(adj, child, best);
    }
}

/// Relabelled copy of `g` that is identical for all isomorphic inputs.
pub fn canonical_form(g: &Graph) -> Graph {
    let n = g.n();
    if n == 0 {
        return g.clone();
    }
    let mut adj = vec![vec![false; n]; n];
    for &(a, b) in g.edges() {
        adj[a][b] = true;
        adj[b][a] = true;
    }
    let mut best = None;
    search(&adj, vec![(0..n).collect()], &mut best);
    let (_, order) = best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.m() == h.m() && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabellings_share_a_form() {
        let g = Graph::petersen();
        let perm = [3, 7, 1, 9, 0, 2, 8, 4, 6, 5];
        assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        assert!(!is_isomorphic(&Graph::path(4), &Graph::star(3)));
        assert!(!is_isomorphic(&Graph::cycle(6), &{
            // two triangles
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
        }));
    }
}
