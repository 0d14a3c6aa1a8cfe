//! Simply-laced root system recognition from the norm-2 shell.

use std::collections::HashSet;
use std::fmt;

use num_traits::ToPrimitive;

use super::{dot, is_lex_positive, sub, Lattice, Result, ShellStore, Vector};
use crate::numerics::RatMatrix;

#[derive(Debug, Clone, PartialEq)]
pub enum RootSystem {
    NoRoots,
    Roots {
        /// Irreducible components as (family, rank), sorted.
        components: Vec<(char, usize)>,
        cartan: RatMatrix,
        simple_roots: Vec<Vector>,
        /// Whether the roots span the lattice over ℤ.
        spans: bool,
    },
    /// Norm-2 vectors whose Dynkin diagram is not of ADE type.
    Unrecognized(String),
}

impl RootSystem {
    pub fn label(&self) -> String {
        match self {
            RootSystem::NoRoots => "no roots".into(),
            RootSystem::Unrecognized(why) => format!("unrecognized ({why})"),
            RootSystem::Roots { components, spans, .. } => {
                let s = components.iter().map(|(c, n)| format!("{c}{n}")).collect::<Vec<_>>().join("+");
                if *spans {
                    s
                } else {
                    format!("{s} (not a root lattice: roots do not span)")
                }
            }
        }
    }

    pub fn is_type(&self, family: char, rank: usize) -> bool {
        matches!(self, RootSystem::Roots { components, spans: true, .. } if components == &[(family, rank)])
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn root_count(family: char, n: usize) -> usize {
    match (family, n) {
        ('A', n) => n * (n + 1),
        ('D', n) => 2 * n * (n - 1),
        ('E', 6) => 72,
        ('E', 7) => 126,
        ('E', 8) => 240,
        _ => 0,
    }
}

fn classify(adj: &[Vec<usize>], nodes: &[usize]) -> std::result::Result<(char, usize), String> {
    let n = nodes.len();
    let edges: usize = nodes.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
    if edges != n - 1 {
        return Err("Dynkin diagram has a cycle".into());
    }
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| adj[v].len() > 2).collect();
    match branch.as_slice() {
        [] => Ok(('A', n)),
        [b] if adj[*b].len() == 3 => {
            let mut arms: Vec<usize> = adj[*b]
                .iter()
                .map(|&start| {
                    let (mut prev, mut cur, mut len) = (*b, start, 1);
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(('D', n)),
                [1, 2, 2] => Ok(('E', 6)),
                [1, 2, 3] => Ok(('E', 7)),
                [1, 2, 4] => Ok(('E', 8)),
                _ => Err(format!("branch arms {arms:?}")),
            }
        }
        _ => Err("more than one branch node".into()),
    }
}

/// Classifies a set of norm-2 vectors spanning part of `lattice`.
pub fn root_system_of_roots(lattice: &Lattice, roots: &[Vector]) -> RootSystem {
    if roots.is_empty() {
        return RootSystem::NoRoots;
    }
    let positive: Vec<&Vector> = roots.iter().filter(|r| is_lex_positive(r)).collect();
    let pos_set: HashSet<&Vector> = positive.iter().copied().collect();
    let simple: Vec<Vector> = positive
        .iter()
        .filter(|r| !positive.iter().any(|p| pos_set.contains(&sub(r, p))))
        .map(|r| (*r).clone())
        .collect();
    let k = simple.len();
    let cartan = RatMatrix::from_rows(
        simple.iter().map(|a| simple.iter().map(|b| dot(a, b)).collect()).collect(),
        k,
    );
    let mut adj = vec![Vec::new(); k];
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            match cartan[(i, j)].to_integer().to_i64() {
                Some(0) => {}
                Some(-1) => adj[i].push(j),
                _ => return RootSystem::Unrecognized(format!("simple roots {i},{j} pair to {}", cartan[(i, j)])),
            }
        }
    }
    let mut seen = vec![false; k];
    let mut components = Vec::new();
    for s in 0..k {
        if seen[s] {
            continue;
        }
        let mut stack = vec![s];
        let mut nodes = Vec::new();
        seen[s] = true;
        while let Some(v) = stack.pop() {
            nodes.push(v);
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        match classify(&adj, &nodes) {
            Ok(c) => components.push(c),
            Err(why) => return RootSystem::Unrecognized(why),
        }
    }
    components.sort_unstable();
    let expected: usize = components.iter().map(|&(c, n)| root_count(c, n)).sum();
    if expected != roots.len() {
        return RootSystem::Unrecognized(format!("{} roots, diagram predicts {expected}", roots.len()));
    }
    let spans = k == lattice.rank() && cartan.det().is_ok_and(|d| d == lattice.det());
    RootSystem::Roots { components, cartan, simple_roots: simple, spans }
}

/// Cartan type of the norm-2 vectors of `lattice`.
pub fn root_system_type(lattice: &Lattice, store: &ShellStore) -> Result<RootSystem> {
    let roots = store.shell(lattice, 2)?;
    Ok(root_system_of_roots(lattice, &roots.vectors))
}
