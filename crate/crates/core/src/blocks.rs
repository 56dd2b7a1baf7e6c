//! Contributions `⟨χ, ψ⟩_C` and the blocks they generate.

use num_bigint::BigInt;
use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::table::{complement, CharacterTable};

/// `(1/|G|)·Σ_{c ∈ subset} |c|·χ_i(c)·conj(χ_j(c))`.
pub fn contribution(table: &CharacterTable, i: usize, j: usize, subset: &[usize]) -> Cyclotomic {
    let sum: Cyclotomic = subset
        .iter()
        .map(|&c| {
            let size = Rational::from_integer(BigInt::from(table.class_sizes()[c].clone()));
            (table.value(i, c) * &table.value(j, c).conj()).scale(&size)
        })
        .sum();
    sum.scale(&Rational::new(
        BigInt::from(1),
        BigInt::from(table.order().clone()),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContributionMatrix {
    pub subset_label: String,
    pub subset: Vec<usize>,
    /// Character indices of the rows/columns.
    pub rows: Vec<usize>,
    pub values: Vec<Vec<Cyclotomic>>,
}

impl ContributionMatrix {
    pub fn new(
        table: &CharacterTable,
        rows: &[usize],
        subset: &[usize],
        subset_label: impl Into<String>,
    ) -> Self {
        let values = rows
            .iter()
            .map(|&i| rows.iter().map(|&j| contribution(table, i, j, subset)).collect())
            .collect();
        ContributionMatrix {
            subset_label: subset_label.into(),
            subset: subset.to_vec(),
            rows: rows.to_vec(),
            values,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    /// Each block sorted ascending; blocks ordered by their least element.
    pub blocks: Vec<Vec<usize>>,
    pub principal: usize,
}

impl BlockPartition {
    pub fn principal_block(&self) -> &[usize] {
        &self.blocks[self.principal]
    }

    pub fn block_of(&self, chi: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(&chi))
            .expect("blocks cover all characters")
    }

    fn from_components(uf: UnionFind<usize>, n: usize, trivial: usize) -> Self {
        let labels = uf.into_labeling();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut root_to_block = std::collections::HashMap::new();
        for (i, &root) in labels.iter().enumerate().take(n) {
            let b = *root_to_block.entry(root).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
        }
        let principal = blocks
            .iter()
            .position(|b| b.contains(&trivial))
            .expect("trivial character present");
        BlockPartition { blocks, principal }
    }
}

/// Connected components of the graph on characters with an edge wherever
/// the contribution across `subset` is nonzero.
pub fn block_partition(table: &CharacterTable, subset: &[usize]) -> BlockPartition {
    let n = table.num_chars();
    let mut uf = UnionFind::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if !contribution(table, i, j, subset).is_zero() {
                uf.union(i, j);
            }
        }
    }
    BlockPartition::from_components(uf, n, table.trivial())
}

/// Blocks of a table across its own singular set.
pub fn singular_blocks(table: &CharacterTable) -> BlockPartition {
    block_partition(table, table.singular())
}

/// Blocks of `A × B` when linking only across classes singular in `A`:
/// each block `b` of `A` gives the blocks `b × {j}`, `j ∈ Irr(B)`, with
/// characters in Kronecker order `i·n_b + j`.
pub fn product_group_blocks(a: &BlockPartition, n_b: usize, trivial_b: usize) -> BlockPartition {
    let mut blocks: Vec<Vec<usize>> = a
        .blocks
        .iter()
        .flat_map(|block| (0..n_b).map(move |j| block.iter().map(|&i| i * n_b + j).collect()))
        .collect();
    blocks.sort_by_key(|b| b[0]);
    let principal_first = a.principal_block()[0] * n_b + trivial_b;
    let principal = blocks
        .iter()
        .position(|b| b[0] == principal_first)
        .expect("principal block present");
    BlockPartition { blocks, principal }
}

/// Complement of a class subset.
pub fn complement_subset(table: &CharacterTable, subset: &[usize]) -> Vec<usize> {
    complement(subset, table.num_classes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normalizer::build_normalizer;
    use crate::partition::enumerate_partitions;
    use crate::symmetric::{ell_singular_classes, sn_character_table};

    #[test]
    fn basic_contributions() {
        let t = sn_character_table(4).unwrap();
        let all: Vec<usize> = (0..t.num_classes()).collect();
        assert!(contribution(&t, 0, 0, &all).is_one());
        for i in 0..t.num_chars() {
            for j in 0..t.num_chars() {
                if i != j {
                    assert!(contribution(&t, i, j, &all).is_zero());
                }
            }
        }
    }

    #[test]
    fn s3_blocks() {
        let t = sn_character_table(3).unwrap();
        let b3 = block_partition(&t, &ell_singular_classes(3, 3));
        assert_eq!(b3.blocks, vec![vec![0, 1, 2]]);
        let b2 = block_partition(&t, &ell_singular_classes(3, 2));
        // Characters (3), (2,1), (1^3).
        assert_eq!(b2.blocks, vec![vec![0, 2], vec![1]]);
        assert_eq!(b2.principal, 0);
    }

    #[test]
    fn complementary_subsets_agree() {
        for n in 2..=6 {
            let t = sn_character_table(n).unwrap();
            for ell in 2..=4 {
                let sing = ell_singular_classes(n, ell);
                let reg = complement_subset(&t, &sing);
                assert_eq!(block_partition(&t, &sing), block_partition(&t, &reg));
                for i in 0..t.num_chars() {
                    for j in 0..t.num_chars() {
                        let s = &contribution(&t, i, j, &sing) + &contribution(&t, i, j, &reg);
                        assert_eq!(s, Cyclotomic::from(i64::from(i == j)));
                    }
                }
            }
        }
        assert_eq!(enumerate_partitions(3).len(), 3);
    }

    #[test]
    fn product_rule() {
        let a = BlockPartition {
            blocks: vec![vec![0, 1], vec![2]],
            principal: 0,
        };
        assert_eq!(product_group_blocks(&a, 1, 0), a);
        let p = product_group_blocks(&a, 2, 1);
        assert_eq!(p.blocks.len(), 4);
        assert_eq!(p.blocks.iter().map(Vec::len).sum::<usize>(), 6);
        assert_eq!(p.principal_block(), &[1, 3]);
    }

    #[test]
    fn product_rule_matches_direct_computation() {
        let n2 = build_normalizer(2).unwrap().group_data().table;
        let s2 = sn_character_table(2).unwrap();
        let prod = n2.direct_product(&s2);
        let direct = block_partition(&prod, prod.singular());
        let composed = product_group_blocks(
            &block_partition(&n2, n2.singular()),
            s2.num_chars(),
            s2.trivial(),
        );
        assert_eq!(direct, composed);
    }
}
