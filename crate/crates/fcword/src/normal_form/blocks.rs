use serde::Serialize;

use crate::coxeter::Gen;
use crate::error::Result;
use crate::normal_form::affine::{period_word, AffineNormalForm, Residue};

/// short · (period)^k · residue, where the residue is a_{n+1} followed by the tail.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub short: Vec<Gen>,
    pub period: Vec<Gen>,
    pub k: usize,
    pub residue: Vec<Gen>,
}

impl BlockDecomposition {
    /// An element is short when its convergent block is trivial.
    pub fn is_short(&self) -> bool {
        self.k == 0
    }

    pub fn to_word(&self) -> Vec<Gen> {
        let mut w = self.short.clone();
        for _ in 0..self.k {
            w.extend(&self.period);
        }
        w.extend(&self.residue);
        w
    }
}

pub fn block_decomposition(nf: &AffineNormalForm) -> Result<BlockDecomposition> {
    let word = nf.to_word()?;
    let a = nf.n + 1;
    let mut period = Vec::new();
    if nf.k > 0 {
        period.push(a);
        period.extend(period_word(nf.n, nf.j));
    }
    let tail_len = match &nf.residue {
        Residue::Finite { runs } => runs.iter().map(|&(l, g)| l + 1 - g).sum::<usize>(),
        Residue::Staircase { d } => d.iter().enumerate().map(|(c, &dc)| nf.j + c + 1 - dc).sum(),
    };
    let residue_len = tail_len + nf.residue_a as usize;
    let short_len = word.len() - residue_len - nf.k * period.len();
    Ok(BlockDecomposition {
        short: word[..short_len].to_vec(),
        period,
        k: nf.k,
        residue: word[word.len() - residue_len..].to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterType;
    use crate::normal_form::affine::affine_nf;
    use crate::perm::word_to_element;

    fn blocks(n: usize, w: &[Gen]) -> BlockDecomposition {
        let x = word_to_element(CoxeterType::affine(n).unwrap(), w).unwrap();
        block_decomposition(&affine_nf(&x).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let b = blocks(3, &[4, 2, 1, 3, 4, 2, 1, 3, 4]);
        assert_eq!(b.short, Vec::<Gen>::new());
        assert_eq!(b.period, vec![4, 2, 1, 3]);
        assert_eq!(b.k, 2);
        assert_eq!(b.residue, vec![4]);

        let b = blocks(3, &[1, 3, 4]);
        assert_eq!(b.short, vec![1, 3]);
        assert_eq!(b.residue, vec![4]);
        assert!(b.is_short());

        let b = blocks(2, &[3]);
        assert!(b.short.is_empty());
        assert_eq!(b.residue, vec![3]);
        assert_eq!(b.to_word(), vec![3]);
    }
}
