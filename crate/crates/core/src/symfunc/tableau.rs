use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::error::{Error, Result};

/// A semistandard Young tableau in English notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape).map_err(|e| Error::NotSemistandard(e.to_string()))?;
        for (r, row) in rows.iter().enumerate() {
            if row.contains(&0) {
                return Err(Error::NotSemistandard(format!("row {r} has a zero entry")));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotSemistandard(format!("row {r} decreases")));
            }
            if r > 0 {
                for (c, &x) in row.iter().enumerate() {
                    if rows[r - 1][c] >= x {
                        return Err(Error::NotSemistandard(format!(
                            "column {c} not strict at row {r}"
                        )));
                    }
                }
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated on construction")
    }

    /// Multiplicity of each letter `1..=max`, indexed from 0.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut content = vec![0; max];
        for &x in self.rows.iter().flatten() {
            content[x - 1] += 1;
        }
        content
    }

    /// Rows read left to right, starting from the bottom row.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Lascoux-Schutzenberger charge of the reading word.
    pub fn charge(&self) -> Result<usize> {
        word_charge(&self.reading_word())
    }
}

impl TryFrom<Vec<Vec<usize>>> for Tableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        Tableau::new(rows)
    }
}

impl From<Tableau> for Vec<Vec<usize>> {
    fn from(t: Tableau) -> Self {
        t.rows
    }
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are peeled off repeatedly: take the rightmost 1, then the
/// first 2 found scanning left from it (wrapping around), and so on. Within a
/// standard subword, letter `r+1` gets index one more than `r` when it sits to
/// the right of `r`, else the same index; the charge is the sum of indices.
pub fn word_charge(word: &[usize]) -> Result<usize> {
    let max = word.iter().copied().max().unwrap_or(0);
    let mut content = vec![0usize; max];
    for &x in word {
        if x == 0 {
            return Err(Error::NonDominantContent(content));
        }
        content[x - 1] += 1;
    }
    if content.windows(2).any(|w| w[0] < w[1]) || content.contains(&0) {
        return Err(Error::NonDominantContent(content));
    }

    let mut used = vec![false; word.len()];
    let mut left = word.len();
    let mut total = 0;
    while left > 0 {
        let mut pos = (0..word.len())
            .rev()
            .find(|&p| !used[p] && word[p] == 1)
            .expect("partition content keeps a 1 while letters remain");
        used[pos] = true;
        left -= 1;
        let mut index = 0;
        let mut letter = 2;
        loop {
            let next = (1..word.len())
                .map(|step| (pos + word.len() - step) % word.len())
                .find(|&p| !used[p] && word[p] == letter);
            let Some(next) = next else { break };
            if next > pos {
                index += 1;
            }
            total += index;
            used[next] = true;
            left -= 1;
            pos = next;
            letter += 1;
        }
    }
    Ok(total)
}

/// All semistandard tableaux of `shape` whose letter `a` occurs `content[a-1]`
/// times, in lexicographic order of their row-by-row entry sequence.
pub fn enumerate_ssyt(shape: &Partition, content: &[usize]) -> Result<Vec<Tableau>> {
    let total: usize = content.iter().sum();
    if total != shape.size() {
        return Err(Error::SizeMismatch {
            left: shape.size(),
            right: total,
        });
    }
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut remaining = content.to_vec();
    let mut out = Vec::new();
    fill(&cells, 0, &mut rows, &mut remaining, &mut out);
    Ok(out)
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    rows: &mut Vec<Vec<usize>>,
    remaining: &mut [usize],
    out: &mut Vec<Tableau>,
) {
    if idx == cells.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[idx];
    let mut low = 1;
    if c > 0 {
        low = low.max(rows[r][c - 1]);
    }
    if r > 0 {
        low = low.max(rows[r - 1][c] + 1);
    }
    for v in low..=remaining.len() {
        if remaining[v - 1] == 0 {
            continue;
        }
        remaining[v - 1] -= 1;
        rows[r][c] = v;
        fill(cells, idx + 1, rows, remaining, out);
        remaining[v - 1] += 1;
    }
    rows[r][c] = 0;
}

/// The tableau of shape `(n^p, r)` (`|mu| = pn + r`) filled row by row with
/// `mu_1` ones, `mu_2` twos, and so on.
pub fn build_t_mu(mu: &Partition, n: usize) -> Result<Tableau> {
    if n == 0 {
        return Err(Error::InvalidRank(n));
    }
    let letters: Vec<usize> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| std::iter::repeat_n(i + 1, m))
        .collect();
    let rows: Vec<Vec<usize>> = letters.chunks(n).map(<[usize]>::to_vec).collect();
    Tableau::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Tableau::new(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![2]]).is_ok());
    }

    #[test]
    fn ssyt_examples() {
        assert_eq!(
            enumerate_ssyt(&p(&[2, 1]), &[2, 1]).unwrap(),
            vec![t(&[&[1, 1], &[2]])]
        );
        assert_eq!(
            enumerate_ssyt(&p(&[2, 1]), &[1, 1, 1]).unwrap(),
            vec![t(&[&[1, 2], &[3]]), t(&[&[1, 3], &[2]])]
        );
        assert!(enumerate_ssyt(&p(&[1, 1]), &[2]).unwrap().is_empty());
        assert!(matches!(
            enumerate_ssyt(&p(&[2]), &[1]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn charge_examples() {
        assert_eq!(t(&[&[1, 1], &[2]]).charge().unwrap(), 0);
        assert_eq!(t(&[&[1, 1, 2]]).charge().unwrap(), 1);
        assert_eq!(t(&[&[1, 1, 1, 2], &[2, 3]]).charge().unwrap(), 2);
        assert_eq!(word_charge(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(word_charge(&[3, 2, 1]).unwrap(), 0);
        assert_eq!(word_charge(&[3, 2, 1, 1, 1, 2]).unwrap(), 1);
        assert_eq!(word_charge(&[1, 2, 1]).unwrap(), 0);
        assert!(matches!(
            word_charge(&[2, 2, 1]),
            Err(Error::NonDominantContent(_))
        ));
        assert!(word_charge(&[1, 3]).is_err());
    }

    #[test]
    fn t_mu_filling() {
        assert_eq!(
            build_t_mu(&p(&[3, 2, 1]), 4).unwrap(),
            t(&[&[1, 1, 1, 2], &[2, 3]])
        );
        assert_eq!(build_t_mu(&p(&[2, 1]), 3).unwrap(), t(&[&[1, 1, 2]]));
        assert_eq!(build_t_mu(&p(&[1]), 2).unwrap(), t(&[&[1]]));
    }

    #[test]
    fn json_rows() {
        let tab = t(&[&[1, 1], &[2]]);
        assert_eq!(serde_json::to_string(&tab).unwrap(), "[[1,1],[2]]");
        assert!(serde_json::from_str::<Tableau>("[[2,1]]").is_err());
    }
}
