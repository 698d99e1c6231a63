//! On-disk cache of an enumerated Grassmannian.
//!
//! ```text
//! p n count
//! sha256 <adjacency digest> <distant digest>
//!
//! p 2n
//! <rows of the first element>
//!
//! ...
//! ```
//!
//! Elements are stored in canonical order. Relations are recomputed on load
//! and compared with the stored digests.

use std::fs;
use std::path::{Path, PathBuf};

use fixedbitset::FixedBitSet;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gf::Field;
use crate::grassmann::{check_size, GrassmannianIndex};
use crate::subspace::{split_blocks, Subspace};

pub fn cache_path(dir: &Path, p: u32, n: usize) -> PathBuf {
    dir.join(format!("grassmannian-p{p}-n{n}.txt"))
}

pub fn relation_digest(rows: &[FixedBitSet]) -> String {
    let mut h = Sha256::new();
    for row in rows {
        for j in row.ones() {
            h.update((j as u32).to_le_bytes());
        }
        h.update(u32::MAX.to_le_bytes());
    }
    hex::encode(h.finalize())
}

pub fn cache_text(index: &GrassmannianIndex) -> String {
    let mut s = format!(
        "{} {} {}\nsha256 {} {}\n",
        index.field().p(),
        index.n(),
        index.len(),
        relation_digest(index.adjacency_rows()),
        relation_digest(index.distant_rows())
    );
    for e in index.elements() {
        s.push('\n');
        s.push_str(&e.to_text());
    }
    s
}

/// Writes the cache file for `index` into `dir` and returns its path.
pub fn cache_index(index: &GrassmannianIndex, dir: &Path) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, index.field().p() as u32, index.n());
    fs::write(&path, cache_text(index))?;
    Ok(path)
}

pub fn load_index(path: &Path) -> Result<GrassmannianIndex> {
    parse_cache(&fs::read_to_string(path)?)
}

pub fn parse_cache(text: &str) -> Result<GrassmannianIndex> {
    let corrupt = |m: String| Error::CorruptCache(m);
    let mut blocks = split_blocks(text).into_iter();
    let head = blocks.next().ok_or_else(|| corrupt("empty file".into()))?;
    let mut head_lines = head.lines();
    let nums: Vec<u64> = head_lines
        .next()
        .unwrap_or("")
        .split_whitespace()
        .map(|t| t.parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| corrupt(format!("header: {e}")))?;
    let [p, n, count] = nums[..] else {
        return Err(corrupt("expected header \"p n count\"".into()));
    };
    let (p, n) = (p as u32, n as usize);
    let field = Field::new(p).map_err(|e| corrupt(e.to_string()))?;
    let expected = check_size(field, n).map_err(|e| corrupt(e.to_string()))?;
    if count != expected {
        return Err(corrupt(format!("header claims {count} elements, G({p}, {n}) has {expected}")));
    }
    let digests: Vec<&str> = head_lines.next().unwrap_or("").split_whitespace().collect();
    let [tag, adj_digest, dist_digest] = digests[..] else {
        return Err(corrupt("missing checksum line".into()));
    };
    if tag != "sha256" {
        return Err(corrupt(format!("unknown checksum kind {tag:?}")));
    }
    let elements: Vec<Subspace> = blocks
        .map(|b| Subspace::from_text(b).map_err(|e| corrupt(e.to_string())))
        .collect::<Result<_>>()?;
    if elements.len() as u64 != count {
        return Err(corrupt(format!("expected {count} elements, found {}", elements.len())));
    }
    for (i, e) in elements.iter().enumerate() {
        if e.field() != field || e.ambient() != 2 * n || e.dim() != n {
            return Err(corrupt(format!("element {i} is not an n-subspace of GF({p})^{}", 2 * n)));
        }
        if i > 0 && elements[i - 1] >= *e {
            return Err(corrupt(format!("element {i} is out of canonical order")));
        }
    }
    let index = GrassmannianIndex::from_elements(field, n, elements);
    if relation_digest(index.adjacency_rows()) != adj_digest
        || relation_digest(index.distant_rows()) != dist_digest
    {
        return Err(corrupt("relation checksum mismatch".into()));
    }
    Ok(index)
}

/// Loads the cached index for (p, n) from `dir`, building and caching it
/// first when absent.
pub fn load_or_build(dir: &Path, p: u32, n: usize) -> Result<GrassmannianIndex> {
    let path = cache_path(dir, p, n);
    if path.exists() {
        return load_index(&path);
    }
    let index = crate::grassmann::build_index(p, n)?;
    cache_index(&index, dir)?;
    Ok(index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::build_index;

    #[test]
    fn round_trip() {
        let g = build_index(2, 2).unwrap();
        let back = parse_cache(&cache_text(&g)).unwrap();
        assert_eq!(back.elements(), g.elements());
        assert_eq!(back.adjacency_rows(), g.adjacency_rows());
        assert_eq!(back.distant_rows(), g.distant_rows());
    }

    #[test]
    fn corrupt_inputs() {
        let g = build_index(2, 2).unwrap();
        let text = cache_text(&g);
        let cut = &text[..text.len() / 2];
        assert!(matches!(parse_cache(cut), Err(Error::CorruptCache(_))));
        assert!(matches!(parse_cache(""), Err(Error::CorruptCache(_))));
        let bad_sum = text.replacen("sha256 ", "sha256 00", 1);
        assert!(matches!(parse_cache(&bad_sum), Err(Error::CorruptCache(_))));
        // swap the first two elements
        let blocks = split_blocks(&text);
        let swapped = format!("{}\n{}\n{}\n{}", blocks[0], blocks[2], blocks[1], blocks[3..].join("\n"));
        assert!(matches!(parse_cache(&swapped), Err(Error::CorruptCache(_))));
    }
}
