//! Comma-separated decimal lists, the text form shared by permutations,
//! representation vectors and digit messages.

use crate::error::ParseListError;

/// Parses `"3,0,5"`; whitespace around items is ignored, the empty string is
/// the empty list.
pub fn parse_list(s: &str) -> Result<Vec<usize>, ParseListError> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .enumerate()
        .map(|(index, item)| {
            let item = item.trim();
            item.parse::<usize>().map_err(|_| ParseListError {
                index,
                item: item.to_string(),
            })
        })
        .collect()
}

pub fn join(values: &[usize]) -> String {
    let mut out = String::with_capacity(values.len() * 4);
    for (k, v) in values.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&v.to_string());
    }
    out
}
