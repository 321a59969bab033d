use bockstein::Face;

/// Left-aligned columns separated by two spaces; widths count chars, not bytes.
pub fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 < row.len() {
                line.push_str(cell);
                line.extend(std::iter::repeat_n(
                    ' ',
                    widths[c] - cell.chars().count() + 2,
                ));
            } else {
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

/// `Z/2 ⊕ Z/4`, or `0` for the trivial group.
pub fn cyclic_sum(orders: &[u64]) -> String {
    if orders.is_empty() {
        return "0".into();
    }
    orders
        .iter()
        .map(|o| format!("Z/{o}"))
        .collect::<Vec<_>>()
        .join(" ⊕ ")
}

/// Comma-separated vertices, empty for the empty face.
pub fn face_plain(face: &Face) -> String {
    face.vertices()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub fn json_line<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}
