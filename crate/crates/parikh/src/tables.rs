//! CSV renderings of the per-basis attractor grid and the reachability grid.
//!
//! Layout: one row per basis, one column per order. Cells holding several
//! vectors join them with `|`; a vector prints compactly when every component
//! is a single digit and quoted comma-separated otherwise. Absent orders leave
//! the cell empty.

use crate::attractors::AttractorTable;
use crate::vector::ParikhVector;

/// A vector as a CSV cell fragment.
pub fn vector_cell(v: &ParikhVector) -> String {
    if v.components().iter().all(|&c| c <= 9) {
        v.to_string()
    } else {
        format!("\"{v}\"")
    }
}

fn header(max_order: usize) -> String {
    let mut columns = vec!["n".to_string()];
    columns.extend((1..=max_order).map(|k| format!("k{k}")));
    columns.join(",")
}

/// Attractor grid: each cell lists the order-`k` attractors of the basis,
/// cycles flattened in canonical order.
pub fn attractor_grid_csv(tables: &[AttractorTable]) -> String {
    let max_order = tables
        .iter()
        .flat_map(|t| t.attractors.iter().map(|a| a.order()))
        .max()
        .unwrap_or(1);
    let mut lines = vec![header(max_order)];
    for table in tables {
        let mut row = vec![table.basis.size().to_string()];
        for k in 1..=max_order {
            let cell: Vec<String> = table
                .of_order(k)
                .iter()
                .flat_map(|a| a.cycle().iter().map(vector_cell))
                .collect();
            row.push(cell.join("|"));
        }
        lines.push(row.join(","));
    }
    lines.join("\n") + "\n"
}

/// Reachability grid: `rows` pairs a basis with its per-order rates, `None`
/// marking orders that have no attractor.
pub fn reachability_grid_csv(rows: &[(usize, Vec<Option<usize>>)], max_order: usize) -> String {
    let mut lines = vec![header(max_order)];
    for (basis, rates) in rows {
        let mut row = vec![basis.to_string()];
        for k in 0..max_order {
            row.push(match rates.get(k).copied().flatten() {
                Some(rate) => rate.to_string(),
                None => String::new(),
            });
        }
        lines.push(row.join(","));
    }
    lines.join("\n") + "\n"
}
