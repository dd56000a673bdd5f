//! Plain-text rendering: ten significant digits for enclosure midpoints,
//! with the enclosure width reported separately.

use cremona_core::exact::interval::Interval;

/// `x` with ten significant digits: fixed notation for moderate
/// magnitudes, scientific otherwise.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..=12).contains(&magnitude) {
        return format!("{x:.9e}");
    }
    let decimals = (9 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn width(iv: &Interval) -> String {
    format!("{:.1e}", iv.width_f64())
}

/// Renders `rows` as left-aligned columns under `header`.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    let mut out = vec![line(header.to_vec())];
    out.extend(rows.iter().map(|r| line(r.iter().map(String::as_str).collect())));
    out.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ten_significant_digits() {
        assert_eq!(sig10(2.074313648), "2.074313648");
        assert_eq!(sig10(std::f64::consts::PI * 100.0), "314.1592654");
        assert_eq!(sig10(0.162357), "0.1623570000");
        assert_eq!(sig10(0.0), "0");
        assert_eq!(sig10(5e-324), "4.940656458e-324");
    }

    #[test]
    fn columns_align() {
        let t = table(&["p", "mu"], &[vec!["10".into(), "2".into()]]);
        assert_eq!(t, "p   mu\n10  2");
    }
}
