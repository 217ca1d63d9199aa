use std::fmt::Write as _;

use super::EmbeddedDiagram;

const SCALE: i64 = 20;
const MARGIN: i64 = 20;

/// SVG drawing of the diagram on its doubled grid: black dots, white circles,
/// straight edges. The output depends only on the diagram.
pub fn write_svg(d: &EmbeddedDiagram) -> String {
    let max_x = d.points.iter().map(|p| p.x).max().unwrap_or(0);
    let max_y = d.points.iter().map(|p| p.y).max().unwrap_or(0);
    let width = max_x * SCALE + 2 * MARGIN;
    let height = max_y * SCALE + 2 * MARGIN;
    let at = |x: i64, y: i64| (MARGIN + x * SCALE, height - MARGIN - y * SCALE);
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#).unwrap();
    writeln!(s, r#"<g stroke="black" stroke-width="2">"#).unwrap();
    for &(lo, hi) in &d.edges {
        let (x1, y1) = at(d.points[lo].x, d.points[lo].y);
        let (x2, y2) = at(d.points[hi].x, d.points[hi].y);
        writeln!(s, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    for p in &d.points {
        let (cx, cy) = at(p.x, p.y);
        let fill = if p.is_black() { "black" } else { "white" };
        writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="6" fill="{fill}" stroke="black" stroke-width="2"/>"#).unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::build_phi;

    #[test]
    fn deterministic_and_complete() {
        let p = "2 1".parse().unwrap();
        let d = build_phi(&p).unwrap();
        let a = write_svg(&d);
        assert_eq!(a, write_svg(&build_phi(&p).unwrap()));
        assert_eq!(a.matches("<line").count(), 4);
        assert_eq!(a.matches("<circle").count(), 4);
        assert_eq!(a.matches("fill=\"black\"").count(), 2);
    }
}
