//! Static SVG scatter plot of a jet spectrum.
//!
//! Axes are (Re λ, Im λ) with the unit circle outlined; each pair draws
//! one marker whose area is proportional to its jet length `k`, labeled
//! with `k`.

use crate::report::PairReport;

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;

fn map(v: f64) -> f64 {
    // [−1.15, 1.15] → [MARGIN, SIZE − MARGIN]
    MARGIN + (v + 1.15) / 2.3 * (SIZE - 2.0 * MARGIN)
}

pub fn spectrum_svg(pairs: &[PairReport]) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
         viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"white\"/>\n"
    ));
    // axes
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\" stroke-width=\"1\"/>\n",
        map(-1.15),
        map(0.0),
        map(1.15),
        map(0.0)
    ));
    out.push_str(&format!(
        "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#999\" stroke-width=\"1\"/>\n",
        map(0.0),
        map(-1.15),
        map(0.0),
        map(1.15)
    ));
    // unit circle
    let radius = (map(1.0) - map(0.0)).abs();
    out.push_str(&format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{radius}\" fill=\"none\" stroke=\"#333\" \
         stroke-width=\"1.5\"/>\n",
        map(0.0),
        map(0.0)
    ));
    // markers: area ∝ k
    for p in pairs {
        let cx = map(p.re);
        let cy = map(-p.im); // SVG y grows downward
        let r = 6.0 * (p.k as f64).sqrt();
        out.push_str(&format!(
            "  <circle class=\"pair\" cx=\"{cx:.2}\" cy=\"{cy:.2}\" r=\"{r:.2}\" \
             fill=\"#4477cc\" fill-opacity=\"0.55\" stroke=\"#224488\"/>\n"
        ));
        out.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"13\" fill=\"#111\">{}</text>\n",
            cx + r + 3.0,
            cy + 4.0,
            p.k
        ));
    }
    out.push_str("</svg>\n");
    out
}
