//! SVG drawings of two-coloured configurations: class 0 black, class 1 white.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::geometry::{orchard_partition, Configuration};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RenderStyle {
    pub width: u32,
    pub height: u32,
    pub margin: u32,
    pub radius: u32,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            width: 400,
            height: 400,
            margin: 24,
            radius: 6,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        if self.width == 0 || self.height == 0 || self.radius == 0 {
            return Err(Error::InvalidArgument("canvas size and radius must be positive".into()));
        }
        if 2 * self.margin >= self.width.min(self.height) {
            return Err(Error::InvalidArgument("margin must be less than half the canvas".into()));
        }
        Ok(())
    }
}

/// The configuration scaled uniformly into the canvas, with y pointing up.
pub fn render_svg(c: &Configuration, style: &RenderStyle) -> Result<String> {
    style.validate()?;
    let partition = orchard_partition(c)?;
    let coords: Vec<(f64, f64)> = c
        .points()
        .iter()
        .map(|p| (p.x.to_f64().unwrap_or(0.0), p.y.to_f64().unwrap_or(0.0)))
        .collect();
    let (mut lo_x, mut lo_y, mut hi_x, mut hi_y) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &coords {
        lo_x = lo_x.min(x);
        lo_y = lo_y.min(y);
        hi_x = hi_x.max(x);
        hi_y = hi_y.max(y);
    }
    let (w, h, m) = (style.width as f64, style.height as f64, style.margin as f64);
    let span_x = hi_x - lo_x;
    let span_y = hi_y - lo_y;
    let fit = |avail: f64, span: f64| if span > 0.0 { avail / span } else { f64::INFINITY };
    let mut s = fit(w - 2.0 * m, span_x).min(fit(h - 2.0 * m, span_y));
    if !s.is_finite() {
        s = 0.0;
    }
    // Center the drawing in both directions.
    let off_x = (w - s * span_x) / 2.0;
    let off_y = (h - s * span_y) / 2.0;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        style.width, style.height, style.width, style.height
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    for (i, &(x, y)) in coords.iter().enumerate() {
        let cx = off_x + (x - lo_x) * s;
        let cy = h - (off_y + (y - lo_y) * s);
        let fill = if partition.color(i) == 0 { "black" } else { "white" };
        writeln!(
            out,
            r#"<circle id="p{i}" cx="{cx:.3}" cy="{cy:.3}" r="{}" fill="{fill}" stroke="black" stroke-width="1.5"/>"#,
            style.radius
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, fill: &str) -> usize {
        svg.matches(&format!(r#"fill="{fill}" stroke"#)).count()
    }

    #[test]
    fn triangle_is_all_black() {
        let c = Configuration::from_ints(&[(0, 0), (3, 0), (0, 2)]).unwrap();
        let svg = render_svg(&c, &RenderStyle::default()).unwrap();
        assert_eq!(count(&svg, "black"), 3);
        assert_eq!(count(&svg, "white"), 0);
    }

    #[test]
    fn square_alternates_and_y_points_up() {
        let c = Configuration::from_ints(&[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap();
        let style = RenderStyle {
            width: 100,
            height: 100,
            margin: 10,
            radius: 3,
        };
        let svg = render_svg(&c, &style).unwrap();
        assert!(svg.contains(r#"<circle id="p0" cx="10.000" cy="90.000" r="3" fill="black""#));
        assert!(svg.contains(r#"<circle id="p1" cx="90.000" cy="90.000" r="3" fill="white""#));
        assert!(svg.contains(r#"<circle id="p3" cx="10.000" cy="10.000" r="3" fill="white""#));
        assert_eq!(svg, render_svg(&c, &style).unwrap());
    }

    #[test]
    fn style_limits() {
        let c = Configuration::from_ints(&[(0, 0)]).unwrap();
        let bad = RenderStyle {
            margin: 200,
            ..RenderStyle::default()
        };
        assert!(render_svg(&c, &bad).is_err());
        assert!(render_svg(&c, &RenderStyle::default()).unwrap().contains(r#"cx="200.000" cy="200.000""#));
    }
}
