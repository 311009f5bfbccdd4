use std::fmt::Write;

use gammakit_core::labels::DISKS;

use crate::config::DiskConfig;
use crate::point::Point;
use crate::samples::SampleSet;

const COLORS: [&str; DISKS] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Before/after plot: disk outlines, the samples in grey, and their images
/// coloured by the disk they started in.
pub fn render(cfg: &DiskConfig, samples: &SampleSet, moved: &[Point], title: &str) -> String {
    let half = cfg.ring_radius + cfg.swap.1.max(cfg.transport.1);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}" width="640" height="640">"#,
        -half,
        -half,
        2.0 * half,
        2.0 * half
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    // y grows downwards in SVG.
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    for j in 1..=DISKS {
        let c = cfg.center(j);
        let _ = writeln!(
            out,
            r##"<circle cx="{:.4}" cy="{:.4}" r="{}" fill="none" stroke="#999" stroke-width="0.05"/>"##,
            c.x, c.y, cfg.disk_radius
        );
    }
    let dot = 0.04;
    for s in &samples.points {
        let _ = writeln!(
            out,
            r##"<circle cx="{:.4}" cy="{:.4}" r="{dot}" fill="#bbb"/>"##,
            s.position.x, s.position.y
        );
    }
    for (s, q) in samples.points.iter().zip(moved) {
        let _ = writeln!(
            out,
            r#"<circle cx="{:.4}" cy="{:.4}" r="{dot}" fill="{}"/>"#,
            q.x,
            q.y,
            COLORS[s.label.disk - 1]
        );
    }
    out.push_str("<circle cx=\"0\" cy=\"0\" r=\"0.15\" fill=\"black\"/>\n</g>\n</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
