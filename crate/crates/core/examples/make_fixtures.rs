//! Writes the synthetic fixture set used by the README walkthrough:
//!
//!     cargo run --release --example make_fixtures -- [DIR]
//!
//! DIR defaults to `crates/core/fixtures`.

use std::path::PathBuf;

use blendsynth::fixtures::{blurry_background, random_vgg_tensors, sharp_background, star_patch};
use blendsynth::image::ImagePlane;
use blendsynth::nn::write_archive;
use blendsynth::pipeline::{PipelineConfig, SourceEntry};

fn main() -> blendsynth::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir).map_err(|e| blendsynth::Error::Io {
        path: dir.clone(),
        source: e,
    })?;

    let (star, mask) = star_patch(96);
    star.save_png_with_alpha(&mask, dir.join("starfish.png"))?;
    blurry_background(256, 3).save_png(dir.join("blurry_pool.png"))?;
    sharp_background(256, 5).save_png(dir.join("sharp_reef.png"))?;
    ImagePlane::filled(64, 64, 3, 0.5)?.save_png(dir.join("constant.png"))?;
    write_archive(dir.join("random_vgg_prefix.ibwt"), &random_vgg_tensors(7))?;

    let cfg = PipelineConfig {
        sources: vec![SourceEntry {
            image: "starfish.png".into(),
            mask: None,
            polygons: None,
            category: "starfish".into(),
        }],
        backgrounds: vec!["blurry_pool.png".into(), "sharp_reef.png".into()],
        weights: "random_vgg_prefix.ibwt".into(),
        output: "out".into(),
        counts: [2, 1, 1, 0],
        seed: 7,
        canvas: 128,
        style_iterations: 10,
        scale_set: Some(vec![24, 32, 48, 64]),
        ..PipelineConfig::default()
    };
    std::fs::write(dir.join("smoke.json"), cfg.to_json_pretty()? + "\n").map_err(|e| blendsynth::Error::Io {
        path: dir.join("smoke.json"),
        source: e,
    })?;
    println!("fixtures written to {}", dir.display());
    Ok(())
}
