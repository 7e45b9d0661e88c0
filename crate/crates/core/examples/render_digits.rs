//! Writes a PGM contact sheet of every digit at increasing rotation.
//!
//! `cargo run --example render_digits -- digits.pgm`

use std::fs::File;
use std::io::BufWriter;

use acl::datagen::{render_digit, write_pgm_grid, LabeledDataset, LabeledImage, NUM_CLASSES};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> acl::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "digits.pgm".into());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let angles = [0.0, 15.0, 45.0, 90.0, 135.0, 180.0];
    let mut items = Vec::new();
    for class in 0..NUM_CLASSES {
        for angle in angles {
            items.push(LabeledImage {
                image: render_digit(class, angle, 0.05, &mut rng)?,
                label: class,
                angle: Some(angle),
                sigma: Some(0.05),
            });
        }
    }
    let data = LabeledDataset::new(items);
    write_pgm_grid(&data, angles.len(), BufWriter::new(File::create(&path)?))?;
    println!("wrote {} digits ({} angles per row) to {path}", data.len(), angles.len());
    Ok(())
}
