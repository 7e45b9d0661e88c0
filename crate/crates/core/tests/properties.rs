use acl::adapt::replace_data;
use acl::datagen::{sample_dataset, DomainSpec, Image, LabeledDataset, LabeledImage, IMAGE_PIXELS};
use acl::experts::{evaluate_promotion, EvalReport, PromotionFlags, Standards};
use acl::numcore::{softmax, Network};
use acl::trust::{emd_distance, knn_label, softmax_stats};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn sparse_image(seed: u64) -> Image {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut px: Vec<f64> = (0..IMAGE_PIXELS)
        .map(|_| if rng.random::<f64>() < 0.2 { rng.random() } else { 0.0 })
        .collect();
    px[rng.random_range(0..IMAGE_PIXELS)] = 1.0;
    Image::from_pixels(px).unwrap()
}

fn dataset(n: usize, seed: u64) -> LabeledDataset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_dataset(&DomainSpec::digits(0.0, 90.0), n, &mut rng).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn softmax_is_a_distribution(logits in prop::collection::vec(-30.0f64..30.0, 1..12)) {
        let p = softmax(&logits).unwrap();
        prop_assert!((p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
        prop_assert!(p.iter().all(|v| *v >= 0.0));
    }

    #[test]
    fn softmax_ignores_constant_shift(logits in prop::collection::vec(-10.0f64..10.0, 2..12), shift in -50.0f64..50.0) {
        let a = softmax(&logits).unwrap();
        let shifted: Vec<f64> = logits.iter().map(|v| v + shift).collect();
        let b = softmax(&shifted).unwrap();
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn softmax_stats_bounds(logits in prop::collection::vec(-10.0f64..10.0, 2..12)) {
        let p = softmax(&logits).unwrap();
        let (margin, vr, h) = softmax_stats(&p).unwrap();
        prop_assert!((0.0..=1.0).contains(&margin));
        prop_assert!((0.0..1.0).contains(&vr));
        prop_assert!(h >= 0.0 && h <= (p.len() as f64).ln() + 1e-12);
    }

    #[test]
    fn emd_is_a_pseudometric(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (sparse_image(a), sparse_image(b), sparse_image(c));
        let d = |x: &Image, y: &Image| emd_distance(x, y).unwrap();
        prop_assert_eq!(d(&a, &a), 0.0);
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &b) >= 0.0);
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c) + 1e-12);
    }

    #[test]
    fn knn_label_ignores_training_order(seed in any::<u64>(), k in 1usize..8) {
        let train = dataset(30, seed);
        let query = dataset(1, seed ^ 1).items[0].image.clone();
        let mut shuffled = train.clone();
        shuffled.items.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 2));
        prop_assert_eq!(knn_label(&query, &train, k).unwrap(), knn_label(&query, &shuffled, k).unwrap());
    }

    #[test]
    fn replacement_keeps_size_and_order(len in 1usize..40, supply_len in 0usize..20, rate in 0.0f64..=1.0) {
        let mut data = dataset(len, 11);
        let before = data.clone();
        let supply: Vec<LabeledImage> = dataset(supply_len.max(1), 12).items[..supply_len].to_vec();
        let n = replace_data(&mut data, &supply, rate);
        prop_assert_eq!(data.len(), len);
        prop_assert_eq!(n, ((rate * len as f64 + 1e-9).floor() as usize).min(supply_len).min(len));
        prop_assert_eq!(&data.items[..len - n], &before.items[n..]);
        prop_assert_eq!(&data.items[len - n..], &supply[..n]);
    }

    #[test]
    fn promotion_is_pure(acc in (0.0f64..=1.0, 0.0f64..=1.0), conf in (0.0f64..=1.0, 0.0f64..=1.0), bits in 0u8..8) {
        let s = Standards::default();
        let cand = EvalReport::new(acc.0, conf.0, &s, "val");
        let cur = EvalReport::new(acc.1, conf.1, &s, "val");
        let flags = PromotionFlags {
            human_approval_required: bits & 1 != 0,
            human_approved: bits & 2 != 0,
            performance_maximizing: bits & 4 != 0,
        };
        let first = evaluate_promotion(&cand, &cur, &flags).unwrap();
        prop_assert_eq!(first, evaluate_promotion(&cand.clone(), &cur.clone(), &flags).unwrap());
        let other = EvalReport::new(acc.1, conf.1, &s, "test");
        prop_assert!(evaluate_promotion(&cand, &other, &flags).is_err());
    }

    #[test]
    fn network_bytes_round_trip(seed in any::<u64>(), hidden in 1usize..10) {
        let net = Network::mlp(&[5, hidden, 3], &mut ChaCha8Rng::seed_from_u64(seed));
        let back = Network::from_bytes(&net.to_bytes()).unwrap();
        prop_assert_eq!(back.flat_params(), net.flat_params());
    }
}
