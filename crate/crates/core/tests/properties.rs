use num_bigint::BigUint;
use proptest::prelude::*;

use polyclique::bound::exponent_bound;
use polyclique::clique::{enumerate_oracle, enumerate_supporting_line};
use polyclique::constructions::inflate_segments;
use polyclique::constructions::random::{
    random_directions, random_homothetic_pair, random_polygon, random_scene, random_segment_scene, rng,
};
use polyclique::geom::{
    boundary_crossings, homothety_of, line_meets_polygon, polygons_intersect, rat, separating_line,
    Point,
};
use polyclique::graph::{build_graph, build_segment_graph, graphs_equal, is_maximal_clique};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn methods_agree(seed in any::<u64>(), n in 0usize..=8, k in 2usize..=4) {
        let scene = random_scene(&mut rng(seed), n, k);
        let g = build_graph(&scene);
        let geometric = enumerate_supporting_line(&scene);
        prop_assert_eq!(&geometric, &enumerate_oracle(&g));
        prop_assert!(geometric.is_antichain());
        for c in &geometric {
            prop_assert!(is_maximal_clique(&g, c).unwrap());
        }
    }

    #[test]
    fn separation_is_exclusive(seed in any::<u64>(), k in 2usize..=5) {
        let mut r = rng(seed);
        let dirs = random_directions(&mut r, k);
        let p = random_polygon(&mut r, &dirs);
        let q = random_polygon(&mut r, &dirs);
        match separating_line(&p, &q, &dirs) {
            Some(line) => {
                prop_assert!(!polygons_intersect(&p, &q));
                prop_assert!(!line_meets_polygon(&line, &p));
                prop_assert!(!line_meets_polygon(&line, &q));
                let sp = line.side(&p.vertices()[0]);
                let sq = line.side(&q.vertices()[0]);
                prop_assert!(sp * sq < rat(0, 1));
            }
            None => prop_assert!(polygons_intersect(&p, &q)),
        }
    }

    #[test]
    fn similarity_preserves_the_graph(seed in any::<u64>(), num in 1i64..=9, den in 1i64..=5, tx in -20i64..=20, ty in -20i64..=20) {
        let scene = random_scene(&mut rng(seed), 7, 3);
        let moved = scene.transformed(&rat(num, den), &Point::new(rat(tx, 3), rat(ty, 7)));
        prop_assert!(graphs_equal(&build_graph(&scene), &build_graph(&moved)).unwrap());
    }

    #[test]
    fn homothety_is_recovered(seed in any::<u64>(), num in 1i64..=9, den in 1i64..=5, tx in -20i64..=20) {
        let mut r = rng(seed);
        let dirs = random_directions(&mut r, 3);
        let p = random_polygon(&mut r, &dirs);
        let s = rat(num, den);
        let t = Point::new(rat(tx, 2), rat(-tx, 5));
        let h = homothety_of(&p, &p.transformed(&s, &t)).unwrap();
        prop_assert_eq!(h.scale, s);
        prop_assert_eq!(h.translation, t);
    }

    #[test]
    fn inflation_preserves_the_graph(seed in any::<u64>(), n in 1usize..=12, k in 2usize..=4) {
        let s = random_segment_scene(&mut rng(seed), n, k);
        let inflated = inflate_segments(&s).unwrap();
        prop_assert!(graphs_equal(&build_segment_graph(&s), &build_graph(&inflated)).unwrap());
    }

    #[test]
    fn homothets_cross_evenly(seed in any::<u64>(), k in 2usize..=4) {
        let mut r = rng(seed);
        let dirs = random_directions(&mut r, k);
        let (p, q) = random_homothetic_pair(&mut r, &dirs).unwrap();
        let c = boundary_crossings(&p, &q).unwrap();
        prop_assert!(c == 0 || c == 2, "{} crossings", c);
    }

    #[test]
    fn planar_exponent_never_exceeds_the_general_bound(k in 2u64..=40) {
        prop_assert!(exponent_bound(k, 2).unwrap() >= BigUint::from(k));
    }
}
