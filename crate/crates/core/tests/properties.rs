use bifrac::axioms::{check_axiom_equivalence, check_frc};
use bifrac::colimit::crosscheck_iso;
use bifrac::fibrations::cocartesian;
use bifrac::grothendieck::elements;
use bifrac::homfractions::{crosscheck_homcat, lift_square, slice};
use bifrac::io::{bicategory_from_file, bicategory_to_file, to_json};
use bifrac::localization::{check_r, induced_w0};
use bifrac::random::{random_diagram, random_pair};
use bifrac::Obj;
use proptest::prelude::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(24))]

    #[test]
    fn colimit_methods_agree(seed in any::<u64>()) {
        let d = random_diagram(seed, false);
        let w = crosscheck_iso(&d.diagram).unwrap();
        prop_assert!(w.holds(), "{:?}", w);
    }

    #[test]
    fn cocartesian_criterion_matches_generic_test(seed in any::<u64>()) {
        let d = random_diagram(seed, false);
        let el = elements(&d.diagram).unwrap();
        prop_assert!(el.total.validate().is_empty());
        prop_assert!(el.proj.validate().is_empty());
        let generic = cocartesian(&el.proj);
        prop_assert_eq!(el.cocart1.members(), generic.members());
    }

    #[test]
    fn axiom_sets_agree(seed in any::<u64>()) {
        let (rb, w) = random_pair(seed);
        prop_assert!(check_axiom_equivalence(&rb.bicat, &w).agree());
    }

    #[test]
    fn fractions_descend_to_pi0(seed in any::<u64>()) {
        let (rb, w) = random_pair(seed);
        prop_assume!(check_frc(&rb.bicat, &w).passes());
        let pi = rb.bicat.pi0().unwrap();
        prop_assert!(check_r(&pi.category, &induced_w0(&pi, &w)).passes());
    }

    #[test]
    fn homcat_methods_agree(seed in any::<u64>(), a in 0usize..4, t in 0usize..4) {
        let (rb, w) = random_pair(seed);
        let b = rb.bicat;
        prop_assume!(check_frc(&b, &w).passes());
        let n = b.num_objects();
        let x = crosscheck_homcat(b.clone(), &w, Obj::from_idx(a % n), Obj::from_idx(t % n)).unwrap();
        prop_assert!(x.holds());
    }

    #[test]
    fn bicategory_files_round_trip(seed in any::<u64>()) {
        let (rb, w) = random_pair(seed);
        let file = bicategory_to_file(&rb.bicat, std::slice::from_ref(&w));
        let text = to_json(&file);
        let back = bicategory_from_file(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert!(back == *rb.bicat);
    }

    #[test]
    fn generators_are_deterministic(seed in any::<u64>()) {
        let (a, wa) = random_pair(seed);
        let (b, wb) = random_pair(seed);
        prop_assert!(*a.bicat == *b.bicat);
        prop_assert_eq!(wa.members(), wb.members());
        let out = |s: u64| bifrac::cli::run(["bifrac", "colimit", "@random", "--method", "both", "--seed", &s.to_string()]).stdout;
        prop_assert_eq!(out(seed), out(seed));
    }
}

proptest! {
    #![proptest_config(config(12))]

    /// Every invertible square under a cospan of `W/A` lifts, with the
    /// expected boundary.
    #[test]
    fn squares_lift_to_the_slice(seed in any::<u64>(), a in 0usize..4) {
        let (rb, w) = random_pair(seed);
        let b = rb.bicat;
        prop_assume!(check_frc(&b, &w).passes());
        let s = slice(b.clone(), &w, Obj::from_idx(a % b.num_objects())).unwrap();
        let t = &s.bicat;
        let mut lifted = 0;
        for c2 in t.objects() {
            for c in t.objects() {
                for c1 in t.objects() {
                    for &left in t.hom(c, c2) {
                        for &right in t.hom(c1, c2) {
                            let (u, v) = (s.cell1_data[left.idx()].0, s.cell1_data[right.idx()].0);
                            let (bc, bc1) = (b.src1(s.obj_data[c.idx()]), b.src1(s.obj_data[c1.idx()]));
                            for d in b.objects() {
                                for &h in b.hom(d, bc) {
                                    for &g in b.hom(d, bc1) {
                                        if !w.contains(b.hcomp1(s.obj_data[c.idx()], h)) {
                                            continue;
                                        }
                                        for gamma in b.hom2(b.hcomp1(v, g), b.hcomp1(u, h)).iter().copied() {
                                            if b.is_invertible2(gamma).is_none() {
                                                continue;
                                            }
                                            let l = lift_square(&s, left, right, h, g, gamma).unwrap();
                                            prop_assert_eq!(t.src2(l.cell), t.hcomp1(right, l.right));
                                            prop_assert_eq!(t.tgt2(l.cell), t.hcomp1(left, l.left));
                                            prop_assert_eq!(s.cell2_data[l.cell.idx()], gamma);
                                            lifted += 1;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        prop_assert!(lifted > 0);
    }
}
