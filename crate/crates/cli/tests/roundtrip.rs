use funident::gf2fun::Gf2Rat;
use funident::sample;
use funident_cli::expr::{eval_str, parse_expr, render_expr};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn render_then_parse_is_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(500);
    for _ in 0..500 {
        let v = sample::rat(&mut rng, 8);
        let text = render_expr(&v);
        assert_eq!(eval_str(&text).unwrap(), v, "{text}");
    }
}

#[test]
fn negative_powers_round_trip() {
    for n in -20..=20 {
        let v = Gf2Rat::t_pow(n);
        assert_eq!(eval_str(&render_expr(&v)).unwrap(), v);
        assert_eq!(eval_str(&format!("t^{n}")).unwrap(), v);
    }
}

proptest! {
    #[test]
    fn parser_never_panics(s in "[t01()+\\-*/^ 0-9]{0,24}") {
        if let Ok(ast) = parse_expr(&s) {
            let _ = ast.eval();
        }
    }

    #[test]
    fn rendering_is_canonical(bits_n in 0u64..1 << 12, bits_d in 1u64..1 << 12) {
        use funident::gf2fun::Gf2Poly;
        let v = Gf2Rat::new(Gf2Poly::from_u64(bits_n), Gf2Poly::from_u64(bits_d)).unwrap();
        let text = render_expr(&v);
        prop_assert_eq!(render_expr(&eval_str(&text).unwrap()), text);
    }
}
