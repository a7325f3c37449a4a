use wreathchar::genfun::{outer_partitions, outer_term};
use wreathchar::wreath::all_elements;
use wreathchar::{char_from_genfun, induced_char_oracle, CharacterSpec, CyclotomicInt, GeneratingFunction, Strategy, WreathElement};

#[test]
fn strategies_give_identical_expansions() {
    for (lambda, beta) in [("2,1/1", "st"), ("1,1/2", "ss"), ("3/-", "ts")] {
        let spec = CharacterSpec::parse(lambda, beta).unwrap();
        let a = GeneratingFunction::new(&spec, Strategy::Leibniz).unwrap();
        let b = GeneratingFunction::new(&spec, Strategy::Laplace).unwrap();
        assert_eq!(a.polynomial(), b.polynomial());
    }
}

#[test]
fn outer_terms_sum_to_the_expansion() {
    let spec = CharacterSpec::parse("1/2,1", "ts").unwrap();
    let gf = GeneratingFunction::new(&spec, Strategy::Auto).unwrap();
    let mut total = wreathchar::ImmPolynomial::zero(4, 2);
    for o in outer_partitions(&spec) {
        total = total.try_add(&outer_term(&spec, &o, Strategy::Auto).unwrap()).unwrap();
    }
    assert_eq!(&total, gf.polynomial());
}

#[test]
fn d4_character_matches_oracle() {
    let spec = CharacterSpec::parse("1/-/1/1", "stst").unwrap();
    let gf = GeneratingFunction::new(&spec, Strategy::Auto).unwrap();
    for g in all_elements(3, 4) {
        assert_eq!(gf.character_value(&g).unwrap(), induced_char_oracle(&spec, &g).unwrap(), "{g}");
    }
}

#[test]
fn values_serialize_exactly() {
    let spec = CharacterSpec::parse("2,1/1/2", "sst").unwrap();
    let g = WreathElement::parse_one_line("6 2 3 4@1 5 1@1", 3).unwrap();
    let v = char_from_genfun(&spec, &g).unwrap();
    let text = serde_json::to_string(&v).unwrap();
    assert_eq!(text, r#"{"d":3,"coeffs":[-3,-6]}"#);
    let back: CyclotomicInt = serde_json::from_str(&text).unwrap();
    assert_eq!(back, v);
}
