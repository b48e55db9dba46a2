use fincat_dsl::{format_spec, parse_spec, parse_spec_bytes, ErrorCode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED_TEXT: &str = "category C { object A, B; arrow f : A -> B; compose f . id_A = f; }
finset S = { a, b } map m : S -> S { a -> b; b -> a; }
diagram D : parallel-pair -> C { X -> A; Y -> B; f -> f; g -> f; }
functor F : C -> C { A -> A; B -> B; f -> f; }
nattrans t : F => F { A -> id_A; B -> id_B; }";

const SOUP: &[u8] = b"{};:.,=->#ab \n";

fn mutate(rng: &mut ChaCha8Rng, base: &[u8]) -> Vec<u8> {
    let mut out = base.to_vec();
    for _ in 0..rng.gen_range(1..8) {
        let pos = if out.is_empty() { 0 } else { rng.gen_range(0..out.len()) };
        match rng.gen_range(0..4) {
            0 if !out.is_empty() => {
                out.remove(pos);
            }
            1 => out.insert(pos, rng.gen()),
            2 if !out.is_empty() => out[pos] = SOUP[rng.gen_range(0..SOUP.len())],
            _ => out.truncate(pos),
        }
    }
    out
}

#[test]
fn mutated_inputs_yield_coded_errors_or_documents() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..2_000 {
        let bytes = mutate(&mut rng, SEED_TEXT.as_bytes());
        match parse_spec_bytes(&bytes) {
            Ok(doc) => assert_eq!(parse_spec(&format_spec(&doc)).unwrap(), doc),
            Err(e) => assert!(e.span.line >= 1 && e.span.column >= 1, "{e}"),
        }
    }
}

#[test]
fn invalid_utf8_is_e102() {
    let e = parse_spec_bytes(b"category C {\n  object \xff; }").unwrap_err();
    assert_eq!(e.code, ErrorCode::E102);
    assert_eq!((e.span.line, e.span.column), (2, 10));
}

proptest! {
    #[test]
    fn arbitrary_bytes_never_panic(bytes in proptest::collection::vec(any::<u8>(), 0..256)) {
        let _ = parse_spec_bytes(&bytes);
    }

    #[test]
    fn arbitrary_token_soup_never_panics(words in proptest::collection::vec(
        prop::sample::select(vec!["category", "finset", "map", "object", "arrow", "compose", "{", "}", ";", ",", ":", ".", "=", "->", "=>", "A", "f", "id_A", "parallel-pair"]),
        0..40,
    )) {
        let text = words.join(" ");
        if let Ok(doc) = parse_spec(&text) {
            prop_assert_eq!(parse_spec(&format_spec(&doc)).unwrap(), doc);
        }
    }
}
