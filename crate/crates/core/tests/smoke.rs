use qcongruence::suite::{verify_statement, Params, Variant};

fn check(id: &str, n: u64, variant: Option<Variant>) {
    let r = verify_statement(id, Params::for_n(n, variant)).unwrap();
    assert!(r.holds, "{id} n={n} variant={variant:?}: {r:?}");
    println!("{id} n={n} {variant:?} ok in {}ms warnings={:?}", r.elapsed_ms, r.warnings);
}

#[test]
fn theorems_tiny() {
    for n in [1u64, 3, 5] {
        check("thm1-half", n, None);
        check("thm1-full", n, None);
        check("thm2", n, None);
    }
}

#[test]
fn lemmas_tiny() {
    for n in [1u64, 3, 5, 7] {
        check("lem-q-wolstenholme", n, None);
        check("lem-q-morley", n, None);
        check("lem-q-fermat", n, None);
    }
}

#[test]
fn aux_tiny() {
    for n in [3u64, 5, 7] {
        check("eq-gppk-new", n, None);
        check("eq-abcd", n, None);
        check("sec2-aux-1", n, None);
        check("sec2-aux-2", n, None);
        check("sec3-aux-ratio", n, None);
        check("sec3-aux-binom", n, None);
        check("eq-2nk", n, None);
        check("eq-2nk-2", n, None);
        check("eq-equiv2", n, None);
        check("identity-fn03n+1", n, None);
    }
}

#[test]
fn corollaries_tiny() {
    for n in [1u64, 3, 5] {
        check("eq-wei", n, Some(Variant::Half));
        check("eq-wei", n, Some(Variant::Full));
        check("eq-guozeng", n, None);
        check("eq-q4k-3k-2", n, Some(Variant::Half));
        check("cor-one", n, None);
        check("eq-q-tauraso", n, None);
        check("conj-2", n, None);
        check("eq-q4k-3k-sec4", n, Some(Variant::Full));
    }
    for n in [3u64, 5] {
        check("eq-q-vanhamme-intro", n, None);
        check("eq-q-div3", n, None);
    }
}

#[test]
fn parametric_tiny() {
    for n in [1u64, 3, 5] {
        check("eq-equiv-parametric", n, None);
        check("conj-parametric", n, Some(Variant::Half));
        check("conj-parametric", n, Some(Variant::Full));
        check("thm53-expression", n, Some(Variant::Half));
    }
}

#[test]
fn padic_tiny() {
    use qcongruence::suite::verify_statement;
    for p in [5u64, 7] {
        for (id, var) in [
            ("cl-vanhamme", Some(Variant::Half)),
            ("cl-sun-p4", Some(Variant::Full)),
            ("cl-gz-div3", None),
            ("cl-cxh", None),
            ("cl-sun-3-1", None),
            ("cl-sun-combin", Some(Variant::Half)),
            ("cl-sun-2", None),
            ("cl-sun-3", None),
            ("cl-sun-4", None),
            ("cl-sun2-4", None),
        ] {
            let r = verify_statement(id, Params::for_p(p, var)).unwrap();
            assert!(r.holds, "{id} p={p}: {r:?}");
        }
    }
}
