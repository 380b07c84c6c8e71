use massform::registry::{
    aggregate_pass, entries, entry, entry_partial_sums, matches_filter, verify, verify_all, verify_all_with,
    verify_with, Mode, Params, Status, VerifyOptions,
};
use massform::Error;

#[test]
fn ids_are_sorted_and_unique() {
    let ids: Vec<_> = entries().iter().map(|e| e.id).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(ids, sorted);
}

#[test]
fn rr_21_at_60() {
    let opts = VerifyOptions { include_sides: true, ..VerifyOptions::canonical() };
    let report = verify_with("rr_21", &Params::new().with_degree(60), opts).unwrap();
    assert_eq!(report.status, Status::Pass);
    assert_eq!(report.degree, Some(60));
    let coeffs = &report.lhs.unwrap()["coefficients"];
    assert_eq!(coeffs[4], "2/1");
    assert_eq!(coeffs.as_array().unwrap().len(), 61);
}

#[test]
fn hall_8_with_a_partition() {
    let params = Params::new().with("lambda", "1,1").with_prime(3).with_degree(30);
    assert_eq!(verify("hall_8", &params).unwrap().status, Status::Pass);
}

#[test]
fn unknown_identity() {
    assert!(matches!(verify("nope", &Params::new()), Err(Error::UnknownIdentity(id)) if id == "nope"));
    assert!(matches!(entry("nope"), Err(Error::UnknownIdentity(_))));
}

#[test]
fn parameter_errors() {
    let bad = [
        ("hall_5", Params::new().with("k", 1)),
        ("hall_7", Params::new().with("n", "x")),
        ("hall_7", Params::new().with("n", 99)),
        ("hall_8", Params::new().with("lambda", "1,2")),
        ("gl_24", Params::new().with_prime(4)),
        ("rr_21", Params::new().with_degree(100_000)),
        ("o_27", Params::new().with("eps", "zero")),
        ("ag_23", Params::new().with("r", 1).with("i", 5)),
    ];
    for (id, params) in bad {
        assert!(matches!(verify(id, &params), Err(Error::InvalidParameter(_))), "{id} {params:?}");
    }
}

#[test]
fn truncation_too_small() {
    let params = Params::new().with("lambda", "3,3").with_degree(5);
    assert!(matches!(verify("hall_8", &params), Err(Error::TruncationTooSmall { .. })));
}

#[test]
fn filters() {
    let hall: Vec<_> = entries().iter().filter(|e| matches_filter("hall_*", e.id).unwrap()).map(|e| e.id).collect();
    assert_eq!(hall, ["hall_5", "hall_6", "hall_7", "hall_8"]);
    assert!(matches_filter("[", "hall_5").is_err());
    assert!(verify_all("nothing*", &Params::new()).unwrap().is_empty());
}

#[test]
fn swapping_sides_keeps_the_status() {
    for e in entries().iter().filter(|e| e.mode.has_formal_part()) {
        let params = Params::new().with_degree(e.default_degree.min(20));
        let plain = verify_with(e.id, &params, VerifyOptions::canonical());
        let swapped = verify_with(e.id, &params, VerifyOptions { swap_sides: true, ..VerifyOptions::canonical() });
        match (plain, swapped) {
            (Ok(a), Ok(b)) => assert_eq!(a.status, b.status, "{}", e.id),
            (Err(a), Err(b)) => assert_eq!(a.to_string(), b.to_string(), "{}", e.id),
            (a, b) => panic!("{}: {a:?} vs {b:?}", e.id),
        }
    }
}

#[test]
fn canonical_reports_are_byte_identical() {
    let params = Params::new().with_degree(20);
    let run = |jobs| {
        let results = verify_all_with("*", &params, VerifyOptions::canonical(), jobs).unwrap();
        results
            .into_iter()
            .map(|(id, r)| match r {
                Ok(rep) => serde_json::to_string(&rep).unwrap(),
                Err(e) => format!("{id}: {e}"),
            })
            .collect::<Vec<_>>()
    };
    let first = run(1);
    assert_eq!(first, run(1));
    assert_eq!(first, run(4));
    assert!(first.iter().all(|line| !line.contains("millis")));
}

#[test]
fn defaults_pass_and_diagnostics_do_not_fail() {
    let results = verify_all("*", &Params::new()).unwrap();
    assert_eq!(results.len(), entries().len());
    for (id, r) in &results {
        let rep = r.as_ref().unwrap_or_else(|e| panic!("{id}: {e}"));
        let expected = if rep.mode == Mode::Diagnostic { Status::Diagnostic } else { Status::Pass };
        assert_eq!(rep.status, expected, "{id}");
        if rep.mode == Mode::Diagnostic {
            assert!(rep.diagnostics.iter().any(|f| !f.agrees), "{id} reports no discrepancy");
            assert!(rep.diagnostics.iter().any(|f| f.agrees), "{id} reports no agreement");
        }
    }
    assert!(aggregate_pass(&results));
}

#[test]
fn nonnegative_numeric_partial_sums_are_monotone() {
    for e in entries().iter().filter(|e| e.numeric) {
        let rep = verify(e.id, &Params::new()).unwrap();
        let reading = rep.numeric.unwrap_or_else(|| panic!("{} has no numeric reading", e.id));
        if let Some(monotone) = reading.monotone {
            assert!(monotone, "{}", e.id);
        }
        let (_, sums) = entry_partial_sums(e.id, &Params::new()).unwrap();
        assert_eq!(sums.len(), e.default_degree + 1);
    }
}
