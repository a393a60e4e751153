//! A table of the published numbers this crate reproduces, each recomputed
//! from scratch.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::code::{count_cyclic_codes, ClosureMode, CodeSpace};
use crate::error::Result;
use crate::galois::GaloisRingCtx;
use crate::metrics::{hamming_weight, min_distance, Metric, SearchOptions};
use crate::poly::text::format_zq;
use crate::poly::{factor_xn_minus_1, fp, hensel_lift, RPoly, ZqPoly};
use crate::ring::{Guards, RingElem, RingParams};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Check {
    fn new(name: &str, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        Check {
            name: name.to_string(),
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

/// Generator of the length-15 free code over `Z8 + uZ8`.
pub fn example2_generator(ring: RingParams) -> ZqPoly {
    ZqPoly::new(ring, vec![1, 5, 7, 4, 7, 3, 0, 6, 1, 6, 1])
}

/// Generators of the length-7 code over `Z4 + uZ4`.
pub const EXAMPLE3_GENERATORS: [&str; 2] = ["1+2x+x^2+3x^3", "ux-u"];

/// Number of distinct ideals among all closures of at most two elements,
/// and whether each of them is in the census.
pub fn ideal_census_audit(ring: RingParams) -> Result<(usize, bool)> {
    let guards = Guards::default();
    let census: BTreeSet<BTreeSet<RingElem>> = ring
        .enumerate_ideals()
        .iter()
        .map(|d| ring.ideal_elements_with(d, &guards))
        .collect::<Result<_>>()?;
    let elems: Vec<RingElem> = ring.elements().collect();
    let mut found = BTreeSet::new();
    for (i, &x) in elems.iter().enumerate() {
        for &y in &elems[i..] {
            found.insert(ring.ideal_closure_with(&[x, y], &guards)?);
        }
    }
    Ok((found.len(), found.is_subset(&census) && census.len() == found.len()))
}

pub fn verify_paper(opts: &SearchOptions) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let z4 = RingParams::new(2, 2)?;
    let z8 = RingParams::new(2, 3)?;
    let z9 = RingParams::new(3, 2)?;

    for (ring, expected) in [(z4, 7), (z9, 8)] {
        let name = format!("ideals of Z{q}+uZ{q}", q = ring.q());
        out.push(Check::new(&name, expected, ring.enumerate_ideals().len()));
        let (found, complete) = ideal_census_audit(ring)?;
        out.push(Check::new(
            &format!("{name}: two-generator closures"),
            format!("{expected} ideals, all listed"),
            format!("{found} ideals, {}", if complete { "all listed" } else { "some unlisted" }),
        ));
    }

    let f3 = factor_xn_minus_1(3, z4)?;
    let listed: Vec<String> = f3.zq_factors().iter().map(format_zq).collect();
    out.push(Check::new("x^3-1 over Z4+uZ4", "x+3, x^2+x+1", listed.join(", ")));
    for (n, ring) in [(3, z4), (7, z4), (15, z8), (5, z9)] {
        let f = factor_xn_minus_1(n, ring)?;
        out.push(Check::new(
            &format!("product of factors of x^{n}-1 over Z{}", ring.q()),
            format_zq(&ZqPoly::x_n_minus_1(ring, n)),
            format_zq(&f.product()),
        ));
    }

    let space3 = CodeSpace::new(3, z4)?;
    out.push(Check::new("cyclic codes of length 3 over Z4+uZ4", 63, count_cyclic_codes(3, z4)?));
    let fingerprints: BTreeSet<Vec<Vec<u64>>> = space3
        .enumerate(opts.budget.max(63))?
        .map(|c| c.module().rows().to_vec())
        .collect();
    out.push(Check::new("distinct length-3 codes enumerated", 63, fingerprints.len()));
    out.push(Check::new(
        "ideals of GR(Z4+uZ4, 2)",
        9,
        space3.context(1).ideals().len(),
    ));

    for (ring, m, expected) in [(z4, 1, 8), (z4, 2, 192), (z8, 1, 32)] {
        let prim = fp::primitive_poly(ring.residue_field(), m)?;
        let ctx = GaloisRingCtx::new(&RPoly::from_zq(&hensel_lift(&prim, ring)?))?;
        let units = ctx
            .elements_with(&Guards::default())?
            .filter(|x| ctx.is_unit(x))
            .count();
        out.push(Check::new(
            &format!("units of GR(Z{}+uZ{}, {m})", ring.q(), ring.q()),
            format!("{expected} = {}", ctx.unit_group_order()),
            format!("{units} = {}", ctx.unit_group_order()),
        ));
    }

    let f = ZqPoly::new(z8, vec![1, 3, 6, 4, 1]);
    out.push(Check::new(
        "x^4+4x^3+6x^2+3x+1 is basic primitive",
        true,
        fp::is_primitive(&f.residue()),
    ));
    let g = example2_generator(z8);
    out.push(Check::new(
        "g divides x^15-1 over Z8+uZ8",
        true,
        g.divides(&ZqPoly::x_n_minus_1(z8, 15))?,
    ));
    let code2 = CodeSpace::new(15, z8)?.code(vec![RPoly::from_zq(&g)], ClosureMode::Ideal);
    out.push(Check::new(
        "length-15 code is free with generator g",
        true,
        code2.is_free() == Some(RPoly::from_zq(&g)),
    ));
    out.push(Check::new("|C| for the length-15 code", "2^30", code2.cardinality()));
    let bch = code2.bch_bound()?;
    out.push(Check::new(
        "BCH run of the length-15 code",
        "delta 7 from roots [1, 2, 3, 4, 5, 6]",
        format!("delta {} from roots {:?}", bch.delta, bch.roots),
    ));
    let four_g = RPoly::from_zq(&g.scale(4)).to_word(15);
    out.push(Check::new("Hamming weight of 4g", 7, hamming_weight(&four_g)));

    let space7 = CodeSpace::new(7, z4)?;
    let span = space7.parse_code(&EXAMPLE3_GENERATORS, ClosureMode::ModuleSpan)?;
    out.push(Check::new("|C| for the length-7 module span", "2^20", span.cardinality()));
    let exhaustive = SearchOptions {
        budget: opts.budget.max(1 << 20),
        ..*opts
    };
    for (metric, label) in [
        (Metric::Lee, "minimum Lee weight of phi(C)"),
        (Metric::GrayHamming, "minimum Hamming weight of the Gray image"),
    ] {
        let d = min_distance(&span, metric, &exhaustive)?;
        out.push(Check::new(label, "4 (exhaustive)", format!(
            "{} ({})",
            d.value,
            if d.exhaustive { "exhaustive" } else { "upper bound" }
        )));
    }
    let ideal = span.with_mode(ClosureMode::Ideal);
    out.push(Check::new(
        "|C| for the ideal closure of the same generators",
        "2^22",
        ideal.cardinality(),
    ));
    Ok(out)
}
