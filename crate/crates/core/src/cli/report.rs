//! Built-in example suites, each producing a deterministic JSON report of
//! computed facts checked against expected values.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exquo::{base_change, extended_quotient_first, fiber_cardinality, piece_count, second_kind_fiber};
use crate::fingrp::GroupElement;
use crate::langlands::{build_phi, partitions, LocalSystem, OrbitLabel, Partition, PrincipalSeries};
use crate::torus::{Scalar, TorusPoint};
use crate::weyl::{InertialDatum, RootDatum, WsMode};

pub const SCHEMA: &str = "exq/1";

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// Stated in the published worked example.
    Published,
    /// Obtained by an independent computation.
    Computed,
    /// True by definition.
    Definitional,
}

#[derive(Clone, Debug, Serialize)]
pub struct Fact {
    pub name: String,
    pub source: Source,
    pub expected: Value,
    pub computed: Value,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub schema: &'static str,
    pub example: String,
    pub facts: Vec<Fact>,
    pub details: Value,
}

impl ExampleReport {
    fn new(example: impl Into<String>) -> Self {
        Self { schema: SCHEMA, example: example.into(), facts: Vec::new(), details: json!({}) }
    }

    fn check(&mut self, name: &str, source: Source, expected: impl Serialize, computed: impl Serialize) {
        let expected = serde_json::to_value(expected).expect("serializable");
        let computed = serde_json::to_value(computed).expect("serializable");
        let pass = expected == computed;
        self.facts.push(Fact { name: name.to_string(), source, expected, computed, pass });
    }

    pub fn all_pass(&self) -> bool {
        self.facts.iter().all(|f| f.pass)
    }

    pub fn published_failure(&self) -> bool {
        self.facts.iter().any(|f| !f.pass && f.source == Source::Published)
    }

    /// 0 when every fact holds, 2 when a published fact fails, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else if self.published_failure() {
            2
        } else {
            1
        }
    }

    /// One `PASS`/`FAIL` line per fact.
    pub fn summary_lines(&self) -> Vec<String> {
        self.facts
            .iter()
            .map(|f| {
                let verdict = if f.pass { "PASS" } else { "FAIL" };
                let source = serde_json::to_value(f.source).unwrap();
                format!("{verdict} [{}] {}: expected {}, computed {}", source.as_str().unwrap(), f.name, f.expected, f.computed)
            })
            .collect()
    }
}

/// Image of the restriction to the units of the ramified character in the
/// `SL(4)` example, on the torus of the adjoint group.
pub fn sl4_inertial() -> InertialDatum {
    InertialDatum::new(vec![TorusPoint::from_angles(&[(1, 2), (1, 2), (1, 2)]), TorusPoint::from_angles(&[(0, 1), (1, 2), (0, 1)])])
        .expect("finite order")
}

pub fn sl4_series(bound: usize) -> Result<PrincipalSeries> {
    PrincipalSeries::new(RootDatum::builtin("PGL4")?, sl4_inertial(), WsMode::Stabilizer, bound)
}

/// Sample points of the `SL(4)` example: generic, interior of an edge, vertex.
pub fn sl4_points() -> [(&'static str, TorusPoint); 3] {
    [
        ("generic", TorusPoint::from_angles(&[(1, 5), (1, 7), (1, 11)])),
        ("edge", TorusPoint::from_angles(&[(0, 1), (4, 5), (0, 1)])),
        ("vertex", TorusPoint::identity(3)),
    ]
}

pub fn run_example_sl4(bound: usize) -> Result<ExampleReport> {
    let mut r = ExampleReport::new("sl4");
    let ps = sl4_series(bound)?;
    let ws = ps.group();
    r.check("W^s order", Source::Published, 4, ws.order());
    let klein = ws.is_abelian() && ws.elements().iter().all(|x| x.compose(x).is_identity());
    r.check("W^s is Z/2 x Z/2", Source::Published, true, klein);
    r.check("R^s is empty", Source::Published, 0, ps.ws.roots.len());

    let eq = extended_quotient_first(ws)?;
    let nontrivial: Vec<_> = eq.iter().filter(|c| !c.class_rep.is_identity()).collect();
    r.check("nontrivial classes", Source::Published, 3, nontrivial.len());
    r.check(
        "pieces per nontrivial class",
        Source::Published,
        vec![2; 3],
        nontrivial.iter().map(|c| c.quotient_component_count).collect::<Vec<_>>(),
    );
    r.check("extra first-kind pieces", Source::Published, 6, nontrivial.iter().map(|c| c.quotient_component_count).sum::<usize>());
    r.check("ordinary quotient piece", Source::Definitional, 1, piece_count(&eq) - 6);
    r.check("extra pieces are intervals", Source::Published, vec![1; 3], nontrivial.iter().map(|c| c.fixed_locus.dimension).collect::<Vec<_>>());

    let mut fibers = Vec::new();
    let mut inventory = Vec::new();
    for (name, t) in sl4_points() {
        let f = fiber_cardinality(ws, &t)?;
        let second = second_kind_fiber(ws, &t)?;
        let springer = ps.springer_fiber(&t)?;
        let lowest = springer.iter().all(|p| ps.cell_of(p).map(|c| c.is_lowest).unwrap_or(false));
        fibers.push(json!({
            "point": name,
            "t": t,
            "stabilizer_order": f.stabilizer_order,
            "first_kind": f.class_count,
            "second_kind": second.len(),
            "all_lowest_cell": lowest,
        }));
        inventory.extend(springer);
        let expected = match name {
            "generic" => (1, Source::Published),
            "edge" => (2, Source::Published),
            _ => (4, Source::Published),
        };
        r.check(&format!("{name} fiber"), expected.1, expected.0, f.class_count);
        r.check(&format!("{name} fiber of the second kind"), Source::Definitional, f.class_count, second.len());
        r.check(&format!("{name} points in the lowest cell"), Source::Computed, true, lowest);
    }
    let packets = ps.lpackets(&inventory)?;
    r.check("L-packets over the sample points", Source::Computed, inventory.len(), packets.iter().map(Vec::len).sum::<usize>());
    r.details = json!({ "fibers": fibers, "lpacket_sizes": packets.iter().map(Vec::len).collect::<Vec<_>>() });
    Ok(r)
}

pub fn run_example_gln(n: usize, bound: usize) -> Result<ExampleReport> {
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidInput(format!("GL(n) example needs 1 <= n <= 6, got {n}")));
    }
    let mut r = ExampleReport::new(format!("gl{n}"));
    let rd = RootDatum::general_linear(n)?;
    let ps = PrincipalSeries::new(rd, InertialDatum::trivial(n), WsMode::Roots, bound)?;
    let w = ps.group();
    let eq = extended_quotient_first(w)?;
    let p_n = partitions(n).len();
    let count_source = if n == 2 { Source::Published } else { Source::Computed };
    r.check("first-kind components", count_source, p_n, piece_count(&eq));

    // The class of an n-cycle fixes the diagonal torus.
    let steinberg = eq
        .iter()
        .find(|c| c.fixed_locus.dimension == 1 && c.centralizer_order == n)
        .or_else(|| eq.iter().find(|c| n == 1 && c.class_rep.is_identity()))
        .ok_or_else(|| Error::InvalidInput("no Steinberg component".into()))?;
    r.check("Steinberg component dimension", Source::Published, 1, steinberg.fixed_locus.dimension);
    r.check("Steinberg component is connected", Source::Published, 1, steinberg.quotient_component_count);

    for f in 1..=3u32 {
        let bc = base_change(w, &eq, f)?;
        r.check(&format!("base change f={f} well defined"), Source::Published, true, bc.well_defined);
        if f == 1 {
            let identity = bc.maps.iter().all(|m| m.iter().enumerate().all(|(i, &j)| i == j));
            r.check("base change f=1 is the identity", Source::Definitional, true, identity);
        }
    }

    // Steinberg parameter at the identity, through the assembly map.
    let one = TorusPoint::identity(n);
    let orbits = if n == 1 { vec![] } else { vec![OrbitLabel::Partition(Partition::regular(n))] };
    let rho = vec![LocalSystem::Trivial; orbits.len()];
    let rp = ps.mu_assemble(&one, &orbits, &rho, 0)?;
    let phi = build_phi(&ps.inert, &one, &Partition::regular(n))?;
    r.check(
        "Steinberg cocharacter",
        Source::Published,
        ps.canonical_h(&phi.h.exponents),
        ps.canonical_h(&rp.phi.h.exponents),
    );
    let fiber = ps.springer_fiber(&one)?;
    let point = fiber.iter().find(|p| p.tau == rp.tau).expect("assembled point lies in the fiber");
    let back = ps.mu_of_point(point)?;
    r.check("Steinberg roundtrip", Source::Definitional, true, back == rp);
    let cell = ps.cell_of(point)?;
    r.check("Steinberg cell is the regular class", Source::Computed, Some(OrbitLabel::Partition(Partition::regular(n))), cell.nilpotent.clone());
    let alpha = Scalar::positive(2, 1);
    r.check("Steinberg i_alpha equals pi_alpha", Source::Definitional, ps.pi_alpha(point, &alpha)?, ps.i_alpha(&rp, &alpha)?);
    r.check("second-kind points at the identity", Source::Computed, p_n, fiber.len());
    r.details = json!({
        "components": eq.iter().map(|c| json!({
            "class": c.class_index,
            "class_size": c.class_size,
            "dimension": c.fixed_locus.dimension,
            "pieces": c.quotient_component_count,
        })).collect::<Vec<_>>(),
        "steinberg": rp,
    });
    Ok(r)
}

/// Deterministic sample of points: identity, points of order two, and a
/// generic point.
pub fn sample_points(rank: usize) -> Vec<TorusPoint> {
    let mut out = vec![TorusPoint::identity(rank)];
    for i in 0..rank {
        let mut a = vec![(0, 1); rank];
        a[i] = (1, 2);
        out.push(TorusPoint::from_angles(&a));
    }
    out.push(TorusPoint::from_angles(&vec![(1, 2); rank]));
    let primes = [5, 7, 11, 13, 17, 19, 23, 29];
    out.push(TorusPoint::from_angles(&(0..rank).map(|i| (1, primes[i % primes.len()])).collect::<Vec<_>>()));
    out.dedup();
    out
}

pub fn run_example_lowest_cell(rd: RootDatum, inert: InertialDatum, mode: WsMode, bound: usize) -> Result<ExampleReport> {
    let mut r = ExampleReport::new(format!("lowest-cell {}", rd.name));
    if rd.rank == 0 {
        return Ok(r);
    }
    let ps = PrincipalSeries::new(rd, inert, mode, bound)?;
    let alphas = [Scalar::positive(2, 1), Scalar::positive(1, 3), Scalar::root_of_unity(1, 4)];
    let mut rows = Vec::new();
    for t in sample_points(ps.rd.rank) {
        let fiber = ps.springer_fiber(&t)?;
        let mut trivial_h = 0;
        let mut misplaced = 0;
        let mut moved = 0;
        for p in &fiber {
            let rp = ps.mu_of_point(p)?;
            if rp.phi.h.is_trivial() {
                trivial_h += 1;
                if !ps.cell_of(p)?.is_lowest {
                    misplaced += 1;
                }
                for a in &alphas {
                    if ps.pi_alpha(p, a)? != ps.canonical(&t)? {
                        moved += 1;
                    }
                }
            }
        }
        // The ordinary quotient sits inside as the point carrying the trivial
        // representation of the stabilizer.
        let embedded = fiber.iter().any(|p| {
            let d = p.springer.as_ref().unwrap();
            p.tau == 0 && d.h.iter().all(|&k| k == 0) && d.orbits().iter().all(OrbitLabel::is_zero) && d.psi == 0
        });
        let name = format!("{:?}", t);
        r.check(&format!("{name}: SL2-trivial parameters in the lowest cell"), Source::Published, 0, misplaced);
        r.check(&format!("{name}: pi_alpha fixes the orbit on the lowest cell"), Source::Definitional, 0, moved);
        r.check(&format!("{name}: ordinary quotient point present"), Source::Published, true, embedded);
        rows.push(json!({ "t": t, "fiber": fiber.len(), "sl2_trivial": trivial_h }));
    }
    r.details = json!({ "points": rows });
    Ok(r)
}
