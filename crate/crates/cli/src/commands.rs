//! One handler per subcommand.  Each returns the human-readable lines,
//! the machine report, and the process exit code together, so the two
//! output channels can never drift apart.

use serde_json::{json, Value};

use laxcomma_core::descent::{descent_verdict_with, Verdict};
use laxcomma_core::laxcomma::{
    coequalizer_lax, coproduct_lax, copower, equalizer_lax, exponential_lax, hom, initial_lift,
    lax_object_iso, power, product_lax, pullback_lax,
};
use laxcomma_core::oracle::{
    gap_hunter, probe_objects, regular_epi_oracle_lax, regular_epi_oracle_ord,
    stable_oracle_failure, verify_coequalizer, verify_coproduct, verify_copower, verify_equalizer,
    verify_exponential_bijection, verify_exponential_naturality, verify_initial_lift_with,
    verify_power, verify_product, verify_pullback, GenConfig, UniversalViolation,
};
use laxcomma_core::presheaf::{
    obstruction_search, pi_morphism, pi_object, presheaf_descent_failure, presheaf_iso,
    representable_as_pi, FinPresheaf,
};
use laxcomma_core::{Error, LaxObject, MonotoneMap};

use crate::cli::{Category, Construction, PresheafOp};
use crate::error::CliError;
use crate::report::Report;
use crate::workspace::Workspace;

pub struct Outcome {
    pub lines: Vec<String>,
    pub report: Report,
    pub code: i32,
}

fn object_lines(o: &LaxObject) -> Vec<String> {
    let t = o.total();
    let order: Vec<String> = t
        .strict_pairs()
        .iter()
        .map(|&(i, j)| format!("{} <= {}", t.name(i), t.name(j)))
        .collect();
    let structure: Vec<String> = (0..t.len())
        .map(|y| format!("{} -> {}", t.name(y), o.base().name(o.value_idx(y))))
        .collect();
    vec![
        format!("carrier: {}", t.elems().join(" ")),
        format!("order: {}", order.join(", ")),
        format!("structure: {}", structure.join("; ")),
    ]
}

fn object_json(o: &LaxObject) -> Value {
    let t = o.total();
    let order: Vec<[&str; 2]> = t
        .strict_pairs()
        .iter()
        .map(|&(i, j)| [t.name(i), t.name(j)])
        .collect();
    let structure: Vec<[&str; 2]> = (0..t.len())
        .map(|y| [t.name(y), o.base().name(o.value_idx(y))])
        .collect();
    json!({
        "carrier": t.elems(),
        "order": order,
        "structure": structure,
        "base": o.base().elems(),
    })
}

fn map_json(m: &MonotoneMap) -> Value {
    let entries: Vec<[&str; 2]> = (0..m.dom().len())
        .map(|i| [m.dom().name(i), m.cod().name(m.apply_idx(i))])
        .collect();
    json!(entries)
}

fn map_line(label: &str, m: &MonotoneMap) -> String {
    let entries: Vec<String> = (0..m.dom().len())
        .map(|i| format!("{} -> {}", m.dom().name(i), m.cod().name(m.apply_idx(i))))
        .collect();
    format!("{label}: {}", entries.join("; "))
}

pub fn check(ws: &Workspace, print: bool) -> Result<Outcome, CliError> {
    let counts = ws.counts();
    // In print mode stdout is the canonical document alone, so it can be
    // redirected to a file and loaded back.
    let lines = if print {
        vec![ws.print()]
    } else if ws.is_empty() {
        vec!["ok: empty workspace".to_string()]
    } else {
        vec![format!(
            "ok: {} declarations ({})",
            ws.len(),
            counts
                .iter()
                .map(|(k, v)| format!("{v} {k}"))
                .collect::<Vec<_>>()
                .join(", ")
        )]
    };
    let mut report = Report::new("check", json!({"declarations": ws.len()}));
    report.result = json!({"ok": true, "entries": counts});
    Ok(Outcome {
        lines,
        report,
        code: 0,
    })
}

pub fn construct(ws: &Workspace, what: &Construction) -> Result<Outcome, CliError> {
    let mut lines = Vec::new();
    let mut report = Report::new("construct", construction_inputs(what));
    let mut code = 0;
    match what {
        Construction::Product { of } => {
            let objects: Vec<&LaxObject> =
                of.iter().map(|n| ws.object(n)).collect::<Result<_, _>>()?;
            let base = base_of(ws, &objects, of)?;
            let (prod, projs) = product_lax(&base, &objects)?;
            lines.extend(object_lines(&prod));
            for (k, p) in projs.iter().enumerate() {
                lines.push(map_line(&format!("projection {k}"), p.map()));
            }
            report.result = object_json(&prod);
            report.evidence = json!(projs.iter().map(|p| map_json(p.map())).collect::<Vec<_>>());
        }
        Construction::Coproduct { of } => {
            let objects: Vec<&LaxObject> =
                of.iter().map(|n| ws.object(n)).collect::<Result<_, _>>()?;
            let base = base_of(ws, &objects, of)?;
            let (sum, injs) = coproduct_lax(&base, &objects)?;
            lines.extend(object_lines(&sum));
            for (k, i) in injs.iter().enumerate() {
                lines.push(map_line(&format!("injection {k}"), i.map()));
            }
            report.result = object_json(&sum);
            report.evidence = json!(injs.iter().map(|i| map_json(i.map())).collect::<Vec<_>>());
        }
        Construction::Equalizer { f, g } => {
            let (eq, incl) = equalizer_lax(ws.morphism(f)?, ws.morphism(g)?)?;
            lines.extend(object_lines(&eq));
            lines.push(map_line("inclusion", incl.map()));
            report.result = object_json(&eq);
            report.evidence = map_json(incl.map());
        }
        Construction::Coequalizer { f, g } => {
            let (q, qm) = coequalizer_lax(ws.morphism(f)?, ws.morphism(g)?)?;
            lines.extend(object_lines(&q));
            lines.push(map_line("quotient", qm.map()));
            report.result = object_json(&q);
            report.evidence = map_json(qm.map());
        }
        Construction::Pullback { f, g } => {
            let (pb, p1, p2) = pullback_lax(ws.morphism(f)?, ws.morphism(g)?)?;
            lines.extend(object_lines(&pb));
            lines.push(map_line("projection 0", p1.map()));
            lines.push(map_line("projection 1", p2.map()));
            report.result = object_json(&pb);
            report.evidence = json!([map_json(p1.map()), map_json(p2.map())]);
        }
        Construction::Lift {
            carrier,
            over,
            legs,
        } => {
            let base = ws.poset(over)?;
            let carrier = ws.preorder(carrier)?;
            let family = lift_family(ws, legs)?;
            let (lift, _) = initial_lift(&base, &carrier, &family)?;
            lines.extend(object_lines(&lift));
            report.result = object_json(&lift);
        }
        Construction::Exponential { of, exp } => {
            let b = ws.object(of)?;
            let a = ws.object(exp)?;
            match exponential_lax(a, b) {
                Ok(e) => {
                    lines.extend(object_lines(&e.object));
                    lines.push(map_line("evaluation", e.eval.map()));
                    report.result = object_json(&e.object);
                    report.evidence = map_json(e.eval.map());
                }
                Err(err @ Error::NotExponentiable { .. }) => {
                    lines.push(format!("not exponentiable: {err}"));
                    report.result = json!({"exponentiable": false, "reason": err.to_string()});
                    code = 1;
                }
                Err(err) => return Err(err.into()),
            }
        }
        Construction::Power { w, of } => {
            let w = ws.preorder(w)?;
            let a = ws.object(of)?;
            let p = power(&w, a)?;
            lines.extend(object_lines(&p.object));
            report.result = object_json(&p.object);
        }
        Construction::Copower { w, of } => {
            let w = ws.preorder(w)?;
            let a = ws.object(of)?;
            let (cp, pw, py) = copower(&w, a)?;
            lines.extend(object_lines(&cp));
            lines.push(map_line("weight part", &pw));
            lines.push(map_line("carrier part", &py));
            report.result = object_json(&cp);
            report.evidence = json!([map_json(&pw), map_json(&py)]);
        }
    }
    Ok(Outcome {
        lines,
        report,
        code,
    })
}

fn construction_inputs(what: &Construction) -> Value {
    match what {
        Construction::Product { of } => json!({"kind": "product", "of": of}),
        Construction::Coproduct { of } => json!({"kind": "coproduct", "of": of}),
        Construction::Equalizer { f, g } => json!({"kind": "equalizer", "f": f, "g": g}),
        Construction::Coequalizer { f, g } => json!({"kind": "coequalizer", "f": f, "g": g}),
        Construction::Pullback { f, g } => json!({"kind": "pullback", "f": f, "g": g}),
        Construction::Lift {
            carrier,
            over,
            legs,
        } => json!({"kind": "lift", "carrier": carrier, "over": over, "legs": legs}),
        Construction::Exponential { of, exp } => {
            json!({"kind": "exponential", "of": of, "exp": exp})
        }
        Construction::Power { w, of } => json!({"kind": "power", "w": w, "of": of}),
        Construction::Copower { w, of } => json!({"kind": "copower", "w": w, "of": of}),
    }
}

fn base_of(
    _ws: &Workspace,
    objects: &[&LaxObject],
    names: &[String],
) -> Result<laxcomma_core::BasePoset, CliError> {
    match objects.first() {
        Some(o) => Ok(o.base().clone()),
        None => Err(CliError::Unresolved(format!(
            "a base poset (no factors given among {names:?})"
        ))),
    }
}

fn lift_family(
    ws: &Workspace,
    legs: &[String],
) -> Result<Vec<(MonotoneMap, LaxObject)>, CliError> {
    legs.iter()
        .map(|leg| {
            let (map, obj) = leg
                .split_once(':')
                .ok_or_else(|| CliError::Unresolved(format!("leg `{leg}` (want MAP:OBJECT)")))?;
            Ok((ws.map(map)?.clone(), ws.object(obj)?.clone()))
        })
        .collect()
}

pub fn descent(ws: &Workspace, morphism: &str, strict: bool) -> Result<Outcome, CliError> {
    let f = ws.morphism(morphism)?;
    let v = descent_verdict_with(f, strict);
    let verdict = match v.verdict {
        Verdict::Effective => "Effective",
        Verdict::NotEffective => "NotEffective",
        Verdict::Unknown => "Unknown",
    };
    let e = &v.evidence;
    let mut lines = vec![format!("verdict: {verdict}")];
    lines.push(format!("regular epi (lax): {}", e.regepi_lax));
    lines.push(format!("stable regular epi (lax): {}", e.stable_regepi_lax));
    lines.push(format!("chains lift underneath: {}", e.ed_ord));
    lines.push(format!("pinned chains lift: {}", e.ped));
    if let Some(w) = &e.ed_witness {
        lines.push(format!("chain with no lift: ({}, {}, {})", w[0], w[1], w[2]));
    }
    if let Some(w) = &e.ped_witness {
        lines.push(format!(
            "chain with no pinned lift: ({}, {}, {})",
            w[0], w[1], w[2]
        ));
    }
    let mut report = Report::new(
        "descent",
        json!({"morphism": morphism, "strict": strict}),
    );
    report.result = json!({"verdict": verdict});
    report.evidence = serde_json::to_value(e).expect("evidence is plain data");
    report.witnesses = json!({
        "regular_epi": e.regepi_witness,
        "stable": e.stable_witness,
        "chain": e.ed_witness,
        "pinned_chain": e.ped_witness,
    });
    let code = match v.verdict {
        Verdict::Effective => 0,
        _ => 1,
    };
    Ok(Outcome {
        lines,
        report,
        code,
    })
}

fn presheaf_json(g: &FinPresheaf) -> Value {
    let base = g.base();
    let levels: Vec<Value> = (0..base.len())
        .map(|x| {
            let l = g.level(x);
            let rel: Vec<[&str; 2]> = (0..l.len())
                .flat_map(|i| (0..l.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| l.related_idx(i, j))
                .map(|(i, j)| [l.name(i), l.name(j)])
                .collect();
            json!({"at": base.name(x), "elems": l.elems(), "rel": rel})
        })
        .collect();
    json!({"kind": format!("{:?}", g.kind()), "levels": levels})
}

pub fn presheaf(ws: &Workspace, op: &PresheafOp) -> Result<Outcome, CliError> {
    match op {
        PresheafOp::Pi { object } => {
            let o = ws.object(object)?;
            let g = pi_object(o);
            let base = g.base().clone();
            let mut lines = Vec::new();
            for x in 0..base.len() {
                lines.push(format!(
                    "at {}: {}",
                    base.name(x),
                    g.level(x).elems().join(" ")
                ));
            }
            let mut report = Report::new("presheaf", json!({"op": "pi", "object": object}));
            report.result = presheaf_json(&g);
            Ok(Outcome {
                lines,
                report,
                code: 0,
            })
        }
        PresheafOp::Descent { morphism } => {
            let f = ws.morphism(morphism)?;
            let alpha = pi_morphism(f);
            let witness = presheaf_descent_failure(&alpha);
            let ok = witness.is_none();
            let lines = vec![match &witness {
                None => "pointwise descent: holds at every level".to_string(),
                Some(w) => format!("pointwise descent fails: {w:?}"),
            }];
            let mut report = Report::new(
                "presheaf",
                json!({"op": "descent", "morphism": morphism}),
            );
            report.result = json!({"holds": ok});
            report.witnesses = serde_json::to_value(&witness).expect("plain data");
            Ok(Outcome {
                lines,
                report,
                code: i32::from(!ok),
            })
        }
        PresheafOp::Represent { object } => {
            let o = ws.object(object)?;
            let g = pi_object(o);
            let mut report =
                Report::new("presheaf", json!({"op": "represent", "object": object}));
            match representable_as_pi(&g) {
                Ok(recovered) => {
                    let faithful = lax_object_iso(o, &recovered).is_some()
                        && presheaf_iso(&g, &pi_object(&recovered)).is_some();
                    report.result = json!({"representable": true, "round_trip": faithful});
                    let mut lines = vec!["representable: recovered the object".to_string()];
                    lines.extend(object_lines(&recovered));
                    Ok(Outcome {
                        lines,
                        report,
                        code: i32::from(!faithful),
                    })
                }
                Err(reason) => {
                    report.result = json!({"representable": false});
                    report.witnesses = serde_json::to_value(&reason).expect("plain data");
                    Ok(Outcome {
                        lines: vec![format!("not representable: {reason}")],
                        report,
                        code: 1,
                    })
                }
            }
        }
        PresheafOp::Obstruct { morphism, bound } => {
            let f = ws.morphism(morphism)?;
            let mut report = Report::new(
                "presheaf",
                json!({"op": "obstruct", "morphism": morphism, "bound": bound}),
            );
            match obstruction_search(f, *bound) {
                Ok(certs) => {
                    report.result = json!({"certificates": certs.len()});
                    report.witnesses = serde_json::to_value(&certs).expect("plain data");
                    Ok(Outcome {
                        lines: vec![format!(
                            "searched probes up to size {bound}: {} certificates",
                            certs.len()
                        )],
                        report,
                        code: 0,
                    })
                }
                Err(Error::Precondition(msg)) => {
                    report.result = json!({"refused": msg});
                    Ok(Outcome {
                        lines: vec![format!("refused: {msg}")],
                        report,
                        code: 2,
                    })
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn hunt(
    ws: &Workspace,
    base: &str,
    max_size: usize,
    seed: u64,
    budget: u64,
    density: f64,
    obstruct_bound: Option<usize>,
) -> Result<Outcome, CliError> {
    let base = ws.poset(base)?;
    let cfg = GenConfig {
        seed,
        max_elems: max_size,
        base_pool: vec![base],
        density,
    };
    let found = gap_hunter(&cfg, budget);
    let mut lines = vec![format!(
        "{} gap instance(s) in {budget} draws (seed {seed})",
        found.len()
    )];
    for (i, inst) in found.iter().enumerate() {
        lines.push(format!(
            "#{i}: |src| = {}, |tgt| = {}, stable quotient with lifting chains but no pinned lifts",
            inst.morphism.src().total().len(),
            inst.morphism.tgt().total().len(),
        ));
    }
    let mut report = Report::new(
        "hunt",
        json!({
            "base": cfg.base_pool[0].elems(),
            "max_size": max_size,
            "budget": budget,
            "density": density,
        }),
    );
    report.seed = Some(seed);
    report.result = json!({"instances": found.len()});
    report.witnesses = serde_json::to_value(&found).expect("plain data");
    if let Some(bound) = obstruct_bound {
        let outcomes: Vec<Value> = found
            .iter()
            .enumerate()
            .map(|(i, inst)| match obstruction_search(&inst.morphism, bound) {
                Ok(certs) => json!({"instance": i, "certificates": certs}),
                Err(e) => json!({"instance": i, "refused": e.to_string()}),
            })
            .collect();
        lines.push(format!(
            "obstruction search at bound {bound}: {} instance(s) processed",
            outcomes.len()
        ));
        report.evidence = json!(outcomes);
    }
    Ok(Outcome {
        lines,
        report,
        code: 0,
    })
}

fn violation_outcome(
    kind: &str,
    inputs: Value,
    violation: Option<UniversalViolation>,
) -> Outcome {
    let mut report = Report::new("oracle", inputs);
    let ok = violation.is_none();
    report.result = json!({"kind": kind, "verified": ok});
    let lines = match &violation {
        None => vec![format!("{kind}: universal property verified")],
        Some(v) => vec![format!(
            "{kind}: violated at stage `{}` on probe {} ({})",
            v.stage, v.probe, v.detail
        )],
    };
    report.evidence = serde_json::to_value(&violation).expect("plain data");
    Outcome {
        lines,
        report,
        code: i32::from(!ok),
    }
}

pub fn oracle_regular_epi(
    ws: &Workspace,
    morphism: &str,
    category: Category,
) -> Result<Outcome, CliError> {
    let f = ws.morphism(morphism)?;
    let ok = match category {
        Category::Ord => regular_epi_oracle_ord(f.map()),
        Category::Lax => regular_epi_oracle_lax(f),
    };
    let mut report = Report::new(
        "oracle",
        json!({"op": "regular-epi", "morphism": morphism, "category": format!("{category:?}").to_lowercase()}),
    );
    report.result = json!({"regular_epi": ok});
    Ok(Outcome {
        lines: vec![format!("regular epi ({category:?}): {ok}")],
        report,
        code: i32::from(!ok),
    })
}

pub fn oracle_stable(ws: &Workspace, morphism: &str, bound: usize) -> Result<Outcome, CliError> {
    let f = ws.morphism(morphism)?;
    let witness = stable_oracle_failure(f, bound);
    let ok = witness.is_none();
    let mut report = Report::new(
        "oracle",
        json!({"op": "stable", "morphism": morphism, "bound": bound}),
    );
    report.result = json!({"stable": ok});
    let lines = match &witness {
        None => vec![format!("stable under pullback along probes up to size {bound}")],
        Some(g) => vec![format!(
            "destabilized by a probe with carrier {:?}",
            g.src().total().elems()
        )],
    };
    report.witnesses = serde_json::to_value(&witness).expect("plain data");
    Ok(Outcome {
        lines,
        report,
        code: i32::from(!ok),
    })
}

pub fn oracle_verify(
    ws: &Workspace,
    what: &Construction,
    bound: usize,
) -> Result<Outcome, CliError> {
    let mut inputs = construction_inputs(what);
    inputs["bound"] = json!(bound);
    let outcome = match what {
        Construction::Product { of } => {
            let objects: Vec<&LaxObject> =
                of.iter().map(|n| ws.object(n)).collect::<Result<_, _>>()?;
            let base = base_of(ws, &objects, of)?;
            let (prod, projs) = product_lax(&base, &objects)?;
            let raw: Vec<MonotoneMap> = projs.iter().map(|m| m.map().clone()).collect();
            violation_outcome(
                "product",
                inputs,
                verify_product(&prod, &raw, &objects, bound),
            )
        }
        Construction::Coproduct { of } => {
            let objects: Vec<&LaxObject> =
                of.iter().map(|n| ws.object(n)).collect::<Result<_, _>>()?;
            let base = base_of(ws, &objects, of)?;
            let (sum, injs) = coproduct_lax(&base, &objects)?;
            let raw: Vec<MonotoneMap> = injs.iter().map(|m| m.map().clone()).collect();
            violation_outcome(
                "coproduct",
                inputs,
                verify_coproduct(&sum, &raw, &objects, bound),
            )
        }
        Construction::Equalizer { f, g } => {
            let (f, g) = (ws.morphism(f)?, ws.morphism(g)?);
            let (eq, incl) = equalizer_lax(f, g)?;
            violation_outcome(
                "equalizer",
                inputs,
                verify_equalizer(&eq, incl.map(), f, g, bound),
            )
        }
        Construction::Coequalizer { f, g } => {
            let (f, g) = (ws.morphism(f)?, ws.morphism(g)?);
            let (q, qm) = coequalizer_lax(f, g)?;
            violation_outcome(
                "coequalizer",
                inputs,
                verify_coequalizer(&q, qm.map(), f, g, bound),
            )
        }
        Construction::Pullback { f, g } => {
            let (f, g) = (ws.morphism(f)?, ws.morphism(g)?);
            let (pb, p1, p2) = pullback_lax(f, g)?;
            violation_outcome(
                "pullback",
                inputs,
                verify_pullback(&pb, p1.map(), p2.map(), f, g, bound),
            )
        }
        Construction::Lift {
            carrier,
            over,
            legs,
        } => {
            let base = ws.poset(over)?;
            let carrier = ws.preorder(carrier)?;
            let family = lift_family(ws, legs)?;
            let (lift, _) = initial_lift(&base, &carrier, &family)?;
            let probes = probe_objects(&base, bound);
            violation_outcome(
                "lift",
                inputs,
                verify_initial_lift_with(&lift, &family, &probes),
            )
        }
        Construction::Exponential { of, exp } => {
            let b = ws.object(of)?;
            let a = ws.object(exp)?;
            let e = exponential_lax(a, b)?;
            let probes = probe_objects(b.base(), bound);
            let mut violation = None;
            'outer: for w in &probes {
                if let Some(v) = verify_exponential_bijection(&e, w, a, b) {
                    violation = Some(v);
                    break;
                }
                for w2 in probes.iter().take(4) {
                    for u in hom(w2, w) {
                        if let Some(v) = verify_exponential_naturality(&u, a, b) {
                            violation = Some(v);
                            break 'outer;
                        }
                    }
                }
            }
            violation_outcome("exponential", inputs, violation)
        }
        Construction::Power { w, of } => {
            let w = ws.preorder(w)?;
            let a = ws.object(of)?;
            let p = power(&w, a)?;
            violation_outcome("power", inputs, verify_power(&w, a, &p, bound))
        }
        Construction::Copower { w, of } => {
            let w = ws.preorder(w)?;
            let a = ws.object(of)?;
            let (cp, pw, py) = copower(&w, a)?;
            violation_outcome("copower", inputs, verify_copower(&w, a, &cp, &pw, &py, bound))
        }
    };
    Ok(outcome)
}
