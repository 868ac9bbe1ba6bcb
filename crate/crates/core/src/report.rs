//! JSON reports and ASCII diagrams behind the command-line front end.
//!
//! Simple-root and apex indices are 1-based here, as in the usual labelling.

use serde_json::{json, Value};

use crate::arrangement::{
    build_arrangement, codim2_pairs, face_roots, generated_subsystem, intersection_poset, parabolic_closure,
    regions_vs_facets,
};
use crate::error::{Error, Result};
use crate::ideals::{abelian_ideals_below, border, enumerate_abelian_ideals, is_filter, members_of_i_ab, RootFilter};
use crate::rootsys::{Family, RootSet, RootSystem};
use crate::triangulate::{
    f_polynomial, full_triangulation, polytope_facets, positive_restriction, volume_report_from, Triangulation,
};
use crate::verify::{run_all, Check, Outcome};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn meta(rs: &RootSystem) -> Value {
    json!({ "family": rs.family().to_string(), "rank": rs.rank(), "version": VERSION })
}

fn wrap(rs: &RootSystem, command: &str, payload: Value) -> Value {
    json!({ "meta": meta(rs), "command": command, "payload": payload })
}

fn supports_triangulation(rs: &RootSystem) -> bool {
    matches!(rs.family(), Family::A | Family::C)
}

pub fn cmd_report(rs: &RootSystem) -> Result<Value> {
    let ideals = enumerate_abelian_ideals(rs);
    let mut below = serde_json::Map::new();
    for i in rs.long_simple() {
        if rs.marks()[i] == 1 {
            below.insert((i + 1).to_string(), json!(abelian_ideals_below(rs, i)?.len()));
        }
    }
    let mut payload = json!({
        "positive_roots": rs.num_positive(),
        "highest_root": rs.highest_root().coords(),
        "coxeter_number": rs.coxeter_number(),
        "exponents": rs.exponents(),
        "weyl_order": rs.weyl_order().to_string(),
        "abelian_ideals": ideals.len(),
        "abelian_ideals_below": below,
        "facets": polytope_facets(rs)?.len(),
    });
    let p = payload.as_object_mut().unwrap();
    if supports_triangulation(rs) {
        let mut i_ab = serde_json::Map::new();
        for i in rs.long_simple() {
            i_ab.insert((i + 1).to_string(), json!(members_of_i_ab(rs, i)?.len()));
        }
        let t = full_triangulation(rs)?;
        let vol = volume_report_from(rs, &t)?;
        p.insert("i_ab".into(), Value::Object(i_ab));
        p.insert("T".into(), json!(t.len()));
        p.insert("T_plus".into(), json!(positive_restriction(&t).len()));
        p.insert(
            "f_vector".into(),
            json!(f_polynomial(rs)?.iter().map(|x| *x as u64).collect::<Vec<_>>()),
        );
        p.insert(
            "volume".into(),
            json!({
                "vol_P_over_vol_Pi": vol.vol_p_over_vol_pi as u64,
                "vol_Pplus_over_vol_P": ratio(vol.vol_pplus_over_vol_p),
                "exponents_over_weyl_order": ratio(vol.exponents_ratio),
                "closed_form": ratio(vol.closed_form),
                "consistent": vol.consistent(),
            }),
        );
    }
    let hs = build_arrangement(rs)?;
    let poset = intersection_poset(&hs, rs.rank());
    p.insert("arrangement_size".into(), json!(hs.len()));
    p.insert("regions".into(), json!(poset.region_count()));
    p.insert("regions_vs_facets".into(), regions_json(rs)?);
    Ok(wrap(rs, "report", payload))
}

fn ratio((a, b): (i128, i128)) -> String {
    format!("{a}/{b}")
}

fn regions_json(rs: &RootSystem) -> Result<Value> {
    let r = regions_vs_facets(rs)?;
    let mut v = json!({
        "coincide": r.coincide,
        "witness_count": r.witnesses.len(),
        "witness": r.witnesses.first(),
    });
    if let Some(par) = r.highest_short_parallel {
        v.as_object_mut()
            .unwrap()
            .insert("highest_short_parallel".into(), json!(par));
    }
    Ok(v)
}

pub fn triangulation_json(t: &Triangulation) -> Value {
    let simplices: Vec<Value> = t
        .simplices
        .iter()
        .map(|s| {
            json!({
                "vertices": s.vertices.iter().map(|r| r.coords().to_vec()).collect::<Vec<_>>(),
                "apex": s.apex + 1,
                "coset_word": s.coset.word().iter().map(|j| j + 1).collect::<Vec<_>>(),
                "ideal_hex": s.ideal.to_hex(),
            })
        })
        .collect();
    json!({ "count": t.len(), "simplices": simplices })
}

pub fn cmd_triangulate(rs: &RootSystem, positive: bool) -> Result<Value> {
    let t = full_triangulation(rs)?;
    let t = if positive { positive_restriction(&t) } else { t };
    let mut payload = triangulation_json(&t);
    payload
        .as_object_mut()
        .unwrap()
        .insert("positive".into(), json!(positive));
    Ok(wrap(rs, "triangulate", payload))
}

pub fn cmd_arrangement(rs: &RootSystem) -> Result<Value> {
    let hs = build_arrangement(rs)?;
    let poset = intersection_poset(&hs, rs.rank());
    let faces: Vec<Value> = codim2_pairs(rs)
        .into_iter()
        .map(|(i, j)| {
            let v = face_roots(rs, &[i, j]);
            let closure = parabolic_closure(rs, &v);
            let generated = generated_subsystem(rs, &v);
            json!({
                "pair": [i + 1, j + 1],
                "closure_type": closure.dynkin_type,
                "closure_roots": closure.roots.len(),
                "generated_roots": generated.len(),
                "parabolic": generated.len() == closure.roots.len(),
            })
        })
        .collect();
    let payload = json!({
        "hyperplanes": hs.iter().map(|h| h.normal.clone()).collect::<Vec<_>>(),
        "characteristic_polynomial": poset.characteristic_polynomial(),
        "flats": poset.flats.len(),
        "regions": poset.region_count(),
        "codim2_faces": faces,
        "regions_vs_facets": regions_json(rs)?,
    });
    Ok(wrap(rs, "arrangement", payload))
}

pub fn cmd_verify(rs: &RootSystem) -> (Value, bool) {
    let checks: Vec<Check> = run_all(rs);
    let ok = checks.iter().all(|c| c.outcome != Outcome::Fail);
    (wrap(rs, "verify", json!({ "checks": checks, "ok": ok })), ok)
}

/// What `diagram` should draw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiagramSpec {
    Ideal(RootFilter),
    /// 0-based long simple index; every member of I_ab is drawn.
    Apex(usize),
}

/// ASCII grid of the diagram: `#` ideal, `@` border, `.` other, blank outside the shape.
pub fn render_diagram(rs: &RootSystem, ideal: RootFilter) -> Result<String> {
    let (rows, cols) = rs.diagram_dims()?;
    let marked = border(rs, ideal).unwrap_or(RootSet::EMPTY);
    let mut out = String::new();
    for r in 0..rows {
        let line: String = (0..cols)
            .map(|c| match rs.diagram_cell(r, c) {
                None => ' ',
                Some(k) if marked.contains(k) => '@',
                Some(k) if ideal.contains(k) => '#',
                Some(_) => '.',
            })
            .collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_diagram(rs: &RootSystem, spec: &DiagramSpec) -> Result<String> {
    rs.diagram_dims()?;
    let ideals = match spec {
        DiagramSpec::Ideal(set) => vec![*set],
        DiagramSpec::Apex(i) => members_of_i_ab(rs, *i)?,
    };
    let mut out = String::new();
    for (k, set) in ideals.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&format!("ideal {}\n", set.to_hex()));
        out.push_str(&render_diagram(rs, *set)?);
    }
    Ok(out)
}

/// Parse `--ideal <hex>`; the set must be a filter of the root poset.
pub fn parse_ideal(rs: &RootSystem, token: &str) -> Result<RootFilter> {
    let set = RootSet::from_hex(token).map_err(|_| Error::BadSpec(token.to_string()))?;
    if !set.is_subset(RootSet::full(rs.num_positive())) || !is_filter(rs, set) {
        return Err(Error::BadSpec(token.to_string()));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_report() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let r = cmd_report(&rs).unwrap();
        assert_eq!(r["payload"]["facets"], 14);
        assert_eq!(r["payload"]["T"], 20);
        assert_eq!(r["payload"]["T_plus"], 5);
        let back: Value = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn c2_report() {
        let rs = RootSystem::new(Family::C, 2).unwrap();
        let r = cmd_report(&rs).unwrap();
        assert_eq!(r["payload"]["T"], 8);
        assert_eq!(r["payload"]["T_plus"], 3);
        assert_eq!(r["payload"]["regions"], 4);
    }

    #[test]
    fn b4_report() {
        let rs = RootSystem::new(Family::B, 4).unwrap();
        let r = cmd_report(&rs).unwrap();
        assert_eq!(r["payload"]["regions_vs_facets"]["coincide"], false);
        assert!(r["payload"]["regions_vs_facets"]["witness"].is_object());
    }

    #[test]
    fn diagrams() {
        let a4 = RootSystem::new(Family::A, 4).unwrap();
        let m2 = crate::ideals::simple_filter(&a4, 1).unwrap();
        let text = render_diagram(&a4, m2).unwrap();
        assert_eq!(text.matches(['#', '@']).count(), 6);
        assert_eq!(text.matches('@').count(), border(&a4, m2).unwrap().len());
        assert_eq!(render_diagram(&a4, RootSet::EMPTY).unwrap().matches('.').count(), 10);

        let c2 = RootSystem::new(Family::C, 2).unwrap();
        let text = cmd_diagram(&c2, &DiagramSpec::Apex(1)).unwrap();
        assert_eq!(text.matches("ideal").count(), 2);

        assert!(matches!(parse_ideal(&a4, "zz"), Err(Error::BadSpec(_))));
        // α₁ alone is not a filter.
        assert!(matches!(parse_ideal(&a4, "1"), Err(Error::BadSpec(_))));
        assert!(cmd_diagram(&RootSystem::new(Family::B, 3).unwrap(), &DiagramSpec::Apex(0)).is_err());
    }
}
