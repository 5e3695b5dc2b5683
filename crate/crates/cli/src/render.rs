use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use spinpacket::weil::IsogenyClassInvariants;
use spinpacket::{IntPolynomial, PacketReport, WeilError, WeilPolynomial};

/// Name of the failed check followed by its witness, e.g.
/// `FunctionalEquationFailed k=1`.
pub fn check_name(e: &WeilError) -> String {
    match e {
        WeilError::NotPrimePower(q) => format!("NotPrimePower q={q}"),
        WeilError::BadDegree => "BadDegree".into(),
        WeilError::NotMonic => "NotMonic".into(),
        WeilError::FunctionalEquationFailed { k } => format!("FunctionalEquationFailed k={k}"),
        WeilError::RootsOffWeilCircle { inside, degree } => {
            format!("RootsOffWeilCircle inside={inside} degree={degree}")
        }
        e => e.to_string(),
    }
}

pub fn invalid_json(e: &WeilError) -> Value {
    let (check, witness) = match e {
        WeilError::NotPrimePower(q) => ("NotPrimePower", json!({ "q": q })),
        WeilError::BadDegree => ("BadDegree", Value::Null),
        WeilError::NotMonic => ("NotMonic", Value::Null),
        WeilError::FunctionalEquationFailed { k } => {
            ("FunctionalEquationFailed", json!({ "k": k }))
        }
        WeilError::RootsOffWeilCircle { inside, degree } => (
            "RootsOffWeilCircle",
            json!({ "inside": inside, "degree": degree }),
        ),
        _ => ("Other", Value::Null),
    };
    json!({ "valid": false, "check": check, "witness": witness, "message": e.to_string() })
}

fn in_u(p: &IntPolynomial) -> String {
    p.to_string().replace('T', "u")
}

pub fn report(r: &PacketReport) -> String {
    let w = &r.weil;
    let inv = &r.invariants;
    let mut s = String::new();
    let _ = writeln!(s, "class       {} over F_{} (g={})", w.poly(), w.q(), w.g());
    let _ = writeln!(
        s,
        "invariants  even={} isotypic={} center_dim={} center_dim_quadratic={}",
        inv.is_even, inv.is_isotypic, inv.center_dim, inv.center_dim_quadratic
    );
    let _ = writeln!(s, "radical     {}", inv.radical);
    let _ = writeln!(s, "twist       {}", inv.twist);
    match &r.satake {
        Some(sp) => {
            let _ = writeln!(
                s,
                "angles      {}  (residual {})",
                sp.angles.join(" "),
                sp.residual
            );
        }
        None => {
            let _ = writeln!(s, "angles      unavailable");
        }
    }
    let routes: Vec<String> = r
        .notes
        .routes
        .iter()
        .map(|v| {
            let name = v.route.name();
            match v.order {
                Some(o) => format!("{name}={o}"),
                None => format!("{name}=-"),
            }
        })
        .collect();
    let _ = writeln!(
        s,
        "routes      {}  agreement={}",
        routes.join(" "),
        r.notes.agreement
    );
    let _ = writeln!(
        s,
        "packets     r_group_order={} restriction_components={} spin_packet={} gspin_packet={}",
        r.r_group_order, r.restriction_components, r.packet_size_spin, r.packet_size_gspin
    );
    let _ = writeln!(s, "euler       1/({})", in_u(&r.euler_denominator));
    if let Some(d) = &r.notes.diagnostic {
        let _ = writeln!(s, "diagnostic  {d}");
    }
    s
}

pub fn basechange(b: &WeilPolynomial, r: u32, index: Option<u32>) -> String {
    let mut s = format!("P^({r}) = {} over F_{} (g={})\n", b.poly(), b.q(), b.g());
    if let Some(m) = index {
        let _ = writeln!(s, "index m={m}");
    }
    s
}

pub fn invariants(inv: &IsogenyClassInvariants) -> String {
    format!(
        "radical              {}\n\
         center_dim           {}\n\
         isotypic             {}\n\
         even                 {}\n\
         twist                {}\n\
         center_dim_quadratic {}\n",
        inv.radical,
        inv.center_dim,
        inv.is_isotypic,
        inv.is_even,
        inv.twist,
        inv.center_dim_quadratic
    )
}

#[derive(Serialize)]
pub struct CorpusRow {
    pub label: String,
    pub q: u64,
    pub g: usize,
    pub even: Option<bool>,
    pub spin: Option<usize>,
    pub mismatches: Vec<String>,
}

pub fn corpus_table(rows: &[CorpusRow]) -> String {
    let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(5).max(5);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<width$}  {:>5}  {:>2}  {:<5}  {:>4}  status",
        "label", "q", "g", "even", "spin"
    );
    for r in rows {
        let even = r.even.map_or("-".to_string(), |v| v.to_string());
        let spin = r.spin.map_or("-".to_string(), |v| v.to_string());
        let status = if r.mismatches.is_empty() {
            "ok".to_string()
        } else {
            format!("MISMATCH {}", r.mismatches.join("; "))
        };
        let _ = writeln!(
            s,
            "{:<width$}  {:>5}  {:>2}  {:<5}  {:>4}  {status}",
            r.label, r.q, r.g, even, spin
        );
    }
    let failed = rows.iter().filter(|r| !r.mismatches.is_empty()).count();
    let _ = writeln!(
        s,
        "{} records, {} passed, {} failed",
        rows.len(),
        rows.len() - failed,
        failed
    );
    s
}
