//! Per-class report: invariants, Satake data, the component group by every
//! route, and the resulting packet sizes for `GSpin_{2g+1}` and
//! `Spin_{2g+1}`.

use serde::{Deserialize, Serialize};

use crate::polycore::IntPolynomial;
use crate::satake::{
    component_group_alcove, component_group_brute, component_group_exact, satake_parameter,
    ComponentGroupResult, Route, SatakeError, MAX_BRUTE_RANK,
};
use crate::weil::{invariants, IsogenyClassInvariants, WeilError, WeilPolynomial};

/// Coefficients of `u^{2g} P(1/u)`: the Euler factor is its inverse at
/// `u = q^{-s}`.
pub fn euler_factor(w: &WeilPolynomial) -> IntPolynomial {
    w.poly().reversed()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SatakeSummary {
    /// `theta_1 >= ... >= theta_g`, 12 decimal places.
    pub angles: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RouteVerdict {
    pub route: Route,
    pub order: Option<usize>,
    pub witness: Option<Vec<crate::rootdata::OmegaPairing>>,
    /// Why the route produced no order (skipped or failed).
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RouteNotes {
    pub routes: Vec<RouteVerdict>,
    /// Every route that ran returned the exact route's order.
    pub agreement: bool,
    /// A numeric route failed; exact fields are still valid.
    pub degraded: bool,
    pub diagnostic: Option<String>,
    pub assumption: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PacketReport {
    pub weil: WeilPolynomial,
    pub invariants: IsogenyClassInvariants,
    pub satake: Option<SatakeSummary>,
    pub r_group_order: usize,
    pub restriction_components: usize,
    pub packet_size_gspin: usize,
    pub packet_size_spin: usize,
    pub euler_denominator: IntPolynomial,
    pub notes: RouteNotes,
}

pub fn format_angle(theta: f64) -> String {
    format!("{theta:.12}")
}

fn verdict(route: Route, r: Result<ComponentGroupResult, SatakeError>) -> RouteVerdict {
    match r {
        Ok(c) => RouteVerdict {
            route,
            order: Some(c.order),
            witness: c.witness,
            error: None,
        },
        Err(e) => RouteVerdict {
            route,
            order: None,
            witness: None,
            error: Some(e.to_string()),
        },
    }
}

/// Runs every component-group route and assembles the report. The exact
/// route decides `r_group_order`; the numeric routes are cross-checks.
pub fn analyze(w: &WeilPolynomial, tol: f64) -> Result<PacketReport, WeilError> {
    let inv = invariants(w)?;
    let exact = component_group_exact(w);
    let satake = satake_parameter(w, tol).map(|sp| SatakeSummary {
        angles: sp.angles.iter().map(|&t| format_angle(t)).collect(),
        residual: format!("{:.3e}", sp.residual),
    });

    let mut routes = vec![verdict(Route::Exact, Ok(exact.clone()))];
    routes.push(verdict(Route::Alcove, component_group_alcove(w, tol)));
    if w.g() <= MAX_BRUTE_RANK {
        routes.push(verdict(Route::Brute, component_group_brute(w, tol)));
    } else {
        routes.push(RouteVerdict {
            route: Route::Brute,
            order: None,
            witness: None,
            error: Some(format!("skipped: rank {} above {}", w.g(), MAX_BRUTE_RANK)),
        });
    }
    let degraded = satake.is_err()
        || routes.iter().any(|v| {
            v.order.is_none() && !v.error.as_deref().is_some_and(|e| e.starts_with("skipped"))
        });
    let disagreeing: Vec<Route> = routes
        .iter()
        .filter(|v| v.order.is_some_and(|o| o != exact.order))
        .map(|v| v.route)
        .collect();
    let agreement = disagreeing.is_empty() && !degraded;
    let diagnostic = if !disagreeing.is_empty() {
        Some(format!(
            "routes {disagreeing:?} disagree with the exact route"
        ))
    } else if let Err(e) = &satake {
        Some(e.to_string())
    } else {
        None
    };

    let order = exact.order;
    Ok(PacketReport {
        weil: w.clone(),
        invariants: inv,
        satake: satake.ok(),
        r_group_order: order,
        restriction_components: order,
        packet_size_gspin: 1,
        packet_size_spin: order,
        euler_denominator: euler_factor(w),
        notes: RouteNotes {
            routes,
            agreement,
            degraded,
            diagnostic,
            assumption: "good reduction: P is the characteristic polynomial of Frobenius of the special fiber".into(),
        },
    })
}
