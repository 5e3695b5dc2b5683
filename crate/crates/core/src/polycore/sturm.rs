use num_traits::Signed;

use super::{IntPolynomial, PolyError, QuadraticSurd};

/// Sturm chain `p, p', -rem(p, p'), ...` kept in primitive integer form.
/// Only positive rescalings are applied, so sign variations are preserved.
pub fn sturm_chain(p: &IntPolynomial) -> Result<Vec<IntPolynomial>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::Domain("Sturm chain of the zero polynomial"));
    }
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return Ok(chain);
    }
    chain.push(d);
    loop {
        let n = chain.len();
        let (a, b) = (&chain[n - 2], &chain[n - 1]);
        if b.is_constant() {
            break;
        }
        let delta = a.deg() - b.deg();
        let mut r = a.pseudo_rem(b)?;
        if r.is_zero() {
            break;
        }
        // prem scales by lc(b)^(delta+1); undo its sign, then negate.
        let lc_negative = b.leading_coeff().is_negative() && (delta + 1) % 2 == 1;
        if !lc_negative {
            r = -r;
        }
        let c = r.content();
        chain.push(IntPolynomial::new(
            r.coeffs().iter().map(|x| x / &c).collect(),
        ));
    }
    Ok(chain)
}

fn variations(chain: &[IntPolynomial], x: &QuadraticSurd) -> usize {
    let signs: Vec<i32> = chain
        .iter()
        .map(|p| x.sign_of(p))
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of `p` in the open interval `(lo, hi)`.
/// Both endpoints must be non-roots; callers strip endpoint factors first.
pub fn sturm_count(
    p: &IntPolynomial,
    lo: &QuadraticSurd,
    hi: &QuadraticSurd,
) -> Result<usize, PolyError> {
    if lo.try_cmp(hi)? != std::cmp::Ordering::Less {
        return Err(PolyError::Domain("Sturm interval needs lo < hi"));
    }
    if lo.sign_of(p) == 0 || hi.sign_of(p) == 0 {
        return Err(PolyError::EndpointRoot);
    }
    let chain = sturm_chain(p)?;
    let vl = variations(&chain, lo);
    let vh = variations(&chain, hi);
    vl.checked_sub(vh)
        .ok_or(PolyError::Internal("Sturm variation count decreased"))
}
