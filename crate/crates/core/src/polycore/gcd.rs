use super::{IntPolynomial, PolyError};

/// Primitive gcd over the rationals: content-free, positive leading
/// coefficient. `gcd(0, p)` is the primitive part of `p`.
pub fn gcd(p: &IntPolynomial, r: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
    if p.is_zero() && r.is_zero() {
        return Err(PolyError::Domain("gcd of two zero polynomials"));
    }
    let (mut a, mut b) = if p.deg() >= r.deg() || r.is_zero() {
        (p.primitive_part(), r.primitive_part())
    } else {
        (r.primitive_part(), p.primitive_part())
    };
    if a.is_zero() {
        return Ok(b);
    }
    while !b.is_zero() {
        let rem = a.pseudo_rem(&b)?;
        a = b;
        b = rem.primitive_part();
    }
    Ok(a.primitive_part())
}

/// Radical of `p`: the primitive polynomial with the same roots, each simple.
pub fn squarefree_part(p: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
    if p.is_zero() {
        return Err(PolyError::Domain("squarefree part of the zero polynomial"));
    }
    if p.is_constant() {
        return Ok(IntPolynomial::one());
    }
    let g = gcd(p, &p.derivative())?;
    p.primitive_part()
        .div_exact(&g)
        .map(|q| q.primitive_part())
        .ok_or(PolyError::Internal("gcd does not divide its argument"))
}

/// Yun's decomposition: `pp(p) = prod a_i^i` with the `a_i` squarefree and
/// pairwise coprime. Only nonconstant `a_i` are returned.
pub fn squarefree_decomposition(p: &IntPolynomial) -> Result<Vec<(IntPolynomial, u32)>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::Domain("squarefree decomposition of zero"));
    }
    let f = p.primitive_part();
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let inexact = PolyError::Internal("inexact division in squarefree decomposition");
    let df = f.derivative();
    let b = gcd(&f, &df)?;
    let mut c = f.div_exact(&b).ok_or(inexact.clone())?;
    let mut d = &df.div_exact(&b).ok_or(inexact.clone())? - &c.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while !c.is_constant() {
        let a = gcd(&c, &d)?;
        c = c.div_exact(&a).ok_or(inexact.clone())?;
        d = &d.div_exact(&a).ok_or(inexact.clone())? - &c.derivative();
        if !a.is_constant() {
            out.push((a, i));
        }
        i += 1;
    }
    Ok(out)
}

/// Exact multiplicity of `factor` in `p`, together with the cofactor.
pub fn strip_factor(p: &IntPolynomial, factor: &IntPolynomial) -> (IntPolynomial, u32) {
    let mut cur = p.clone();
    let mut k = 0;
    if factor.is_constant() {
        return (cur, 0);
    }
    while let Some(q) = cur.div_exact(factor) {
        if cur.is_zero() {
            break;
        }
        cur = q;
        k += 1;
    }
    (cur, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(
            gcd(&p(&[7, 0, 1]), &p(&[3, -1, 1])).unwrap(),
            IntPolynomial::one()
        );
        let t7 = p(&[7, 1]);
        assert_eq!(gcd(&t7.pow(2), &t7.pow(3)).unwrap(), t7.pow(2));
        assert!(gcd(&IntPolynomial::zero(), &IntPolynomial::zero()).is_err());
    }

    #[test]
    fn gcd_is_primitive_with_positive_lead() {
        let a = p(&[2, 2]).scale(&BigInt::from(-3)); // -6(T+1)
        let b = p(&[4, 0, -4]); // -4(T^2-1)
        assert_eq!(gcd(&a, &b).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&p(&[7, 1]).pow(2)).unwrap(), p(&[7, 1]));
        assert_eq!(squarefree_part(&p(&[7, 0, 1])).unwrap(), p(&[7, 0, 1]));
        let a = p(&[3, -1, 1]);
        let b = p(&[3, 1, 1]);
        let f = &a.pow(2) * &b;
        assert_eq!(squarefree_part(&f).unwrap(), p(&[9, 0, 5, 0, 1]));
        assert!(squarefree_part(&IntPolynomial::zero()).is_err());
    }

    #[test]
    fn yun_decomposition() {
        let a = p(&[3, -1, 1]);
        let b = p(&[3, 1, 1]);
        let c = p(&[-3, 0, 1]);
        let f = &(&a.pow(2) * &b) * &c.pow(3);
        let dec = squarefree_decomposition(&f).unwrap();
        assert_eq!(dec, vec![(b, 1), (a, 2), (c, 3)]);
    }

    #[test]
    fn strip_counts_multiplicity() {
        let c = p(&[-12, 0, 1]);
        let f = &c.pow(2) * &p(&[1, 1]);
        assert_eq!(strip_factor(&f, &c), (p(&[1, 1]), 2));
    }
}
