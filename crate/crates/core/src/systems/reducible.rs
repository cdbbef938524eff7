use crate::geometry::Configuration;
use crate::{BiForm, Error, Result};

use super::{in_span, LinearSystem};

/// For four collinear twistor fibers on no (1,1) surface: the products
/// `M_C * Y_C`, where `M_C` is the unique (1,1) surface through the other
/// three and `Y_C = {q_C . l = 0}`. Each product is checked to lie in
/// `|I_A(1,2)|`. Any dimension differing from the expected one is reported
/// as a failed hypothesis.
pub fn reducible_members(config: &Configuration, bidegree: (u32, u32)) -> Result<Vec<BiForm>> {
    if bidegree != (1, 2) {
        return Err(Error::BadBidegree(bidegree, "reducible members are built at (1,2)"));
    }
    if config.len() != 4 || !config.in_t_minus() {
        return Err(Error::HypothesisFailed(
            "configuration is not four collinear disjoint twistor fibers".into(),
        ));
    }
    let h11 = LinearSystem::new(config, (1, 1))?.h0();
    if h11 != 0 {
        return Err(Error::HypothesisFailed(format!("h0(I_A(1,1)) = {h11}, expected 0")));
    }
    let pencil = LinearSystem::new(config, (1, 2))?;
    if pencil.h0() != 2 {
        return Err(Error::HypothesisFailed(format!(
            "h0(I_A(1,2)) = {}, expected 2",
            pencil.h0()
        )));
    }
    let mut out = Vec::with_capacity(4);
    for (i, c) in config.conics().iter().enumerate() {
        let rest = LinearSystem::new(&config.without(i), (1, 1))?;
        if rest.h0() != 1 {
            return Err(Error::HypothesisFailed(format!(
                "h0(I_(A-C{i})(1,1)) = {}, expected 1",
                rest.h0()
            )));
        }
        let product = rest.basis[0].mul(&c.l_form()).normal_form();
        if !in_span(&pencil.basis, &product) {
            return Err(Error::HypothesisFailed(format!("product for C{i} is not in the pencil")));
        }
        out.push(product);
    }
    Ok(out)
}
