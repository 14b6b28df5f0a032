use serde::{Deserialize, Serialize};

use super::LinearRelation;
use crate::linalg::{hermitian_min_eig, spectral_norm, CMat, CVec};
use crate::C64;

/// Property whose quadratic form failed the definiteness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Dissipative,
    Contraction,
    Positive,
}

/// Coefficient vector achieving the most negative value of a form.
#[derive(Debug, Clone)]
pub struct Witness {
    pub property: Property,
    pub coefficients: CVec,
    pub value: f64,
}

#[derive(Debug, Clone)]
pub struct ClassificationReport {
    pub is_operator: bool,
    /// Same as `is_operator`: every operator on C^n is bounded.
    pub is_bounded: bool,
    pub is_symmetric: bool,
    pub is_selfadjoint: bool,
    pub is_dissipative: bool,
    pub is_positive: bool,
    pub is_contraction: bool,
    pub is_isometry: bool,
    pub is_unitary: bool,
    pub is_maximal_dissipative: bool,
    /// One negative-form witness per failed form property, in the order
    /// dissipative, contraction, positive.
    pub witnesses: Vec<Witness>,
}

impl ClassificationReport {
    /// Checks the implication chain between the flags.
    pub fn is_consistent(&self) -> bool {
        (!self.is_selfadjoint || self.is_symmetric)
            && (!self.is_symmetric || self.is_dissipative)
            && (!self.is_unitary || self.is_isometry)
            && (!self.is_isometry || self.is_contraction)
            && (!self.is_positive || self.is_symmetric)
            && (!self.is_maximal_dissipative || self.is_dissipative)
            && (self.is_bounded == self.is_operator)
    }
}

impl LinearRelation {
    /// Hermitian form `Im <f, g>` in the basis coefficients.
    pub fn dissipativity_form(&self) -> CMat {
        let f = self.f_block();
        let g = self.g_block();
        let fg = f.adjoint() * &g;
        (&fg - fg.adjoint()) * C64::new(0.0, -0.5)
    }

    /// Hermitian form `‖f‖² - ‖g‖²` in the basis coefficients.
    pub fn contraction_form(&self) -> CMat {
        let f = self.f_block();
        let g = self.g_block();
        f.adjoint() * &f - g.adjoint() * &g
    }

    /// `<f, g>` in the basis coefficients.
    pub fn pairing_form(&self) -> CMat {
        self.f_block().adjoint() * self.g_block()
    }

    fn min_form(&self, form: &CMat) -> Option<(f64, CVec)> {
        hermitian_min_eig(form)
    }

    fn psd(&self, form: &CMat) -> (bool, Option<(f64, CVec)>) {
        let floor = self.tol().psd_abs * spectral_norm(form).max(1.0);
        match self.min_form(form) {
            None => (true, None),
            Some((v, x)) => (v >= -floor, Some((v, x))),
        }
    }

    fn negligible(&self, form: &CMat) -> bool {
        spectral_norm(form) <= self.tol().psd_abs
    }

    pub fn is_dissipative(&self) -> bool {
        self.psd(&self.dissipativity_form()).0
    }

    pub fn is_symmetric(&self) -> bool {
        self.negligible(&self.dissipativity_form())
    }

    pub fn is_contraction(&self) -> bool {
        self.psd(&self.contraction_form()).0
    }

    pub fn is_isometry(&self) -> bool {
        self.negligible(&self.contraction_form())
    }

    pub fn is_selfadjoint(&self) -> bool {
        self.is_symmetric() && self.equals(&self.adjoint()).unwrap_or(false)
    }

    /// Dissipative with `η_{-i}(T) = 0`.
    pub fn is_maximal_dissipative(&self) -> bool {
        self.is_dissipative() && self.deficiency_index(C64::new(0.0, -1.0)) == 0
    }

    pub fn classify(&self) -> ClassificationReport {
        let n = self.n();
        let parts = self.parts();
        let is_operator = parts.mul.is_zero();

        let (is_dissipative, diss_min) = self.psd(&self.dissipativity_form());
        let is_symmetric = self.negligible(&self.dissipativity_form());
        let (is_contraction, contr_min) = self.psd(&self.contraction_form());
        let is_isometry = self.negligible(&self.contraction_form());
        let pairing = self.pairing_form();
        let (pos_psd, pos_min) = self.psd(&crate::linalg::hermitian_part(&pairing));
        let is_positive = is_symmetric && pos_psd;
        let is_unitary = is_isometry && parts.dom.dim() == n && parts.ran.dim() == n;
        let is_selfadjoint = is_symmetric && self.equals(&self.adjoint()).unwrap_or(false);
        let is_maximal_dissipative =
            is_dissipative && self.deficiency_index(C64::new(0.0, -1.0)) == 0;

        let witnesses = [
            (Property::Dissipative, is_dissipative, diss_min),
            (Property::Contraction, is_contraction, contr_min),
            (Property::Positive, pos_psd, pos_min),
        ]
        .into_iter()
        .filter_map(|(property, ok, min)| match (ok, min) {
            (false, Some((value, coefficients))) => Some(Witness {
                property,
                coefficients,
                value,
            }),
            _ => None,
        })
        .collect();

        ClassificationReport {
            is_operator,
            is_bounded: is_operator,
            is_symmetric,
            is_selfadjoint,
            is_dissipative,
            is_positive,
            is_contraction,
            is_isometry,
            is_unitary,
            is_maximal_dissipative,
            witnesses,
        }
    }
}
