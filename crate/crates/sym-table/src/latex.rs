//! LaTeX rendering of the series presentation.
//!
//! The numerator table renders group by group from the static data, so the
//! integer polynomials in `p` appear verbatim rather than re-expanded.

use crate::data::{KGroup, KSpec, KTABLE_GENUS4};

fn latex_sym(sig: &[i32; 4]) -> String {
    format!(
        "\\mathrm{{sym}}_{{{}{}{}{}}}",
        sig[0], sig[1], sig[2], sig[3]
    )
}

fn latex_group(group: &KGroup) -> (char, String) {
    let (sign, coeff) = match group.p_coeff.strip_prefix('-') {
        Some(rest) => ('-', rest),
        None => ('+', group.p_coeff),
    };
    let syms = group
        .signatures
        .iter()
        .map(latex_sym)
        .collect::<Vec<_>>()
        .join("+");
    // Table coefficients only carry single-digit exponents, so they are
    // valid LaTeX verbatim and stay greppable against the written form.
    let body = if coeff == "1" {
        syms
    } else if group.signatures.len() == 1 {
        format!("{coeff}\\,{syms}")
    } else {
        format!("{coeff}\\,({syms})")
    };
    (sign, body)
}

fn latex_kspec(k: usize, spec: &KSpec) -> String {
    if spec.sign == 0 {
        return format!("K_{{{k}}} = 0");
    }
    if spec.x0_pow == 0 && spec.p_pow == 0 {
        return format!("K_{{{k}}} = 1");
    }
    let lead = if spec.sign < 0 { "-" } else { "" };
    let prefactor = format!(
        "{lead}\\frac{{x_0^{{{}}}}}{{p^{{{}}}}}",
        spec.x0_pow, -spec.p_pow
    );
    let mut body = String::new();
    for (i, group) in spec.groups.iter().enumerate() {
        let (sign, rendered) = latex_group(group);
        if i == 0 {
            if sign == '-' {
                body.push('-');
            }
        } else {
            body.push(sign);
        }
        body.push_str(&rendered);
    }
    if spec.groups.len() == 1 && spec.groups[0].p_coeff == "1" {
        format!("K_{{{k}}} = {prefactor}\\times {body}")
    } else {
        format!("K_{{{k}}} = {prefactor}\\times\\left({body}\\right)")
    }
}

/// The numerator coefficient table, one display block per coefficient.
pub fn latex_numerator_table() -> String {
    let mut out = String::new();
    for (k, spec) in KTABLE_GENUS4.iter().enumerate() {
        out.push_str("\\[\n");
        out.push_str(&latex_kspec(k, spec));
        out.push_str("\n\\]\n");
    }
    out
}

/// The factored denominator for the given genus.
pub fn latex_denominator(genus: usize) -> Result<String, crate::error::SymError> {
    let factors = crate::builders::denominator_factors(genus)?;
    let rendered = factors
        .iter()
        .map(|f| {
            // Each factor is 1 - x0 x_{i..} X; render from its monomial term.
            let (exps, _) = f
                .terms()
                .find(|(e, _)| !e.is_zero())
                .expect("factor has a monomial term");
            let mut m = String::from("x_0");
            for i in 1..=4 {
                if exps.get(poly_core::Var::satake(i)) != 0 {
                    m.push_str(&format!("x_{i}"));
                }
            }
            format!("(1-{m}\\mathsf{{X}})")
        })
        .collect::<Vec<_>>()
        .join("");
    Ok(format!("Q_{genus}(\\mathsf{{X}}) = {rendered}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_block_keeps_the_table_coefficient_verbatim() {
        let table = latex_numerator_table();
        assert!(table.contains("2p^2+4p+1"));
        assert!(table.contains("K_{2}"));
        assert!(table.contains("K_{14}"));
        assert!(table.contains("\\mathrm{sym}_{1111}"));
        assert!(table.contains("K_{1} = 0"));
        assert!(table.contains("K_{0} = 1"));
    }

    #[test]
    fn signed_groups_render_with_their_signs() {
        let table = latex_numerator_table();
        // K_6 subtracts p^2(p+1) and p^3 groups.
        assert!(table.contains("-p^2(p+1)"));
        assert!(table.contains("-p^3\\,("));
    }

    #[test]
    fn denominator_lists_all_subset_factors() {
        let q2 = latex_denominator(2).unwrap();
        assert_eq!(
            q2,
            "Q_2(\\mathsf{X}) = (1-x_0\\mathsf{X})(1-x_0x_1\\mathsf{X})\
             (1-x_0x_2\\mathsf{X})(1-x_0x_1x_2\\mathsf{X})"
        );
        let q4 = latex_denominator(4).unwrap();
        assert_eq!(q4.matches("(1-").count(), 16);
    }
}
