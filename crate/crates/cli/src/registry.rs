//! Built-in operators addressable with `--example NAME`.

use fockcalc_core::sb::L2Op;
use fockcalc_core::{gamma_examples, ConjugationParams, DiffOp, Poly, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub enum Subject {
    Fock { op: DiffOp, conjugation: Option<ConjugationParams> },
    L2(L2Op),
}

#[derive(Clone, Debug)]
pub struct Example {
    pub name: &'static str,
    pub description: &'static str,
    pub subject: Subject,
}

fn fock(op: DiffOp, conjugation: Option<ConjugationParams>) -> Subject {
    Subject::Fock { op, conjugation }
}

pub fn examples() -> Vec<Example> {
    let standard = ConjugationParams::standard();
    let (gamma1, _) = gamma_examples(&Scalar::one(), &Scalar::one(), &Scalar::zero(), &standard).expect("valid parameters");
    let (_, gamma2) = gamma_examples(&Scalar::zero(), &Scalar::zero(), &Scalar::one(), &standard).expect("valid parameters");
    vec![
        Example { name: "gamma1", description: "(1 + z) + d, symmetric for C_{1,0,1}", subject: fock(gamma1, Some(standard.clone())) },
        Example { name: "gamma2", description: "z d, symmetric for C_{1,0,1}", subject: fock(gamma2, Some(standard)) },
        Example {
            name: "harmonic-oscillator",
            description: "1 + 2z d, the oscillator in Fock form, with the PT conjugation",
            subject: fock(DiffOp::oscillator(), Some(ConjugationParams::pt())),
        },
        Example {
            name: "oscillator-fock",
            description: "-d^2 + z^2 on Fock space",
            subject: fock(DiffOp::new(vec![Poly::from_ints(&[0, 0, 1]), Poly::zero(), Poly::from_ints(&[-1])]), None),
        },
        Example { name: "oscillator-l2", description: "x^2 - D^2 on L^2(R)", subject: Subject::L2(L2Op::oscillator()) },
        Example {
            name: "pt-number",
            description: "z d with the PT conjugation",
            subject: fock(DiffOp::new(vec![Poly::zero(), Poly::from_ints(&[0, 1])]), Some(ConjugationParams::pt())),
        },
        Example {
            name: "pt-first-order",
            description: "d - z, PT-selfadjoint but not selfadjoint",
            subject: fock(DiffOp::new(vec![Poly::from_ints(&[0, -1]), Poly::from_ints(&[1])]), Some(ConjugationParams::pt())),
        },
    ]
}

pub fn example(name: &str) -> Option<Example> {
    examples().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fockcalc_core::symmetry::DEFAULT_SYMMETRY_TOL;
    use fockcalc_core::{is_c_selfadjoint, is_selfadjoint};

    #[test]
    fn conjugations_are_symmetries() {
        for e in examples() {
            if let Subject::Fock { op, conjugation: Some(c) } = &e.subject {
                assert!(is_c_selfadjoint(op, c, DEFAULT_SYMMETRY_TOL).holds, "{}", e.name);
            }
        }
    }

    #[test]
    fn pt_first_order_is_not_selfadjoint() {
        let Subject::Fock { op, .. } = example("pt-first-order").unwrap().subject else { panic!() };
        assert!(!is_selfadjoint(&op, DEFAULT_SYMMETRY_TOL).holds);
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = examples().iter().map(|e| e.name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), examples().len());
    }
}
