use serde::{Serialize, Serializer};

macro_rules! check_ids {
    ($($v:ident => $name:literal),* $(,)?) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CheckId {
            $($v),*
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$v),*];

            pub fn name(&self) -> &'static str {
                match self {
                    $(CheckId::$v => $name),*
                }
            }
        }
    };
}

check_ids! {
    GReflection => "g_reflection",
    GModulusReal => "g_modulus_real",
    EAde => "e_ade",
    EZeroCatalog => "e_zero_catalog",
    GammaValues => "gamma_values",
    FourierFormula => "fourier_formula",
    HypIntegral1d => "hyp_integral_1d",
    HypIntegral2d => "hyp_integral_2d",
    J2RepConsistency => "j2_rep_consistency",
    J2Duality => "j2_duality",
    J2Symmetry => "j2_symmetry",
    J2SecondDuality => "j2_second_duality",
    J2EigenAde => "j2_eigen_ade",
    P2Invariances => "p2_invariances",
    P2EigenAde => "p2_eigen_ade",
    E2Props => "e2_props",
    E2Asymptotics => "e2_asymptotics",
    E2BoundProbe => "e2_bound_probe",
    E2Selfdual => "e2_selfdual",
    J3RepConsistency => "j3_rep_consistency",
    J3Duality => "j3_duality",
    J3Symmetry => "j3_symmetry",
    J3Reflection => "j3_reflection",
    J3EigenAde => "j3_eigen_ade",
    P3Invariances => "p3_invariances",
    P3EigenAde => "p3_eigen_ade",
    E3Props => "e3_props",
    E3Asymptotics => "e3_asymptotics",
    E3BoundProbe => "e3_bound_probe",
    E3SelfdualProbe => "e3_selfdual_probe",
    MuIntegralEq => "mu_integral_eq",
    ResidueMinusIa => "residue_minus_ia",
    UProperties => "u_properties",
    F2Symmetries => "f2_symmetries",
}

impl CheckId {
    pub fn from_name(s: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name() == s)
    }

    pub fn info(&self) -> CheckInfo {
        info(*self)
    }
}

impl Serialize for CheckId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Static description of a check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CheckInfo {
    pub id: CheckId,
    /// Keys of the formulas the check exercises.
    pub formulas: &'static [&'static str],
    /// Default number of samples.
    pub samples: usize,
    /// Default relative tolerance. For the asymptotic checks this bounds the
    /// fractional shortfall of the fitted decay rate.
    pub tolerance: f64,
    pub probe: bool,
    /// Dominated by two-dimensional quadrature.
    pub slow: bool,
}

const SPECIAL: f64 = 1e-9;
const LINE: f64 = 1e-7;
const CLOSED_FORM: f64 = 1e-10;
const J2_ADE: f64 = 1e-6;
const J3_TIER: f64 = 1e-6;
const J3_ADE: f64 = 1e-5;
const MU: f64 = 1e-4;
const DECAY: f64 = 0.1;

fn info(id: CheckId) -> CheckInfo {
    use CheckId::*;
    let (formulas, samples, tolerance): (&'static [&'static str], usize, f64) = match id {
        GReflection => (&["G-reflection", "GE", "aconv"], 300, SPECIAL),
        GModulusReal => (&["G-conjugation", "umod-G"], 300, SPECIAL),
        EAde => (&["EADE", "K_delta", "e-integral", "asl"], 150, SPECIAL),
        EZeroCatalog => (&["Ezs", "pkl", "zero-order", "G-poles"], 150, SPECIAL),
        GammaValues => (&["GE", "e-integral", "log-gamma", "ladder"], 150, SPECIAL),
        FourierFormula => (&["Fform"], 12, LINE),
        HypIntegral1d => (&["hypint", "gam"], 5, CLOSED_FORM),
        HypIntegral2d => (&["intEval"], 5, CLOSED_FORM),
        J2RepConsistency => (&["J2", "I2", "J2cm", "J2d", "D2", "cD2", "XY"], 9, LINE),
        J2Duality => (&["J2drel", "J2d"], 9, LINE),
        J2Symmetry => (&["J2sym", "J2ri", "J2hom"], 9, LINE),
        J2SecondDuality => (&["J2sd", "conical"], 9, LINE),
        J2EigenAde => (&["J2eigeq", "V2", "e_l", "s_l"], 9, J2_ADE),
        P2Invariances => (&["cP2", "cP2ref", "cP2d", "cP2pi"], 9, LINE),
        P2EigenAde => (&["cP2eigeq", "cV", "slKl", "EpADE", "ep2", "Sep", "cA2", "cA2n", "D2p", "D2n", "cD2p", "cD2n"], 6, J2_ADE),
        E2Props => (&["rE2", "c", "CN", "phi", "W2", "rE2ri", "rE2hom", "rE2d", "rE2p", "rE2rep2", "M2def", "Cb", "rI2", "rE2rep"], 9, LINE),
        E2Asymptotics => (&["rE2as", "EEas", "M2as", "u"], 6, DECAY),
        E2BoundProbe => (&["rE2vb", "rE2bex", "N2xyas", "mas", "Gratb"], 3, 1.0),
        E2Selfdual => (&["E2sd"], 9, LINE),
        J3RepConsistency => (&["J3", "I3", "J3cm", "J3d", "D3", "D3r", "cD3", "cS2", "cK2", "cS3", "cK3"], 5, J3_TIER),
        J3Duality => (&["J3drel", "J3d"], 5, J3_TIER),
        J3Symmetry => (&["J3sym"], 5, J3_TIER),
        J3Reflection => (&["J3ri", "J3hom"], 5, J3_TIER),
        J3EigenAde => (&["J3ev", "V3"], 3, J3_ADE),
        P3Invariances => (&["cP3", "cP3ri", "cP3d", "cP3pi"], 5, J3_TIER),
        P3EigenAde => (&["cP3eigeq", "cVN3", "ep3", "cA3", "cA3n", "D3p", "D3n", "cD3p", "cD3n"], 3, J3_ADE),
        E3Props => (&["rE3", "rE3rep", "rI3", "rE3ri", "rE3hom", "rE3d", "rE3p", "rE3rep2", "hI3", "M3", "defd", "E3sc-forms"], 5, J3_TIER),
        E3Asymptotics => (&["E3sc", "E3-remainder"], 3, DECAY),
        E3BoundProbe => (&["E3-bound", "N3xyas"], 1, 1.0),
        E3SelfdualProbe => (&["E3-selfdual"], 3, 1.0),
        MuIntegralEq => (&["mu-equation", "mu", "rF2"], 3, MU),
        ResidueMinusIa => (&["G-residue"], 150, SPECIAL),
        UProperties => (&["u", "phi", "phuinv", "urefl", "umod", "cas", "uas", "c"], 150, SPECIAL),
        F2Symmetries => (&["rF2", "rF2s", "rF2conj", "W2"], 9, SPECIAL),
    };
    let probe = matches!(id, E2BoundProbe | E3BoundProbe | E3SelfdualProbe);
    let slow = matches!(id, MuIntegralEq | E3Asymptotics | E3BoundProbe | J3EigenAde);
    CheckInfo { id, formulas, samples, tolerance, probe, slow }
}

/// Every formula the registry is required to exercise.
pub const IN_SCOPE: &[&str] = &[
    // parameters, strips, domains
    "aconv", "asl", "Sep", "D2", "cD2", "D3", "D3r", "cD3", "XY", "defd", "mas", "pkl",
    "ep2", "cA2", "cA2n", "D2p", "D2n", "cD2p", "cD2n", "ep3", "cA3", "cA3n", "D3p", "D3n", "cD3p", "cD3n",
    // hyperbolic gamma function
    "GE", "Ezs", "zero-order", "e-integral", "EADE", "K_delta", "Fform", "G-reflection", "G-residue",
    // N = 2
    "J2", "I2", "J2cm", "J2d", "J2drel", "J2sym", "J2sd", "conical", "cP2", "cP2ref", "cP2d", "cP2pi",
    "J2eigeq", "cP2eigeq", "cV", "slKl", "EpADE", "c", "CN", "u", "phi", "phuinv", "cas", "uas", "urefl", "umod",
    "rE2", "rE2ri", "rE2hom", "rE2d", "rE2p", "rE2rep2", "M2def", "Cb", "rI2", "rE2as", "EEas",
    "rE2vb", "rE2bex", "hypint", "E2sd", "W2",
    // N = 3
    "rF2", "rF2s", "mu-equation", "J3", "I3", "J3cm", "J3d", "J3drel", "J3sym", "J3ri", "J3hom",
    "cP3", "cP3ri", "cP3d", "cP3pi", "J3ev", "cP3eigeq", "cVN3", "rE3", "rE3rep", "rI3",
    "rE3ri", "rE3hom", "rE3d", "rE3p", "rE3rep2", "hI3", "M3", "E3sc", "E3-remainder", "E3-bound", "N3xyas", "intEval",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Fast,
    Slow,
    All,
}

impl Suite {
    pub fn from_name(s: &str) -> Option<Suite> {
        match s {
            "fast" => Some(Suite::Fast),
            "slow" => Some(Suite::Slow),
            "all" => Some(Suite::All),
            _ => None,
        }
    }

    pub fn ids(&self) -> Vec<CheckId> {
        CheckId::ALL
            .iter()
            .copied()
            .filter(|id| match self {
                Suite::Fast => !id.info().slow,
                Suite::Slow => id.info().slow,
                Suite::All => true,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        assert_eq!(CheckId::ALL.len(), 34);
        for id in CheckId::ALL {
            assert_eq!(CheckId::from_name(id.name()), Some(*id));
        }
        assert_eq!(CheckId::from_name("unknown_id"), None);
    }

    #[test]
    fn suites_partition() {
        let fast = Suite::Fast.ids();
        let slow = Suite::Slow.ids();
        assert_eq!(fast.len() + slow.len(), 34);
        assert_eq!(slow.len(), 4);
        for id in [CheckId::MuIntegralEq, CheckId::E3Asymptotics, CheckId::E3BoundProbe, CheckId::J3EigenAde] {
            assert!(slow.contains(&id));
        }
    }
}
