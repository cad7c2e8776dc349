//! Named instances with their right partners and negative controls.

use crate::error::{Error, Result};
use crate::exactla::{CoeffVector, LinMap};
use crate::hopfcore::FinHopf;
use crate::scalarext::{bm_tau, paired_yd_from_left, PairingIso, PhiCompatPair};
use crate::smash::SmashAlgebra;
use crate::ydstruct::{LeftRightYD, RightLeftYD};

use super::{adjoint_group_yd, adjoint_group_yd_with, dual_group_yd, dual_group_yd_with, sweedler_hopf, sweedler_yd, sweedler_yd_with, trivial_yd, FiniteGroup};

/// Replacement matrices applied on top of an instance.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Overrides {
    pub antipode: Option<LinMap>,
    pub left_action: Option<LinMap>,
    pub left_coaction: Option<LinMap>,
    pub right_action: Option<LinMap>,
    pub right_coaction: Option<LinMap>,
    pub tau: Option<LinMap>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub name: String,
    pub description: String,
    /// The suite that exhibits the defect.
    pub suite: String,
    /// Exactly the checks of `suite` that fail once the overrides are applied.
    pub expected_failing: Vec<String>,
    pub overrides: Overrides,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceDescriptor {
    pub name: String,
    pub description: String,
    pub hopf: FinHopf,
    pub left_yd: LeftRightYD,
    pub right_yd: RightLeftYD,
    /// φ: L → R.
    pub phi: LinMap,
    /// Replaces the antipode τ of L♯H wherever it is used.
    pub tau_override: Option<LinMap>,
    pub perturbations: Vec<Perturbation>,
}

impl InstanceDescriptor {
    /// Right partner derived through φ.
    pub fn derived(name: &str, description: &str, left: LeftRightYD, phi: LinMap) -> Result<Self> {
        let right = paired_yd_from_left(&left, &PairingIso::Phi(phi.clone()))?;
        Ok(Self::from_parts(name, description, left, right, phi))
    }

    /// No checks beyond shapes; the suites decide whether the data is any good.
    pub fn from_parts(name: &str, description: &str, left: LeftRightYD, right: RightLeftYD, phi: LinMap) -> Self {
        InstanceDescriptor {
            name: name.into(),
            description: description.into(),
            hopf: left.hopf.clone(),
            left_yd: left,
            right_yd: right,
            phi,
            tau_override: None,
            perturbations: Vec::new(),
        }
    }

    pub fn perturbation(&self, name: &str) -> Option<&Perturbation> {
        self.perturbations.iter().find(|p| p.name == name)
    }

    /// The instance with the named perturbation applied and no perturbations of its own.
    pub fn perturbed(&self, name: &str) -> Result<InstanceDescriptor> {
        let p = self.perturbation(name).ok_or_else(|| Error::InvalidHypothesis(format!("perturbation {name} exists")))?;
        let mut out = self.apply(&p.overrides)?;
        out.name = format!("{}+{}", self.name, name);
        Ok(out)
    }

    pub fn apply(&self, o: &Overrides) -> Result<InstanceDescriptor> {
        let hopf = match &o.antipode {
            Some(s) => self.hopf.with_antipode(s.clone())?,
            None => self.hopf.clone(),
        };
        let (l, r) = (&self.left_yd, &self.right_yd);
        let pick = |x: &Option<LinMap>, d: &LinMap| x.clone().unwrap_or_else(|| d.clone());
        let left = LeftRightYD::new(hopf.clone(), l.alg.clone(), pick(&o.left_action, &l.action), pick(&o.left_coaction, &l.coaction))?;
        let right = RightLeftYD::new(hopf.clone(), r.alg.clone(), pick(&o.right_action, &r.action), pick(&o.right_coaction, &r.coaction))?;
        Ok(InstanceDescriptor {
            name: self.name.clone(),
            description: self.description.clone(),
            hopf,
            left_yd: left,
            right_yd: right,
            phi: self.phi.clone(),
            tau_override: o.tau.clone().or_else(|| self.tau_override.clone()),
            perturbations: Vec::new(),
        })
    }

    /// τ on L♯H: the override if present, otherwise the scalar-extension antipode.
    pub fn tau(&self, lh: &SmashAlgebra) -> LinMap {
        self.tau_override.clone().unwrap_or_else(|| bm_tau(&self.left_yd, lh))
    }

    pub fn phi_pair(&self) -> Result<PhiCompatPair> {
        PhiCompatPair::new(self.left_yd.clone(), self.right_yd.clone(), self.phi.clone())
    }

    fn push(&mut self, name: &str, description: &str, suite: &str, expected: &[&str], overrides: Overrides) {
        self.perturbations.push(Perturbation {
            name: name.into(),
            description: description.into(),
            suite: suite.into(),
            expected_failing: expected.iter().map(|s| s.to_string()).collect(),
            overrides,
        });
    }

    /// S replaced by a sign-flipped map; breaks the antipode law and antimultiplicativity.
    fn antipode_control(&mut self, antipode: LinMap) {
        self.push(
            "antipode-sign",
            "antipode replaced by a sign-flipped map",
            "hopf",
            &["hopf.antipode", "hopf.antipode_antihom"],
            Overrides { antipode: Some(antipode), ..Default::default() },
        );
    }

    /// The identity in place of τ, with the Lu axioms it breaks on this instance.
    fn tau_identity_control(&mut self, expected: &[&str]) {
        let d = self.hopf.dim() * self.left_yd.adim();
        self.push("tau-identity", "the identity used in place of τ", "lu", expected, Overrides { tau: Some(LinMap::identity(d)), ..Default::default() });
    }
}

/// S(x) = +gx instead of −gx.
fn sweedler_sign_flip(s: &LinMap) -> LinMap {
    LinMap::from_fn(4, 4, |k| if k == 2 { s.column(2).neg() } else { s.column(k).clone() })
}

/// ρ(1) = 1⊗g with g not central also breaks the YD condition.
const NONCENTRAL_TWIST: &[&str] = &["yd.left.comodule", "yd.left.yd_condition", "yd.left.smash_yd_condition"];

fn negated(f: &LinMap) -> LinMap {
    f.scale(&crate::ExactScalar::from_int(-1))
}

/// 𝕜C₂ over itself: trivial adjoint action, ρ(u) = u⊗u.
pub fn c2_instance() -> InstanceDescriptor {
    let g = FiniteGroup::cyclic(2);
    let yd = adjoint_group_yd(&g);
    let mut d = InstanceDescriptor::derived("c2", "kC2 acting on itself by conjugation, rho(x) = x (x) x^-1", yd, LinMap::identity(2)).expect("c2 instance");
    d.antipode_control(negated(g.hopf().antipode()));
    // commutative smash, so only the axioms involving β notice
    d.tau_identity_control(&["lu.tau.beta", "lu.tau.balanced", "lu.antipode.balanced"]);
    // ρ(x) = x⊗u sends 1 to 1⊗u
    let bad = adjoint_group_yd_with(&g, |_| 1).coaction;
    d.push(
        "coaction-constant",
        "rho(x) = x (x) u, not unital",
        "yd",
        &["yd.left.comodule"],
        Overrides { left_coaction: Some(bad), ..Default::default() },
    );
    d
}

/// Sweedler's H₄ on 𝕜[y]/(y²): g▷y = −y, x▷y = 0, ρ(y) = y⊗g.
pub fn sweedler_instance() -> InstanceDescriptor {
    let yd = sweedler_yd();
    let mut d = InstanceDescriptor::derived("h4", "Sweedler H4 acting on k[y]/(y^2), rho(y) = y (x) g", yd, LinMap::identity(2)).expect("h4 instance");
    d.antipode_control(sweedler_sign_flip(sweedler_hopf().antipode()));
    d.tau_identity_control(&["lu.tau.antihom", "lu.tau.beta", "lu.antipode.gamma", "lu.tau.balanced", "lu.antipode.balanced"]);
    let trivial = sweedler_yd_with(|a| CoeffVector::unit(8, a * 4)).coaction;
    d.push(
        "coaction-trivial",
        "rho(y) = y (x) 1; breaks only the YD condition, and with it the Takeuchi product",
        "bialgebroid",
        &["bialgebroid.left.yd_condition", "bialgebroid.left.takeuchi.factorizes"],
        Overrides { left_coaction: Some(trivial), ..Default::default() },
    );
    d
}

/// 𝕜S₃ over itself by conjugation with ρ(x) = x⊗x⁻¹.
pub fn s3_instance() -> InstanceDescriptor {
    let g = FiniteGroup::s3();
    let yd = adjoint_group_yd(&g);
    let mut d = InstanceDescriptor::derived("s3", "kS3 acting on itself by conjugation, rho(x) = x (x) x^-1", yd, LinMap::identity(6)).expect("s3 instance");
    d.antipode_control(negated(g.hopf().antipode()));
    d.tau_identity_control(&["lu.tau.antihom", "lu.tau.beta", "lu.antipode.gamma", "lu.tau.balanced", "lu.antipode.balanced"]);
    let twisted = adjoint_group_yd_with(&g, |x| g.conj(1, g.inverse[x])).coaction;
    d.push(
        "coaction-twisted",
        "rho(x) = x (x) (12)x^-1(12)",
        "bialgebroid",
        &[
            "bialgebroid.left.yd_condition",
            "bialgebroid.left.braided_commutativity",
            "bialgebroid.left.quotient_dim",
            "bialgebroid.left.target.antihom",
            "bialgebroid.left.images.commute",
            "bialgebroid.left.counit.bimodule",
            "bialgebroid.left.coassociativity",
            "bialgebroid.left.takeuchi.factorizes",
            "bialgebroid.left.takeuchi.action",
        ],
        Overrides { left_coaction: Some(twisted), ..Default::default() },
    );
    let trivial = adjoint_group_yd_with(&g, |_| g.identity).coaction;
    d.push(
        "coaction-trivial",
        "rho(x) = x (x) e; YD still holds, braided commutativity does not",
        "yd",
        &["yd.left.braided_commutativity"],
        Overrides { left_coaction: Some(trivial), ..Default::default() },
    );
    d
}

/// 𝕜^{S₃} under conjugation with the trivial coaction.
pub fn s3_dual_instance() -> InstanceDescriptor {
    let g = FiniteGroup::s3();
    let n = g.order();
    let yd = dual_group_yd(&g);
    let mut d = InstanceDescriptor::derived("s3-dual", "functions on S3 under conjugation, rho(d_x) = d_x (x) e", yd, LinMap::identity(n)).expect("s3-dual instance");
    d.antipode_control(negated(g.hopf().antipode()));
    // β = α here, so τ = id still satisfies τβ = α
    d.tau_identity_control(&["lu.tau.antihom", "lu.antipode.gamma", "lu.tau.balanced", "lu.antipode.balanced"]);
    let graded = dual_group_yd_with(&g, |a| CoeffVector::unit(n * n, a * n + a)).coaction;
    d.push(
        "coaction-graded",
        "rho(d_x) = d_x (x) x; rho(1) is not 1 (x) e",
        "yd",
        &["yd.left.comodule"],
        Overrides { left_coaction: Some(graded), ..Default::default() },
    );
    d
}

/// 𝕜 as a module algebra over `hopf`; the bialgebroid is `hopf` itself and τ = S.
/// `twist` indexes a grouplike g ≠ 1; `twist_fails` lists what ρ(1) = 1⊗g breaks.
pub fn trivial_instance(name: &str, hopf: &FinHopf, twist: usize, antipode: LinMap, twist_fails: &[&str]) -> InstanceDescriptor {
    let yd = trivial_yd(hopf);
    let mut d = InstanceDescriptor::derived(name, "the ground field with trivial action and coaction", yd, LinMap::identity(1)).expect("trivial instance");
    d.antipode_control(antipode);
    if hopf.antipode().is_identity() {
        // τ = S = id already, so negate it instead
        let n = hopf.dim();
        d.push(
            "tau-negated",
            "minus τ used in place of τ",
            "lu",
            &["lu.tau.antihom", "lu.tau.beta", "lu.antipode.gamma"],
            Overrides { tau: Some(negated(&LinMap::identity(n))), ..Default::default() },
        );
    } else {
        d.tau_identity_control(&["lu.tau.antihom", "lu.antipode.gamma", "lu.antipode.balanced"]);
    }
    d.push(
        "coaction-twisted",
        "rho(1) = 1 (x) g for a grouplike g != 1",
        "yd",
        twist_fails,
        Overrides { left_coaction: Some(LinMap::from_fn(1, hopf.dim(), |_| CoeffVector::unit(hopf.dim(), twist))), ..Default::default() },
    );
    d
}

pub const INSTANCE_NAMES: [&str; 7] = ["c2", "h4", "s3", "s3-dual", "trivial-c2", "trivial-h4", "trivial-s3"];

/// Looks up a built-in instance by name.
pub fn instance(name: &str) -> Option<InstanceDescriptor> {
    Some(match name {
        "c2" => c2_instance(),
        "h4" => sweedler_instance(),
        "s3" => s3_instance(),
        "s3-dual" => s3_dual_instance(),
        "trivial-c2" => {
            let h = FiniteGroup::cyclic(2).hopf();
            trivial_instance(name, &h, 1, negated(h.antipode()), &["yd.left.comodule"])
        }
        "trivial-h4" => {
            let h = sweedler_hopf();
            let s = h.antipode().clone();
            trivial_instance(name, &h, 1, sweedler_sign_flip(&s), NONCENTRAL_TWIST)
        }
        "trivial-s3" => {
            let h = FiniteGroup::s3().hopf();
            trivial_instance(name, &h, 1, negated(h.antipode()), NONCENTRAL_TWIST)
        }
        _ => return None,
    })
}

pub fn all_instances() -> Vec<InstanceDescriptor> {
    INSTANCE_NAMES.iter().map(|n| instance(n).expect("known name")).collect()
}
