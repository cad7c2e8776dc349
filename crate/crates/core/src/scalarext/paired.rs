//! Deriving the partner YD module algebra through a given antiisomorphism, and
//! the inverse antipodes. Everything here uses S⁻¹.

use crate::check::CheckOptions;
use crate::error::{Error, Result};
use crate::exactla::{inverse, Accumulator, CoeffVector, LinMap};
use crate::hopfcore::{antipode_inverse, FinAlgebra, FinHopf};
use crate::scalarext::compat::{verify_phi_compat, verify_theta_compat, PhiCompatPair, ThetaCompatPair};
use crate::smash::SmashAlgebra;
use crate::ydstruct::{LeftRightYD, RightLeftYD};

/// The antiisomorphism a partner is derived through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairingIso {
    /// φ: L → R.
    Phi(LinMap),
    /// θ: R → L.
    Theta(LinMap),
}

impl PairingIso {
    /// The map as L → R and its inverse.
    fn l_to_r(&self) -> Result<(LinMap, LinMap)> {
        let f = match self {
            PairingIso::Phi(f) | PairingIso::Theta(f) => f,
        };
        let g = inverse(f).ok_or_else(|| Error::NotInvertible("antiisomorphism".into()))?;
        Ok(match self {
            PairingIso::Phi(_) => (f.clone(), g),
            PairingIso::Theta(_) => (g, f.clone()),
        })
    }
}

fn s_inverse(h: &FinHopf) -> Result<LinMap> {
    antipode_inverse(h).map_err(|_| Error::AntipodeNotInvertible)
}

/// The algebra structure that makes `to` an antiisomorphism: `u·v = to(from(v)·from(u))`.
fn transported_opposite(src: &FinAlgebra, to: &LinMap, from: &LinMap) -> Result<FinAlgebra> {
    let m = src.dim();
    let mult = LinMap::from_fn(m * m, m, |k| to.apply(&src.mul(from.column(k % m), from.column(k / m))));
    FinAlgebra::new(src.labels().to_vec(), mult, to.apply(src.unit()))
}

fn ensure(ok: bool, failing: Vec<&str>, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PostconditionFailed(format!("{what}: {}", failing.join(", "))))
    }
}

fn check_partner(left: &LeftRightYD, right: &RightLeftYD, iso: &PairingIso) -> Result<()> {
    let opts = CheckOptions::with_cap(1);
    let l = left.verify_all(&opts);
    ensure(l.passed(), l.failing(), "left module algebra")?;
    let r = right.verify_all(&opts);
    ensure(r.passed(), r.failing(), "right module algebra")?;
    let c = match iso {
        PairingIso::Phi(f) => verify_phi_compat(&PhiCompatPair::new(left.clone(), right.clone(), f.clone())?, &opts),
        PairingIso::Theta(f) => verify_theta_compat(&ThetaCompatPair::new(left.clone(), right.clone(), f.clone())?, &opts),
    };
    ensure(c.passed(), c.failing(), "compatibility")
}

/// The right-left partner of `yd`:
/// via φ, `y◁f = φ(S⁻¹f ▷ φ⁻¹y)` and `λ(y) = S(φ⁻¹(y)₁) ⊗ φ(φ⁻¹(y)₀)`;
/// via θ, `y◁f = θ⁻¹(Sf ▷ θy)` and `λ(y) = S⁻¹(θ(y)₁) ⊗ θ⁻¹(θ(y)₀)`.
pub fn paired_yd_from_left(yd: &LeftRightYD, iso: &PairingIso) -> Result<RightLeftYD> {
    let h = &yd.hopf;
    let si = s_inverse(h)?;
    let (n, m) = (yd.hdim(), yd.adim());
    let (to, from) = iso.l_to_r()?;
    let alg = transported_opposite(&yd.alg, &to, &from)?;
    let (act, coact): (Box<dyn Fn(usize, usize) -> CoeffVector + Sync>, Box<dyn Fn(usize) -> CoeffVector + Sync>) = match iso {
        PairingIso::Phi(_) => (
            Box::new(|y, f| to.apply(&yd.act(si.column(f), from.column(y)))),
            Box::new(|y| {
                let mut acc = Accumulator::new(n * m);
                for (k, c) in yd.coact(from.column(y)).iter() {
                    acc.add_outer(c, h.s_basis(k % n), to.column(k / n));
                }
                acc.take()
            }),
        ),
        PairingIso::Theta(_) => (
            Box::new(|y, f| to.apply(&yd.act(h.s_basis(f), from.column(y)))),
            Box::new(|y| {
                let mut acc = Accumulator::new(n * m);
                for (k, c) in yd.coact(from.column(y)).iter() {
                    acc.add_outer(c, si.column(k % n), to.column(k / n));
                }
                acc.take()
            }),
        ),
    };
    let right = RightLeftYD::from_fns(h.clone(), alg, act, coact)?;
    check_partner(yd, &right, iso)?;
    Ok(right)
}

/// The left-right partner of `yd`:
/// via φ, `f▷x = φ⁻¹(φx ◁ Sf)` and `ρ(x) = φ⁻¹(φ(x)₀) ⊗ S⁻¹(φ(x)₋₁)`;
/// via θ, `f▷x = θ(θ⁻¹x ◁ S⁻¹f)` and `ρ(x) = θ(θ⁻¹(x)₀) ⊗ S(θ⁻¹(x)₋₁)`.
pub fn paired_yd_from_right(yd: &RightLeftYD, iso: &PairingIso) -> Result<LeftRightYD> {
    let h = &yd.hopf;
    let si = s_inverse(h)?;
    let (n, m) = (yd.hdim(), yd.adim());
    let (to, from) = iso.l_to_r()?;
    // here `from` carries R to L
    let alg = transported_opposite(&yd.alg, &from, &to)?;
    let (act, coact): (Box<dyn Fn(usize, usize) -> CoeffVector + Sync>, Box<dyn Fn(usize) -> CoeffVector + Sync>) = match iso {
        PairingIso::Phi(_) => (
            Box::new(|f, x| from.apply(&yd.act(to.column(x), h.s_basis(f)))),
            Box::new(|x| {
                let mut acc = Accumulator::new(m * n);
                for (k, c) in yd.coact(to.column(x)).iter() {
                    acc.add_outer(c, from.column(k % m), si.column(k / m));
                }
                acc.take()
            }),
        ),
        PairingIso::Theta(_) => (
            Box::new(|f, x| from.apply(&yd.act(to.column(x), si.column(f)))),
            Box::new(|x| {
                let mut acc = Accumulator::new(m * n);
                for (k, c) in yd.coact(to.column(x)).iter() {
                    acc.add_outer(c, from.column(k % m), h.s_basis(k / m));
                }
                acc.take()
            }),
        ),
    };
    let left = LeftRightYD::from_fns(h.clone(), alg, act, coact)?;
    check_partner(&left, yd, iso)?;
    Ok(left)
}

/// τ⁻¹(x♯f) = S⁻¹(f)·x₀♯x₁ on L♯H.
pub fn tau_inverse(yd: &LeftRightYD, s: &SmashAlgebra) -> Result<LinMap> {
    let si = s_inverse(&yd.hopf)?;
    let n = yd.hdim();
    Ok(LinMap::from_fn(s.dim(), s.dim(), |k| {
        let (x, f) = (k / n, k % n);
        s.mul(&s.from_hopf(si.column(f)), yd.coact_basis(x))
    }))
}

/// τ′⁻¹(f♯y) = y₋₁♯y₀·S⁻¹(f) on H♯R.
pub fn tau_prime_inverse(yd: &RightLeftYD, s: &SmashAlgebra) -> Result<LinMap> {
    let si = s_inverse(&yd.hopf)?;
    let m = yd.adim();
    Ok(LinMap::from_fn(s.dim(), s.dim(), |k| {
        let (f, y) = (k / m, k % m);
        s.mul(yd.coact_basis(y), &s.from_hopf(si.column(f)))
    }))
}
