//! Fixtures shared by the criterion benches.

use scalext_core::catalog::{instance, InstanceDescriptor};
use scalext_core::exactla::LinMap;
use scalext_core::scalarext::{left_scalar_ext, PhiCompatPair, ScalarExtension};

pub fn descriptor(name: &str) -> InstanceDescriptor {
    instance(name).unwrap_or_else(|| panic!("no catalog instance {name}"))
}

pub fn left_ext(name: &str) -> ScalarExtension {
    left_scalar_ext(&descriptor(name).left_yd).expect("catalog instances are valid")
}

pub fn phi_pair(name: &str) -> PhiCompatPair {
    let d = descriptor(name);
    let phi: LinMap = d.phi.clone();
    PhiCompatPair::new(d.left_yd, d.right_yd, phi).expect("catalog pairs are compatible")
}
