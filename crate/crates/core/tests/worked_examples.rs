mod common;

use qflag::{QuantumClass, QuantumRing, Quiver};

use common::*;

fn assert_reduces(ring: &QuantumRing, lhs: &str, rhs: &str) {
    let got = class(ring, lhs);
    let want = QuantumClass::from_raw(raw(ring.quiver(), rhs));
    assert_eq!(got, want, "{lhs}");
}

#[test]
fn three_sinks() {
    let ring = QuantumRing::new(load("ex2")).unwrap();
    assert_reduces(
        &ring,
        "s1[3]",
        "q1 s2[1] s3[1] + q1 s2[1] s4[1] + q1 s3[1] s4[1] - q1 s1[1] s2[1] - q1 s1[1] s3[1] - q1 s1[1] s4[1] + q1 s1[2]",
    );
    assert_reduces(
        &ring,
        "s1[3,1]",
        "q1 s2[1] s3[1] s4[1] - q1 s1[1,1] s2[1] - q1 s1[1,1] s3[1] - q1 s1[1,1] s4[1] + q1 s1[2,1]",
    );
    assert_reduces(
        &ring,
        "s1[3,2]",
        "q1 s1[1] s2[1] s3[1] s4[1] - q1 s1[1,1] s2[1] s3[1] - q1 s1[1,1] s2[1] s4[1] - q1 s1[1,1] s3[1] s4[1] + q1 s1[2,2]",
    );
    for v in 2..=4 {
        assert_reduces(&ring, &format!("s{v}[2]"), &format!("q{v} + s1[1] s{v}[1] - s1[1,1]"));
    }
}

#[test]
fn double_arrow() {
    let ring = QuantumRing::new(load("ex3")).unwrap();
    assert_reduces(&ring, "s1[3]", "2 q1 s2[1] - q1 s1[1]");
    assert_reduces(&ring, "s1[3,1]", "q1 s2[2] - q1 s1[1,1]");
    assert_reduces(&ring, "s1[3,2]", "q1 s1[1] s2[2] - 2 q1 s1[1,1] s2[1]");
    // at k = 3 the two parallel arrows contribute e_1 e_2 + e_2 e_1 = 2 s_(2,1)
    assert_reduces(
        &ring,
        "s2[4]",
        "q2 + 2 s1[1] s2[3] - 3 s1[1,1] s2[2] - s1[2] s2[2] + 2 s1[2,1] s2[1] - s1[2,2]",
    );
}

#[test]
fn grassmannian_quantum_products() {
    let ring = QuantumRing::new(Quiver::grassmannian(4, 2).unwrap()).unwrap();
    let a = class(&ring, "s1[1]");
    let b = class(&ring, "s1[2,1]");
    assert_eq!(
        ring.multiply(&a, &b).unwrap(),
        QuantumClass::from_raw(raw(ring.quiver(), "s1[2,2] + q1"))
    );
    let c = class(&ring, "s1[2,2]");
    assert_eq!(
        ring.multiply(&c, &c).unwrap(),
        QuantumClass::from_raw(raw(ring.quiver(), "q1^2"))
    );
}

#[test]
fn flag_421_products() {
    let ring = QuantumRing::new(load("fl421")).unwrap();
    let a = class(&ring, "s1[2]");
    assert_eq!(
        ring.multiply(&a, &a).unwrap(),
        QuantumClass::from_raw(raw(ring.quiver(), "s1[2,2] + q1 s1[1]"))
    );
    assert_reduces(&ring, "s1[4]", "q1 s1[1] - q1 s2[1]");
}
