use domcells::harness::{fuzz, fuzz_with, instance_factors, FuzzConfig, InstanceStatus};
use domcells::par::Parallelism;

fn small(seed: u64) -> FuzzConfig {
    FuzzConfig {
        instances: 24,
        seed,
        max_x: 5,
        max_y: 4,
        n_values: vec![1, 2, 3],
        p_values: vec![0.3, 0.5],
        node_budget: 200_000,
        product_cap: 60,
    }
}

#[test]
fn reports_are_byte_identical() {
    let cfg = small(11);
    let a = fuzz(&cfg).unwrap().to_json().unwrap();
    let b = fuzz(&cfg).unwrap().to_json().unwrap();
    let c = fuzz_with(&cfg, Parallelism::Sequential)
        .unwrap()
        .to_json()
        .unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
    let other = fuzz(&small(12)).unwrap().to_json().unwrap();
    assert_ne!(a, other);
}

#[test]
fn small_campaign_passes() {
    let r = fuzz(&small(5)).unwrap();
    assert_eq!(r.instances.len(), 24);
    assert_eq!(r.summary.check_failures, 0, "{:?}", r.summary.failures);
    for inst in &r.instances {
        match inst.status {
            InstanceStatus::Checked => assert!(!inst.checks.is_empty() && inst.ledger.is_some()),
            InstanceStatus::SkippedUnproven => assert!(inst.checks.is_empty()),
        }
    }
}

#[test]
fn edgeless_factors() {
    let cfg = FuzzConfig {
        p_values: vec![0.0],
        ..small(3)
    };
    let r = fuzz(&cfg).unwrap();
    assert_eq!(r.summary.check_failures, 0);
    for inst in &r.instances {
        assert_eq!(inst.gammas.x.value, inst.factors.x.order);
        assert_eq!(inst.gammas.y.value, inst.factors.y.order);
    }
}

#[test]
fn product_cap_is_respected() {
    let cfg = FuzzConfig::default();
    for i in 0..200 {
        let (shape, x, y) = instance_factors(&cfg, i).unwrap();
        assert!(shape.order_x * shape.order_y * shape.n <= cfg.product_cap);
        assert_eq!((x.order(), y.order()), (shape.order_x, shape.order_y));
    }
}

#[test]
fn invalid_configs_are_rejected() {
    let base = small(0);
    for bad in [
        FuzzConfig {
            n_values: vec![],
            ..base.clone()
        },
        FuzzConfig {
            n_values: vec![0],
            ..base.clone()
        },
        FuzzConfig {
            p_values: vec![1.5],
            ..base.clone()
        },
        FuzzConfig {
            max_x: 0,
            ..base.clone()
        },
        FuzzConfig {
            product_cap: 2,
            n_values: vec![3],
            ..base.clone()
        },
    ] {
        assert!(fuzz(&bad).is_err());
    }
}
