use mcc_core::aka::{
    run_aka, seeded_world, AkaOptions, Autn, FailureReason, IdentityMode, SessionState, Snid,
    Tamper,
};

const HONEST: [&str; 5] = [
    "AttachRequest",
    "AuthInfoRequest",
    "AuthInfoAnswer",
    "AuthenticationRequest",
    "AuthenticationReply",
];

fn run(seed: u64, tamper: Tamper) -> mcc_core::aka::AkaSession {
    let (mut ue, mut mme, hss) = seeded_world(seed);
    run_aka(
        &mut ue,
        &mut mme,
        &hss,
        &AkaOptions {
            tamper,
            ..Default::default()
        },
    )
}

#[test]
fn honest_runs_agree_on_kasme() {
    for seed in 0..100 {
        let s = run(seed, Tamper::None);
        assert_eq!(s.state, SessionState::Authenticated, "seed {seed}");
        assert_eq!(s.ue_keys.unwrap().kasme, s.mme_kasme.unwrap());
        assert_eq!(s.message_names(), HONEST);
        assert!(s.reallocated_guti.is_some());
    }
}

#[test]
fn subscribers_are_distinct_per_seed() {
    let mut imsis: Vec<String> = (0..100)
        .map(|s| seeded_world(s).0.imsi.to_string())
        .collect();
    imsis.sort();
    imsis.dedup();
    assert_eq!(imsis.len(), 100);
}

#[test]
fn every_single_bit_autn_flip_is_rejected() {
    for seed in 0..4 {
        for bit in 0..Autn::BITS {
            let s = run(seed, Tamper::AutnBit(bit));
            let SessionState::Failed(reason) = s.state else {
                panic!("seed {seed} bit {bit} reached {:?}", s.state);
            };
            // SQN and AMF bits are covered by the MAC too.
            assert_eq!(reason, FailureReason::MacMismatch, "seed {seed} bit {bit}");
            assert!(s.ue_keys.is_none());
        }
    }
}

#[test]
fn every_single_bit_res_flip_is_rejected() {
    for seed in 0..4 {
        for bit in 0..64 {
            let s = run(seed, Tamper::ResBit(bit));
            assert_eq!(
                s.state,
                SessionState::Failed(FailureReason::ResMismatch),
                "seed {seed} bit {bit}"
            );
            assert!(s.reallocated_guti.is_none());
        }
    }
}

#[test]
fn replayed_vectors_are_out_of_range() {
    for seed in 0..100 {
        let (mut ue, mme, hss) = seeded_world(seed);
        let av = hss.auth_info(&ue.imsi, &mme.snid).unwrap();
        assert!(ue.challenge(&av.rand, &av.autn, &mme.snid).is_ok());
        assert_eq!(
            ue.challenge(&av.rand, &av.autn, &mme.snid).unwrap_err(),
            FailureReason::SqnOutOfRange
        );
        // An older vector is just as stale once a newer one is accepted.
        let fresh = hss.auth_info(&ue.imsi, &mme.snid).unwrap();
        assert!(ue.challenge(&fresh.rand, &fresh.autn, &mme.snid).is_ok());
        assert_eq!(
            ue.challenge(&av.rand, &av.autn, &mme.snid).unwrap_err(),
            FailureReason::SqnOutOfRange
        );
    }
}

#[test]
fn kasme_is_bound_to_the_serving_network() {
    for seed in 0..100 {
        let s = run(seed, Tamper::Snid);
        assert_eq!(
            s.state,
            SessionState::Failed(FailureReason::KeyMismatch),
            "seed {seed}"
        );
        assert_ne!(s.ue_keys.unwrap().kasme, s.mme_kasme.unwrap());

        let (mut ue, mme, hss) = seeded_world(seed);
        let other = Snid::new("001", &format!("{:02}", seed % 100));
        assert_ne!(other, mme.snid);
        let av = hss.auth_info(&ue.imsi, &other).unwrap();
        let keys = ue.challenge(&av.rand, &av.autn, &mme.snid).unwrap();
        assert_ne!(keys.kasme, av.kasme);
        assert_eq!(keys.res, av.xres);
    }
}

#[test]
fn transcripts_are_seed_deterministic() {
    for seed in [0, 7, 99, u64::MAX] {
        for tamper in [Tamper::None, Tamper::Mac, Tamper::Res, Tamper::Snid] {
            assert_eq!(run(seed, tamper).dump(), run(seed, tamper).dump());
        }
    }
    assert_ne!(run(1, Tamper::None).dump(), run(2, Tamper::None).dump());
}

#[test]
fn guti_attach_asks_for_identity_once() {
    let (mut ue, mut mme, hss) = seeded_world(3);
    let opts = AkaOptions {
        identity: IdentityMode::Guti,
        ..Default::default()
    };
    let first = run_aka(&mut ue, &mut mme, &hss, &opts);
    assert_eq!(first.state, SessionState::Authenticated);
    assert_eq!(first.transcript.len(), 7);
    let again = run_aka(&mut ue, &mut mme, &hss, &opts);
    assert_eq!(again.state, SessionState::Authenticated);
    assert_eq!(again.message_names(), HONEST);
}
