//! One honest attach, then the ways it can go wrong.
//!
//!     cargo run --example aka_handshake -- 42

use mcc_core::aka::{run_aka, seeded_world, AkaOptions, IdentityMode, SessionState, Tamper};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);

    let (mut ue, mut mme, hss) = seeded_world(seed);
    let honest = run_aka(&mut ue, &mut mme, &hss, &AkaOptions::default());
    print!("{}", honest.dump());
    assert_eq!(honest.state, SessionState::Authenticated);
    println!("GUTI handed out: {:?}\n", honest.reallocated_guti);

    // The handset now attaches with its temporary identity.
    let again = run_aka(
        &mut ue,
        &mut mme,
        &hss,
        &AkaOptions {
            identity: IdentityMode::Guti,
            ..Default::default()
        },
    );
    println!(
        "re-attach by GUTI: {:?} in {} messages",
        again.state,
        again.transcript.len()
    );

    for tamper in [Tamper::Mac, Tamper::Res, Tamper::Snid, Tamper::AutnBit(3)] {
        let (mut ue, mut mme, hss) = seeded_world(seed);
        let s = run_aka(
            &mut ue,
            &mut mme,
            &hss,
            &AkaOptions {
                tamper,
                ..Default::default()
            },
        );
        println!("{tamper:?}: {:?}", s.state);
    }

    // Replaying a challenge the handset has already accepted.
    let (mut ue, mut mme, hss) = seeded_world(seed);
    let first = run_aka(&mut ue, &mut mme, &hss, &AkaOptions::default());
    if let Some(mcc_core::aka::Message::AuthenticationRequest { rand, autn }) = first
        .transcript
        .iter()
        .map(|e| &e.message)
        .find(|m| m.name() == "AuthenticationRequest")
    {
        println!(
            "replay: {:?}",
            ue.challenge(rand, autn, &mme.snid).map(|_| ())
        );
    }
}
