use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;

use super::kernel::xor6;
use super::transcript::{Actor, Identity, Message, TranscriptEntry};
use super::{
    sqn_from_bytes, sqn_to_bytes, AkaSession, AuthVector, Autn, CryptoKernel, DerivedKeys,
    FailureReason, Guti, HmacKernel, Imsi, Key, Rand, SessionState, Snid, SubscriberRecord,
};
use crate::error::{Error, Result};

const SQN_MASK: u64 = (1 << 48) - 1;

/// Build an AV for `record` using the SQN currently stored in it.
pub fn generate_auth_vector(
    kernel: &dyn CryptoKernel,
    record: &SubscriberRecord,
    snid: &Snid,
    rand: Rand,
) -> AuthVector {
    let sqn = sqn_to_bytes(record.sqn);
    let mac = kernel.f1(&record.k, &record.amf, &sqn, &rand);
    let ak = kernel.f5(&record.k, &rand);
    let sqn_xor_ak = xor6(&sqn, &ak);
    let ck = kernel.f3(&record.k, &rand);
    let ik = kernel.f4(&record.k, &rand);
    AuthVector {
        rand,
        xres: kernel.f2(&record.k, &rand),
        kasme: kernel.kdf(&ck, &ik, snid.as_bytes(), &sqn_xor_ak),
        autn: Autn {
            sqn_xor_ak,
            amf: record.amf,
            mac,
        },
    }
}

/// Accept `sqn` iff `last_accepted < sqn <= last_accepted + size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SqnWindow {
    pub last_accepted: u64,
    pub size: u64,
}

impl SqnWindow {
    pub fn new(last_accepted: u64) -> SqnWindow {
        SqnWindow {
            last_accepted,
            size: 1,
        }
    }

    pub fn accepts(&self, sqn: u64) -> bool {
        sqn > self.last_accepted && sqn - self.last_accepted <= self.size
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UeKeys {
    pub sqn: u64,
    pub res: [u8; 8],
    pub ck: [u8; 16],
    pub ik: [u8; 16],
    pub kasme: [u8; 32],
}

/// Verify AUTN and derive the session keys on the handset side.
pub fn ue_process_challenge(
    kernel: &dyn CryptoKernel,
    k: &Key,
    window: &SqnWindow,
    rand: &Rand,
    autn: &Autn,
    snid: &Snid,
) -> std::result::Result<UeKeys, FailureReason> {
    let ak = kernel.f5(k, rand);
    let sqn_bytes = xor6(&autn.sqn_xor_ak, &ak);
    let xmac = kernel.f1(k, &autn.amf, &sqn_bytes, rand);
    if xmac != autn.mac {
        return Err(FailureReason::MacMismatch);
    }
    let sqn = sqn_from_bytes(&sqn_bytes);
    if !window.accepts(sqn) {
        return Err(FailureReason::SqnOutOfRange);
    }
    let ck = kernel.f3(k, rand);
    let ik = kernel.f4(k, rand);
    Ok(UeKeys {
        sqn,
        res: kernel.f2(k, rand),
        ck,
        ik,
        kasme: kernel.kdf(&ck, &ik, snid.as_bytes(), &autn.sqn_xor_ak),
    })
}

/// Home subscriber server. Safe to share between threads; SQN advancement
/// is serialized under one lock so concurrent requests never reuse a value.
pub struct Hss {
    kernel: Arc<dyn CryptoKernel>,
    subscribers: Mutex<HashMap<Imsi, SubscriberRecord>>,
    rng: Mutex<ChaCha20Rng>,
}

impl Hss {
    pub fn new(seed: u64) -> Hss {
        Hss::with_kernel(Arc::new(HmacKernel), seed)
    }

    pub fn with_kernel(kernel: Arc<dyn CryptoKernel>, seed: u64) -> Hss {
        Hss {
            kernel,
            subscribers: Mutex::new(HashMap::new()),
            rng: Mutex::new(ChaCha20Rng::seed_from_u64(seed)),
        }
    }

    pub fn kernel(&self) -> &dyn CryptoKernel {
        self.kernel.as_ref()
    }

    pub fn provision(&self, record: SubscriberRecord) {
        self.subscribers
            .lock()
            .unwrap()
            .insert(record.imsi.clone(), record);
    }

    pub fn sqn(&self, imsi: &Imsi) -> Option<u64> {
        self.subscribers.lock().unwrap().get(imsi).map(|r| r.sqn)
    }

    /// Advance the subscriber's SQN and issue an AV with a fresh RAND.
    pub fn auth_info(&self, imsi: &Imsi, snid: &Snid) -> Result<AuthVector> {
        let mut rand = [0u8; 16];
        self.rng.lock().unwrap().fill_bytes(&mut rand);
        self.auth_info_with_rand(imsi, snid, rand)
    }

    pub fn auth_info_with_rand(&self, imsi: &Imsi, snid: &Snid, rand: Rand) -> Result<AuthVector> {
        let mut subs = self.subscribers.lock().unwrap();
        let record = subs
            .get_mut(imsi)
            .ok_or_else(|| Error::UnknownImsi(imsi.to_string()))?;
        record.sqn = (record.sqn + 1) & SQN_MASK;
        Ok(generate_auth_vector(
            self.kernel.as_ref(),
            record,
            snid,
            rand,
        ))
    }
}

pub struct Ue {
    pub imsi: Imsi,
    k: Key,
    pub window: SqnWindow,
    pub guti: Option<Guti>,
    kernel: Arc<dyn CryptoKernel>,
}

impl Ue {
    pub fn new(imsi: Imsi, k: Key, window: SqnWindow) -> Ue {
        Ue {
            imsi,
            k,
            window,
            guti: None,
            kernel: Arc::new(HmacKernel),
        }
    }

    pub fn with_kernel(mut self, kernel: Arc<dyn CryptoKernel>) -> Ue {
        self.kernel = kernel;
        self
    }

    /// Process a challenge and, on success, move the window forward.
    pub fn challenge(
        &mut self,
        rand: &Rand,
        autn: &Autn,
        snid: &Snid,
    ) -> std::result::Result<UeKeys, FailureReason> {
        let keys = ue_process_challenge(
            self.kernel.as_ref(),
            &self.k,
            &self.window,
            rand,
            autn,
            snid,
        )?;
        self.window.last_accepted = keys.sqn;
        Ok(keys)
    }
}

/// Serving-network mobility management entity.
pub struct Mme {
    pub snid: Snid,
    gutis: HashMap<Guti, Imsi>,
    next_guti: u32,
}

impl Mme {
    pub fn new(snid: Snid) -> Mme {
        Mme {
            snid,
            gutis: HashMap::new(),
            next_guti: 1,
        }
    }

    pub fn resolve(&self, guti: Guti) -> Option<&Imsi> {
        self.gutis.get(&guti)
    }

    pub fn reallocate(&mut self, imsi: &Imsi) -> Guti {
        self.gutis.retain(|_, v| v != imsi);
        let g = Guti(self.next_guti);
        self.next_guti = self.next_guti.wrapping_add(1).max(1);
        self.gutis.insert(g, imsi.clone());
        g
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Tamper {
    #[default]
    None,
    /// Flip the first MAC bit of AUTN on the MME -> UE leg.
    Mac,
    /// Flip the first RES bit on the UE -> MME leg.
    Res,
    /// MME asks the HSS for an AV bound to a different network than the
    /// one it advertises to the UE.
    Snid,
    AutnBit(usize),
    ResBit(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IdentityMode {
    #[default]
    Imsi,
    Guti,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AkaOptions {
    pub tamper: Tamper,
    pub identity: IdentityMode,
}

struct Run {
    session: AkaSession,
}

impl Run {
    fn send(&mut self, from: Actor, to: Actor, message: Message) {
        self.session
            .transcript
            .push(TranscriptEntry { from, to, message });
    }

    fn fail(mut self, reason: FailureReason) -> AkaSession {
        self.session.state = SessionState::Failed(reason);
        self.session
    }
}

pub fn run_aka(ue: &mut Ue, mme: &mut Mme, hss: &Hss, options: &AkaOptions) -> AkaSession {
    let mut run = Run {
        session: AkaSession {
            state: SessionState::Idle,
            transcript: Vec::new(),
            ue_keys: None,
            mme_kasme: None,
            reallocated_guti: None,
        },
    };

    let attach_id = match options.identity {
        IdentityMode::Imsi => Identity::Imsi(ue.imsi.clone()),
        // A handset without a temporary identity presents the null GUTI.
        IdentityMode::Guti => Identity::Guti(ue.guti.unwrap_or(Guti(0))),
    };
    run.send(
        Actor::Ue,
        Actor::Mme,
        Message::AttachRequest(attach_id.clone()),
    );
    run.session.state = SessionState::IdSent;

    let imsi = match attach_id {
        Identity::Imsi(i) => i,
        Identity::Guti(g) => match mme.resolve(g) {
            Some(i) => i.clone(),
            None => {
                run.send(Actor::Mme, Actor::Ue, Message::IdentityRequest);
                run.send(
                    Actor::Ue,
                    Actor::Mme,
                    Message::IdentityResponse(ue.imsi.clone()),
                );
                ue.imsi.clone()
            }
        },
    };

    let hss_snid = match options.tamper {
        Tamper::Snid => Snid(format!("{}x", mme.snid.0)),
        _ => mme.snid.clone(),
    };
    run.send(
        Actor::Mme,
        Actor::Hss,
        Message::AuthInfoRequest {
            imsi: imsi.clone(),
            snid: hss_snid.clone(),
        },
    );
    let av = match hss.auth_info(&imsi, &hss_snid) {
        Ok(av) => av,
        Err(_) => {
            run.send(Actor::Hss, Actor::Mme, Message::AuthInfoReject);
            return run.fail(FailureReason::UnknownImsi);
        }
    };
    run.send(Actor::Hss, Actor::Mme, Message::AuthInfoAnswer(av));
    run.session.mme_kasme = Some(av.kasme);

    let autn = match options.tamper {
        Tamper::Mac => av.autn.with_bit_flipped(64),
        Tamper::AutnBit(i) => av.autn.with_bit_flipped(i % Autn::BITS),
        _ => av.autn,
    };
    run.send(
        Actor::Mme,
        Actor::Ue,
        Message::AuthenticationRequest {
            rand: av.rand,
            autn,
        },
    );
    run.session.state = SessionState::ChallengeSent;

    let keys = match ue.challenge(&av.rand, &autn, &mme.snid) {
        Ok(k) => k,
        Err(reason) => {
            run.send(
                Actor::Ue,
                Actor::Mme,
                Message::AuthenticationFailure(reason),
            );
            return run.fail(reason);
        }
    };
    run.session.ue_keys = Some(DerivedKeys {
        ck: keys.ck,
        ik: keys.ik,
        kasme: keys.kasme,
    });

    let mut res = keys.res;
    match options.tamper {
        Tamper::Res => res[0] ^= 0x80,
        Tamper::ResBit(i) => res[(i % 64) / 8] ^= 0x80 >> (i % 8),
        _ => {}
    }
    run.send(Actor::Ue, Actor::Mme, Message::AuthenticationReply { res });

    if res != av.xres {
        return run.fail(FailureReason::ResMismatch);
    }
    if keys.kasme != av.kasme {
        return run.fail(FailureReason::KeyMismatch);
    }
    let g = mme.reallocate(&imsi);
    ue.guti = Some(g);
    run.session.reallocated_guti = Some(g);
    run.session.state = SessionState::Authenticated;
    run.session
}

/// One subscriber, one serving network and one home network, all derived
/// from `seed`.
pub fn seeded_world(seed: u64) -> (Ue, Mme, Hss) {
    let mut rng = ChaCha20Rng::seed_from_u64(seed ^ 0x5EED_0000_0000_0000);
    let mut k = [0u8; 16];
    rng.fill_bytes(&mut k);
    let msin = rng.next_u64() % 10_000_000_000;
    let imsi = Imsi::from_parts("208", "93", msin).expect("well-formed");
    let sqn = rng.next_u64() & 0xFFFF_FFFF;
    let hss = Hss::new(seed);
    hss.provision(SubscriberRecord {
        imsi: imsi.clone(),
        k,
        sqn,
        amf: [0x80, 0x00],
    });
    let ue = Ue::new(imsi, k, SqnWindow::new(sqn));
    let mme = Mme::new(Snid::new("208", "93"));
    (ue, mme, hss)
}
