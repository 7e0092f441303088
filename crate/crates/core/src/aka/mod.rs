//! EPS authentication and key agreement between a handset (UE), the
//! serving network's MME and the home network's HSS.
//!
//! The exchange is five messages on the honest path:
//!
//! ```text
//! UE  -> MME  AttachRequest(IMSI | GUTI)
//! MME -> HSS  AuthInfoRequest(IMSI, SNID)
//! HSS -> MME  AuthInfoAnswer(RAND || XRES || KASME || AUTN)
//! MME -> UE   AuthenticationRequest(RAND, AUTN)
//! UE  -> MME  AuthenticationReply(RES)
//! ```
//!
//! A GUTI unknown to the MME adds an identity request/response pair before
//! the second message.

mod actors;
mod kernel;
mod transcript;

use std::fmt;

pub use actors::{
    generate_auth_vector, run_aka, seeded_world, ue_process_challenge, AkaOptions, Hss,
    IdentityMode, Mme, SqnWindow, Tamper, Ue, UeKeys,
};
pub use kernel::{sqn_from_bytes, sqn_to_bytes, Amf, CryptoKernel, HmacKernel, Key, Rand, Sqn};
pub use transcript::{Actor, Identity, Message, TranscriptEntry};

use crate::error::{Error, Result};

/// 15-digit permanent subscriber identity: MCC (3) + MNC (2) + MSIN (10).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Imsi(String);

impl Imsi {
    pub fn parse(s: &str) -> Result<Imsi> {
        if s.len() == 15 && s.bytes().all(|b| b.is_ascii_digit()) {
            Ok(Imsi(s.to_string()))
        } else {
            Err(Error::MalformedIdentifier(format!(
                "IMSI must be 15 decimal digits, got `{s}`"
            )))
        }
    }

    pub fn from_parts(mcc: &str, mnc: &str, msin: u64) -> Result<Imsi> {
        Imsi::parse(&format!("{mcc}{mnc}{msin:010}"))
    }

    pub fn mcc(&self) -> &str {
        &self.0[..3]
    }

    pub fn mnc(&self) -> &str {
        &self.0[3..5]
    }

    pub fn msin(&self) -> &str {
        &self.0[5..]
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Imsi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Temporary identity, opaque outside the MME that allocated it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Guti(pub u32);

/// Serving network identity bound into KASME.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Snid(pub String);

impl Snid {
    pub fn new(mcc: &str, mnc: &str) -> Snid {
        Snid(format!("{mcc}{mnc}"))
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubscriberRecord {
    pub imsi: Imsi,
    pub k: Key,
    /// Last sequence number issued (48 bits).
    pub sqn: u64,
    pub amf: Amf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Autn {
    pub sqn_xor_ak: Sqn,
    pub amf: Amf,
    pub mac: [u8; 8],
}

impl Autn {
    pub const BITS: usize = 128;

    pub fn to_bytes(&self) -> [u8; 16] {
        let mut out = [0u8; 16];
        out[..6].copy_from_slice(&self.sqn_xor_ak);
        out[6..8].copy_from_slice(&self.amf);
        out[8..].copy_from_slice(&self.mac);
        out
    }

    pub fn from_bytes(b: &[u8; 16]) -> Autn {
        let mut a = Autn {
            sqn_xor_ak: [0; 6],
            amf: [0; 2],
            mac: [0; 8],
        };
        a.sqn_xor_ak.copy_from_slice(&b[..6]);
        a.amf.copy_from_slice(&b[6..8]);
        a.mac.copy_from_slice(&b[8..]);
        a
    }

    pub fn with_bit_flipped(&self, bit: usize) -> Autn {
        let mut b = self.to_bytes();
        b[bit / 8] ^= 0x80 >> (bit % 8);
        Autn::from_bytes(&b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuthVector {
    pub rand: Rand,
    pub xres: [u8; 8],
    pub kasme: [u8; 32],
    pub autn: Autn,
}

impl AuthVector {
    /// `RAND || XRES || KASME || AUTN`.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + 8 + 32 + 16);
        out.extend_from_slice(&self.rand);
        out.extend_from_slice(&self.xres);
        out.extend_from_slice(&self.kasme);
        out.extend_from_slice(&self.autn.to_bytes());
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    MacMismatch,
    SqnOutOfRange,
    ResMismatch,
    KeyMismatch,
    UnknownImsi,
    UnknownIdentity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SessionState {
    Idle,
    IdSent,
    ChallengeSent,
    Authenticated,
    Failed(FailureReason),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedKeys {
    pub ck: [u8; 16],
    pub ik: [u8; 16],
    pub kasme: [u8; 32],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AkaSession {
    pub state: SessionState,
    pub transcript: Vec<TranscriptEntry>,
    /// Keys held by the UE after a successful challenge.
    pub ue_keys: Option<DerivedKeys>,
    /// KASME the MME received from the HSS.
    pub mme_kasme: Option<[u8; 32]>,
    /// Temporary identity handed out after authentication.
    pub reallocated_guti: Option<Guti>,
}

impl AkaSession {
    /// Message names in order.
    pub fn message_names(&self) -> Vec<&'static str> {
        self.transcript.iter().map(|e| e.message.name()).collect()
    }

    /// One message per line, fields hex-encoded.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.transcript.iter().enumerate() {
            out.push_str(&format!("{:02} {}\n", i + 1, e));
        }
        out.push_str(&format!("state {}\n", state_label(&self.state)));
        out
    }
}

fn state_label(s: &SessionState) -> String {
    match s {
        SessionState::Failed(r) => format!("Failed({r:?})"),
        other => format!("{other:?}"),
    }
}
