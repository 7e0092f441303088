use std::fmt;

use super::{AuthVector, Autn, FailureReason, Guti, Imsi, Rand, Snid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Actor {
    Ue,
    Mme,
    Hss,
}

impl fmt::Display for Actor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Actor::Ue => "UE",
            Actor::Mme => "MME",
            Actor::Hss => "HSS",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Identity {
    Imsi(Imsi),
    Guti(Guti),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Message {
    AttachRequest(Identity),
    IdentityRequest,
    IdentityResponse(Imsi),
    AuthInfoRequest { imsi: Imsi, snid: Snid },
    AuthInfoAnswer(AuthVector),
    AuthInfoReject,
    AuthenticationRequest { rand: Rand, autn: Autn },
    AuthenticationReply { res: [u8; 8] },
    AuthenticationFailure(FailureReason),
}

impl Message {
    pub fn name(&self) -> &'static str {
        match self {
            Message::AttachRequest(_) => "AttachRequest",
            Message::IdentityRequest => "IdentityRequest",
            Message::IdentityResponse(_) => "IdentityResponse",
            Message::AuthInfoRequest { .. } => "AuthInfoRequest",
            Message::AuthInfoAnswer(_) => "AuthInfoAnswer",
            Message::AuthInfoReject => "AuthInfoReject",
            Message::AuthenticationRequest { .. } => "AuthenticationRequest",
            Message::AuthenticationReply { .. } => "AuthenticationReply",
            Message::AuthenticationFailure(_) => "AuthenticationFailure",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranscriptEntry {
    pub from: Actor,
    pub to: Actor,
    pub message: Message,
}

impl fmt::Display for TranscriptEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{} {}", self.from, self.to, self.message.name())?;
        match &self.message {
            Message::AttachRequest(Identity::Imsi(i)) | Message::IdentityResponse(i) => {
                write!(f, " imsi={i}")
            }
            Message::AttachRequest(Identity::Guti(g)) => write!(f, " guti={:08x}", g.0),
            Message::AuthInfoRequest { imsi, snid } => {
                write!(f, " imsi={imsi} snid={}", hex::encode(snid.as_bytes()))
            }
            Message::AuthInfoAnswer(av) => write!(
                f,
                " rand={} xres={} kasme={} autn={}",
                hex::encode(av.rand),
                hex::encode(av.xres),
                hex::encode(av.kasme),
                hex::encode(av.autn.to_bytes())
            ),
            Message::AuthenticationRequest { rand, autn } => write!(
                f,
                " rand={} autn={}",
                hex::encode(rand),
                hex::encode(autn.to_bytes())
            ),
            Message::AuthenticationReply { res } => write!(f, " res={}", hex::encode(res)),
            Message::AuthenticationFailure(r) => write!(f, " cause={r:?}"),
            Message::IdentityRequest | Message::AuthInfoReject => Ok(()),
        }
    }
}
