use hmac::{Hmac, Mac};
use sha2::Sha256;

pub type Key = [u8; 16];
pub type Rand = [u8; 16];
/// 48-bit sequence number, big-endian.
pub type Sqn = [u8; 6];
pub type Amf = [u8; 2];

/// Authentication functions and the access-security key derivation.
///
/// Output widths: MAC 64, RES 64, CK 128, IK 128, AK 48, KASME 256 bits.
pub trait CryptoKernel: Send + Sync {
    fn f1(&self, k: &Key, amf: &Amf, sqn: &Sqn, rand: &Rand) -> [u8; 8];
    fn f2(&self, k: &Key, rand: &Rand) -> [u8; 8];
    fn f3(&self, k: &Key, rand: &Rand) -> [u8; 16];
    fn f4(&self, k: &Key, rand: &Rand) -> [u8; 16];
    fn f5(&self, k: &Key, rand: &Rand) -> [u8; 6];
    fn kdf(&self, ck: &[u8; 16], ik: &[u8; 16], snid: &[u8], sqn_xor_ak: &Sqn) -> [u8; 32];
}

/// HMAC-SHA-256 with a one-byte function tag prepended to the message.
/// Not MILENAGE; any conformant kernel can be dropped in instead.
#[derive(Debug, Clone, Copy, Default)]
pub struct HmacKernel;

const TAG_F1: u8 = 0x01;
const TAG_F2: u8 = 0x02;
const TAG_F3: u8 = 0x03;
const TAG_F4: u8 = 0x04;
const TAG_F5: u8 = 0x05;
const TAG_KDF: u8 = 0x10;

fn prf(key: &[u8], tag: u8, parts: &[&[u8]]) -> [u8; 32] {
    let mut mac = Hmac::<Sha256>::new_from_slice(key).expect("hmac accepts any key length");
    mac.update(&[tag]);
    for p in parts {
        // Length-prefix so that variable-width inputs cannot collide.
        mac.update(&(p.len() as u16).to_be_bytes());
        mac.update(p);
    }
    mac.finalize().into_bytes().into()
}

fn take<const N: usize>(full: [u8; 32]) -> [u8; N] {
    let mut out = [0u8; N];
    out.copy_from_slice(&full[..N]);
    out
}

impl CryptoKernel for HmacKernel {
    fn f1(&self, k: &Key, amf: &Amf, sqn: &Sqn, rand: &Rand) -> [u8; 8] {
        take(prf(k, TAG_F1, &[amf, sqn, rand]))
    }

    fn f2(&self, k: &Key, rand: &Rand) -> [u8; 8] {
        take(prf(k, TAG_F2, &[rand]))
    }

    fn f3(&self, k: &Key, rand: &Rand) -> [u8; 16] {
        take(prf(k, TAG_F3, &[rand]))
    }

    fn f4(&self, k: &Key, rand: &Rand) -> [u8; 16] {
        take(prf(k, TAG_F4, &[rand]))
    }

    fn f5(&self, k: &Key, rand: &Rand) -> [u8; 6] {
        take(prf(k, TAG_F5, &[rand]))
    }

    fn kdf(&self, ck: &[u8; 16], ik: &[u8; 16], snid: &[u8], sqn_xor_ak: &Sqn) -> [u8; 32] {
        let mut key = [0u8; 32];
        key[..16].copy_from_slice(ck);
        key[16..].copy_from_slice(ik);
        prf(&key, TAG_KDF, &[snid, sqn_xor_ak])
    }
}

pub fn sqn_to_bytes(sqn: u64) -> Sqn {
    let b = sqn.to_be_bytes();
    [b[2], b[3], b[4], b[5], b[6], b[7]]
}

pub fn sqn_from_bytes(b: &Sqn) -> u64 {
    u64::from_be_bytes([0, 0, b[0], b[1], b[2], b[3], b[4], b[5]])
}

pub fn xor6(a: &Sqn, b: &Sqn) -> Sqn {
    std::array::from_fn(|i| a[i] ^ b[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_separated() {
        let k = [7u8; 16];
        let r = [9u8; 16];
        let h = HmacKernel;
        assert_eq!(h.f2(&k, &r), h.f2(&k, &r));
        // Same key and input, different tags.
        assert_ne!(h.f3(&k, &r), h.f4(&k, &r));
        assert_ne!(h.f2(&k, &r)[..], h.f3(&k, &r)[..8]);
    }

    #[test]
    fn sqn_roundtrip_48_bits() {
        for v in [0u64, 1, 0xFFFF_FFFF_FFFF, 0x1234_5678_9ABC] {
            assert_eq!(sqn_from_bytes(&sqn_to_bytes(v)), v);
        }
    }
}
