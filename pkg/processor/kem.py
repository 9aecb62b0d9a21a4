"""
Module defines the hybrid KEM wrapper: a scheme encrypts a random session
key (an element of G_T, or an n-bit string for byte-message schemes) and
the hash of that key masks a payload of any length.
"""
# == Standard Library imports ==
from dataclasses import dataclass
from typing import Any

# == Local imports ==
from utils.hashing import hash_bytes, xor_bytes
from .registry import SchemeId, get_scheme
from .scheme_base import Ciphertext, ParamsBundle, Seed, as_rng


@dataclass
class KemCiphertext:
    """
    Dataclass for a KEM ciphertext: the scheme ciphertext of the session
    key followed by the masked payload.
    """
    scheme: str
    body: Ciphertext
    payload: bytes


def _mask(session_key: Any, length: int) -> bytes:
    return hash_bytes("KEM|mask", [session_key], length)


def kem_encrypt(scheme: SchemeId | str, params: ParamsBundle, identity: Any,
                payload: bytes, seed: Seed, **options: int) -> KemCiphertext:
    """
    Function encrypts a byte payload of any length to an identity.
    :param scheme: Scheme identifier.
    :param params: Public parameters of that scheme.
    :param identity: Recipient identity (tuple for hierarchical schemes).
    :param payload: Bytes to protect.
    :param seed: Seed of the session key and scheme randomness.
    :param options: Passed to the scheme's encrypt (e.g. period).
    :return: KemCiphertext.
    """
    impl = get_scheme(scheme)
    rng = as_rng(seed)
    session_key = impl.random_message(params, rng.fork("session"))
    body = impl.encrypt(params, identity, session_key, rng.fork("scheme"),
                        **options)
    return KemCiphertext(impl.scheme_id, body,
                         xor_bytes(payload, _mask(session_key, len(payload))))


def kem_decrypt(scheme: SchemeId | str, params: ParamsBundle, key: Any,
                ciphertext: KemCiphertext) -> bytes:
    """
    Function recovers the payload; a wrong key yields unrelated bytes.
    """
    impl = get_scheme(scheme)
    session_key = impl.decrypt(params, key, ciphertext.body)
    return xor_bytes(ciphertext.payload,
                     _mask(session_key, len(ciphertext.payload)))
