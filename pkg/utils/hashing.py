"""
Module defines the domain-separated hash suite H1..H4 shared by the
schemes. Every oracle is one SHAKE-256 instance keyed by a tag, so outputs
for different purposes never collide by construction.
"""
# == Standard Library imports ==
import hashlib
from typing import Any, Iterable

# extra bytes drawn before reduction so residues are close to uniform
_REDUCTION_SLACK = 16


def encode_part(part: Any) -> bytes:
    """
    Function encodes one hash input with a type byte and a length prefix.
    Accepts bytes, str, int and any object exposing to_bytes().
    :param part: Value to encode.
    :return: Unambiguous byte encoding.
    """
    if isinstance(part, (bytes, bytearray)):
        kind, body = b"b", bytes(part)
    elif isinstance(part, str):
        kind, body = b"s", part.encode("utf-8")
    elif isinstance(part, bool):
        kind, body = b"?", b"\x01" if part else b"\x00"
    elif isinstance(part, int):
        if part < 0:
            raise ValueError("hash inputs must be non-negative integers")
        kind, body = b"i", part.to_bytes(max(1, (part.bit_length() + 7) // 8),
                                         "big")
    elif hasattr(part, "to_bytes"):
        kind, body = b"o", part.to_bytes()
    else:
        raise TypeError(f"cannot hash value of type {type(part).__name__}")
    return kind + len(body).to_bytes(4, "big") + body


def hash_bytes(tag: str, parts: Iterable[Any], length: int) -> bytes:
    """
    Function hashes tagged parts to a byte string of the requested length.
    :param tag: Domain separation tag, e.g. "H2|bf".
    :param parts: Values to absorb, in order.
    :param length: Output length in bytes.
    :return: Digest bytes.
    """
    xof = hashlib.shake_256()
    xof.update(encode_part(tag))
    for part in parts:
        xof.update(encode_part(part))
    return xof.digest(length)


def hash_to_int(tag: str, parts: Iterable[Any], modulus: int) -> int:
    """
    Function hashes tagged parts to an integer in [0, modulus).
    :param tag: Domain separation tag.
    :param parts: Values to absorb.
    :param modulus: Positive modulus.
    :return: Reduced digest.
    """
    width = (modulus.bit_length() + 7) // 8 + _REDUCTION_SLACK
    return int.from_bytes(hash_bytes(tag, parts, width), "big") % modulus


def xor_bytes(left: bytes, right: bytes) -> bytes:
    if len(left) != len(right):
        raise ValueError("xor operands differ in length")
    return bytes(a ^ b for a, b in zip(left, right))


class HashSuite:
    """
    Class for the per-scheme hash oracles. H1 maps identities into Z_r,
    H2 and H4 produce masks, H3 maps pairs into Z_r.
    """

    def __init__(self, scheme: str, order: int, msg_bytes: int):
        self.scheme = scheme
        self.order = order
        self.msg_bytes = msg_bytes

    def h1(self, identity: bytes) -> int:
        return hash_to_int(f"H1|{self.scheme}", [identity], self.order)

    def h2(self, value: Any) -> bytes:
        return hash_bytes(f"H2|{self.scheme}", [value], self.msg_bytes)

    def h3(self, *parts: Any) -> int:
        return hash_to_int(f"H3|{self.scheme}", parts, self.order)

    def h3_star(self, *parts: Any) -> int:
        # Z_r^*, for exponents that must not vanish
        return hash_to_int(f"H3|{self.scheme}", parts, self.order - 1) + 1

    def h4(self, sigma: bytes) -> bytes:
        return hash_bytes(f"H4|{self.scheme}", [sigma], self.msg_bytes)

    def describe(self) -> dict[str, str]:
        """
        Method returns human-readable descriptors of the four oracles.
        """
        return {
            "H1": f"shake256('H1|{self.scheme}') -> Z_{self.order.bit_length()}b",
            "H2": f"shake256('H2|{self.scheme}') -> {{0,1}}^{8 * self.msg_bytes}",
            "H3": f"shake256('H3|{self.scheme}') -> Z_{self.order.bit_length()}b",
            "H4": f"shake256('H4|{self.scheme}') -> {{0,1}}^{8 * self.msg_bytes}",
        }
