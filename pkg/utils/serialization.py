"""
Module defines the binary record format for key material and its
hex-armored text form.

A record is
  b"IBTK" | version | kind | scheme | profile | curve block | fields | crc32
where every item is tagged and length-prefixed:
  P point, G G_T element, I integer, B bytes, S str, L list, D dict.
The curve block carries the profile's defining integers so records decode
without access to the data directory.
"""
# == Standard Library imports ==
import zlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

# == Local imports ==
from arithmetic import CurveParams, CurvePoint, FieldElement, GtElement
from processor.fs_hibe import FsKeyBundle, FsNodeKey
from processor.kem import KemCiphertext
from processor.novel_hibe import HibeKey
from processor.scheme_base import (Ciphertext, MasterSecret, ParamsBundle,
                                   UserKey)
from .errors import ChecksumError, FormatError

MAGIC = b"IBTK"
VERSION = 1
ARMOR_WIDTH = 64
_CURVE_KEYS = ("p", "a4", "a6", "r", "cof", "k", "gx", "gy")


@dataclass
class Record:
    """
    Dataclass for one decoded record before it is turned back into a typed
    object.
    """
    kind: str
    scheme: str
    curve: CurveParams
    fields: dict[str, Any]


def _frame(tag: bytes, body: bytes) -> bytes:
    return tag + len(body).to_bytes(4, "big") + body


def _encode(value: Any) -> bytes:
    if isinstance(value, CurvePoint):
        return _frame(b"P", value.to_bytes())
    if isinstance(value, GtElement):
        return _frame(b"G", value.to_bytes())
    if isinstance(value, FieldElement):
        value = int(value)
    if isinstance(value, bool):
        raise FormatError("booleans are not serializable")
    if isinstance(value, int):
        sign = b"\x01" if value < 0 else b"\x00"
        magnitude = abs(value)
        return _frame(b"I", sign + magnitude.to_bytes(
            max(1, (magnitude.bit_length() + 7) // 8), "big"))
    if isinstance(value, (bytes, bytearray)):
        return _frame(b"B", bytes(value))
    if isinstance(value, str):
        return _frame(b"S", value.encode("utf-8"))
    if isinstance(value, (list, tuple)):
        return _frame(b"L", len(value).to_bytes(4, "big") +
                      b"".join(_encode(item) for item in value))
    if isinstance(value, dict):
        body = b"".join(_encode(str(k)) + _encode(v) for k, v in value.items())
        return _frame(b"D", len(value).to_bytes(4, "big") + body)
    raise FormatError(f"cannot serialize {type(value).__name__}")


class _Reader:
    """
    Class walks a record body, rebuilding tagged values on one curve.
    """

    def __init__(self, data: bytes, curve: CurveParams | None = None):
        self.data = data
        self.pos = 0
        self.curve = curve

    def _take(self, n: int) -> bytes:
        if self.pos + n > len(self.data):
            raise FormatError("record truncated")
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def value(self) -> Any:
        tag = self._take(1)
        body = self._take(int.from_bytes(self._take(4), "big"))
        if tag == b"I":
            if not body:
                raise FormatError("empty integer")
            magnitude = int.from_bytes(body[1:], "big")
            return -magnitude if body[0] else magnitude
        if tag == b"B":
            return body
        if tag == b"S":
            return body.decode("utf-8")
        if tag in (b"P", b"G"):
            if self.curve is None:
                raise FormatError("group element before the curve block")
            try:
                if tag == b"P":
                    return CurvePoint.from_bytes(self.curve, body)
                return GtElement.from_bytes(self.curve, body)
            except ValueError as exc:
                raise FormatError(f"bad group element: {exc}") from exc
        if tag in (b"L", b"D"):
            inner = _Reader(body, self.curve)
            count = int.from_bytes(inner._take(4), "big")
            if tag == b"L":
                items = [inner.value() for _ in range(count)]
            else:
                items = {}
                for _ in range(count):
                    key = inner.value()
                    items[key] = inner.value()
            if inner.pos != len(body):
                raise FormatError("trailing bytes inside a container")
            return items
        raise FormatError(f"unknown tag {tag!r}")


@lru_cache(maxsize=32)
def _curve_from_block(name: str, values: tuple[int, ...]) -> CurveParams:
    return CurveParams(name=name, **dict(zip(_CURVE_KEYS, values)))


def encode_record(kind: str, scheme: str, curve: CurveParams,
                  fields: dict[str, Any]) -> bytes:
    """
    Function builds the checksummed binary record.
    """
    body = MAGIC + bytes([VERSION]) + _encode(kind) + _encode(scheme) + \
        _encode(curve.name) + \
        _encode([getattr(curve, key) for key in _CURVE_KEYS]) + \
        _encode(fields)
    return body + zlib.crc32(body).to_bytes(4, "big")


def decode_record(data: bytes) -> Record:
    """
    Function checks magic, version and checksum, then decodes the fields.
    :raises ChecksumError: Stored and computed CRC differ.
    :raises FormatError: Any structural problem.
    """
    if len(data) < len(MAGIC) + 5 or not data.startswith(MAGIC):
        raise FormatError("not an IBTK record")
    body, crc = data[:-4], data[-4:]
    if zlib.crc32(body).to_bytes(4, "big") != crc:
        raise ChecksumError("record checksum mismatch")
    if body[len(MAGIC)] != VERSION:
        raise FormatError(f"unsupported record version {body[len(MAGIC)]}")
    reader = _Reader(body[len(MAGIC) + 1:])
    kind, scheme, name, block = (reader.value() for _ in range(4))
    try:
        reader.curve = _curve_from_block(name, tuple(block))
    except (TypeError, ValueError) as exc:
        raise FormatError(f"bad curve block: {exc}") from exc
    fields = reader.value()
    if reader.pos != len(reader.data):
        raise FormatError("trailing bytes after record")
    return Record(kind, scheme, reader.curve, fields)


def _identity_out(identity) -> Any:
    return list(identity) if isinstance(identity, tuple) else identity


def _identity_in(identity) -> Any:
    return tuple(identity) if isinstance(identity, list) else identity


def dumps(obj: Any, curve: CurveParams | None = None) -> bytes:
    """
    Function serializes ParamsBundle, MasterSecret, UserKey (and HibeKey),
    Ciphertext, FsKeyBundle or KemCiphertext. Objects that do not carry
    their curve (everything but ParamsBundle) need ``curve``.
    """
    if isinstance(obj, ParamsBundle):
        return encode_record("params", obj.scheme, obj.curve, {
            "public": obj.public, "msg_bits": obj.msg_bits,
            "options": obj.options})
    if curve is None:
        raise FormatError(f"{type(obj).__name__} needs the curve to serialize")
    if isinstance(obj, MasterSecret):
        return encode_record("master", obj.scheme, curve,
                             {"secrets": obj.secrets})
    if isinstance(obj, UserKey):
        kind = "hibe-key" if isinstance(obj, HibeKey) else "key"
        return encode_record(kind, obj.scheme, curve, {
            "identity": _identity_out(obj.identity),
            "components": obj.components})
    if isinstance(obj, Ciphertext):
        return encode_record("ciphertext", obj.scheme, curve,
                             {"parts": obj.parts, "header": obj.header})
    if isinstance(obj, FsKeyBundle):
        return encode_record("fs-bundle", obj.scheme, curve, {
            "identity": list(obj.identity), "period": obj.period,
            "periods_log": obj.periods_log,
            "nodes": {w: [n.d0, n.K] for w, n in obj.nodes.items()},
            "g_inv_l": obj.g_inv_l, "tail": obj.tail,
            "time_tail": obj.time_tail})
    if isinstance(obj, KemCiphertext):
        return encode_record("kem", obj.scheme, curve, {
            "body": dumps(obj.body, curve), "payload": obj.payload})
    raise FormatError(f"cannot serialize {type(obj).__name__}")


def loads(data: bytes) -> Any:
    """
    Function restores the object a record was made from.
    """
    record = decode_record(data)
    fields, scheme = record.fields, record.scheme
    try:
        if record.kind == "params":
            return ParamsBundle(scheme, record.curve, fields["public"],
                                fields["msg_bits"], fields["options"])
        if record.kind == "master":
            return MasterSecret(scheme, fields["secrets"])
        if record.kind in ("key", "hibe-key"):
            cls = HibeKey if record.kind == "hibe-key" else UserKey
            return cls(scheme, _identity_in(fields["identity"]),
                       fields["components"])
        if record.kind == "ciphertext":
            return Ciphertext(scheme, fields["parts"], fields["header"])
        if record.kind == "fs-bundle":
            nodes = {w: FsNodeKey(w, d0, K)
                     for w, (d0, K) in fields["nodes"].items()}
            return FsKeyBundle(scheme, tuple(fields["identity"]),
                               fields["period"], fields["periods_log"], nodes,
                               fields["g_inv_l"], fields["tail"],
                               fields["time_tail"])
        if record.kind == "kem":
            return KemCiphertext(scheme, loads(fields["body"]),
                                 fields["payload"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed {record.kind} record: {exc}") from exc
    raise FormatError(f"unknown record kind {record.kind!r}")


def armor(data: bytes, label: str = "RECORD") -> str:
    """
    Function wraps a record in BEGIN/END lines with hex body lines.
    """
    text = data.hex()
    lines = [text[i:i + ARMOR_WIDTH] for i in range(0, len(text), ARMOR_WIDTH)]
    label = label.upper()
    return "\n".join([f"-----BEGIN IBE TOOLKIT {label}-----", *lines,
                      f"-----END IBE TOOLKIT {label}-----"]) + "\n"


def dearmor(text: str) -> bytes:
    """
    Function strips the armor lines and decodes the hex body.
    :raises FormatError: Missing or mismatched armor lines, bad hex.
    """
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) < 2 or not lines[0].startswith("-----BEGIN IBE TOOLKIT ") \
            or not lines[-1].startswith("-----END IBE TOOLKIT "):
        raise FormatError("missing armor lines")
    begin = lines[0][len("-----BEGIN IBE TOOLKIT "):]
    end = lines[-1][len("-----END IBE TOOLKIT "):]
    if begin != end:
        raise FormatError("armor labels differ")
    try:
        return bytes.fromhex("".join(lines[1:-1]))
    except ValueError as exc:
        raise FormatError(f"bad armor body: {exc}") from exc
