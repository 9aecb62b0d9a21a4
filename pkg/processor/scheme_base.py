"""
Class defines abstract base class IbeScheme, and the key material
dataclasses every scheme exchanges: ParamsBundle, MasterSecret, UserKey and
Ciphertext.

Each public phase runs inside a tagged ledger phase ("Setup", "Extract",
"Encrypt", "Decrypt") so the operation counts of one call can be read back
from the active OpLedger. Subclasses implement the underscored hooks.
"""
# == Standard Library imports ==
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, ClassVar

# == Local imports ==
from arithmetic import (CurveParams, CurvePoint, GtElement, OpLedger,
                        current_ledger, gt_random)
from utils.drbg import Drbg
from utils.errors import (MalformedCiphertextError, MessageDomainError,
                          ParameterError)
from utils.hashing import HashSuite

logger = logging.getLogger(__name__)

DEFAULT_MSG_BITS = 128

# ciphertext part kinds
POINT = "point"
GT = "gt"
BYTES = "bytes"
INT = "int"

Seed = int | bytes | Drbg


def as_rng(seed: Seed) -> Drbg:
    return seed if isinstance(seed, Drbg) else Drbg(seed)


def normalize_identity(identity: bytes | str) -> bytes:
    """
    Function turns an identity into the raw bytes the hash oracles absorb.
    :param identity: bytes, or str encoded as UTF-8.
    :return: Non-empty bytes.
    """
    if isinstance(identity, str):
        identity = identity.encode("utf-8")
    if not isinstance(identity, (bytes, bytearray)) or not identity:
        raise ParameterError("identity must be a non-empty byte string")
    return bytes(identity)


def sample_point(curve: CurveParams, rng: Drbg) -> CurvePoint:
    """
    Function draws a uniform non-identity element of G1 without charging
    the active ledger; used for public generators chosen at setup.
    """
    with OpLedger():
        return rng.nonzero_below(curve.r) * curve.generator


@dataclass
class ParamsBundle:
    """
    Dataclass for a scheme's public parameters. ``public`` keeps the named
    elements in publication order; ``options`` holds scheme tunables such
    as hierarchy depth.
    """
    scheme: str
    curve: CurveParams
    public: dict[str, Any]
    msg_bits: int = DEFAULT_MSG_BITS
    options: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Any:
        try:
            return self.public[name]
        except KeyError:
            raise ParameterError(
                f"{self.scheme} parameters have no element {name!r}") from None

    @property
    def msg_bytes(self) -> int:
        return self.msg_bits // 8

    @cached_property
    def hashes(self) -> HashSuite:
        return HashSuite(self.scheme, self.curve.r, self.msg_bytes)

    @property
    def zr(self):
        return self.curve.scalars


@dataclass
class MasterSecret:
    """
    Dataclass for the PKG's master secret, never published.
    """
    scheme: str
    secrets: dict[str, Any]

    def __getitem__(self, name: str) -> Any:
        return self.secrets[name]


@dataclass
class UserKey:
    """
    Dataclass for a private key bound to an identity (or identity tuple).
    """
    scheme: str
    identity: bytes | tuple[bytes, ...]
    components: dict[str, Any]

    def __getitem__(self, name: str) -> Any:
        return self.components[name]


@dataclass
class Ciphertext:
    """
    Dataclass for a ciphertext: named parts in wire order. ``header`` carries
    plain metadata (depth, period) that is not a group element.
    """
    scheme: str
    parts: dict[str, Any]
    header: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, name: str) -> Any:
        try:
            return self.parts[name]
        except KeyError:
            raise MalformedCiphertextError(
                f"{self.scheme} ciphertext has no part {name!r}") from None

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


class IbeScheme(ABC):
    """
    Abstract base class for an identity-based encryption scheme; fixes the
    four-phase life cycle and the checks shared by every scheme.
    """
    scheme_id: ClassVar[str]
    title: ClassVar[str]
    # "bytes" for n-bit strings, "gt" for elements of G_T
    message_domain: ClassVar[str] = BYTES
    ciphertext_layout: ClassVar[tuple[tuple[str, str], ...]] = ()
    # parts an observer can test against a candidate identity using only
    # public values
    identity_dependent_parts: ClassVar[tuple[str, ...]] = ()
    # True when decryption validates the ciphertext and may reject it
    rejects_invalid: ClassVar[bool] = False

    # == life cycle ==

    def setup(self, curve: CurveParams, seed: Seed,
              msg_bits: int = DEFAULT_MSG_BITS,
              **options: int) -> tuple[ParamsBundle, MasterSecret]:
        """
        Method generates public parameters and the master secret.
        :param curve: Curve profile.
        :param seed: Seed (or Drbg) for every random choice of the phase.
        :param msg_bits: Message length n for byte-string schemes.
        :return: (ParamsBundle, MasterSecret).
        """
        self._check_setup(curve, msg_bits)
        with current_ledger().phase("Setup"):
            params, msk = self._setup(curve, as_rng(seed), msg_bits, **options)
        logger.debug("%s setup on %s: %d public elements", self.scheme_id,
                     curve.name, len(params.public))
        return params, msk

    def extract(self, params: ParamsBundle, msk: MasterSecret,
                identity: bytes | str, seed: Seed = 0) -> UserKey:
        """
        Method derives the private key of an identity.
        """
        self._check_params(params)
        identity = self.normalize_identity(params, identity)
        with current_ledger().phase("Extract"):
            return self._extract(params, msk, identity, as_rng(seed))

    def encrypt(self, params: ParamsBundle, identity: bytes | str,
                message: Any, seed: Seed, **options: int) -> Ciphertext:
        """
        Method encrypts a message to an identity. Scheme-specific options
        (e.g. the time period) are passed through to the scheme.
        :raises MessageDomainError: Message outside the scheme's domain.
        """
        self._check_params(params)
        identity = self.normalize_identity(params, identity)
        self.check_message(params, message)
        with current_ledger().phase("Encrypt"):
            return self._encrypt(params, identity, message, as_rng(seed),
                                 **options)

    def decrypt(self, params: ParamsBundle, key: UserKey,
                ciphertext: Ciphertext) -> Any:
        """
        Method recovers the message of a ciphertext with a private key.
        :raises MalformedCiphertextError: Wrong shape or foreign parts.
        :raises CiphertextRejected: Validity check failed.
        """
        self._check_params(params)
        self.check_ciphertext(params, ciphertext)
        with current_ledger().phase("Decrypt"):
            return self._decrypt(params, key, ciphertext)

    @abstractmethod
    def _setup(self, curve: CurveParams, rng: Drbg, msg_bits: int,
               **options: int) -> tuple[ParamsBundle, MasterSecret]:
        pass

    @abstractmethod
    def _extract(self, params: ParamsBundle, msk: MasterSecret,
                 identity: bytes, rng: Drbg) -> UserKey:
        pass

    @abstractmethod
    def _encrypt(self, params: ParamsBundle, identity: bytes, message: Any,
                 rng: Drbg, **options: int) -> Ciphertext:
        pass

    @abstractmethod
    def _decrypt(self, params: ParamsBundle, key: UserKey,
                 ciphertext: Ciphertext) -> Any:
        pass

    @abstractmethod
    def key_is_valid(self, params: ParamsBundle, key: UserKey) -> bool:
        """
        Abstract method; checks a private key against the public parameters
        with pairings only, without the master secret. Uncounted.
        """
        pass

    # == shared checks ==

    def _check_setup(self, curve: CurveParams, msg_bits: int) -> None:
        if curve.r < 3:
            raise ParameterError(f"{self.scheme_id}: group order {curve.r} too small")
        if self.message_domain == BYTES and (msg_bits <= 0 or msg_bits % 8):
            raise ParameterError(
                f"{self.scheme_id}: message length must be a positive "
                f"multiple of 8 bits, got {msg_bits}")

    def _check_params(self, params: ParamsBundle) -> None:
        if params.scheme != self.scheme_id:
            raise ParameterError(
                f"parameters of {params.scheme!r} given to {self.scheme_id!r}")

    def normalize_identity(self, params: ParamsBundle, identity: Any) -> Any:
        return normalize_identity(identity)

    def random_message(self, params: ParamsBundle, rng: Drbg) -> Any:
        if self.message_domain == GT:
            return gt_random(params.curve, rng)
        return rng.random_bytes(params.msg_bytes)

    def check_message(self, params: ParamsBundle, message: Any) -> None:
        if self.message_domain == GT:
            if not isinstance(message, GtElement) or \
                    message.order != params.curve.r:
                raise MessageDomainError(
                    f"{self.scheme_id} encrypts elements of G_T")
            return
        if not isinstance(message, (bytes, bytearray)) or \
                len(message) != params.msg_bytes:
            raise MessageDomainError(
                f"{self.scheme_id} encrypts {params.msg_bits}-bit strings")

    def check_ciphertext(self, params: ParamsBundle,
                         ciphertext: Ciphertext) -> None:
        """
        Method verifies a ciphertext's scheme tag, part names and part kinds.
        """
        if ciphertext.scheme != self.scheme_id:
            raise MalformedCiphertextError(
                f"{ciphertext.scheme!r} ciphertext given to {self.scheme_id!r}")
        names = tuple(name for name, _ in self.ciphertext_layout)
        if ciphertext.names != names:
            raise MalformedCiphertextError(
                f"{self.scheme_id} ciphertext parts {ciphertext.names}, "
                f"expected {names}")
        for name, kind in self.ciphertext_layout:
            if not _part_fits(ciphertext.parts[name], kind, params):
                raise MalformedCiphertextError(
                    f"{self.scheme_id} ciphertext part {name!r} is not a {kind}")


def _part_fits(value: Any, kind: str, params: ParamsBundle) -> bool:
    curve = params.curve
    if kind == POINT:
        return isinstance(value, CurvePoint) and value.curve == curve \
            and not value.over_extension
    if kind == GT:
        return isinstance(value, GtElement) and value.order == curve.r
    if kind == BYTES:
        return isinstance(value, (bytes, bytearray)) and \
            len(value) == params.msg_bytes
    if kind == INT:
        return isinstance(value, int) and 0 <= value < curve.r
    return False
