"""
Class defines ForwardSecureHibe, the forward-secure HIBE built on
NovelHibe with a binary time tree of depth l (N = 2^l periods).

Every tree node word w gets a HIBE key for the identity tuple (I_1..I_j)
whose levels are the pairs (k, m), k <= |w|, m <= j, with coefficient a_m
and identity value H(w[:k], I_1..I_m). The key for period i is the bundle
{leaf key of i} + {key of w1 : w0 a prefix of i}. Keys extend either in
time (one tree level down) or in identity (one hierarchy level down), both
without the master secret.
"""
# == Standard Library imports ==
import logging
from dataclasses import dataclass, field
from typing import Any

# == Local imports ==
from arithmetic import CurveParams, CurvePoint, GtElement, pair
from utils.drbg import Drbg
from utils.errors import DelegationError, DepthError, PeriodError
from utils.hashing import hash_bytes, hash_to_int
from .novel_hibe import NovelHibe
from .scheme_base import (DEFAULT_MSG_BITS, Ciphertext, MasterSecret,
                          ParamsBundle, Seed, as_rng)

logger = logging.getLogger(__name__)

DEFAULT_PERIODS_LOG = 3
DEFAULT_ROOT_IDENTITY = ("root",)


def period_word(period: int, periods_log: int) -> str:
    return format(period, f"0{periods_log}b")


def node_value(word: str, ids: tuple[int, ...], order: int) -> int:
    """
    Function hashes a time word and an identity prefix into Z_r; stands for
    the concatenation w || I_1..I_m.
    """
    return hash_to_int("H1|fs-hibe", [word, *ids], order)


@dataclass
class FsNodeKey:
    """
    Dataclass for the HIBE key of one time-tree node.
    """
    word: str
    d0: CurvePoint
    K: CurvePoint


@dataclass
class FsKeyBundle:
    """
    Dataclass for the secret key of one period: node keys by word, plus
    g^1/l. ``time_tail`` holds (a_m / l) g for the own levels m <= j, which
    time extension needs; ``tail`` holds them for m > j, which identity
    extension consumes one level at a time.
    """
    scheme: str
    identity: tuple[int, ...]
    period: int
    periods_log: int
    nodes: dict[str, FsNodeKey] = field(default_factory=dict)
    g_inv_l: CurvePoint | None = None
    tail: list[CurvePoint] = field(default_factory=list)
    time_tail: list[CurvePoint] = field(default_factory=list)

    @property
    def level(self) -> int:
        return len(self.identity)

    def level_point(self, m: int) -> CurvePoint:
        """
        Method returns (a_m / l) g for a level m <= j.
        """
        return self.time_tail[m - 1]

    @property
    def leaf_word(self) -> str:
        return period_word(self.period, self.periods_log)

    @property
    def leaf(self) -> FsNodeKey:
        try:
            return self.nodes[self.leaf_word]
        except KeyError:
            raise PeriodError(
                f"bundle holds no key for period {self.period}; it was "
                f"consumed by an update") from None


class ForwardSecureHibe(NovelHibe):
    """
    Class for fs-HIBE. ``extract`` from the master secret yields the
    period-0 bundle; ``update`` and ``derive`` move in time and identity.
    """
    scheme_id = "fs-hibe"
    title = "fs-HIBE with our HIBE"

    def _setup(self, curve, rng, msg_bits, **options):
        periods_log = options.pop("periods_log", DEFAULT_PERIODS_LOG)
        if periods_log < 1:
            raise PeriodError(f"time tree depth must be >= 1, got {periods_log}")
        params, msk = super()._setup(curve, rng, msg_bits, **options)
        params.options["periods_log"] = periods_log
        return params, msk

    # == node extension ==

    def _fresh(self, params, rng: Drbg) -> int:
        return rng.nonzero_below(params.curve.r)

    def bundle_rng(self, bundle: FsKeyBundle, label: str) -> Drbg:
        """
        Method derives the generator of an unseeded update or derive from
        the bundle itself, so the same bundle always extends the same way.
        """
        parts = [label, bundle.period, *bundle.identity]
        for word in sorted(bundle.nodes):
            node = bundle.nodes[word]
            parts += [word, node.d0, node.K]
        return Drbg(hash_bytes("fs-hibe|rng", parts, 32))

    def _add_level(self, params, bundle, node, value, m, rng):
        # one more (k, m) level: d0 += value g^1/l + s (a_m / l) g
        s = self._fresh(params, rng)
        d0 = node.d0 + value * bundle.g_inv_l + s * bundle.level_point(m)
        K = node.K + (s - 1) * params[f"ga{m}"]
        return d0, K

    def extend_time(self, params: ParamsBundle, bundle: FsKeyBundle,
                    node: FsNodeKey, bit: str, rng: Drbg) -> FsNodeKey:
        """
        Method derives the key of node word + bit from the key of word.
        """
        word = node.word + bit
        child = FsNodeKey(word, node.d0, node.K)
        for m in range(1, bundle.level + 1):
            value = node_value(word, bundle.identity[:m], params.curve.r)
            child.d0, child.K = self._add_level(
                params, bundle, child, value, m, rng)
        return child

    def extend_identity(self, params: ParamsBundle, bundle: FsKeyBundle,
                        node: FsNodeKey, ids: tuple[int, ...],
                        rng: Drbg) -> FsNodeKey:
        """
        Method adds hierarchy level len(ids) to a node key of the parent.
        """
        child = FsNodeKey(node.word, node.d0, node.K)
        for k in range(1, len(node.word) + 1):
            value = node_value(node.word[:k], ids, params.curve.r)
            child.d0, child.K = self._add_level(
                params, bundle, child, value, len(ids), rng)
        return child

    def _expand(self, params, bundle, start: FsNodeKey, target: str,
                rng: Drbg) -> dict[str, FsNodeKey]:
        # walk from start down to the target leaf, keeping right siblings
        nodes = {}
        current = start
        for bit in target[len(start.word):]:
            if bit == "0":
                right = self.extend_time(params, bundle, current, "1", rng)
                nodes[right.word] = right
            current = self.extend_time(params, bundle, current, bit, rng)
        nodes[current.word] = current
        return nodes

    # == life cycle ==

    def _extract(self, params, msk, ids, rng):
        if not isinstance(msk, MasterSecret):
            raise DelegationError("fs-hibe keys below the root come from "
                                  "derive(), not extract()")
        zr, g = params.zr, params["g"]
        l_inv = zr(msk["l"]).inverse()
        points = [int(zr(msk[f"a{m}"]) * l_inv) * g
                  for m in range(1, params.options["depth"] + 1)]
        bundle = FsKeyBundle(
            self.scheme_id, ids, 0, params.options["periods_log"],
            g_inv_l=int(l_inv) * g, tail=points[len(ids):],
            time_tail=points[:len(ids)])
        root = FsNodeKey("", g.curve.infinity, g.curve.infinity)
        bundle.nodes = self._expand(params, bundle, root, bundle.leaf_word,
                                    rng)
        return bundle

    def update(self, params: ParamsBundle, bundle: FsKeyBundle,
               seed: Seed | None = None) -> FsKeyBundle:
        """
        Method returns the bundle of the next period and empties the input
        bundle, whose keys must not outlive the update.
        :raises PeriodError: Final period has no successor.
        """
        periods = 1 << bundle.periods_log
        if bundle.period >= periods - 1:
            raise PeriodError(f"period {bundle.period} is the last of {periods}")
        rng = as_rng(seed) if seed is not None else \
            self.bundle_rng(bundle, "update")
        old_leaf = bundle.leaf.word
        successor = FsKeyBundle(self.scheme_id, bundle.identity,
                                bundle.period + 1, bundle.periods_log,
                                g_inv_l=bundle.g_inv_l, tail=bundle.tail,
                                time_tail=bundle.time_tail)
        target = successor.leaf_word
        start = max((w for w in bundle.nodes
                     if w != old_leaf and target.startswith(w)), key=len)
        nodes = {w: node for w, node in bundle.nodes.items()
                 if w not in (old_leaf, start)}
        nodes.update(self._expand(params, successor, bundle.nodes[start],
                                  target, rng))
        successor.nodes = nodes
        bundle.nodes.clear()
        logger.debug("fs-hibe: period %d -> %d, %d node keys",
                     bundle.period, successor.period, len(nodes))
        return successor

    def derive(self, params: ParamsBundle, parent: FsKeyBundle,
               period: int, identity: Any,
               seed: Seed | None = None) -> FsKeyBundle:
        """
        Method derives the bundle of a child identity for the parent's
        current period from the parent bundle alone.
        """
        if period != parent.period:
            raise PeriodError(f"parent bundle is for period {parent.period}, "
                              f"not {period}")
        ids = self.normalize_identity(params, identity)
        if len(ids) != parent.level + 1 or ids[:parent.level] != parent.identity:
            raise DelegationError(
                f"bundle for {parent.identity} cannot derive {ids}")
        if not parent.tail:
            raise DelegationError("parent bundle has no delegation tail left")
        rng = as_rng(seed) if seed is not None else \
            self.bundle_rng(parent, f"derive|{ids[-1]}")
        child = FsKeyBundle(self.scheme_id, ids, parent.period,
                            parent.periods_log, g_inv_l=parent.g_inv_l,
                            tail=parent.tail[1:],
                            time_tail=[*parent.time_tail, parent.tail[0]])
        child.nodes = {w: self.extend_identity(params, child, node, ids, rng)
                       for w, node in parent.nodes.items()}
        return child

    def mask_for(self, params: ParamsBundle, word: str,
                 ids: tuple[int, ...]) -> GtElement:
        """
        Method computes prod_{k <= |word|, m <= j} x^(H(word[:k], I_1..I_m)) y_m.
        """
        order = params.curve.r
        total = sum(node_value(word[:k], ids[:m], order)
                    for k in range(1, len(word) + 1)
                    for m in range(1, len(ids) + 1)) % order
        mask = params["x"] ** total
        for m in range(1, len(ids) + 1):
            mask = mask * params[f"y{m}"] ** len(word)
        return mask

    def _encrypt(self, params, ids, message, rng, period=0):
        periods = 1 << params.options["periods_log"]
        if not 0 <= period < periods:
            raise PeriodError(f"period {period} outside [0, {periods - 1}]")
        word = period_word(period, params.options["periods_log"])
        s = rng.nonzero_below(params.curve.r)
        parts = {"u1": s * params["Ppub1"], "u2": s * params["g"],
                 "c": message * self.mask_for(params, word, ids) ** s}
        return Ciphertext(self.scheme_id, parts,
                          {"depth": len(ids), "period": period})

    def _decrypt(self, params, bundle, ciphertext):
        depth = ciphertext.header.get("depth")
        if depth != bundle.level:
            raise DepthError(f"ciphertext for depth {depth} given to a "
                             f"level-{bundle.level} bundle")
        period = ciphertext.header.get("period")
        if period != bundle.period:
            logger.warning("fs-hibe: ciphertext for period %s decrypted with "
                           "the period-%d key", period, bundle.period)
        leaf = bundle.leaf
        return ciphertext["c"] * pair(ciphertext["u2"], leaf.K) / \
            pair(ciphertext["u1"], leaf.d0)

    def key_is_valid(self, params, bundle):
        # e(P_pub1, d0) = mask(word) e(g, K) for every node
        return all(
            pair(params["Ppub1"], node.d0) ==
            self.mask_for(params, word, bundle.identity) *
            pair(params["g"], node.K)
            for word, node in bundle.nodes.items())


def fs_setup(profile: CurveParams, v: int, periods_log: int, seed: Seed,
             identity: Any = DEFAULT_ROOT_IDENTITY,
             msg_bits: int = DEFAULT_MSG_BITS) -> tuple[ParamsBundle,
                                                        FsKeyBundle]:
    """
    Function sets up fs-HIBE and returns the period-0 bundle of the
    top-level identity; the master secret is discarded.
    :param profile: Curve profile.
    :param v: Hierarchy depth.
    :param periods_log: l, for N = 2^l periods.
    :param seed: Seed of setup and root key randomness.
    :param identity: Identity tuple of the root bundle.
    :return: (params, FsKeyBundle at period 0).
    """
    scheme = ForwardSecureHibe()
    rng = as_rng(seed)
    params, msk = scheme.setup(profile, rng, msg_bits, depth=v,
                               periods_log=periods_log)
    return params, scheme.extract(params, msk, identity, rng)


def fs_update(bundle: FsKeyBundle, params: ParamsBundle,
              seed: Seed | None = None) -> FsKeyBundle:
    return ForwardSecureHibe().update(params, bundle, seed)


def fs_derive(params: ParamsBundle, parent: FsKeyBundle, period: int,
              identity: Any, seed: Seed | None = None) -> FsKeyBundle:
    return ForwardSecureHibe().derive(params, parent, period, identity, seed)


def fs_encrypt(params: ParamsBundle, period: int, identity: Any,
               m: GtElement, seed: Seed) -> Ciphertext:
    return ForwardSecureHibe().encrypt(params, identity, m, seed,
                                       period=period)


def fs_decrypt(params: ParamsBundle, bundle: FsKeyBundle,
               ciphertext: Ciphertext) -> GtElement:
    return ForwardSecureHibe().decrypt(params, bundle, ciphertext)
